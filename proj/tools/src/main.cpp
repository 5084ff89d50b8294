#include "named_forms.hpp"

#include "acceptance.hpp"

#include "mfdr/cohomology.hpp"
#include "mfdr/connection.hpp"
#include "mfdr/errors.hpp"
#include "mfdr/io.hpp"
#include "mfdr/pairing.hpp"
#include "mfdr/periods.hpp"

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include <cstdint>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using namespace mfdr;
using cli::resolve_form;
using cli::resolve_series;

constexpr int kExitDomain = 2;
constexpr int kExitWindow = 3;
constexpr int kExitUsage = 64;

struct Config {
    int order = 10;
    int prec = 30;
    std::string format = "text";
    std::uint64_t seed = acceptance::kDefaultSeed;
    bool strict = false;

    bool json() const { return format == "json"; }
};

struct Args {
    std::string form;
    std::string other;
    int weight = 0;
    int p = 2;
    std::string word = "S";
    std::string gamma;
    std::string z0 = "2i";
};

void budget(const std::string& command, const Config& cfg, bool uses_prec)
{
    std::cerr << "budget: command=" << command << " order=" << cfg.order;
    if (uses_prec)
        std::cerr << " prec=" << cfg.prec;
    std::cerr << "\n";
}

void require_order(const Config& cfg, int need, const std::string& why)
{
    if (cfg.order < need)
        throw WindowError("--order " + std::to_string(cfg.order) + " is below " + std::to_string(need) + " (" + why
                          + ")");
}

void require_prec(const Config& cfg)
{
    if (cfg.prec < 1)
        throw WindowError("--prec must be positive");
}

OXElement form_of_weight(const std::string& name, int weight)
{
    OXElement f = weight != 0 ? resolve_form(name, weight) : resolve_form(name);
    if (weight != 0 && f.weight() != weight)
        throw GradingError("form " + name + " has weight " + std::to_string(f.weight()) + ", expected "
                           + std::to_string(weight));
    return f;
}

void print_class(const CohClass& c, const Config& cfg)
{
    if (cfg.json())
        std::cout << class_to_json(c).dump(2) << "\n";
    else
        std::cout << class_to_text(c);
}

SL2Mat parse_word(const std::string& word)
{
    SL2Mat g = SL2Mat::identity();
    for (char ch : word) {
        switch (ch) {
        case 'S':
            g = g * SL2Mat::S();
            break;
        case 'T':
            g = g * SL2Mat::T();
            break;
        case 't':
            g = g * SL2Mat::T_inv();
            break;
        case 's':
            g = g * SL2Mat::S().inverse();
            break;
        case 'I':
            break;
        default:
            throw DomainError(std::string("word letter '") + ch + "' is not one of S, s, T, t, I");
        }
    }
    return g;
}

SL2Mat parse_gamma(const std::string& text)
{
    std::vector<long> e;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            size_t used = 0;
            e.push_back(std::stol(item, &used));
            if (used != item.size())
                throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw DomainError("--gamma entry '" + item + "' is not an integer");
        }
    }
    if (e.size() != 4)
        throw DomainError("--gamma expects four comma-separated integers a,b,c,d");
    return SL2Mat::make(e[0], e[1], e[2], e[3]);
}

int cmd_expand(const Config& cfg, const Args& a)
{
    require_order(cfg, 1, "empty window");
    budget("expand", cfg, false);
    QSeries s = resolve_series(a.form, cfg.order, a.weight);
    if (cfg.json())
        std::cout << series_to_json(s).dump(2) << "\n";
    else
        std::cout << series_to_text(s);
    return 0;
}

int cmd_membership(const Config& cfg, const Args& a)
{
    require_order(cfg, 1, "empty window");
    budget("membership", cfg, false);
    QSeries s = resolve_series(a.form, cfg.order, a.weight);
    bool member = true;
    OXElement e;
    std::string reason;
    try {
        e = from_series(s, a.weight);
    } catch (const NotInRingError& err) {
        member = false;
        reason = err.what();
    }
    if (cfg.json()) {
        Json j{{"member", member}};
        if (member)
            j["element"] = ox_to_json(e);
        else
            j["reason"] = reason;
        std::cout << j.dump(2) << "\n";
    } else if (member) {
        std::cout << "member=true\n" << ox_to_text(e) << "\n";
    } else {
        std::cout << "member=false\nreason: " << reason << "\n";
    }
    return 0;
}

int cmd_basis(const Config& cfg, const Args& a)
{
    int ell = dims(a.weight).ell;
    require_order(cfg, ell + 1, "canonical window");
    budget("basis", cfg, false);
    auto basis = drbasis(a.weight, cfg.order);
    if (cfg.json()) {
        Json arr = Json::array();
        for (const auto& c : basis)
            arr.push_back(class_to_json(c));
        std::cout << Json{{"weight", a.weight}, {"ell", ell}, {"basis", arr}}.dump(2) << "\n";
        return 0;
    }
    for (size_t i = 0; i < basis.size(); ++i) {
        std::cout << "f_" << static_cast<int>(i) - ell << "\n";
        std::cout << "  " << ox_to_text(*basis[i].alg_rep) << "\n";
        std::cout << series_to_text(basis[i].rep);
    }
    return 0;
}

int cmd_reduce(const Config& cfg, const Args& a)
{
    OXElement f = form_of_weight(a.form, a.weight);
    require_order(cfg, dims(f.weight()).ell + 1, "canonical window");
    budget("reduce", cfg, false);
    print_class(canonical_rep(f, cfg.order), cfg);
    return 0;
}

int cmd_hecke(const Config& cfg, const Args& a)
{
    if (!is_prime(a.p))
        throw DomainError("--p must be prime, got " + std::to_string(a.p));
    OXElement f = form_of_weight(a.form, a.weight);
    require_order(cfg, dims(f.weight()).ell + 1, "canonical window");
    budget("hecke", cfg, false);
    print_class(hecke(a.p, canonical_rep(f, cfg.order), cfg.order), cfg);
    return 0;
}

int cmd_pair(const Config& cfg, const Args& a)
{
    OXElement f = form_of_weight(a.form, a.weight);
    OXElement g = form_of_weight(a.other, a.weight);
    if (f.weight() != g.weight())
        throw GradingError("pair: forms have different weights");
    int ell = dims(f.weight()).ell;
    require_order(cfg, ell + 1, "canonical window");
    budget("pair", cfg, false);
    CohClass cf = canonical_rep(f, cfg.order), cg = canonical_rep(g, cfg.order);
    PairingValue v = bracket(cf.rep, cg.rep, f.weight(), cfg.strict);
    if (cfg.json())
        std::cout << pairing_to_json(v).dump(2) << "\n";
    else
        std::cout << pairing_to_text(v);
    return 0;
}

int cmd_phi(const Config& cfg, const Args& a)
{
    OXElement f = form_of_weight(a.form, a.weight);
    require_order(cfg, 1, "empty window");
    budget("phi", cfg, false);
    AlgebraicSection s = phi(f);
    OXElement r = tail(f);
    QSeries rs = expand(r, cfg.order);
    if (cfg.json()) {
        std::cout << Json{{"section", section_to_json(s)}, {"tail", ox_to_json(r)}, {"tail_series", series_to_json(rs)}}
                         .dump(2)
                  << "\n";
        return 0;
    }
    std::cout << "degree=" << s.degree() << "\n";
    for (int j = s.degree(); j >= 0; --j)
        std::cout << "S^" << j << " T^" << s.degree() - j << ": " << ox_to_text(s.at(j)) << "\n";
    std::cout << "tail: " << ox_to_text(r) << "\n" << series_to_text(rs);
    return 0;
}

int cmd_cocycle(const Config& cfg, const Args& a)
{
    require_prec(cfg);
    OXElement f = form_of_weight(a.form, a.weight);
    SL2Mat g = a.gamma.empty() ? parse_word(a.word) : parse_gamma(a.gamma);
    budget("cocycle", cfg, true);
    BigComplex z0 = parse_complex(a.z0, digits_to_bits(cfg.prec + QuadratureOptions{}.guard_digits));
    ComplexPoly c = eichler_cocycle(f, g, z0, cfg.prec);
    if (cfg.json())
        std::cout << poly_to_json(c, cfg.prec).dump(2) << "\n";
    else
        std::cout << poly_to_text(c, cfg.prec);
    return 0;
}

int cmd_period_poly(const Config& cfg, const Args& a)
{
    require_prec(cfg);
    OXElement f = form_of_weight(a.form, a.weight);
    budget("period-poly", cfg, true);
    PeriodPolynomial p = period_polynomial(f, cfg.prec);
    if (cfg.json()) {
        std::cout << Json{{"full", poly_to_json(p.full, cfg.prec)},
                          {"even", poly_to_json(p.even, cfg.prec)},
                          {"odd", poly_to_json(p.odd, cfg.prec)}}
                         .dump(2)
                  << "\n";
        return 0;
    }
    std::cout << "full\n" << poly_to_text(p.full, cfg.prec);
    std::cout << "even (normalized)\n" << poly_to_text(p.even, cfg.prec);
    std::cout << "odd (normalized)\n" << poly_to_text(p.odd, cfg.prec);
    return 0;
}

int cmd_selftest(const Config& cfg)
{
    budget("selftest", cfg, false);
    int failed = 0;
    Json arr = Json::array();
    for (int id = 1; id <= acceptance::kCriteria; ++id) {
        auto r = acceptance::run_one(id, cfg.seed);
        failed += r.passed ? 0 : 1;
        if (cfg.json())
            arr.push_back(Json{{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
        else
            std::cout << acceptance::format_line(r) << std::endl;
    }
    if (cfg.json())
        std::cout << Json{{"seed", cfg.seed}, {"results", arr}, {"failed", failed}}.dump(2) << "\n";
    else
        std::cout << acceptance::kCriteria - failed << "/" << acceptance::kCriteria << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"mfdr: de Rham cohomology of modular forms in exact arithmetic"};
    app.fallthrough();
    Config cfg;
    Args args;

    app.add_option("--order", cfg.order, "series window (exponents below N)")->envname("MFDR_ORDER");
    app.add_option("--prec", cfg.prec, "decimal digits for numerical commands")->envname("MFDR_PREC");
    app.add_option("--format", cfg.format, "output format")
        ->envname("MFDR_FORMAT")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", cfg.seed, "seed for randomized checks")->envname("MFDR_SEED");
    app.add_flag("--strict", cfg.strict, "reject pairing inputs with a constant term")->envname("MFDR_STRICT");

    std::function<int()> action;
    auto sub = [&](const char* name, const char* help, std::function<int()> run) {
        CLI::App* s = app.add_subcommand(name, help);
        s->callback([&action, run] { action = run; });
        return s;
    };
    const char* form_help = "u, v, delta, j, G<k>, E<k>, f_<m>@<k>, a file, or - for stdin";

    auto* expand_cmd = sub("expand", "q-expansion of a form", [&] { return cmd_expand(cfg, args); });
    expand_cmd->add_option("--poly,--f", args.form, form_help)->required();

    auto* member_cmd = sub("membership", "certify a q-series as an element of O(X)", [&] { return cmd_membership(cfg, args); });
    member_cmd->add_option("--series,--f", args.form, form_help)->required();
    member_cmd->add_option("--weight", args.weight)->required();

    auto* basis_cmd = sub("basis", "canonical basis f_m of the cohomology", [&] { return cmd_basis(cfg, args); });
    basis_cmd->add_option("--weight", args.weight)->required();

    auto* reduce_cmd = sub("reduce", "canonical representative of a class", [&] { return cmd_reduce(cfg, args); });
    reduce_cmd->add_option("--f,--form", args.form, form_help)->required();
    reduce_cmd->add_option("--weight", args.weight, "required for series payloads");

    auto* hecke_cmd = sub("hecke", "Hecke operator T_p on a class", [&] { return cmd_hecke(cfg, args); });
    hecke_cmd->add_option("--p", args.p)->required();
    hecke_cmd->add_option("--f,--form", args.form, form_help)->required();
    hecke_cmd->add_option("--weight", args.weight, "required for series payloads");

    auto* pair_cmd = sub("pair", "residue pairing of two classes", [&] { return cmd_pair(cfg, args); });
    pair_cmd->add_option("--f,--form", args.form, form_help)->required();
    pair_cmd->add_option("--g", args.other, form_help)->required();
    pair_cmd->add_option("--weight", args.weight, "required for series payloads");

    auto* phi_cmd = sub("phi", "the section phi(f) and its tail", [&] { return cmd_phi(cfg, args); });
    phi_cmd->add_option("--f,--form", args.form, form_help)->required();
    phi_cmd->add_option("--weight", args.weight, "required for series payloads");

    auto* cocycle_cmd = sub("cocycle", "Eichler cocycle c(g) at a basepoint", [&] { return cmd_cocycle(cfg, args); });
    cocycle_cmd->add_option("--f,--form", args.form, form_help)->required();
    cocycle_cmd->add_option("--word", args.word, "word in S, s = S^-1, T, t = T^-1");
    cocycle_cmd->add_option("--gamma", args.gamma, "matrix entries a,b,c,d (overrides --word)");
    cocycle_cmd->add_option("--z0", args.z0, "basepoint, e.g. 2i or 0.5+1.5i");
    cocycle_cmd->add_option("--weight", args.weight, "required for series payloads");

    auto* period_cmd = sub("period-poly", "period polynomial of a cusp form", [&] { return cmd_period_poly(cfg, args); });
    period_cmd->add_option("--f,--form", args.form, form_help)->required();
    period_cmd->add_option("--weight", args.weight, "required for series payloads");

    sub("selftest", "run the acceptance checks", [&] { return cmd_selftest(cfg); });

    app.require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        std::cerr << app.help();
        return kExitUsage;
    }

    try {
        return action();
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const WindowError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitWindow;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: malformed JSON payload: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
