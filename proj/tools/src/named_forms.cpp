#include "named_forms.hpp"

#include "mfdr/cohomology.hpp"
#include "mfdr/eisenstein.hpp"
#include "mfdr/errors.hpp"
#include "mfdr/io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <regex>
#include <sstream>

namespace mfdr::cli {

namespace {

const std::regex kEisenstein{R"(([GE])(\d+))"};
const std::regex kBasis{R"(f_(-?\d+)(?:@(\d+))?)"};

std::optional<OXElement> named(const std::string& name, int weight = 0)
{
    if (name == "u")
        return OXElement::u();
    if (name == "v")
        return OXElement::v();
    if (name == "delta")
        return OXElement::delta();
    if (name == "j")
        return OXElement::j_invariant();
    std::smatch m;
    if (std::regex_match(name, m, kEisenstein)) {
        int k = std::stoi(m[2]);
        if (k < 4 || k % 2 != 0)
            throw DomainError("named form " + name + ": weight must be even and >= 4");
        int trunc = k / 12 + 12;
        return from_series(eisenstein(k, trunc, m[1] == "E"), k);
    }
    if (std::regex_match(name, m, kBasis)) {
        int idx = std::stoi(m[1]);
        if (!m[2].matched && weight == 0)
            throw DomainError("named form " + name + " needs a weight: write f_<m>@<k> or pass --weight");
        int k = m[2].matched ? std::stoi(m[2]) : weight;
        int ell = dims(k).ell;
        if (idx < -ell || idx > ell)
            throw DomainError("named form " + name + ": index outside [-" + std::to_string(ell) + ", "
                              + std::to_string(ell) + "]");
        auto basis = drbasis(k, ell + 1);
        return *basis[static_cast<size_t>(idx + ell)].alg_rep;
    }
    return std::nullopt;
}

bool looks_like_json(const std::string& s)
{
    auto p = s.find_first_not_of(" \t\r\n");
    return p != std::string::npos && s[p] == '{';
}

bool is_series_payload(const std::string& s)
{
    if (looks_like_json(s))
        return Json::parse(s).contains("coeffs");
    return s.find("valuation=") != std::string::npos;
}

} // namespace

std::string read_payload(const std::string& path)
{
    if (path == "-")
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path);
    if (!in)
        throw DomainError("unknown form '" + path + "' (not a named form and not a readable file)");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

OXElement resolve_form(const std::string& name)
{
    if (auto f = named(name))
        return *f;
    std::string text = read_payload(name);
    if (is_series_payload(text))
        throw DomainError("'" + name + "' holds a q-series; pass --weight to certify it");
    return looks_like_json(text) ? ox_from_json(Json::parse(text)) : ox_from_text(text);
}

OXElement resolve_form(const std::string& name, int weight)
{
    if (auto f = named(name, weight))
        return *f;
    std::string text = read_payload(name);
    if (is_series_payload(text)) {
        QSeries s = looks_like_json(text) ? series_from_json(Json::parse(text)) : series_from_text(text);
        return from_series(s, weight);
    }
    return looks_like_json(text) ? ox_from_json(Json::parse(text)) : ox_from_text(text);
}

QSeries resolve_series(const std::string& name, int trunc, int weight)
{
    if (auto f = named(name, weight))
        return expand(*f, trunc);
    std::string text = read_payload(name);
    if (is_series_payload(text)) {
        QSeries s = looks_like_json(text) ? series_from_json(Json::parse(text)) : series_from_text(text);
        return s.trunc() > trunc ? s.truncated(trunc) : s;
    }
    OXElement e = looks_like_json(text) ? ox_from_json(Json::parse(text)) : ox_from_text(text);
    return expand(e, trunc);
}

} // namespace mfdr::cli
