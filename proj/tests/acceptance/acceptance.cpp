#include "acceptance.hpp"

#include "random_forms.hpp"

#include "mfdr/cohomology.hpp"
#include "mfdr/connection.hpp"
#include "mfdr/eisenstein.hpp"
#include "mfdr/errors.hpp"
#include "mfdr/oxring.hpp"
#include "mfdr/pairing.hpp"
#include "mfdr/periods.hpp"
#include "mfdr/zmodel.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

namespace mfdr::acceptance {

namespace {

using sample::Rng;

struct Check {
    bool ok = true;
    std::ostringstream log;

    void expect(bool cond, const std::string& what)
    {
        if (!cond) {
            if (ok)
                log << what;
            else
                log << "; " << what;
            ok = false;
        }
    }
};

std::vector<Rational> rationals(std::initializer_list<const char*> xs)
{
    std::vector<Rational> out;
    for (auto x : xs)
        out.push_back(parse_rational(x));
    return out;
}

bool coeffs_equal(const QSeries& s, int from, const std::vector<Rational>& want)
{
    for (size_t i = 0; i < want.size(); ++i)
        if (s.coeff(from + static_cast<int>(i)) != want[i])
            return false;
    return true;
}

void exact_expansions(Check& c, Rng&)
{
    c.expect(coeffs_equal(expand(OXElement::u(), 5), 0, rationals({"1/12", "20", "180", "560", "1460"})), "u");
    c.expect(coeffs_equal(expand(OXElement::v(), 5), 0, rationals({"-1/216", "7/3", "77", "1708/3", "7399/3"})), "v");
    c.expect(coeffs_equal(expand(OXElement::delta_pow(-1), 5), -1,
                          rationals({"1", "24", "324", "3200", "25650", "176256"})),
             "1/Delta");
}

void eisenstein_constants(Check& c, Rng&)
{
    QSeries g = eisenstein(12, 4, false);
    c.expect(coeffs_equal(g, 0, rationals({"691/65520", "1", "2049", "177148"})), "G_12 coefficients");
    c.expect(bernoulli(12) == frac(-691, 2730), "B_12");
}

void ramanujan(Check& c, Rng&)
{
    const int n = 50;
    QSeries e2 = eisenstein(2, n, true), e4 = eisenstein(4, n, true), e6 = eisenstein(6, n, true);
    c.expect(bol(e2, 1) == (e2 * e2 - e4) * frac(1, 12), "D E_2");
    c.expect(bol(e4, 1) == (e2 * e4 - e6) * frac(1, 3), "D E_4");
    c.expect(bol(e6, 1) == (e2 * e6 - e4 * e4) * frac(1, 2), "D E_6");
    QSeries lhs = Rational(3) * (e6 * bol(e4, 1)) - Rational(2) * (e4 * bol(e6, 1));
    c.expect(lhs == Rational(1728) * delta_q(n, DeltaRoute::product), "3 E_6 D E_4 - 2 E_4 D E_6");
}

void dq_over_q(Check& c, Rng&)
{
    const int n = 50;
    QSeries u = expand(OXElement::u(), n), v = expand(OXElement::v(), n);
    QSeries lhs = Rational(2) * (u * bol(v, 1)) - Rational(3) * (v * bol(u, 1));
    c.expect(lhs == frac(2, 3) * delta_q(n, DeltaRoute::product), "2u Dv - 3v Du");
}

void heads_and_tails(Check& c, Rng& rng)
{
    const int window = 40;
    for (int n = 0; n <= 10; n += 2) {
        for (int i = 0; i < 5; ++i) {
            OXElement f = sample::random_ox(rng, -n, 1, 2);
            QSeries lhs = Rational(factorial(n)) * heads_and_tails_tail(f, window);
            QSeries rhs = bol(expand(f, window), static_cast<unsigned>(n + 1));
            c.expect(lhs == rhs, "n=" + std::to_string(n) + " sample " + std::to_string(i));
        }
    }
}

void basis_weight_12(Check& c, Rng&)
{
    auto d = dims(12);
    c.expect(d.dim_mk == 2 && d.ell == 1 && d.dim_quotient == 3, "dims(12)");
    c.expect(d.dim_quotient == 1 + 2 * (d.dim_mk - 1), "3 = 1 + 2 dim S_12");
    auto basis = drbasis(12, 5);
    c.expect(basis.size() == 3, "basis size");
    if (basis.size() != 3)
        return;
    c.expect(coeffs_equal(basis[0].rep, -1, rationals({"1", "0", "0", "47709536", "39862705122", "7552626810624"})),
             "f_-1 coefficients");
    c.expect(basis[2].rep == delta_q(5), "f_1 = Delta");
    c.expect(coeffs_equal(basis[1].rep, -1, rationals({"0", "1", "0"})), "f_0 interlock");
    // second route: q^-1 + O(q^2) assembled from G_24/Delta, G_12, Delta
    const int t = 20;
    QSeries g24 = eisenstein(24, t + 1, false) * expand(OXElement::delta_pow(-1), t);
    g24 = g24 * (1 / g24.coeff(-1));
    QSeries g12 = eisenstein(12, t, false), del = delta_q(t);
    QSeries s = g24 - (g24.coeff(0) / g12.coeff(0)) * g12;
    s = s - s.coeff(1) * del;
    c.expect(canonical_rep(s, 12, 5).rep == basis[0].rep, "canonical_rep(q^-1 + O(q^2)) = f_-1");
}

void round_trips(Check& c, Rng& rng)
{
    for (int n = 2; n <= 10; ++n) {
        if (n % 2 != 0) {
            // odd-degree invariant sections vanish: every coefficient has odd weight
            AlgebraicSection s = sample::random_section(rng, n, 0, 1);
            c.expect(s.is_zero() && reduce_to_tail(nabla_omega(s)).tail.is_zero(), "odd n=" + std::to_string(n));
            continue;
        }
        int ell = dims(n + 2).ell;
        for (int i = 0; i < 10; ++i) {
            AlgebraicSection s = sample::random_section(rng, n, 0, 1);
            TailReduction r = reduce_to_tail(nabla_omega(s));
            CohClass cls = canonical_rep(r.tail, ell + 1);
            bool zero = true;
            for (const auto& x : cls.coords())
                zero = zero && x == 0;
            c.expect(zero, "exact form not killed, n=" + std::to_string(n));
            // e - nabla(primitive) is the reduced form
            AlgebraicSection rest = nabla_omega(s) - nabla_omega(r.primitive);
            c.expect(rest.at(0) == r.tail, "audit channel, n=" + std::to_string(n));
        }
        for (int i = 0; i < 3; ++i) {
            OXElement f = sample::random_ox(rng, n + 2, 0, 2);
            AlgebraicSection w = AlgebraicSection::zero(n, 2);
            w.set(0, f);
            TailReduction r = reduce_to_tail(w);
            c.expect(r.tail == f && r.primitive.is_zero(), "identity on f omega T^n, n=" + std::to_string(n));
        }
    }
}

std::vector<QSeries> random_cuspidal(Rng& rng, const std::vector<CohClass>& basis, int count)
{
    std::vector<QSeries> out;
    int ell = basis.front().ell;
    for (int i = 0; i < count; ++i) {
        QSeries s = QSeries::zero(basis.front().rep.trunc());
        for (int m = -ell; m <= ell; ++m)
            if (m != 0)
                s += sample::random_rational(rng) * basis[static_cast<size_t>(m + ell)].rep;
        out.push_back(s);
    }
    return out;
}

void pairing(Check& c, Rng& rng)
{
    auto basis = drbasis(12, 10);
    QSeries delta = delta_q(10);
    c.expect(bracket(delta, basis[0].rep, 12).value == 1, "{Delta, f_-1} = 1");
    QSeries g12 = eisenstein(12, 10, false);
    c.expect(bracket(g12, basis[0].rep, 12, false).value == 1, "{G_12, f_-1} = 1 (non-strict)");
    int pairs = 0;
    for (int k : {12, 16}) {
        const int t = 30;
        auto b = drbasis(k, t);
        auto cusp = random_cuspidal(rng, b, 10);
        for (int i = 0; i < 5; ++i, ++pairs) {
            const QSeries& f = cusp[static_cast<size_t>(2 * i)];
            const QSeries& g = cusp[static_cast<size_t>(2 * i + 1)];
            c.expect(bracket(f, g, k).value == -bracket(g, f, k).value, "antisymmetry k=" + std::to_string(k));
        }
        for (int i = 0; i < 5; ++i, ++pairs) {
            OXElement h = sample::random_ox(rng, 2 - k, 1, 2);
            QSeries ex = bol(expand(h, t), static_cast<unsigned>(k - 1));
            const QSeries& g = cusp[static_cast<size_t>(i)];
            c.expect(bracket(ex, g, k).value == 0, "{D h, g} = 0, k=" + std::to_string(k));
            c.expect(bracket(g, ex, k).value == 0, "{g, D h} = 0, k=" + std::to_string(k));
        }
    }
    c.expect(pairs == 20, "pair count");
}

CohClass scaled(const CohClass& x, const Rational& s)
{
    CohClass y = x;
    y.rep = s * x.rep;
    if (x.alg_rep)
        y.alg_rep = s * *x.alg_rep;
    return y;
}

void hecke_checks(Check& c, Rng& rng)
{
    auto basis = drbasis(12, 8);
    const CohClass& fm1 = basis[0];
    const CohClass& del = basis[2];
    for (int p : {2, 3}) {
        Rational tau(ramanujan_tau(p));
        c.expect(hecke(p, del, 8).same_class(scaled(del, tau)), "T_" + std::to_string(p) + " Delta");
        c.expect(hecke(p, fm1, 8).same_class(scaled(fm1, tau)), "T_" + std::to_string(p) + " f_-1");
    }
    c.expect(ramanujan_tau(2) == -24 && ramanujan_tau(3) == 252, "tau(2), tau(3)");
    int pairs = 0;
    for (int k : {12, 16}) {
        auto b = drbasis(k, 8);
        int ell = b.front().ell;
        for (int p : {2, 3}) {
            for (int i = 0; i < (k == 12 ? 3 : 2); ++i, ++pairs) {
                OXElement f = OXElement::zero(k), g = OXElement::zero(k);
                for (int m = -ell; m <= ell; ++m) {
                    if (m == 0)
                        continue;
                    f += sample::random_rational(rng) * *b[static_cast<size_t>(m + ell)].alg_rep;
                    g += sample::random_rational(rng) * *b[static_cast<size_t>(m + ell)].alg_rep;
                }
                CohClass cf = canonical_rep(f, 8), cg = canonical_rep(g, 8);
                Rational lhs = pair_classes(hecke(p, cf, 8), cg).value;
                Rational rhs = pair_classes(cf, hecke(p, cg, 8)).value;
                c.expect(lhs == rhs, "self-adjoint k=" + std::to_string(k) + " p=" + std::to_string(p));
            }
        }
    }
    c.expect(pairs == 10, "pair count");
}

void residues(Check& c, Rng& rng)
{
    OXElement g12 = from_series(eisenstein(12, 20, false), 12);
    AlgebraicSection w = AlgebraicSection::zero(10, 2);
    w.set(0, g12);
    c.expect(residue(w) == frac(691, 65520), "Res omega_G12");
    w.set(0, OXElement::delta());
    c.expect(residue(w) == 0, "Res omega_Delta");
    for (int i = 0; i < 10; ++i) {
        int n = 2 + 2 * (i % 5);
        AlgebraicSection s = sample::random_section(rng, n, 0, 1);
        c.expect(residue(nabla_omega(s)) == 0, "Res nabla (ST), n=" + std::to_string(n));
        c.expect(residue(nabla_at(gauge_to_at(s, 30))) == 0, "Res nabla (AT), n=" + std::to_string(n));
    }
}

void z_model(Check& c, Rng& rng)
{
    for (int m : {0, 4, 6, 8, 10, 14}) {
        for (int i = 0; i < 4; ++i) {
            OXElement e = sample::random_ox(rng, m, 0, 2);
            c.expect(lift_from_Z(restrict_to_Z(e), m) == e, "lift o restrict, m=" + std::to_string(m));
            ZElement z = sample::random_z(rng, m);
            c.expect(restrict_to_Z(lift_from_Z(z, m)) == z, "restrict o lift, m=" + std::to_string(m));
            for (int k = -2; k <= 2; ++k) {
                OXElement shifted = lift_from_Z(z, m + 12 * k);
                c.expect(shifted == lift_from_Z(z, m) * OXElement::delta_pow(k),
                         "Delta^k shift, m=" + std::to_string(m));
                c.expect(restrict_to_Z(e * OXElement::delta_pow(k)) == restrict_to_Z(e),
                         "restrict Delta^k e, m=" + std::to_string(m));
            }
        }
    }
}

std::vector<SL2Mat> words(Rng& rng, int count)
{
    std::vector<SL2Mat> gens{SL2Mat::S(), SL2Mat::T(), SL2Mat::T_inv()};
    std::uniform_int_distribution<int> len(1, 4), pick(0, 2);
    std::vector<SL2Mat> out;
    for (int i = 0; i < count; ++i) {
        SL2Mat w = SL2Mat::identity();
        for (int l = len(rng); l > 0; --l)
            w = w * gens[static_cast<size_t>(pick(rng))];
        out.push_back(w);
    }
    return out;
}

void periods(Check& c, Rng& rng)
{
    const int prec = 40;
    auto basis = drbasis(12, 2);
    BigComplex z0 = BigComplex::from_double(digits_to_bits(prec + 40), 0, 2);
    BigComplex z1 = BigComplex::from_double(digits_to_bits(prec + 40), 0, 3);
    BigFloat tol(64, 1e-30), tol_half(64, 1e-32);
    for (const OXElement& f : {OXElement::delta(), *basis[0].alg_rep}) {
        auto ws = words(rng, 6);
        for (size_t i = 0; i + 1 < ws.size(); i += 2) {
            BigFloat d = cocycle_defect(f, ws[i], ws[i + 1], z0, prec);
            c.expect(d < tol, "cocycle defect " + d.to_string(3));
        }
        for (size_t i = 0; i < 2; ++i) {
            BigFloat d = basepoint_coboundary_defect(f, ws[i], z0, z1, prec);
            c.expect(d < tol, "coboundary defect " + d.to_string(3));
        }
        QuadratureOptions fine;
        fine.refine = 2;
        for (const SL2Mat& g : {SL2Mat::S(), ws[0]}) {
            ComplexPoly a = eichler_cocycle(f, g, z0, prec);
            ComplexPoly b = eichler_cocycle(f, g, z0, prec, fine);
            BigFloat d = (a - b).max_norm();
            c.expect(d < tol_half, "halving change " + d.to_string(3));
        }
    }
    PeriodPolynomial p40 = period_polynomial(OXElement::delta(), 40);
    PeriodPolynomial p60 = period_polynomial(OXElement::delta(), 60);
    Integer max_den(100000000);
    for (auto part : {&PeriodPolynomial::even, &PeriodPolynomial::odd}) {
        const ComplexPoly& a = p40.*part;
        const ComplexPoly& b = p60.*part;
        for (int j = 0; j <= a.degree; ++j) {
            auto ra = rational_reconstruct(a.coeffs[static_cast<size_t>(j)], max_den, 40);
            auto rb = rational_reconstruct(b.coeffs[static_cast<size_t>(j)], max_den, 60);
            c.expect(ra && rb && *ra == *rb, "period coefficient j=" + std::to_string(j));
        }
    }
}

void integrality(Check& c, Rng&)
{
    for (int k = 4; k <= 16; k += 2) {
        for (const auto& f : drbasis(k, 30)) {
            bool ok = true;
            for (int m = f.rep.valuation(); m < f.rep.trunc(); ++m)
                ok = ok && denominator_is_6_smooth(f.rep.coeff(m));
            for (const auto& [key, coef] : f.alg_rep->numerator().terms())
                ok = ok && denominator_is_6_smooth(coef);
            c.expect(ok, "weight " + std::to_string(k));
        }
    }
}

struct Criterion {
    const char* title;
    std::function<void(Check&, Rng&)> body;
};

const std::vector<Criterion>& criteria()
{
    static const std::vector<Criterion> all{
        {"exact expansions of u, v, 1/Delta", exact_expansions},
        {"Eisenstein constants of G_12", eisenstein_constants},
        {"Ramanujan identities to q^50", ramanujan},
        {"2u Dv - 3v Du = (2/3) Delta to q^50", dq_over_q},
        {"heads-and-tails n! r(f) = D^(n+1) f", heads_and_tails},
        {"canonical basis in weight 12", basis_weight_12},
        {"injectivity and surjectivity round trips", round_trips},
        {"residue pairing values and symmetries", pairing},
        {"Hecke eigenvalues and self-adjointness", hecke_checks},
        {"residues of G_12, Delta and exact forms", residues},
        {"Z-model restrict/lift round trips", z_model},
        {"Eichler cocycle and period polynomial checks", periods},
        {"Z[1/6]-integrality of f_m up to weight 16", integrality},
    };
    return all;
}

} // namespace

Result run_one(int id, std::uint64_t seed)
{
    const auto& all = criteria();
    if (id < 1 || id > static_cast<int>(all.size()))
        throw DomainError("no acceptance criterion " + std::to_string(id));
    const Criterion& cr = all[static_cast<size_t>(id - 1)];
    Result r;
    r.id = id;
    r.title = cr.title;
    Rng rng(seed + static_cast<std::uint64_t>(id));
    auto start = std::chrono::steady_clock::now();
    Check c;
    try {
        cr.body(c, rng);
    } catch (const std::exception& e) {
        c.expect(false, std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.passed = c.ok;
    r.detail = c.log.str();
    return r;
}

std::vector<Result> run_all(std::uint64_t seed)
{
    std::vector<Result> out;
    for (int id = 1; id <= kCriteria; ++id)
        out.push_back(run_one(id, seed));
    return out;
}

std::string format_line(const Result& r)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "[%02d] ", r.id);
    std::string line = std::string(r.passed ? "PASS " : "FAIL ") + buf + r.title;
    if (!r.passed)
        line += "  -- " + r.detail;
    return line;
}

} // namespace mfdr::acceptance
