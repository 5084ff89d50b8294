#include "mfdr/cohomology.hpp"

#include "mfdr/eisenstein.hpp"
#include "mfdr/errors.hpp"
#include "mfdr/linalg.hpp"

#include <algorithm>
#include <string>

namespace mfdr {

Dimensions dims(int k)
{
    if (k % 2 != 0 || k < 2)
        throw DomainError("dims: weight must be even and >= 2, got " + std::to_string(k));
    if (k == 2)
        return {0, 0, 1};
    int d = static_cast<int>(weight_monomials(k).size());
    return {d, d - 1, 2 * (d - 1) + 1};
}

AlgebraicSection phi(const OXElement& f)
{
    int n = -f.weight();
    if (n < 0)
        throw GradingError("phi: weight must be <= 0, got " + std::to_string(f.weight()));
    AlgebraicSection s = AlgebraicSection::zero(n, 0);
    if (f.is_zero() || n % 2 != 0)
        return s;
    s.set(n, f);
    OXElement u = OXElement::u();
    // f^{j-1,k+1} = ((j+1) u f^{j+1,k-1} / 12 - theta f^{j,k}) / (k+1)
    for (int j = n; j >= 1; --j) {
        int k = n - j;
        OXElement next = frac(j + 1, 12) * (u * s.at(j + 1)) - theta(s.at(j));
        next *= frac(1, k + 1);
        s.set(j - 1, next);
    }
    return s;
}

OXElement tail(const OXElement& f)
{
    AlgebraicSection w = nabla_omega(phi(f));
    for (int j = 1; j <= w.degree(); ++j)
        if (!w.at(j).is_zero())
            throw InternalError("nabla phi(f) has a component off omega T^n");
    return w.at(0);
}

QSeries heads_and_tails_tail(const OXElement& f, int trunc)
{
    return expand(tail(f), trunc);
}

TailReduction reduce_to_tail(const AlgebraicSection& omega_form)
{
    if (omega_form.base_weight() != 2)
        throw GradingError("reduce_to_tail expects an omega-form (base weight 2)");
    int n = omega_form.degree();
    AlgebraicSection cur = omega_form;
    AlgebraicSection primitive = AlgebraicSection::zero(n, 0);
    for (int j = n; j >= 1; --j) {
        const OXElement g = cur.at(j);
        if (g.is_zero())
            continue;
        int k = n - j;
        // nabla(g S^{j-1} T^{k+1}) = (k+1) g omega S^j T^k + lower S-degree terms
        AlgebraicSection sigma = AlgebraicSection::zero(n, 0);
        sigma.set(j - 1, frac(1, k + 1) * g);
        cur -= nabla_omega(sigma);
        primitive += sigma;
    }
    for (int j = 1; j <= n; ++j)
        if (!cur.at(j).is_zero())
            throw InternalError("reduce_to_tail left a component off omega T^n");
    return {cur.at(0), primitive};
}

std::vector<Rational> CohClass::coords() const
{
    std::vector<Rational> out;
    for (int m = -ell; m <= ell; ++m)
        out.push_back(rep.coeff(m));
    return out;
}

bool CohClass::same_class(const CohClass& o) const
{
    return weight == o.weight && coords() == o.coords();
}

CohClass canonical_rep(const OXElement& f, int trunc)
{
    int k = f.weight();
    Dimensions d = dims(k);
    int ell = d.ell;
    if (trunc < ell + 1)
        throw WindowError("canonical_rep: trunc must be >= ell + 1 = " + std::to_string(ell + 1));
    int n = k - 2;
    CohClass out;
    out.weight = k;
    out.ell = ell;
    out.certificate = OXElement::zero(2 - k);
    if (f.is_zero()) {
        out.rep = QSeries::zero(trunc);
        out.alg_rep = f;
        return out;
    }
    int depth = std::max(0, -cusp_order(f));
    OXElement rep = f;
    if (depth > ell) {
        // g = sum x_i u^a v^b Delta^-depth of weight 2-k; match principal part of D^(k-1) g below -ell
        auto mons = weight_monomials(2 - k + 12 * depth);
        std::vector<OXElement> cands;
        std::vector<QSeries> images;
        for (auto [a, b] : mons) {
            cands.push_back(OXElement::make(UVPolynomial::monomial(a, b), depth, 2 - k));
            images.push_back(bol(expand(cands.back(), -ell), static_cast<unsigned>(k - 1)));
        }
        QSeries fs = expand(f, -ell);
        int rows = depth - ell;
        RatMatrix m(static_cast<size_t>(rows), std::vector<Rational>(cands.size()));
        std::vector<Rational> rhs(static_cast<size_t>(rows));
        for (int r = 0; r < rows; ++r) {
            int e = -depth + r;
            for (size_t i = 0; i < cands.size(); ++i)
                m[static_cast<size_t>(r)][i] = images[i].coeff(e);
            rhs[static_cast<size_t>(r)] = fs.coeff(e);
        }
        auto sol = solve_linear(std::move(m), std::move(rhs));
        if (!sol)
            throw InternalError("canonical_rep: principal part not reachable by exact forms");
        OXElement g = OXElement::zero(2 - k);
        for (size_t i = 0; i < cands.size(); ++i)
            if (sol->x[i] != 0)
                g += sol->x[i] * cands[i];
        out.certificate = g;
        // D^(n+1) g = n! r(g)
        rep = f - Rational(factorial(n)) * tail(g);
    }
    out.alg_rep = rep;
    out.rep = expand(rep, trunc);
    if (!out.rep.is_zero() && out.rep.valuation() < -ell)
        throw InternalError("canonical_rep: representative still has a pole of order > ell");
    return out;
}

CohClass canonical_rep(const QSeries& s, int weight, int trunc)
{
    return canonical_rep(from_series(s, weight), trunc);
}

std::vector<CohClass> drbasis(int k, int trunc)
{
    if (k < 4 || k % 2 != 0)
        throw DomainError("drbasis: weight must be even and >= 4, got " + std::to_string(k));
    int ell = dims(k).ell;
    if (trunc < ell + 1)
        throw WindowError("drbasis: trunc must be >= ell + 1 = " + std::to_string(ell + 1));
    auto mons = weight_monomials(k + 12 * ell);
    size_t dim = static_cast<size_t>(2 * ell + 1);
    if (mons.size() != dim)
        throw InternalError("drbasis: unexpected number of monomials");
    std::vector<OXElement> cands;
    RatMatrix a(dim, std::vector<Rational>(dim));
    for (size_t i = 0; i < dim; ++i) {
        cands.push_back(OXElement::make(UVPolynomial::monomial(mons[i].first, mons[i].second), ell, k));
        QSeries s = expand(cands.back(), ell + 1);
        for (size_t r = 0; r < dim; ++r)
            a[r][i] = s.coeff(-ell + static_cast<int>(r));
    }
    auto inv = invert_matrix(a);
    if (!inv)
        throw InternalError("drbasis: expansions of the candidate monomials are dependent");
    std::vector<CohClass> out;
    for (size_t m = 0; m < dim; ++m) {
        OXElement f = OXElement::zero(k);
        for (size_t i = 0; i < dim; ++i)
            if ((*inv)[i][m] != 0)
                f += (*inv)[i][m] * cands[i];
        CohClass c;
        c.weight = k;
        c.ell = ell;
        c.alg_rep = f;
        c.rep = expand(f, trunc);
        c.certificate = OXElement::zero(2 - k);
        out.push_back(std::move(c));
    }
    return out;
}

bool is_prime(int p)
{
    if (p < 2)
        return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

namespace {

int floor_div(int a, int b)
{
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

int ceil_div(int a, int b)
{
    return -floor_div(-a, b);
}

} // namespace

QSeries hecke_series(const QSeries& s, int p, int weight)
{
    if (!is_prime(p))
        throw DomainError("hecke: " + std::to_string(p) + " is not prime");
    if (s.trunc() < 1)
        throw WindowError("hecke: window must contain q^0");
    int t = floor_div(s.trunc() - 1, p) + 1;
    if (s.is_zero())
        return QSeries::zero(t);
    int v = s.valuation();
    int start = std::min(ceil_div(v, p), v < 0 ? p * v : ceil_div(v, p));
    if (start >= t)
        return QSeries::zero(t);
    Integer pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(weight - 1));
    Rational pk1(pk);
    std::vector<Rational> c;
    for (int m = start; m < t; ++m) {
        Rational x = s.coeff(p * m);
        if (m % p == 0)
            x += pk1 * s.coeff(m / p);
        c.push_back(x);
    }
    return QSeries::from_coeffs(start, std::move(c), t);
}

CohClass hecke(int p, const CohClass& c, int trunc)
{
    if (!is_prime(p))
        throw DomainError("hecke: " + std::to_string(p) + " is not prime");
    int k = c.weight;
    int need = std::max(trunc, c.ell + 6);
    int source = p * (need - 1) + 1;
    QSeries s;
    if (c.alg_rep)
        s = expand(*c.alg_rep, source);
    else if (c.rep.trunc() >= source)
        s = c.rep;
    else
        throw WindowError("hecke: representative window " + std::to_string(c.rep.trunc()) + " below "
                          + std::to_string(source));
    QSeries t = hecke_series(s, p, k);
    return canonical_rep(from_series(t, k), trunc);
}

Decomposition decompose(const CohClass& c)
{
    int k = c.weight;
    int ell = c.ell;
    Rational g0 = -bernoulli(k) / Rational(2 * k);
    Decomposition d;
    d.eis = c.rep.coeff(0) / g0;
    for (int m = 1; m <= ell; ++m)
        d.hol_cusp.push_back(c.rep.coeff(m) - d.eis * Rational(divisor_sigma(static_cast<unsigned>(k - 1), m)));
    for (int m = -ell; m <= -1; ++m)
        d.anti.push_back(c.rep.coeff(m));
    return d;
}

std::vector<Rational> reassemble(int weight, const Decomposition& d)
{
    int ell = static_cast<int>(d.anti.size());
    Rational g0 = -bernoulli(weight) / Rational(2 * weight);
    std::vector<Rational> out(d.anti);
    out.push_back(d.eis * g0);
    for (int m = 1; m <= ell; ++m)
        out.push_back(d.hol_cusp[static_cast<size_t>(m - 1)]
                      + d.eis * Rational(divisor_sigma(static_cast<unsigned>(weight - 1), m)));
    return out;
}

} // namespace mfdr
