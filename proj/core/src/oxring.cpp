#include "mfdr/oxring.hpp"

#include "mfdr/eisenstein.hpp"
#include "mfdr/errors.hpp"
#include "mfdr/linalg.hpp"

#include <algorithm>
#include <mutex>
#include <string>

namespace mfdr {

OXElement normalize(UVPolynomial numerator, int denom_pow, int weight)
{
    return OXElement::make(std::move(numerator), denom_pow, weight);
}

OXElement OXElement::make(UVPolynomial numerator, int denom_pow, int weight)
{
    if (denom_pow < 0)
        throw GradingError("negative Delta power");
    auto w = numerator.homogeneous_weight();
    if (!w)
        throw GradingError("numerator is not weight-homogeneous");
    if (!numerator.is_zero() && *w != weight + 12 * denom_pow)
        throw GradingError("numerator weight " + std::to_string(*w) + " does not match weight "
                           + std::to_string(weight) + " with Delta^-" + std::to_string(denom_pow));
    OXElement e;
    e.weight_ = weight;
    if (numerator.is_zero() || weight % 2 != 0)
        return e;
    while (denom_pow > 0) {
        auto [q, r] = numerator.divmod_delta();
        if (!r.is_zero())
            break;
        numerator = std::move(q);
        --denom_pow;
    }
    e.num_ = std::move(numerator);
    e.c_ = denom_pow;
    return e;
}

OXElement OXElement::zero(int weight)
{
    OXElement e;
    e.weight_ = weight;
    return e;
}

OXElement OXElement::constant(const Rational& c)
{
    return make(UVPolynomial::constant(c), 0, 0);
}

OXElement OXElement::u()
{
    return make(UVPolynomial::u(), 0, 4);
}

OXElement OXElement::v()
{
    return make(UVPolynomial::v(), 0, 6);
}

OXElement OXElement::delta()
{
    return make(UVPolynomial::delta(), 0, 12);
}

OXElement OXElement::delta_pow(int k)
{
    if (k >= 0)
        return make(UVPolynomial::delta().pow(static_cast<unsigned>(k)), 0, 12 * k);
    return make(UVPolynomial::constant(1), -k, 12 * k);
}

OXElement OXElement::j_invariant()
{
    return make(UVPolynomial::monomial(3, 0, 1728), 1, 0);
}

OXElement OXElement::operator-() const
{
    OXElement e = *this;
    e.num_ *= Rational(-1);
    return e;
}

namespace {

void require_same_weight(const OXElement& a, const OXElement& b)
{
    if (a.weight() != b.weight())
        throw GradingError("adding elements of weights " + std::to_string(a.weight()) + " and "
                           + std::to_string(b.weight()));
}

} // namespace

OXElement& OXElement::operator+=(const OXElement& o)
{
    require_same_weight(*this, o);
    int c = std::max(c_, o.c_);
    UVPolynomial d = UVPolynomial::delta();
    UVPolynomial n = num_ * d.pow(static_cast<unsigned>(c - c_)) + o.num_ * d.pow(static_cast<unsigned>(c - o.c_));
    *this = make(std::move(n), c, weight_);
    return *this;
}

OXElement& OXElement::operator-=(const OXElement& o)
{
    return *this += -o;
}

OXElement& OXElement::operator*=(const Rational& s)
{
    num_ *= s;
    if (num_.is_zero())
        c_ = 0;
    return *this;
}

OXElement OXElement::pow(unsigned e) const
{
    OXElement r = constant(1);
    for (unsigned i = 0; i < e; ++i)
        r = r * *this;
    return r;
}

bool OXElement::operator==(const OXElement& o) const
{
    return weight_ == o.weight_ && c_ == o.c_ && num_ == o.num_;
}

OXElement operator+(OXElement a, const OXElement& b)
{
    a += b;
    return a;
}

OXElement operator-(OXElement a, const OXElement& b)
{
    a -= b;
    return a;
}

OXElement operator*(const OXElement& a, const OXElement& b)
{
    if (a.is_zero() || b.is_zero())
        return OXElement::zero(a.weight() + b.weight());
    return OXElement::make(a.numerator() * b.numerator(), a.denom_pow() + b.denom_pow(), a.weight() + b.weight());
}

OXElement operator*(const Rational& s, OXElement a)
{
    a *= s;
    return a;
}

OXElement theta(const OXElement& e)
{
    // theta(Delta) = 0, so only the numerator is differentiated
    const UVPolynomial& p = e.numerator();
    UVPolynomial t = UVPolynomial::monomial(0, 1, 6) * p.d_du() + UVPolynomial::monomial(2, 0, frac(1, 3)) * p.d_dv();
    return OXElement::make(std::move(t), e.denom_pow(), e.weight() + 2);
}

std::pair<OXElement, OXElement> differential_components(const OXElement& e)
{
    return {theta(e), Rational(e.weight()) * e};
}

namespace {

struct ExpansionCache {
    std::mutex mutex;
    QSeries u, v, dinv;
};

ExpansionCache& cache()
{
    static ExpansionCache c;
    return c;
}

int grow(int have, int want)
{
    return std::max(want, have + have / 2);
}

} // namespace

QSeries expand_u(int trunc)
{
    auto& c = cache();
    std::lock_guard<std::mutex> lock(c.mutex);
    if (c.u.trunc() < trunc)
        c.u = eisenstein(4, grow(c.u.trunc(), trunc), false) * Rational(20);
    return c.u.truncated(trunc);
}

QSeries expand_v(int trunc)
{
    auto& c = cache();
    std::lock_guard<std::mutex> lock(c.mutex);
    if (c.v.trunc() < trunc)
        c.v = eisenstein(6, grow(c.v.trunc(), trunc), false) * frac(7, 3);
    return c.v.truncated(trunc);
}

QSeries expand_delta_inverse(int trunc)
{
    auto& c = cache();
    std::lock_guard<std::mutex> lock(c.mutex);
    if (c.dinv.trunc() < trunc || c.dinv.is_zero())
        c.dinv = delta_q(grow(c.dinv.trunc(), trunc) + 2).inverse();
    return c.dinv.truncated(trunc);
}

QSeries expand(const OXElement& e, int trunc)
{
    int c = e.denom_pow();
    if (trunc <= -c)
        throw WindowError("expand: trunc " + std::to_string(trunc) + " leaves no coefficient of an element with Delta^-"
                          + std::to_string(c));
    if (e.is_zero())
        return QSeries::zero(trunc);
    // numerator to trunc + c, then times Delta^-c (valuation -c, relative precision trunc + c + 1)
    int inner = trunc + c;
    const UVPolynomial& p = e.numerator();
    QSeries us = expand_u(inner), vs = expand_v(inner);
    std::vector<QSeries> upow{QSeries::constant(1, inner)}, vpow{QSeries::constant(1, inner)};
    for (int i = 1; i <= p.max_u_degree(); ++i)
        upow.push_back(upow.back() * us);
    for (int i = 1; i <= p.max_v_degree(); ++i)
        vpow.push_back(vpow.back() * vs);
    QSeries num = QSeries::zero(inner);
    for (const auto& [k, coef] : p.terms())
        num += coef * (upow[static_cast<size_t>(k.first)] * vpow[static_cast<size_t>(k.second)]);
    if (c == 0)
        return num.truncated(trunc);
    QSeries dinv = expand_delta_inverse(inner);
    QSeries dc = dinv.pow(static_cast<unsigned>(c));
    return (num * dc).truncated(trunc);
}

std::vector<std::pair<int, int>> weight_monomials(int d)
{
    std::vector<std::pair<int, int>> out;
    if (d < 0 || d % 2 != 0)
        return out;
    for (int a = d / 4; a >= 0; --a) {
        int rest = d - 4 * a;
        if (rest % 6 == 0)
            out.emplace_back(a, rest / 6);
    }
    return out;
}

int from_series_pole_allowance(const QSeries& s, int weight)
{
    int c = 0;
    if (!s.is_zero())
        c = std::max(c, -s.valuation());
    // weight + 12c >= 0 so that monomials exist
    if (weight < 0)
        c = std::max(c, (-weight + 11) / 12);
    return c;
}

OXElement from_series(const QSeries& s, int weight)
{
    if (weight % 2 != 0) {
        if (s.is_zero())
            return OXElement::zero(weight);
        throw NotInRingError("nonzero series cannot have odd weight " + std::to_string(weight));
    }
    int c = from_series_pole_allowance(s, weight);
    auto mons = weight_monomials(weight + 12 * c);
    int k = static_cast<int>(mons.size());
    int equations = s.trunc() + c;
    if (equations < k + 5)
        throw UnderdeterminedError("from_series: window of " + std::to_string(equations) + " coefficients; need "
                                   + std::to_string(k + 5) + " for weight " + std::to_string(weight));
    std::vector<QSeries> cols;
    for (auto [a, b] : mons)
        cols.push_back(expand(OXElement::make(UVPolynomial::monomial(a, b), c, weight), s.trunc()));
    RatMatrix m(static_cast<size_t>(equations), std::vector<Rational>(static_cast<size_t>(k)));
    std::vector<Rational> rhs(static_cast<size_t>(equations));
    for (int r = 0; r < equations; ++r) {
        int exp = -c + r;
        for (int j = 0; j < k; ++j)
            m[static_cast<size_t>(r)][static_cast<size_t>(j)] = cols[static_cast<size_t>(j)].coeff(exp);
        rhs[static_cast<size_t>(r)] = s.coeff(exp);
    }
    auto sol = solve_linear(std::move(m), std::move(rhs));
    if (!sol)
        throw NotInRingError("series is not the expansion of a weight-" + std::to_string(weight) + " element");
    if (sol->rank < k)
        throw UnderdeterminedError("from_series: candidate expansions are dependent on the window");
    UVPolynomial p;
    for (int j = 0; j < k; ++j)
        p.add_term(mons[static_cast<size_t>(j)].first, mons[static_cast<size_t>(j)].second, sol->x[static_cast<size_t>(j)]);
    return OXElement::make(std::move(p), c, weight);
}

int cusp_order(const OXElement& e)
{
    if (e.is_zero())
        throw DomainError("cusp order of zero");
    // ord of u^a v^b is 0; the numerator has ord >= 0 bounded by its weight / 12
    int bound = e.numerator().homogeneous_weight().value_or(0) / 12 + 1;
    QSeries s = expand(e, bound + 1);
    if (s.is_zero())
        throw InternalError("cusp_order: nonzero element with vanishing expansion");
    return s.valuation();
}

} // namespace mfdr
