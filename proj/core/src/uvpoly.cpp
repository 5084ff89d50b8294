#include "mfdr/uvpoly.hpp"

#include "mfdr/errors.hpp"

#include <algorithm>

namespace mfdr {

UVPolynomial UVPolynomial::constant(const Rational& c)
{
    return monomial(0, 0, c);
}

UVPolynomial UVPolynomial::monomial(int a, int b, const Rational& c)
{
    if (a < 0 || b < 0)
        throw DomainError("negative exponent in u/v monomial");
    UVPolynomial p;
    if (c != 0)
        p.terms_[{a, b}] = c;
    return p;
}

UVPolynomial UVPolynomial::delta()
{
    UVPolynomial p;
    p.terms_[{3, 0}] = 1;
    p.terms_[{0, 2}] = -27;
    return p;
}

Rational UVPolynomial::coeff(int a, int b) const
{
    auto it = terms_.find({a, b});
    return it == terms_.end() ? Rational(0) : it->second;
}

void UVPolynomial::add_term(int a, int b, const Rational& c)
{
    if (c == 0)
        return;
    if (a < 0 || b < 0)
        throw DomainError("negative exponent in u/v monomial");
    auto [it, inserted] = terms_.try_emplace({a, b}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

std::optional<int> UVPolynomial::homogeneous_weight() const
{
    if (terms_.empty())
        return 0;
    int w = 4 * terms_.begin()->first.first + 6 * terms_.begin()->first.second;
    for (const auto& [k, c] : terms_)
        if (4 * k.first + 6 * k.second != w)
            return std::nullopt;
    return w;
}

int UVPolynomial::max_u_degree() const
{
    int d = 0;
    for (const auto& [k, c] : terms_)
        d = std::max(d, k.first);
    return d;
}

int UVPolynomial::max_v_degree() const
{
    int d = 0;
    for (const auto& [k, c] : terms_)
        d = std::max(d, k.second);
    return d;
}

UVPolynomial& UVPolynomial::operator+=(const UVPolynomial& o)
{
    for (const auto& [k, c] : o.terms_)
        add_term(k.first, k.second, c);
    return *this;
}

UVPolynomial& UVPolynomial::operator-=(const UVPolynomial& o)
{
    for (const auto& [k, c] : o.terms_)
        add_term(k.first, k.second, -c);
    return *this;
}

UVPolynomial& UVPolynomial::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, x] : terms_)
        x *= c;
    return *this;
}

UVPolynomial UVPolynomial::operator-() const
{
    UVPolynomial p = *this;
    p *= Rational(-1);
    return p;
}

UVPolynomial UVPolynomial::pow(unsigned e) const
{
    UVPolynomial r = constant(1);
    for (unsigned i = 0; i < e; ++i)
        r = r * *this;
    return r;
}

UVPolynomial UVPolynomial::d_du() const
{
    UVPolynomial p;
    for (const auto& [k, c] : terms_)
        if (k.first > 0)
            p.add_term(k.first - 1, k.second, c * k.first);
    return p;
}

UVPolynomial UVPolynomial::d_dv() const
{
    UVPolynomial p;
    for (const auto& [k, c] : terms_)
        if (k.second > 0)
            p.add_term(k.first, k.second - 1, c * k.second);
    return p;
}

std::pair<UVPolynomial, UVPolynomial> UVPolynomial::divmod_delta() const
{
    // c u^a v^b with b >= 2:  v^2 = (u^3 - Delta)/27
    UVPolynomial quot, rem = *this;
    while (true) {
        auto it = std::find_if(rem.terms_.begin(), rem.terms_.end(),
                               [](const auto& t) { return t.first.second >= 2; });
        if (it == rem.terms_.end())
            break;
        auto [a, b] = it->first;
        Rational c = it->second;
        rem.terms_.erase(it);
        rem.add_term(a + 3, b - 2, c / 27);
        quot.add_term(a, b - 2, -c / 27);
    }
    return {quot, rem};
}

UVPolynomial UVPolynomial::reduce_delta_one() const
{
    auto [q, r] = divmod_delta();
    // P = q Delta + r, and Delta = 1
    if (q.is_zero())
        return r;
    return (q + r).reduce_delta_one();
}

UVPolynomial operator+(UVPolynomial a, const UVPolynomial& b)
{
    a += b;
    return a;
}

UVPolynomial operator-(UVPolynomial a, const UVPolynomial& b)
{
    a -= b;
    return a;
}

UVPolynomial operator*(const UVPolynomial& a, const UVPolynomial& b)
{
    UVPolynomial p;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms())
            p.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return p;
}

UVPolynomial operator*(const Rational& c, UVPolynomial a)
{
    a *= c;
    return a;
}

} // namespace mfdr
