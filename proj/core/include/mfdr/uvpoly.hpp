#pragma once

#include "mfdr/rational.hpp"

#include <map>
#include <optional>
#include <utility>

namespace mfdr {

// Polynomial in u, v over Q. Keys are exponent pairs (a, b) for u^a v^b.
class UVPolynomial {
public:
    using Key = std::pair<int, int>;
    using Terms = std::map<Key, Rational>;

    UVPolynomial() = default;
    static UVPolynomial constant(const Rational& c);
    static UVPolynomial monomial(int a, int b, const Rational& c = 1);
    static UVPolynomial u() { return monomial(1, 0); }
    static UVPolynomial v() { return monomial(0, 1); }
    // u^3 - 27 v^2
    static UVPolynomial delta();

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(int a, int b) const;
    void add_term(int a, int b, const Rational& c);

    // Weight of each monomial is 4a + 6b; nullopt if mixed, 0 for the zero polynomial.
    std::optional<int> homogeneous_weight() const;
    int max_u_degree() const;
    int max_v_degree() const;

    UVPolynomial& operator+=(const UVPolynomial& o);
    UVPolynomial& operator-=(const UVPolynomial& o);
    UVPolynomial& operator*=(const Rational& c);
    UVPolynomial operator-() const;
    UVPolynomial pow(unsigned e) const;

    UVPolynomial d_du() const;
    UVPolynomial d_dv() const;

    // Quotient and remainder modulo Delta, eliminating v^2 -> (u^3 - Delta)/27.
    // The remainder has v-degree <= 1.
    std::pair<UVPolynomial, UVPolynomial> divmod_delta() const;
    // Reduction modulo (Delta - 1): v^2 -> (u^3 - 1)/27.
    UVPolynomial reduce_delta_one() const;

    bool operator==(const UVPolynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const UVPolynomial& o) const { return terms_ != o.terms_; }

private:
    Terms terms_;
};

UVPolynomial operator+(UVPolynomial a, const UVPolynomial& b);
UVPolynomial operator-(UVPolynomial a, const UVPolynomial& b);
UVPolynomial operator*(const UVPolynomial& a, const UVPolynomial& b);
UVPolynomial operator*(const Rational& c, UVPolynomial a);

} // namespace mfdr
