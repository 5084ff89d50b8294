#pragma once

#include "mfdr/qseries.hpp"
#include "mfdr/uvpoly.hpp"

#include <utility>

namespace mfdr {

// P(u, v) * Delta^(-c) in Q[u, v][1/Delta], homogeneous of weight m.
//
// Normalized: c = 0 or Delta does not divide P. Odd weights hold only zero.
class OXElement {
public:
    OXElement() = default;

    // Checks 4a + 6b = weight + 12 c on every monomial (GradingError) and normalizes.
    static OXElement make(UVPolynomial numerator, int denom_pow, int weight);
    static OXElement zero(int weight);
    static OXElement constant(const Rational& c);
    static OXElement u();
    static OXElement v();
    static OXElement delta();
    // Delta^k for any integer k
    static OXElement delta_pow(int k);
    // 1728 u^3 / Delta
    static OXElement j_invariant();

    const UVPolynomial& numerator() const { return num_; }
    int denom_pow() const { return c_; }
    int weight() const { return weight_; }
    bool is_zero() const { return num_.is_zero(); }

    OXElement operator-() const;
    OXElement& operator+=(const OXElement& o);
    OXElement& operator-=(const OXElement& o);
    OXElement& operator*=(const Rational& s);
    OXElement pow(unsigned e) const;

    bool operator==(const OXElement& o) const;
    bool operator!=(const OXElement& o) const { return !(*this == o); }

private:
    UVPolynomial num_;
    int c_ = 0;
    int weight_ = 0;
};

OXElement operator+(OXElement a, const OXElement& b);
OXElement operator-(OXElement a, const OXElement& b);
OXElement operator*(const OXElement& a, const OXElement& b);
OXElement operator*(const Rational& s, OXElement a);

// Divides out common powers of Delta; GradingError on inhomogeneous input.
OXElement normalize(UVPolynomial numerator, int denom_pow, int weight);

// 6 v d/du + (u^2/3) d/dv; raises weight by 2 and kills Delta.
OXElement theta(const OXElement& e);

// (theta(e), m e): df = theta(f) omega + m f psi
std::pair<OXElement, OXElement> differential_components(const OXElement& e);

// q-expansion with u = 20 G_4 and v = (7/3) G_6, to exactly `trunc`.
QSeries expand(const OXElement& e, int trunc);
QSeries expand_u(int trunc);
QSeries expand_v(int trunc);
// 1/Delta to `trunc`, valuation -1
QSeries expand_delta_inverse(int trunc);

// Monomials u^a v^b with 4a + 6b = d, ordered by decreasing a.
std::vector<std::pair<int, int>> weight_monomials(int d);

// Inverse of expand: the unique element of weight m with the given expansion.
// Needs trunc + c >= (number of candidate monomials) + 5, c the pole order allowance.
OXElement from_series(const QSeries& s, int weight);

// Pole depth allowance used by from_series.
int from_series_pole_allowance(const QSeries& s, int weight);

// Multiplicity of the zero of the numerator at the cusp minus c.
int cusp_order(const OXElement& e);

} // namespace mfdr
