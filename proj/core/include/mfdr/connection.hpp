#pragma once

#include "mfdr/oxring.hpp"
#include "mfdr/qseries.hpp"

#include <vector>

namespace mfdr {

enum class Frame { ST, AT };

// Invariant section of V_n (base_weight 0) or of omega (x) V_n (base_weight 2).
// coeffs[j] multiplies S^j T^(n-j) in the ST frame and has weight n - 2j + base_weight.
class AlgebraicSection {
public:
    static AlgebraicSection zero(int degree, int base_weight = 0);

    int degree() const { return degree_; }
    int base_weight() const { return base_weight_; }
    // weight of the coefficient of S^j T^(n-j)
    int coeff_weight(int j) const { return degree_ - 2 * j + base_weight_; }

    // Coefficient of S^j T^k, j + k = n; zero outside the range.
    OXElement at(int j) const;
    // GradingError on a weight mismatch.
    void set(int j, const OXElement& f);
    const std::vector<OXElement>& coeffs() const { return coeffs_; }

    AlgebraicSection& operator+=(const AlgebraicSection& o);
    AlgebraicSection& operator-=(const AlgebraicSection& o);
    AlgebraicSection& operator*=(const Rational& c);
    bool operator==(const AlgebraicSection& o) const;
    bool is_zero() const;

private:
    int degree_ = 0;
    int base_weight_ = 0;
    std::vector<OXElement> coeffs_;
};

AlgebraicSection operator+(AlgebraicSection a, const AlgebraicSection& b);
AlgebraicSection operator-(AlgebraicSection a, const AlgebraicSection& b);

// q-expansion of a section in either frame; coefficients share one window.
class SeriesSection {
public:
    // Mixed windows are truncated to the common trunc; window_adjusted() reports it.
    SeriesSection(int degree, int base_weight, Frame frame, std::vector<QSeries> coeffs);

    int degree() const { return degree_; }
    int base_weight() const { return base_weight_; }
    Frame frame() const { return frame_; }
    int trunc() const { return trunc_; }
    bool window_adjusted() const { return window_adjusted_; }

    const QSeries& at(int j) const { return coeffs_.at(static_cast<size_t>(j)); }
    const std::vector<QSeries>& coeffs() const { return coeffs_; }
    bool operator==(const SeriesSection& o) const;

private:
    int degree_;
    int base_weight_;
    Frame frame_;
    int trunc_;
    bool window_adjusted_ = false;
    std::vector<QSeries> coeffs_;
};

struct NablaParts {
    AlgebraicSection omega; // base_weight 2
    AlgebraicSection psi;   // base_weight 0, identically zero for invariant sections
};

// Gauss-Manin connection in the ST frame. Input has base_weight 0.
NablaParts nabla_st(const AlgebraicSection& s);
// The omega-component; InternalError if the psi-component does not vanish.
AlgebraicSection nabla_omega(const AlgebraicSection& s);

SeriesSection expand_section(const AlgebraicSection& s, int trunc);

// Gauge series E_2/12 = -2 G_2 with S = A + (E_2/12) T.
QSeries gauge_series(int trunc);

SeriesSection gauge_to_at(const SeriesSection& s);
SeriesSection gauge_to_at(const AlgebraicSection& s, int trunc);
SeriesSection gauge_to_st(const SeriesSection& s);

// Coefficient j of the result: D f^j + (k+1) f^(j-1), times dq/q.
SeriesSection nabla_at(const SeriesSection& s);

// q^0 coefficient of the T^n component in the AT frame.
Rational residue(const SeriesSection& omega_form);
Rational residue(const AlgebraicSection& omega_form);

// Permanent extension of <T, S> = 1 = -<S, T>, <T, T> = <S, S> = 0.
OXElement inner_product(const AlgebraicSection& a, const AlgebraicSection& b);
QSeries inner_product(const SeriesSection& a, const SeriesSection& b);

} // namespace mfdr
