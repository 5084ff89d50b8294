#pragma once

#include "mfdr/rational.hpp"

#include <vector>

namespace mfdr {

// Truncated Laurent series sum_{valuation <= m < trunc} a_m q^m over Q.
//
// Coefficients are stored densely from `valuation`. The leading stored
// coefficient is nonzero; the zero series has valuation == trunc.
class QSeries {
public:
    QSeries() = default;

    // O(q^trunc)
    static QSeries zero(int trunc);
    static QSeries monomial(int m, const Rational& c, int trunc);
    static QSeries constant(const Rational& c, int trunc);
    // coeffs[i] is the coefficient of q^(start + i); entries at or beyond trunc are dropped
    static QSeries from_coeffs(int start, std::vector<Rational> coeffs, int trunc);

    int valuation() const { return valuation_; }
    int trunc() const { return trunc_; }
    bool is_zero() const { return coeffs_.empty(); }

    // Throws WindowError for m >= trunc; zero below the valuation.
    Rational coeff(int m) const;
    const Rational& leading() const;
    const std::vector<Rational>& dense() const { return coeffs_; }

    QSeries truncated(int trunc) const;
    QSeries shifted(int s) const; // q^s * this

    QSeries operator-() const;
    QSeries& operator+=(const QSeries& o);
    QSeries& operator-=(const QSeries& o);
    QSeries& operator*=(const QSeries& o);
    QSeries& operator*=(const Rational& c);

    // Reciprocal on the maximal derivable window: if this is known to relative
    // precision p = trunc - valuation then so is the inverse.
    QSeries inverse() const;
    QSeries pow(unsigned e) const;

    // Same window and same coefficients.
    bool operator==(const QSeries& o) const;
    bool operator!=(const QSeries& o) const { return !(*this == o); }
    // Coefficients agree below min(trunc, o.trunc).
    bool agrees_with(const QSeries& o) const;

private:
    int valuation_ = 0;
    int trunc_ = 0;
    std::vector<Rational> coeffs_;

    void trim();
};

QSeries operator+(QSeries a, const QSeries& b);
QSeries operator-(QSeries a, const QSeries& b);
QSeries operator*(const QSeries& a, const QSeries& b);
QSeries operator*(const Rational& c, QSeries a);
QSeries operator*(QSeries a, const Rational& c);

// D^p with D = q d/dq: a_m -> m^p a_m
QSeries bol(const QSeries& a, unsigned p);

} // namespace mfdr
