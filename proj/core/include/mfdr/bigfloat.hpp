#pragma once

#include "mfdr/rational.hpp"

#include <mpfr.h>

#include <algorithm>

#include <string>

namespace mfdr {

long digits_to_bits(int digits);
int bits_to_digits(long bits);

// MPFR value with its own precision. Binary results take the smaller precision.
class BigFloat {
public:
    explicit BigFloat(long bits = 64);
    BigFloat(long bits, double x);
    BigFloat(long bits, long x);
    BigFloat(long bits, const Rational& x);
    BigFloat(long bits, const Integer& x);
    BigFloat(long bits, const std::string& decimal);
    BigFloat(const BigFloat& o);
    BigFloat(BigFloat&& o) noexcept;
    BigFloat& operator=(const BigFloat& o);
    BigFloat& operator=(BigFloat&& o) noexcept;
    ~BigFloat();

    long bits() const { return static_cast<long>(mpfr_get_prec(x_)); }
    mpfr_ptr raw() { return x_; }
    mpfr_srcptr raw() const { return x_; }

    static BigFloat pi(long bits);

    BigFloat& operator+=(const BigFloat& o);
    BigFloat& operator-=(const BigFloat& o);
    BigFloat& operator*=(const BigFloat& o);
    BigFloat& operator/=(const BigFloat& o);
    BigFloat& operator*=(long s);
    BigFloat operator-() const;

    double to_double() const;
    bool is_zero() const { return mpfr_zero_p(x_) != 0; }
    int sign() const { return mpfr_sgn(x_); }
    // Decimal scientific notation with `digits` significant digits.
    std::string to_string(int digits) const;

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.x_, b.x_) != 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.x_, b.x_) != 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.x_, b.x_) != 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.x_, b.x_) != 0; }

private:
    mpfr_t x_;
};

BigFloat operator+(const BigFloat& a, const BigFloat& b);
BigFloat operator-(const BigFloat& a, const BigFloat& b);
BigFloat operator*(const BigFloat& a, const BigFloat& b);
BigFloat operator/(const BigFloat& a, const BigFloat& b);
BigFloat operator*(const BigFloat& a, long s);

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat sin(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat atan2(const BigFloat& y, const BigFloat& x);
BigFloat floor(const BigFloat& x);
BigFloat max(const BigFloat& a, const BigFloat& b);
// Nearest integer, ties away from zero.
Integer round_to_integer(const BigFloat& x);
// Exact value of x as a rational.
Rational to_rational(const BigFloat& x);

struct BigComplex {
    BigFloat re;
    BigFloat im;

    explicit BigComplex(long bits = 64) : re(bits), im(bits) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
    static BigComplex from_double(long bits, double r, double i) { return {BigFloat(bits, r), BigFloat(bits, i)}; }

    long bits() const { return std::min(re.bits(), im.bits()); }
    int digits() const { return bits_to_digits(bits()); }

    BigComplex& operator+=(const BigComplex& o);
    BigComplex& operator-=(const BigComplex& o);
    BigComplex& operator*=(const BigComplex& o);
    BigComplex& operator*=(const BigFloat& s);
    BigComplex operator-() const { return {-re, -im}; }
    BigComplex conj() const { return {re, -im}; }
    BigFloat norm2() const;
    BigFloat abs() const;
    BigFloat max_abs_component() const;
};

BigComplex operator+(BigComplex a, const BigComplex& b);
BigComplex operator-(BigComplex a, const BigComplex& b);
BigComplex operator*(const BigComplex& a, const BigComplex& b);
BigComplex operator*(BigComplex a, const BigFloat& s);
BigComplex operator/(const BigComplex& a, const BigComplex& b);
BigComplex inverse(const BigComplex& a);
BigComplex exp(const BigComplex& z);
BigComplex pow(const BigComplex& z, long e);
// e^(i theta)
BigComplex expi(const BigFloat& theta);

} // namespace mfdr
