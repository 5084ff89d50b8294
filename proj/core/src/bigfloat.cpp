#include "mfdr/bigfloat.hpp"

#include "mfdr/errors.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace mfdr {

long digits_to_bits(int digits)
{
    return static_cast<long>(std::ceil(digits * 3.3219280948873623)) + 8;
}

int bits_to_digits(long bits)
{
    return static_cast<int>(std::floor((bits - 8) / 3.3219280948873623));
}

BigFloat::BigFloat(long bits)
{
    mpfr_init2(x_, bits);
    mpfr_set_zero(x_, 1);
}

BigFloat::BigFloat(long bits, double x)
{
    mpfr_init2(x_, bits);
    mpfr_set_d(x_, x, MPFR_RNDN);
}

BigFloat::BigFloat(long bits, long x)
{
    mpfr_init2(x_, bits);
    mpfr_set_si(x_, x, MPFR_RNDN);
}

BigFloat::BigFloat(long bits, const Rational& x)
{
    mpfr_init2(x_, bits);
    mpfr_set_q(x_, x.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(long bits, const Integer& x)
{
    mpfr_init2(x_, bits);
    mpfr_set_z(x_, x.get_mpz_t(), MPFR_RNDN);
}

BigFloat::BigFloat(long bits, const std::string& decimal)
{
    mpfr_init2(x_, bits);
    if (mpfr_set_str(x_, decimal.c_str(), 10, MPFR_RNDN) != 0) {
        mpfr_clear(x_);
        throw DomainError("malformed decimal '" + decimal + "'");
    }
}

BigFloat::BigFloat(const BigFloat& o)
{
    mpfr_init2(x_, mpfr_get_prec(o.x_));
    mpfr_set(x_, o.x_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept
{
    mpfr_init2(x_, mpfr_get_prec(o.x_));
    mpfr_swap(x_, o.x_);
}

BigFloat& BigFloat::operator=(const BigFloat& o)
{
    if (this != &o) {
        mpfr_set_prec(x_, mpfr_get_prec(o.x_));
        mpfr_set(x_, o.x_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept
{
    mpfr_swap(x_, o.x_);
    return *this;
}

BigFloat::~BigFloat()
{
    mpfr_clear(x_);
}

BigFloat BigFloat::pi(long bits)
{
    BigFloat r(bits);
    mpfr_const_pi(r.x_, MPFR_RNDN);
    return r;
}

namespace {

long min_bits(const BigFloat& a, const BigFloat& b)
{
    return std::min(a.bits(), b.bits());
}

} // namespace

BigFloat& BigFloat::operator+=(const BigFloat& o)
{
    if (o.bits() < bits())
        mpfr_prec_round(x_, o.bits(), MPFR_RNDN);
    mpfr_add(x_, x_, o.x_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& o)
{
    if (o.bits() < bits())
        mpfr_prec_round(x_, o.bits(), MPFR_RNDN);
    mpfr_sub(x_, x_, o.x_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& o)
{
    if (o.bits() < bits())
        mpfr_prec_round(x_, o.bits(), MPFR_RNDN);
    mpfr_mul(x_, x_, o.x_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& o)
{
    if (o.bits() < bits())
        mpfr_prec_round(x_, o.bits(), MPFR_RNDN);
    mpfr_div(x_, x_, o.x_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator*=(long s)
{
    mpfr_mul_si(x_, x_, s, MPFR_RNDN);
    return *this;
}

BigFloat BigFloat::operator-() const
{
    BigFloat r(*this);
    mpfr_neg(r.x_, r.x_, MPFR_RNDN);
    return r;
}

double BigFloat::to_double() const
{
    return mpfr_get_d(x_, MPFR_RNDN);
}

std::string BigFloat::to_string(int digits) const
{
    if (mpfr_zero_p(x_))
        return "0";
    mpfr_exp_t e;
    char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(std::max(digits, 1)), x_, MPFR_RNDN);
    std::string m(s);
    mpfr_free_str(s);
    std::string sign;
    if (!m.empty() && m[0] == '-') {
        sign = "-";
        m.erase(0, 1);
    }
    // 0.ddd x 10^e  ->  d.dd e(e-1)
    std::string out = sign + m.substr(0, 1);
    if (m.size() > 1)
        out += "." + m.substr(1);
    out += "e" + std::to_string(static_cast<long>(e) - 1);
    return out;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b)
{
    BigFloat r(min_bits(a, b));
    mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b)
{
    BigFloat r(min_bits(a, b));
    mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b)
{
    BigFloat r(min_bits(a, b));
    mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b)
{
    BigFloat r(min_bits(a, b));
    mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

BigFloat operator*(const BigFloat& a, long s)
{
    BigFloat r(a);
    r *= s;
    return r;
}

#define MFDR_UNARY(name, fn)                          \
    BigFloat name(const BigFloat& x)                  \
    {                                                 \
        BigFloat r(x.bits());                         \
        fn(r.raw(), x.raw(), MPFR_RNDN);              \
        return r;                                     \
    }

MFDR_UNARY(abs, mpfr_abs)
MFDR_UNARY(sqrt, mpfr_sqrt)
MFDR_UNARY(exp, mpfr_exp)
MFDR_UNARY(log, mpfr_log)
MFDR_UNARY(sin, mpfr_sin)
MFDR_UNARY(cos, mpfr_cos)

#undef MFDR_UNARY

BigFloat atan2(const BigFloat& y, const BigFloat& x)
{
    BigFloat r(min_bits(y, x));
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
}

BigFloat floor(const BigFloat& x)
{
    BigFloat r(x.bits());
    mpfr_floor(r.raw(), x.raw());
    return r;
}

BigFloat max(const BigFloat& a, const BigFloat& b)
{
    return a < b ? b : a;
}

Integer round_to_integer(const BigFloat& x)
{
    Integer z;
    mpfr_get_z(z.get_mpz_t(), x.raw(), MPFR_RNDNA);
    return z;
}

Rational to_rational(const BigFloat& x)
{
    Integer m;
    mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), x.raw());
    Rational r(m);
    if (e >= 0)
        mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(e));
    else
        mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(-e));
    return r;
}

BigComplex& BigComplex::operator+=(const BigComplex& o)
{
    re += o.re;
    im += o.im;
    return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& o)
{
    re -= o.re;
    im -= o.im;
    return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& o)
{
    *this = *this * o;
    return *this;
}

BigComplex& BigComplex::operator*=(const BigFloat& s)
{
    re *= s;
    im *= s;
    return *this;
}

BigFloat BigComplex::norm2() const
{
    return re * re + im * im;
}

BigFloat BigComplex::abs() const
{
    return sqrt(norm2());
}

BigFloat BigComplex::max_abs_component() const
{
    return max(mfdr::abs(re), mfdr::abs(im));
}

BigComplex operator+(BigComplex a, const BigComplex& b)
{
    a += b;
    return a;
}

BigComplex operator-(BigComplex a, const BigComplex& b)
{
    a -= b;
    return a;
}

BigComplex operator*(const BigComplex& a, const BigComplex& b)
{
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

BigComplex operator*(BigComplex a, const BigFloat& s)
{
    a *= s;
    return a;
}

BigComplex inverse(const BigComplex& a)
{
    BigFloat n = a.norm2();
    if (n.is_zero())
        throw DomainError("division by complex zero");
    return {a.re / n, -a.im / n};
}

BigComplex operator/(const BigComplex& a, const BigComplex& b)
{
    return a * inverse(b);
}

BigComplex expi(const BigFloat& theta)
{
    BigFloat s(theta.bits()), c(theta.bits());
    mpfr_sin_cos(s.raw(), c.raw(), theta.raw(), MPFR_RNDN);
    return {c, s};
}

BigComplex exp(const BigComplex& z)
{
    return expi(z.im) * exp(z.re);
}

BigComplex pow(const BigComplex& z, long e)
{
    if (e < 0)
        return inverse(pow(z, -e));
    BigComplex result{BigFloat(z.bits(), 1L), BigFloat(z.bits())};
    BigComplex base = z;
    while (e > 0) {
        if (e & 1)
            result *= base;
        e >>= 1;
        if (e)
            base *= base;
    }
    return result;
}

} // namespace mfdr
