#include "mfdr/evaluate.hpp"

#include "mfdr/eisenstein.hpp"
#include "mfdr/errors.hpp"

#include <cmath>
#include <string>

namespace mfdr {

SL2Mat SL2Mat::make(long a, long b, long c, long d)
{
    if (a * d - b * c != 1)
        throw DomainError("matrix (" + std::to_string(a) + "," + std::to_string(b) + ";" + std::to_string(c) + ","
                          + std::to_string(d) + ") does not have determinant 1");
    return {a, b, c, d};
}

SL2Mat operator*(const SL2Mat& x, const SL2Mat& y)
{
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

BigComplex SL2Mat::act(const BigComplex& z) const
{
    long bits = z.bits();
    BigComplex num = z * BigFloat(bits, a);
    num.re += BigFloat(bits, b);
    BigComplex den = z * BigFloat(bits, c);
    den.re += BigFloat(bits, d);
    return num / den;
}

namespace {

// log10 of sum_{m > M} C m^g r^m, geometric estimate
double tail_log10(double log10_c, double g, double r, int m)
{
    double ratio = r * std::pow((m + 2.0) / (m + 1.0), g);
    if (ratio >= 1.0)
        return 1e300;
    return log10_c + g * std::log10(m + 1.0) + (m + 1.0) * std::log10(r) - std::log10(1.0 - ratio);
}

BigComplex q_of(const BigComplex& tau, const BigFloat& two_pi)
{
    // exp(2 pi i tau) = exp(-2 pi im) e^{2 pi i re}
    return expi(two_pi * tau.re) * exp(-(two_pi * tau.im));
}

} // namespace

FormEvaluator::FormEvaluator(OXElement f, long bits)
    : f_(std::move(f)), bits_(bits), two_pi_(BigFloat::pi(bits) * 2L)
{
    int terms = terms_needed(std::exp(-2.0 * M_PI * kMinDirectHeight));
    QSeries delta = delta_q(terms + 1);
    for (int m = 0; m <= terms; ++m) {
        if (m == 0) {
            u_coeffs_.emplace_back(bits, frac(1, 12));
            v_coeffs_.emplace_back(bits, frac(-1, 216));
            delta_coeffs_.emplace_back(bits, 0L);
            continue;
        }
        u_coeffs_.emplace_back(bits, Rational(divisor_sigma(3, m) * 20));
        v_coeffs_.emplace_back(bits, frac(divisor_sigma(5, m) * 7, 3));
        delta_coeffs_.emplace_back(bits, delta.coeff(m));
    }
    for (const auto& [k, c] : f_.numerator().terms())
        terms_.emplace_back(k, BigFloat(bits, c));
}

int FormEvaluator::terms_needed(double abs_q) const
{
    // |20 sigma_3(m)| <= 25 m^3, |7/3 sigma_5(m)| <= 2.5 m^5, |tau(m)| <= 2 m^6
    double digits = bits_to_digits(bits_) + 5;
    for (int m = 1; m < 100000; ++m)
        if (tail_log10(std::log10(25.0), 6.0, abs_q, m) < -digits)
            return m;
    throw ConvergenceError("q-series evaluation: too many terms needed");
}

BigComplex FormEvaluator::sum_series(const std::vector<BigFloat>& c, const BigFloat& c0, const BigComplex& q,
                                     int terms) const
{
    BigComplex s{c[static_cast<size_t>(terms)], BigFloat(bits_)};
    for (int m = terms - 1; m >= 1; --m) {
        s = s * q;
        s.re += c[static_cast<size_t>(m)];
    }
    s = s * q;
    s.re += c0;
    return s;
}

BigComplex FormEvaluator::direct(const BigComplex& w) const
{
    double h = w.im.to_double();
    if (h < kMinDirectHeight)
        throw DomainError("direct q-series evaluation below height " + std::to_string(kMinDirectHeight));
    BigComplex q = q_of(w, two_pi_);
    int terms = terms_needed(std::exp(-2.0 * M_PI * h));
    terms = std::min<int>(terms, static_cast<int>(u_coeffs_.size()) - 1);
    BigComplex zero(bits_);
    if (f_.is_zero())
        return zero;
    BigComplex u = sum_series(u_coeffs_, u_coeffs_[0], q, terms);
    BigComplex v = sum_series(v_coeffs_, v_coeffs_[0], q, terms);
    const auto& num = f_.numerator();
    std::vector<BigComplex> up{BigComplex{BigFloat(bits_, 1L), BigFloat(bits_)}};
    std::vector<BigComplex> vp = up;
    for (int i = 1; i <= num.max_u_degree(); ++i)
        up.push_back(up.back() * u);
    for (int i = 1; i <= num.max_v_degree(); ++i)
        vp.push_back(vp.back() * v);
    BigComplex acc = zero;
    for (const auto& [k, c] : terms_)
        acc += (up[static_cast<size_t>(k.first)] * vp[static_cast<size_t>(k.second)]) * c;
    if (f_.denom_pow() > 0) {
        BigComplex d = sum_series(delta_coeffs_, delta_coeffs_[0], q, terms);
        acc = acc / pow(d, f_.denom_pow());
    }
    return acc;
}

FormEvaluator::Reduced FormEvaluator::reduce(const BigComplex& z)
{
    if (z.im.sign() <= 0)
        throw DomainError("point is not in the upper half-plane");
    long bits = z.bits();
    BigComplex w = z;
    SL2Mat r = SL2Mat::identity();
    BigFloat one(bits, 1L);
    BigFloat slack(bits, std::ldexp(1.0, -static_cast<int>(std::min(bits / 2, 400L))));
    for (int iter = 0; iter < 10000; ++iter) {
        Integer n = round_to_integer(w.re);
        if (n != 0) {
            if (!n.fits_slong_p())
                throw ConvergenceError("fundamental-domain reduction overflow");
            long k = n.get_si();
            w.re -= BigFloat(bits, k);
            r = SL2Mat{1, -k, 0, 1} * r;
        }
        if (w.norm2() < one - slack) {
            w = SL2Mat::S().act(w);
            r = SL2Mat::S() * r;
            continue;
        }
        return {w, r};
    }
    throw ConvergenceError("fundamental-domain reduction did not terminate");
}

BigComplex FormEvaluator::operator()(const BigComplex& z) const
{
    Reduced red = reduce(z);
    BigComplex fw = direct(red.w);
    // f(w) = (c z + d)^k f(z)
    BigComplex j = z * BigFloat(bits_, red.r.c);
    j.re += BigFloat(bits_, red.r.d);
    return fw / pow(j, f_.weight());
}

BigComplex eval_form(const OXElement& f, const BigComplex& tau, int prec, const EvalOptions& opts)
{
    if (tau.im.to_double() < opts.tau_min)
        throw DomainError("eval_form: im(tau) below tau_min");
    FormEvaluator ev(f, digits_to_bits(prec + 10));
    return ev.direct(tau);
}

BigComplex eval_form(const QSeries& f, const BigComplex& tau, int prec, const EvalOptions& opts)
{
    double h = tau.im.to_double();
    if (h < opts.tau_min)
        throw DomainError("eval_form: im(tau) below tau_min");
    long bits = digits_to_bits(prec + 10);
    BigComplex zero(bits);
    if (f.is_zero())
        return zero;
    double r = std::exp(-2.0 * M_PI * h);
    // A = max |a_m| / m^g over the known positive exponents
    double log_a = -1e300;
    for (int m = std::max(1, f.valuation()); m < f.trunc(); ++m) {
        Rational a = f.coeff(m);
        if (a == 0)
            continue;
        double la = std::log10(std::abs(mpq_get_d(a.get_mpq_t()))) - opts.growth_exponent * std::log10(m);
        log_a = std::max(log_a, la);
    }
    if (log_a > -1e299 && f.trunc() >= 1) {
        if (f.trunc() - 1 > opts.max_terms
            || tail_log10(log_a, opts.growth_exponent, r, f.trunc() - 1) >= -prec)
            throw ConvergenceError("eval_form: series window too short for 10^-" + std::to_string(prec));
    }
    BigFloat two_pi = BigFloat::pi(bits) * 2L;
    BigComplex q = q_of(tau, two_pi);
    BigComplex acc = zero;
    BigComplex qm = pow(q, f.valuation());
    for (int m = f.valuation(); m < f.trunc(); ++m) {
        Rational a = f.coeff(m);
        if (a != 0)
            acc += qm * BigFloat(bits, a);
        qm = qm * q;
    }
    return acc;
}

} // namespace mfdr
