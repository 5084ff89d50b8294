#include "mfdr/periods.hpp"

#include "mfdr/errors.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <string>

namespace mfdr {

ComplexPoly ComplexPoly::zero(int degree, long bits)
{
    ComplexPoly p;
    p.degree = degree;
    p.coeffs.assign(static_cast<size_t>(degree + 1), BigComplex(bits));
    return p;
}

BigFloat ComplexPoly::max_norm() const
{
    BigFloat m(coeffs.empty() ? 64 : coeffs.front().bits());
    for (const auto& c : coeffs)
        m = max(m, c.max_abs_component());
    return m;
}

ComplexPoly operator+(const ComplexPoly& x, const ComplexPoly& y)
{
    if (x.degree != y.degree)
        throw DomainError("adding polynomials of different degree");
    ComplexPoly r = x;
    for (size_t j = 0; j < r.coeffs.size(); ++j)
        r.coeffs[j] += y.coeffs[j];
    return r;
}

ComplexPoly operator-(const ComplexPoly& x, const ComplexPoly& y)
{
    if (x.degree != y.degree)
        throw DomainError("subtracting polynomials of different degree");
    ComplexPoly r = x;
    for (size_t j = 0; j < r.coeffs.size(); ++j)
        r.coeffs[j] -= y.coeffs[j];
    return r;
}

namespace {

// coefficients of (p a + q b)^e as a vector indexed by the power of a
std::vector<Integer> binomial_power(long p, long q, int e)
{
    std::vector<Integer> out(static_cast<size_t>(e + 1), 0);
    Integer pp, qq;
    for (int i = 0; i <= e; ++i) {
        mpz_set_si(pp.get_mpz_t(), p);
        mpz_pow_ui(pp.get_mpz_t(), pp.get_mpz_t(), static_cast<unsigned long>(i));
        mpz_set_si(qq.get_mpz_t(), q);
        mpz_pow_ui(qq.get_mpz_t(), qq.get_mpz_t(), static_cast<unsigned long>(e - i));
        out[static_cast<size_t>(i)] = binomial(e, i) * pp * qq;
    }
    return out;
}

std::vector<Integer> poly_mul(const std::vector<Integer>& x, const std::vector<Integer>& y)
{
    std::vector<Integer> out(x.size() + y.size() - 1, 0);
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = 0; j < y.size(); ++j)
            out[i + j] += x[i] * y[j];
    return out;
}

BigComplex with_bits(const BigComplex& z, long bits)
{
    BigComplex r(bits);
    mpfr_set(r.re.raw(), z.re.raw(), MPFR_RNDN);
    mpfr_set(r.im.raw(), z.im.raw(), MPFR_RNDN);
    return r;
}

} // namespace

ComplexPoly act(const SL2Mat& g, const ComplexPoly& p)
{
    int n = p.degree;
    long bits = p.coeffs.empty() ? 64 : p.coeffs.front().bits();
    ComplexPoly out = ComplexPoly::zero(n, bits);
    for (int j = 0; j <= n; ++j) {
        const BigComplex& c = p.coeffs[static_cast<size_t>(j)];
        if (c.re.is_zero() && c.im.is_zero())
            continue;
        // a^j b^(n-j) -> (g.a a - g.c b)^j (-g.b a + g.d b)^(n-j)
        auto image = poly_mul(binomial_power(g.a, -g.c, j), binomial_power(-g.b, g.d, n - j));
        for (int i = 0; i <= n; ++i) {
            const Integer& m = image[static_cast<size_t>(i)];
            if (m == 0)
                continue;
            out.coeffs[static_cast<size_t>(i)] += c * BigFloat(bits, m);
        }
    }
    return out;
}

const GaussLegendre& gauss_legendre(int m, long bits)
{
    static std::mutex mutex;
    static std::map<std::pair<int, long>, std::unique_ptr<GaussLegendre>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto& slot = cache[{m, bits}];
    if (slot)
        return *slot;
    auto gl = std::make_unique<GaussLegendre>();
    BigFloat one(bits, 1L), two(bits, 2L);
    BigFloat eps(bits, std::ldexp(1.0, -static_cast<int>(bits) + 6));
    for (int i = 1; i <= m; ++i) {
        BigFloat x(bits, std::cos(M_PI * (i - 0.25) / (m + 0.5)));
        BigFloat dp(bits);
        for (int iter = 0; iter < 100; ++iter) {
            BigFloat p0 = one, p1 = x;
            for (int k = 2; k <= m; ++k) {
                BigFloat p2 = (x * p1 * static_cast<long>(2 * k - 1) - p0 * static_cast<long>(k - 1)) / BigFloat(bits, static_cast<long>(k));
                p0 = std::move(p1);
                p1 = std::move(p2);
            }
            // P_m = p1, P_{m-1} = p0
            dp = (x * p1 - p0) * static_cast<long>(m) / (x * x - one);
            BigFloat dx = p1 / dp;
            x -= dx;
            if (abs(dx) < eps && iter > 0)
                break;
        }
        // derivative at the converged node
        BigFloat p0 = one, p1 = x;
        for (int k = 2; k <= m; ++k) {
            BigFloat p2 = (x * p1 * static_cast<long>(2 * k - 1) - p0 * static_cast<long>(k - 1)) / BigFloat(bits, static_cast<long>(k));
            p0 = std::move(p1);
            p1 = std::move(p2);
        }
        dp = (x * p1 - p0) * static_cast<long>(m) / (x * x - one);
        gl->nodes.push_back(x);
        gl->weights.push_back(two / ((one - x * x) * dp * dp));
    }
    slot = std::move(gl);
    return *slot;
}

ComplexPoly path_integral(const FormEvaluator& f, const BigComplex& from_in, const BigComplex& to_in,
                          const QuadratureOptions& opts)
{
    int n = f.weight() - 2;
    if (n < 0)
        throw DomainError("path_integral: weight must be >= 2");
    long bits = f.bits();
    BigComplex from = with_bits(from_in, bits), to = with_bits(to_in, bits);
    ComplexPoly out = ComplexPoly::zero(n, bits);
    BigComplex dz = to - from;
    if (dz.re.is_zero() && dz.im.is_zero())
        return out;

    // the chord meets Im z = 0 on the line alpha s + beta eta + gamma = 0 in the s-plane
    double alpha = dz.im.to_double(), beta = dz.re.to_double(), gamma = from.im.to_double();
    double scale = std::hypot(alpha, beta);
    auto dist = [&](double s) { return std::abs(alpha * s + gamma) / scale; };
    std::vector<std::pair<double, double>> pieces, stack{{0.0, 1.0}};
    while (!stack.empty()) {
        auto [a, b] = stack.back();
        stack.pop_back();
        double half = (b - a) / 2;
        if (half * opts.spacing > std::min(dist(a), dist(b))) {
            double mid = (a + b) / 2;
            stack.emplace_back(mid, b);
            stack.emplace_back(a, mid);
            if (pieces.size() + stack.size() > static_cast<size_t>(opts.max_pieces))
                throw ConvergenceError("path_integral: subdivision budget exhausted");
            continue;
        }
        for (int r = 0; r < opts.refine; ++r)
            pieces.emplace_back(a + (b - a) * r / opts.refine, a + (b - a) * (r + 1) / opts.refine);
    }

    int digits = bits_to_digits(bits);
    int m = static_cast<int>(std::ceil((digits + 10) / 1.5)) + 2;
    const GaussLegendre& gl = gauss_legendre(m, bits);

    std::vector<BigComplex> moments(static_cast<size_t>(n + 1), BigComplex(bits));
    for (auto [a, b] : pieces) {
        // a, b are dyadic, so they are exact in BigFloat
        BigFloat mid(bits, (a + b) / 2), half(bits, (b - a) / 2);
        for (size_t i = 0; i < gl.nodes.size(); ++i) {
            BigFloat s = mid + half * gl.nodes[i];
            BigComplex z = from + dz * s;
            BigComplex val = f(z) * dz * (half * gl.weights[i]);
            for (int j = 0; j <= n; ++j) {
                moments[static_cast<size_t>(j)] += val;
                if (j < n)
                    val = val * z;
            }
        }
    }
    // (2 pi i)^(n+1) C(n, j) (-1)^(n-j) int f z^j dz
    BigComplex two_pi_i{BigFloat(bits), BigFloat::pi(bits) * 2L};
    BigComplex factor = pow(two_pi_i, n + 1);
    for (int j = 0; j <= n; ++j) {
        Integer c = binomial(n, j);
        if ((n - j) % 2 != 0)
            c = -c;
        out.coeffs[static_cast<size_t>(j)] = moments[static_cast<size_t>(j)] * factor * BigFloat(bits, c);
    }
    return out;
}

namespace {

long working_bits(int prec, const QuadratureOptions& opts)
{
    if (prec < 1)
        throw DomainError("precision must be positive");
    return digits_to_bits(prec + opts.guard_digits);
}

ComplexPoly cocycle_with(const FormEvaluator& ev, const SL2Mat& g, const BigComplex& z0, const QuadratureOptions& opts)
{
    BigComplex z = with_bits(z0, ev.bits());
    return path_integral(ev, g.inverse().act(z), z, opts);
}

} // namespace

ComplexPoly eichler_cocycle(const OXElement& f, const SL2Mat& g, const BigComplex& z0, int prec,
                            const QuadratureOptions& opts)
{
    FormEvaluator ev(f, working_bits(prec, opts));
    return cocycle_with(ev, g, z0, opts);
}

BigFloat cocycle_defect(const OXElement& f, const SL2Mat& g, const SL2Mat& h, const BigComplex& z0, int prec,
                        const QuadratureOptions& opts)
{
    FormEvaluator ev(f, working_bits(prec, opts));
    ComplexPoly cg = cocycle_with(ev, g, z0, opts);
    ComplexPoly ch = cocycle_with(ev, h, z0, opts);
    ComplexPoly cgh = cocycle_with(ev, g * h, z0, opts);
    return (cgh - act(h.inverse(), cg) - ch).max_norm();
}

BigFloat basepoint_coboundary_defect(const OXElement& f, const SL2Mat& g, const BigComplex& z0,
                                     const BigComplex& z1, int prec, const QuadratureOptions& opts)
{
    FormEvaluator ev(f, working_bits(prec, opts));
    ComplexPoly c0 = cocycle_with(ev, g, z0, opts);
    ComplexPoly c1 = cocycle_with(ev, g, z1, opts);
    ComplexPoly v = path_integral(ev, z1, z0, opts);
    return ((c0 - c1) - (v - act(g.inverse(), v))).max_norm();
}

namespace {

ComplexPoly normalized_part(const ComplexPoly& full, int parity)
{
    long bits = full.coeffs.front().bits();
    ComplexPoly part = ComplexPoly::zero(full.degree, bits);
    for (int j = parity; j <= full.degree; j += 2)
        part.coeffs[static_cast<size_t>(j)] = full.coeffs[static_cast<size_t>(j)];
    BigFloat top = part.max_norm();
    if (top.is_zero())
        return part;
    BigFloat floor_value = top * BigFloat(bits, std::pow(10.0, -bits_to_digits(bits) / 2.0));
    for (int j = parity; j <= full.degree; j += 2) {
        const BigComplex& lead = part.coeffs[static_cast<size_t>(j)];
        if (lead.max_abs_component() > floor_value) {
            BigComplex inv = inverse(lead);
            for (auto& c : part.coeffs)
                c = c * inv;
            return part;
        }
    }
    return part;
}

} // namespace

PeriodPolynomial period_polynomial(const OXElement& f, int prec, const QuadratureOptions& opts)
{
    if (f.weight() < 2)
        throw DomainError("period_polynomial: weight must be >= 2");
    if (!f.is_zero() && cusp_order(f) < 1)
        throw DomainError("period_polynomial: input is not a cusp form");
    long bits = working_bits(prec, opts);
    FormEvaluator ev(f, bits);
    int n = f.weight() - 2;
    int digits = bits_to_digits(bits);
    // tail beyond i H, bounded from the exact coefficients |a_m| e^{-2 pi m H}
    QSeries fs = expand(f, 60);
    auto log10_bound = [&](double h) {
        double best = -1e300, acc = 0.0;
        for (int m = fs.valuation(); m < fs.trunc(); ++m) {
            if (fs.coeff(m) == 0)
                continue;
            double l = std::log10(std::abs(fs.coeff(m).get_d())) - 2.0 * M_PI * m * h / std::log(10.0);
            if (best == -1e300) {
                best = l;
                acc = 1.0;
            } else {
                acc += std::pow(10.0, l - best);
            }
        }
        return best + std::log10(acc);
    };
    double height = 2.0;
    for (;; height += 1.0) {
        double log_tail = log10_bound(height) + n * std::log10(2.0 * height) + n * std::log10(2.0 * M_PI);
        if (fs.is_zero() || log_tail < -(digits + 5))
            break;
        if (height > 1e4)
            throw ConvergenceError("period_polynomial: tail height budget exhausted");
    }
    BigComplex probe = BigComplex::from_double(bits, 0.0, height);
    BigComplex i_pt = BigComplex::from_double(bits, 0.0, 1.0);
    ComplexPoly upper = path_integral(ev, i_pt, probe, opts);
    // int_0^i is the S-image of -int_i^{i inf}
    PeriodPolynomial out;
    out.full = upper - act(SL2Mat::S(), upper);
    out.even = normalized_part(out.full, 0);
    out.odd = normalized_part(out.full, 1);
    return out;
}

std::optional<Rational> rational_reconstruct(const BigFloat& x, const Integer& max_den, int prec)
{
    Rational target = to_rational(x);
    Integer ten_pow;
    mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(std::max(prec / 2, 0)));
    Rational tol(Integer(1), ten_pow);
    Integer h1 = 1, h2 = 0, k1 = 0, k2 = 1;
    Rational y = target;
    for (int iter = 0; iter < 10000; ++iter) {
        Integer a;
        mpz_fdiv_q(a.get_mpz_t(), y.get_num_mpz_t(), y.get_den_mpz_t());
        Integer h = a * h1 + h2, k = a * k1 + k2;
        if (k > max_den)
            break;
        Rational cand(h, k);
        cand.canonicalize();
        Rational err = target - cand;
        if (abs(err) < tol)
            return cand;
        Rational frac = y - Rational(a);
        if (frac == 0)
            break;
        y = 1 / frac;
        h2 = h1;
        h1 = h;
        k2 = k1;
        k1 = k;
    }
    return std::nullopt;
}

std::optional<Rational> rational_reconstruct(const BigComplex& x, const Integer& max_den, int prec)
{
    Rational im = to_rational(x.im);
    Integer ten_pow;
    mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(std::max(prec / 2, 0)));
    if (abs(im) >= frac(Integer(1), ten_pow))
        return std::nullopt;
    return rational_reconstruct(x.re, max_den, prec);
}

} // namespace mfdr
