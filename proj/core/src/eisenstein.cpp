#include "mfdr/eisenstein.hpp"

#include "mfdr/errors.hpp"

#include <mutex>
#include <string>
#include <vector>

namespace mfdr {

namespace {

std::mutex bernoulli_mutex;
std::vector<Rational> bernoulli_cache{Rational(1)};

} // namespace

Rational bernoulli(int k)
{
    if (k < 2 || k % 2 != 0)
        throw DomainError("bernoulli: index must be even and >= 2, got " + std::to_string(k));
    std::lock_guard<std::mutex> lock(bernoulli_mutex);
    auto& b = bernoulli_cache;
    // sum_{j=0}^{n} C(n+1, j) B_j = 0
    for (int n = static_cast<int>(b.size()); n <= k; ++n) {
        Rational acc = 0;
        for (int j = 0; j < n; ++j)
            if (b[static_cast<size_t>(j)] != 0)
                acc += Rational(binomial(n + 1, j)) * b[static_cast<size_t>(j)];
        b.push_back(-acc / Rational(n + 1));
    }
    return b[static_cast<size_t>(k)];
}

Integer divisor_sigma(unsigned p, long m)
{
    if (m <= 0)
        throw DomainError("divisor_sigma: m must be positive");
    Integer total = 0, t;
    for (long d = 1; d * d <= m; ++d) {
        if (m % d != 0)
            continue;
        mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(d), p);
        total += t;
        long e = m / d;
        if (e != d) {
            mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(e), p);
            total += t;
        }
    }
    return total;
}

QSeries eisenstein(int k, int trunc, bool normalized)
{
    if (k < 2 || k % 2 != 0)
        throw DomainError("eisenstein: weight must be even and >= 2, got " + std::to_string(k));
    if (trunc < 1)
        throw WindowError("eisenstein: trunc must be >= 1");
    std::vector<Rational> c(static_cast<size_t>(trunc));
    Rational bk = bernoulli(k);
    c[0] = -bk / Rational(2 * k);
    for (int m = 1; m < trunc; ++m)
        c[static_cast<size_t>(m)] = Rational(divisor_sigma(static_cast<unsigned>(k - 1), m));
    QSeries g = QSeries::from_coeffs(0, std::move(c), trunc);
    if (normalized)
        g *= Rational(-2 * k) / bk;
    return g;
}

namespace {

QSeries delta_product(int trunc)
{
    // prod_{n>=1} (1-q^n)^24 to trunc-1, then shift by q
    int len = trunc - 1;
    std::vector<Integer> p(static_cast<size_t>(std::max(len, 1)), 0);
    p[0] = 1;
    for (int n = 1; n < len; ++n) {
        for (int rep = 0; rep < 24; ++rep) {
            for (int m = len - 1; m >= n; --m)
                p[static_cast<size_t>(m)] -= p[static_cast<size_t>(m - n)];
        }
    }
    std::vector<Rational> c(p.size());
    for (size_t i = 0; i < p.size(); ++i)
        c[i] = Rational(p[i]);
    return QSeries::from_coeffs(1, std::move(c), trunc);
}

QSeries delta_eisenstein(int trunc)
{
    QSeries e4 = eisenstein(4, trunc, true);
    QSeries e6 = eisenstein(6, trunc, true);
    return (e4 * e4 * e4 - e6 * e6) * frac(1, 1728);
}

} // namespace

QSeries delta_q(int trunc, DeltaRoute route)
{
    if (trunc < 2)
        throw WindowError("delta_q: trunc must be >= 2");
    return route == DeltaRoute::product ? delta_product(trunc) : delta_eisenstein(trunc);
}

QSeries delta_q_checked(int trunc)
{
    QSeries a = delta_q(trunc, DeltaRoute::product);
    QSeries b = delta_q(trunc, DeltaRoute::eisenstein);
    if (a != b)
        throw InternalError("delta_q: product and Eisenstein routes disagree");
    return a;
}

Integer ramanujan_tau(long m)
{
    if (m <= 0)
        throw DomainError("ramanujan_tau: m must be positive");
    return delta_q(static_cast<int>(m) + 1).coeff(static_cast<int>(m)).get_num();
}

} // namespace mfdr
