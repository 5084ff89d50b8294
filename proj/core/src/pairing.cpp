#include "mfdr/pairing.hpp"

#include "mfdr/errors.hpp"

#include <algorithm>
#include <string>

namespace mfdr {

PairingValue bracket(const QSeries& f, const QSeries& g, int weight, bool strict)
{
    if (weight < 2)
        throw DomainError("bracket: weight must be >= 2");
    PairingValue out;
    out.value = 0;
    if (f.is_zero() || g.is_zero()) {
        if (strict && f.trunc() <= 0)
            throw WindowError("bracket: window of f does not reach q^0");
        return out;
    }
    if (strict && f.coeff(0) != 0)
        throw DomainError("bracket: first argument is not cuspidal (a_0 = " + to_string(f.coeff(0)) + ")");
    // terms with a_m b_{-m} != 0 have val(f) <= m <= -val(g)
    int lo = f.valuation(), hi = -g.valuation();
    if (lo > hi)
        return out;
    if (f.trunc() <= hi || g.trunc() <= -lo)
        throw WindowError("bracket: windows do not cover the principal parts of the pair");
    unsigned p = static_cast<unsigned>(weight - 1);
    for (int m = lo; m <= hi; ++m) {
        if (m == 0)
            continue;
        Rational a = f.coeff(m);
        if (a == 0)
            continue;
        Rational b = g.coeff(-m);
        if (b == 0)
            continue;
        Integer mp;
        mpz_ui_pow_ui(mp.get_mpz_t(), static_cast<unsigned long>(m < 0 ? -m : m), p);
        if (m < 0 && p % 2 == 1)
            mp = -mp;
        out.value += a * b / Rational(mp);
    }
    return out;
}

PairingValue pair_classes(const CohClass& c1, const CohClass& c2)
{
    if (c1.weight != c2.weight)
        throw DomainError("pair_classes: weight mismatch");
    if (c1.rep.coeff(0) != 0)
        throw DomainError("pair_classes: first class is not cuspidal");
    return bracket(c1.rep, c2.rep, c1.weight, true);
}

GramMatrix gram_matrix(int weight)
{
    int ell = dims(weight).ell;
    auto basis = drbasis(weight, ell + 1);
    GramMatrix g;
    g.weight = weight;
    for (int m = -ell; m <= ell; ++m) {
        g.cols.push_back(m);
        if (m != 0)
            g.rows.push_back(m);
    }
    for (int r : g.rows) {
        std::vector<Rational> row;
        for (int c : g.cols)
            row.push_back(pair_classes(basis[static_cast<size_t>(r + ell)], basis[static_cast<size_t>(c + ell)]).value);
        g.entries.push_back(std::move(row));
    }
    return g;
}

} // namespace mfdr
