#include "mfdr/qseries.hpp"

#include "mfdr/errors.hpp"

#include <algorithm>
#include <string>

namespace mfdr {

QSeries QSeries::zero(int trunc)
{
    QSeries s;
    s.valuation_ = trunc;
    s.trunc_ = trunc;
    return s;
}

QSeries QSeries::monomial(int m, const Rational& c, int trunc)
{
    if (m >= trunc || c == 0)
        return zero(trunc);
    QSeries s;
    s.valuation_ = m;
    s.trunc_ = trunc;
    s.coeffs_.assign(static_cast<size_t>(trunc - m), Rational(0));
    s.coeffs_[0] = c;
    return s;
}

QSeries QSeries::constant(const Rational& c, int trunc)
{
    return monomial(0, c, trunc);
}

QSeries QSeries::from_coeffs(int start, std::vector<Rational> coeffs, int trunc)
{
    QSeries s;
    if (start >= trunc) {
        return zero(trunc);
    }
    coeffs.resize(static_cast<size_t>(trunc - start), Rational(0));
    s.valuation_ = start;
    s.trunc_ = trunc;
    s.coeffs_ = std::move(coeffs);
    s.trim();
    return s;
}

void QSeries::trim()
{
    size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0)
        ++lead;
    if (lead == coeffs_.size()) {
        coeffs_.clear();
        valuation_ = trunc_;
        return;
    }
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
        valuation_ += static_cast<int>(lead);
    }
}

Rational QSeries::coeff(int m) const
{
    if (m >= trunc_)
        throw WindowError("coefficient of q^" + std::to_string(m) + " requested beyond trunc " + std::to_string(trunc_));
    if (m < valuation_)
        return 0;
    return coeffs_[static_cast<size_t>(m - valuation_)];
}

const Rational& QSeries::leading() const
{
    if (is_zero())
        throw DomainError("leading coefficient of the zero series");
    return coeffs_.front();
}

QSeries QSeries::truncated(int trunc) const
{
    if (trunc >= trunc_)
        return *this;
    if (trunc <= valuation_)
        return zero(trunc);
    QSeries s = *this;
    s.trunc_ = trunc;
    s.coeffs_.resize(static_cast<size_t>(trunc - valuation_));
    s.trim();
    return s;
}

QSeries QSeries::shifted(int k) const
{
    QSeries s = *this;
    s.valuation_ += k;
    s.trunc_ += k;
    return s;
}

QSeries QSeries::operator-() const
{
    QSeries s = *this;
    for (auto& c : s.coeffs_)
        c = -c;
    return s;
}

namespace {

void check_overlap(const QSeries& a, const QSeries& b, int trunc, const char* op)
{
    if (!a.is_zero() && !b.is_zero() && trunc <= std::min(a.valuation(), b.valuation()))
        throw WindowError(std::string("degenerate window in ") + op);
}

} // namespace

QSeries& QSeries::operator+=(const QSeries& o)
{
    int t = std::min(trunc_, o.trunc_);
    check_overlap(*this, o, t, "add");
    int v = std::min(valuation_, o.valuation_);
    if (v >= t) {
        *this = zero(t);
        return *this;
    }
    std::vector<Rational> out(static_cast<size_t>(t - v), Rational(0));
    for (int m = valuation_; m < std::min(trunc_, t); ++m)
        out[static_cast<size_t>(m - v)] = coeffs_[static_cast<size_t>(m - valuation_)];
    for (int m = o.valuation_; m < std::min(o.trunc_, t); ++m)
        out[static_cast<size_t>(m - v)] += o.coeffs_[static_cast<size_t>(m - o.valuation_)];
    *this = from_coeffs(v, std::move(out), t);
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& o)
{
    return *this += -o;
}

QSeries& QSeries::operator*=(const QSeries& o)
{
    *this = *this * o;
    return *this;
}

QSeries& QSeries::operator*=(const Rational& c)
{
    if (c == 0) {
        *this = zero(trunc_);
        return *this;
    }
    for (auto& x : coeffs_)
        x *= c;
    return *this;
}

QSeries operator+(QSeries a, const QSeries& b)
{
    a += b;
    return a;
}

QSeries operator-(QSeries a, const QSeries& b)
{
    a -= b;
    return a;
}

QSeries operator*(const QSeries& a, const QSeries& b)
{
    int t = std::min(a.valuation() + b.trunc(), b.valuation() + a.trunc());
    int v = a.valuation() + b.valuation();
    if (a.is_zero() || b.is_zero())
        return QSeries::zero(t);
    if (t <= v)
        throw WindowError("degenerate window in mul");
    const auto& x = a.dense();
    const auto& y = b.dense();
    std::vector<Rational> out(static_cast<size_t>(t - v), Rational(0));
    Rational tmp;
    for (size_t i = 0; i < x.size() && i < out.size(); ++i) {
        if (x[i] == 0)
            continue;
        size_t jmax = std::min(y.size(), out.size() - i);
        for (size_t j = 0; j < jmax; ++j) {
            if (y[j] == 0)
                continue;
            mpq_mul(tmp.get_mpq_t(), x[i].get_mpq_t(), y[j].get_mpq_t());
            out[i + j] += tmp;
        }
    }
    return QSeries::from_coeffs(v, std::move(out), t);
}

QSeries operator*(const Rational& c, QSeries a)
{
    a *= c;
    return a;
}

QSeries operator*(QSeries a, const Rational& c)
{
    a *= c;
    return a;
}

QSeries QSeries::inverse() const
{
    if (is_zero())
        throw DomainError("inverse of the zero series");
    size_t p = coeffs_.size();
    std::vector<Rational> b(p, Rational(0));
    Rational inv_lead = 1 / coeffs_[0];
    b[0] = inv_lead;
    Rational acc, tmp;
    for (size_t n = 1; n < p; ++n) {
        acc = 0;
        for (size_t i = 1; i <= n; ++i) {
            if (coeffs_[i] == 0)
                continue;
            mpq_mul(tmp.get_mpq_t(), coeffs_[i].get_mpq_t(), b[n - i].get_mpq_t());
            acc += tmp;
        }
        b[n] = -acc * inv_lead;
    }
    return from_coeffs(-valuation_, std::move(b), -valuation_ + static_cast<int>(p));
}

QSeries QSeries::pow(unsigned e) const
{
    if (e == 0)
        return constant(1, trunc_ - valuation_);
    QSeries result = *this;
    for (unsigned i = 1; i < e; ++i)
        result = result * *this;
    return result;
}

bool QSeries::operator==(const QSeries& o) const
{
    return valuation_ == o.valuation_ && trunc_ == o.trunc_ && coeffs_ == o.coeffs_;
}

bool QSeries::agrees_with(const QSeries& o) const
{
    int t = std::min(trunc_, o.trunc_);
    int v = std::min(valuation_, o.valuation_);
    for (int m = v; m < t; ++m)
        if (coeff(m) != o.coeff(m))
            return false;
    return true;
}

QSeries bol(const QSeries& a, unsigned p)
{
    if (a.is_zero())
        return a;
    std::vector<Rational> out = a.dense();
    Integer mp;
    for (size_t i = 0; i < out.size(); ++i) {
        long m = a.valuation() + static_cast<long>(i);
        if (m == 0) {
            out[i] = 0;
            continue;
        }
        mpz_ui_pow_ui(mp.get_mpz_t(), static_cast<unsigned long>(m < 0 ? -m : m), p);
        if (m < 0 && (p % 2 == 1))
            mp = -mp;
        out[i] *= mp;
    }
    return QSeries::from_coeffs(a.valuation(), std::move(out), a.trunc());
}

} // namespace mfdr
