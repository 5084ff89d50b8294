#include "mfdr/connection.hpp"

#include "mfdr/eisenstein.hpp"
#include "mfdr/errors.hpp"

#include <algorithm>
#include <string>

namespace mfdr {

AlgebraicSection AlgebraicSection::zero(int degree, int base_weight)
{
    if (degree < 0)
        throw DomainError("section degree must be >= 0");
    AlgebraicSection s;
    s.degree_ = degree;
    s.base_weight_ = base_weight;
    for (int j = 0; j <= degree; ++j)
        s.coeffs_.push_back(OXElement::zero(s.coeff_weight(j)));
    return s;
}

OXElement AlgebraicSection::at(int j) const
{
    if (j < 0 || j > degree_)
        return OXElement::zero(coeff_weight(j));
    return coeffs_[static_cast<size_t>(j)];
}

void AlgebraicSection::set(int j, const OXElement& f)
{
    if (j < 0 || j > degree_)
        throw DomainError("section index out of range");
    if (f.weight() != coeff_weight(j))
        throw GradingError("coefficient of S^" + std::to_string(j) + " T^" + std::to_string(degree_ - j)
                           + " must have weight " + std::to_string(coeff_weight(j)) + ", got "
                           + std::to_string(f.weight()));
    coeffs_[static_cast<size_t>(j)] = f;
}

AlgebraicSection& AlgebraicSection::operator+=(const AlgebraicSection& o)
{
    if (o.degree_ != degree_ || o.base_weight_ != base_weight_)
        throw GradingError("adding sections of different shape");
    for (int j = 0; j <= degree_; ++j)
        coeffs_[static_cast<size_t>(j)] += o.coeffs_[static_cast<size_t>(j)];
    return *this;
}

AlgebraicSection& AlgebraicSection::operator-=(const AlgebraicSection& o)
{
    if (o.degree_ != degree_ || o.base_weight_ != base_weight_)
        throw GradingError("subtracting sections of different shape");
    for (int j = 0; j <= degree_; ++j)
        coeffs_[static_cast<size_t>(j)] -= o.coeffs_[static_cast<size_t>(j)];
    return *this;
}

AlgebraicSection& AlgebraicSection::operator*=(const Rational& c)
{
    for (auto& f : coeffs_)
        f *= c;
    return *this;
}

bool AlgebraicSection::operator==(const AlgebraicSection& o) const
{
    return degree_ == o.degree_ && base_weight_ == o.base_weight_ && coeffs_ == o.coeffs_;
}

bool AlgebraicSection::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const OXElement& f) { return f.is_zero(); });
}

AlgebraicSection operator+(AlgebraicSection a, const AlgebraicSection& b)
{
    a += b;
    return a;
}

AlgebraicSection operator-(AlgebraicSection a, const AlgebraicSection& b)
{
    a -= b;
    return a;
}

SeriesSection::SeriesSection(int degree, int base_weight, Frame frame, std::vector<QSeries> coeffs)
    : degree_(degree), base_weight_(base_weight), frame_(frame), coeffs_(std::move(coeffs))
{
    if (degree < 0 || coeffs_.size() != static_cast<size_t>(degree + 1))
        throw DomainError("series section needs degree + 1 coefficients");
    trunc_ = coeffs_.front().trunc();
    for (const auto& c : coeffs_)
        trunc_ = std::min(trunc_, c.trunc());
    for (auto& c : coeffs_) {
        if (c.trunc() != trunc_) {
            window_adjusted_ = true;
            c = c.truncated(trunc_);
        }
    }
}

bool SeriesSection::operator==(const SeriesSection& o) const
{
    return degree_ == o.degree_ && base_weight_ == o.base_weight_ && frame_ == o.frame_ && coeffs_ == o.coeffs_;
}

NablaParts nabla_st(const AlgebraicSection& s)
{
    if (s.base_weight() != 0)
        throw GradingError("nabla_st expects a section of V_n (base weight 0)");
    int n = s.degree();
    NablaParts out{AlgebraicSection::zero(n, 2), AlgebraicSection::zero(n, 0)};
    OXElement u = OXElement::u();
    for (int j = 0; j <= n; ++j) {
        int k = n - j;
        OXElement w = theta(s.at(j));
        if (j >= 1)
            w += Rational(k + 1) * s.at(j - 1);
        if (j + 1 <= n)
            w -= frac(j + 1, 12) * (u * s.at(j + 1));
        out.omega.set(j, w);
        // psi: (m + j - k) f with m the weight of f
        OXElement f = s.at(j);
        out.psi.set(j, Rational(f.weight() + j - k) * f);
    }
    return out;
}

AlgebraicSection nabla_omega(const AlgebraicSection& s)
{
    NablaParts p = nabla_st(s);
    if (!p.psi.is_zero())
        throw InternalError("psi-component of the connection does not vanish on an invariant section");
    return p.omega;
}

SeriesSection expand_section(const AlgebraicSection& s, int trunc)
{
    std::vector<QSeries> c;
    for (const auto& f : s.coeffs())
        c.push_back(expand(f, trunc));
    return SeriesSection(s.degree(), s.base_weight(), Frame::ST, std::move(c));
}

QSeries gauge_series(int trunc)
{
    return eisenstein(2, trunc, true) * frac(1, 12);
}

namespace {

// F^i = sum_{j >= i} C(j, i) c^(j-i) f^j
SeriesSection change_frame(const SeriesSection& s, const Rational& sign, Frame target)
{
    int n = s.degree();
    int t = s.trunc();
    int depth = 0;
    for (const auto& f : s.coeffs())
        if (!f.is_zero())
            depth = std::max(depth, -f.valuation());
    QSeries c = sign * gauge_series(std::max(t + depth, 1));
    std::vector<QSeries> cpow{QSeries::constant(1, t + depth)};
    for (int i = 1; i <= n; ++i)
        cpow.push_back(cpow.back() * c);
    std::vector<QSeries> out;
    for (int i = 0; i <= n; ++i) {
        QSeries acc = QSeries::zero(t);
        for (int j = i; j <= n; ++j) {
            const QSeries& f = s.at(j);
            if (f.is_zero())
                continue;
            acc += Rational(binomial(j, i)) * (cpow[static_cast<size_t>(j - i)] * f);
        }
        out.push_back(acc.truncated(t));
    }
    return SeriesSection(n, s.base_weight(), target, std::move(out));
}

} // namespace

SeriesSection gauge_to_at(const SeriesSection& s)
{
    if (s.frame() != Frame::ST)
        throw DomainError("gauge_to_at expects an ST-frame section");
    return change_frame(s, Rational(1), Frame::AT);
}

SeriesSection gauge_to_at(const AlgebraicSection& s, int trunc)
{
    return gauge_to_at(expand_section(s, trunc));
}

SeriesSection gauge_to_st(const SeriesSection& s)
{
    if (s.frame() != Frame::AT)
        throw DomainError("gauge_to_st expects an AT-frame section");
    return change_frame(s, Rational(-1), Frame::ST);
}

SeriesSection nabla_at(const SeriesSection& s)
{
    if (s.frame() != Frame::AT)
        throw DomainError("nabla_at expects an AT-frame section");
    int n = s.degree();
    std::vector<QSeries> out;
    for (int j = 0; j <= n; ++j) {
        int k = n - j;
        QSeries w = bol(s.at(j), 1);
        if (j >= 1)
            w += Rational(k + 1) * s.at(j - 1);
        out.push_back(w);
    }
    return SeriesSection(n, s.base_weight() + 2, Frame::AT, std::move(out));
}

Rational residue(const SeriesSection& omega_form)
{
    if (omega_form.frame() != Frame::AT)
        return residue(gauge_to_at(omega_form));
    if (omega_form.trunc() <= 0)
        throw WindowError("residue: window does not include q^0");
    return omega_form.at(0).coeff(0);
}

Rational residue(const AlgebraicSection& omega_form)
{
    return residue(gauge_to_at(omega_form, 1));
}

namespace {

Rational pairing_weight(int n, int j)
{
    Rational w(factorial(j) * factorial(n - j));
    return (j % 2 == 0) ? w : Rational(-w);
}

} // namespace

OXElement inner_product(const AlgebraicSection& a, const AlgebraicSection& b)
{
    if (a.degree() != b.degree())
        throw DomainError("inner_product: degree mismatch");
    int n = a.degree();
    OXElement acc = OXElement::zero(a.base_weight() + b.base_weight());
    for (int j = 0; j <= n; ++j)
        acc += pairing_weight(n, j) * (a.at(j) * b.at(n - j));
    return acc;
}

QSeries inner_product(const SeriesSection& a, const SeriesSection& b)
{
    if (a.degree() != b.degree())
        throw DomainError("inner_product: degree mismatch");
    if (a.frame() != b.frame())
        throw DomainError("inner_product: frame mismatch");
    int n = a.degree();
    QSeries acc = QSeries::zero(std::min(a.trunc(), b.trunc()));
    for (int j = 0; j <= n; ++j) {
        const QSeries& x = a.at(j);
        const QSeries& y = b.at(n - j);
        if (x.is_zero() || y.is_zero())
            continue;
        acc += pairing_weight(n, j) * (x * y);
    }
    return acc;
}

} // namespace mfdr
