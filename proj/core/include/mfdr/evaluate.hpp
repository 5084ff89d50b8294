#pragma once

#include "mfdr/bigfloat.hpp"
#include "mfdr/oxring.hpp"
#include "mfdr/qseries.hpp"

#include <vector>

namespace mfdr {

struct SL2Mat {
    long a = 1, b = 0, c = 0, d = 1;

    // DomainError unless ad - bc = 1.
    static SL2Mat make(long a, long b, long c, long d);
    static SL2Mat identity() { return {1, 0, 0, 1}; }
    static SL2Mat S() { return {0, -1, 1, 0}; }
    static SL2Mat T() { return {1, 1, 0, 1}; }
    static SL2Mat T_inv() { return {1, -1, 0, 1}; }

    SL2Mat inverse() const { return {d, -b, -c, a}; }
    BigComplex act(const BigComplex& z) const;
    bool operator==(const SL2Mat& o) const = default;
};

SL2Mat operator*(const SL2Mat& x, const SL2Mat& y);

struct EvalOptions {
    double tau_min = 0.25;
    // |a_m| <= A m^g for the tail estimate of a raw series
    double growth_exponent = 12.0;
    int max_terms = 100000;
};

// sum a_m q^m at q = exp(2 pi i tau); ConvergenceError if the window cannot reach 10^-prec.
BigComplex eval_form(const QSeries& f, const BigComplex& tau, int prec, const EvalOptions& opts = {});
// q-expansions of u, v, Delta summed directly at tau (no reduction).
BigComplex eval_form(const OXElement& f, const BigComplex& tau, int prec, const EvalOptions& opts = {});

// Evaluates an element of O(X) anywhere on the upper half-plane by moving the
// point into the standard fundamental domain first.
class FormEvaluator {
public:
    FormEvaluator(OXElement f, long bits);

    int weight() const { return f_.weight(); }
    long bits() const { return bits_; }
    BigComplex operator()(const BigComplex& z) const;
    // Sums the q-series at w directly; DomainError if im(w) < kMinDirectHeight.
    BigComplex direct(const BigComplex& w) const;
    static constexpr double kMinDirectHeight = 0.2;

    struct Reduced {
        BigComplex w;
        SL2Mat r; // w = r z
    };
    static Reduced reduce(const BigComplex& z);

private:
    OXElement f_;
    long bits_;
    BigFloat two_pi_;
    std::vector<BigFloat> u_coeffs_, v_coeffs_, delta_coeffs_;
    std::vector<std::pair<std::pair<int, int>, BigFloat>> terms_;

    int terms_needed(double abs_q) const;
    BigComplex sum_series(const std::vector<BigFloat>& c, const BigFloat& c0, const BigComplex& q, int terms) const;
};

} // namespace mfdr
