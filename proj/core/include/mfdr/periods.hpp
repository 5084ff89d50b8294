#pragma once

#include "mfdr/bigfloat.hpp"
#include "mfdr/evaluate.hpp"
#include "mfdr/oxring.hpp"

#include <optional>
#include <vector>

namespace mfdr {

// sum_j c_j a^j b^(n-j)
struct ComplexPoly {
    int degree = 0;
    std::vector<BigComplex> coeffs;

    static ComplexPoly zero(int degree, long bits);
    BigFloat max_norm() const;
};

ComplexPoly operator+(const ComplexPoly& x, const ComplexPoly& y);
ComplexPoly operator-(const ComplexPoly& x, const ComplexPoly& y);

// Substitution induced by z -> g z on f(z)(za - b)^n dz:
// a -> g.a a - g.c b, b -> -g.b a + g.d b.
ComplexPoly act(const SL2Mat& g, const ComplexPoly& p);

struct QuadratureOptions {
    int guard_digits = 40;
    // pieces are kept at half-length <= (distance to the real-axis singular line) / spacing
    double spacing = 4.0;
    int max_pieces = 20000;
    // split every piece into this many equal parts (2 gives the halving test)
    int refine = 1;
};

// (2 pi i)^(n+1) int_from^to f(z) (za - b)^n dz along the straight chord.
ComplexPoly path_integral(const FormEvaluator& f, const BigComplex& from, const BigComplex& to,
                          const QuadratureOptions& opts = {});

// c(g) = (2 pi i)^(n+1) int_{g^-1 z0}^{z0} f(z) (za - b)^n dz, n = weight - 2.
ComplexPoly eichler_cocycle(const OXElement& f, const SL2Mat& g, const BigComplex& z0, int prec,
                            const QuadratureOptions& opts = {});

// max norm of c(gh) - act(h^-1, c(g)) - c(h)
BigFloat cocycle_defect(const OXElement& f, const SL2Mat& g, const SL2Mat& h, const BigComplex& z0, int prec,
                        const QuadratureOptions& opts = {});

// max norm of (c_z0(g) - c_z1(g)) - (v - act(g^-1, v)), v = int_{z1}^{z0}
BigFloat basepoint_coboundary_defect(const OXElement& f, const SL2Mat& g, const BigComplex& z0,
                                     const BigComplex& z1, int prec, const QuadratureOptions& opts = {});

struct PeriodPolynomial {
    ComplexPoly full;
    ComplexPoly even; // even j, divided by its first nonzero coefficient
    ComplexPoly odd;  // odd j, likewise
};

// (2 pi i)^(n+1) int_0^{i inf} f(z)(za - b)^n dz for a cusp form f.
PeriodPolynomial period_polynomial(const OXElement& f, int prec, const QuadratureOptions& opts = {});

// Best continued-fraction convergent p/q with q <= max_den and |x - p/q| < 10^(-prec/2).
std::optional<Rational> rational_reconstruct(const BigFloat& x, const Integer& max_den, int prec);
// As above for the real part; fails when |im x| >= 10^(-prec/2).
std::optional<Rational> rational_reconstruct(const BigComplex& x, const Integer& max_den, int prec);

// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre {
    std::vector<BigFloat> nodes;
    std::vector<BigFloat> weights;
};
const GaussLegendre& gauss_legendre(int m, long bits);

} // namespace mfdr
