#include "support.hpp"

#include "mfdr/cohomology.hpp"
#include "mfdr/eisenstein.hpp"
#include "mfdr/errors.hpp"
#include "mfdr/periods.hpp"

#include <gtest/gtest.h>

using namespace mfdr;

namespace {

constexpr int kPrec = 40;

long bits()
{
    return digits_to_bits(kPrec + QuadratureOptions{}.guard_digits);
}

BigComplex pt(double x, double y)
{
    return BigComplex::from_double(bits(), x, y);
}

BigFloat tenth_power(int e)
{
    return BigFloat(bits(), "1e" + std::to_string(e));
}

OXElement f_minus_one()
{
    return *drbasis(12, 2)[0].alg_rep;
}

} // namespace

TEST(Evaluate, ConstantSeries)
{
    BigComplex v = eval_form(QSeries::constant(1, 5), pt(0.1, 1.0), 30);
    EXPECT_LT(abs(v.re - BigFloat(64, 1L)), tenth_power(-29));
    EXPECT_LT(abs(v.im), tenth_power(-29));
}

TEST(Evaluate, DeltaTwoRoutes)
{
    BigComplex a = eval_form(delta_q(80, DeltaRoute::product), pt(0, 2), 30);
    BigComplex b = eval_form(delta_q(80, DeltaRoute::eisenstein), pt(0, 2), 30);
    EXPECT_LT((a - b).abs(), tenth_power(-25) * a.abs());
}

TEST(Evaluate, Modularity)
{
    BigComplex tau = pt(0.3, 1.1);
    BigComplex stau = SL2Mat::S().act(tau);
    BigComplex lhs = eval_form(OXElement::u(), stau, kPrec);
    BigComplex rhs = pow(tau, 4) * eval_form(OXElement::u(), tau, kPrec);
    EXPECT_LT((lhs - rhs).abs(), tenth_power(-(kPrec - 5)));
    // u(i) = 20 G_4(i)
    BigComplex ui = eval_form(OXElement::u(), pt(0, 1), kPrec);
    BigComplex gi = eval_form(eisenstein(4, 120, false), pt(0, 1), kPrec);
    EXPECT_LT((ui - gi * BigFloat(bits(), 20L)).abs(), tenth_power(-(kPrec - 5)));
}

TEST(Evaluate, EvaluatorReducesToFundamentalDomain)
{
    FormEvaluator ev(OXElement::delta(), bits());
    BigComplex z = pt(0.05, 0.3);
    BigComplex w = SL2Mat::T().act(z);
    EXPECT_LT((ev(z) - ev(w)).abs(), tenth_power(-60) * ev(z).abs());
}

TEST(Cocycle, Degenerate)
{
    ComplexPoly id = eichler_cocycle(OXElement::delta(), SL2Mat::identity(), pt(0, 2), kPrec);
    EXPECT_EQ(id.degree, 10);
    EXPECT_LT(id.max_norm(), tenth_power(-60));
    ComplexPoly s = eichler_cocycle(OXElement::delta(), SL2Mat::S(), pt(0, 1), kPrec);
    EXPECT_LT(s.max_norm(), tenth_power(-60));
}

TEST(Cocycle, StableUnderRefinement)
{
    QuadratureOptions fine;
    fine.refine = 2;
    ComplexPoly a = eichler_cocycle(OXElement::delta(), SL2Mat::S(), pt(0, 2), kPrec);
    ComplexPoly b = eichler_cocycle(OXElement::delta(), SL2Mat::S(), pt(0, 2), kPrec, fine);
    EXPECT_LT((a - b).max_norm(), tenth_power(-(kPrec - 8)));
    EXPECT_GT(a.max_norm(), BigFloat(64, 1L));
}

TEST(Cocycle, DefectSmall)
{
    BigComplex z0 = pt(0, 2);
    EXPECT_LT(cocycle_defect(OXElement::delta(), SL2Mat::S(), SL2Mat::S().inverse(), z0, kPrec), tenth_power(-30));
    SL2Mat st = SL2Mat::S() * SL2Mat::T();
    SL2Mat tts = SL2Mat::T() * SL2Mat::T() * SL2Mat::S();
    EXPECT_LT(cocycle_defect(OXElement::delta(), st, tts, z0, kPrec), tenth_power(-30));
    EXPECT_LT(cocycle_defect(f_minus_one(), st, tts, z0, kPrec), tenth_power(-30));
}

TEST(Cocycle, OtherCompositionRulesFail)
{
    FormEvaluator ev(OXElement::delta(), bits());
    BigComplex z0 = pt(0, 2);
    SL2Mat g = SL2Mat::S() * SL2Mat::T(), h = SL2Mat::T() * SL2Mat::S();
    auto c = [&](const SL2Mat& x) { return path_integral(ev, x.inverse().act(z0), z0); };
    ComplexPoly cg = c(g), ch = c(h), cgh = c(g * h);
    BigFloat scale = cgh.max_norm();
    BigFloat good = (cgh - act(h.inverse(), cg) - ch).max_norm();
    BigFloat left = (cgh - cg - act(g, ch)).max_norm();
    BigFloat right = (cgh - act(h, cg) - ch).max_norm();
    EXPECT_LT(good, tenth_power(-30));
    EXPECT_GT(left, scale * tenth_power(-3));
    EXPECT_GT(right, scale * tenth_power(-3));
}

TEST(Cocycle, Basepoint)
{
    BigComplex z0 = pt(0, 2), z1 = pt(0, 3);
    EXPECT_LT(basepoint_coboundary_defect(OXElement::delta(), SL2Mat::S(), z0, z1, kPrec), tenth_power(-30));
    EXPECT_LT(basepoint_coboundary_defect(f_minus_one(), SL2Mat::S(), z0, z1, kPrec), tenth_power(-30));
    EXPECT_LT(basepoint_coboundary_defect(OXElement::delta(), SL2Mat::S(), z0, z0, kPrec), tenth_power(-60));
}

TEST(Cocycle, BasepointSignMatters)
{
    FormEvaluator ev(OXElement::delta(), bits());
    BigComplex z0 = pt(0, 2), z1 = pt(0, 3);
    SL2Mat g = SL2Mat::S();
    auto c = [&](const BigComplex& z) { return path_integral(ev, g.inverse().act(z), z); };
    ComplexPoly diff = c(z0) - c(z1);
    ComplexPoly v = path_integral(ev, z1, z0);
    BigFloat good = (diff - (v - act(g.inverse(), v))).max_norm();
    BigFloat flipped = (diff - (act(g.inverse(), v) - v)).max_norm();
    EXPECT_LT(good, tenth_power(-30));
    EXPECT_GT(flipped, diff.max_norm());
}

TEST(PeriodPolynomial, DeltaParts)
{
    PeriodPolynomial p = period_polynomial(OXElement::delta(), kPrec);
    EXPECT_EQ(p.full.degree, 10);
    const char* odd[] = {"0", "1", "0", "-25/4", "0", "21/2", "0", "-25/4", "0", "1", "0"};
    const char* even[] = {"1", "0", "-691/36", "0", "691/12", "0", "-691/12", "0", "691/36", "0", "-1"};
    for (int j = 0; j <= 10; ++j) {
        auto ro = rational_reconstruct(p.odd.coeffs[static_cast<size_t>(j)], Integer(100000000), kPrec);
        auto re = rational_reconstruct(p.even.coeffs[static_cast<size_t>(j)], Integer(100000000), kPrec);
        ASSERT_TRUE(ro && re) << j;
        EXPECT_EQ(*ro, parse_rational(odd[j])) << j;
        EXPECT_EQ(*re, parse_rational(even[j])) << j;
    }
}

TEST(PeriodPolynomial, RejectsNonCuspForms)
{
    EXPECT_THROW(period_polynomial(OXElement::u().pow(3), 20), DomainError);
}

TEST(RationalReconstruct, Examples)
{
    EXPECT_EQ(rational_reconstruct(BigFloat(bits(), "0.5"), Integer(100), kPrec), frac(1, 2));
    EXPECT_EQ(rational_reconstruct(BigFloat(bits(), "0.3333333333333333333333333333333333333333"), Integer(1000), kPrec),
              frac(1, 3));
    EXPECT_FALSE(rational_reconstruct(BigFloat::pi(bits()), Integer(100), kPrec).has_value());
}

TEST(Quadrature, GaussLegendreIntegratesPolynomials)
{
    const GaussLegendre& gl = gauss_legendre(10, 200);
    BigFloat sum(200);
    for (size_t i = 0; i < gl.nodes.size(); ++i) {
        BigFloat x2 = gl.nodes[i] * gl.nodes[i];
        sum += gl.weights[i] * (x2 * x2 * x2 * x2 * x2 * x2 * x2 * x2 * x2);
    }
    // int_-1^1 x^18 = 2/19
    EXPECT_LT(abs(sum - BigFloat(200, frac(2, 19))), BigFloat(200, "1e-55"));
}

TEST(Evaluate, ModularityUnderGenerators)
{
    const std::vector<OXElement> forms{OXElement::u(), OXElement::v(), OXElement::delta(), f_minus_one()};
    const BigComplex tau = pt(0.21, 1.05);
    for (const OXElement& f : forms) {
        BigComplex ft = eval_form(f, tau, kPrec);
        BigComplex fs = eval_form(f, SL2Mat::S().act(tau), kPrec);
        BigComplex ftt = eval_form(f, SL2Mat::T().act(tau), kPrec);
        BigFloat scale = ft.abs() + BigFloat(bits(), 1L);
        EXPECT_LT((fs - pow(tau, f.weight()) * ft).abs(), tenth_power(-(kPrec - 10)) * scale) << f.weight();
        EXPECT_LT((ftt - ft).abs(), tenth_power(-(kPrec - 10)) * scale) << f.weight();
    }
}

TEST(Cocycle, DefectAtPrec30)
{
    const int prec = 30;
    BigComplex z0 = BigComplex::from_double(digits_to_bits(prec + QuadratureOptions{}.guard_digits), 0.1, 1.7);
    SL2Mat st = SL2Mat::S() * SL2Mat::T();
    BigFloat d = cocycle_defect(OXElement::delta(), st, SL2Mat::T().inverse(), z0, prec);
    EXPECT_LT(d, BigFloat(bits(), "1e-20"));
}
