#include "support.hpp"

#include "mfdr/eisenstein.hpp"
#include "mfdr/errors.hpp"
#include "mfdr/io.hpp"

#include <gtest/gtest.h>

using namespace mfdr;
using test::series;

TEST(IO, SeriesText)
{
    QSeries s = series(-1, {"1", "0", "-3/7"}, 3);
    std::string text = series_to_text(s);
    EXPECT_EQ(text, "valuation=-1 trunc=3\n-1: 1\n0: 0\n1: -3/7\n2: 0\n");
    EXPECT_EQ(series_from_text(text), s);
    EXPECT_EQ(series_from_text("valuation=0 trunc=2\n0: 4/1\n1: 6/4\n"), series(0, {"4", "3/2"}, 2));
}

TEST(IO, SeriesTextErrors)
{
    EXPECT_THROW(series_from_text("0: 1\n"), DomainError);
    EXPECT_THROW(series_from_text("valuation=0 trunc=2\n5: 1\n"), DomainError);
    EXPECT_THROW(series_from_text("valuation=0 trunc=2\n0: 1/0\n"), DomainError);
}

TEST(IO, SeriesJson)
{
    QSeries s = delta_q(6);
    EXPECT_EQ(series_from_json(series_to_json(s)), s);
}

TEST(IO, OXText)
{
    OXElement e = OXElement::make(UVPolynomial::monomial(3, 0, frac(1, 2)) + UVPolynomial::monomial(0, 2, -4), 1, 0);
    std::string text = ox_to_text(e);
    EXPECT_EQ(ox_from_text(text), e);
    EXPECT_EQ(ox_from_json(ox_to_json(e)), e);
    EXPECT_EQ(ox_from_text("weight=4 denom_pow=0; 1*u^1*v^0"), OXElement::u());
    EXPECT_THROW(ox_from_text("weight=4 denom_pow=0; 1*u^0*v^1"), GradingError);
}

TEST(IO, Sections)
{
    AlgebraicSection s = AlgebraicSection::zero(2, 0);
    s.set(0, OXElement::make(UVPolynomial::monomial(2, 1), 1, 2));
    s.set(2, OXElement::make(UVPolynomial::monomial(1, 1), 1, -2));
    EXPECT_EQ(algebraic_section_from_json(section_to_json(s)), s);
}

TEST(IO, Pairing)
{
    PairingValue v{Rational(1)};
    EXPECT_EQ(pairing_to_text(v), "1/1\nconvention=first-arg-exponent\n");
    EXPECT_EQ(pairing_to_json(v).at("value"), "1/1");
}

TEST(IO, Classes)
{
    CohClass c = canonical_rep(OXElement::delta(), 3);
    Json j = class_to_json(c);
    EXPECT_EQ(j.at("weight"), 12);
    EXPECT_EQ(j.at("ell"), 1);
    EXPECT_EQ(j.at("coeffs").at("1"), "1");
    EXPECT_EQ(j.at("coeffs").at("-1"), "0");
    EXPECT_TRUE(j.contains("certificate"));
}

TEST(IO, Complex)
{
    BigComplex z = parse_complex("0.5-1.25i", 100);
    EXPECT_EQ(z.re.to_double(), 0.5);
    EXPECT_EQ(z.im.to_double(), -1.25);
    BigComplex w = parse_complex("2i", 100);
    EXPECT_EQ(w.re.to_double(), 0.0);
    EXPECT_EQ(w.im.to_double(), 2.0);
    EXPECT_EQ(parse_complex("i", 100).im.to_double(), 1.0);
    EXPECT_EQ(parse_complex("3", 100).re.to_double(), 3.0);
}
