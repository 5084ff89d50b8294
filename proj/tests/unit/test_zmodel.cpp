#include "support.hpp"

#include "mfdr/errors.hpp"
#include "mfdr/zmodel.hpp"

#include <gtest/gtest.h>

using namespace mfdr;

TEST(ZModel, DeltaRestrictsToOne)
{
    ZElement z = restrict_to_Z(OXElement::delta());
    EXPECT_EQ(z.grade(), 0);
    EXPECT_EQ(z.residue(), UVPolynomial::constant(1));
}

TEST(ZModel, UDeltaInverseDelta)
{
    OXElement e = OXElement::u() * OXElement::delta_pow(-1) * OXElement::delta();
    ZElement z = restrict_to_Z(e);
    EXPECT_EQ(z.grade(), 4);
    EXPECT_EQ(z.residue(), UVPolynomial::u());
}

TEST(ZModel, UCubedUsesTheRelation)
{
    ZElement z = restrict_to_Z(OXElement::u().pow(3));
    EXPECT_EQ(z.grade(), 0);
    // ubar^3 = 1 + 27 vbar^2; both sides reduce to the same canonical residue
    UVPolynomial rel = UVPolynomial::constant(1) + UVPolynomial::monomial(0, 2, 27);
    EXPECT_EQ(z, ZElement::make(rel, 0));
    EXPECT_EQ(z, ZElement::make(UVPolynomial::monomial(3, 0, 1), 0));
}

TEST(ZModel, Lifts)
{
    EXPECT_EQ(lift_from_Z(ZElement::make(UVPolynomial::u(), 4), 4), OXElement::u());
    EXPECT_EQ(lift_from_Z(ZElement::make(UVPolynomial::constant(1), 0), 12), OXElement::delta());
    EXPECT_EQ(lift_from_Z(ZElement::make(UVPolynomial::u(), 4), 16), OXElement::u() * OXElement::delta());
    EXPECT_EQ(lift_from_Z(ZElement::make(UVPolynomial::u(), 4), -8), OXElement::u() * OXElement::delta_pow(-1));
}

TEST(ZModel, LiftRejectsWrongGrade)
{
    ZElement z = ZElement::make(UVPolynomial::u(), 4);
    EXPECT_THROW(lift_from_Z(z, 6), GradingError);
    EXPECT_THROW(lift_from_Z(z, 5), GradingError);
    EXPECT_THROW(ZElement::make(UVPolynomial::u() + UVPolynomial::v(), 4), GradingError);
}

TEST(ZModel, RoundTrip)
{
    OXElement e = OXElement::make(UVPolynomial::monomial(4, 1, 3) + UVPolynomial::monomial(1, 3, -2), 1, 10);
    EXPECT_EQ(lift_from_Z(restrict_to_Z(e), 10), e);
    EXPECT_EQ(restrict_to_Z(e * OXElement::delta_pow(3)), restrict_to_Z(e));
}
