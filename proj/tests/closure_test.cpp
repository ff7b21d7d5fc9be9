#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"

using namespace rp;
using rptest::closureSearchBox;
using rptest::forEachBoxPoint;
using rptest::makeContext;
using rptest::naiveMinimalize;
using rptest::randomIdeal;

namespace {

MonomialIdeal principalSquare() {
    return minimalize(VariableContext({"x"}), {{ExponentVector{2}}});
}
MonomialIdeal mixedPair() {
    return minimalize(VariableContext({"y", "z"}), {{2, 0}, {1, 1}});
}
MonomialIdeal edgePath() {
    return minimalize(VariableContext({"x", "y", "z"}), {{1, 1, 0}, {0, 1, 1}});
}

// Independent recomputation of a rational power with an enlarged search box,
// deciding membership per point by the simplex value.
MonomialIdeal scanWithMargin(const MonomialIdeal& I, const Rational& u, int margin) {
    ExponentMatrix M = matrixOf(I);
    std::vector<int> bounds = closureSearchBox(I, u);
    for (auto& b : bounds) b += margin;
    std::vector<ExponentVector> members;
    forEachBoxPoint(bounds, [&](const ExponentVector& a) {
        if (nuStar(M, a).value >= u) members.push_back(a);
    });
    return {I.context, naiveMinimalize(std::move(members))};
}

}  // namespace

TEST(RationalPowerMembershipTest, Examples) {
    EXPECT_TRUE(monomialInRationalPower(principalSquare(), ExponentVector{1}, Rational(1, 2)));
    EXPECT_TRUE(monomialInRationalPower(mixedPair(), {3, 0}, Rational(3, 2)));
    EXPECT_FALSE(monomialInRationalPower(mixedPair(), {0, 0}, Rational(1, 7)));
    EXPECT_TRUE(monomialInRationalPower(mixedPair(), {0, 0}, Rational(0)));
    EXPECT_FALSE(
        monomialInRationalPower(zeroIdeal(VariableContext({"x"})), ExponentVector{4}, Rational(1)));
}

TEST(IntegralClosurePowerTest, Examples) {
    VariableContext xy({"x", "y"});
    MonomialIdeal squares = minimalize(xy, {{2, 0}, {0, 2}});
    EXPECT_EQ(integralClosurePower(squares, 1).generators,
              (std::vector<ExponentVector>{{0, 2}, {1, 1}, {2, 0}}));

    EXPECT_EQ(integralClosurePower(principalSquare(), 3).generators,
              (std::vector<ExponentVector>{ExponentVector{6}}));

    EXPECT_EQ(integralClosurePower(mixedPair(), 2).generators,
              (std::vector<ExponentVector>{{2, 2}, {3, 1}, {4, 0}}));

    EXPECT_TRUE(integralClosurePower(squares, 0).isUnit());
    EXPECT_TRUE(integralClosurePower(zeroIdeal(xy), 2).isZero());
}

TEST(RationalPowerTest, Examples) {
    EXPECT_EQ(rationalPower(principalSquare(), Rational(1, 2)).result.generators,
              (std::vector<ExponentVector>{ExponentVector{1}}));
    EXPECT_EQ(rationalPower(mixedPair(), Rational(3, 2)).result.generators,
              (std::vector<ExponentVector>{{2, 1}, {3, 0}}));
    EXPECT_TRUE(rationalPower(mixedPair(), Rational(0)).result.isUnit());
    EXPECT_THROW(rationalPower(mixedPair(), Rational(-1)), PreconditionError);
}

TEST(JumpingDenominatorTest, Examples) {
    EXPECT_EQ(jumpingDenominator(principalSquare()).value, 2);
    EXPECT_EQ(jumpingDenominator(mixedPair()).value, 2);
    EXPECT_EQ(jumpingDenominator(edgePath()).value, 1);
    EXPECT_THROW(jumpingDenominator(zeroIdeal(VariableContext({"x"}))), UndefinedOperationError);
}

TEST(IntegralityTest, Examples) {
    IntegralityCertificate c1 = isNuStarAlwaysIntegral(principalSquare());
    EXPECT_FALSE(c1.integral);
    EXPECT_EQ(*c1.witness, (RationalVector{Rational(1, 2)}));

    EXPECT_TRUE(isNuStarAlwaysIntegral(edgePath()).integral);

    IntegralityCertificate c3 =
        isNuStarAlwaysIntegral(minimalize(VariableContext({"x", "y"}), {{2, 0}, {0, 2}}));
    EXPECT_FALSE(c3.integral);
    EXPECT_EQ(*c3.witness, (RationalVector{Rational(1, 2), Rational(1, 2)}));
}

TEST(IntegrallyClosedTest, Examples) {
    VariableContext xy({"x", "y"});
    EXPECT_FALSE(isIntegrallyClosed(minimalize(xy, {{2, 0}, {0, 2}})));
    EXPECT_TRUE(isIntegrallyClosed(minimalize(VariableContext({"x"}), {{ExponentVector{1}}})));
    EXPECT_TRUE(isIntegrallyClosed(minimalize(xy, {{2, 0}, {1, 1}, {0, 2}})));
}

TEST(ClosurePropertyTest, IdempotenceAndFiltration) {
    std::mt19937_64 rng(112358);
    for (int trial = 0; trial < 8; ++trial) {
        MonomialIdeal I = randomIdeal(rng, makeContext(2 + trial % 2), 3, 3);

        MonomialIdeal closed = integralClosurePower(I, 1);
        EXPECT_EQ(integralClosurePower(closed, 1), closed);

        std::vector<MonomialIdeal> closures{unitIdeal(I.context)};
        for (int k = 1; k <= 4; ++k) closures.push_back(integralClosurePower(I, k));
        for (int k = 1; k < 4; ++k) EXPECT_TRUE(contains(closures[k], closures[k + 1]));
        for (int k = 1; k <= 2; ++k)
            for (int l = 1; k + l <= 4; ++l)
                EXPECT_TRUE(
                    contains(closures[k + l], idealProduct(closures[k], closures[l])));
    }
}

TEST(ClosurePropertyTest, StaircaseOnJumpingGrid) {
    std::mt19937_64 rng(271828);
    for (int trial = 0; trial < 6; ++trial) {
        MonomialIdeal I = randomIdeal(rng, makeContext(2), 3, 3);
        const Integer e = jumpingDenominator(I).value;

        MonomialIdeal previous = rationalPower(I, Rational(0)).result;
        for (Integer t = 0; t <= 3 * e; ++t) {
            Rational u = Rational(t) / Rational(e);
            MonomialIdeal atGrid = rationalPower(I, u).result;
            // constant between grid points: snap anywhere inside the cell
            Rational inside = u + Rational(1) / Rational(3 * e);
            Rational snapped = Rational(ratCeil(inside * Rational(e))) / Rational(e);
            EXPECT_EQ(rationalPower(I, inside).result,
                      rationalPower(I, snapped).result);
            EXPECT_TRUE(contains(previous, atGrid));  // monotone decreasing
            previous = atGrid;
        }
    }
}

TEST(ClosurePropertyTest, BoxEnlargementIsSafe) {
    std::mt19937_64 rng(462);
    for (int trial = 0; trial < 6; ++trial) {
        MonomialIdeal I = randomIdeal(rng, makeContext(2 + trial % 2), 3, 3);
        for (const Rational& u : {Rational(1), Rational(3, 2), Rational(2)}) {
            MonomialIdeal viaLibrary = rationalPower(I, u).result;
            EXPECT_EQ(scanWithMargin(I, u, 2).generators, viaLibrary.generators);
        }
    }
}

TEST(ClosurePropertyTest, MembershipAgreesWithFmOracleOnBox) {
    std::mt19937_64 rng(998877);
    for (int trial = 0; trial < 5; ++trial) {
        MonomialIdeal I = randomIdeal(rng, makeContext(2 + trial % 2), 3, 3);
        ExponentMatrix M = matrixOf(I);
        const Rational u(trial + 2, 2);  // 1, 3/2, 2, ...
        forEachBoxPoint(closureSearchBox(I, u), [&](const ExponentVector& a) {
            ASSERT_EQ(monomialInRationalPower(I, a, u), fmMembershipOracle(M, a, u));
        });
    }
}

TEST(ClosurePropertyTest, GeneratorPowerCertificates) {
    std::mt19937_64 rng(530);
    for (int trial = 0; trial < 5; ++trial) {
        MonomialIdeal I = randomIdeal(rng, makeContext(2), 3, 3);
        const int e = static_cast<int>(jumpingDenominator(I).value);
        for (int k = 1; k <= 2; ++k) {
            MonomialIdeal closureK = integralClosurePower(I, k);
            MonomialIdeal closureKe = integralClosurePower(I, k * e);
            for (const auto& a : closureK.generators)
                EXPECT_TRUE(monomialIn(closureKe, e * a));
        }
    }
}

TEST(ClosureEdgeCasesTest, UnitIdealTotal) {
    VariableContext xy({"x", "y"});
    EXPECT_TRUE(rationalPower(unitIdeal(xy), Rational(7, 3)).result.isUnit());
    EXPECT_TRUE(monomialInRationalPower(unitIdeal(xy), {0, 0}, Rational(5)));
    EXPECT_EQ(jumpingDenominator(unitIdeal(xy)).value, 1);
    EXPECT_TRUE(isNuStarAlwaysIntegral(unitIdeal(xy)).integral);
}
