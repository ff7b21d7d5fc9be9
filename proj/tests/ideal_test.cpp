#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"

using namespace rp;
using rptest::forEachBoxPoint;
using rptest::randomIdeal;

namespace {

VariableContext ctxX() { return VariableContext({"x"}); }
VariableContext ctxXY() { return VariableContext({"x", "y"}); }
VariableContext ctxXYZ() { return VariableContext({"x", "y", "z"}); }
VariableContext ctxYZ() { return VariableContext({"y", "z"}); }

bool isAntichain(const MonomialIdeal& I) {
    for (std::size_t i = 0; i < I.generators.size(); ++i)
        for (std::size_t j = 0; j < I.generators.size(); ++j)
            if (i != j && I.generators[i].dominates(I.generators[j])) return false;
    return true;
}

}  // namespace

TEST(VariableContextTest, RejectsDuplicatesAndBadSplit) {
    EXPECT_THROW(VariableContext({"x", "x"}), PreconditionError);
    EXPECT_THROW(VariableContext({""}), PreconditionError);
    EXPECT_THROW(VariableContext({"x", "y"}, 0), PreconditionError);
    EXPECT_THROW(VariableContext({"x", "y"}, 2), PreconditionError);
    VariableContext ok({"x", "y"}, 1);
    EXPECT_EQ(ok.blockSplit, 1);
}

TEST(MinimalizeTest, DropsDivisibleGenerators) {
    MonomialIdeal I = minimalize(ctxXY(), {{2, 0}, {2, 1}});
    EXPECT_EQ(I.generators, (std::vector<ExponentVector>{{2, 0}}));
}

TEST(MinimalizeTest, EmptyInputIsZeroIdeal) {
    MonomialIdeal I = minimalize(ctxXY(), {});
    EXPECT_TRUE(I.isZero());
    EXPECT_FALSE(I.isUnit());
}

TEST(MinimalizeTest, AntichainIsKeptWholeAndSorted) {
    MonomialIdeal I = minimalize(ctxXY(), {{2, 0}, {1, 1}, {0, 2}});
    EXPECT_EQ(I.generators, (std::vector<ExponentVector>{{0, 2}, {1, 1}, {2, 0}}));
}

TEST(MinimalizeTest, MixedLengthsRejected) {
    EXPECT_THROW(minimalize(ctxXY(), {{1, 0}, ExponentVector{1}}), DimensionMismatchError);
}

TEST(IdealSumTest, Examples) {
    MonomialIdeal x2 = minimalize(ctxXY(), {{2, 0}});
    MonomialIdeal xy = minimalize(ctxXY(), {{1, 1}});
    EXPECT_EQ(idealSum(x2, xy).generators, (std::vector<ExponentVector>{{1, 1}, {2, 0}}));
    EXPECT_EQ(idealSum(x2, zeroIdeal(ctxXY())), x2);
    MonomialIdeal y2 = minimalize(ctxXY(), {{0, 2}});
    EXPECT_EQ(idealSum(idealSum(x2, xy), y2).generators,
              (std::vector<ExponentVector>{{0, 2}, {1, 1}, {2, 0}}));
}

TEST(IdealSumTest, ContextMismatchRejected) {
    EXPECT_THROW(idealSum(unitIdeal(ctxXY()), unitIdeal(ctxYZ())), ContextMismatchError);
}

TEST(IdealProductTest, PairwiseExponentSums) {
    MonomialIdeal J = minimalize(ctxYZ(), {{2, 0}, {1, 1}});
    MonomialIdeal square = idealProduct(J, J);
    EXPECT_EQ(square.generators, (std::vector<ExponentVector>{{2, 2}, {3, 1}, {4, 0}}));
}

TEST(IdealPowerTest, SmallPowers) {
    MonomialIdeal J = minimalize(ctxYZ(), {{2, 0}, {1, 1}});
    EXPECT_EQ(idealPower(J, 1), J);
    EXPECT_EQ(idealPower(J, 0), unitIdeal(ctxYZ()));
    MonomialIdeal x2 = minimalize(ctxX(), {{ExponentVector{2}}});
    EXPECT_EQ(idealPower(x2, 3).generators, (std::vector<ExponentVector>{ExponentVector{6}}));
}

TEST(IdealIntersectionTest, LcmOfPairs) {
    MonomialIdeal x2 = minimalize(ctxXY(), {{2, 0}});
    MonomialIdeal xy = minimalize(ctxXY(), {{1, 1}});
    EXPECT_EQ(idealIntersection(x2, xy).generators, (std::vector<ExponentVector>{{2, 1}}));
    MonomialIdeal I = minimalize(ctxXY(), {{2, 0}, {0, 2}});
    EXPECT_EQ(idealIntersection(I, unitIdeal(ctxXY())), I);
}

TEST(IdealIntersectionTest, MatchesBruteForceScan) {
    // (x^2, y^2) cap (xy) over every monomial of degree <= 4.
    MonomialIdeal I = minimalize(ctxXY(), {{2, 0}, {0, 2}});
    MonomialIdeal J = minimalize(ctxXY(), {{1, 1}});
    MonomialIdeal meet = idealIntersection(I, J);
    EXPECT_EQ(meet.generators, (std::vector<ExponentVector>{{1, 2}, {2, 1}}));
    forEachBoxPoint({4, 4}, [&](const ExponentVector& a) {
        EXPECT_EQ(monomialIn(meet, a), monomialIn(I, a) && monomialIn(J, a));
    });
}

TEST(MembershipTest, Examples) {
    MonomialIdeal I = minimalize(ctxXY(), {{2, 0}, {0, 2}});
    EXPECT_TRUE(monomialIn(I, {3, 1}));
    EXPECT_FALSE(monomialIn(I, {1, 1}));
    EXPECT_TRUE(contains(zeroIdeal(ctxXY()), zeroIdeal(ctxXY())));
    EXPECT_FALSE(contains(zeroIdeal(ctxXY()), I));
    EXPECT_TRUE(contains(unitIdeal(ctxXY()), I));
}

TEST(MembershipTest, AgreesWithDivisibilityScanOverOriginalGenerators) {
    std::mt19937_64 rng(811);
    for (int trial = 0; trial < 20; ++trial) {
        VariableContext ctx = ctxXYZ();
        std::uniform_int_distribution<int> entry(0, 3);
        std::vector<ExponentVector> raw;
        for (int g = 0; g < 4; ++g) {
            ExponentVector v = ExponentVector::zero(3);
            for (int i = 0; i < 3; ++i) v[i] = entry(rng);
            if (!v.isZero()) raw.push_back(v);
        }
        if (raw.empty()) continue;
        MonomialIdeal I = minimalize(ctx, raw);
        forEachBoxPoint({6, 6, 6}, [&](const ExponentVector& a) {
            if (a.totalDegree() > 6) return;
            bool direct = false;
            for (const auto& g : raw)
                if (a.dominates(g)) direct = true;
            ASSERT_EQ(monomialIn(I, a), direct);
        });
    }
}

TEST(DeltaStarTest, Examples) {
    MonomialIdeal x2y = minimalize(ctxXY(), {{2, 1}});
    EXPECT_EQ(deltaStar(x2y).generators, (std::vector<ExponentVector>{{1, 1}, {2, 0}}));
    MonomialIdeal x = minimalize(ctxX(), {{ExponentVector{1}}});
    EXPECT_TRUE(deltaStar(x).isUnit());
    MonomialIdeal J2 = minimalize(ctxYZ(), {{4, 0}, {3, 1}, {2, 2}});
    EXPECT_EQ(deltaStar(J2).generators, (std::vector<ExponentVector>{{1, 2}, {2, 1}, {3, 0}}));
}

TEST(DeltaStarTest, ZeroIdealRejectedUnitFixed) {
    EXPECT_THROW(deltaStar(zeroIdeal(ctxXY())), UndefinedOperationError);
    EXPECT_TRUE(deltaStar(unitIdeal(ctxXY())).isUnit());
}

TEST(DeltaStarTest, PrincipalIdealHasSupportManyGenerators) {
    std::mt19937_64 rng(4215);
    std::uniform_int_distribution<int> entry(0, 4);
    for (int trial = 0; trial < 30; ++trial) {
        ExponentVector f = ExponentVector::zero(3);
        for (int i = 0; i < 3; ++i) f[i] = entry(rng);
        if (f.isZero()) continue;
        int support = 0;
        for (int i = 0; i < 3; ++i) support += f[i] > 0 ? 1 : 0;
        MonomialIdeal I = minimalize(ctxXYZ(), {f});
        EXPECT_EQ(static_cast<int>(deltaStar(I).generators.size()), support);
    }
}

TEST(MaximalIdealTest, Examples) {
    MonomialIdeal x = minimalize(ctxX(), {{ExponentVector{1}}});
    EXPECT_EQ(maximalIdealPowerTimes(x, 1).generators,
              (std::vector<ExponentVector>{ExponentVector{2}}));
    MonomialIdeal x2 = minimalize(ctxXY(), {{2, 0}});
    EXPECT_EQ(maximalIdealPowerTimes(x2, 1).generators,
              (std::vector<ExponentVector>{{2, 1}, {3, 0}}));
    EXPECT_EQ(maximalIdealPowerTimes(unitIdeal(ctxXY()), 2).generators,
              (std::vector<ExponentVector>{{0, 2}, {1, 1}, {2, 0}}));
    EXPECT_THROW(maximalIdealPowerTimes(x2, 0), PreconditionError);
}

TEST(ExternalSumTest, BlockMatrixAndSplit) {
    MonomialIdeal I = minimalize(ctxX(), {{ExponentVector{2}}});
    MonomialIdeal Jy = minimalize(VariableContext({"y"}), {{ExponentVector{2}}});
    ExternalSum s = externalSum(I, Jy);
    EXPECT_EQ(s.ideal.generators, (std::vector<ExponentVector>{{0, 2}, {2, 0}}));
    EXPECT_EQ(s.ideal.context.blockSplit, 1);
    EXPECT_EQ(s.matrix.entries, (std::vector<std::vector<int>>{{0, 2}, {2, 0}}));

    MonomialIdeal J = minimalize(ctxYZ(), {{2, 0}, {1, 1}});
    ExternalSum t = externalSum(I, J);
    // columns in canonical (lex) generator order: (0,1,1), (0,2,0), (2,0,0)
    EXPECT_EQ(t.ideal.generators,
              (std::vector<ExponentVector>{{0, 1, 1}, {0, 2, 0}, {2, 0, 0}}));
    EXPECT_EQ(t.matrix.entries,
              (std::vector<std::vector<int>>{{0, 0, 2}, {1, 2, 0}, {1, 0, 0}}));

    ExternalSum z = externalSum(zeroIdeal(ctxX()), J);
    EXPECT_EQ(z.ideal.generators,
              (std::vector<ExponentVector>{{0, 1, 1}, {0, 2, 0}}));
}

TEST(ExternalSumTest, OverlappingNamesRejected) {
    MonomialIdeal I = minimalize(ctxXY(), {{1, 0}});
    MonomialIdeal J = minimalize(ctxYZ(), {{1, 0}});
    EXPECT_THROW(externalSum(I, J), ContextMismatchError);
}

TEST(AlgebraPropertiesTest, RandomizedLaws) {
    std::mt19937_64 rng(90125);
    VariableContext ctx = ctxXYZ();
    for (int trial = 0; trial < 40; ++trial) {
        MonomialIdeal I = randomIdeal(rng, ctx, 3, 3);
        MonomialIdeal J = randomIdeal(rng, ctx, 3, 3);
        MonomialIdeal K = randomIdeal(rng, ctx, 2, 2);

        EXPECT_TRUE(isAntichain(idealSum(I, J)));
        EXPECT_TRUE(isAntichain(idealProduct(I, J)));
        EXPECT_TRUE(isAntichain(idealIntersection(I, J)));

        EXPECT_EQ(idealSum(I, J), idealSum(J, I));
        EXPECT_EQ(idealProduct(I, J), idealProduct(J, I));
        EXPECT_EQ(idealSum(idealSum(I, J), K), idealSum(I, idealSum(J, K)));
        EXPECT_EQ(idealProduct(idealProduct(I, J), K), idealProduct(I, idealProduct(J, K)));
        EXPECT_EQ(idealProduct(I, unitIdeal(ctx)), I);

        EXPECT_TRUE(contains(I, idealProduct(I, J)));
    }
}
