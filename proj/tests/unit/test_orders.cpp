#include <gtest/gtest.h>

#include <set>

#include "helpers.hpp"
#include "oracle.hpp"
#include "postdom/errors.hpp"
#include "postdom/generate.hpp"
#include "postdom/orders.hpp"
#include "postdom/verify.hpp"

using namespace postdom;
using namespace testing_helpers;

namespace {

using LRV = LabeledRandomVariable;

struct Example {
    Model model = worked_example_model();
    StateSubset gamma = StateSubset::from_indices(3, {1, 2});
    PosteriorCurve q = posterior_curve(model, gamma);
    LRV uninformed = pushforward(q, signal_marginal(model));
    LRV informed = pushforward(q, signal_conditional(model, gamma));
    LRV top = pushforward(q, signal_conditional(model, StateSubset::from_indices(3, {2})));
};

}  // namespace

TEST(Orders, ConstructionMergesAndDrops) {
    const LRV x(V({"2/3", "1/3", "1/3", "5"}), V({"1/2", "1/4", "1/4", "0"}));
    EXPECT_EQ(x.support(), V({"1/3", "2/3"}));
    EXPECT_EQ(x.probabilities(), V({"1/2", "1/2"}));
    EXPECT_EQ(x.probability_of(R("5")), R("0"));
    EXPECT_THROW(LRV(V({"0", "1"}), V({"1/2", "1/3"})), InvariantError);
    EXPECT_THROW(LRV(V({"0"}), V({"1/2", "1/2"})), InvariantError);
}

TEST(Orders, Pushforward) {
    const Example ex;
    EXPECT_EQ(ex.uninformed.support(), V({"6/11", "10/13"}));
    EXPECT_EQ(ex.uninformed.probabilities(), V({"11/24", "13/24"}));

    const PosteriorCurve constant(3, R("2/3"));
    EXPECT_EQ(pushforward(constant, V({"1/4", "1/4", "1/2"})), LRV::point_mass(R("2/3")));

    const PosteriorCurve merged{R("1/3"), R("1/3"), R("2/3")};
    const auto x = pushforward(merged, V({"1/4", "1/4", "1/2"}));
    EXPECT_EQ(x.support(), V({"1/3", "2/3"}));
    EXPECT_EQ(x.probabilities(), V({"1/2", "1/2"}));
}

TEST(Orders, PushforwardUndefinedValues) {
    const PosteriorCurve q{R("1/3"), std::nullopt};
    EXPECT_EQ(pushforward(q, V({"1", "0"})), LRV::point_mass(R("1/3")));
    EXPECT_THROW(pushforward(q, V({"1/2", "1/2"})), PreconditionError);
}

TEST(Orders, LrDominatesExample) {
    const Example ex;
    const auto v = lr_dominates(ex.informed, ex.uninformed);
    EXPECT_TRUE(v.lr_holds);
    EXPECT_TRUE(v.lr_strict);
    EXPECT_TRUE(v.fosd_holds);
    EXPECT_FALSE(v.violating_pair.has_value());

    const auto reversed = lr_dominates(ex.top, ex.uninformed);
    EXPECT_FALSE(reversed.lr_holds);
    ASSERT_TRUE(reversed.violating_pair.has_value());
    EXPECT_EQ(reversed.violating_pair->low, R("6/11"));
    EXPECT_EQ(reversed.violating_pair->high, R("10/13"));

    const auto self = lr_dominates(ex.uninformed, ex.uninformed);
    EXPECT_TRUE(self.lr_holds);
    EXPECT_FALSE(self.lr_strict);
}

TEST(Orders, Fosd) {
    const Example ex;
    EXPECT_TRUE(fosd_dominates(ex.informed, ex.uninformed));
    EXPECT_TRUE(fosd_dominates(ex.uninformed, ex.uninformed));
    EXPECT_FALSE(fosd_dominates(LRV::point_mass(R("0")), LRV::point_mass(R("1"))));
    EXPECT_TRUE(fosd_dominates(LRV::point_mass(R("1")), LRV::point_mass(R("0"))));
    // FOSD without lr: mass moves up overall but the ratio dips in the middle.
    const LRV x(V({"0", "1", "2"}), V({"1/4", "0", "3/4"}));
    const LRV y(V({"0", "1", "2"}), V({"1/3", "1/3", "1/3"}));
    EXPECT_TRUE(fosd_dominates(x, y));
    EXPECT_FALSE(lr_dominates(x, y).lr_holds);
}

TEST(Orders, BruteForceOracle) {
    const Example ex;
    EXPECT_TRUE(lr_dominates_oracle(ex.informed, ex.uninformed));
    EXPECT_TRUE(lr_dominates_oracle(ex.uninformed, ex.uninformed));
    EXPECT_FALSE(lr_dominates_oracle(ex.top, ex.uninformed));

    RationalVector many;
    for (int i = 0; i < 13; ++i) {
        many.push_back(Rational(i));
    }
    const LRV big(many, RationalVector(13, Rational(BigInt(1), BigInt(13))));
    EXPECT_THROW(lr_dominates_oracle(big, big), OracleSizeError);
}

TEST(Orders, BinaryRule) {
    const auto support = V({"0", "1"});
    const LRV a(support, V({"1/4", "3/4"}));
    const LRV b(support, V({"1/2", "1/2"}));
    EXPECT_TRUE(binary_lr_equiv(a, b));
    EXPECT_TRUE(binary_lr_equiv(a, a));
    EXPECT_FALSE(binary_lr_equiv(b, a));
    EXPECT_THROW(binary_lr_equiv(LRV(V({"0", "1", "2"}), V({"1/3", "1/3", "1/3"})), a), PreconditionError);
}

TEST(Orders, Expectation) {
    const Example ex;
    EXPECT_EQ(expectation(ex.uninformed), R("2/3"));
    EXPECT_EQ(expectation(ex.informed), R("98/143"));
    EXPECT_EQ(expectation(LRV::point_mass(R("2/3"))), R("2/3"));
}

TEST(Orders, Prop1OnExample) {
    const Example ex;
    const auto rep = check_prop1(ex.model, ex.gamma);
    EXPECT_TRUE(rep.lr_holds());
    EXPECT_TRUE(rep.lr_strict());
    EXPECT_FALSE(rep.uninformative);
    EXPECT_EQ(rep.p, R("2/3"));
    EXPECT_EQ(rep.submartingale_gap, R("8/429"));
    EXPECT_TRUE(rep.linearity_holds);
}

TEST(Orders, Prop1Uninformative) {
    const auto m = M(P({"1/6", "1/3", "1/2"}), K({{"1/5", "4/5"}, {"1/5", "4/5"}, {"1/5", "4/5"}}));
    const auto rep = check_prop1(m, StateSubset::from_indices(3, {0, 2}));
    EXPECT_TRUE(rep.lr_holds());
    EXPECT_FALSE(rep.lr_strict());
    EXPECT_TRUE(rep.uninformative);
    EXPECT_EQ(rep.submartingale_gap, R("0"));
}

TEST(Orders, Prop1Preconditions) {
    const Example ex;
    EXPECT_THROW(check_prop1(ex.model, StateSubset::all(3)), PreconditionError);
    const auto unpruned = M(P({"1/2", "1/2"}), K({{"1/2", "0", "1/2"}, {"1/4", "0", "3/4"}}));
    EXPECT_THROW(check_prop1(unpruned, StateSubset::from_indices(2, {1})), PreconditionError);
}

TEST(Orders, AgreesWithIndependentOracle) {
    Rng rng(5, 0);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::size_t k = rng.between(1, 6);
        std::set<Rational> values;
        while (values.size() < k) {
            values.insert(Rational(BigInt(static_cast<long>(rng.between(0, 9))), BigInt(static_cast<long>(rng.between(1, 4)))));
        }
        const RationalVector grid(values.begin(), values.end());
        const LRV x(grid, random_distribution(rng, k, 8, true));
        const LRV y(grid, random_distribution(rng, k, 8, true));
        const auto dx = oracle::dist_of(x);
        const auto dy = oracle::dist_of(y);
        const auto v = lr_dominates(x, y);
        ASSERT_EQ(v.lr_holds, oracle::lr(dx, dy));
        ASSERT_EQ(v.lr_holds, lr_dominates_oracle(x, y));
        ASSERT_EQ(fosd_dominates(x, y), oracle::fosd(dx, dy));
        ASSERT_TRUE(oracle::same(expectation(x), oracle::mean(dx)));
        if (v.violating_pair) {
            const auto& vp = *v.violating_pair;
            ASSERT_LT(x.probability_of(vp.high) * y.probability_of(vp.low),
                      x.probability_of(vp.low) * y.probability_of(vp.high));
        }
    }
}
