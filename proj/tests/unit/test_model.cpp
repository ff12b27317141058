#include <gtest/gtest.h>

#include "helpers.hpp"
#include "oracle.hpp"
#include "postdom/errors.hpp"
#include "postdom/generate.hpp"
#include "postdom/model.hpp"
#include "postdom/verify.hpp"

using namespace postdom;
using namespace testing_helpers;

namespace {

Model example() { return worked_example_model(); }

StateSubset top_two() { return StateSubset::from_indices(3, {1, 2}); }

}  // namespace

TEST(Model, ValidationRejectsBadInputs) {
    EXPECT_THROW(StateSpace(V({"1", "1"})), InvariantError);
    EXPECT_THROW(StateSpace(RationalVector{}), InvariantError);
    EXPECT_THROW(P({"1/2", "1/3"}), InvariantError);
    EXPECT_THROW(P({"3/2", "-1/2"}), InvariantError);
    EXPECT_THROW(K({{"1/2", "1/3"}}), InvariantError);
    EXPECT_THROW(M(P({"1/2", "1/2"}), K({{"1/2", "1/2"}})), InvariantError);
    EXPECT_THROW(StateSubset::from_indices(3, {}), PreconditionError);
    EXPECT_THROW(StateSubset::from_indices(3, {3}), PreconditionError);
}

TEST(Model, SubsetQueries) {
    const auto g = StateSubset::from_indices(4, {3, 1, 2});
    EXPECT_EQ(g.members(), (std::vector<std::size_t>{1, 2, 3}));
    EXPECT_TRUE(g.is_upper());
    EXPECT_EQ(g, StateSubset::upper(4, 1));
    EXPECT_FALSE(StateSubset::from_indices(4, {1, 3}).is_upper());
    EXPECT_EQ(g.complement(), StateSubset::from_indices(4, {0}));
    EXPECT_THROW(StateSubset::all(4).complement(), PreconditionError);
}

TEST(Model, SignalMarginal) {
    EXPECT_EQ(signal_marginal(example())[1], R("13/24"));
    EXPECT_EQ(signal_marginal(example())[0], R("11/24"));

    const auto constant = M(P({"1/6", "1/3", "1/2"}), K({{"1/5", "4/5"}, {"1/5", "4/5"}, {"1/5", "4/5"}}));
    EXPECT_EQ(signal_marginal(constant), V({"1/5", "4/5"}));

    const auto two = M(P({"1/2", "1/2"}), K({{"2/3", "1/3"}, {"1/3", "2/3"}}));
    EXPECT_EQ(signal_marginal(two)[0], R("1/2"));
}

TEST(Model, ConditionalPrior) {
    EXPECT_EQ(conditional_prior(Prior::uniform(3), top_two()).masses(), V({"0", "1/2", "1/2"}));
    const auto pi = P({"1/6", "1/3", "1/2"});
    EXPECT_EQ(conditional_prior(pi, StateSubset::all(3)), pi);
    EXPECT_EQ(conditional_prior(pi, top_two()).masses(), V({"0", "2/5", "3/5"}));
    EXPECT_THROW(conditional_prior(P({"1", "0"}), StateSubset::from_indices(2, {1})), ConditioningError);
}

TEST(Model, SignalConditional) {
    EXPECT_EQ(signal_conditional(example(), top_two())[1], R("5/8"));
    EXPECT_EQ(signal_conditional(example(), StateSubset::from_indices(3, {2}))[1], R("1/2"));
    EXPECT_EQ(signal_conditional(example(), StateSubset::all(3)), signal_marginal(example()));
}

TEST(Model, PosteriorCurve) {
    const auto q = posterior_curve(example(), top_two());
    EXPECT_EQ(q[1], R("10/13"));
    EXPECT_EQ(q[0], R("6/11"));

    const auto constant = M(P({"1/6", "1/3", "1/2"}), K({{"1/5", "4/5"}, {"1/5", "4/5"}, {"1/5", "4/5"}}));
    for (const auto& v : posterior_curve(constant, top_two())) {
        EXPECT_EQ(v, R("5/6"));
    }
}

TEST(Model, PosteriorUndefinedOnNullSignal) {
    const auto m = M(P({"1/2", "1/2"}), K({{"1/2", "0", "1/2"}, {"1/4", "0", "3/4"}}));
    const auto q = posterior_curve(m, StateSubset::from_indices(2, {1}));
    EXPECT_TRUE(q[0].has_value());
    EXPECT_FALSE(q[1].has_value());
    EXPECT_EQ(q[2], R("3/5"));
    EXPECT_THROW(update_on_signal(m.prior(), m.signals(), 1), ConditioningError);
}

TEST(Model, UpdateOnSignal) {
    const auto post = update_on_signal(Prior::uniform(3), worked_example_model().signals(), 1);
    // pi(theta) sigma(1|theta) / P(1) = (3/8, 3/4, 1/2) / 3 / (13/24)
    EXPECT_EQ(post.masses(), V({"3/13", "6/13", "4/13"}));
}

TEST(Model, PruneNulls) {
    const auto m = M(P({"0", "1"}), K({{"1/2", "1/2"}, {"1/3", "2/3"}}));
    const auto pruned = prune_nulls(m);
    EXPECT_EQ(pruned.num_states(), 1U);
    EXPECT_EQ(pruned.states().label(0), R("1"));
    EXPECT_TRUE(is_pruned(pruned));
    EXPECT_FALSE(is_pruned(m));

    const auto col = M(P({"1/2", "1/2"}), K({{"1/2", "0", "1/2"}, {"1/4", "0", "3/4"}}));
    const auto dropped = prune_nulls(col);
    EXPECT_EQ(dropped.num_signals(), 2U);
    EXPECT_EQ(dropped.signals().labels(), V({"0", "2"}));

    EXPECT_EQ(prune_nulls(example()), example());
    EXPECT_TRUE(is_pruned(example()));
}

TEST(Model, AgreesWithOracleOnRandomModels) {
    Rng rng(11, 0);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = rng.between(1, 5);
        const std::size_t m = rng.between(1, 6);
        const Prior prior = random_prior(rng, n, 12);
        std::vector<RationalVector> kernel;
        for (std::size_t t = 0; t < n; ++t) {
            kernel.push_back(random_distribution(rng, m, 12, true));
        }
        const Model model(StateSpace::indexed(n), prior, SignalingStructure::indexed(kernel));
        const auto pi = oracle::of(prior.masses());
        const auto k = oracle::kernel_of(model.signals());
        ASSERT_TRUE(oracle::same(signal_marginal(model), oracle::mix(pi, k)));

        std::vector<std::size_t> members;
        for (std::size_t t = 0; t < n; ++t) {
            if (rng.one_in(2)) {
                members.push_back(t);
            }
        }
        if (members.empty()) {
            members.push_back(n - 1);
        }
        const auto gamma = StateSubset::from_indices(n, members);
        const auto expected = oracle::posterior(pi, k, mask(gamma));
        const auto got = posterior_curve(model, gamma);
        for (std::size_t s = 0; s < m; ++s) {
            ASSERT_EQ(got[s].has_value(), expected[s].has_value());
            if (got[s]) {
                ASSERT_TRUE(oracle::same(*got[s], *expected[s]));
            }
        }
        ASSERT_TRUE(oracle::same(signal_conditional(model, gamma), oracle::mix(oracle::restrict_to(pi, mask(gamma)), k)));
    }
}
