#pragma once

/**
 * @file model.hpp
 * @brief Finite Bayesian signaling models: states, priors, signaling kernels,
 *        and the posterior computations built on them.
 *
 * A Model is (states, prior, signaling structure). States and signals carry
 * explicit Rational labels so the order used by upper sets and MLRP survives
 * pruning. All values are validated at construction and immutable afterwards.
 */

#include <cstddef>
#include <optional>
#include <vector>

#include "postdom/rational.hpp"

namespace postdom {

class StateSpace {
public:
    // Labels must be strictly increasing; at least one state.
    explicit StateSpace(RationalVector labels);

    // States labelled 0, 1, ..., n-1.
    static StateSpace indexed(std::size_t n);

    std::size_t size() const { return labels_.size(); }
    const RationalVector& labels() const { return labels_; }
    const Rational& label(std::size_t i) const { return labels_.at(i); }

    friend bool operator==(const StateSpace&, const StateSpace&) = default;

private:
    RationalVector labels_;
};

class StateSubset;

class Prior {
public:
    // Every mass >= 0 and the masses sum to exactly 1.
    explicit Prior(RationalVector mass);

    static Prior uniform(std::size_t n);

    std::size_t size() const { return mass_.size(); }
    const Rational& operator[](std::size_t i) const { return mass_.at(i); }
    const RationalVector& masses() const { return mass_; }

    Rational mass_of(const StateSubset& subset) const;
    bool is_strictly_positive() const;

    friend bool operator==(const Prior&, const Prior&) = default;

private:
    RationalVector mass_;
};

// A nonempty set of state indices (0-based) within a state space of fixed size.
class StateSubset {
public:
    static StateSubset from_indices(std::size_t universe, std::vector<std::size_t> indices);
    // {k, k+1, ..., universe-1}
    static StateSubset upper(std::size_t universe, std::size_t min_index);
    static StateSubset all(std::size_t universe) { return upper(universe, 0); }

    std::size_t universe_size() const { return universe_; }
    const std::vector<std::size_t>& members() const { return members_; }
    std::size_t min_index() const { return members_.front(); }
    bool contains(std::size_t i) const;
    bool is_upper() const;
    bool is_everything() const { return members_.size() == universe_; }

    // Throws PreconditionError when the complement is empty.
    StateSubset complement() const;

    friend bool operator==(const StateSubset&, const StateSubset&) = default;

private:
    StateSubset(std::size_t universe, std::vector<std::size_t> members)
        : universe_(universe), members_(std::move(members)) {}

    std::size_t universe_ = 0;
    std::vector<std::size_t> members_;
};

class SignalingStructure {
public:
    // kernel[state][signal] = sigma(signal | state); each row an exact
    // distribution over the signals, labels strictly increasing.
    SignalingStructure(RationalVector signal_labels, std::vector<RationalVector> kernel);

    // Signals labelled 0, 1, ..., m-1.
    static SignalingStructure indexed(std::vector<RationalVector> kernel);

    std::size_t num_states() const { return kernel_.size(); }
    std::size_t num_signals() const { return labels_.size(); }
    const RationalVector& labels() const { return labels_; }
    const std::vector<RationalVector>& kernel() const { return kernel_; }
    const RationalVector& row(std::size_t state) const { return kernel_.at(state); }
    const Rational& operator()(std::size_t state, std::size_t signal) const { return kernel_.at(state).at(signal); }

    friend bool operator==(const SignalingStructure&, const SignalingStructure&) = default;

private:
    RationalVector labels_;
    std::vector<RationalVector> kernel_;
};

class Model {
public:
    Model(StateSpace states, Prior prior, SignalingStructure signals);

    const StateSpace& states() const { return states_; }
    const Prior& prior() const { return prior_; }
    const SignalingStructure& signals() const { return signals_; }

    std::size_t num_states() const { return states_.size(); }
    std::size_t num_signals() const { return signals_.num_signals(); }

    Model with_prior(Prior prior) const { return {states_, std::move(prior), signals_}; }

    friend bool operator==(const Model&, const Model&) = default;

private:
    StateSpace states_;
    Prior prior_;
    SignalingStructure signals_;
};

// Per-signal probabilities, nonnegative, summing to 1.
using SignalDistribution = RationalVector;

// Q(s), absent where the signal has probability zero.
using PosteriorCurve = std::vector<std::optional<Rational>>;

// Distribution of the signal induced by an arbitrary prior over the same states.
SignalDistribution signal_distribution(const Prior& prior, const SignalingStructure& signals);

// P(s) = sum_theta pi(theta) sigma(s|theta)
SignalDistribution signal_marginal(const Model& model);

// pi conditioned on the subset. Throws ConditioningError if pi(subset) = 0.
Prior conditional_prior(const Prior& prior, const StateSubset& subset);

// P(s | subset). Throws ConditioningError if pi(subset) = 0.
SignalDistribution signal_conditional(const Model& model, const StateSubset& subset);

// P(subset and s) for every signal s.
RationalVector joint_probability(const Model& model, const StateSubset& subset);

// Q(s) = P(subset | s), defined exactly where P(s) > 0.
PosteriorCurve posterior_curve(const Model& model, const StateSubset& subset);

// Posterior over states after observing one signal.
// Throws ConditioningError if the signal has probability zero.
Prior update_on_signal(const Prior& prior, const SignalingStructure& signals, std::size_t signal);

// Drops zero-prior states and zero-probability signals.
// Throws EmptyModelError if nothing would remain.
Model prune_nulls(const Model& model);

bool is_pruned(const Model& model);

}  // namespace postdom
