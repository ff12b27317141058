#pragma once

/**
 * @file monotone.hpp
 * @brief Monotone likelihood ratio structures, upper sets, and monotonic
 *        strengthening of priors.
 *
 * Upper sets of an ordered state space {theta_0 < ... < theta_{n-1}} are
 * identified by their minimal index k: {theta_k, ..., theta_{n-1}}.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "postdom/model.hpp"
#include "postdom/optimism.hpp"
#include "postdom/orders.hpp"

namespace postdom {

struct DecompositionTerm {
    std::size_t gamma_min_index = 0;
    Rational a;
    friend bool operator==(const DecompositionTerm&, const DecompositionTerm&) = default;
};

// Target = sum_i a_i pi^{G_i} over strictly nested upper sets G_1 > G_2 > ...
class Decomposition {
public:
    // Terms ordered by strictly increasing min index, weights >= 0 summing to 1.
    Decomposition(std::size_t universe, std::vector<DecompositionTerm> terms);

    std::size_t universe_size() const { return universe_; }
    const std::vector<DecompositionTerm>& terms() const { return terms_; }
    StateSubset gamma(std::size_t term) const { return StateSubset::upper(universe_, terms_.at(term).gamma_min_index); }

    friend bool operator==(const Decomposition&, const Decomposition&) = default;

private:
    std::size_t universe_;
    std::vector<DecompositionTerm> terms_;
};

// sum_i a_i pi^{G_i}
Prior recombine(const Decomposition& dec, const Prior& prior);

struct StrengtheningStep {
    StateSubset gamma;
    StrengtheningWeight weight;
};

struct StrengtheningSequence {
    std::vector<StrengtheningStep> steps;
};

// R(s), non-decreasing in the signal order.
class MonotoneRelabeling {
public:
    explicit MonotoneRelabeling(RationalVector values);

    const RationalVector& values() const { return values_; }

private:
    RationalVector values_;
};

// sigma(s'|t') sigma(s|t) >= sigma(s|t') sigma(s'|t) for all s' > s, t' > t.
bool is_mlrp(const SignalingStructure& signals);

// Priors as random variables on the state labels, compared by lr_dominates.
bool prior_lr_dominates(const Prior& target, const Prior& prior, const StateSpace& states);

// Lowest i with pt(i+1)/pi(i+1) < pt(i)/pi(i), if any.
std::optional<std::size_t> falling_adjacent_pair(const Prior& target, const Prior& prior);

// Writes h = pt/pi as sum_i c_i 1{G_i} with G_i = {theta_i, ...} and
// a_i = c_i pi(G_i); zero terms dropped. Absent when h is not increasing.
// Throws PreconditionError when pi has a zero coordinate.
std::optional<Decomposition> upper_set_decomposition(const Prior& target, const Prior& prior,
                                                     const StateSpace& states);

// Orders the decomposition into single upper-set strengthenings from the
// base prior: step k uses weight a_k / (a_1 + ... + a_k), and a leading
// no-op step on the whole space is omitted.
StrengtheningSequence strengthening_sequence(const Decomposition& dec, const Prior& prior);

// Left fold of gamma_strengthen; each step conditions under the current
// prior. Throws ConditioningError if a step's set has probability zero.
Prior apply_sequence(const Prior& prior, const StrengtheningSequence& seq);

LabeledRandomVariable pushforward_monotone(const SignalDistribution& dist, const MonotoneRelabeling& relabel);

// Whether Q_G is non-decreasing in s. Requires an MLRP, pruned model and an
// upper set (PreconditionError otherwise).
bool posterior_monotone_check(const Model& model, const StateSubset& gamma);

struct AdjacentPairWitness {
    SignalingStructure structure;  // signals 0, 1, 2, 3
    StateSubset gamma;             // {theta >= theta_{i+1}}
};

// States below the pair emit 0, above it 3; theta_i emits (1, 2) with
// probabilities (2/3, 1/3), theta_{i+1} with (1/3, 2/3). Requires i + 1 < n.
AdjacentPairWitness adjacent_pair_witness(const StateSpace& states, std::size_t lower_index);

struct Prop4Report {
    bool prior_dominates = false;                   // pt >=_lr pi
    std::optional<Decomposition> decomposition;     // upper-set decomposition
    bool recombination_exact = false;
    std::optional<StrengtheningSequence> sequence;  // monotonic strengthening
    bool replay_exact = false;
    bool steps_increase_lr = false;

    std::size_t trials = 0;
    std::size_t signal_violations = 0;     // (S, pt-P) >=_lr (S, P)
    std::size_t relabel_violations = 0;    // (R(S), pt-P) >=_lr (R(S), P), R monotone
    std::size_t posterior_violations = 0;  // (Q_G, pt-P) >=_lr (Q_G, P), G an upper set
    std::size_t monotone_violations = 0;   // Q_G non-decreasing under MLRP

    std::optional<std::size_t> falling_pair;
    Rational ratio_high;  // pt-P(Q = a2) / P(Q = a2)
    Rational ratio_low;   // pt-P(Q = a1) / P(Q = a1)
    bool witness_is_mlrp = false;
    bool witness_violates_posterior_lr = false;

    bool equivalence_holds() const { return prior_dominates == decomposition.has_value(); }
    bool passed() const;
};

// Decides prior lr dominance and decomposability and checks they agree. If
// they hold, replays the sequence and samples `trials` MLRP structures, upper
// sets and monotone relabelings, counting dominance failures of the signal,
// the relabeled signal and the posterior. Otherwise builds the adjacent-pair
// witness and checks that posterior dominance fails on it. Requires pi
// strictly positive.
Prop4Report check_prop4(const Prior& target, const Prior& prior, const StateSpace& states, std::size_t trials,
                        std::uint64_t seed);

}  // namespace postdom
