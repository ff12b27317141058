#pragma once

/**
 * @file optimism.hpp
 * @brief Strengthening a prior toward a set of states, and deciding whether an
 *        observer holding a different prior is optimistic about the posterior
 *        of that set under every signaling structure.
 *
 * Optimism is decided two independent ways: by solving for the segment
 * coefficient a in pt = a pi^G + (1 - a) pi, and by searching for a binary
 * witness structure with an exact LP. The two must always agree.
 */

#include <cstddef>
#include <cstdint>
#include <optional>

#include "postdom/model.hpp"
#include "postdom/rational.hpp"

namespace postdom {

// A weight in [0, 1].
class StrengtheningWeight {
public:
    explicit StrengtheningWeight(Rational a);

    const Rational& value() const { return a_; }

    friend bool operator==(const StrengtheningWeight&, const StrengtheningWeight&) = default;

private:
    Rational a_;
};

// a pi^G + (1 - a) pi. Throws ConditioningError if pi(G) = 0.
Prior gamma_strengthen(const Prior& prior, const StateSubset& gamma, const StrengtheningWeight& a);

// The a in [0, 1] with target = a pi^G + (1 - a) pi, if any. Requires pi
// strictly positive and 0 < pi(G) < 1 (PreconditionError otherwise).
std::optional<StrengtheningWeight> segment_coefficient(const Prior& target, const Prior& prior,
                                                       const StateSubset& gamma);

bool is_gamma_optimistic(const Prior& target, const Prior& prior, const StateSubset& gamma);

// Binary structure sigma(1|theta) = 1/2 + x_theta, sigma(0|theta) = 1/2 - x_theta.
struct WitnessStructure {
    RationalVector x;
    SignalingStructure structure;
};

// Throws PreconditionError unless every |x_theta| <= 1/2.
WitnessStructure make_witness_structure(RationalVector x);

struct WitnessCheck {
    bool prior_orthogonal = false;      // pi . x == 0
    bool conditional_positive = false;  // pi^G . x > 0
    bool target_negative = false;       // pt . x < 0
    bool kernel_valid = false;          // all entries in [0, 1]
    bool posterior_increasing = false;  // Q(1) > Q(0)
    bool binary_rule_fails = false;     // pt-P(1) < P(1)
    bool lr_fails = false;              // (Q, pt-P) >=_lr (Q, P) is false
    bool fosd_fails = false;

    bool all() const {
        return prior_orthogonal && conditional_positive && target_negative && kernel_valid && posterior_increasing &&
               binary_rule_fails && lr_fails && fosd_fails;
    }
};

WitnessCheck check_witness(const WitnessStructure& w, const Prior& target, const Prior& prior,
                           const StateSubset& gamma);

// Solves pi . x = 0, pi^G . x > 0, pt . x < 0 exactly and rescales so that
// max |x_theta| = 1/2. Present iff pt is not a G-strengthening of pi.
std::optional<WitnessStructure> optimism_witness_search(const Prior& target, const Prior& prior,
                                                        const StateSubset& gamma);

// y pi + z pi^G - w pt = 0 with z, w >= 0 not both zero.
struct MotzkinMultipliers {
    Rational y;
    Rational z;
    Rational w;
};

// Exactly one side is populated.
struct FeasibilityCertificate {
    std::optional<WitnessStructure> witness;
    std::optional<MotzkinMultipliers> multipliers;
};

// Witness when optimism fails, multipliers (1 - a, a, 1) when it holds.
// Throws Error if the witness search and the segment test disagree.
FeasibilityCertificate optimism_certificate(const Prior& target, const Prior& prior, const StateSubset& gamma);

bool verify_certificate(const FeasibilityCertificate& cert, const Prior& target, const Prior& prior,
                        const StateSubset& gamma);

// An extra binary signal (T, tau) observed before S: tau(t0|theta) = b on G
// and c off G, with b >= c. Signal t0 is index 0.
struct TwoSignalStructure {
    SignalingStructure tau;
    std::size_t t0 = 0;
    Rational b;
    Rational c;
};

// Bayes-updating the prior on t0 reproduces gamma_strengthen(prior, gamma, a).
// Scaled so that b = 1; a = 1 gives (b, c) = (1, 0).
TwoSignalStructure strengthening_as_extra_signal(const Prior& prior, const StateSubset& gamma,
                                                 const StrengtheningWeight& a);

// Reversed dominance for every structure, i.e. pt lies on the segment
// between pi and pi^{G^C}.
bool is_gamma_pessimistic(const Prior& target, const Prior& prior, const StateSubset& gamma);

struct BinaryFosdReport {
    bool optimistic = false;
    std::size_t trials = 0;
    std::size_t sampled_fosd_violations = 0;
    std::optional<WitnessStructure> witness;
    bool witness_violates_fosd = false;

    bool passed() const {
        return optimistic ? (sampled_fosd_violations == 0 && !witness) : (witness && witness_violates_fosd);
    }
};

// Samples random binary structures and compares (Q, pt-P) to (Q, P) under
// FOSD; for non-optimistic targets also checks the witness violates FOSD.
BinaryFosdReport check_binary_fosd(const Prior& target, const Prior& prior, const StateSubset& gamma, std::size_t trials,
                             std::uint64_t seed);

}  // namespace postdom
