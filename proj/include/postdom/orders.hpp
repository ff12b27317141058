#pragma once

/**
 * @file orders.hpp
 * @brief Finite random variables with exact values, the likelihood ratio and
 *        first-order stochastic orders, and the dominance check for an
 *        informed observer's view of a posterior.
 *
 * Ratios are always compared as cross-products, f(v')g(v) >= f(v)g(v'), so
 * points where one side has probability zero need no special casing.
 */

#include <cstddef>
#include <optional>
#include <utility>

#include "postdom/model.hpp"
#include "postdom/rational.hpp"

namespace postdom {

// A finite random variable: strictly increasing support with positive
// probabilities summing to 1. Equal values are merged and zero-probability
// values dropped at construction.
class LabeledRandomVariable {
public:
    LabeledRandomVariable(const RationalVector& values, const RationalVector& probs);

    static LabeledRandomVariable point_mass(const Rational& value);

    const RationalVector& support() const { return support_; }
    const RationalVector& probabilities() const { return probs_; }
    std::size_t size() const { return support_.size(); }

    // Zero for values outside the support.
    Rational probability_of(const Rational& value) const;

    friend bool operator==(const LabeledRandomVariable&, const LabeledRandomVariable&) = default;

private:
    LabeledRandomVariable() = default;

    RationalVector support_;
    RationalVector probs_;
};

struct ViolatingPair {
    Rational low;   // v
    Rational high;  // v' > v with f(v')g(v) < f(v)g(v')
    friend bool operator==(const ViolatingPair&, const ViolatingPair&) = default;
};

struct DominanceVerdict {
    bool lr_holds = false;
    bool lr_strict = false;
    bool fosd_holds = false;
    std::optional<ViolatingPair> violating_pair;
};

// Distribution of values(s) when s is drawn from dist. Throws
// PreconditionError if a value is missing at a positive-probability signal.
LabeledRandomVariable pushforward(const PosteriorCurve& values, const SignalDistribution& dist);
LabeledRandomVariable pushforward(const RationalVector& values, const SignalDistribution& dist);

// X >=_lr Y, with strictness and FOSD filled in. The violating pair is the
// first failing (v, v') in increasing order of v, then v'.
DominanceVerdict lr_dominates(const LabeledRandomVariable& x, const LabeledRandomVariable& y);

// P(X >= v) >= P(Y >= v) at every point of the union support.
bool fosd_dominates(const LabeledRandomVariable& x, const LabeledRandomVariable& y);

inline constexpr std::size_t kDefaultOracleBound = 12;

// Brute force over every value set A and every threshold t of the union
// support: E[1{X>=t} | X in A] >= E[1{Y>=t} | Y in A]. Throws
// OracleSizeError if the union support exceeds max_support.
bool lr_dominates_oracle(const LabeledRandomVariable& x, const LabeledRandomVariable& y,
                         std::size_t max_support = kDefaultOracleBound);

// Two-point rule: P(X = v2) >= P(Y = v2). Throws PreconditionError when the
// union support has more than two points.
bool binary_lr_equiv(const LabeledRandomVariable& x, const LabeledRandomVariable& y);

Rational expectation(const LabeledRandomVariable& x);

struct Prop1Report {
    Rational p;                     // pi(Gamma)
    LabeledRandomVariable uninformed;  // (Q, P)
    LabeledRandomVariable informed;    // (Q, P^Gamma)
    DominanceVerdict verdict;
    bool uninformative = false;     // Q constant equal to p
    Rational expectation_uninformed;  // E[Q], always p
    Rational expectation_informed;    // E^Gamma[Q]
    Rational submartingale_gap;       // E^Gamma[Q] - p
    // P^Gamma(Q = q) * p == q * P(Q = q) at every support point.
    bool linearity_holds = false;

    bool lr_holds() const { return verdict.lr_holds; }
    bool lr_strict() const { return verdict.lr_strict; }
};

// Requires a pruned model and 0 < pi(Gamma) < 1; throws PreconditionError
// otherwise.
Prop1Report check_prop1(const Model& model, const StateSubset& gamma);

}  // namespace postdom
