#pragma once

/**
 * @file generate.hpp
 * @brief Seeded generators of exact random instances for the property suites.
 *
 * Every draw is a pure function of (master seed, tag). The engine is
 * std::mt19937_64, whose output sequence is fixed by the standard; bounded
 * integers are drawn by rejection here rather than through the standard
 * distributions, whose algorithms vary between library implementations.
 * Seeds for individual trials are derived by hashing (SplitMix64), never by
 * consuming a shared stream, so trials can run in any order or in parallel.
 */

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>

#include "postdom/model.hpp"
#include "postdom/monotone.hpp"
#include "postdom/optimism.hpp"

namespace postdom {

struct GenConfig {
    std::uint64_t master_seed = 7;
    std::size_t max_states = 5;
    std::size_t max_signals = 6;
    // Random draws (prior weights, kernel rows, coin probabilities) have
    // denominators no larger than this.
    std::uint64_t denominator_bound = 12;

    // Throws PreconditionError on bounds below 2 or state/signal bounds
    // that the denominator bound cannot accommodate.
    void validate() const;
};

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t tag);

// Tag for trial `index` of an independent stream (one stream per suite or check).
std::uint64_t trial_tag(std::uint64_t stream, std::uint64_t index);

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    Rng(std::uint64_t master, std::uint64_t tag) : engine_(derive_seed(master, tag)) {}

    std::uint64_t next() { return engine_(); }
    // Uniform in [0, n); n > 0.
    std::uint64_t below(std::uint64_t n);
    // Uniform in [lo, hi].
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
    bool one_in(std::uint64_t n) { return below(n) == 0; }
    // k/D with D uniform in [1, bound] and k uniform in [0, D].
    Rational unit_fraction(std::uint64_t bound);

private:
    std::mt19937_64 engine_;
};

// Random distribution on m outcomes with denominators <= bound; strictly
// positive unless allow_zero. Requires m <= bound when strictly positive.
RationalVector random_distribution(Rng& rng, std::size_t m, std::uint64_t bound, bool allow_zero = false);

Prior random_prior(Rng& rng, std::size_t n, std::uint64_t bound);
SignalingStructure random_signaling(Rng& rng, std::size_t n, std::size_t m, std::uint64_t bound);

// State i flips m - 1 coins with success probability q[i]; the signal is the
// number of successes. MLRP whenever q is strictly increasing.
SignalingStructure binomial_family(const RationalVector& q, std::size_t m);

// Rejection sampling for small shapes, otherwise (or on starvation) the
// binomial family with random strictly increasing q.
SignalingStructure random_mlrp(Rng& rng, std::size_t n, std::size_t m, std::uint64_t bound);

// (pt, pi) with pt >=_lr pi, built by recombining a random upper-set decomposition.
std::pair<Prior, Prior> random_lr_pair(Rng& rng, std::size_t n, std::uint64_t bound);

// Nonempty subset other than the whole space; n >= 2.
StateSubset random_proper_subset(Rng& rng, std::size_t n);
StateSubset random_upper_set(Rng& rng, std::size_t n, bool allow_everything);
StrengtheningWeight random_weight(Rng& rng, std::uint64_t bound);

// Sorted random values with deliberate ties.
MonotoneRelabeling random_monotone_relabeling(Rng& rng, std::size_t m, std::uint64_t bound);

Prior gen_prior(std::size_t n, const GenConfig& cfg, std::uint64_t tag);
SignalingStructure gen_signaling(std::size_t n, std::size_t m, const GenConfig& cfg, std::uint64_t tag);
SignalingStructure gen_mlrp(std::size_t n, std::size_t m, const GenConfig& cfg, std::uint64_t tag);
std::pair<Prior, Prior> gen_lr_pair(std::size_t n, const GenConfig& cfg, std::uint64_t tag);

}  // namespace postdom
