#include "postdom/generate.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "postdom/errors.hpp"

namespace postdom {

namespace {

constexpr std::uint64_t kPriorSalt = 0x11;
constexpr std::uint64_t kSignalingSalt = 0x22;
constexpr std::uint64_t kMlrpSalt = 0x33;
constexpr std::uint64_t kLrPairSalt = 0x44;
constexpr int kRejectionAttempts = 64;

Rational frac(std::uint64_t num, std::uint64_t den) {
    return {BigInt(static_cast<unsigned long>(num)), BigInt(static_cast<unsigned long>(den))};
}

// Distinct, sorted draws from [lo, hi].
std::vector<std::uint64_t> distinct_sorted(Rng& rng, std::size_t count, std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> pool(hi - lo + 1);
    std::iota(pool.begin(), pool.end(), lo);
    for (std::size_t i = 0; i < count; ++i) {
        std::swap(pool[i], pool[i + rng.below(pool.size() - i)]);
    }
    pool.resize(count);
    std::sort(pool.begin(), pool.end());
    return pool;
}

Rational binomial_coefficient(std::size_t n, std::size_t k) {
    BigInt out = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        out *= static_cast<unsigned long>(n - k + i);
        out /= static_cast<unsigned long>(i);
    }
    return {out, BigInt(1)};
}

Rational power(const Rational& base, std::size_t exp) {
    Rational out(1);
    for (std::size_t i = 0; i < exp; ++i) {
        out *= base;
    }
    return out;
}

Rng rng_for(const GenConfig& cfg, std::uint64_t salt, std::uint64_t tag) {
    cfg.validate();
    return {cfg.master_seed, trial_tag(salt, tag)};
}

}  // namespace

void GenConfig::validate() const {
    if (max_states < 2 || max_signals < 2 || denominator_bound < 2) {
        throw PreconditionError("generator bounds must all be at least 2");
    }
    if (max_states + 1 > denominator_bound || max_signals > denominator_bound) {
        throw PreconditionError("denominator bound too small for the requested state/signal counts");
    }
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30U)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27U)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31U);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t tag) { return splitmix64(master ^ splitmix64(tag)); }

std::uint64_t trial_tag(std::uint64_t stream, std::uint64_t index) { return splitmix64(stream) ^ index; }

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) {
        throw PreconditionError("Rng::below(0)");
    }
    const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    for (;;) {
        const std::uint64_t x = next();
        if (x >= threshold) {
            return x % n;
        }
    }
}

Rational Rng::unit_fraction(std::uint64_t bound) {
    const std::uint64_t den = between(1, bound);
    return frac(between(0, den), den);
}

RationalVector random_distribution(Rng& rng, std::size_t m, std::uint64_t bound, bool allow_zero) {
    if (m == 0) {
        throw PreconditionError("distribution over zero outcomes");
    }
    if (m == 1) {
        return {Rational(1)};
    }
    std::vector<std::uint64_t> cuts;
    std::uint64_t den = 0;
    if (allow_zero) {
        den = rng.between(1, bound);
        for (std::size_t i = 0; i + 1 < m; ++i) {
            cuts.push_back(rng.between(0, den));
        }
        std::sort(cuts.begin(), cuts.end());
    } else {
        if (m > bound) {
            throw PreconditionError("cannot draw a strictly positive distribution on more outcomes than the bound");
        }
        den = rng.between(m, bound);
        cuts = distinct_sorted(rng, m - 1, 1, den - 1);
    }
    RationalVector out;
    std::uint64_t prev = 0;
    for (auto c : cuts) {
        out.push_back(frac(c - prev, den));
        prev = c;
    }
    out.push_back(frac(den - prev, den));
    return out;
}

Prior random_prior(Rng& rng, std::size_t n, std::uint64_t bound) { return Prior(random_distribution(rng, n, bound)); }

SignalingStructure random_signaling(Rng& rng, std::size_t n, std::size_t m, std::uint64_t bound) {
    std::vector<RationalVector> kernel;
    for (std::size_t i = 0; i < n; ++i) {
        kernel.push_back(random_distribution(rng, m, bound));
    }
    return SignalingStructure::indexed(std::move(kernel));
}

SignalingStructure binomial_family(const RationalVector& q, std::size_t m) {
    if (m == 0) {
        throw PreconditionError("binomial family needs at least one signal");
    }
    const std::size_t flips = m - 1;
    std::vector<RationalVector> kernel;
    for (const auto& success : q) {
        RationalVector row;
        for (std::size_t k = 0; k <= flips; ++k) {
            row.push_back(binomial_coefficient(flips, k) * power(success, k) *
                          power(Rational(1) - success, flips - k));
        }
        kernel.push_back(std::move(row));
    }
    return SignalingStructure::indexed(std::move(kernel));
}

SignalingStructure random_mlrp(Rng& rng, std::size_t n, std::size_t m, std::uint64_t bound) {
    if (n == 1 || m == 1) {
        return random_signaling(rng, n, m, bound);
    }
    if (n <= 4 && m <= 4 && rng.one_in(2)) {
        for (int attempt = 0; attempt < kRejectionAttempts; ++attempt) {
            auto candidate = random_signaling(rng, n, m, bound);
            if (is_mlrp(candidate)) {
                return candidate;
            }
        }
    }
    if (n + 1 > bound) {
        throw PreconditionError("denominator bound too small for a strictly increasing coin family");
    }
    const std::uint64_t den = rng.between(n + 1, bound);
    RationalVector q;
    for (auto k : distinct_sorted(rng, n, 1, den - 1)) {
        q.push_back(frac(k, den));
    }
    return binomial_family(q, m);
}

std::pair<Prior, Prior> random_lr_pair(Rng& rng, std::size_t n, std::uint64_t bound) {
    Prior base = random_prior(rng, n, bound);
    if (rng.one_in(8)) {
        return {base, base};
    }
    std::vector<std::size_t> mins;
    while (mins.empty()) {
        for (std::size_t k = 0; k < n; ++k) {
            if (rng.one_in(2)) {
                mins.push_back(k);
            }
        }
    }
    const auto weights = random_distribution(rng, mins.size(), bound);
    std::vector<DecompositionTerm> terms;
    for (std::size_t i = 0; i < mins.size(); ++i) {
        terms.push_back({mins[i], weights[i]});
    }
    Prior target = recombine(Decomposition(n, std::move(terms)), base);
    return {std::move(target), std::move(base)};
}

StateSubset random_proper_subset(Rng& rng, std::size_t n) {
    if (n < 2 || n > 62) {
        throw PreconditionError("proper subsets need 2 <= n <= 62");
    }
    const std::uint64_t mask = rng.between(1, (std::uint64_t{1} << n) - 2);
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < n; ++i) {
        if ((mask >> i) & 1U) {
            members.push_back(i);
        }
    }
    return StateSubset::from_indices(n, std::move(members));
}

StateSubset random_upper_set(Rng& rng, std::size_t n, bool allow_everything) {
    if (!allow_everything && n < 2) {
        throw PreconditionError("no proper upper set of a one-state space");
    }
    return StateSubset::upper(n, rng.between(allow_everything ? 0 : 1, n - 1));
}

StrengtheningWeight random_weight(Rng& rng, std::uint64_t bound) {
    switch (rng.below(8)) {
        case 0:
            return StrengtheningWeight(Rational(0));
        case 1:
            return StrengtheningWeight(Rational(1));
        default:
            return StrengtheningWeight(rng.unit_fraction(bound));
    }
}

MonotoneRelabeling random_monotone_relabeling(Rng& rng, std::size_t m, std::uint64_t bound) {
    RationalVector values;
    for (std::size_t i = 0; i < m; ++i) {
        // Small denominators make ties common.
        values.push_back(rng.unit_fraction(std::min<std::uint64_t>(bound, 4)));
    }
    std::sort(values.begin(), values.end());
    return MonotoneRelabeling(std::move(values));
}

Prior gen_prior(std::size_t n, const GenConfig& cfg, std::uint64_t tag) {
    auto rng = rng_for(cfg, kPriorSalt, tag);
    return random_prior(rng, n, cfg.denominator_bound);
}

SignalingStructure gen_signaling(std::size_t n, std::size_t m, const GenConfig& cfg, std::uint64_t tag) {
    auto rng = rng_for(cfg, kSignalingSalt, tag);
    return random_signaling(rng, n, m, cfg.denominator_bound);
}

SignalingStructure gen_mlrp(std::size_t n, std::size_t m, const GenConfig& cfg, std::uint64_t tag) {
    auto rng = rng_for(cfg, kMlrpSalt, tag);
    return random_mlrp(rng, n, m, cfg.denominator_bound);
}

std::pair<Prior, Prior> gen_lr_pair(std::size_t n, const GenConfig& cfg, std::uint64_t tag) {
    auto rng = rng_for(cfg, kLrPairSalt, tag);
    return random_lr_pair(rng, n, cfg.denominator_bound);
}

}  // namespace postdom
