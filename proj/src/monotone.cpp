#include "postdom/monotone.hpp"

#include <algorithm>

#include "postdom/errors.hpp"
#include "postdom/generate.hpp"

namespace postdom {

namespace {

constexpr std::uint64_t kProp4Stream = 0x9404;
constexpr std::size_t kProp4MaxSignals = 6;
constexpr std::uint64_t kProp4Bound = 12;

Rational third(long k) { return {BigInt(k), BigInt(3)}; }

}  // namespace

Decomposition::Decomposition(std::size_t universe, std::vector<DecompositionTerm> terms)
    : universe_(universe), terms_(std::move(terms)) {
    if (terms_.empty()) {
        throw InvariantError("decomposition without terms");
    }
    Rational total;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].gamma_min_index >= universe_) {
            throw InvariantError("decomposition term refers to a state outside the space");
        }
        if (i > 0 && terms_[i - 1].gamma_min_index >= terms_[i].gamma_min_index) {
            throw InvariantError("decomposition upper sets must be strictly nested");
        }
        if (terms_[i].a.is_negative()) {
            throw InvariantError("negative decomposition weight " + terms_[i].a.str());
        }
        total += terms_[i].a;
    }
    if (total != Rational(1)) {
        throw InvariantError("decomposition weights sum to " + total.str() + ", not 1");
    }
}

Prior recombine(const Decomposition& dec, const Prior& prior) {
    if (dec.universe_size() != prior.size()) {
        throw PreconditionError("decomposition and prior have different state counts");
    }
    RationalVector out(prior.size());
    for (std::size_t k = 0; k < dec.terms().size(); ++k) {
        const Prior cond = conditional_prior(prior, dec.gamma(k));
        for (std::size_t i = 0; i < out.size(); ++i) {
            out[i] += dec.terms()[k].a * cond[i];
        }
    }
    return Prior(std::move(out));
}

MonotoneRelabeling::MonotoneRelabeling(RationalVector values) : values_(std::move(values)) {
    if (!std::is_sorted(values_.begin(), values_.end())) {
        throw InvariantError("relabeling must be non-decreasing in the signal order");
    }
}

bool is_mlrp(const SignalingStructure& signals) {
    const std::size_t n = signals.num_states();
    const std::size_t m = signals.num_signals();
    for (std::size_t s = 0; s < m; ++s) {
        for (std::size_t s2 = s + 1; s2 < m; ++s2) {
            for (std::size_t t = 0; t < n; ++t) {
                for (std::size_t t2 = t + 1; t2 < n; ++t2) {
                    if (signals(t2, s2) * signals(t, s) < signals(t2, s) * signals(t, s2)) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

bool prior_lr_dominates(const Prior& target, const Prior& prior, const StateSpace& states) {
    if (target.size() != states.size() || prior.size() != states.size()) {
        throw PreconditionError("priors and state space differ in size");
    }
    const LabeledRandomVariable x(states.labels(), target.masses());
    const LabeledRandomVariable y(states.labels(), prior.masses());
    return lr_dominates(x, y).lr_holds;
}

std::optional<std::size_t> falling_adjacent_pair(const Prior& target, const Prior& prior) {
    if (target.size() != prior.size()) {
        throw PreconditionError("priors differ in size");
    }
    for (std::size_t i = 0; i + 1 < prior.size(); ++i) {
        if (target[i + 1] * prior[i] < target[i] * prior[i + 1]) {
            return i;
        }
    }
    return std::nullopt;
}

std::optional<Decomposition> upper_set_decomposition(const Prior& target, const Prior& prior,
                                                     const StateSpace& states) {
    if (target.size() != states.size() || prior.size() != states.size()) {
        throw PreconditionError("priors and state space differ in size");
    }
    if (!prior.is_strictly_positive()) {
        throw PreconditionError("decomposition needs a strictly positive base prior");
    }
    const std::size_t n = prior.size();
    RationalVector h(n);
    for (std::size_t i = 0; i < n; ++i) {
        h[i] = target[i] / prior[i];
    }
    std::vector<DecompositionTerm> terms;
    Rational tail = prior.mass_of(StateSubset::all(n));
    for (std::size_t i = 0; i < n; ++i) {
        const Rational step = i == 0 ? h[0] : h[i] - h[i - 1];
        if (step.is_negative()) {
            return std::nullopt;
        }
        if (step.is_positive()) {
            terms.push_back({i, step * tail});
        }
        tail -= prior[i];
    }
    return Decomposition(n, std::move(terms));
}

StrengtheningSequence strengthening_sequence(const Decomposition& dec, const Prior& prior) {
    if (dec.universe_size() != prior.size()) {
        throw PreconditionError("decomposition and prior have different state counts");
    }
    StrengtheningSequence seq;
    Rational partial;
    for (std::size_t k = 0; k < dec.terms().size(); ++k) {
        const Rational& a = dec.terms()[k].a;
        if (a.is_zero()) {
            continue;
        }
        partial += a;
        auto gamma = dec.gamma(k);
        if (gamma.is_everything()) {
            continue;  // conditioning on the whole space changes nothing
        }
        seq.steps.push_back({std::move(gamma), StrengtheningWeight(a / partial)});
    }
    return seq;
}

Prior apply_sequence(const Prior& prior, const StrengtheningSequence& seq) {
    Prior current = prior;
    for (const auto& step : seq.steps) {
        current = gamma_strengthen(current, step.gamma, step.weight);
    }
    return current;
}

LabeledRandomVariable pushforward_monotone(const SignalDistribution& dist, const MonotoneRelabeling& relabel) {
    if (dist.size() != relabel.values().size()) {
        throw PreconditionError("relabeling and distribution differ in length");
    }
    return pushforward(relabel.values(), dist);
}

bool posterior_monotone_check(const Model& model, const StateSubset& gamma) {
    if (!is_mlrp(model.signals())) {
        throw PreconditionError("posterior monotonicity check needs an MLRP structure");
    }
    if (!gamma.is_upper()) {
        throw PreconditionError("posterior monotonicity check needs an upper set");
    }
    if (!is_pruned(model)) {
        throw PreconditionError("posterior monotonicity check needs a pruned model");
    }
    const auto q = posterior_curve(model, gamma);
    for (std::size_t s = 1; s < q.size(); ++s) {
        if (*q[s] < *q[s - 1]) {
            return false;
        }
    }
    return true;
}

AdjacentPairWitness adjacent_pair_witness(const StateSpace& states, std::size_t lower_index) {
    const std::size_t n = states.size();
    if (lower_index + 1 >= n) {
        throw PreconditionError("adjacent pair index " + std::to_string(lower_index) + " out of range for " +
                                std::to_string(n) + " states");
    }
    std::vector<RationalVector> kernel;
    for (std::size_t i = 0; i < n; ++i) {
        RationalVector row(4);
        if (i < lower_index) {
            row[0] = Rational(1);
        } else if (i == lower_index) {
            row[1] = third(2);
            row[2] = third(1);
        } else if (i == lower_index + 1) {
            row[1] = third(1);
            row[2] = third(2);
        } else {
            row[3] = Rational(1);
        }
        kernel.push_back(std::move(row));
    }
    return {SignalingStructure::indexed(std::move(kernel)), StateSubset::upper(n, lower_index + 1)};
}

bool Prop4Report::passed() const {
    if (!equivalence_holds()) {
        return false;
    }
    if (prior_dominates) {
        return recombination_exact && replay_exact && steps_increase_lr && signal_violations == 0 &&
               relabel_violations == 0 && posterior_violations == 0 && monotone_violations == 0;
    }
    return falling_pair.has_value() && witness_is_mlrp && witness_violates_posterior_lr;
}

Prop4Report check_prop4(const Prior& target, const Prior& prior, const StateSpace& states, std::size_t trials,
                        std::uint64_t seed) {
    if (!prior.is_strictly_positive()) {
        throw PreconditionError("check_prop4 needs a strictly positive base prior");
    }
    const std::size_t n = states.size();
    Prop4Report r;
    r.prior_dominates = prior_lr_dominates(target, prior, states);
    r.decomposition = upper_set_decomposition(target, prior, states);

    if (!r.prior_dominates) {
        r.falling_pair = falling_adjacent_pair(target, prior);
        if (!r.falling_pair) {
            return r;
        }
        const auto w = adjacent_pair_witness(states, *r.falling_pair);
        r.witness_is_mlrp = is_mlrp(w.structure);
        const Model model(states, prior, w.structure);
        const auto q = posterior_curve(model, w.gamma);
        const auto p = signal_marginal(model);
        const auto pt = signal_distribution(target, w.structure);
        // Signal 1 carries the low interior posterior, signal 2 the high one.
        r.ratio_low = pt[1] / p[1];
        r.ratio_high = pt[2] / p[2];
        const bool lr = lr_dominates(pushforward(q, pt), pushforward(q, p)).lr_holds;
        r.witness_violates_posterior_lr = *q[1] < *q[2] && r.ratio_high < r.ratio_low && !lr;
        return r;
    }

    if (r.decomposition) {
        r.recombination_exact = recombine(*r.decomposition, prior) == target;
        r.sequence = strengthening_sequence(*r.decomposition, prior);
        r.replay_exact = apply_sequence(prior, *r.sequence) == target;
        r.steps_increase_lr = true;
        Prior current = prior;
        for (const auto& step : r.sequence->steps) {
            Prior next = gamma_strengthen(current, step.gamma, step.weight);
            r.steps_increase_lr = r.steps_increase_lr && prior_lr_dominates(next, current, states);
            current = std::move(next);
        }
    }

    r.trials = trials;
    for (std::size_t t = 0; t < trials; ++t) {
        Rng rng(seed, trial_tag(kProp4Stream, t));
        const std::size_t m = rng.between(1, kProp4MaxSignals);
        const auto structure = random_mlrp(rng, n, m, kProp4Bound);
        const auto gamma = random_upper_set(rng, n, true);
        const auto relabel = random_monotone_relabeling(rng, m, kProp4Bound);

        const Model model(states, prior, structure);
        const auto p = signal_marginal(model);
        const auto pt = signal_distribution(target, structure);
        const auto& labels = structure.labels();
        if (!lr_dominates(pushforward(labels, pt), pushforward(labels, p)).lr_holds) {
            ++r.signal_violations;
        }
        if (!lr_dominates(pushforward_monotone(pt, relabel), pushforward_monotone(p, relabel)).lr_holds) {
            ++r.relabel_violations;
        }
        const auto q = posterior_curve(model, gamma);
        if (!lr_dominates(pushforward(q, pt), pushforward(q, p)).lr_holds) {
            ++r.posterior_violations;
        }
        const Model pruned = prune_nulls(model);
        const auto pruned_gamma = StateSubset::upper(n, gamma.min_index());
        if (!posterior_monotone_check(pruned, pruned_gamma)) {
            ++r.monotone_violations;
        }
    }
    return r;
}

}  // namespace postdom
