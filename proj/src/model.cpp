#include "postdom/model.hpp"

#include <algorithm>
#include <string>

#include "postdom/errors.hpp"

namespace postdom {

namespace {

void require_strictly_increasing(const RationalVector& labels, const char* what) {
    if (labels.empty()) {
        throw InvariantError(std::string(what) + ": at least one label required");
    }
    for (std::size_t i = 1; i < labels.size(); ++i) {
        if (!(labels[i - 1] < labels[i])) {
            throw InvariantError(std::string(what) + ": labels must be strictly increasing");
        }
    }
}

void require_distribution(const RationalVector& p, const std::string& what) {
    for (const auto& v : p) {
        if (v.is_negative()) {
            throw InvariantError(what + ": negative probability " + v.str());
        }
    }
    if (sum(p) != Rational(1)) {
        throw InvariantError(what + ": probabilities sum to " + sum(p).str() + ", not 1");
    }
}

RationalVector index_labels(std::size_t n) {
    RationalVector labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        labels.emplace_back(i);
    }
    return labels;
}

void require_universe(const Model& model, const StateSubset& subset) {
    if (subset.universe_size() != model.num_states()) {
        throw PreconditionError("state subset does not match the model's state space");
    }
}

}  // namespace

StateSpace::StateSpace(RationalVector labels) : labels_(std::move(labels)) {
    require_strictly_increasing(labels_, "state space");
}

StateSpace StateSpace::indexed(std::size_t n) { return StateSpace(index_labels(n)); }

Prior::Prior(RationalVector mass) : mass_(std::move(mass)) {
    if (mass_.empty()) {
        throw InvariantError("prior over an empty state space");
    }
    require_distribution(mass_, "prior");
}

Prior Prior::uniform(std::size_t n) {
    if (n == 0) {
        throw InvariantError("prior over an empty state space");
    }
    return Prior(RationalVector(n, Rational(BigInt(1), BigInt(static_cast<unsigned long>(n)))));
}

Rational Prior::mass_of(const StateSubset& subset) const {
    if (subset.universe_size() != size()) {
        throw PreconditionError("state subset does not match the prior's state space");
    }
    Rational total;
    for (auto i : subset.members()) {
        total += mass_[i];
    }
    return total;
}

bool Prior::is_strictly_positive() const {
    return std::all_of(mass_.begin(), mass_.end(), [](const Rational& v) { return v.is_positive(); });
}

StateSubset StateSubset::from_indices(std::size_t universe, std::vector<std::size_t> indices) {
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    if (indices.empty()) {
        throw PreconditionError("state subset must be nonempty");
    }
    if (indices.back() >= universe) {
        throw PreconditionError("state index " + std::to_string(indices.back()) + " out of range");
    }
    return {universe, std::move(indices)};
}

StateSubset StateSubset::upper(std::size_t universe, std::size_t min_index) {
    if (min_index >= universe) {
        throw PreconditionError("upper set threshold " + std::to_string(min_index) + " out of range");
    }
    std::vector<std::size_t> members;
    for (auto i = min_index; i < universe; ++i) {
        members.push_back(i);
    }
    return {universe, std::move(members)};
}

bool StateSubset::contains(std::size_t i) const { return std::binary_search(members_.begin(), members_.end(), i); }

bool StateSubset::is_upper() const { return members_.size() == universe_ - members_.front(); }

StateSubset StateSubset::complement() const {
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < universe_; ++i) {
        if (!contains(i)) {
            rest.push_back(i);
        }
    }
    if (rest.empty()) {
        throw PreconditionError("complement of the whole state space is empty");
    }
    return {universe_, std::move(rest)};
}

SignalingStructure::SignalingStructure(RationalVector signal_labels, std::vector<RationalVector> kernel)
    : labels_(std::move(signal_labels)), kernel_(std::move(kernel)) {
    require_strictly_increasing(labels_, "signal set");
    if (kernel_.empty()) {
        throw InvariantError("signaling kernel has no rows");
    }
    for (std::size_t r = 0; r < kernel_.size(); ++r) {
        if (kernel_[r].size() != labels_.size()) {
            throw InvariantError("kernel row " + std::to_string(r) + " has " + std::to_string(kernel_[r].size()) +
                                 " entries, expected " + std::to_string(labels_.size()));
        }
        require_distribution(kernel_[r], "kernel row " + std::to_string(r));
    }
}

SignalingStructure SignalingStructure::indexed(std::vector<RationalVector> kernel) {
    const std::size_t m = kernel.empty() ? 0 : kernel.front().size();
    return {index_labels(m), std::move(kernel)};
}

Model::Model(StateSpace states, Prior prior, SignalingStructure signals)
    : states_(std::move(states)), prior_(std::move(prior)), signals_(std::move(signals)) {
    if (prior_.size() != states_.size() || signals_.num_states() != states_.size()) {
        throw InvariantError("model dimensions disagree: " + std::to_string(states_.size()) + " states, " +
                             std::to_string(prior_.size()) + " prior entries, " +
                             std::to_string(signals_.num_states()) + " kernel rows");
    }
}

SignalDistribution signal_distribution(const Prior& prior, const SignalingStructure& signals) {
    if (prior.size() != signals.num_states()) {
        throw PreconditionError("prior and signaling structure have different state counts");
    }
    SignalDistribution out(signals.num_signals());
    for (std::size_t t = 0; t < prior.size(); ++t) {
        if (prior[t].is_zero()) {
            continue;
        }
        for (std::size_t s = 0; s < out.size(); ++s) {
            out[s] += prior[t] * signals(t, s);
        }
    }
    return out;
}

SignalDistribution signal_marginal(const Model& model) { return signal_distribution(model.prior(), model.signals()); }

Prior conditional_prior(const Prior& prior, const StateSubset& subset) {
    const Rational p = prior.mass_of(subset);
    if (p.is_zero()) {
        throw ConditioningError("conditioning on a state subset of prior probability zero");
    }
    RationalVector out(prior.size());
    for (auto i : subset.members()) {
        out[i] = prior[i] / p;
    }
    return Prior(std::move(out));
}

SignalDistribution signal_conditional(const Model& model, const StateSubset& subset) {
    require_universe(model, subset);
    return signal_distribution(conditional_prior(model.prior(), subset), model.signals());
}

RationalVector joint_probability(const Model& model, const StateSubset& subset) {
    require_universe(model, subset);
    RationalVector out(model.num_signals());
    for (auto t : subset.members()) {
        for (std::size_t s = 0; s < out.size(); ++s) {
            out[s] += model.prior()[t] * model.signals()(t, s);
        }
    }
    return out;
}

PosteriorCurve posterior_curve(const Model& model, const StateSubset& subset) {
    const auto joint = joint_probability(model, subset);
    const auto marginal = signal_marginal(model);
    PosteriorCurve out(marginal.size());
    for (std::size_t s = 0; s < marginal.size(); ++s) {
        if (marginal[s].is_positive()) {
            out[s] = joint[s] / marginal[s];
        }
    }
    return out;
}

Prior update_on_signal(const Prior& prior, const SignalingStructure& signals, std::size_t signal) {
    if (prior.size() != signals.num_states() || signal >= signals.num_signals()) {
        throw PreconditionError("signal index or state count out of range");
    }
    RationalVector joint(prior.size());
    for (std::size_t t = 0; t < prior.size(); ++t) {
        joint[t] = prior[t] * signals(t, signal);
    }
    const Rational total = sum(joint);
    if (total.is_zero()) {
        throw ConditioningError("updating on a signal of probability zero");
    }
    for (auto& v : joint) {
        v /= total;
    }
    return Prior(std::move(joint));
}

Model prune_nulls(const Model& model) {
    const auto marginal = signal_marginal(model);
    std::vector<std::size_t> keep_states;
    std::vector<std::size_t> keep_signals;
    for (std::size_t t = 0; t < model.num_states(); ++t) {
        if (model.prior()[t].is_positive()) {
            keep_states.push_back(t);
        }
    }
    for (std::size_t s = 0; s < marginal.size(); ++s) {
        if (marginal[s].is_positive()) {
            keep_signals.push_back(s);
        }
    }
    if (keep_states.empty() || keep_signals.empty()) {
        throw EmptyModelError("pruning removed every state");
    }

    RationalVector state_labels;
    RationalVector mass;
    std::vector<RationalVector> kernel;
    for (auto t : keep_states) {
        state_labels.push_back(model.states().label(t));
        mass.push_back(model.prior()[t]);
        RationalVector row;
        for (auto s : keep_signals) {
            row.push_back(model.signals()(t, s));
        }
        kernel.push_back(std::move(row));
    }
    RationalVector signal_labels;
    for (auto s : keep_signals) {
        signal_labels.push_back(model.signals().labels()[s]);
    }
    return {StateSpace(std::move(state_labels)), Prior(std::move(mass)),
            SignalingStructure(std::move(signal_labels), std::move(kernel))};
}

bool is_pruned(const Model& model) {
    if (!model.prior().is_strictly_positive()) {
        return false;
    }
    const auto marginal = signal_marginal(model);
    return std::all_of(marginal.begin(), marginal.end(), [](const Rational& v) { return v.is_positive(); });
}

}  // namespace postdom
