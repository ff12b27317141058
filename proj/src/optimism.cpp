#include "postdom/optimism.hpp"

#include <algorithm>
#include <vector>

#include "postdom/errors.hpp"
#include "postdom/generate.hpp"
#include "postdom/orders.hpp"
#include "postdom/simplex.hpp"

namespace postdom {

namespace {

constexpr std::uint64_t kBinaryFosdStream = 0x5EA1;

void require_segment_domain(const Prior& target, const Prior& prior, const StateSubset& gamma) {
    if (target.size() != prior.size() || gamma.universe_size() != prior.size()) {
        throw PreconditionError("priors and state subset must share one state space");
    }
    if (!prior.is_strictly_positive()) {
        throw PreconditionError("base prior must be strictly positive (prune null states first)");
    }
    const Rational p = prior.mass_of(gamma);
    if (!(p.is_positive() && p < Rational(1))) {
        throw PreconditionError("need 0 < pi(Gamma) < 1, got " + p.str());
    }
}

SignalingStructure binary_structure(const RationalVector& up) {
    std::vector<RationalVector> kernel;
    kernel.reserve(up.size());
    for (const auto& u : up) {
        kernel.push_back({Rational(1) - u, u});
    }
    return SignalingStructure::indexed(std::move(kernel));
}

}  // namespace

StrengtheningWeight::StrengtheningWeight(Rational a) : a_(std::move(a)) {
    if (a_.is_negative() || a_ > Rational(1)) {
        throw InvariantError("strengthening weight " + a_.str() + " outside [0, 1]");
    }
}

Prior gamma_strengthen(const Prior& prior, const StateSubset& gamma, const StrengtheningWeight& a) {
    const Prior cond = conditional_prior(prior, gamma);
    const Rational& w = a.value();
    RationalVector out(prior.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = w * cond[i] + (Rational(1) - w) * prior[i];
    }
    return Prior(std::move(out));
}

std::optional<StrengtheningWeight> segment_coefficient(const Prior& target, const Prior& prior,
                                                       const StateSubset& gamma) {
    require_segment_domain(target, prior, gamma);
    if (conditional_prior(prior, gamma) == prior) {
        if (target == prior) {
            return StrengtheningWeight(Rational(0));
        }
        return std::nullopt;
    }
    // Off Gamma, pt = (1 - a) pi; every such coordinate must give the same a.
    std::optional<Rational> one_minus_a;
    for (std::size_t i = 0; i < prior.size(); ++i) {
        if (gamma.contains(i)) {
            continue;
        }
        Rational ratio = target[i] / prior[i];
        if (one_minus_a && *one_minus_a != ratio) {
            return std::nullopt;
        }
        one_minus_a = std::move(ratio);
    }
    const Rational a = Rational(1) - *one_minus_a;
    if (a.is_negative() || a > Rational(1)) {
        return std::nullopt;
    }
    StrengtheningWeight weight(a);
    if (gamma_strengthen(prior, gamma, weight) != target) {
        return std::nullopt;
    }
    return weight;
}

bool is_gamma_optimistic(const Prior& target, const Prior& prior, const StateSubset& gamma) {
    return segment_coefficient(target, prior, gamma).has_value();
}

WitnessStructure make_witness_structure(RationalVector x) {
    const Rational half(BigInt(1), BigInt(2));
    RationalVector up;
    up.reserve(x.size());
    for (const auto& v : x) {
        if (v.abs() > half) {
            throw PreconditionError("witness coordinate " + v.str() + " outside [-1/2, 1/2]");
        }
        up.push_back(half + v);
    }
    return {std::move(x), binary_structure(up)};
}

WitnessCheck check_witness(const WitnessStructure& w, const Prior& target, const Prior& prior,
                           const StateSubset& gamma) {
    WitnessCheck c;
    const Prior cond = conditional_prior(prior, gamma);
    c.prior_orthogonal = dot(prior.masses(), w.x).is_zero();
    c.conditional_positive = dot(cond.masses(), w.x).is_positive();
    c.target_negative = dot(target.masses(), w.x).is_negative();
    c.kernel_valid = std::all_of(w.structure.kernel().begin(), w.structure.kernel().end(), [](const auto& row) {
        return std::all_of(row.begin(), row.end(),
                           [](const Rational& v) { return !v.is_negative() && v <= Rational(1); });
    });

    const Model model(StateSpace::indexed(prior.size()), prior, w.structure);
    const auto q = posterior_curve(model, gamma);
    const auto p = signal_marginal(model);
    const auto pt = signal_distribution(target, w.structure);
    c.posterior_increasing = q[0] && q[1] && *q[1] > *q[0];
    c.binary_rule_fails = pt[1] < p[1];
    if (q[0] && q[1]) {
        const auto x = pushforward(q, pt);
        const auto y = pushforward(q, p);
        c.lr_fails = !lr_dominates(x, y).lr_holds;
        c.fosd_fails = !fosd_dominates(x, y);
    }
    return c;
}

std::optional<WitnessStructure> optimism_witness_search(const Prior& target, const Prior& prior,
                                                        const StateSubset& gamma) {
    require_segment_domain(target, prior, gamma);
    const Prior cond = conditional_prior(prior, gamma);
    const std::vector<LinearEquality> eq{{prior.masses(), Rational(0)}};
    RationalVector negated_target;
    for (const auto& v : target.masses()) {
        negated_target.push_back(-v);
    }
    const std::vector<RationalVector> strict{cond.masses(), negated_target};
    auto x = feasibility_solve(eq, strict, Rational(BigInt(1), BigInt(2)));
    if (!x) {
        return std::nullopt;
    }
    // The three relations are homogeneous, so rescaling keeps them.
    Rational largest;
    for (const auto& v : *x) {
        largest = std::max(largest, v.abs());
    }
    const Rational scale = Rational(BigInt(1), BigInt(2)) / largest;
    for (auto& v : *x) {
        v *= scale;
    }
    auto witness = make_witness_structure(std::move(*x));
    if (!check_witness(witness, target, prior, gamma).all()) {
        throw Error("witness search produced a structure that does not certify non-optimism");
    }
    return witness;
}

FeasibilityCertificate optimism_certificate(const Prior& target, const Prior& prior, const StateSubset& gamma) {
    FeasibilityCertificate cert;
    cert.witness = optimism_witness_search(target, prior, gamma);
    const auto a = segment_coefficient(target, prior, gamma);
    if (cert.witness.has_value() == a.has_value()) {
        throw Error("witness search and segment coefficient disagree");
    }
    if (a) {
        cert.multipliers = MotzkinMultipliers{Rational(1) - a->value(), a->value(), Rational(1)};
    }
    return cert;
}

bool verify_certificate(const FeasibilityCertificate& cert, const Prior& target, const Prior& prior,
                        const StateSubset& gamma) {
    if (cert.witness.has_value() == cert.multipliers.has_value()) {
        return false;
    }
    if (cert.witness) {
        return check_witness(*cert.witness, target, prior, gamma).all();
    }
    const auto& m = *cert.multipliers;
    if (m.z.is_negative() || m.w.is_negative() || (m.z.is_zero() && m.w.is_zero())) {
        return false;
    }
    const Prior cond = conditional_prior(prior, gamma);
    for (std::size_t i = 0; i < prior.size(); ++i) {
        if (!(m.y * prior[i] + m.z * cond[i] - m.w * target[i]).is_zero()) {
            return false;
        }
    }
    return true;
}

TwoSignalStructure strengthening_as_extra_signal(const Prior& prior, const StateSubset& gamma,
                                                 const StrengtheningWeight& a) {
    const Rational p = prior.mass_of(gamma);
    if (p.is_zero()) {
        throw ConditioningError("strengthening toward a set of prior probability zero");
    }
    const Rational& w = a.value();
    Rational b(1);
    Rational c;
    if (w < Rational(1)) {
        // b / c = (a/p + 1 - a) / (1 - a)
        c = (Rational(1) - w) / (w / p + Rational(1) - w);
    }
    RationalVector up;
    for (std::size_t i = 0; i < prior.size(); ++i) {
        up.push_back(gamma.contains(i) ? b : c);
    }
    std::vector<RationalVector> kernel;
    for (const auto& u : up) {
        kernel.push_back({u, Rational(1) - u});
    }
    return {SignalingStructure::indexed(std::move(kernel)), 0, b, c};
}

bool is_gamma_pessimistic(const Prior& target, const Prior& prior, const StateSubset& gamma) {
    require_segment_domain(target, prior, gamma);
    return segment_coefficient(target, prior, gamma.complement()).has_value();
}

BinaryFosdReport check_binary_fosd(const Prior& target, const Prior& prior, const StateSubset& gamma, std::size_t trials,
                             std::uint64_t seed) {
    BinaryFosdReport r;
    r.optimistic = is_gamma_optimistic(target, prior, gamma);
    r.trials = trials;
    for (std::size_t t = 0; t < trials; ++t) {
        Rng rng(seed, trial_tag(kBinaryFosdStream, t));
        RationalVector up;
        for (std::size_t i = 0; i < prior.size(); ++i) {
            up.push_back(rng.unit_fraction(12));
        }
        const auto structure = binary_structure(up);
        const Model model(StateSpace::indexed(prior.size()), prior, structure);
        const auto q = posterior_curve(model, gamma);
        const auto x = pushforward(q, signal_distribution(target, structure));
        const auto y = pushforward(q, signal_marginal(model));
        if (!fosd_dominates(x, y)) {
            ++r.sampled_fosd_violations;
        }
    }
    r.witness = optimism_witness_search(target, prior, gamma);
    if (r.witness) {
        r.witness_violates_fosd = check_witness(*r.witness, target, prior, gamma).fosd_fails;
    }
    return r;
}

}  // namespace postdom
