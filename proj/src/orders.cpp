#include "postdom/orders.hpp"

#include <algorithm>
#include <map>

#include "postdom/errors.hpp"

namespace postdom {

namespace {

// Union support of x and y with aligned probability columns.
struct Aligned {
    RationalVector values;
    RationalVector f;  // P(X = v)
    RationalVector g;  // P(Y = v)
};

Aligned align(const LabeledRandomVariable& x, const LabeledRandomVariable& y) {
    Aligned out;
    std::size_t i = 0;
    std::size_t j = 0;
    const auto& xs = x.support();
    const auto& ys = y.support();
    while (i < xs.size() || j < ys.size()) {
        if (j == ys.size() || (i < xs.size() && xs[i] < ys[j])) {
            out.values.push_back(xs[i]);
            out.f.push_back(x.probabilities()[i++]);
            out.g.emplace_back(0);
        } else if (i == xs.size() || ys[j] < xs[i]) {
            out.values.push_back(ys[j]);
            out.f.emplace_back(0);
            out.g.push_back(y.probabilities()[j++]);
        } else {
            out.values.push_back(xs[i]);
            out.f.push_back(x.probabilities()[i++]);
            out.g.push_back(y.probabilities()[j++]);
        }
    }
    return out;
}

}  // namespace

LabeledRandomVariable::LabeledRandomVariable(const RationalVector& values, const RationalVector& probs) {
    if (values.size() != probs.size()) {
        throw InvariantError("random variable: value and probability lists differ in length");
    }
    std::map<Rational, Rational> merged;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (probs[i].is_negative()) {
            throw InvariantError("random variable: negative probability " + probs[i].str());
        }
        merged[values[i]] += probs[i];
    }
    Rational total;
    for (auto& [v, p] : merged) {
        total += p;
        if (p.is_positive()) {
            support_.push_back(v);
            probs_.push_back(p);
        }
    }
    if (total != Rational(1)) {
        throw InvariantError("random variable: probabilities sum to " + total.str() + ", not 1");
    }
}

LabeledRandomVariable LabeledRandomVariable::point_mass(const Rational& value) {
    LabeledRandomVariable out;
    out.support_ = {value};
    out.probs_ = {Rational(1)};
    return out;
}

Rational LabeledRandomVariable::probability_of(const Rational& value) const {
    auto it = std::lower_bound(support_.begin(), support_.end(), value);
    if (it == support_.end() || *it != value) {
        return {};
    }
    return probs_[static_cast<std::size_t>(it - support_.begin())];
}

LabeledRandomVariable pushforward(const PosteriorCurve& values, const SignalDistribution& dist) {
    if (values.size() != dist.size()) {
        throw PreconditionError("pushforward: value curve and distribution differ in length");
    }
    RationalVector vs;
    RationalVector ps;
    for (std::size_t s = 0; s < dist.size(); ++s) {
        if (dist[s].is_zero()) {
            continue;
        }
        if (!values[s]) {
            throw PreconditionError("pushforward: value undefined at signal " + std::to_string(s) +
                                    " which has positive probability");
        }
        vs.push_back(*values[s]);
        ps.push_back(dist[s]);
    }
    return {vs, ps};
}

LabeledRandomVariable pushforward(const RationalVector& values, const SignalDistribution& dist) {
    return pushforward(PosteriorCurve(values.begin(), values.end()), dist);
}

DominanceVerdict lr_dominates(const LabeledRandomVariable& x, const LabeledRandomVariable& y) {
    const auto u = align(x, y);
    DominanceVerdict out;
    out.lr_holds = true;
    bool strict_somewhere = false;
    for (std::size_t lo = 0; lo < u.values.size(); ++lo) {
        for (std::size_t hi = lo + 1; hi < u.values.size(); ++hi) {
            const auto ord = u.f[hi] * u.g[lo] <=> u.f[lo] * u.g[hi];
            if (ord < 0) {
                if (out.lr_holds) {
                    out.violating_pair = ViolatingPair{u.values[lo], u.values[hi]};
                }
                out.lr_holds = false;
            } else if (ord > 0) {
                strict_somewhere = true;
            }
        }
    }
    out.lr_strict = out.lr_holds && strict_somewhere && !(x == y);
    out.fosd_holds = fosd_dominates(x, y);
    return out;
}

bool fosd_dominates(const LabeledRandomVariable& x, const LabeledRandomVariable& y) {
    const auto u = align(x, y);
    Rational tail_x;
    Rational tail_y;
    for (std::size_t k = u.values.size(); k-- > 0;) {
        tail_x += u.f[k];
        tail_y += u.g[k];
        if (tail_x < tail_y) {
            return false;
        }
    }
    return true;
}

bool lr_dominates_oracle(const LabeledRandomVariable& x, const LabeledRandomVariable& y, std::size_t max_support) {
    const auto u = align(x, y);
    const std::size_t k = u.values.size();
    if (k > max_support || k >= 63) {
        throw OracleSizeError("oracle: union support of " + std::to_string(k) + " points exceeds bound " +
                              std::to_string(max_support));
    }
    const std::uint64_t subsets = std::uint64_t{1} << k;
    for (std::uint64_t mask = 1; mask < subsets; ++mask) {
        Rational px;
        Rational py;
        for (std::size_t i = 0; i < k; ++i) {
            if ((mask >> i) & 1U) {
                px += u.f[i];
                py += u.g[i];
            }
        }
        if (px.is_zero() || py.is_zero()) {
            continue;
        }
        // E[1{X>=t} | X in A] >= E[1{Y>=t} | Y in A], cleared of denominators.
        Rational tail_x;
        Rational tail_y;
        for (std::size_t t = k; t-- > 0;) {
            if ((mask >> t) & 1U) {
                tail_x += u.f[t];
                tail_y += u.g[t];
            }
            if (tail_x * py < tail_y * px) {
                return false;
            }
        }
    }
    return true;
}

bool binary_lr_equiv(const LabeledRandomVariable& x, const LabeledRandomVariable& y) {
    const auto u = align(x, y);
    if (u.values.size() > 2) {
        throw PreconditionError("binary rule needs a union support of at most two points, got " +
                                std::to_string(u.values.size()));
    }
    if (u.values.size() < 2) {
        return true;
    }
    return u.f[1] >= u.g[1];
}

Rational expectation(const LabeledRandomVariable& x) { return dot(x.support(), x.probabilities()); }

Prop1Report check_prop1(const Model& model, const StateSubset& gamma) {
    if (!is_pruned(model)) {
        throw PreconditionError("check_prop1 needs a pruned model (prune_nulls first)");
    }
    const Rational p = model.prior().mass_of(gamma);
    if (!(p.is_positive() && p < Rational(1))) {
        throw PreconditionError("check_prop1 needs 0 < pi(Gamma) < 1, got " + p.str());
    }
    const auto curve = posterior_curve(model, gamma);
    const auto marginal = signal_marginal(model);
    const auto conditional = signal_conditional(model, gamma);

    auto uninformed = pushforward(curve, marginal);
    auto informed = pushforward(curve, conditional);
    const auto verdict = lr_dominates(informed, uninformed);
    Prop1Report r{.p = p,
                  .uninformed = std::move(uninformed),
                  .informed = std::move(informed),
                  .verdict = verdict,
                  .uninformative = false,
                  .expectation_uninformed = {},
                  .expectation_informed = {},
                  .submartingale_gap = {}};
    r.uninformative = std::all_of(curve.begin(), curve.end(), [&](const auto& q) { return !q || *q == p; });
    r.expectation_uninformed = expectation(r.uninformed);
    r.expectation_informed = expectation(r.informed);
    r.submartingale_gap = r.expectation_informed - p;
    r.linearity_holds = true;
    for (const auto& q : r.uninformed.support()) {
        if (r.informed.probability_of(q) * p != q * r.uninformed.probability_of(q)) {
            r.linearity_holds = false;
        }
    }
    return r;
}

}  // namespace postdom
