#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "postdom/errors.hpp"
#include "postdom/json_io.hpp"
#include "postdom/monotone.hpp"
#include "postdom/optimism.hpp"
#include "postdom/orders.hpp"
#include "postdom/verify.hpp"

namespace py = pybind11;

// Rational <-> fractions.Fraction. Python ints and "n/d" strings are also
// accepted on input.
namespace pybind11::detail {
template <>
struct type_caster<postdom::Rational> {
    PYBIND11_TYPE_CASTER(postdom::Rational, const_name("fractions.Fraction"));

    bool load(handle src, bool) {
        try {
            if (py::isinstance<py::str>(src)) {
                value = postdom::Rational::parse(src.cast<std::string>());
                return true;
            }
            const py::module_ fractions = py::module_::import("fractions");
            if (!py::isinstance<py::int_>(src) && !py::isinstance(src, fractions.attr("Fraction"))) {
                return false;
            }
            const py::object f = fractions.attr("Fraction")(src);
            const auto num = py::str(f.attr("numerator")).cast<std::string>();
            const auto den = py::str(f.attr("denominator")).cast<std::string>();
            value = postdom::Rational(postdom::BigInt(num), postdom::BigInt(den));
            return true;
        } catch (const postdom::Error&) {
            return false;
        }
    }

    static handle cast(const postdom::Rational& r, return_value_policy, handle) {
        const py::module_ fractions = py::module_::import("fractions");
        const py::int_ num(py::reinterpret_steal<py::object>(
            PyLong_FromString(r.numerator().get_str().c_str(), nullptr, 10)));
        const py::int_ den(py::reinterpret_steal<py::object>(
            PyLong_FromString(r.denominator().get_str().c_str(), nullptr, 10)));
        return fractions.attr("Fraction")(num, den).release();
    }
};
}  // namespace pybind11::detail

namespace {

using namespace postdom;

using Kernel = std::vector<RationalVector>;
using Indices = std::vector<std::size_t>;

Model make_model(const RationalVector& prior, const Kernel& kernel) {
    return {StateSpace::indexed(prior.size()), Prior(prior), SignalingStructure::indexed(kernel)};
}

StateSubset subset(const Indices& gamma, std::size_t n) { return StateSubset::from_indices(n, gamma); }

py::object json_to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

LabeledRandomVariable lrv(const RationalVector& values, const RationalVector& probs) { return {values, probs}; }

py::dict verdict_dict(const DominanceVerdict& v) {
    py::dict d;
    d["lr_holds"] = v.lr_holds;
    d["lr_strict"] = v.lr_strict;
    d["fosd_holds"] = v.fosd_holds;
    if (v.violating_pair) {
        d["violating_pair"] = py::make_tuple(v.violating_pair->low, v.violating_pair->high);
    } else {
        d["violating_pair"] = py::none();
    }
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact posterior dominance computations";

    py::register_exception<Error>(m, "PostdomError", PyExc_ValueError);

    m.def("signal_marginal", [](const RationalVector& prior, const Kernel& k) {
        return signal_marginal(make_model(prior, k));
    }, py::arg("prior"), py::arg("kernel"));
    m.def("signal_conditional", [](const RationalVector& prior, const Kernel& k, const Indices& g) {
        return signal_conditional(make_model(prior, k), subset(g, prior.size()));
    }, py::arg("prior"), py::arg("kernel"), py::arg("gamma"));
    m.def("posterior_curve", [](const RationalVector& prior, const Kernel& k, const Indices& g) {
        return posterior_curve(make_model(prior, k), subset(g, prior.size()));
    }, py::arg("prior"), py::arg("kernel"), py::arg("gamma"));
    m.def("conditional_prior", [](const RationalVector& prior, const Indices& g) {
        return conditional_prior(Prior(prior), subset(g, prior.size())).masses();
    }, py::arg("prior"), py::arg("gamma"));

    m.def("lr_dominates", [](const RationalVector& xv, const RationalVector& xp, const RationalVector& yv,
                             const RationalVector& yp) { return verdict_dict(lr_dominates(lrv(xv, xp), lrv(yv, yp))); },
          py::arg("x_values"), py::arg("x_probs"), py::arg("y_values"), py::arg("y_probs"));
    m.def("lr_dominates_oracle", [](const RationalVector& xv, const RationalVector& xp, const RationalVector& yv,
                                    const RationalVector& yp) { return lr_dominates_oracle(lrv(xv, xp), lrv(yv, yp)); },
          py::arg("x_values"), py::arg("x_probs"), py::arg("y_values"), py::arg("y_probs"));
    m.def("fosd_dominates", [](const RationalVector& xv, const RationalVector& xp, const RationalVector& yv,
                               const RationalVector& yp) { return fosd_dominates(lrv(xv, xp), lrv(yv, yp)); },
          py::arg("x_values"), py::arg("x_probs"), py::arg("y_values"), py::arg("y_probs"));
    m.def("check_prop1", [](const RationalVector& prior, const Kernel& k, const Indices& g) {
        return json_to_py(to_json(check_prop1(make_model(prior, k), subset(g, prior.size()))));
    }, py::arg("prior"), py::arg("kernel"), py::arg("gamma"));

    m.def("gamma_strengthen", [](const RationalVector& prior, const Indices& g, const Rational& a) {
        return gamma_strengthen(Prior(prior), subset(g, prior.size()), StrengtheningWeight(a)).masses();
    }, py::arg("prior"), py::arg("gamma"), py::arg("a"));
    m.def("segment_coefficient", [](const RationalVector& target, const RationalVector& prior,
                                    const Indices& g) -> std::optional<Rational> {
        const auto a = segment_coefficient(Prior(target), Prior(prior), subset(g, prior.size()));
        return a ? std::optional<Rational>(a->value()) : std::nullopt;
    }, py::arg("target"), py::arg("prior"), py::arg("gamma"));
    m.def("is_gamma_optimistic", [](const RationalVector& target, const RationalVector& prior, const Indices& g) {
        return is_gamma_optimistic(Prior(target), Prior(prior), subset(g, prior.size()));
    }, py::arg("target"), py::arg("prior"), py::arg("gamma"));
    m.def("is_gamma_pessimistic", [](const RationalVector& target, const RationalVector& prior, const Indices& g) {
        return is_gamma_pessimistic(Prior(target), Prior(prior), subset(g, prior.size()));
    }, py::arg("target"), py::arg("prior"), py::arg("gamma"));
    m.def("optimism_witness", [](const RationalVector& target, const RationalVector& prior,
                                 const Indices& g) -> std::optional<RationalVector> {
        const auto w = optimism_witness_search(Prior(target), Prior(prior), subset(g, prior.size()));
        return w ? std::optional<RationalVector>(w->x) : std::nullopt;
    }, py::arg("target"), py::arg("prior"), py::arg("gamma"));

    m.def("is_mlrp", [](const Kernel& k) { return is_mlrp(SignalingStructure::indexed(k)); }, py::arg("kernel"));
    m.def("prior_lr_dominates", [](const RationalVector& target, const RationalVector& prior) {
        return prior_lr_dominates(Prior(target), Prior(prior), StateSpace::indexed(prior.size()));
    }, py::arg("target"), py::arg("prior"));
    m.def("upper_set_decomposition", [](const RationalVector& target,
                                        const RationalVector& prior) -> std::optional<std::vector<py::tuple>> {
        const auto dec = upper_set_decomposition(Prior(target), Prior(prior), StateSpace::indexed(prior.size()));
        if (!dec) {
            return std::nullopt;
        }
        std::vector<py::tuple> out;
        for (const auto& t : dec->terms()) {
            out.push_back(py::make_tuple(t.gamma_min_index, t.a));
        }
        return out;
    }, py::arg("target"), py::arg("prior"), "Terms (k, a_k) for upper sets {k, ..., n-1}, or None.");
    m.def("strengthening_sequence", [](const RationalVector& target, const RationalVector& prior) {
        const Prior pi(prior);
        const auto dec = upper_set_decomposition(Prior(target), pi, StateSpace::indexed(prior.size()));
        if (!dec) {
            throw PreconditionError("target does not lr-dominate prior");
        }
        std::vector<py::tuple> out;
        for (const auto& s : strengthening_sequence(*dec, pi).steps) {
            out.push_back(py::make_tuple(s.gamma.min_index(), s.weight.value()));
        }
        return out;
    }, py::arg("target"), py::arg("prior"));
    m.def("apply_sequence", [](const RationalVector& prior, const std::vector<std::pair<std::size_t, Rational>>& steps) {
        StrengtheningSequence seq;
        for (const auto& [k, a] : steps) {
            seq.steps.push_back({StateSubset::upper(prior.size(), k), StrengtheningWeight(a)});
        }
        return apply_sequence(Prior(prior), seq).masses();
    }, py::arg("prior"), py::arg("steps"));

    m.def("run_suite", [](const std::string& name, std::uint64_t seed, std::size_t trials, std::size_t threads) {
        SuiteConfig cfg;
        cfg.seed = seed;
        cfg.trials = trials;
        cfg.threads = threads;
        VerificationReport r;
        {
            py::gil_scoped_release release;
            r = run_suite(name, cfg);
        }
        return json_to_py(r.to_json());
    }, py::arg("name"), py::arg("seed") = 7, py::arg("trials") = 0, py::arg("threads") = 1);
    m.def("worked_example", [] { return json_to_py(run_worked_example().to_json()); });
    m.def("suite_names", &suite_names);
}
