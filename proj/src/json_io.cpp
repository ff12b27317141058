#include "postdom/json_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "postdom/errors.hpp"

namespace postdom {

namespace {

const Json& require_key(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw ParseError(std::string("missing key '") + key + "'");
    }
    return j.at(key);
}

std::size_t parse_index(std::string_view text) {
    std::size_t value = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end || text.empty()) {
        throw ParseError("bad state index '" + std::string(text) + "'");
    }
    return value;
}

}  // namespace

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const RationalVector& v) {
    Json out = Json::array();
    for (const auto& r : v) {
        out.push_back(r.str());
    }
    return out;
}

Json to_json(const PosteriorCurve& curve) {
    Json out = Json::array();
    for (const auto& q : curve) {
        out.push_back(q ? Json(q->str()) : Json(nullptr));
    }
    return out;
}

Json to_json(const LabeledRandomVariable& x) {
    return Json{{"support", to_json(x.support())}, {"prob", to_json(x.probabilities())}};
}

Json to_json(const DominanceVerdict& v) {
    Json out{{"lr_holds", v.lr_holds}, {"lr_strict", v.lr_strict}, {"fosd_holds", v.fosd_holds}};
    if (v.violating_pair) {
        out["violating_pair"] = Json::array({v.violating_pair->low.str(), v.violating_pair->high.str()});
    }
    return out;
}

Json to_json(const Prop1Report& r) {
    return Json{{"p", to_json(r.p)},
                {"uninformed", to_json(r.uninformed)},
                {"informed", to_json(r.informed)},
                {"verdict", to_json(r.verdict)},
                {"uninformative", r.uninformative},
                {"expectation_uninformed", to_json(r.expectation_uninformed)},
                {"expectation_informed", to_json(r.expectation_informed)},
                {"submartingale_gap", to_json(r.submartingale_gap)},
                {"linearity_holds", r.linearity_holds}};
}

Json to_json(const WitnessStructure& w) {
    Json kernel = Json::array();
    for (const auto& row : w.structure.kernel()) {
        kernel.push_back(to_json(row));
    }
    return Json{{"x", to_json(w.x)}, {"kernel", kernel}};
}

Json to_json(const StateSubset& subset) {
    Json out = Json::array();
    for (auto i : subset.members()) {
        out.push_back(i);
    }
    return out;
}

Json to_json(const StrengtheningSequence& seq) {
    Json steps = Json::array();
    for (const auto& s : seq.steps) {
        steps.push_back(Json{{"gamma_min_index", s.gamma.min_index()}, {"weight", to_json(s.weight.value())}});
    }
    return Json{{"steps", steps}};
}

Json to_json(const Decomposition& dec) {
    Json terms = Json::array();
    for (const auto& t : dec.terms()) {
        terms.push_back(Json{{"gamma_min_index", t.gamma_min_index}, {"a", to_json(t.a)}});
    }
    return Json{{"terms", terms}};
}

Json model_to_json(const Model& model) {
    Json kernel = Json::array();
    for (const auto& row : model.signals().kernel()) {
        kernel.push_back(to_json(row));
    }
    return Json{{"states", to_json(model.states().labels())},
                {"prior", to_json(model.prior().masses())},
                {"signals", to_json(model.signals().labels())},
                {"kernel", kernel}};
}

Rational rational_from_json(const Json& j) {
    if (j.is_string()) {
        return Rational::parse(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return Rational(j.get<long>());
    }
    throw ParseError("expected a rational string \"n/d\", got " + j.dump());
}

RationalVector rationals_from_json(const Json& j) {
    if (!j.is_array()) {
        throw ParseError("expected an array of rationals, got " + j.dump());
    }
    RationalVector out;
    for (const auto& e : j) {
        out.push_back(rational_from_json(e));
    }
    return out;
}

Model model_from_json(const Json& j) {
    const auto& kernel_json = require_key(j, "kernel");
    if (!kernel_json.is_array()) {
        throw ParseError("'kernel' must be an array of rows");
    }
    std::vector<RationalVector> kernel;
    for (const auto& row : kernel_json) {
        kernel.push_back(rationals_from_json(row));
    }
    // Labels default to 0, 1, 2, ...
    auto labels_or_indices = [&](const char* key, std::size_t n) {
        if (j.contains(key)) {
            return rationals_from_json(j.at(key));
        }
        RationalVector out;
        for (std::size_t i = 0; i < n; ++i) {
            out.emplace_back(i);
        }
        return out;
    };
    try {
        Prior prior(rationals_from_json(require_key(j, "prior")));
        const std::size_t m = kernel.empty() ? 0 : kernel.front().size();
        return {StateSpace(labels_or_indices("states", prior.size())), std::move(prior),
                SignalingStructure(labels_or_indices("signals", m), std::move(kernel))};
    } catch (const InvariantError& e) {
        throw ParseError(std::string("invalid model: ") + e.what());
    }
}

Prior prior_from_json(const Json& j) {
    try {
        if (j.is_array()) {
            return Prior(rationals_from_json(j));
        }
        return Prior(rationals_from_json(require_key(j, "prior")));
    } catch (const InvariantError& e) {
        throw ParseError(std::string("invalid prior: ") + e.what());
    }
}

Json prior_to_json(const Prior& prior) { return Json{{"prior", to_json(prior.masses())}}; }

Decomposition decomposition_from_json(const Json& j, std::size_t universe) {
    std::vector<DecompositionTerm> terms;
    for (const auto& t : require_key(j, "terms")) {
        terms.push_back({require_key(t, "gamma_min_index").get<std::size_t>(), rational_from_json(require_key(t, "a"))});
    }
    return {universe, std::move(terms)};
}

Json optimism_verdict_json(const std::optional<StrengtheningWeight>& a, const std::optional<WitnessStructure>& w) {
    if (a) {
        return Json{{"a", to_json(a->value())}};
    }
    if (w) {
        return Json{{"witness", to_json(*w)}};
    }
    throw PreconditionError("optimism verdict needs either a weight or a witness");
}

StateSubset parse_gamma_spec(std::string_view spec, std::size_t universe) {
    constexpr std::string_view kUpper = "upper:";
    if (spec.substr(0, kUpper.size()) == kUpper) {
        return StateSubset::upper(universe, parse_index(spec.substr(kUpper.size())));
    }
    std::vector<std::size_t> indices;
    while (!spec.empty()) {
        const auto comma = spec.find(',');
        indices.push_back(parse_index(spec.substr(0, comma)));
        if (comma == std::string_view::npos) {
            break;
        }
        spec.remove_prefix(comma + 1);
    }
    if (indices.empty()) {
        throw ParseError("empty state subset");
    }
    return StateSubset::from_indices(universe, std::move(indices));
}

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open " + path.string());
    }
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

Model read_model_file(const std::filesystem::path& path) { return model_from_json(read_json_file(path)); }

Prior read_prior_file(const std::filesystem::path& path) { return prior_from_json(read_json_file(path)); }

void write_model_file(const std::filesystem::path& path, const Model& model) {
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot write " + path.string());
    }
    out << model_to_json(model).dump(2) << '\n';
}

}  // namespace postdom
