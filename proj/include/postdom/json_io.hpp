#pragma once

// JSON and text encodings. Rationals are always "n/d" strings; objects keep
// a fixed key order so encoding a value twice gives identical bytes.

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"

#include "postdom/model.hpp"
#include "postdom/monotone.hpp"
#include "postdom/optimism.hpp"
#include "postdom/orders.hpp"

namespace postdom {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const RationalVector& v);
Json to_json(const PosteriorCurve& curve);  // null where undefined
Json to_json(const LabeledRandomVariable& x);
Json to_json(const DominanceVerdict& v);
Json to_json(const Prop1Report& r);
Json to_json(const WitnessStructure& w);
Json to_json(const StrengtheningSequence& seq);
Json to_json(const Decomposition& dec);
Json to_json(const StateSubset& subset);

// {"states": [...], "prior": [...], "signals": [...], "kernel": [[...], ...]}
Json model_to_json(const Model& model);
Model model_from_json(const Json& j);

Rational rational_from_json(const Json& j);
RationalVector rationals_from_json(const Json& j);

// Accepts a bare array of "n/d" strings or any object with a "prior" key
// (a model file works).
Prior prior_from_json(const Json& j);
Json prior_to_json(const Prior& prior);

Decomposition decomposition_from_json(const Json& j, std::size_t universe);

// {"a": "n/d"} when optimistic, otherwise {"witness": {"x": [...], "kernel": [...]}}.
Json optimism_verdict_json(const std::optional<StrengtheningWeight>& a, const std::optional<WitnessStructure>& w);

// "upper:k" or a comma-separated list of 0-based state indices.
StateSubset parse_gamma_spec(std::string_view spec, std::size_t universe);

Json read_json_file(const std::filesystem::path& path);
Model read_model_file(const std::filesystem::path& path);
Prior read_prior_file(const std::filesystem::path& path);
void write_model_file(const std::filesystem::path& path, const Model& model);

}  // namespace postdom
