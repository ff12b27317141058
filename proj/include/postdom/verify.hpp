#pragma once

/**
 * @file verify.hpp
 * @brief Seeded property suites over random instances, and the bundled
 *        three-state worked example.
 *
 * Each suite runs its trials (optionally on several threads), tallies named
 * checks in trial order, and keeps the first failing instance of every check
 * as a certificate that can be fed back through the library. Reports contain
 * no timing, so reruns with the same seed are byte-identical.
 */

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "postdom/json_io.hpp"
#include "postdom/model.hpp"

namespace postdom {

struct SuiteConfig {
    std::uint64_t seed = 7;
    std::size_t trials = 0;  // 0 picks the suite's default
    std::size_t max_states = 5;
    std::size_t max_signals = 6;
    std::uint64_t denominator_bound = 12;
    std::size_t threads = 1;
};

struct CheckResult {
    std::string name;
    std::size_t checked = 0;
    std::size_t failures = 0;
    Json first_failure;  // null when nothing failed

    bool passed() const { return failures == 0; }
};

struct VerificationReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::vector<CheckResult> checks;
    std::map<std::string, std::size_t> coverage;
    Json details;

    bool passed() const;
    const CheckResult* find(std::string_view name) const;
    Json to_json() const;
    std::string to_text() const;
};

// Names accepted by run_suite, in a fixed order.
const std::vector<std::string>& suite_names();
std::size_t default_trials(std::string_view suite);

VerificationReport run_suite(std::string_view suite, const SuiteConfig& cfg);

VerificationReport run_prop1_suite(const SuiteConfig& cfg);
VerificationReport run_orders_suite(const SuiteConfig& cfg);
VerificationReport run_prop3_suite(const SuiteConfig& cfg);
VerificationReport run_prop4_suite(const SuiteConfig& cfg);
VerificationReport run_strengthening_suite(const SuiteConfig& cfg);
VerificationReport run_remarks_suite(const SuiteConfig& cfg);

// Three states, uniform prior, two signals; Gamma = {1, 2}.
Model worked_example_model();
VerificationReport run_worked_example();

}  // namespace postdom
