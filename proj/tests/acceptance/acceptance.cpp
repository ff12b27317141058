// One line per acceptance criterion; exit status 0 iff all of them pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "postdom/verify.hpp"

using namespace postdom;

namespace {

struct Outcome {
    bool ok = true;
    std::string note;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            note = what;
        }
    }
};

// Named checks must exist, have run at least `min_checked` times and never failed.
void require_checks(Outcome& out, const VerificationReport& r, const std::vector<std::string>& names,
                    std::size_t min_checked) {
    for (const auto& n : names) {
        const auto* c = r.find(n);
        out.require(c != nullptr, r.suite + ": check '" + n + "' missing");
        if (c == nullptr) {
            return;
        }
        out.require(c->checked >= min_checked, r.suite + ": '" + n + "' ran " + std::to_string(c->checked) +
                                                    " times, need " + std::to_string(min_checked));
        out.require(c->passed(), r.suite + ": '" + n + "' failed: " + c->first_failure.dump());
    }
}

void require_all_passed(Outcome& out, const VerificationReport& r) {
    for (const auto& c : r.checks) {
        out.require(c.passed(), r.suite + ": '" + c.name + "' failed: " + c.first_failure.dump());
    }
}

std::size_t coverage(const VerificationReport& r, const std::string& tag) {
    const auto it = r.coverage.find(tag);
    return it == r.coverage.end() ? 0 : it->second;
}

SuiteConfig config(std::size_t trials) {
    SuiteConfig cfg;
    cfg.seed = 7;
    cfg.trials = trials;
    cfg.max_states = 5;
    cfg.max_signals = 6;
    return cfg;
}

Outcome criterion1() {
    Outcome out;
    const auto r = run_worked_example();
    require_all_passed(out, r);
    require_checks(out, r,
                   {"P(1) = 13/24", "P(0) = 11/24", "P^G(1) = 5/8", "P^G(0) = 3/8", "Q(1) = 10/13", "Q(0) = 6/11",
                    "(Q, P^G) >_lr (Q, P) strictly", "(Q, P^gamma) <_lr (Q, P) reversal",
                    "P^gamma(1) = 1/2 < 13/24 = P(1)"},
                   1);
    return out;
}

Outcome criterion2() {
    Outcome out;
    const auto r = run_prop1_suite(config(1000));
    require_all_passed(out, r);
    require_checks(out, r,
                   {"lr_dominance", "strict_iff_informative", "martingale_expectation", "submartingale_gap"}, 1000);
    out.require(coverage(r, "uninformative") > 0 && coverage(r, "informative") > 0,
                "prop1: both informative and uninformative instances are needed");
    return out;
}

Outcome criterion3() {
    Outcome out;
    const auto r = run_orders_suite(config(500));
    require_all_passed(out, r);
    require_checks(out, r, {"oracle_agreement", "lr_implies_fosd"}, 500);
    require_checks(out, r, {"binary_collapse"}, 1);
    return out;
}

Outcome criterion4() {
    Outcome out;
    const auto r = run_prop3_suite(config(500));
    require_all_passed(out, r);
    require_checks(out, r, {"segment_witness_agreement"}, 500);
    require_checks(out, r, {"witness_valid"}, 1);
    out.require(r.find("witness_valid") && r.find("witness_valid")->checked == coverage(r, "not_optimistic"),
                "prop3: not every non-optimistic triple had its witness re-verified");
    return out;
}

Outcome criterion5() {
    Outcome out;
    const auto r = run_prop4_suite(config(500));
    require_all_passed(out, r);
    require_checks(out, r, {"decomposition_iff_lr"}, 500);
    require_checks(out, r, {"recombination_exact", "sequence_replay_exact", "signal_lr", "relabeled_lr", "posterior_lr"},
                   200);
    require_checks(out, r, {"adjacent_witness_violates_posterior_lr"}, 100);
    out.require(coverage(r, "dominating") >= 200, "prop4: fewer than 200 dominating pairs");
    out.require(coverage(r, "not_dominating") >= 100, "prop4: fewer than 100 non-dominating pairs");
    return out;
}

Outcome criterion6() {
    Outcome out;
    const auto r = run_strengthening_suite(config(200));
    require_all_passed(out, r);
    require_checks(out, r, {"extra_signal_bayes", "likelihood_ratio_linearity"}, 200);
    return out;
}

Outcome criterion7() {
    Outcome out;
    const auto r = run_remarks_suite(config(200));
    require_all_passed(out, r);
    require_checks(out, r, {"pessimism_duality"}, 200);
    require_checks(out, r, {"reversed_dominance"}, 1);
    out.require(r.find("reversed_dominance") && r.find("reversed_dominance")->checked == coverage(r, "pessimistic"),
                "remarks: reversed dominance not checked on every pessimistic triple");
    return out;
}

Outcome criterion8() {
    Outcome out;
    for (const auto& name : suite_names()) {
        auto cfg = config(0);
        const auto serial = run_suite(name, cfg).to_json().dump();
        const auto again = run_suite(name, cfg).to_json().dump();
        cfg.threads = 4;
        const auto parallel = run_suite(name, cfg).to_json().dump();
        out.require(serial == again, name + ": rerun differs");
        out.require(serial == parallel, name + ": 4-thread run differs from 1-thread run");
    }
    const auto a = run_worked_example().to_json().dump();
    out.require(a == run_worked_example().to_json().dump(), "paper-example: rerun differs");
    return out;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* title;
        double limit_s;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "worked example reproduced exactly", 1.0, criterion1},
        {2, "posterior dominance on 1000 random models", 10.0, criterion2},
        {3, "lr comparator agrees with brute-force oracle on 500 pairs", 10.0, criterion3},
        {4, "optimism segment test agrees with witness search on 500 triples", 30.0, criterion4},
        {5, "monotone strengthening equivalences on 500 prior pairs", 60.0, criterion5},
        {6, "strengthening as an extra signal on 200 instances", 10.0, criterion6},
        {7, "pessimism duality on 200 triples", 10.0, criterion7},
        // No runtime target; the limit only guards against hangs.
        {8, "reports byte-identical across reruns and thread counts", 600.0, criterion8},
    };
    bool all = true;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (out.ok && secs > c.limit_s) {
            out = {false, "took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_s) + " s"};
        }
        all = all && out.ok;
        std::printf("%s criterion %d: %s (%.3f s)%s%s\n", out.ok ? "PASS" : "FAIL", c.id, c.title, secs,
                    out.ok ? "" : " -- ", out.note.c_str());
    }
    std::printf("%s\n", all ? "ALL ACCEPTANCE CRITERIA PASS" : "SOME ACCEPTANCE CRITERIA FAIL");
    return all ? 0 : 1;
}
