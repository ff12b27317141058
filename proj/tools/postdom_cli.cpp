// postdom: exact posterior-dominance computations and property suites.
//
// Exit status: 0 success, 1 a failed check or negative verdict (with its
// certificate), 2 bad usage or malformed input.

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "postdom/errors.hpp"
#include "postdom/json_io.hpp"
#include "postdom/monotone.hpp"
#include "postdom/optimism.hpp"
#include "postdom/orders.hpp"
#include "postdom/verify.hpp"

namespace {

using namespace postdom;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

struct Options {
    std::string model;
    std::string gamma;
    std::string prior;
    std::string base;
    std::string suite;
    std::size_t trials = 0;
    std::uint64_t seed = 7;
    std::size_t max_states = 5;
    std::size_t max_signals = 6;
    std::size_t threads = 1;
    bool json = false;
};

std::string join_cells(const std::vector<std::string>& cells, std::size_t width) {
    std::ostringstream os;
    for (const auto& c : cells) {
        os << std::left << std::setw(static_cast<int>(width)) << c;
    }
    std::string s = os.str();
    s.erase(s.find_last_not_of(' ') + 1);
    return s;
}

std::string subset_text(const StateSubset& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.members().size(); ++i) {
        out += (i ? ", " : "") + std::to_string(s.members()[i]);
    }
    return out + "}";
}

void emit(const Options& opt, const Json& j, const std::string& text) {
    if (opt.json) {
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << text;
    }
}

StateSubset require_gamma(const Options& opt, std::size_t n) {
    if (opt.gamma.empty()) {
        throw PreconditionError("--gamma is required");
    }
    return parse_gamma_spec(opt.gamma, n);
}

Rational require_interior(const Prior& prior, const StateSubset& gamma) {
    const Rational p = prior.mass_of(gamma);
    if (!p.is_positive() || p >= Rational(1)) {
        throw PreconditionError("pi(Gamma) = " + p.str() + " is not strictly between 0 and 1");
    }
    return p;
}

int cmd_posterior(const Options& opt) {
    const Model model = read_model_file(opt.model);
    const StateSubset gamma = require_gamma(opt, model.num_states());
    const Rational p = require_interior(model.prior(), gamma);
    const auto marginal = signal_marginal(model);
    const auto cond = signal_conditional(model, gamma);
    const auto curve = posterior_curve(model, gamma);

    const std::size_t n = model.num_states();
    std::vector<std::string> header{"s"};
    for (std::size_t t = 0; t < n; ++t) {
        header.push_back("sigma(s|" + model.states().label(t).str() + ")");
    }
    header.insert(header.end(), {"P(s)", "P^G(s)", "Q(s)"});
    std::ostringstream text;
    text << "Gamma = " << subset_text(gamma) << "  p = " << p.str() << '\n' << join_cells(header, 14) << '\n';

    Json rows = Json::array();
    for (std::size_t s = model.num_signals(); s-- > 0;) {
        std::vector<std::string> cells{model.signals().labels()[s].str()};
        Json sigma = Json::array();
        for (std::size_t t = 0; t < n; ++t) {
            cells.push_back(model.signals()(t, s).str());
            sigma.push_back(cells.back());
        }
        const std::string q = curve[s] ? curve[s]->str() : "undefined";
        cells.insert(cells.end(), {marginal[s].str(), cond[s].str(), q});
        text << join_cells(cells, 14) << '\n';
        rows.push_back(Json{{"s", model.signals().labels()[s].str()},
                            {"sigma", sigma},
                            {"P", marginal[s].str()},
                            {"P_gamma", cond[s].str()},
                            {"Q_gamma", curve[s] ? Json(curve[s]->str()) : Json(nullptr)}});
    }
    emit(opt, Json{{"gamma", to_json(gamma)}, {"p", p.str()}, {"table", rows}}, text.str());
    return kOk;
}

// Without --prior: (Q, P^Gamma) against (Q, P). With --prior: (Q, P~) against
// (Q, P), where P~ is the signal law under the alternative prior.
int cmd_dominance(const Options& opt) {
    const Model raw = read_model_file(opt.model);
    const StateSubset gamma = require_gamma(opt, raw.num_states());
    require_interior(raw.prior(), gamma);
    if (!is_pruned(raw)) {
        throw PreconditionError("model has zero-prior states or zero-probability signals; prune it first");
    }
    const auto curve = posterior_curve(raw, gamma);
    const auto uninformed = pushforward(curve, signal_marginal(raw));
    std::string against;
    std::optional<LabeledRandomVariable> informed;
    if (opt.prior.empty()) {
        informed = pushforward(curve, signal_conditional(raw, gamma));
        against = "P^Gamma";
    } else {
        const Prior alt = read_prior_file(opt.prior);
        if (alt.size() != raw.num_states()) {
            throw PreconditionError("--prior has " + std::to_string(alt.size()) + " states, model has " +
                                    std::to_string(raw.num_states()));
        }
        informed = pushforward(curve, signal_distribution(alt, raw.signals()));
        against = "P~";
    }
    const auto verdict = lr_dominates(*informed, uninformed);
    std::ostringstream text;
    text << "(Q, " << against << ") >=_lr (Q, P): " << (verdict.lr_holds ? "yes" : "no");
    if (verdict.lr_holds) {
        text << (verdict.lr_strict ? " (strict)" : " (equal laws)");
    }
    text << "\nFOSD: " << (verdict.fosd_holds ? "yes" : "no") << '\n';
    if (verdict.violating_pair) {
        text << "violating pair: q = " << verdict.violating_pair->low.str() << " < "
             << verdict.violating_pair->high.str() << '\n';
    }
    emit(opt,
         Json{{"gamma", to_json(gamma)},
              {"informed", to_json(*informed)},
              {"uninformed", to_json(uninformed)},
              {"verdict", to_json(verdict)}},
         text.str());
    return verdict.lr_holds ? kOk : kNegative;
}

Prior base_prior(const Options& opt) {
    if (!opt.base.empty()) {
        return read_prior_file(opt.base);
    }
    if (!opt.model.empty()) {
        return read_model_file(opt.model).prior();
    }
    throw PreconditionError("--base (or --model) is required");
}

int cmd_optimism(const Options& opt) {
    if (opt.prior.empty()) {
        throw PreconditionError("--prior is required");
    }
    const Prior target = read_prior_file(opt.prior);
    const Prior prior = base_prior(opt);
    if (target.size() != prior.size()) {
        throw PreconditionError("--prior and --base differ in size");
    }
    const StateSubset gamma = require_gamma(opt, prior.size());
    const auto a = segment_coefficient(target, prior, gamma);
    const auto witness = a ? std::nullopt : optimism_witness_search(target, prior, gamma);
    if (!a && !witness) {
        throw Error("segment test and witness search disagree");
    }
    std::ostringstream text;
    if (a) {
        text << "Gamma-optimistic: target = a pi^G + (1 - a) pi with a = " << a->value().str() << '\n';
    } else {
        text << "not Gamma-optimistic; witness sigma(1|theta) = 1/2 + x_theta with x =";
        for (const auto& v : witness->x) {
            text << ' ' << v.str();
        }
        text << '\n';
    }
    Json j = optimism_verdict_json(a, witness);
    j["optimistic"] = a.has_value();
    emit(opt, j, text.str());
    return a ? kOk : kNegative;
}

int cmd_decompose(const Options& opt) {
    if (opt.prior.empty()) {
        throw PreconditionError("--prior is required");
    }
    const Prior target = read_prior_file(opt.prior);
    const Prior prior = base_prior(opt);
    if (target.size() != prior.size()) {
        throw PreconditionError("--prior and --base differ in size");
    }
    if (!prior.is_strictly_positive()) {
        throw PreconditionError("--base must be strictly positive");
    }
    const StateSpace states = StateSpace::indexed(prior.size());
    const auto dec = upper_set_decomposition(target, prior, states);
    std::ostringstream text;
    if (!dec) {
        const auto pair = falling_adjacent_pair(target, prior);
        Json j{{"dominates", false}};
        if (pair) {
            j["falling_pair"] = Json::array({*pair, *pair + 1});
            text << "target does not lr-dominate base: ratio falls from state " << *pair << " to " << *pair + 1
                 << '\n';
        }
        emit(opt, j, text.str());
        return kNegative;
    }
    const auto seq = strengthening_sequence(*dec, prior);
    text << "decomposition:\n";
    for (const auto& term : dec->terms()) {
        text << "  upper(" << term.gamma_min_index << ")  a = " << term.a.str() << '\n';
    }
    text << "strengthening sequence:\n";
    for (const auto& step : seq.steps) {
        text << "  upper(" << step.gamma.min_index() << ")  weight = " << step.weight.value().str() << '\n';
    }
    emit(opt, Json{{"dominates", true}, {"decomposition", to_json(*dec)}, {"sequence", to_json(seq)}}, text.str());
    return kOk;
}

std::string verify_echo(const Options& opt, const std::string& suite, std::size_t trials) {
    std::ostringstream os;
    os << "verify " << suite << " --trials " << trials << " --seed " << opt.seed << " --max-states " << opt.max_states
       << " --max-signals " << opt.max_signals;
    return os.str();
}

int cmd_verify(const Options& opt) {
    SuiteConfig cfg;
    cfg.seed = opt.seed;
    cfg.trials = opt.trials;
    cfg.max_states = opt.max_states;
    cfg.max_signals = opt.max_signals;
    cfg.threads = opt.threads;

    std::vector<std::string> suites;
    if (opt.suite == "all") {
        suites = suite_names();
    } else {
        suites.push_back(opt.suite);
    }
    bool ok = true;
    Json reports = Json::array();
    std::string text;
    for (const auto& s : suites) {
        const auto report = run_suite(s, cfg);
        ok = ok && report.passed();
        Json j = report.to_json();
        j["command"] = verify_echo(opt, s, report.trials);
        reports.push_back(std::move(j));
        text += report.to_text();
    }
    emit(opt, suites.size() == 1 ? reports.front() : Json{{"passed", ok}, {"reports", reports}}, text);
    return ok ? kOk : kNegative;
}

int cmd_worked_example(const Options& opt) {
    const auto report = run_worked_example();
    std::ostringstream text;
    const auto& d = report.details;
    text << "uniform prior on states 0, 1, 2; Gamma = {1, 2}\n"
         << join_cells({"s", "sigma(s|0)", "sigma(s|1)", "sigma(s|2)", "P(s)", "P^G(s)", "Q(s)"}, 12) << '\n';
    for (const auto& row : d["table"]) {
        std::vector<std::string> cells{row["s"].get<std::string>()};
        for (const auto& v : row["sigma"]) {
            cells.push_back(v.get<std::string>());
        }
        cells.insert(cells.end(), {row["P"].get<std::string>(), row["P_gamma"].get<std::string>(),
                                   row["Q_gamma"].get<std::string>()});
        text << join_cells(cells, 12) << '\n';
    }
    text << report.to_text();
    Json j = report.to_json();
    j["command"] = "paper-example";
    emit(opt, j, text.str());
    return report.passed() ? kOk : kNegative;
}

std::uint64_t env_seed() {
    const char* raw = std::getenv("POSTDOM_SEED");
    if (raw == nullptr || *raw == '\0') {
        return 7;
    }
    try {
        std::size_t used = 0;
        const auto v = std::stoull(raw, &used);
        if (used == std::string(raw).size()) {
            return v;
        }
    } catch (const std::exception&) {
    }
    throw ParseError(std::string("POSTDOM_SEED is not an unsigned integer: ") + raw);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact posterior dominance: Bayes posteriors, likelihood-ratio order, optimism tests"};
    app.require_subcommand(1);
    Options opt;
    int (*handler)(const Options&) = nullptr;

    auto json_flag = [&](CLI::App* sub) { sub->add_flag("--json", opt.json, "Print JSON instead of text"); };

    auto* posterior = app.add_subcommand("posterior", "Table of P(s), P^G(s) and Q(s)");
    posterior->add_option("--model", opt.model, "Model JSON file")->required();
    posterior->add_option("--gamma", opt.gamma, "\"upper:k\" or 0-based indices \"0,2\"")->required();
    json_flag(posterior);
    posterior->callback([&] { handler = cmd_posterior; });

    auto* dominance = app.add_subcommand("dominance", "Decide (Q, P~) >=_lr (Q, P)");
    dominance->add_option("--model", opt.model, "Model JSON file")->required();
    dominance->add_option("--gamma", opt.gamma, "\"upper:k\" or 0-based indices")->required();
    dominance->add_option("--prior", opt.prior, "Alternative prior (default: conditioning on Gamma)");
    json_flag(dominance);
    dominance->callback([&] { handler = cmd_dominance; });

    auto* optimism = app.add_subcommand("optimism", "Decide Gamma-optimism of --prior over --base");
    optimism->add_option("--prior", opt.prior, "Target prior JSON")->required();
    optimism->add_option("--base", opt.base, "Base prior JSON");
    optimism->add_option("--model", opt.model, "Take the base prior from this model");
    optimism->add_option("--gamma", opt.gamma, "\"upper:k\" or 0-based indices")->required();
    json_flag(optimism);
    optimism->callback([&] { handler = cmd_optimism; });

    auto* decompose = app.add_subcommand("decompose", "Upper-set decomposition of --prior over --base");
    decompose->add_option("--prior", opt.prior, "Target prior JSON")->required();
    decompose->add_option("--base", opt.base, "Base prior JSON");
    decompose->add_option("--model", opt.model, "Take the base prior from this model");
    json_flag(decompose);
    decompose->callback([&] { handler = cmd_decompose; });

    auto* verify = app.add_subcommand("verify", "Run a seeded property suite");
    std::vector<std::string> choices = suite_names();
    choices.push_back("all");
    verify->add_option("suite", opt.suite, "Suite name")->required()->check(CLI::IsMember(choices));
    verify->add_option("--trials", opt.trials, "Trial count (default per suite)");
    verify->add_option("--seed", opt.seed, "Master seed (default $POSTDOM_SEED or 7)");
    verify->add_option("--max-states", opt.max_states, "Largest state space")->check(CLI::Range(2, 64));
    verify->add_option("--max-signals", opt.max_signals, "Largest signal set")->check(CLI::Range(2, 64));
    verify->add_option("--threads", opt.threads, "Worker threads")->check(CLI::Range(1, 256));
    json_flag(verify);
    verify->callback([&] { handler = cmd_verify; });

    auto* example = app.add_subcommand("paper-example", "Reproduce the three-state worked example");
    json_flag(example);
    example->callback([&] { handler = cmd_worked_example; });

    try {
        opt.seed = env_seed();
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    const auto start = std::chrono::steady_clock::now();
    int code = kOk;
    try {
        code = handler(opt);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ConditioningError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const InvariantError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kNegative;
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    std::cerr << std::fixed << std::setprecision(3) << "elapsed " << elapsed.count() << " s\n";
    return code;
}
