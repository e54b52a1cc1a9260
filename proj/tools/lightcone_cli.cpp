// Command-line front end: runs the estimators, the exact oracle, the
// resource comparison, and seeded repetition studies on circuit/observable
// files, emitting JSON (canonical) or CSV reports.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lcone/algebraic.hpp"
#include "lcone/causal.hpp"
#include "lcone/errors.hpp"
#include "lcone/json_io.hpp"
#include "lcone/parser.hpp"
#include "lcone/resources.hpp"

namespace {

using nlohmann::ordered_json;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw lcone::ConfigError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw lcone::ConfigError("cannot write " + out_path);
    out << text;
}

// CSV projection of a flat-ish report: one key,value row per scalar, arrays
// joined with ';'.
std::string json_to_csv(const ordered_json& j, const std::string& prefix = "") {
    std::ostringstream out;
    for (const auto& [key, val] : j.items()) {
        std::string name = prefix.empty() ? key : prefix + "." + key;
        if (val.is_object()) {
            out << json_to_csv(val, name);
        } else if (val.is_array()) {
            out << name << ',';
            for (size_t i = 0; i < val.size(); ++i) {
                if (i) out << ';';
                out << (val[i].is_structured() ? val[i].dump() : val[i].dump());
            }
            out << '\n';
        } else {
            out << name << ',' << val.dump() << '\n';
        }
    }
    return out.str();
}

uint64_t resolve_seed(bool seed_given, uint64_t seed) {
    if (seed_given) return seed;
    if (const char* env = std::getenv("LIGHTCONE_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw lcone::ConfigError("LIGHTCONE_SEED is not an unsigned integer");
        }
    }
    return 0;
}

struct Options {
    std::string circuit_path, observable_path, out_path;
    std::string format = "json";
    double epsilon = 0.1;
    uint64_t seed = 0;
    bool seed_given = false;
    int repetitions = 1;
    double delta = 1.0 / 3.0;
    long task_budget = 10'000'000;
    std::string hadamard_mode = "shortcut";
    std::string method = "causal";  // repeat-study
    bool no_timestamp = false;
    bool no_oracle = false;
    std::optional<double> beta;
    double bits_per_cut = 2.0;
};

void add_common(CLI::App* cmd, Options& opt, bool needs_epsilon) {
    cmd->add_option("--circuit", opt.circuit_path, "circuit file")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--observable", opt.observable_path, "observable file")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--out", opt.out_path, "output path (default: stdout)");
    cmd->add_option("--format", opt.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_flag("--no-timestamp", opt.no_timestamp, "omit wall-clock fields");
    if (needs_epsilon)
        cmd->add_option("--epsilon", opt.epsilon, "additive accuracy target")
            ->check(CLI::PositiveNumber);
}

void add_estimator_flags(CLI::App* cmd, Options& opt) {
    auto* s = cmd->add_option("--seed", opt.seed, "RNG seed (env LIGHTCONE_SEED fallback)");
    cmd->callback([&opt, s] { opt.seed_given = s->count() > 0; });
    cmd->add_option("--delta", opt.delta, "variance target fraction of epsilon^2")
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--no-oracle", opt.no_oracle, "skip the exact cross-check");
}

lcone::CausalConfig causal_config(const Options& opt) {
    lcone::CausalConfig cfg;
    cfg.delta = opt.delta;
    cfg.compute_oracle = !opt.no_oracle;
    return cfg;
}

lcone::AlgebraicConfig algebraic_config(const Options& opt) {
    lcone::AlgebraicConfig cfg;
    cfg.delta = opt.delta;
    cfg.task_budget = opt.task_budget;
    cfg.compute_oracle = !opt.no_oracle;
    if (opt.hadamard_mode == "circuit")
        cfg.hadamard_mode = lcone::HadamardMode::Circuit;
    else if (opt.hadamard_mode != "shortcut")
        throw lcone::ConfigError("hadamard-mode must be shortcut or circuit");
    return cfg;
}

// Both the exact continuous budget and the worst-case (s lambda_c)^2 / V
// bound are reported for causal plans.
void annotate_causal_plan(ordered_json& report, const lcone::ClusteredCircuit& circuit,
                          const lcone::Observable& obs, double epsilon, double delta) {
    int s = obs.locality(circuit.layout());
    double lam = obs.one_norm();
    double v = delta * epsilon * epsilon;
    report["plan"]["k_tot_worst_case"] = s * lam * s * lam / v;
}

void write_report(const ordered_json& j, const Options& opt) {
    if (opt.format == "csv")
        emit(json_to_csv(j), opt.out_path);
    else
        emit(j.dump(2) + "\n", opt.out_path);
}

int run_estimate(const Options& opt, bool algebraic) {
    auto circuit = lcone::parse_circuit(slurp(opt.circuit_path));
    auto obs = lcone::parse_observable(slurp(opt.observable_path));
    uint64_t seed = resolve_seed(opt.seed_given, opt.seed);
    lcone::EstimateReport rep =
        algebraic
            ? lcone::estimate_algebraic(circuit, obs, opt.epsilon, seed, algebraic_config(opt))
            : lcone::estimate_causal_decoupling(circuit, obs, opt.epsilon, seed,
                                                causal_config(opt));
    ordered_json j = lcone::report_to_json(rep, !opt.no_timestamp);
    if (!algebraic) annotate_causal_plan(j, circuit, obs, opt.epsilon, opt.delta);
    j["seed"] = seed;
    write_report(j, opt);
    return 0;
}

int run_oracle(const Options& opt) {
    auto circuit = lcone::parse_circuit(slurp(opt.circuit_path));
    auto obs = lcone::parse_observable(slurp(opt.observable_path));
    double value = lcone::exact_observable_expectation(circuit, obs);
    ordered_json j;
    j["method"] = "oracle";
    j["estimate"] = value;
    j["circuit_depth"] = circuit.depth();
    write_report(j, opt);
    return 0;
}

int run_analyze(const Options& opt) {
    auto circuit = lcone::parse_circuit(slurp(opt.circuit_path));
    auto obs = lcone::parse_observable(slurp(opt.observable_path));
    auto rows =
        lcone::comparison_table(circuit, obs, opt.epsilon, opt.beta, opt.bits_per_cut);
    if (opt.format == "csv")
        emit(lcone::resource_rows_csv(rows), opt.out_path);
    else
        emit(lcone::resource_rows_json(rows), opt.out_path);
    return 0;
}

int run_repeat_study(const Options& opt) {
    if (opt.repetitions < 1) throw lcone::ConfigError("repetitions must be >= 1");
    auto circuit = lcone::parse_circuit(slurp(opt.circuit_path));
    auto obs = lcone::parse_observable(slurp(opt.observable_path));
    bool algebraic = opt.method == "algebraic";
    if (!algebraic && opt.method != "causal")
        throw lcone::ConfigError("method must be causal or algebraic");

    double oracle = lcone::exact_observable_expectation(circuit, obs);
    uint64_t seed = resolve_seed(opt.seed_given, opt.seed);

    lcone::CausalConfig ccfg = causal_config(opt);
    lcone::AlgebraicConfig acfg = algebraic_config(opt);
    ccfg.compute_oracle = acfg.compute_oracle = false;

    std::vector<double> estimates(opt.repetitions);
    double bound = 0.0;
    long hits = 0;
    for (int r = 0; r < opt.repetitions; ++r) {
        lcone::EstimateReport rep =
            algebraic ? lcone::estimate_algebraic(circuit, obs, opt.epsilon, seed + r, acfg)
                      : lcone::estimate_causal_decoupling(circuit, obs, opt.epsilon, seed + r,
                                                          ccfg);
        estimates[r] = rep.estimate;
        bound = rep.variance_bound;
        if (std::abs(rep.estimate - oracle) <= opt.epsilon) ++hits;
    }
    double mean = std::accumulate(estimates.begin(), estimates.end(), 0.0) / opt.repetitions;
    double var = 0.0;
    for (double e : estimates) var += (e - mean) * (e - mean);
    if (opt.repetitions > 1) var /= opt.repetitions - 1;

    ordered_json j;
    j["method"] = opt.method;
    j["repetitions"] = opt.repetitions;
    j["epsilon"] = opt.epsilon;
    j["seed"] = seed;
    j["empirical_mean"] = mean;
    j["empirical_variance"] = var;
    j["variance_bound"] = bound;
    j["oracle"] = oracle;
    j["success_fraction"] = static_cast<double>(hits) / opt.repetitions;
    j["estimates"] = estimates;
    write_report(j, opt);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cluster light-cone observable estimation"};
    app.require_subcommand(1);
    Options opt;

    auto* causal = app.add_subcommand("estimate-causal", "light-cone factorization estimator");
    add_common(causal, opt, true);
    add_estimator_flags(causal, opt);

    auto* alg = app.add_subcommand("estimate-algebraic", "quasi-probability gate expansion");
    add_common(alg, opt, true);
    add_estimator_flags(alg, opt);
    alg->add_option("--task-budget", opt.task_budget, "max Hadamard-test tasks")
        ->check(CLI::PositiveNumber);
    alg->add_option("--hadamard-mode", opt.hadamard_mode, "shortcut|circuit")
        ->check(CLI::IsMember({"shortcut", "circuit"}));

    auto* oracle = app.add_subcommand("oracle", "exact statevector expectation");
    add_common(oracle, opt, false);

    auto* analyze = app.add_subcommand("analyze", "resource comparison table");
    add_common(analyze, opt, true);
    analyze->add_option_function<double>(
        "--beta", [&opt](double b) { opt.beta = b; },
        "support branching factor (required for all-to-all layouts)");
    analyze->add_option("--bits-per-cut", opt.bits_per_cut,
                        "modeled exponent bits per cut gate");

    auto* study = app.add_subcommand("repeat-study", "repeated estimation vs the oracle");
    add_common(study, opt, true);
    add_estimator_flags(study, opt);
    study->add_option("--method", opt.method, "causal|algebraic")
        ->check(CLI::IsMember({"causal", "algebraic"}));
    study->add_option("--repetitions", opt.repetitions, "number of seeded runs")
        ->check(CLI::PositiveNumber);
    study->add_option("--task-budget", opt.task_budget, "max Hadamard-test tasks")
        ->check(CLI::PositiveNumber);
    study->add_option("--hadamard-mode", opt.hadamard_mode, "shortcut|circuit")
        ->check(CLI::IsMember({"shortcut", "circuit"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (causal->parsed()) return run_estimate(opt, false);
        if (alg->parsed()) return run_estimate(opt, true);
        if (oracle->parsed()) return run_oracle(opt);
        if (analyze->parsed()) return run_analyze(opt);
        if (study->parsed()) return run_repeat_study(opt);
    } catch (const lcone::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(e.code());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
