// Copyright 2026 The qcpu Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// qcpu: build, run and verify factor networks for the four textbook
// algorithms. Every invocation with the same arguments (seed included)
// produces byte-identical stdout and JSON.

#include "qcpu/deutsch.hpp"
#include "qcpu/gates.hpp"
#include "qcpu/grover.hpp"
#include "qcpu/network_export.hpp"
#include "qcpu/qcpu.hpp"
#include "qcpu/qft.hpp"
#include "qcpu/report.hpp"
#include "qcpu/shor.hpp"
#include "qcpu/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>
#include <string>

namespace {

using namespace qcpu;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::string fmt(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.15g", value);
    return buffer;
}

std::string fmt(cplx value) {
    char buffer[96];
    std::snprintf(buffer, sizeof(buffer), "%.15g%+.15gi", value.real(),
                  value.imag());
    return buffer;
}

struct CommonArgs {
    std::string json_path;
    std::uint64_t seed = 1;
    double tolerance = kDefaultTolerance;
    bool timings = false;
};

class Timer {
  public:
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point start_ =
        std::chrono::steady_clock::now();
};

void finish_report(RunReport &report, const CommonArgs &common,
                   const Timer &timer) {
    const double elapsed = timer.elapsed_ms();
    std::cerr << "elapsed " << fmt(elapsed) << " ms\n";
    if (common.timings)
        report.wall_time_ms = elapsed;
    if (!common.json_path.empty())
        write_report(report, common.json_path);
}

int cmd_deutsch(const std::string &f_name, const CommonArgs &common) {
    const Timer timer;
    const DeutschFunction f = DeutschFunction::from_name(f_name);
    const DeutschResult result = run_deutsch(f);
    std::cout << (result.balanced ? "balanced (output 1)"
                                  : "constant (output 0)")
              << "\n";

    RunReport report;
    report.algorithm = "deutsch";
    report.params = {{"f", f.name()},
                     {"f0", f.f0},
                     {"f1", f.f1}};
    report.amplitudes = {{"register_0", result.register_state[0]},
                         {"register_1", result.register_state[1]}};
    report.probabilities = {{
        {0, std::norm(result.register_state[0])},
        {1, std::norm(result.register_state[1])},
    }};
    report.outcome = JsonValue(result.balanced ? "balanced" : "constant");
    report.extras["output_bit"] = result.output_bit;
    report.residuals["outcome_probability_deviation"] =
        std::abs(result.outcome_probability - 1.0);
    finish_report(report, common, timer);
    return kExitOk;
}

int cmd_qft(int k, bool show_matrix, const CommonArgs &common) {
    const Timer timer;
    const QftConfig cfg = QftConfig::of_qubits(k);
    const ComplexMatrix f = fourier_matrix(cfg.shape);

    ComplexMatrix sum(cfg.shape.dim, cfg.shape.dim);
    const auto terms = qft_factorization(cfg);
    for (const QftTerm &term : terms)
        sum = matadd(sum, term.matrix);
    const double sum_residual = max_abs_diff(sum, f);
    const double unitarity = unitarity_residual(f);
    const double network_residual =
        max_abs_diff(closed_form(qft_network(cfg)), closed_form(qcpu_of(f)));

    std::cout << "qft k=" << k << ": " << terms.size() << " rank-one terms\n"
              << "term-sum residual = " << fmt(sum_residual) << "\n"
              << "unitarity residual = " << fmt(unitarity) << "\n"
              << "network residual = " << fmt(network_residual) << "\n";
    if (show_matrix) {
        for (Index row = 0; row < f.rows(); ++row) {
            for (Index col = 0; col < f.cols(); ++col)
                std::cout << (col == 0 ? "" : "  ") << fmt(f(row, col));
            std::cout << "\n";
        }
    }

    RunReport report;
    report.algorithm = "qft";
    report.params = {{"k", k}};
    report.residuals = {{"term_sum", sum_residual},
                        {"unitarity", unitarity},
                        {"network", network_residual}};
    finish_report(report, common, timer);
    return kExitOk;
}

int cmd_shor(int n, int a, int k, const CommonArgs &common) {
    const Timer timer;
    RunReport report;
    report.algorithm = "shor";
    report.seed = common.seed;

    const auto g = static_cast<int>(gcd_u64(static_cast<std::uint64_t>(a),
                                            static_cast<std::uint64_t>(n)));
    if (a <= 1 || a >= n)
        throw ConfigError("base must satisfy 1 < a < n");
    if (g > 1) {
        // The base shares a factor with n; nothing quantum to do.
        const int low = std::min(g, n / g);
        const int high = std::max(g, n / g);
        std::cout << "factors: " << low << " " << high
                  << " (common factor with base, no quantum run)\n";
        report.params = {{"n", n}, {"a", a}};
        report.extras["factors"] =
            JsonValue::Array{JsonValue(low), JsonValue(high)};
        report.extras["method"] = "common-factor";
        finish_report(report, common, timer);
        return kExitOk;
    }

    const ShorConfig cfg = ShorConfig::make(n, a, k);
    const ShorRun run = run_shor(cfg, common.seed);

    std::cout << "registers: k=" << cfg.k << " (dim " << cfg.first_dim()
              << "), k2=" << cfg.k2 << " (dim " << cfg.second_dim() << ")\n"
              << "residue u = " << run.measured_residue << " (probability "
              << fmt(run.residue_probability) << ")\n"
              << "sampled y = " << run.sampled_y << " (probability "
              << fmt(run.y_probability) << ")\n";
    if (run.period.found)
        std::cout << "period r = " << run.period.period
                  << " (convergent denominator " << run.period.convergent_den
                  << ")\n";
    if (run.factors)
        std::cout << "factors: " << run.factors->first << " "
                  << run.factors->second << "\n";
    else
        std::cout << "failure: " << run.failure_reason << "\n";

    report.params = {{"n", n}, {"a", a}, {"k", cfg.k}, {"k2", cfg.k2}};
    std::vector<std::pair<Index, double>> probs;
    for (std::size_t y = 0; y < run.dft_distribution.size(); ++y)
        probs.emplace_back(static_cast<Index>(y), run.dft_distribution[y]);
    report.probabilities = std::move(probs);
    report.amplitudes = {{"dft_at_sampled_y", run.sampled_amplitude}};
    report.outcome = JsonValue(static_cast<std::int64_t>(run.sampled_y));
    report.extras["residue"] = run.measured_residue;
    report.extras["sampled_y"] = static_cast<std::int64_t>(run.sampled_y);
    if (run.period.found)
        report.extras["period"] = static_cast<std::int64_t>(run.period.period);
    if (run.factors)
        report.extras["factors"] = JsonValue::Array{
            JsonValue(run.factors->first), JsonValue(run.factors->second)};
    else
        report.extras["failure"] = run.failure_reason;
    const double dft_sum =
        std::accumulate(run.dft_distribution.begin(),
                        run.dft_distribution.end(), 0.0);
    report.residuals["dft_distribution_sum_deviation"] =
        std::abs(dft_sum - 1.0);
    finish_report(report, common, timer);
    return kExitOk;
}

int cmd_grover(int k, Index target, int iterations, const CommonArgs &common) {
    const Timer timer;
    const GroverConfig cfg = GroverConfig::make(k, target, iterations);
    const GroverRun run = run_grover(cfg, common.seed);
    const double expected =
        grover_success_probability(cfg.shape.dim, cfg.iterations);

    std::cout << "target " << cfg.target << " of " << cfg.shape.dim
              << ", iterations " << cfg.iterations << "\n"
              << "outcome = " << run.outcome << "\n"
              << "P(target) = " << fmt(run.target_probability) << "\n";

    RunReport report;
    report.algorithm = "grover";
    report.seed = common.seed;
    report.params = {{"k", k},
                     {"target", static_cast<std::int64_t>(cfg.target)},
                     {"iterations", cfg.iterations}};
    std::vector<std::pair<Index, double>> probs;
    for (std::size_t i = 0; i < run.distribution.size(); ++i)
        probs.emplace_back(static_cast<Index>(i), run.distribution[i]);
    report.probabilities = std::move(probs);
    report.amplitudes = {{"target", run.target_amplitude}};
    report.outcome = JsonValue(static_cast<std::int64_t>(run.outcome));
    report.residuals["closed_formula_deviation"] =
        std::abs(run.target_probability - expected);
    finish_report(report, common, timer);
    return kExitOk;
}

int cmd_verify(const std::string &suite, int trials, const std::string &k_range,
               bool fault_inject, const CommonArgs &common) {
    const Timer timer;
    VerifyOptions options;
    options.trials = trials;
    options.seed = common.seed;
    options.tolerance_scale = common.tolerance / kDefaultTolerance;
    options.fault_inject = fault_inject;
    if (!k_range.empty()) {
        const auto dots = k_range.find("..");
        if (dots == std::string::npos)
            throw ConfigError("--k-range expects the form MIN..MAX");
        options.k_min = std::stoi(k_range.substr(0, dots));
        options.k_max = std::stoi(k_range.substr(dots + 2));
        if (options.k_min < 1 || options.k_max < options.k_min)
            throw ConfigError("--k-range bounds out of order");
    }

    const SuiteResult result = run_suite(suite, options);
    for (const auto &check : result.checks) {
        std::cout << (check.pass ? "[PASS] " : "[FAIL] ") << check.id
                  << "  residual=" << fmt(check.residual)
                  << (check.inverted ? "  floor=" : "  tolerance=")
                  << fmt(check.tolerance) << "\n";
    }
    const auto failures = result.failures();
    std::cout << "suite " << result.suite << ": " << result.checks.size()
              << " checks, " << result.cases_run << " cases, "
              << failures.size() << " failures\n";

    if (!common.json_path.empty()) {
        JsonValue::Object root;
        root["suite"] = result.suite;
        root["cases_run"] = result.cases_run;
        root["passed"] = failures.empty();
        JsonValue::Array checks;
        for (const auto &check : result.checks) {
            JsonValue::Object entry;
            entry["id"] = check.id;
            entry["residual"] = check.residual;
            entry["tolerance"] = check.tolerance;
            entry["inverted"] = check.inverted;
            entry["pass"] = check.pass;
            checks.push_back(JsonValue(std::move(entry)));
        }
        root["checks"] = std::move(checks);
        JsonValue::Array failure_entries;
        for (const auto &check : failures) {
            JsonValue::Object entry;
            entry["id"] = check.id;
            entry["residual"] = check.residual;
            entry["tolerance"] = check.tolerance;
            failure_entries.push_back(JsonValue(std::move(entry)));
        }
        root["failures"] = std::move(failure_entries);
        write_json_file(JsonValue(std::move(root)), common.json_path);
    }
    std::cerr << "elapsed " << fmt(timer.elapsed_ms()) << " ms\n";
    return failures.empty() ? kExitOk : kExitCheckFailed;
}

struct ExportArgs {
    std::string algorithm;
    std::string format = "text";
    std::string out_path;
    std::string f_name = "f3";
    int k = 0;
    int n = 15;
    int a = 7;
    int residue = -1;
    Index target = 0;
    int iterations = -1;
};

int cmd_export(const ExportArgs &args) {
    const ExportFormat format = parse_export_format(args.format);
    std::string rendered;
    if (args.algorithm == "deutsch") {
        const DeutschFunction f = DeutschFunction::from_name(args.f_name);
        rendered = export_network(
            qcpu_of(deutsch_v(f), "V(" + f.name() + ")"), format);
    } else if (args.algorithm == "qft") {
        rendered = export_network(
            qft_network(QftConfig::of_qubits(args.k > 0 ? args.k : 3)), format);
    } else if (args.algorithm == "shor") {
        const ShorConfig cfg = ShorConfig::make(
            args.n, args.a, args.k > 0 ? args.k : 3);
        const int residue =
            args.residue >= 0 ? args.residue : args.a % args.n;
        rendered = export_network(shor_network(cfg, residue), format);
    } else if (args.algorithm == "grover") {
        rendered = export_network(
            grover_network(GroverConfig::make(args.k > 0 ? args.k : 3,
                                              args.target, args.iterations)),
            format);
    } else {
        throw ConfigError("unknown algorithm: " + args.algorithm +
                          " (expected deutsch|qft|shor|grover)");
    }
    std::ofstream out(args.out_path, std::ios::binary);
    if (!out)
        throw Error("cannot open " + args.out_path + " for writing");
    out << rendered;
    if (!out)
        throw Error("write failed for " + args.out_path);
    return kExitOk;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"factor-network quantum algorithm simulator"};
    app.require_subcommand(1);

    CommonArgs common;
    app.add_option("--tolerance", common.tolerance,
                   "base tolerance scaled into every verification check")
        ->envname("QCPU_TOLERANCE")
        ->capture_default_str();
    app.add_flag("--timings", common.timings,
                 "include wall_time_ms in JSON reports (breaks byte-for-byte "
                 "determinism)");

    auto add_json = [&common](CLI::App *cmd) {
        cmd->add_option("--json", common.json_path,
                        "write a JSON report to this path");
    };
    auto add_seed = [&common](CLI::App *cmd) {
        cmd->add_option("--seed", common.seed, "RNG seed")
            ->capture_default_str();
    };

    auto *deutsch_cmd =
        app.add_subcommand("deutsch", "classify a one-bit function");
    std::string f_name;
    deutsch_cmd->add_option("--f", f_name, "function name (f1|f2|f3|f4)")
        ->required();
    add_json(deutsch_cmd);

    auto *qft_cmd =
        app.add_subcommand("qft", "rank-one factorization checks");
    int qft_k = 3;
    bool show_matrix = false;
    qft_cmd->add_option("--k", qft_k, "register qubits")->capture_default_str();
    qft_cmd->add_flag("--show-matrix", show_matrix, "print the Fourier matrix");
    add_json(qft_cmd);

    auto *shor_cmd = app.add_subcommand("shor", "factor a small composite");
    int shor_n = 0, shor_a = 0, shor_k = 0;
    shor_cmd->add_option("--n", shor_n, "composite to factor")->required();
    shor_cmd->add_option("--a", shor_a, "base coprime to n")->required();
    shor_cmd->add_option("--k", shor_k,
                         "first-register qubits (default: 2^k >= n^2)");
    add_seed(shor_cmd);
    add_json(shor_cmd);

    auto *grover_cmd =
        app.add_subcommand("grover", "amplitude-amplification search");
    int grover_k = 0, grover_iterations = -1;
    Index grover_target = 0;
    grover_cmd->add_option("--k", grover_k, "register qubits")->required();
    grover_cmd->add_option("--target", grover_target, "marked basis index")
        ->required();
    grover_cmd->add_option("--iterations", grover_iterations,
                           "iteration count (default floor(pi/4 sqrt(N)))");
    add_seed(grover_cmd);
    add_json(grover_cmd);

    auto *verify_cmd =
        app.add_subcommand("verify", "run a named verification suite");
    std::string suite = "all";
    int trials = 20;
    std::string k_range;
    bool fault_inject = false;
    verify_cmd->add_option("--suite", suite, "suite name")
        ->check(CLI::IsMember(suite_names()))
        ->capture_default_str();
    verify_cmd->add_option("--trials", trials, "random trials per check")
        ->check(CLI::Range(1, 100000))
        ->capture_default_str();
    verify_cmd->add_option("--k-range", k_range,
                           "qubit range MIN..MAX for sweeping suites");
    verify_cmd->add_flag("--fault-inject", fault_inject,
                         "self-test: corrupt one factor so a failure must "
                         "be reported");
    add_seed(verify_cmd);
    add_json(verify_cmd);

    auto *export_cmd =
        app.add_subcommand("export", "render a network as text or DOT");
    ExportArgs export_args;
    export_cmd
        ->add_option("--algorithm", export_args.algorithm,
                     "deutsch|qft|shor|grover")
        ->required();
    export_cmd->add_option("--format", export_args.format, "text|dot")
        ->capture_default_str();
    export_cmd->add_option("--out", export_args.out_path, "output path")
        ->required();
    export_cmd->add_option("--f", export_args.f_name, "deutsch function");
    export_cmd->add_option("--k", export_args.k, "register qubits");
    export_cmd->add_option("--n", export_args.n, "shor composite");
    export_cmd->add_option("--a", export_args.a, "shor base");
    export_cmd->add_option("--u", export_args.residue, "shor residue");
    export_cmd->add_option("--target", export_args.target, "grover target");
    export_cmd->add_option("--iterations", export_args.iterations,
                           "grover iterations");

    // Global flags (--tolerance, --timings) may trail the subcommand.
    for (CLI::App *sub : app.get_subcommands([](CLI::App *) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(deutsch_cmd))
            return cmd_deutsch(f_name, common);
        if (app.got_subcommand(qft_cmd))
            return cmd_qft(qft_k, show_matrix, common);
        if (app.got_subcommand(shor_cmd))
            return cmd_shor(shor_n, shor_a, shor_k, common);
        if (app.got_subcommand(grover_cmd))
            return cmd_grover(grover_k, grover_target, grover_iterations,
                              common);
        if (app.got_subcommand(verify_cmd))
            return cmd_verify(suite, trials, k_range, fault_inject, common);
        if (app.got_subcommand(export_cmd))
            return cmd_export(export_args);
    } catch (const ConfigError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CapError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const FormatError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DimensionError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const IndexError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitUsage;
}
