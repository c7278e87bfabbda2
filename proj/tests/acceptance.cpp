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

// Acceptance suite: one pass/fail line per criterion. Exit code 0 only if
// every criterion holds. Criterion 10 and the CLI interface checks drive
// the installed binary; pass its path with --cli (default: ../tools/qcpu).

#include "qcpu/deutsch.hpp"
#include "qcpu/gates.hpp"
#include "qcpu/grover.hpp"
#include "qcpu/network_export.hpp"
#include "qcpu/qcpu.hpp"
#include "qcpu/qft.hpp"
#include "qcpu/rng.hpp"
#include "qcpu/shor.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace qcpu;

namespace {

int g_failures = 0;

void report(int criterion, const std::string &name, bool pass,
            const std::string &detail = "") {
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << criterion
              << ": " << name;
    if (!detail.empty())
        std::cout << "  (" << detail << ")";
    std::cout << "\n";
    if (!pass)
        ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
}

ComplexMatrix random_matrix(Rng &rng, Index n) {
    ComplexMatrix m(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            m(i, j) = cplx{2.0 * rng.next_double() - 1.0,
                           2.0 * rng.next_double() - 1.0};
    return m;
}

template <typename T> void shuffle(std::vector<T> &values, Rng &rng) {
    for (std::size_t i = values.size(); i > 1; --i)
        std::swap(values[i - 1], values[rng.next_u64() % i]);
}

std::string fmt(double v) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.3g", v);
    return buffer;
}

// ---- criteria ---------------------------------------------------------------

void criterion_1_closed_form() {
    const auto start = std::chrono::steady_clock::now();
    Rng rng = Rng::stream(1, "acceptance/closed-form");
    double worst = 0.0;
    for (int k = 1; k <= 3; ++k) {
        const RegisterShape shape = RegisterShape::of_qubits(k);
        for (int trial = 0; trial < 50; ++trial) {
            const QcpuNetwork net = qcpu_of(random_matrix(rng, shape.dim));
            ComplexMatrix product = ComplexMatrix::identity(2 * shape.dim);
            for (const auto &f : net.factors())
                product = matmul(product, factor_matrix(f, shape));
            worst = std::max(worst, max_abs_diff(product, closed_form(net)));
        }
    }
    const double elapsed = seconds_since(start);
    report(1, "closed-form equivalence", worst <= 1e-13 && elapsed < 5.0,
           "max residual " + fmt(worst) + ", " + fmt(elapsed) + " s");
}

void criterion_2_sum_rule() {
    const auto start = std::chrono::steady_clock::now();
    Rng rng = Rng::stream(1, "acceptance/sum-rule");
    double worst = 0.0;
    for (int k = 1; k <= 3; ++k) {
        const RegisterShape shape = RegisterShape::of_qubits(k);
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<QcpuNetwork> nets;
            ComplexMatrix total(shape.dim, shape.dim);
            for (int i = 0; i < 3; ++i) {
                const ComplexMatrix u = random_matrix(rng, shape.dim);
                total = matadd(total, u);
                nets.push_back(qcpu_of(u));
            }
            const ComplexMatrix direct = closed_form(qcpu_of(total));
            for (int ordering = 0; ordering < 3; ++ordering) {
                shuffle(nets, rng);
                ComplexMatrix product = ComplexMatrix::identity(2 * shape.dim);
                for (const auto &net : nets)
                    product = matmul(product, closed_form(net));
                worst = std::max(worst, max_abs_diff(product, direct));
            }
        }
    }
    const double elapsed = seconds_since(start);
    report(2, "sum rule", worst <= 1e-12 && elapsed < 5.0,
           "max residual " + fmt(worst) + ", " + fmt(elapsed) + " s");
}

void criterion_3_product_rule() {
    const auto start = std::chrono::steady_clock::now();
    Rng rng = Rng::stream(1, "acceptance/product-rule");
    double worst = 0.0;
    for (int k = 1; k <= 2; ++k) {
        const RegisterShape shape = RegisterShape::of_qubits(k);
        for (int r = 1; r <= 4; ++r) {
            for (int trial = 0; trial < 50; ++trial) {
                std::vector<ComplexMatrix> us;
                ComplexMatrix prod = ComplexMatrix::identity(shape.dim);
                for (int i = 0; i < r; ++i) {
                    us.push_back(random_matrix(rng, shape.dim));
                    prod = matmul(prod, us.back());
                }
                const ComplexMatrix expected =
                    matadd(ComplexMatrix::identity(2 * shape.dim),
                           tensor(prod, outer(1, 0, 2)));
                worst = std::max(
                    worst, max_abs_diff(product_compose(us).op(), expected));
            }
        }
    }
    const double elapsed = seconds_since(start);
    report(3, "product rule", worst <= 1e-12 && elapsed < 5.0,
           "max residual " + fmt(worst) + ", " + fmt(elapsed) + " s");
}

void criterion_4_fermionic() {
    const AuxiliaryAlgebra aux;
    const double worst =
        std::max({max_abs_diff(matmul(aux.c, aux.c), ComplexMatrix::zero(2, 2)),
                  max_abs_diff(matmul(aux.c_dag, aux.c_dag),
                               ComplexMatrix::zero(2, 2)),
                  max_abs_diff(matadd(matmul(aux.c, aux.c_dag),
                                      matmul(aux.c_dag, aux.c)),
                               ComplexMatrix::identity(2))});
    report(4, "fermionic relations exact", worst == 0.0,
           "residual " + fmt(worst));
}

void criterion_5_deutsch() {
    bool pass = true;
    double worst = 0.0;
    for (const DeutschFunction &f : DeutschFunction::all()) {
        const DeutschResult result = run_deutsch(f);
        worst = std::max(worst, std::abs(result.outcome_probability - 1.0));
        pass = pass && result.routes_agree &&
               (result.balanced == !f.is_constant());
    }
    report(5, "deutsch classification", pass && worst <= 1e-12,
           "max probability deviation " + fmt(worst));
}

void criterion_6_qft() {
    double worst_sum = 0.0;
    double worst_unitary = 0.0;
    double variant_min_gap = 1e300;
    for (int k = 1; k <= 4; ++k) {
        const QftConfig cfg = QftConfig::of_qubits(k);
        const ComplexMatrix f = fourier_matrix(cfg.shape);
        ComplexMatrix sum(cfg.shape.dim, cfg.shape.dim);
        for (const QftTerm &term : qft_factorization(cfg))
            sum = matadd(sum, term.matrix);
        worst_sum = std::max(worst_sum, max_abs_diff(sum, f));
        worst_unitary = std::max(worst_unitary, unitarity_residual(f));

        ComplexMatrix variant_sum(cfg.shape.dim, cfg.shape.dim);
        for (const QftTerm &term : qft_factorization_variant(cfg))
            variant_sum = matadd(variant_sum, term.matrix);
        variant_min_gap =
            std::min(variant_min_gap, max_abs_diff(variant_sum, f));
    }
    const bool pass = worst_sum <= 1e-12 && worst_unitary <= 1e-12 &&
                      variant_min_gap > 1e-12;
    report(6, "qft factorization (and expected-fail of the 2^k-1 variant)",
           pass,
           "sum residual " + fmt(worst_sum) + ", variant gap " +
               fmt(variant_min_gap));
}

void criterion_7_shor_end_to_end() {
    const auto start = std::chrono::steady_clock::now();
    bool pass = true;
    double min_success = 1.0;
    for (int a : {2, 7, 8, 13}) {
        const ShorAnalysis analysis =
            analyze_shor_branches(ShorConfig::make(15, a, 8));
        min_success = std::min(min_success, analysis.success_probability);
        double uniform_worst = 0.0;
        for (const auto &branch : analysis.branches) {
            for (const auto &outcome : branch.outcomes)
                if (outcome.success && *outcome.factors != std::pair{3, 5})
                    pass = false;
            // r = 4 divides 256: peaks exactly at 0, 64, 128, 192 with 1/4.
            for (std::size_t y = 0; y < branch.dft_distribution.size(); ++y) {
                const double expected = (y % 64 == 0) ? 0.25 : 0.0;
                uniform_worst =
                    std::max(uniform_worst,
                             std::abs(branch.dft_distribution[y] - expected));
            }
        }
        if (uniform_worst > 1e-10)
            pass = false;
    }
    if (min_success < 0.5)
        pass = false;

    const ShorAnalysis analysis21 =
        analyze_shor_branches(ShorConfig::make(21, 2, 9));
    bool any21 = false;
    for (const auto &branch : analysis21.branches)
        for (const auto &outcome : branch.outcomes)
            if (outcome.success) {
                any21 = true;
                if (*outcome.factors != std::pair{3, 7})
                    pass = false;
            }
    pass = pass && any21;

    const double elapsed = seconds_since(start);
    report(7, "shor end-to-end branch enumeration",
           pass && elapsed < 60.0,
           "min success probability " + fmt(min_success) + ", " +
               fmt(elapsed) + " s");
}

void criterion_8_shor_operator() {
    const ShorConfig cfg = ShorConfig::make(15, 7, 3);
    double worst = 0.0;
    for (int residue : {1, 4, 7, 13})
        worst = std::max(worst,
                         max_abs_diff(shor_network(cfg, residue).register_block(),
                                      shor_u(cfg, residue)));
    report(8, "shor network block equals the dense operator", worst <= 1e-12,
           "max residual " + fmt(worst));
}

void criterion_9_grover() {
    const auto start = std::chrono::steady_clock::now();
    bool pass = true;

    // Exact hit at k=2 after one iteration.
    double k2_worst = 0.0;
    for (Index target = 0; target < 4; ++target) {
        const GroverRun run = run_grover(GroverConfig::make(2, target, 1), 1);
        k2_worst = std::max(k2_worst, std::abs(run.target_probability - 1.0));
    }
    if (k2_worst > 1e-12)
        pass = false;

    // Closed-formula agreement for k = 3..6 at the default iteration count.
    double formula_worst = 0.0;
    for (int k = 3; k <= 6; ++k) {
        const Index n = Index{1} << k;
        const GroverConfig cfg = GroverConfig::make(k, n / 2 + 1);
        const GroverRun run = run_grover(cfg, 1);
        formula_worst = std::max(
            formula_worst,
            std::abs(run.target_probability -
                     grover_success_probability(n, cfg.iterations)));
    }
    if (formula_worst > 1e-9)
        pass = false;

    // Corrected reflection network is exact; the defective one is off by
    // exactly the identity shift.
    const RegisterShape shape = RegisterShape::of_qubits(3);
    const double corrected = max_abs_diff(
        grover_qcpu_r2(shape, 5), closed_form(qcpu_of(grover_r2(shape, 5))));
    const double shift = max_abs_diff(
        matsub(grover_qcpu_r2_defective(shape, 5), grover_qcpu_r2(shape, 5)),
        tensor(ComplexMatrix::identity(shape.dim), outer(1, 0, 2)));
    if (corrected != 0.0 || shift != 0.0)
        pass = false;

    const double elapsed = seconds_since(start);
    report(9, "grover success probabilities", pass && elapsed < 10.0,
           "k2 dev " + fmt(k2_worst) + ", formula dev " + fmt(formula_worst) +
               ", " + fmt(elapsed) + " s");
}

// ---- CLI-driven checks --------------------------------------------------------

struct CliResult {
    int exit_code = -1;
    std::string output;
};

CliResult run_cli(const std::string &cli, const std::string &args) {
    const std::string command = cli + " " + args + " 2>/dev/null";
    FILE *pipe = popen(command.c_str(), "r");
    CliResult result;
    if (!pipe)
        return result;
    char buffer[4096];
    std::size_t n;
    while ((n = fread(buffer, 1, sizeof(buffer), pipe)) > 0)
        result.output.append(buffer, n);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string slurp(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void criterion_10_determinism(const std::string &cli) {
    bool pass = true;
    std::string detail;

    const CliResult shor_a =
        run_cli(cli, "shor --n 15 --a 7 --seed 5 --json acc_shor_a.json");
    const CliResult shor_b =
        run_cli(cli, "shor --n 15 --a 7 --seed 5 --json acc_shor_b.json");
    if (shor_a.exit_code != 0 || shor_b.exit_code != 0 ||
        shor_a.output != shor_b.output ||
        slurp("acc_shor_a.json").empty() ||
        slurp("acc_shor_a.json") != slurp("acc_shor_b.json")) {
        pass = false;
        detail = "shor stdout/json differ across identical invocations";
    }

    const CliResult grover_a = run_cli(
        cli, "grover --k 4 --target 7 --seed 3 --json acc_grover_a.json");
    const CliResult grover_b = run_cli(
        cli, "grover --k 4 --target 7 --seed 3 --json acc_grover_b.json");
    if (grover_a.exit_code != 0 || grover_b.exit_code != 0 ||
        grover_a.output != grover_b.output ||
        slurp("acc_grover_a.json") != slurp("acc_grover_b.json")) {
        pass = false;
        detail = "grover stdout/json differ across identical invocations";
    }

    const CliResult verify_a = run_cli(
        cli, "verify --suite qcpu-core --trials 10 --seed 9 --json acc_v_a.json");
    const CliResult verify_b = run_cli(
        cli, "verify --suite qcpu-core --trials 10 --seed 9 --json acc_v_b.json");
    if (verify_a.exit_code != 0 || verify_b.exit_code != 0 ||
        verify_a.output != verify_b.output ||
        slurp("acc_v_a.json") != slurp("acc_v_b.json")) {
        pass = false;
        detail = "verify stdout/json differ across identical invocations";
    }

    for (const char *path :
         {"acc_shor_a.json", "acc_shor_b.json", "acc_grover_a.json",
          "acc_grover_b.json", "acc_v_a.json", "acc_v_b.json"})
        std::remove(path);

    report(10, "seeded invocations are byte-identical", pass, detail);
}

void interface_checks(const std::string &cli) {
    bool pass = true;
    std::string detail;

    const CliResult deutsch = run_cli(cli, "deutsch --f f3");
    if (deutsch.exit_code != 0 ||
        deutsch.output != "balanced (output 1)\n") {
        pass = false;
        detail = "deutsch --f f3 output unexpected";
    }

    const CliResult shor42 =
        run_cli(cli, "shor --n 15 --a 7 --seed 42 --json acc_shor42.json");
    const std::string json = slurp("acc_shor42.json");
    std::remove("acc_shor42.json");
    if (shor42.exit_code != 0 ||
        json.find("\"factors\": [\n    3,\n    5\n  ]") == std::string::npos) {
        pass = false;
        detail = "shor seed 42 did not report factors 3, 5";
    }

    const CliResult capped = run_cli(cli, "grover --k 10 --target 3");
    if (capped.exit_code != 2) {
        pass = false;
        detail = "grover --k 10 should exit 2 on the dense cap";
    }

    const CliResult faulted =
        run_cli(cli, "verify --suite qcpu-core --fault-inject");
    if (faulted.exit_code != 1 ||
        faulted.output.find("[FAIL]") == std::string::npos) {
        pass = false;
        detail = "fault injection did not surface a failure";
    }

    const CliResult bad_suite = run_cli(cli, "verify --suite bogus");
    if (bad_suite.exit_code != 2) {
        pass = false;
        detail = "unknown suite should exit 2";
    }

    const CliResult exported = run_cli(
        cli, "export --algorithm grover --k 2 --target 2 --format dot "
             "--out acc_grover.dot");
    run_cli(cli, "export --algorithm grover --k 2 --target 2 --format dot "
                 "--out acc_grover2.dot");
    const std::string dot = slurp("acc_grover.dot");
    const std::string dot_again = slurp("acc_grover2.dot");
    std::remove("acc_grover.dot");
    std::remove("acc_grover2.dot");
    if (exported.exit_code != 0 || dot.rfind("digraph", 0) != 0 ||
        dot.find("conn_0") == std::string::npos || dot != dot_again) {
        pass = false;
        detail = "grover dot export malformed or nondeterministic";
    }

    report(0, "CLI interface contract", pass, detail);
}

} // namespace

int main(int argc, char **argv) {
    std::string cli = "../tools/qcpu";
    for (int i = 1; i + 1 < argc; i += 2)
        if (std::string(argv[i]) == "--cli")
            cli = argv[i + 1];

    criterion_1_closed_form();
    criterion_2_sum_rule();
    criterion_3_product_rule();
    criterion_4_fermionic();
    criterion_5_deutsch();
    criterion_6_qft();
    criterion_7_shor_end_to_end();
    criterion_8_shor_operator();
    criterion_9_grover();
    criterion_10_determinism(cli);
    interface_checks(cli);

    if (g_failures > 0) {
        std::cout << g_failures << " criteria failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
