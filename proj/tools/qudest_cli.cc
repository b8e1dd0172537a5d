// Copyright 2026 The Qudest Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qudest/circuit/circuit.h"
#include "qudest/core/error.h"
#include "qudest/core/rng.h"
#include "qudest/estimation/estimators.h"
#include "qudest/fisher/fisher.h"
#include "qudest/harness/experiments.h"
#include "qudest/harness/records.h"
#include "qudest/noise/channels.h"
#include "qudest/sqpt/sqpt.h"

namespace {

using nlohmann::json;
using namespace qudest;

int fail(const std::string &code, const std::string &message) {
    std::cerr << json{{"error", code}, {"message", message}}.dump() << std::endl;
    return 2;
}

OutputFormat parse_format(const std::string &f) {
    if (f == "csv") {
        return OutputFormat::kCsv;
    }
    if (f == "json") {
        return OutputFormat::kJson;
    }
    throw Error(ErrorCode::kConfigInvalid, "format must be csv or json");
}

struct GlobalFlags {
    std::optional<uint64_t> seed;
    std::optional<std::string> out;
    std::optional<std::string> format;
    int threads = 0;
};

int cmd_run(const std::string &config_path, const GlobalFlags &flags) {
    ExperimentConfig cfg = ExperimentConfig::from_file(config_path);
    if (flags.seed) {
        cfg.seed = *flags.seed;
    }
    if (flags.out) {
        cfg.output = *flags.out;
    }
    if (flags.format) {
        cfg.format = parse_format(*flags.format);
    }
    cfg.validate();
    auto start = std::chrono::steady_clock::now();
    std::vector<TrialRecord> records = run_experiment(cfg, flags.threads);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::vector<std::string> files = emit_results(records, cfg.output, cfg.format);
    size_t errors = 0;
    for (const TrialRecord &r : records) {
        errors += r.error_code ? 1 : 0;
    }
    std::cout << json{{"experiment", experiment_kind_name(cfg.kind)},
                      {"trials", records.size()},
                      {"error_rows", errors},
                      {"seconds", secs},
                      {"files", files}}
                     .dump(2)
              << std::endl;
    return 0;
}

int cmd_summarize(const std::string &trials_path, const GlobalFlags &flags) {
    std::vector<SummaryRow> rows = summarize(read_trials_csv(trials_path));
    OutputFormat format = flags.format ? parse_format(*flags.format) : OutputFormat::kCsv;
    std::string text = format == OutputFormat::kCsv ? summary_csv(rows) : summary_json(rows);
    if (flags.out) {
        std::ofstream out(*flags.out, std::ios::binary | std::ios::trunc);
        if (!(out << text)) {
            throw Error(ErrorCode::kIoError, "cannot write '" + *flags.out + "'");
        }
    } else {
        std::cout << text;
    }
    return 0;
}

json matrix_json(const RMatrix &m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            row.push_back(m(r, c));
        }
        rows.push_back(row);
    }
    return rows;
}

int cmd_scenarios() {
    json out = json::array();
    for (const std::string &name : noise_scenario_names()) {
        NoiseParams n = noise_scenario(name);
        json cx = json::array();
        for (const auto &[pair, p] : n.p_cx) {
            cx.push_back({{"qubits", {pair.first, pair.second}}, {"p", p}});
        }
        json readout = json::array();
        for (const RMatrix &a : n.readout) {
            readout.push_back(matrix_json(a));
        }
        out.push_back({{"name", name},
                       {"t1_ns", n.t1},
                       {"t2_ns", n.t2},
                       {"p_sx", n.p_sx},
                       {"p_cx", cx},
                       {"readout", readout},
                       {"duration_single_ns", n.duration_single_ns},
                       {"duration_cx_ns", n.duration_cx_ns},
                       {"duration_measure_ns", n.duration_measure_ns},
                       {"wire_to_qubit", n.wire_to_qubit}});
    }
    std::cout << out.dump(2) << std::endl;
    return 0;
}

int cmd_selftest(const GlobalFlags &flags) {
    uint64_t seed = flags.seed.value_or(1);
    std::vector<std::pair<std::string, std::function<bool()>>> checks = {
        {"circuit amplitudes equal the displacement expansion",
         [&] {
             for (int d = 2; d <= 5; ++d) {
                 for (uint64_t s = 0; s < 10; ++s) {
                     UnitaryMatrix u = haar_random_unitary(d, derive_seed(seed, {1, static_cast<uint64_t>(d), s}));
                     EstimationOutput out = run_estimation(u, CVector::Unit(d, 0));
                     if ((out.control.amplitudes() - wh_expand(u).as_vector()).cwiseAbs().maxCoeff() > 1e-10 ||
                         out.target_fidelity < 1.0 - 1e-12) {
                         return false;
                     }
                 }
             }
             return true;
         }},
        {"no-prior qubit estimator is exact on exact probabilities",
         [&] {
             for (uint64_t s = 0; s < 100; ++s) {
                 UnitaryMatrix u = haar_random_unitary(2, derive_seed(seed, {2, s}));
                 QubitCoefficients c = estimate_qubit_no_prior(qubit_measurement_probabilities(u, QubitBasis::kZ),
                                                               qubit_measurement_probabilities(u, QubitBasis::kX),
                                                               qubit_measurement_probabilities(u, QubitBasis::kY), s);
                 if (agf_between_unitaries(c.unitary(), u) < 1.0 - 1e-9) {
                     return false;
                 }
             }
             return true;
         }},
        {"close-to-identity CFI equals QFI",
         [&] {
             for (int d = 2; d <= 5; ++d) {
                 CounterRng rng(derive_seed(seed, {3, static_cast<uint64_t>(d)}));
                 std::vector<double> lambda(static_cast<size_t>(d * d - 1));
                 for (double &v : lambda) {
                     v = 0.01 * rng.uniform01();
                 }
                 UnitaryMatrix u = exp_hamiltonian(HamiltonianParams(d, lambda));
                 CloseIdParams p = CloseIdParams::from_coefficients(wh_expand(u.matrix()).with_fixed_phase());
                 if ((qfi_close_identity(p).entries - cfi_close_identity(p).entries).cwiseAbs().maxCoeff() > 1e-12) {
                     return false;
                 }
             }
             return true;
         }},
        {"noise channels are trace preserving",
         [&] {
             for (const std::string &name : noise_scenario_names()) {
                 NoiseParams noise = noise_scenario(name);
                 UnitaryMatrix u = haar_random_unitary(2, derive_seed(seed, {4}));
                 Circuit c = build_estimation_circuit(2, u);
                 DensityState rho = apply_circuit_density(
                     c, DensityState::from_pure(PureState::basis(c.layout(), 0)), noise);
                 if (std::abs(rho.matrix().trace().real() - 1.0) > 1e-10 || rho.min_eigenvalue() < -1e-8) {
                     return false;
                 }
             }
             return true;
         }},
        {"process tomography recovers a unitary channel",
         [&] {
             UnitaryMatrix u = haar_random_unitary(2, derive_seed(seed, {5}));
             return average_gate_fidelity(sqpt_exact(unitary_channel(u)), u) >= 1.0 - 1e-9;
         }},
        {"experiments are deterministic across thread counts",
         [&] {
             ExperimentConfig cfg;
             cfg.n_unitaries = 3;
             cfg.n_repetitions = 3;
             cfg.shots = {120, 1200};
             cfg.scenarios = {"noiseless", "full"};
             cfg.seed = seed;
             return trials_csv(run_experiment(cfg, 1)) == trials_csv(run_experiment(cfg, flags.threads));
         }},
    };
    bool all = true;
    for (const auto &[name, check] : checks) {
        bool ok = false;
        try {
            ok = check();
        } catch (const std::exception &e) {
            std::cout << "error in check: " << e.what() << "\n";
        }
        std::cout << (ok ? "PASS " : "FAIL ") << name << "\n";
        all = all && ok;
    }
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"qudest: qudit unitary estimation toolkit"};
    app.require_subcommand(1);
    GlobalFlags flags;
    uint64_t seed = 0;
    std::string out;
    std::string format;
    app.add_option("--seed", seed, "Master seed (overrides the config)");
    app.add_option("--out", out, "Output stem for run, output file for summarize");
    app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--threads", flags.threads, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);

    std::string config_path;
    CLI::App *run = app.add_subcommand("run", "Run the experiment described by a JSON config");
    run->add_option("config", config_path, "Config file")->required();
    std::string trials_path;
    CLI::App *sum = app.add_subcommand("summarize", "Recompute summary statistics from a trial CSV");
    sum->add_option("trials", trials_path, "Trial CSV file")->required();
    CLI::App *scen = app.add_subcommand("scenarios", "List the noise presets");
    CLI::App *self = app.add_subcommand("selftest", "Run the invariant suite");
    for (CLI::App *sub : {run, sum, scen, self}) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        return fail("usage-error", e.what());
    }
    if (app.count("--seed") > 0) {
        flags.seed = seed;
    }
    if (app.count("--out") > 0) {
        flags.out = out;
    }
    if (app.count("--format") > 0) {
        flags.format = format;
    }

    try {
        if (run->parsed()) {
            return cmd_run(config_path, flags);
        }
        if (sum->parsed()) {
            return cmd_summarize(trials_path, flags);
        }
        if (scen->parsed()) {
            return cmd_scenarios();
        }
        return cmd_selftest(flags);
    } catch (const Error &e) {
        return fail(std::string(error_code_name(e.code())), e.what());
    } catch (const std::exception &e) {
        return fail("internal-error", e.what());
    }
}
