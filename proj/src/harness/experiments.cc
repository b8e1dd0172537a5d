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

#include "qudest/harness/experiments.h"

#include <array>
#include <chrono>
#include <map>

#include "qudest/circuit/circuit.h"
#include "qudest/core/error.h"
#include "qudest/core/rng.h"
#include "qudest/estimation/estimators.h"
#include "qudest/estimation/partition.h"
#include "qudest/fisher/fisher.h"
#include "qudest/harness/thread_pool.h"
#include "qudest/noise/channels.h"
#include "qudest/sqpt/sqpt.h"

namespace qudest {

namespace {

constexpr std::array<QubitBasis, 3> kProcedureBases = {QubitBasis::kZ, QubitBasis::kX, QubitBasis::kY};

class Stopwatch {
   public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

   private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

TrialRecord base_record(const ExperimentConfig &cfg, const std::string &scenario, const std::string &method,
                        int uid, int rep, uint64_t shots) {
    TrialRecord r;
    r.experiment = experiment_kind_name(cfg.kind);
    r.scenario = scenario;
    r.method = method;
    r.d = cfg.d;
    r.unitary_id = uid;
    r.repetition = rep;
    r.shots = shots;
    r.seed = derive_seed(cfg.seed, {hash_label(r.experiment), static_cast<uint64_t>(uid), static_cast<uint64_t>(rep),
                                    hash_label(method), shots});
    return r;
}

/// Runs `body` and turns a library error into an error row.
template <typename Body>
TrialRecord guarded(TrialRecord r, Body &&body) {
    Stopwatch clock;
    try {
        body(r);
    } catch (const Error &e) {
        r.agf.reset();
        r.err_amp.reset();
        r.err_phase.reset();
        r.one_minus_r0.reset();
        r.error_code = std::string(error_code_name(e.code()));
        r.error_message = e.what();
    }
    r.wall_time_s = clock.seconds();
    return r;
}

uint64_t unitary_seed(const ExperimentConfig &cfg, int uid) {
    return derive_seed(cfg.seed, {hash_label(experiment_kind_name(cfg.kind)), hash_label("unitary"),
                                  static_cast<uint64_t>(uid)});
}

std::vector<uint64_t> evaluation_points(const ExperimentConfig &cfg) {
    std::vector<uint64_t> points;
    if (cfg.exact) {
        points.push_back(0);
    }
    points.insert(points.end(), cfg.shots.begin(), cfg.shots.end());
    return points;
}

double clamp_unit(double v) {
    return std::clamp(v, 0.0, 1.0);
}

double circular_distance(double a, double b) {
    return std::abs(wrap_phase(a - b));
}

RVector control_probabilities(const UnitaryMatrix &u, MeasurementBasis basis) {
    EstimationOutput out = run_estimation(u, CVector::Unit(u.dim(), 0));
    return born_probabilities(out.control, basis);
}

struct QubitCase {
    UnitaryMatrix u = UnitaryMatrix::identity(2);
    NoiseParams noise;
    std::array<RVector, 3> probabilities;
    ChannelSampler sqpt_sampler;
};

QubitCase prepare_qubit_case(const ExperimentConfig &cfg, const std::string &scenario, int uid) {
    QubitCase c;
    c.u = haar_random_unitary(2, unitary_seed(cfg, uid));
    c.noise = noise_scenario(scenario);
    for (size_t b = 0; b < kProcedureBases.size(); ++b) {
        if (c.noise.is_noiseless()) {
            c.probabilities[b] = qubit_measurement_probabilities(c.u, kProcedureBases[b]);
            continue;
        }
        Circuit circuit = build_qubit_measurement_circuit(c.u, kProcedureBases[b]);
        DensityState start = DensityState::from_pure(PureState::basis(circuit.layout(), 0));
        DensityState out = apply_circuit_density(circuit, start, c.noise);
        c.probabilities[b] = noisy_measurement_probabilities(out, {1, 2}, c.noise);
    }
    c.sqpt_sampler = noisy_qubit_sampler(c.u, c.noise, c.noise.qubit_for_wire(0));
    return c;
}

void procedure_trial(const ExperimentConfig &cfg, const QubitCase &c, TrialRecord &r) {
    uint64_t per = cfg.accounting == ShotAccounting::kTotal ? std::max<uint64_t>(r.shots / 3, 1) : r.shots;
    bool mitigate = cfg.mitigation && c.noise.has_readout_error();
    std::vector<RMatrix> confusions = readout_confusions(c.noise, {1, 2});
    std::array<RVector, 3> p;
    for (size_t b = 0; b < kProcedureBases.size(); ++b) {
        MeasurementCounts counts = sample_counts(c.probabilities[b], per, derive_seed(r.seed, {b}));
        p[b] = mitigate ? mitigate_readout(counts, confusions) : counts.frequencies();
    }
    QubitCoefficients est = estimate_qubit_no_prior(p[0], p[1], p[2], derive_seed(r.seed, {3}));
    r.agf = clamp_unit(agf_between_unitaries(est.unitary(), c.u));
    r.one_minus_r0 = closeness_measure(c.u);
}

void sqpt_trial(const ExperimentConfig &cfg, const QubitCase &c, TrialRecord &r) {
    uint64_t per = cfg.accounting == ShotAccounting::kTotal ? r.shots / 12 : r.shots;
    CountsToProbabilities convert;
    if (cfg.mitigation && c.noise.has_readout_error()) {
        std::vector<RMatrix> confusions = readout_confusions(c.noise, {0});
        convert = [confusions](const MeasurementCounts &counts) { return mitigate_readout(counts, confusions); };
    }
    ProcessMatrix chi = sqpt_reconstruct(c.sqpt_sampler, per, r.seed, convert);
    r.agf = clamp_unit(average_gate_fidelity(chi, c.u));
    r.one_minus_r0 = closeness_measure(c.u);
}

}  // namespace

HamiltonianParams sample_close_identity_params(const ExperimentConfig &cfg, int unitary_id) {
    CounterRng rng(unitary_seed(cfg, unitary_id));
    double lo = std::log(cfg.lambda_min);
    double hi = std::log(cfg.lambda_max);
    double scale = std::exp(lo + (hi - lo) * rng.uniform01());
    std::vector<double> lambda(static_cast<size_t>(cfg.d * cfg.d - 1));
    for (double &v : lambda) {
        v = scale * rng.uniform01();
    }
    return HamiltonianParams(cfg.d, std::move(lambda));
}

std::vector<TrialRecord> run_qubit_comparison(const ExperimentConfig &cfg, int threads) {
    size_t ns = cfg.scenarios.size();
    auto nu = static_cast<size_t>(cfg.n_unitaries);
    auto nr = static_cast<size_t>(cfg.n_repetitions);
    std::vector<QubitCase> cases(ns * nu);
    parallel_for(cases.size(), threads, [&](size_t i) {
        cases[i] = prepare_qubit_case(cfg, cfg.scenarios[i / nu], static_cast<int>(i % nu));
    });

    size_t per_item = cfg.shots.size() * 2;
    std::vector<TrialRecord> records(ns * nu * nr * per_item);
    parallel_for(ns * nu * nr, threads, [&](size_t item) {
        size_t s = item / (nu * nr);
        size_t uid = (item / nr) % nu;
        size_t rep = item % nr;
        const QubitCase &c = cases[s * nu + uid];
        size_t out = item * per_item;
        for (uint64_t shots : cfg.shots) {
            auto make = [&](const char *method) {
                return base_record(cfg, cfg.scenarios[s], method, static_cast<int>(uid), static_cast<int>(rep), shots);
            };
            records[out++] = guarded(make("procedure"), [&](TrialRecord &r) { procedure_trial(cfg, c, r); });
            records[out++] = guarded(make("sqpt"), [&](TrialRecord &r) { sqpt_trial(cfg, c, r); });
        }
    });
    sort_records(records);
    return records;
}

std::vector<TrialRecord> run_close_identity_study(const ExperimentConfig &cfg, int threads) {
    int d = cfg.d;
    std::vector<uint64_t> points = evaluation_points(cfg);
    auto nu = static_cast<size_t>(cfg.n_unitaries);
    auto nr = static_cast<size_t>(cfg.n_repetitions);
    std::vector<std::vector<TrialRecord>> per_unitary(nu);
    PartitionSets parts = partition_indices(d);
    parallel_for(nu, threads, [&](size_t uid) {
        UnitaryMatrix u = exp_hamiltonian(sample_close_identity_params(cfg, static_cast<int>(uid)));
        WHCoefficients truth = wh_expand(u.matrix()).with_fixed_phase();
        RVector exact = control_probabilities(u, MeasurementBasis::kTildeH);
        auto score = [&](const CloseIdEstimate &est, TrialRecord &r) {
            double amp = std::abs(est.r0 - truth.amplitude(WHIndex{0, 0}));
            for (const auto &[f, rf] : est.unpaired) {
                amp = std::max(amp, std::abs(rf - truth.amplitude(f)));
            }
            for (size_t i = 0; i < est.paired.size(); ++i) {
                amp = std::max(amp, std::abs(est.paired[i].r - truth.amplitude(parts.plus[i])));
                amp = std::max(amp, std::abs(est.paired[i].r - truth.amplitude(parts.minus[i])));
            }
            r.err_amp = amp;
            if (!est.paired.empty()) {
                std::vector<double> chosen = select_phase_candidate(est, truth);
                double phase = 0.0;
                for (size_t i = 0; i < est.paired.size(); ++i) {
                    if (!est.paired[i].phase_undefined) {
                        phase = std::max(phase, circular_distance(chosen[i], truth.phase(parts.plus[i])));
                    }
                }
                r.err_phase = phase;
            }
            r.one_minus_r0 = 1.0 - truth.amplitude(WHIndex{0, 0});
        };
        for (size_t rep = 0; rep < nr; ++rep) {
            for (uint64_t shots : points) {
                if (shots == 0 && rep > 0) {
                    continue;
                }
                TrialRecord base = base_record(cfg, cfg.scenarios[0], "tilde-h", static_cast<int>(uid),
                                               static_cast<int>(rep), shots);
                per_unitary[uid].push_back(guarded(base, [&](TrialRecord &r) {
                    if (shots == 0) {
                        score(estimate_close_identity(exact, d), r);
                    } else {
                        MeasurementCounts counts = sample_counts(exact, shots, r.seed, MeasurementBasis::kTildeH);
                        score(estimate_close_identity(counts, d), r);
                    }
                }));
            }
        }
    });
    std::vector<TrialRecord> records;
    for (auto &v : per_unitary) {
        records.insert(records.end(), v.begin(), v.end());
    }
    sort_records(records);
    return records;
}

std::vector<TrialRecord> run_gm_accuracy_study(const ExperimentConfig &cfg, int threads) {
    int d = cfg.d;
    std::vector<uint64_t> points = evaluation_points(cfg);
    auto nu = static_cast<size_t>(cfg.n_unitaries);
    auto nr = static_cast<size_t>(cfg.n_repetitions);
    std::vector<std::vector<TrialRecord>> per_unitary(nu);
    parallel_for(nu, threads, [&](size_t uid) {
        HamiltonianParams truth = sample_close_identity_params(cfg, static_cast<int>(uid));
        UnitaryMatrix u = exp_hamiltonian(truth);
        RVector exact = control_probabilities(u, MeasurementBasis::kGellMann);
        auto score = [&](const HamiltonianParams &est, TrialRecord &r) {
            double total = 0.0;
            for (size_t j = 0; j < truth.lambda.size(); ++j) {
                double diff = std::abs(est.lambda[j] - truth.lambda[j]);
                total += truth.lambda[j] > 0.0 ? diff / truth.lambda[j] : diff;
            }
            r.err_amp = total / static_cast<double>(truth.lambda.size());
            r.one_minus_r0 = closeness_measure(u);
        };
        for (size_t rep = 0; rep < nr; ++rep) {
            for (uint64_t shots : points) {
                if (shots == 0 && rep > 0) {
                    continue;
                }
                TrialRecord base = base_record(cfg, cfg.scenarios[0], "gm-first-order", static_cast<int>(uid),
                                               static_cast<int>(rep), shots);
                per_unitary[uid].push_back(guarded(base, [&](TrialRecord &r) {
                    if (shots == 0) {
                        score(gm_first_order_estimate(exact, d), r);
                    } else {
                        MeasurementCounts counts = sample_counts(exact, shots, r.seed, MeasurementBasis::kGellMann);
                        score(gm_first_order_estimate(counts, d), r);
                    }
                }));
            }
        }
    });
    std::vector<TrialRecord> records;
    for (auto &v : per_unitary) {
        records.insert(records.end(), v.begin(), v.end());
    }
    sort_records(records);
    return records;
}

std::vector<TrialRecord> run_fisher_distance_study(const ExperimentConfig &cfg, int threads) {
    int d = cfg.d;
    auto nu = static_cast<size_t>(cfg.n_unitaries);
    std::vector<TrialRecord> records(2 * nu);
    PureState probe = probe_state(CVector::Unit(d, 0), d);
    std::vector<std::string> labels = lambda_labels(d);
    parallel_for(nu, threads, [&](size_t uid) {
        HamiltonianParams params = sample_close_identity_params(cfg, static_cast<int>(uid));
        RVector at = Eigen::Map<const RVector>(params.lambda.data(), static_cast<Eigen::Index>(params.lambda.size()));
        double one_minus_r0 = closeness_measure(exp_hamiltonian(params));
        std::optional<FisherMatrix> qfi;
        std::optional<Error> qfi_error;
        try {
            qfi = qfi_numeric(gell_mann_unitary_model(d), at, probe, labels);
        } catch (const Error &e) {
            qfi_error = e;
        }
        const std::array<std::pair<const char *, MeasurementBasis>, 2> methods = {
            std::pair{"cfi_wh", MeasurementBasis::kComputational}, std::pair{"cfi_gm", MeasurementBasis::kGellMann}};
        for (size_t m = 0; m < methods.size(); ++m) {
            TrialRecord base = base_record(cfg, cfg.scenarios[0], methods[m].first, static_cast<int>(uid), 0, 0);
            records[2 * uid + m] = guarded(base, [&](TrialRecord &r) {
                if (qfi_error) {
                    throw *qfi_error;
                }
                FisherMatrix cfi = cfi_numeric(gell_mann_probability_model(d, methods[m].second), at, labels);
                r.err_amp = fisher_trace_distance(cfi, *qfi, cfg.halved_trace_distance);
                r.one_minus_r0 = one_minus_r0;
            });
        }
    });
    sort_records(records);
    return records;
}

std::vector<TrialRecord> run_experiment(const ExperimentConfig &cfg, int threads) {
    cfg.validate();
    switch (cfg.kind) {
        case ExperimentKind::kQubitComparison:
            return run_qubit_comparison(cfg, threads);
        case ExperimentKind::kCloseIdentityStudy:
            return run_close_identity_study(cfg, threads);
        case ExperimentKind::kGmAccuracyStudy:
            return run_gm_accuracy_study(cfg, threads);
        case ExperimentKind::kFisherDistanceStudy:
            return run_fisher_distance_study(cfg, threads);
    }
    throw Error(ErrorCode::kConfigInvalid, "unhandled experiment kind");
}

}  // namespace qudest
