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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qudest {

enum class ExperimentKind { kQubitComparison, kCloseIdentityStudy, kGmAccuracyStudy, kFisherDistanceStudy };

std::string experiment_kind_name(ExperimentKind kind);
/// Throws config-invalid for an unknown name.
ExperimentKind parse_experiment_kind(const std::string &name);

enum class OutputFormat { kCsv, kJson };

/// How the configured shot count is split over circuits. kTotal divides it
/// evenly over the 3 procedure circuits or the 12 tomography settings; kPerCircuit
/// gives every circuit the full count.
enum class ShotAccounting { kTotal, kPerCircuit };

struct ExperimentConfig {
    static constexpr int kSchemaVersion = 1;

    ExperimentKind kind = ExperimentKind::kQubitComparison;
    int d = 2;
    int n_unitaries = 20;
    int n_repetitions = 50;
    std::vector<uint64_t> shots = {128, 256, 512, 1024, 2048, 4096, 16384};
    std::vector<std::string> scenarios = {"noiseless"};
    bool mitigation = true;
    uint64_t seed = 20240601;
    std::string output = "results/run";
    OutputFormat format = OutputFormat::kCsv;
    ShotAccounting accounting = ShotAccounting::kTotal;
    /// Scale range for close-to-identity Hamiltonians: a scale s is drawn
    /// log-uniformly from [lambda_min, lambda_max], then each λ_j ~ U[0, s].
    double lambda_min = 1e-3;
    double lambda_max = 0.1;
    /// Adds a shots = 0 row evaluated on exact probabilities.
    bool exact = false;
    /// Fisher trace distance halved (true) or the full trace norm.
    bool halved_trace_distance = true;

    /// Throws config-invalid when an invariant is broken.
    void validate() const;

    /// Parses a JSON document; unknown keys and a wrong schema_version are rejected.
    static ExperimentConfig from_json_text(const std::string &text);
    static ExperimentConfig from_file(const std::string &path);
    std::string to_json_text() const;
};

}  // namespace qudest
