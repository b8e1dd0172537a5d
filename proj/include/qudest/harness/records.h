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
#include <optional>
#include <string>
#include <vector>

#include "qudest/harness/config.h"

namespace qudest {

struct TrialRecord {
    std::string experiment;
    std::string scenario;
    std::string method;
    int d = 2;
    int unitary_id = 0;
    int repetition = 0;
    uint64_t shots = 0;
    std::optional<double> agf;
    std::optional<double> err_amp;
    std::optional<double> err_phase;
    std::optional<double> one_minus_r0;
    uint64_t seed = 0;
    /// Not written to the trial files, so output bytes stay reproducible.
    double wall_time_s = 0.0;
    /// Set when the trial aborted; the numeric fields are then empty.
    std::optional<std::string> error_code;
    std::optional<std::string> error_message;

    /// agf when present, otherwise err_amp.
    std::optional<double> summary_value() const;
};

/// Orders by (unitary_id, repetition, method, shots, scenario).
void sort_records(std::vector<TrialRecord> &records);

struct SummaryRow {
    uint64_t shots = 0;
    std::string method;
    std::string scenario;
    double mean = 0.0;
    double median = 0.0;
    /// Sample standard deviation (n − 1 denominator); 0 for n = 1.
    double std_dev = 0.0;
    double q25 = 0.0;
    double q75 = 0.0;
    size_t n = 0;
};

/// Linear-interpolation quantile of an ascending sample.
double quantile_sorted(const std::vector<double> &sorted, double q);

/// One row per (shots, method, scenario) over records carrying a summary value,
/// sorted by (scenario, method, shots).
std::vector<SummaryRow> summarize(const std::vector<TrialRecord> &records);

inline const std::vector<std::string> kTrialColumns = {
    "experiment", "scenario", "method", "d", "unitary_id", "repetition",
    "shots", "agf", "err_amp", "err_phase", "one_minus_r0", "seed"};
inline const std::vector<std::string> kSummaryColumns = {"shots", "method", "scenario", "mean",
                                                         "median", "std", "q25", "q75", "n"};

std::string trials_csv(const std::vector<TrialRecord> &records);
std::string summary_csv(const std::vector<SummaryRow> &rows);
std::string errors_csv(const std::vector<TrialRecord> &records);
std::string trials_json(const std::vector<TrialRecord> &records);
std::string summary_json(const std::vector<SummaryRow> &rows);

/// Parses a trial CSV written by trials_csv. Throws config-invalid on a wrong header.
std::vector<TrialRecord> parse_trials_csv(const std::string &text);
std::vector<TrialRecord> read_trials_csv(const std::string &path);

/// Writes <stem>.trials.{csv,json}, <stem>.summary.{csv,json}, <stem>.errors.csv
/// and one <stem>.plot.<method>.<scenario>.csv per series. Returns the written
/// paths. Throws io-error if a file cannot be written.
std::vector<std::string> emit_results(const std::vector<TrialRecord> &records, const std::string &stem,
                                      OutputFormat format);

}  // namespace qudest
