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

#include "qudest/harness/records.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "qudest/core/error.h"

namespace qudest {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt(const std::optional<double> &v) {
    return v ? fmt(*v) : std::string();
}

std::string quoted(const std::string &s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += "\"\"";
        } else if (c == '\n') {
            out += ' ';
        } else {
            out += c;
        }
    }
    return out + "\"";
}

std::string join(const std::vector<std::string> &cells) {
    std::string line;
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i > 0) {
            line += ',';
        }
        line += cells[i];
    }
    return line + "\n";
}

std::vector<std::string> split(const std::string &line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) {
        cells.push_back(cell);
    }
    if (!line.empty() && line.back() == ',') {
        cells.emplace_back();
    }
    return cells;
}

nlohmann::json optional_json(const std::optional<double> &v) {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

void write_file(const std::string &path, const std::string &content) {
    std::filesystem::path p(path);
    if (p.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(p.parent_path(), ec);
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error(ErrorCode::kIoError, "cannot write '" + path + "'");
    }
    out << content;
    if (!out) {
        throw Error(ErrorCode::kIoError, "write to '" + path + "' failed");
    }
}

}  // namespace

std::optional<double> TrialRecord::summary_value() const {
    return agf ? agf : err_amp;
}

void sort_records(std::vector<TrialRecord> &records) {
    std::stable_sort(records.begin(), records.end(), [](const TrialRecord &a, const TrialRecord &b) {
        return std::tie(a.unitary_id, a.repetition, a.method, a.shots, a.scenario) <
               std::tie(b.unitary_id, b.repetition, b.method, b.shots, b.scenario);
    });
}

double quantile_sorted(const std::vector<double> &sorted, double q) {
    if (sorted.empty()) {
        throw Error(ErrorCode::kInsufficientData, "quantile of an empty sample");
    }
    double h = q * static_cast<double>(sorted.size() - 1);
    auto lo = static_cast<size_t>(std::floor(h));
    size_t hi = std::min(lo + 1, sorted.size() - 1);
    return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

std::vector<SummaryRow> summarize(const std::vector<TrialRecord> &records) {
    std::map<std::tuple<std::string, std::string, uint64_t>, std::vector<double>> groups;
    for (const TrialRecord &r : records) {
        if (auto v = r.summary_value()) {
            groups[{r.scenario, r.method, r.shots}].push_back(*v);
        }
    }
    std::vector<SummaryRow> rows;
    for (auto &[key, values] : groups) {
        std::sort(values.begin(), values.end());
        SummaryRow row;
        std::tie(row.scenario, row.method, row.shots) = key;
        row.n = values.size();
        double sum = 0.0;
        for (double v : values) {
            sum += v;
        }
        row.mean = sum / static_cast<double>(row.n);
        double ss = 0.0;
        for (double v : values) {
            ss += (v - row.mean) * (v - row.mean);
        }
        row.std_dev = row.n > 1 ? std::sqrt(ss / static_cast<double>(row.n - 1)) : 0.0;
        row.median = quantile_sorted(values, 0.5);
        row.q25 = quantile_sorted(values, 0.25);
        row.q75 = quantile_sorted(values, 0.75);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string trials_csv(const std::vector<TrialRecord> &records) {
    std::string out = join(kTrialColumns);
    for (const TrialRecord &r : records) {
        out += join({r.experiment, r.scenario, r.method, std::to_string(r.d), std::to_string(r.unitary_id),
                     std::to_string(r.repetition), std::to_string(r.shots), fmt(r.agf), fmt(r.err_amp),
                     fmt(r.err_phase), fmt(r.one_minus_r0), std::to_string(r.seed)});
    }
    return out;
}

std::string summary_csv(const std::vector<SummaryRow> &rows) {
    std::string out = join(kSummaryColumns);
    for (const SummaryRow &r : rows) {
        out += join({std::to_string(r.shots), r.method, r.scenario, fmt(r.mean), fmt(r.median), fmt(r.std_dev),
                     fmt(r.q25), fmt(r.q75), std::to_string(r.n)});
    }
    return out;
}

std::string errors_csv(const std::vector<TrialRecord> &records) {
    std::string out = join({"experiment", "scenario", "method", "unitary_id", "repetition", "shots", "error", "message"});
    for (const TrialRecord &r : records) {
        if (!r.error_code) {
            continue;
        }
        out += join({r.experiment, r.scenario, r.method, std::to_string(r.unitary_id), std::to_string(r.repetition),
                     std::to_string(r.shots), *r.error_code, quoted(r.error_message.value_or(""))});
    }
    return out;
}

std::string trials_json(const std::vector<TrialRecord> &records) {
    nlohmann::json arr = nlohmann::json::array();
    for (const TrialRecord &r : records) {
        arr.push_back({{"experiment", r.experiment},
                       {"scenario", r.scenario},
                       {"method", r.method},
                       {"d", r.d},
                       {"unitary_id", r.unitary_id},
                       {"repetition", r.repetition},
                       {"shots", r.shots},
                       {"agf", optional_json(r.agf)},
                       {"err_amp", optional_json(r.err_amp)},
                       {"err_phase", optional_json(r.err_phase)},
                       {"one_minus_r0", optional_json(r.one_minus_r0)},
                       {"seed", r.seed}});
    }
    return arr.dump(1) + "\n";
}

std::string summary_json(const std::vector<SummaryRow> &rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const SummaryRow &r : rows) {
        arr.push_back({{"shots", r.shots},
                       {"method", r.method},
                       {"scenario", r.scenario},
                       {"mean", r.mean},
                       {"median", r.median},
                       {"std", r.std_dev},
                       {"q25", r.q25},
                       {"q75", r.q75},
                       {"n", r.n}});
    }
    return arr.dump(1) + "\n";
}

std::vector<TrialRecord> parse_trials_csv(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || split(line) != kTrialColumns) {
        throw Error(ErrorCode::kConfigInvalid, "trial file header does not match the trial column contract");
    }
    auto opt = [](const std::string &s) -> std::optional<double> {
        if (s.empty()) {
            return std::nullopt;
        }
        return std::stod(s);
    };
    std::vector<TrialRecord> records;
    size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> c = split(line);
        if (c.size() != kTrialColumns.size()) {
            throw Error(ErrorCode::kConfigInvalid, "trial file line " + std::to_string(line_no) + " has " +
                                                       std::to_string(c.size()) + " cells");
        }
        try {
            TrialRecord r;
            r.experiment = c[0];
            r.scenario = c[1];
            r.method = c[2];
            r.d = std::stoi(c[3]);
            r.unitary_id = std::stoi(c[4]);
            r.repetition = std::stoi(c[5]);
            r.shots = std::stoull(c[6]);
            r.agf = opt(c[7]);
            r.err_amp = opt(c[8]);
            r.err_phase = opt(c[9]);
            r.one_minus_r0 = opt(c[10]);
            r.seed = std::stoull(c[11]);
            records.push_back(std::move(r));
        } catch (const std::logic_error &) {
            throw Error(ErrorCode::kConfigInvalid, "trial file line " + std::to_string(line_no) + " is malformed");
        }
    }
    return records;
}

std::vector<TrialRecord> read_trials_csv(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::kIoError, "cannot read '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_trials_csv(buf.str());
}

std::vector<std::string> emit_results(const std::vector<TrialRecord> &records, const std::string &stem,
                                      OutputFormat format) {
    std::vector<std::string> written;
    std::vector<SummaryRow> rows = summarize(records);
    auto emit = [&](const std::string &path, const std::string &content) {
        write_file(path, content);
        written.push_back(path);
    };
    if (format == OutputFormat::kCsv) {
        emit(stem + ".trials.csv", trials_csv(records));
        emit(stem + ".summary.csv", summary_csv(rows));
    } else {
        emit(stem + ".trials.json", trials_json(records));
        emit(stem + ".summary.json", summary_json(rows));
    }
    emit(stem + ".errors.csv", errors_csv(records));

    // Shot sweeps plot (shots, median, q25, q75); single-shot-count studies plot
    // the scatter (1 − r₀, value) with a degenerate band.
    std::map<std::pair<std::string, std::string>, std::string> plots;
    std::set<uint64_t> shot_points;
    for (const SummaryRow &r : rows) {
        shot_points.insert(r.shots);
    }
    const std::string header = "x,y,y_lo,y_hi\n";
    if (shot_points.size() > 1) {
        for (const SummaryRow &r : rows) {
            std::string &body = plots[{r.method, r.scenario}];
            if (body.empty()) {
                body = header;
            }
            body += join({std::to_string(r.shots), fmt(r.median), fmt(r.q25), fmt(r.q75)});
        }
    } else {
        for (const TrialRecord &r : records) {
            auto v = r.summary_value();
            if (!v || !r.one_minus_r0) {
                continue;
            }
            std::string &body = plots[{r.method, r.scenario}];
            if (body.empty()) {
                body = header;
            }
            body += join({fmt(*r.one_minus_r0), fmt(*v), fmt(*v), fmt(*v)});
        }
    }
    for (const auto &[key, body] : plots) {
        emit(stem + ".plot." + key.first + "." + key.second + ".csv", body);
    }
    return written;
}

}  // namespace qudest
