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

#include "qudest/harness/config.h"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "qudest/core/error.h"
#include "qudest/noise/channels.h"

namespace qudest {

namespace {

using nlohmann::json;

const std::vector<std::pair<ExperimentKind, std::string>> &kind_names() {
    static const std::vector<std::pair<ExperimentKind, std::string>> names = {
        {ExperimentKind::kQubitComparison, "qubit-comparison"},
        {ExperimentKind::kCloseIdentityStudy, "close-identity-study"},
        {ExperimentKind::kGmAccuracyStudy, "gm-accuracy-study"},
        {ExperimentKind::kFisherDistanceStudy, "fisher-distance-study"},
    };
    return names;
}

[[noreturn]] void invalid(const std::string &msg) {
    throw Error(ErrorCode::kConfigInvalid, msg);
}

template <typename T>
T get(const json &doc, const char *key) {
    try {
        return doc.at(key).get<T>();
    } catch (const json::exception &e) {
        invalid(std::string("field '") + key + "': " + e.what());
    }
}

}  // namespace

std::string experiment_kind_name(ExperimentKind kind) {
    for (const auto &[k, name] : kind_names()) {
        if (k == kind) {
            return name;
        }
    }
    return "unknown";
}

ExperimentKind parse_experiment_kind(const std::string &name) {
    for (const auto &[k, n] : kind_names()) {
        if (n == name) {
            return k;
        }
    }
    invalid("unknown experiment kind '" + name + "'");
}

void ExperimentConfig::validate() const {
    auto dim_range = [&](int lo, int hi) {
        if (d < lo || d > hi) {
            invalid(experiment_kind_name(kind) + " needs d in [" + std::to_string(lo) + ", " + std::to_string(hi) +
                    "], got " + std::to_string(d));
        }
    };
    switch (kind) {
        case ExperimentKind::kQubitComparison:
            dim_range(2, 2);
            break;
        case ExperimentKind::kCloseIdentityStudy:
            dim_range(2, 8);
            break;
        case ExperimentKind::kGmAccuracyStudy:
        case ExperimentKind::kFisherDistanceStudy:
            dim_range(2, 5);
            break;
    }
    if (n_unitaries <= 0 || n_repetitions <= 0) {
        invalid("n_unitaries and n_repetitions must be positive");
    }
    for (size_t i = 0; i < shots.size(); ++i) {
        if (shots[i] == 0) {
            invalid("shot counts must be positive");
        }
        if (i > 0 && shots[i] <= shots[i - 1]) {
            invalid("shot grid must be strictly increasing");
        }
    }
    if (kind != ExperimentKind::kFisherDistanceStudy && shots.empty() && !exact) {
        invalid("shot grid is empty and exact evaluation is off");
    }
    if (kind == ExperimentKind::kQubitComparison && exact) {
        invalid("exact evaluation is not available for qubit-comparison");
    }
    if (kind == ExperimentKind::kQubitComparison) {
        uint64_t per = accounting == ShotAccounting::kTotal ? 12 : 1;
        for (uint64_t n : shots) {
            if (n < per) {
                invalid("shot count " + std::to_string(n) + " is below one shot per tomography setting");
            }
        }
    }
    if (scenarios.empty()) {
        invalid("at least one noise scenario is required");
    }
    std::set<std::string> seen;
    for (const std::string &s : scenarios) {
        try {
            noise_scenario(s);
        } catch (const Error &e) {
            invalid(e.what());
        }
        if (!seen.insert(s).second) {
            invalid("scenario '" + s + "' listed twice");
        }
        if (s != "noiseless" && kind != ExperimentKind::kQubitComparison) {
            invalid("noise scenarios other than noiseless apply to qubit-comparison only");
        }
    }
    if (!(lambda_min > 0.0) || !(lambda_max >= lambda_min) || lambda_max > 1.0) {
        invalid("need 0 < lambda_min <= lambda_max <= 1");
    }
    if (output.empty()) {
        invalid("output path is empty");
    }
}

ExperimentConfig ExperimentConfig::from_json_text(const std::string &text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        invalid(std::string("config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        invalid("config must be a JSON object");
    }
    static const std::set<std::string> known = {
        "schema_version", "experiment", "d", "n_unitaries", "n_repetitions", "shots", "scenario",
        "scenarios", "mitigation", "seed", "output", "format", "shot_accounting", "lambda_min",
        "lambda_max", "exact", "trace_distance"};
    for (const auto &item : doc.items()) {
        if (known.count(item.key()) == 0) {
            invalid("unknown config field '" + item.key() + "'");
        }
    }
    if (!doc.contains("schema_version") || get<int>(doc, "schema_version") != kSchemaVersion) {
        invalid("schema_version must be " + std::to_string(kSchemaVersion));
    }
    if (!doc.contains("experiment")) {
        invalid("missing field 'experiment'");
    }
    ExperimentConfig cfg;
    cfg.kind = parse_experiment_kind(get<std::string>(doc, "experiment"));
    if (doc.contains("d")) cfg.d = get<int>(doc, "d");
    if (doc.contains("n_unitaries")) cfg.n_unitaries = get<int>(doc, "n_unitaries");
    if (doc.contains("n_repetitions")) cfg.n_repetitions = get<int>(doc, "n_repetitions");
    if (doc.contains("shots")) cfg.shots = get<std::vector<uint64_t>>(doc, "shots");
    if (doc.contains("scenario") && doc.contains("scenarios")) {
        invalid("give either 'scenario' or 'scenarios', not both");
    }
    if (doc.contains("scenario")) cfg.scenarios = {get<std::string>(doc, "scenario")};
    if (doc.contains("scenarios")) cfg.scenarios = get<std::vector<std::string>>(doc, "scenarios");
    if (doc.contains("mitigation")) cfg.mitigation = get<bool>(doc, "mitigation");
    if (doc.contains("seed")) cfg.seed = get<uint64_t>(doc, "seed");
    if (doc.contains("output")) cfg.output = get<std::string>(doc, "output");
    if (doc.contains("format")) {
        std::string f = get<std::string>(doc, "format");
        if (f == "csv") {
            cfg.format = OutputFormat::kCsv;
        } else if (f == "json") {
            cfg.format = OutputFormat::kJson;
        } else {
            invalid("format must be csv or json");
        }
    }
    if (doc.contains("shot_accounting")) {
        std::string a = get<std::string>(doc, "shot_accounting");
        if (a == "total") {
            cfg.accounting = ShotAccounting::kTotal;
        } else if (a == "per-circuit") {
            cfg.accounting = ShotAccounting::kPerCircuit;
        } else {
            invalid("shot_accounting must be total or per-circuit");
        }
    }
    if (doc.contains("lambda_min")) cfg.lambda_min = get<double>(doc, "lambda_min");
    if (doc.contains("lambda_max")) cfg.lambda_max = get<double>(doc, "lambda_max");
    if (doc.contains("exact")) cfg.exact = get<bool>(doc, "exact");
    if (doc.contains("trace_distance")) {
        std::string t = get<std::string>(doc, "trace_distance");
        if (t == "half") {
            cfg.halved_trace_distance = true;
        } else if (t == "full") {
            cfg.halved_trace_distance = false;
        } else {
            invalid("trace_distance must be half or full");
        }
    }
    cfg.validate();
    return cfg;
}

ExperimentConfig ExperimentConfig::from_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::kIoError, "cannot read config '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return from_json_text(buf.str());
}

std::string ExperimentConfig::to_json_text() const {
    json doc = {
        {"schema_version", kSchemaVersion},
        {"experiment", experiment_kind_name(kind)},
        {"d", d},
        {"n_unitaries", n_unitaries},
        {"n_repetitions", n_repetitions},
        {"shots", shots},
        {"scenarios", scenarios},
        {"mitigation", mitigation},
        {"seed", seed},
        {"output", output},
        {"format", format == OutputFormat::kCsv ? "csv" : "json"},
        {"shot_accounting", accounting == ShotAccounting::kTotal ? "total" : "per-circuit"},
        {"lambda_min", lambda_min},
        {"lambda_max", lambda_max},
        {"exact", exact},
        {"trace_distance", halved_trace_distance ? "half" : "full"},
    };
    return doc.dump(2) + "\n";
}

}  // namespace qudest
