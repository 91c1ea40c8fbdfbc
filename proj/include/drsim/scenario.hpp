// Copyright 2026 The drsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "drsim/bia.hpp"
#include "drsim/cost.hpp"
#include "drsim/engine.hpp"
#include "drsim/model_core.hpp"
#include "drsim/reliability.hpp"

namespace drsim {

enum class SystemKind { Hybrid, CloudVault };
std::string to_string(SystemKind kind);

using Pricing = std::variant<ObjectStoreRates, VaultRates>;

/// One protection system to evaluate. File paths are kept as written;
/// relative paths resolve against the scenario file's directory.
struct Scenario {
    std::string name;
    SystemKind system_kind = SystemKind::Hybrid;
    std::vector<std::string> job_log_paths;
    std::vector<std::string> restore_sample_paths;
    std::optional<double> test_data_mb;
    std::map<std::string, double> supplied_averages;
    Pricing pricing;
    std::optional<double> frontend_gb;  // cloud only
    TransactionCounts transactions;     // hybrid only
    BiaTargets bia;
    SeriesSystem reliability;

    friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// JSON scenario text. Unknown keys, kind/pricing mismatches and invalid
/// values raise ConfigError; JSON syntax errors raise ParseError.
Scenario parse_scenario(std::string_view text);
/// Canonical JSON with every default spelled out.
std::string serialize_scenario(const Scenario& scenario);

/// A scenario with its job logs and restore samples read from disk.
struct LoadedScenario {
    Scenario scenario;
    std::filesystem::path source;
    std::vector<std::vector<JobSample>> job_logs;
    std::vector<RestoreSample> restores;
};

LoadedScenario load_scenario(const std::filesystem::path& path);
LoadedScenario load_scenario(std::string_view text, const std::filesystem::path& base_dir);

/// Everything the reports need for one system.
struct SystemEvaluation {
    std::string name;
    SystemKind kind = SystemKind::Hybrid;
    RunResult basic_run;
    std::optional<RunResult> extended_run;
    std::vector<Rate> rates;  // after supplied-average overrides
    std::vector<std::string> supplied;
    std::vector<ThroughputSummary> throughput;  // one per job log
    std::optional<Projection> projection;
    CostBreakdown basic_cost;
    std::optional<CostBreakdown> test_data_cost;
    Pricing pricing;
    SystemReliability reliability;
    ComplianceReport compliance;
};

Model build_basic_model(const LoadedScenario& loaded);
/// `test_data_mb` overrides the scenario's own value.
SystemEvaluation evaluate_scenario(const LoadedScenario& loaded, std::optional<double> test_data_mb = std::nullopt);

} // namespace drsim
