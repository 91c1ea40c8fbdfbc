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
#include <span>
#include <string>
#include <vector>

#include "drsim/bia.hpp"
#include "drsim/engine.hpp"
#include "drsim/scenario.hpp"

namespace drsim {

enum class TableFormat { Text, Csv };

/// Rows by section; cells are per system, empty when not applicable.
struct ReportTable {
    struct Row {
        std::string label;
        std::vector<std::string> cells;
    };
    struct Section {
        std::string title;
        std::vector<Row> rows;
    };
    std::vector<std::string> columns;
    std::vector<Section> sections;

    std::string render(TableFormat format) const;
};

/// The value a converter reports: its last non-zero entry, or zero.
double reported_value(const RunResult& run, const std::string& name);

std::string render_trajectories(const RunResult& run);
std::string render_simulation(const SystemEvaluation& e);
std::string render_projection(const SystemEvaluation& e);
std::string render_cost(const SystemEvaluation& e);
std::string render_reliability(const SystemEvaluation& e);
std::string render_compliance(const ComplianceReport& report);

/// Side-by-side comparison of backup transfer, recovery rates, projected
/// times, monthly cost, reliability and compliance. Throws ConfigError
/// when the systems were projected on different test data volumes.
ReportTable comparison_table(std::span<const SystemEvaluation> systems);
std::string render_comparison(std::span<const SystemEvaluation> systems, TableFormat format = TableFormat::Text);

/// SVG line chart with one polyline per named component.
std::string render_svg(const RunResult& run, std::span<const std::string> components);
void emit_plot(const RunResult& run, std::span<const std::string> components, const std::filesystem::path& path);

} // namespace drsim
