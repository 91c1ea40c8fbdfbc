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

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace drsim {

inline constexpr double kReconciledMissionHours = 372.0;
inline constexpr double kStatedAnalysisHours = 360.0;

/// Exponential (constant hazard) mission reliability exp(-t / MTBF).
double component_reliability(double mtbf_h, double mission_h);

/// MTBF such that component_reliability(mtbf, reference_period_h) == sla.
double sla_to_mtbf(double sla, double reference_period_h);

/// Product of independent component reliabilities.
double series_reliability(std::span<const double> values);

/// A component is parameterized either by MTBF or by an SLA availability
/// over a reference period; exactly one of the two must be set.
struct ReliabilityComponent {
    std::string name;
    std::optional<double> mtbf_h;
    std::optional<double> sla;
    double sla_reference_h = kStatedAnalysisHours;

    friend bool operator==(const ReliabilityComponent&, const ReliabilityComponent&) = default;
};

struct SeriesSystem {
    std::vector<ReliabilityComponent> components;
    double mission_h = kReconciledMissionHours;

    friend bool operator==(const SeriesSystem&, const SeriesSystem&) = default;
};

struct ComponentResult {
    std::string name;
    double mtbf_h = 0.0;
    bool from_sla = false;
    double reliability = 0.0;
};

struct SystemReliability {
    double mission_h = 0.0;
    std::vector<ComponentResult> components;
    double system = 1.0;
};

void validate(const ReliabilityComponent& component);
void validate(const SeriesSystem& system);
SystemReliability evaluate(const SeriesSystem& system);

/// DC (61320 h), ISP (17520 h) and cloud service (DC basis) at 372 h.
SeriesSystem default_three_component_system();

} // namespace drsim
