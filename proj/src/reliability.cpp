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

#include "drsim/reliability.hpp"

#include <cmath>

#include "drsim/errors.hpp"

namespace drsim {

double component_reliability(double mtbf_h, double mission_h) {
    if (!(mtbf_h > 0.0)) throw DomainError("component_reliability: MTBF must be > 0");
    if (!(mission_h >= 0.0)) throw DomainError("component_reliability: mission time must be >= 0");
    return std::exp(-mission_h / mtbf_h);
}

double sla_to_mtbf(double sla, double reference_period_h) {
    if (!(sla > 0.0 && sla < 1.0)) throw DomainError("sla_to_mtbf: SLA must lie in (0, 1)");
    if (!(reference_period_h > 0.0)) throw DomainError("sla_to_mtbf: reference period must be > 0");
    return reference_period_h / -std::log(sla);
}

double series_reliability(std::span<const double> values) {
    double product = 1.0;
    for (double v : values) {
        if (!(v >= 0.0 && v <= 1.0)) throw DomainError("series_reliability: value outside [0, 1]");
        product *= v;
    }
    return product;
}

void validate(const ReliabilityComponent& c) {
    if (c.mtbf_h.has_value() == c.sla.has_value())
        throw ConfigError("reliability component '" + c.name + "' needs exactly one of mtbf_h or sla");
    if (c.mtbf_h && !(*c.mtbf_h > 0.0)) throw ConfigError("component '" + c.name + "': mtbf_h must be > 0");
    if (c.sla) {
        // An SLA of exactly 1 means no failures; it maps to reliability 1.
        if (!(*c.sla > 0.0 && *c.sla <= 1.0)) throw ConfigError("component '" + c.name + "': sla must lie in (0, 1]");
        if (!(c.sla_reference_h > 0.0))
            throw ConfigError("component '" + c.name + "': sla_reference_h must be > 0");
    }
}

void validate(const SeriesSystem& system) {
    if (system.components.empty()) throw ConfigError("series system needs at least one component");
    if (!(system.mission_h >= 0.0)) throw ConfigError("mission_h must be >= 0");
    for (const auto& c : system.components) validate(c);
}

SystemReliability evaluate(const SeriesSystem& system) {
    validate(system);
    SystemReliability out;
    out.mission_h = system.mission_h;
    std::vector<double> values;
    for (const auto& c : system.components) {
        ComponentResult r;
        r.name = c.name;
        if (c.mtbf_h) {
            r.mtbf_h = *c.mtbf_h;
            r.reliability = component_reliability(r.mtbf_h, system.mission_h);
        } else {
            r.from_sla = true;
            if (*c.sla == 1.0) {
                r.mtbf_h = INFINITY;
                r.reliability = 1.0;
            } else {
                r.mtbf_h = sla_to_mtbf(*c.sla, c.sla_reference_h);
                r.reliability = component_reliability(r.mtbf_h, system.mission_h);
            }
        }
        values.push_back(r.reliability);
        out.components.push_back(std::move(r));
    }
    out.system = series_reliability(values);
    return out;
}

SeriesSystem default_three_component_system() {
    SeriesSystem s;
    s.mission_h = kReconciledMissionHours;
    s.components = {
        {"Cloud service", 61320.0, std::nullopt, kStatedAnalysisHours},
        {"DC", 61320.0, std::nullopt, kStatedAnalysisHours},
        {"ISP", 17520.0, std::nullopt, kStatedAnalysisHours},
    };
    return s;
}

} // namespace drsim
