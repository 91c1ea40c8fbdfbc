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
#include <string>
#include <vector>

#include "drsim/model_core.hpp"

namespace drsim {

/// Business Impact Analysis targets for one protection system.
struct BiaTargets {
    std::string agent;
    double backup_frequency_days = 1.0;
    int backup_retention_days = 0;
    std::string recovery_points_scheme;  // kept verbatim, e.g. "7+7+60"
    std::optional<int> cloud_tiering_threshold_days;
    double rpo_target_days = 0.0;
    double rto_target_h = 0.0;
    std::optional<double> wrt_h;
    std::optional<double> max_data_loss_mb;

    friend bool operator==(const BiaTargets&, const BiaTargets&) = default;
};

void validate(const BiaTargets& targets);

enum class Unit { Hours, Days, Megabytes };
std::string to_string(Unit unit);

struct Quantity {
    double value = 0.0;
    Unit unit = Unit::Hours;
};

enum class Relation { AtMost, AtLeast };
enum class Status { Pass, Fail, NotEvaluable };
std::string to_string(Status status);

struct ComplianceVerdict {
    std::string metric;
    std::optional<Quantity> measured;
    std::optional<Quantity> target;
    Relation relation = Relation::AtMost;
    Status status = Status::NotEvaluable;
};

struct ComplianceReport {
    std::string scenario;
    std::vector<ComplianceVerdict> verdicts;
    std::optional<double> mtd_hours;

    bool any_failed() const;
    std::size_t count(Status status) const;
};

/// Maximum tolerable downtime: RTO + WRT.
double mtd(double rto_h, double wrt_h);

/// Equality passes. Throws DomainError when the units differ.
ComplianceVerdict check(const std::string& metric, const Quantity& measured, const Quantity& target,
                        Relation relation);

/// What was measured or projected for a system. Any field may be empty.
struct Observations {
    std::vector<ProjectedTime> backup_times;
    std::vector<ProjectedTime> restore_times;
    std::optional<double> backup_interval_days;  // worst-case age of the newest copy
    std::optional<double> data_loss_mb;           // data written within one interval
};

Observations observations_from(const Projection& projection);

/// Verdicts, in order: one per restore time against the RTO (or a single
/// NotEvaluable "RTO"), achieved RPO, one per backup time against the
/// backup window (or a single NotEvaluable), and data loss when a
/// max_data_loss_mb target is set. MTD uses the slowest restore time.
ComplianceReport evaluate(const std::string& scenario, const Observations& observed, const BiaTargets& targets);

} // namespace drsim
