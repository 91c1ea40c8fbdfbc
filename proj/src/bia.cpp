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

#include "drsim/bia.hpp"

#include <algorithm>
#include <cmath>

#include "drsim/errors.hpp"

namespace drsim {

void validate(const BiaTargets& t) {
    auto positive = [](double v, const char* what) {
        if (!(v > 0.0) || !std::isfinite(v)) throw ConfigError(std::string("bia: ") + what + " must be > 0");
    };
    positive(t.backup_frequency_days, "backup_frequency_days");
    positive(static_cast<double>(t.backup_retention_days), "backup_retention_days");
    positive(t.rpo_target_days, "rpo_days");
    positive(t.rto_target_h, "rto_hours");
    if (t.cloud_tiering_threshold_days) positive(static_cast<double>(*t.cloud_tiering_threshold_days),
                                                 "cloud_tiering_threshold_days");
    if (t.wrt_h) positive(*t.wrt_h, "wrt_hours");
    if (t.max_data_loss_mb) positive(*t.max_data_loss_mb, "max_data_loss_mb");
}

std::string to_string(Unit unit) {
    switch (unit) {
    case Unit::Hours: return "h";
    case Unit::Days: return "days";
    case Unit::Megabytes: return "MB";
    }
    return "?";
}

std::string to_string(Status status) {
    switch (status) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::NotEvaluable: return "N/A";
    }
    return "?";
}

bool ComplianceReport::any_failed() const { return count(Status::Fail) > 0; }

std::size_t ComplianceReport::count(Status status) const {
    return static_cast<std::size_t>(std::count_if(verdicts.begin(), verdicts.end(),
                                                  [&](const ComplianceVerdict& v) { return v.status == status; }));
}

double mtd(double rto_h, double wrt_h) {
    if (!(rto_h >= 0.0) || !(wrt_h >= 0.0)) throw DomainError("mtd: RTO and WRT must be >= 0");
    return rto_h + wrt_h;
}

ComplianceVerdict check(const std::string& metric, const Quantity& measured, const Quantity& target,
                        Relation relation) {
    if (measured.unit != target.unit)
        throw DomainError("check '" + metric + "': measured in " + to_string(measured.unit) + " but target in " +
                          to_string(target.unit));
    const bool holds = relation == Relation::AtMost ? measured.value <= target.value : measured.value >= target.value;
    return {metric, measured, target, relation, holds ? Status::Pass : Status::Fail};
}

Observations observations_from(const Projection& projection) {
    Observations o;
    o.backup_times = projection.backup_times();
    o.restore_times = projection.restore_times();
    return o;
}

namespace {

ComplianceVerdict not_evaluable(std::string metric, std::optional<Quantity> target) {
    return {std::move(metric), std::nullopt, target, Relation::AtMost, Status::NotEvaluable};
}

} // namespace

ComplianceReport evaluate(const std::string& scenario, const Observations& observed, const BiaTargets& targets) {
    ComplianceReport report;
    report.scenario = scenario;
    auto& out = report.verdicts;

    const Quantity rto{targets.rto_target_h, Unit::Hours};
    if (observed.restore_times.empty()) {
        out.push_back(not_evaluable("RTO", rto));
    } else {
        for (const auto& t : observed.restore_times)
            out.push_back(check("RTO " + t.basis.label, {t.hours(), Unit::Hours}, rto, Relation::AtMost));
    }

    const Quantity rpo{targets.rpo_target_days, Unit::Days};
    if (observed.backup_interval_days)
        out.push_back(check("RPO", {*observed.backup_interval_days, Unit::Days}, rpo, Relation::AtMost));
    else
        out.push_back(not_evaluable("RPO", rpo));

    const Quantity window{targets.backup_frequency_days * 24.0, Unit::Hours};
    if (observed.backup_times.empty()) {
        out.push_back(not_evaluable("Backup window", window));
    } else {
        for (const auto& t : observed.backup_times)
            out.push_back(check("Backup window " + t.basis.label, {t.hours(), Unit::Hours}, window, Relation::AtMost));
    }

    if (targets.max_data_loss_mb) {
        const Quantity limit{*targets.max_data_loss_mb, Unit::Megabytes};
        if (observed.data_loss_mb)
            out.push_back(check("Data loss", {*observed.data_loss_mb, Unit::Megabytes}, limit, Relation::AtMost));
        else
            out.push_back(not_evaluable("Data loss", limit));
    }

    if (targets.wrt_h && !observed.restore_times.empty()) {
        const auto slowest = std::max_element(observed.restore_times.begin(), observed.restore_times.end(),
                                              [](const auto& a, const auto& b) { return a.seconds < b.seconds; });
        report.mtd_hours = mtd(slowest->hours(), *targets.wrt_h);
    }
    return report;
}

} // namespace drsim
