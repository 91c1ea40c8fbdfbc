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

#include "drsim/model_core.hpp"

#include <algorithm>
#include <cmath>

#include "drsim/errors.hpp"

namespace drsim {

std::string to_string(SourceTier tier) {
    switch (tier) {
    case SourceTier::Local: return "local";
    case SourceTier::Archive: return "archive";
    case SourceTier::Vault: return "vault";
    }
    return "unknown";
}

SourceTier source_tier_from_string(const std::string& text) {
    std::string lower;
    lower.reserve(text.size());
    std::transform(text.begin(), text.end(), std::back_inserter(lower),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "local") return SourceTier::Local;
    if (lower == "archive") return SourceTier::Archive;
    if (lower == "vault") return SourceTier::Vault;
    throw DomainError("unknown source tier '" + text + "'");
}

void validate_job_log(std::span<const JobSample> samples) {
    int previous_day = 0;
    for (const auto& s : samples) {
        if (s.day < 1) throw DomainError("job day must be >= 1, got " + std::to_string(s.day));
        if (s.day <= previous_day)
            throw DomainError("job days must be strictly increasing (day " + std::to_string(s.day) + ")");
        if (!(s.duration_s > 0.0)) throw DomainError("job duration must be > 0 (day " + std::to_string(s.day) + ")");
        if (!(s.data_mb >= 0.0)) throw DomainError("job data must be >= 0 (day " + std::to_string(s.day) + ")");
        previous_day = s.day;
    }
}

void validate(const RestoreSample& sample) {
    if (!(sample.data_mb > 0.0)) throw DomainError("restore data must be > 0");
    if (!(sample.duration_s > 0.0)) throw DomainError("restore duration must be > 0");
}

double throughput(double data_mb, double duration_s) {
    if (!(duration_s > 0.0)) throw DomainError("throughput: duration must be > 0");
    return data_mb / duration_s;
}

ThroughputSummary summarize_throughput(std::span<const JobSample> samples) {
    if (samples.empty()) throw DomainError("summarize_throughput: no samples");
    ThroughputSummary summary;
    summary.per_sample.reserve(samples.size());
    double total_data = 0.0;
    double total_time = 0.0;
    double sum = 0.0;
    for (const auto& s : samples) {
        const double rate = throughput(s.data_mb, s.duration_s);
        summary.per_sample.push_back(rate);
        sum += rate;
        total_data += s.data_mb;
        total_time += s.duration_s;
    }
    summary.mean_arithmetic = sum / static_cast<double>(samples.size());
    summary.mean_aggregate = total_data / total_time;

    // Rounding can push either mean a few ulps past the extremes.
    const auto [lo, hi] = std::minmax_element(summary.per_sample.begin(), summary.per_sample.end());
    summary.mean_arithmetic = std::clamp(summary.mean_arithmetic, *lo, *hi);
    summary.mean_aggregate = std::clamp(summary.mean_aggregate, *lo, *hi);
    return summary;
}

double restore_time_per_mb(const RestoreSample& sample) {
    if (!(sample.data_mb > 0.0)) throw DomainError("restore_time_per_mb: data must be > 0");
    return sample.duration_s / sample.data_mb;
}

double recovery_throughput(const RestoreSample& sample) {
    if (!(sample.duration_s > 0.0)) throw DomainError("recovery_throughput: duration must be > 0");
    return sample.data_mb / sample.duration_s;
}

std::vector<ProjectedTime> Projection::backup_times() const {
    std::vector<ProjectedTime> out;
    std::copy_if(times.begin(), times.end(), std::back_inserter(out),
                 [](const ProjectedTime& t) { return t.basis.operation == Operation::Backup; });
    return out;
}

std::vector<ProjectedTime> Projection::restore_times() const {
    std::vector<ProjectedTime> out;
    std::copy_if(times.begin(), times.end(), std::back_inserter(out),
                 [](const ProjectedTime& t) { return t.basis.operation == Operation::Restore; });
    return out;
}

const ProjectedTime& Projection::find(const std::string& label) const {
    for (const auto& t : times)
        if (t.basis.label == label) return t;
    throw ConfigError("projection has no time labelled '" + label + "'");
}

double time_for(double data_mb, const Rate& rate) {
    if (!(rate.value > 0.0) || !std::isfinite(rate.value))
        throw DomainError("rate '" + rate.label + "' must be a positive finite value");
    return rate.kind == RateKind::Throughput ? data_mb / rate.value : data_mb * rate.value;
}

Projection project(double test_data_mb, std::span<const Rate> rates) {
    if (!(test_data_mb > 0.0)) throw DomainError("project: test data must be > 0 MB");
    Projection p;
    p.test_data_mb = test_data_mb;
    p.times.reserve(rates.size());
    for (const auto& r : rates) p.times.push_back({r, time_for(test_data_mb, r)});
    return p;
}

} // namespace drsim
