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

#include <span>
#include <string>
#include <vector>

namespace drsim {

inline constexpr double kSecondsPerHour = 3600.0;
inline constexpr double kSecondsPerMinute = 60.0;
inline constexpr double kMbPerGb = 1000.0;  // decimal gigabytes

inline double mb_to_gb(double mb) { return mb / kMbPerGb; }
inline double seconds_to_hours(double s) { return s / kSecondsPerHour; }

/// One measured backup job. Durations are always held in seconds.
struct JobSample {
    int day = 1;
    double data_mb = 0.0;
    double duration_s = 0.0;

    friend bool operator==(const JobSample&, const JobSample&) = default;
};

enum class SourceTier { Local, Archive, Vault };

std::string to_string(SourceTier tier);
SourceTier source_tier_from_string(const std::string& text);

/// One measured restore from a storage tier.
struct RestoreSample {
    SourceTier source_tier = SourceTier::Local;
    double data_mb = 0.0;
    double duration_s = 0.0;

    friend bool operator==(const RestoreSample&, const RestoreSample&) = default;
};

struct ThroughputSummary {
    std::vector<double> per_sample;  // MB/s
    double mean_arithmetic = 0.0;    // mean of per_sample
    double mean_aggregate = 0.0;     // total data / total time
};

/// Validates JobSample invariants for a whole log: positive durations,
/// non-negative data, 1-based strictly increasing days. Throws DomainError.
void validate_job_log(std::span<const JobSample> samples);
void validate(const RestoreSample& sample);

double throughput(double data_mb, double duration_s);
ThroughputSummary summarize_throughput(std::span<const JobSample> samples);
double restore_time_per_mb(const RestoreSample& sample);

/// Data restored per second. The reference cloud "recovery time per MB"
/// figure is this quantity.
double recovery_throughput(const RestoreSample& sample);

enum class RateKind {
    Throughput,  // MB/s; time = data / rate
    TimePerMb,   // s/MB; time = data * rate
};

enum class Operation { Backup, Restore };

/// An averaged rate used as the basis of a projection.
struct Rate {
    std::string label;
    Operation operation = Operation::Backup;
    RateKind kind = RateKind::Throughput;
    double value = 0.0;
};

struct ProjectedTime {
    Rate basis;
    double seconds = 0.0;

    double hours() const { return seconds_to_hours(seconds); }
};

/// Times needed to move a fixed amount of test data at averaged rates.
struct Projection {
    double test_data_mb = 0.0;
    std::vector<ProjectedTime> times;  // in the order the rates were supplied

    std::vector<ProjectedTime> backup_times() const;
    std::vector<ProjectedTime> restore_times() const;
    /// Throws ConfigError when no time carries `label`.
    const ProjectedTime& find(const std::string& label) const;
};

double time_for(double data_mb, const Rate& rate);
Projection project(double test_data_mb, std::span<const Rate> rates);

} // namespace drsim
