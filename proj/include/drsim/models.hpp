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

#include <map>
#include <span>
#include <string>

#include "drsim/cost.hpp"
#include "drsim/engine.hpp"
#include "drsim/model_core.hpp"

namespace drsim {

// Component names shared by the builders, the CLI and the tests.
namespace names {
inline constexpr const char* kDailyBackup = "DailyBackup";
inline constexpr const char* kTieringMove = "TieringMove";
inline constexpr const char* kLocalStorage = "LocalStorage";
inline constexpr const char* kCloudTier = "CloudTier";
inline constexpr const char* kBackupTime = "BackupTime";
inline constexpr const char* kDailyThroughput = "DailyThroughput";
inline constexpr const char* kRestoreDataLocal = "RestoreDataLocal";
inline constexpr const char* kRestoreTimeLocal = "RestoreTimeLocal";
inline constexpr const char* kRestoreDataArchive = "RestoreDataArchive";
inline constexpr const char* kRestoreTimeArchive = "RestoreTimeArchive";
inline constexpr const char* kAvgDailyThroughput = "AvgDailyThroughput";
inline constexpr const char* kRestorePerMbLocal = "RestorePerMbLocal";
inline constexpr const char* kRestorePerMbArchive = "RestorePerMbArchive";
inline constexpr const char* kMonthlyServiceCost = "MonthlyServiceCost";

inline constexpr const char* kJob1Data = "Job1Data";
inline constexpr const char* kJob1Time = "Job1Time";
inline constexpr const char* kJob1Throughput = "Job1Throughput";
inline constexpr const char* kJob2Data = "Job2Data";
inline constexpr const char* kJob2Time = "Job2Time";
inline constexpr const char* kJob2Throughput = "Job2Throughput";
inline constexpr const char* kDailyTransfer = "DailyTransfer";
inline constexpr const char* kRecoveryVault = "RecoveryVault";
inline constexpr const char* kRecoveryData = "RecoveryData";
inline constexpr const char* kRecoveryTime = "RecoveryTime";
inline constexpr const char* kAvgJob1Throughput = "AvgJob1Throughput";
inline constexpr const char* kAvgJob2Throughput = "AvgJob2Throughput";
inline constexpr const char* kRecoveryThroughput = "RecoveryThroughput";

inline constexpr const char* kTestData = "TestData";
inline constexpr const char* kTestDataCost = "TotalServiceCostTestData";
} // namespace names

// Override keys for supplied averages.
namespace averages {
inline constexpr const char* kBackupThroughput = "backup_throughput";
inline constexpr const char* kRestorePerMbLocal = "restore_per_mb_local";
inline constexpr const char* kRestorePerMbArchive = "restore_per_mb_archive";
inline constexpr const char* kJob1Throughput = "job1_throughput";
inline constexpr const char* kJob2Throughput = "job2_throughput";
inline constexpr const char* kRecoveryThroughput = "recovery_throughput";
} // namespace averages

inline constexpr int kHybridBackupPeriods = 14;
inline constexpr int kCloudBackupPeriods = 7;
inline constexpr int kDefaultTieringThresholdDays = 14;

struct HybridOptions {
    ObjectStoreRates rates;
    TransactionCounts transactions;
    int local_restore_period = 14;
    int archive_restore_period = 15;
};

struct CloudOptions {
    VaultRates rates;
    double frontend_gb = 50.0;
};

/// Appliance with a cloud tier: 14 backup periods plus one period in which
/// copies older than the tiering threshold move to the cloud tier and the
/// archive restore is sampled. Needs exactly one Local and one Archive
/// restore sample. Derived converters report at their sampled period;
/// the rest report at the final period.
Model build_hybrid_basic(std::span<const JobSample> job_log, std::span<const RestoreSample> restore_samples,
                         int tiering_threshold_days, const HybridOptions& options = {});

/// Cloud recovery vault fed by two agent jobs over 7 periods plus one
/// post-cycle period. Needs exactly one Vault restore sample.
Model build_cloud_basic(std::span<const JobSample> job1_log, std::span<const JobSample> job2_log,
                        const RestoreSample& restore_sample, const CloudOptions& options = {});

/// Adds TestData, one time converter (hours) per rate binding and the
/// monthly cost for the test data. Supplied averages replace the computed
/// rate of the binding with the same key. Basic-model series are unchanged.
Model extend_with_test_data(const Model& model, double test_data_mb,
                            const std::map<std::string, double>& supplied_averages = {});

/// Rates an extended model projects through, after overrides.
std::vector<Rate> effective_rates(const Model& model, const std::map<std::string, double>& supplied_averages = {});

} // namespace drsim
