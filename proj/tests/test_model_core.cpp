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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "drsim/errors.hpp"
#include "drsim/model_core.hpp"
#include "support/reference_data.hpp"

namespace drsim {
namespace {

TEST(Throughput, MatchesReferenceDailyValues) {
    EXPECT_NEAR(throughput(26956, 525), 51.3448, 1e-4);
    EXPECT_NEAR(throughput(19711, 264), 74.6629, 1e-4);
    EXPECT_DOUBLE_EQ(throughput(1000, 1000), 1.0);
}

TEST(Throughput, RejectsNonPositiveDuration) {
    EXPECT_THROW(throughput(10, 0), DomainError);
    EXPECT_THROW(throughput(10, -1), DomainError);
}

TEST(SummarizeThroughput, HybridArithmeticMean) {
    const auto s = summarize_throughput(testing::hybrid_jobs());
    EXPECT_EQ(s.per_sample.size(), 14u);
    EXPECT_NEAR(s.mean_arithmetic, 54.2224, 1e-4);
}

TEST(SummarizeThroughput, ConstantSeriesHasEqualMeans) {
    std::vector<JobSample> same{{1, 500, 20}, {2, 500, 20}, {3, 500, 20}};
    const auto s = summarize_throughput(same);
    EXPECT_DOUBLE_EQ(s.mean_arithmetic, 25.0);
    EXPECT_DOUBLE_EQ(s.mean_aggregate, 25.0);
}

TEST(SummarizeThroughput, CloudJob2AggregateMean) {
    // Oracle: row sums of the job2 data and time rows.
    double data = 0.0, time = 0.0;
    for (const auto& j : testing::cloud_job2()) {
        data += j.data_mb;
        time += j.duration_s;
    }
    ASSERT_EQ(data, 3484.0);
    ASSERT_EQ(time, 2810.0);
    const auto s = summarize_throughput(testing::cloud_job2());
    EXPECT_DOUBLE_EQ(s.mean_aggregate, 3484.0 / 2810.0);
    EXPECT_NEAR(s.mean_aggregate, 1.2399, 1e-4);
}

TEST(SummarizeThroughput, EmptyInputIsAnError) {
    EXPECT_THROW(summarize_throughput(std::vector<JobSample>{}), DomainError);
}

TEST(RestoreTimePerMb, ReferenceValues) {
    EXPECT_NEAR(restore_time_per_mb({SourceTier::Local, 1824.01, 38.24}), 0.0209649, 1e-6);
    EXPECT_NEAR(restore_time_per_mb({SourceTier::Archive, 1824, 470.1}), 0.25773, 1e-5);
    EXPECT_DOUBLE_EQ(restore_time_per_mb({SourceTier::Local, 100, 100}), 1.0);
    EXPECT_THROW(restore_time_per_mb({SourceTier::Local, 0, 100}), DomainError);
}

TEST(RecoveryThroughput, ReferenceValues) {
    EXPECT_NEAR(recovery_throughput({SourceTier::Vault, 7690, 1380}), 5.57246, 1e-5);
    EXPECT_DOUBLE_EQ(recovery_throughput({SourceTier::Vault, 1, 1}), 1.0);
    EXPECT_NEAR(recovery_throughput({SourceTier::Vault, 531012, 95292.2}), 5.57246, 1e-5);
    EXPECT_THROW(recovery_throughput({SourceTier::Vault, 1, 0}), DomainError);
}

TEST(Project, HybridTestData) {
    const std::vector<Rate> rates{{"backup", Operation::Backup, RateKind::Throughput, 54.2224},
                                  {"archive", Operation::Restore, RateKind::TimePerMb, 0.25773},
                                  {"local", Operation::Restore, RateKind::TimePerMb, 0.0209649}};
    const auto p = project(testing::kTestDataMb, rates);
    ASSERT_EQ(p.times.size(), 3u);
    EXPECT_NEAR(p.find("backup").hours(), 2.72034, 1e-3);
    EXPECT_NEAR(p.find("archive").hours(), 38.016, 1e-3);
    EXPECT_NEAR(p.find("local").hours(), 3.09239, 1e-3);
    EXPECT_EQ(p.backup_times().size(), 1u);
    EXPECT_EQ(p.restore_times().size(), 2u);
}

TEST(Project, CloudTestData) {
    const std::vector<Rate> rates{{"job1", Operation::Backup, RateKind::Throughput, 2.57731},
                                  {"job2", Operation::Backup, RateKind::Throughput, 1.83045},
                                  {"recovery", Operation::Restore, RateKind::Throughput, 5.57246}};
    const auto p = project(testing::kTestDataMb, rates);
    EXPECT_NEAR(p.find("job1").hours(), 57.2315, 1e-3);
    EXPECT_NEAR(p.find("job2").hours(), 80.5831, 1e-3);
    EXPECT_NEAR(p.find("recovery").hours(), 26.47, 1e-3);
}

TEST(Project, UnitRate) {
    const std::vector<Rate> rates{{"x", Operation::Backup, RateKind::Throughput, 1.0}};
    EXPECT_DOUBLE_EQ(project(3600, rates).times[0].hours(), 1.0);
}

TEST(Project, RejectsBadInput) {
    const std::vector<Rate> zero{{"x", Operation::Backup, RateKind::Throughput, 0.0}};
    const std::vector<Rate> ok{{"x", Operation::Backup, RateKind::Throughput, 1.0}};
    EXPECT_THROW(project(100, zero), DomainError);
    EXPECT_THROW(project(0, ok), DomainError);
    EXPECT_THROW(project(100, ok).find("missing"), ConfigError);
}

TEST(ValidateJobLog, Invariants) {
    EXPECT_NO_THROW(validate_job_log(testing::hybrid_jobs()));
    EXPECT_THROW(validate_job_log(std::vector<JobSample>{{0, 1, 1}}), DomainError);
    EXPECT_THROW(validate_job_log(std::vector<JobSample>{{2, 1, 1}, {2, 1, 1}}), DomainError);
    EXPECT_THROW(validate_job_log(std::vector<JobSample>{{1, -1, 1}}), DomainError);
    EXPECT_THROW(validate_job_log(std::vector<JobSample>{{1, 1, 0}}), DomainError);
}

TEST(SourceTier, ParsesCaseInsensitively) {
    EXPECT_EQ(source_tier_from_string("LOCAL"), SourceTier::Local);
    EXPECT_EQ(source_tier_from_string("Archive"), SourceTier::Archive);
    EXPECT_EQ(source_tier_from_string("vault"), SourceTier::Vault);
    EXPECT_THROW(source_tier_from_string("tape"), DomainError);
}

// Properties over random inputs.

class MetricProperties : public ::testing::Test {
protected:
    std::mt19937_64 rng{20261017};
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
};

TEST_F(MetricProperties, ThroughputRoundTrips) {
    for (int i = 0; i < 10000; ++i) {
        const double d = std::exp(uniform(-5, 15));
        const double t = std::exp(uniform(-5, 12));
        EXPECT_NEAR(throughput(d, t) * t, d, 1e-9 * d);
        const RestoreSample r{SourceTier::Local, d, t};
        EXPECT_NEAR(restore_time_per_mb(r) * d, t, 1e-9 * t);
    }
}

TEST_F(MetricProperties, MeansLieWithinSampleRange) {
    for (int trial = 0; trial < 2000; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 20);
        std::vector<JobSample> log;
        for (int d = 1; d <= n; ++d) log.push_back({d, uniform(0, 50000), uniform(1, 5000)});
        const auto s = summarize_throughput(log);
        const auto [lo, hi] = std::minmax_element(s.per_sample.begin(), s.per_sample.end());
        EXPECT_GE(s.mean_arithmetic, *lo);
        EXPECT_LE(s.mean_arithmetic, *hi);
        EXPECT_GE(s.mean_aggregate, *lo);
        EXPECT_LE(s.mean_aggregate, *hi);
        if (n == 1) EXPECT_DOUBLE_EQ(s.mean_arithmetic, s.mean_aggregate);
    }
}

TEST_F(MetricProperties, EqualDurationsGiveEqualMeans) {
    for (int trial = 0; trial < 1000; ++trial) {
        const double t = uniform(1, 5000);
        std::vector<JobSample> log;
        for (int d = 1; d <= 10; ++d) log.push_back({d, uniform(0, 50000), t});
        const auto s = summarize_throughput(log);
        EXPECT_NEAR(s.mean_arithmetic, s.mean_aggregate, 1e-12 * s.mean_aggregate + 1e-15);
    }
}

TEST_F(MetricProperties, ProjectionIsLinearInData) {
    for (int trial = 0; trial < 2000; ++trial) {
        const std::vector<Rate> rates{{"a", Operation::Backup, RateKind::Throughput, uniform(0.01, 100)},
                                      {"b", Operation::Restore, RateKind::TimePerMb, uniform(0.001, 10)}};
        const double d = uniform(1, 1e6);
        const auto one = project(d, rates);
        const auto two = project(2 * d, rates);
        for (std::size_t i = 0; i < rates.size(); ++i)
            EXPECT_NEAR(two.times[i].seconds, 2 * one.times[i].seconds, 1e-12 * two.times[i].seconds);
    }
}

} // namespace
} // namespace drsim
