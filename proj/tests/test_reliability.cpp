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
#include "drsim/reliability.hpp"

namespace drsim {
namespace {

TEST(ComponentReliability, ReconciledMissionTime) {
    // Oracle: invert exp(-t / 61320) = 0.993952 for t.
    const double t = -61320.0 * std::log(0.993952);
    EXPECT_NEAR(t, 372.0, 0.2);
    EXPECT_NEAR(component_reliability(61320, 372), 0.993952, 1e-6);
    EXPECT_NEAR(component_reliability(17520, 372), 0.978981, 2e-5);
    EXPECT_NEAR(component_reliability(61320, 360), 0.994146, 1e-6);
    EXPECT_EQ(component_reliability(1234, 0), 1.0);
}

TEST(ComponentReliability, Errors) {
    EXPECT_THROW(component_reliability(0, 1), DomainError);
    EXPECT_THROW(component_reliability(-5, 1), DomainError);
    EXPECT_THROW(component_reliability(5, -1), DomainError);
}

TEST(SlaToMtbf, Values) {
    const double expected = 360.0 / -std::log(0.9995);
    EXPECT_NEAR(sla_to_mtbf(0.9995, 360), expected, 1e-6);
    EXPECT_NEAR(expected, 719820.0, 1.0);
    EXPECT_NEAR(std::exp(-360.0 / sla_to_mtbf(0.9995, 360)), 0.9995, 1e-15);
    EXPECT_NEAR(sla_to_mtbf(0.993952, 372), 61320.0, 0.0001 * 61320.0);
    EXPECT_THROW(sla_to_mtbf(1.0, 360), DomainError);
    EXPECT_THROW(sla_to_mtbf(0.0, 360), DomainError);
    EXPECT_THROW(sla_to_mtbf(0.5, 0), DomainError);
}

TEST(SeriesReliability, Values) {
    const std::vector<double> ones{1, 1, 1};
    const std::vector<double> half{0.5};
    EXPECT_EQ(series_reliability(ones), 1.0);
    EXPECT_EQ(series_reliability(half), 0.5);
    EXPECT_THROW(series_reliability(std::vector<double>{0.5, 1.5}), DomainError);
    EXPECT_THROW(series_reliability(std::vector<double>{-0.1}), DomainError);
}

TEST(SeriesSystem, DefaultThreeComponentConcept) {
    const auto r = evaluate(default_three_component_system());
    ASSERT_EQ(r.components.size(), 3u);
    EXPECT_NEAR(r.components[0].reliability, 0.993952, 1e-6);
    EXPECT_NEAR(r.components[1].reliability, 0.993952, 1e-6);
    EXPECT_NEAR(r.components[2].reliability, 0.978981, 2e-5);
    EXPECT_NEAR(r.system, r.components[0].reliability * r.components[1].reliability * r.components[2].reliability,
                1e-15);
}

TEST(SeriesSystem, SlaComponentsAreFlagged) {
    SeriesSystem s;
    s.mission_h = 360;
    s.components = {{"cloud", std::nullopt, 0.9995, 360}, {"dc", 61320.0, std::nullopt, 360}};
    const auto r = evaluate(s);
    EXPECT_TRUE(r.components[0].from_sla);
    EXPECT_FALSE(r.components[1].from_sla);
    EXPECT_NEAR(r.components[0].reliability, 0.9995, 1e-12);
}

TEST(SeriesSystem, Validation) {
    SeriesSystem empty;
    EXPECT_THROW(evaluate(empty), ConfigError);
    SeriesSystem both;
    both.components = {{"x", 10.0, 0.9, 360}};
    EXPECT_THROW(evaluate(both), ConfigError);
    SeriesSystem neither;
    neither.components = {{"x", std::nullopt, std::nullopt, 360}};
    EXPECT_THROW(evaluate(neither), ConfigError);
}

class ReliabilityProperties : public ::testing::Test {
protected:
    std::mt19937_64 rng{5};
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
};

TEST_F(ReliabilityProperties, MonotoneAndBounded) {
    for (int i = 0; i < 5000; ++i) {
        const double mtbf = uniform(1, 1e6), t = uniform(0, 1e4), dt = uniform(1, 100);
        const double r = component_reliability(mtbf, t);
        EXPECT_GT(r, 0.0);
        EXPECT_LE(r, 1.0);
        EXPECT_LT(component_reliability(mtbf, t + dt), r);
        EXPECT_GT(component_reliability(mtbf + dt, t + 1), component_reliability(mtbf, t + 1));
    }
}

TEST_F(ReliabilityProperties, SeriesBoundsAndSymmetry) {
    for (int i = 0; i < 2000; ++i) {
        std::vector<double> values(1 + rng() % 6);
        for (auto& v : values) v = uniform(0, 1);
        const double r = series_reliability(values);
        EXPECT_LE(r, *std::min_element(values.begin(), values.end()));
        auto shuffled = values;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        EXPECT_NEAR(series_reliability(shuffled), r, 1e-15);
        auto with_one = values;
        with_one.push_back(1.0);
        EXPECT_EQ(series_reliability(with_one), r);
    }
}

TEST_F(ReliabilityProperties, SlaRoundTrip) {
    for (int i = 0; i < 5000; ++i) {
        const double sla = uniform(0.5, 0.999999), period = uniform(1, 1e4);
        EXPECT_NEAR(component_reliability(sla_to_mtbf(sla, period), period), sla, 1e-12 * sla);
    }
}

} // namespace
} // namespace drsim
