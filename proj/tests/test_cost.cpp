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

#include <random>
#include <set>

#include "drsim/cost.hpp"
#include "drsim/errors.hpp"

namespace drsim {
namespace {

const ObjectStoreRates kObjectStore{0.02, 0.54, 0.5};
const VaultRates kVault{};

TEST(HybridCloudCost, BasicModelMonth) {
    const auto c = hybrid_cloud_cost(26.956, 10000, 10000, kObjectStore);
    EXPECT_NEAR(c.total, 1.57912, 1e-4);
    // Decomposition: storage is what remains after the 1.04 $ of transactions.
    EXPECT_NEAR(c.storage_cost, 1.57912 - 1.04, 1e-9);
    EXPECT_NEAR(c.transaction_cost, 1.04, 1e-12);
    EXPECT_EQ(c.instance_cost, 0.0);
}

TEST(HybridCloudCost, TestDataMonth) {
    const auto c = hybrid_cloud_cost(531.012, 10000, 10000, kObjectStore);
    EXPECT_NEAR(c.storage_cost, 10.62024, 1e-9);
    EXPECT_NEAR(c.total, 11.6602, 1e-4);
}

TEST(HybridCloudCost, ZeroEverything) {
    EXPECT_EQ(hybrid_cloud_cost(0, 0, 0, kObjectStore).total, 0.0);
    EXPECT_EQ(hybrid_cloud_cost(0, 0, 0, ObjectStoreRates{1, 2, 3}).total, 0.0);
}

TEST(HybridCloudCost, NegativeInputsAreRejected) {
    EXPECT_THROW(hybrid_cloud_cost(-1, 0, 0, kObjectStore), DomainError);
    EXPECT_THROW(hybrid_cloud_cost(1, -1, 0, kObjectStore), DomainError);
    EXPECT_THROW(hybrid_cloud_cost(1, 0, -1, kObjectStore), DomainError);
    EXPECT_THROW(hybrid_cloud_cost(1, 0, 0, ObjectStoreRates{-0.1, 0, 0}), DomainError);
}

TEST(VaultInstanceFee, ReconciledTiers) {
    // Oracle: solve each reference total for the fee.
    EXPECT_NEAR(43.7893 - 531.012 * 0.0448, 20.0, 1e-4);
    EXPECT_NEAR(7.82701 - 63.103 * 0.0448, 5.0, 1e-5);
    EXPECT_EQ(vault_instance_fee(531.012, kVault), 20.0);
    EXPECT_EQ(vault_instance_fee(0, kVault), 5.0);
    EXPECT_EQ(vault_instance_fee(50, kVault), 5.0);
    EXPECT_EQ(vault_instance_fee(50.001, kVault), 10.0);
    EXPECT_EQ(vault_instance_fee(500, kVault), 10.0);
    EXPECT_EQ(vault_instance_fee(500.001, kVault), 20.0);
    EXPECT_EQ(vault_instance_fee(1000, kVault), 20.0);
    EXPECT_EQ(vault_instance_fee(1000.5, kVault), 30.0);
}

TEST(CloudVaultCost, ReferenceMonths) {
    EXPECT_NEAR(cloud_vault_cost(50, 63.103, kVault).total, 7.82701, 1e-4);
    const auto t = cloud_vault_cost(531.012, 531.012, kVault);
    EXPECT_NEAR(t.total, 43.78934, 1e-5);
    EXPECT_EQ(t.instance_cost, 20.0);
    EXPECT_EQ(t.transaction_cost, 0.0);
    EXPECT_EQ(cloud_vault_cost(0, 0, kVault).total, 5.0);
    EXPECT_THROW(cloud_vault_cost(1, -1, kVault), DomainError);
    EXPECT_THROW(cloud_vault_cost(-1, 1, kVault), DomainError);
}

TEST(VaultRates, ValidationRejectsBrokenTables) {
    VaultRates unsorted;
    unsorted.tiers = {{500, 10}, {50, 5}};
    EXPECT_THROW(validate(unsorted), DomainError);
    VaultRates decreasing;
    decreasing.tiers = {{50, 10}, {500, 5}};
    EXPECT_THROW(validate(decreasing), DomainError);
    VaultRates undercut;
    undercut.block_fee = 1;
    EXPECT_THROW(validate(undercut), DomainError);
    VaultRates empty;
    empty.tiers.clear();
    EXPECT_THROW(validate(empty), DomainError);
    EXPECT_NO_THROW(validate(kVault));
}

class CostProperties : public ::testing::Test {
protected:
    std::mt19937_64 rng{8};
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
};

TEST_F(CostProperties, MonotoneInEveryQuantity) {
    for (int i = 0; i < 5000; ++i) {
        const double gb = uniform(0, 5000), ops1 = uniform(0, 1e6), ops2 = uniform(0, 1e6);
        const double bump = uniform(0, 100);
        const double base = hybrid_cloud_cost(gb, ops1, ops2, kObjectStore).total;
        EXPECT_LE(base, hybrid_cloud_cost(gb + bump, ops1, ops2, kObjectStore).total);
        EXPECT_LE(base, hybrid_cloud_cost(gb, ops1 + bump, ops2, kObjectStore).total);
        EXPECT_LE(base, hybrid_cloud_cost(gb, ops1, ops2 + bump, kObjectStore).total);
        const double vbase = cloud_vault_cost(gb, gb, kVault).total;
        EXPECT_LE(vbase, cloud_vault_cost(gb + bump, gb, kVault).total);
        EXPECT_LE(vbase, cloud_vault_cost(gb, gb + bump, kVault).total);
    }
}

TEST_F(CostProperties, StorageIsLinear) {
    for (int i = 0; i < 2000; ++i) {
        const double gb = uniform(0, 5000);
        EXPECT_NEAR(hybrid_cloud_cost(2 * gb, 0, 0, kObjectStore).storage_cost,
                    2 * hybrid_cloud_cost(gb, 0, 0, kObjectStore).storage_cost, 1e-12 * gb);
        EXPECT_NEAR(cloud_vault_cost(0, 2 * gb, kVault).storage_cost, 2 * cloud_vault_cost(0, gb, kVault).storage_cost,
                    1e-12 * gb);
    }
}

TEST_F(CostProperties, InstanceFeeIsARightContinuousStep) {
    std::set<double> seen;
    double previous = 0.0;
    for (double gb = 0.0; gb <= 3000.0; gb += 0.25) {
        const double fee = vault_instance_fee(gb, kVault);
        seen.insert(fee);
        EXPECT_GE(fee, previous);
        EXPECT_TRUE(fee == 5.0 || std::fmod(fee, 10.0) == 0.0) << fee;
        previous = fee;
    }
    EXPECT_EQ(seen, (std::set<double>{5, 10, 20, 30, 40, 50, 60}));
    for (double boundary : {50.0, 500.0, 1000.0, 1500.0}) {
        EXPECT_EQ(vault_instance_fee(boundary, kVault), vault_instance_fee(boundary - 1e-9, kVault));
        EXPECT_GT(vault_instance_fee(boundary + 1e-9, kVault), vault_instance_fee(boundary, kVault));
    }
}

TEST_F(CostProperties, BreakdownSumsToTotal) {
    for (int i = 0; i < 2000; ++i) {
        const auto h = hybrid_cloud_cost(uniform(0, 5000), uniform(0, 1e6), uniform(0, 1e6), kObjectStore);
        EXPECT_NEAR(h.storage_cost + h.transaction_cost + h.instance_cost, h.total, 1e-9);
        const auto v = cloud_vault_cost(uniform(0, 5000), uniform(0, 5000), kVault);
        EXPECT_NEAR(v.storage_cost + v.transaction_cost + v.instance_cost, v.total, 1e-9);
    }
}

} // namespace
} // namespace drsim
