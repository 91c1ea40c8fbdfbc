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

#include <vector>

namespace drsim {

/// Object-store pricing for the cloud tier of an on-premises appliance.
struct ObjectStoreRates {
    double per_gb_month = 0.02;
    double per_10k_ingress_egress = 0.54;
    double per_10k_listing = 0.5;

    friend bool operator==(const ObjectStoreRates&, const ObjectStoreRates&) = default;
};

struct FeeTier {
    double up_to_gb = 0.0;  // inclusive upper bound
    double fee = 0.0;

    friend bool operator==(const FeeTier&, const FeeTier&) = default;
};

/// Recovery-vault pricing: a tiered fee per protected instance plus
/// storage. Above the last tier the fee is `block_fee` per started
/// `block_gb` of frontend data.
struct VaultRates {
    double per_gb_month = 0.0448;
    std::vector<FeeTier> tiers{{50.0, 5.0}, {500.0, 10.0}};
    double block_gb = 500.0;
    double block_fee = 10.0;

    friend bool operator==(const VaultRates&, const VaultRates&) = default;
};

struct TransactionCounts {
    double ingress_egress_ops = 10000.0;
    double listing_ops = 10000.0;

    friend bool operator==(const TransactionCounts&, const TransactionCounts&) = default;
};

struct CostBreakdown {
    double storage_cost = 0.0;
    double transaction_cost = 0.0;
    double instance_cost = 0.0;
    double total = 0.0;
};

void validate(const ObjectStoreRates& rates);
/// Tier bounds strictly increasing, fees non-negative, fee non-decreasing
/// across the tier table and into the block region.
void validate(const VaultRates& rates);

CostBreakdown hybrid_cloud_cost(double tiered_gb, double ingress_egress_ops, double listing_ops,
                                const ObjectStoreRates& rates);
inline CostBreakdown hybrid_cloud_cost(double tiered_gb, const TransactionCounts& ops,
                                       const ObjectStoreRates& rates) {
    return hybrid_cloud_cost(tiered_gb, ops.ingress_egress_ops, ops.listing_ops, rates);
}

double vault_instance_fee(double frontend_gb, const VaultRates& rates);
CostBreakdown cloud_vault_cost(double frontend_gb, double stored_gb, const VaultRates& rates);

} // namespace drsim
