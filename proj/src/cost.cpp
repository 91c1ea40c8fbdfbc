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

#include "drsim/cost.hpp"

#include <cmath>
#include <string>

#include "drsim/errors.hpp"

namespace drsim {
namespace {

void require_non_negative(double value, const char* what) {
    if (!(value >= 0.0) || !std::isfinite(value))
        throw DomainError(std::string(what) + " must be a finite value >= 0");
}

double block_fee_for(double frontend_gb, const VaultRates& rates) {
    return rates.block_fee * std::ceil(frontend_gb / rates.block_gb);
}

} // namespace

void validate(const ObjectStoreRates& rates) {
    require_non_negative(rates.per_gb_month, "per_gb_month");
    require_non_negative(rates.per_10k_ingress_egress, "per_10k_ingress_egress");
    require_non_negative(rates.per_10k_listing, "per_10k_listing");
}

void validate(const VaultRates& rates) {
    require_non_negative(rates.per_gb_month, "per_gb_month");
    require_non_negative(rates.block_fee, "block_fee");
    if (!(rates.block_gb > 0.0)) throw DomainError("block_gb must be > 0");
    if (rates.tiers.empty()) throw DomainError("vault fee table needs at least one tier");
    double previous_bound = -1.0;
    double previous_fee = 0.0;
    for (const auto& tier : rates.tiers) {
        require_non_negative(tier.up_to_gb, "tier bound");
        require_non_negative(tier.fee, "tier fee");
        if (!(tier.up_to_gb > previous_bound)) throw DomainError("tier bounds must be strictly increasing");
        if (tier.fee < previous_fee) throw DomainError("tier fees must be non-decreasing");
        previous_bound = tier.up_to_gb;
        previous_fee = tier.fee;
    }
    // The first frontend size past the last tier is charged for
    // ceil(bound / block) + (exact multiple ? 1 : 0) blocks; the smallest
    // such charge must not undercut the last tier.
    const double last = rates.tiers.back().up_to_gb;
    const double blocks_past = std::floor(last / rates.block_gb) + 1.0;
    if (rates.block_fee * blocks_past < previous_fee)
        throw DomainError("block fee above the last tier undercuts the tier table");
}

CostBreakdown hybrid_cloud_cost(double tiered_gb, double ingress_egress_ops, double listing_ops,
                                const ObjectStoreRates& rates) {
    require_non_negative(tiered_gb, "tiered_gb");
    require_non_negative(ingress_egress_ops, "ingress_egress_ops");
    require_non_negative(listing_ops, "listing_ops");
    validate(rates);
    CostBreakdown c;
    c.storage_cost = tiered_gb * rates.per_gb_month;
    c.transaction_cost = rates.per_10k_ingress_egress * ingress_egress_ops / 10000.0 +
                         rates.per_10k_listing * listing_ops / 10000.0;
    c.instance_cost = 0.0;
    c.total = c.storage_cost + c.transaction_cost + c.instance_cost;
    return c;
}

double vault_instance_fee(double frontend_gb, const VaultRates& rates) {
    require_non_negative(frontend_gb, "frontend_gb");
    validate(rates);
    for (const auto& tier : rates.tiers)
        if (frontend_gb <= tier.up_to_gb) return tier.fee;
    return block_fee_for(frontend_gb, rates);
}

CostBreakdown cloud_vault_cost(double frontend_gb, double stored_gb, const VaultRates& rates) {
    require_non_negative(stored_gb, "stored_gb");
    CostBreakdown c;
    c.instance_cost = vault_instance_fee(frontend_gb, rates);
    c.storage_cost = stored_gb * rates.per_gb_month;
    c.transaction_cost = 0.0;
    c.total = c.storage_cost + c.transaction_cost + c.instance_cost;
    return c;
}

} // namespace drsim
