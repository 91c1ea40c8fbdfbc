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

#include "drsim/scenario.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "drsim/errors.hpp"
#include "drsim/io.hpp"
#include "drsim/models.hpp"

namespace drsim {

using nlohmann::json;
using nlohmann::ordered_json;

std::string to_string(SystemKind kind) { return kind == SystemKind::Hybrid ? "hybrid" : "cloud_vault"; }

namespace {

// Reads one JSON object, rejecting keys it was not asked about.
class ObjectReader {
public:
    ObjectReader(const json& j, std::string where) : j_(j), where_(std::move(where)) {
        if (!j_.is_object()) throw ConfigError(where_ + ": expected an object");
    }
    ~ObjectReader() = default;

    bool has(const std::string& key) {
        seen_.insert(key);
        return j_.contains(key) && !j_.at(key).is_null();
    }

    const json& raw(const std::string& key) {
        if (!has(key)) throw ConfigError(where_ + ": missing key '" + key + "'");
        return j_.at(key);
    }

    double number(const std::string& key) {
        const auto& v = raw(key);
        if (!v.is_number()) throw ConfigError(where_ + "." + key + ": expected a number");
        return v.get<double>();
    }

    double number(const std::string& key, double fallback) { return has(key) ? number(key) : fallback; }

    std::optional<double> optional_number(const std::string& key) {
        return has(key) ? std::optional<double>(number(key)) : std::nullopt;
    }

    int integer(const std::string& key) {
        const auto& v = raw(key);
        if (!v.is_number_integer()) throw ConfigError(where_ + "." + key + ": expected an integer");
        return v.get<int>();
    }

    std::string text(const std::string& key) {
        const auto& v = raw(key);
        if (!v.is_string()) throw ConfigError(where_ + "." + key + ": expected a string");
        return v.get<std::string>();
    }

    std::string text(const std::string& key, const std::string& fallback) { return has(key) ? text(key) : fallback; }

    std::vector<std::string> texts(const std::string& key) {
        const auto& v = raw(key);
        if (!v.is_array()) throw ConfigError(where_ + "." + key + ": expected an array of strings");
        std::vector<std::string> out;
        for (const auto& item : v) {
            if (!item.is_string()) throw ConfigError(where_ + "." + key + ": expected an array of strings");
            out.push_back(item.get<std::string>());
        }
        return out;
    }

    /// Call after every key has been read.
    void finish() const {
        for (const auto& [key, value] : j_.items())
            if (!seen_.contains(key)) throw ConfigError(where_ + ": unknown key '" + key + "'");
    }

    const std::string& where() const { return where_; }

private:
    const json& j_;
    std::string where_;
    std::set<std::string> seen_;
};

Pricing read_pricing(const json& j) {
    ObjectReader r(j, "pricing");
    const auto kind = r.text("kind");
    Pricing out;
    if (kind == "object_store") {
        ObjectStoreRates rates;
        rates.per_gb_month = r.number("per_gb_month");
        rates.per_10k_ingress_egress = r.number("per_10k_ingress_egress");
        rates.per_10k_listing = r.number("per_10k_listing");
        validate(rates);
        out = rates;
    } else if (kind == "vault") {
        VaultRates rates;
        rates.per_gb_month = r.number("per_gb_month");
        if (r.has("instance_fee_tiers")) {
            rates.tiers.clear();
            const auto& tiers = r.raw("instance_fee_tiers");
            if (!tiers.is_array()) throw ConfigError("pricing.instance_fee_tiers: expected an array");
            for (const auto& t : tiers) {
                ObjectReader tr(t, "pricing.instance_fee_tiers[]");
                rates.tiers.push_back({tr.number("up_to_gb"), tr.number("fee")});
                tr.finish();
            }
        }
        rates.block_gb = r.number("block_gb", rates.block_gb);
        rates.block_fee = r.number("block_fee", rates.block_fee);
        validate(rates);
        out = rates;
    } else {
        throw ConfigError("pricing.kind must be 'object_store' or 'vault', got '" + kind + "'");
    }
    r.finish();
    return out;
}

BiaTargets read_bia(const json& j) {
    ObjectReader r(j, "bia");
    BiaTargets t;
    t.agent = r.text("agent");
    t.backup_frequency_days = r.number("backup_frequency_days");
    t.backup_retention_days = r.integer("backup_retention_days");
    t.recovery_points_scheme = r.text("recovery_points", "");
    if (r.has("cloud_tiering_threshold_days")) t.cloud_tiering_threshold_days = r.integer("cloud_tiering_threshold_days");
    t.rpo_target_days = r.number("rpo_days");
    t.rto_target_h = r.number("rto_hours");
    t.wrt_h = r.optional_number("wrt_hours");
    t.max_data_loss_mb = r.optional_number("max_data_loss_mb");
    r.finish();
    validate(t);
    return t;
}

SeriesSystem read_reliability(const json& j) {
    ObjectReader r(j, "reliability");
    SeriesSystem s;
    s.mission_h = r.number("mission_h", kReconciledMissionHours);
    const auto& comps = r.raw("components");
    if (!comps.is_array()) throw ConfigError("reliability.components: expected an array");
    for (const auto& c : comps) {
        ObjectReader cr(c, "reliability.components[]");
        ReliabilityComponent rc;
        rc.name = cr.text("name");
        rc.mtbf_h = cr.optional_number("mtbf_h");
        rc.sla = cr.optional_number("sla");
        rc.sla_reference_h = cr.number("sla_reference_h", kStatedAnalysisHours);
        cr.finish();
        s.components.push_back(std::move(rc));
    }
    r.finish();
    validate(s);
    return s;
}

ordered_json write_pricing(const Pricing& pricing) {
    ordered_json j;
    if (const auto* o = std::get_if<ObjectStoreRates>(&pricing)) {
        j["kind"] = "object_store";
        j["per_gb_month"] = o->per_gb_month;
        j["per_10k_ingress_egress"] = o->per_10k_ingress_egress;
        j["per_10k_listing"] = o->per_10k_listing;
    } else {
        const auto& v = std::get<VaultRates>(pricing);
        j["kind"] = "vault";
        j["per_gb_month"] = v.per_gb_month;
        j["instance_fee_tiers"] = ordered_json::array();
        for (const auto& t : v.tiers) j["instance_fee_tiers"].push_back({{"up_to_gb", t.up_to_gb}, {"fee", t.fee}});
        j["block_gb"] = v.block_gb;
        j["block_fee"] = v.block_fee;
    }
    return j;
}

} // namespace

Scenario parse_scenario(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("scenario is not valid JSON: ") + e.what());
    }
    ObjectReader r(j, "scenario");
    Scenario s;
    s.name = r.text("name");
    const auto kind = r.text("system_kind");
    if (kind == "hybrid") s.system_kind = SystemKind::Hybrid;
    else if (kind == "cloud_vault") s.system_kind = SystemKind::CloudVault;
    else throw ConfigError("scenario.system_kind must be 'hybrid' or 'cloud_vault', got '" + kind + "'");

    s.job_log_paths = r.texts("job_logs");
    s.restore_sample_paths = r.texts("restore_samples");
    s.test_data_mb = r.optional_number("test_data_mb");
    if (s.test_data_mb && !(*s.test_data_mb > 0.0)) throw ConfigError("scenario.test_data_mb must be > 0");
    if (r.has("supplied_averages")) {
        const auto& avg = r.raw("supplied_averages");
        if (!avg.is_object()) throw ConfigError("scenario.supplied_averages: expected an object");
        for (const auto& [key, value] : avg.items()) {
            if (!value.is_number()) throw ConfigError("supplied_averages." + key + ": expected a number");
            s.supplied_averages[key] = value.get<double>();
        }
    }
    s.pricing = read_pricing(r.raw("pricing"));
    s.frontend_gb = r.optional_number("frontend_gb");
    if (r.has("transactions")) {
        ObjectReader tr(r.raw("transactions"), "transactions");
        s.transactions.ingress_egress_ops = tr.number("ingress_egress_ops", s.transactions.ingress_egress_ops);
        s.transactions.listing_ops = tr.number("listing_ops", s.transactions.listing_ops);
        tr.finish();
    }
    s.bia = read_bia(r.raw("bia"));
    s.reliability = r.has("reliability") ? read_reliability(r.raw("reliability")) : default_three_component_system();
    r.finish();

    const bool hybrid = s.system_kind == SystemKind::Hybrid;
    if (hybrid != std::holds_alternative<ObjectStoreRates>(s.pricing))
        throw ConfigError("pricing kind does not match system_kind '" + kind + "'");
    if (s.job_log_paths.size() != (hybrid ? 1u : 2u))
        throw ConfigError(std::string("scenario.job_logs needs ") + (hybrid ? "1 file" : "2 files (job1, job2)"));
    if (s.restore_sample_paths.empty()) throw ConfigError("scenario.restore_samples is empty");
    if (hybrid) {
        if (s.frontend_gb) throw ConfigError("frontend_gb applies to cloud_vault scenarios only");
        if (!s.bia.cloud_tiering_threshold_days) s.bia.cloud_tiering_threshold_days = kDefaultTieringThresholdDays;
        if (s.transactions.ingress_egress_ops < 0.0 || s.transactions.listing_ops < 0.0)
            throw ConfigError("transaction counts must be >= 0");
    } else {
        if (s.bia.cloud_tiering_threshold_days)
            throw ConfigError("bia.cloud_tiering_threshold_days applies to hybrid scenarios only");
        if (!s.frontend_gb) s.frontend_gb = CloudOptions{}.frontend_gb;
        if (!(*s.frontend_gb >= 0.0)) throw ConfigError("frontend_gb must be >= 0");
    }
    const std::set<std::string> allowed =
        hybrid ? std::set<std::string>{averages::kBackupThroughput, averages::kRestorePerMbLocal,
                                       averages::kRestorePerMbArchive}
               : std::set<std::string>{averages::kJob1Throughput, averages::kJob2Throughput,
                                       averages::kRecoveryThroughput};
    for (const auto& [key, value] : s.supplied_averages) {
        if (!allowed.contains(key)) throw ConfigError("supplied average '" + key + "' does not apply to " + kind);
        if (!(value > 0.0)) throw ConfigError("supplied average '" + key + "' must be > 0");
    }
    return s;
}

std::string serialize_scenario(const Scenario& s) {
    ordered_json j;
    j["name"] = s.name;
    j["system_kind"] = to_string(s.system_kind);
    j["job_logs"] = s.job_log_paths;
    j["restore_samples"] = s.restore_sample_paths;
    if (s.test_data_mb) j["test_data_mb"] = *s.test_data_mb;
    if (!s.supplied_averages.empty()) {
        j["supplied_averages"] = ordered_json::object();
        for (const auto& [k, v] : s.supplied_averages) j["supplied_averages"][k] = v;
    }
    j["pricing"] = write_pricing(s.pricing);
    if (s.frontend_gb) j["frontend_gb"] = *s.frontend_gb;
    if (s.system_kind == SystemKind::Hybrid)
        j["transactions"] = {{"ingress_egress_ops", s.transactions.ingress_egress_ops},
                             {"listing_ops", s.transactions.listing_ops}};

    ordered_json bia;
    bia["agent"] = s.bia.agent;
    bia["backup_frequency_days"] = s.bia.backup_frequency_days;
    bia["backup_retention_days"] = s.bia.backup_retention_days;
    bia["recovery_points"] = s.bia.recovery_points_scheme;
    if (s.bia.cloud_tiering_threshold_days) bia["cloud_tiering_threshold_days"] = *s.bia.cloud_tiering_threshold_days;
    bia["rpo_days"] = s.bia.rpo_target_days;
    bia["rto_hours"] = s.bia.rto_target_h;
    if (s.bia.wrt_h) bia["wrt_hours"] = *s.bia.wrt_h;
    if (s.bia.max_data_loss_mb) bia["max_data_loss_mb"] = *s.bia.max_data_loss_mb;
    j["bia"] = bia;

    ordered_json rel;
    rel["mission_h"] = s.reliability.mission_h;
    rel["components"] = ordered_json::array();
    for (const auto& c : s.reliability.components) {
        ordered_json cj;
        cj["name"] = c.name;
        if (c.mtbf_h) cj["mtbf_h"] = *c.mtbf_h;
        if (c.sla) {
            cj["sla"] = *c.sla;
            cj["sla_reference_h"] = c.sla_reference_h;
        }
        rel["components"].push_back(cj);
    }
    j["reliability"] = rel;
    return j.dump(2) + "\n";
}

LoadedScenario load_scenario(std::string_view text, const std::filesystem::path& base_dir) {
    LoadedScenario out;
    out.scenario = parse_scenario(text);
    out.source = base_dir;
    auto resolve = [&](const std::string& p) {
        std::filesystem::path path(p);
        if (path.is_relative()) path = base_dir / path;
        if (!std::filesystem::exists(path)) throw ConfigError("referenced file does not exist: '" + path.string() + "'");
        return path;
    };
    for (const auto& p : out.scenario.job_log_paths) {
        const auto path = resolve(p);
        try {
            out.job_logs.push_back(parse_job_log(read_text_file(path)));
        } catch (const ParseError& e) {
            throw ParseError(path.string() + ": " + e.what());
        }
    }
    for (const auto& p : out.scenario.restore_sample_paths) {
        const auto path = resolve(p);
        try {
            auto samples = parse_restore_samples(read_text_file(path));
            out.restores.insert(out.restores.end(), samples.begin(), samples.end());
        } catch (const ParseError& e) {
            throw ParseError(path.string() + ": " + e.what());
        }
    }
    return out;
}

LoadedScenario load_scenario(const std::filesystem::path& path) {
    auto loaded = load_scenario(read_text_file(path), path.parent_path());
    loaded.source = path;
    return loaded;
}

Model build_basic_model(const LoadedScenario& loaded) {
    const auto& s = loaded.scenario;
    if (s.system_kind == SystemKind::Hybrid) {
        HybridOptions options;
        options.rates = std::get<ObjectStoreRates>(s.pricing);
        options.transactions = s.transactions;
        return build_hybrid_basic(loaded.job_logs.at(0), loaded.restores,
                                  s.bia.cloud_tiering_threshold_days.value_or(kDefaultTieringThresholdDays), options);
    }
    CloudOptions options;
    options.rates = std::get<VaultRates>(s.pricing);
    options.frontend_gb = s.frontend_gb.value_or(options.frontend_gb);
    const auto vault = std::find_if(loaded.restores.begin(), loaded.restores.end(),
                                    [](const RestoreSample& r) { return r.source_tier == SourceTier::Vault; });
    if (vault == loaded.restores.end()) throw ConfigError("cloud scenario needs a vault restore sample");
    if (loaded.restores.size() != 1) throw ConfigError("cloud scenario takes exactly one restore sample");
    return build_cloud_basic(loaded.job_logs.at(0), loaded.job_logs.at(1), *vault, options);
}

namespace {

Observations observe(const LoadedScenario& loaded, const std::optional<Projection>& projection) {
    Observations o;
    if (projection) o = observations_from(*projection);
    // Worst-case age of the newest copy is the largest gap between jobs;
    // the most data at risk is the largest day's total across jobs.
    std::map<int, double> per_day;
    for (const auto& log : loaded.job_logs)
        for (const auto& s : log) per_day[s.day] += s.data_mb;
    if (per_day.size() >= 2) {
        int gap = 0;
        for (auto it = std::next(per_day.begin()); it != per_day.end(); ++it)
            gap = std::max(gap, it->first - std::prev(it)->first);
        o.backup_interval_days = gap;
    }
    if (!per_day.empty()) {
        double most = 0.0;
        for (const auto& [day, mb] : per_day) most = std::max(most, mb);
        o.data_loss_mb = most;
    }
    return o;
}

} // namespace

SystemEvaluation evaluate_scenario(const LoadedScenario& loaded, std::optional<double> test_data_mb) {
    const auto& s = loaded.scenario;
    const Model basic = build_basic_model(loaded);

    SystemEvaluation e;
    e.name = s.name;
    e.kind = s.system_kind;
    e.pricing = s.pricing;
    e.basic_run = run(basic);
    e.rates = effective_rates(basic, s.supplied_averages);
    for (const auto& [k, v] : s.supplied_averages) e.supplied.push_back(k);
    for (const auto& log : loaded.job_logs) e.throughput.push_back(summarize_throughput(log));

    if (s.system_kind == SystemKind::Hybrid) {
        e.basic_cost = hybrid_cloud_cost(mb_to_gb(e.basic_run.final(names::kCloudTier)), s.transactions,
                                         std::get<ObjectStoreRates>(s.pricing));
    } else {
        e.basic_cost = cloud_vault_cost(*s.frontend_gb, mb_to_gb(e.basic_run.final(names::kRecoveryVault)),
                                        std::get<VaultRates>(s.pricing));
    }

    const auto test = test_data_mb ? test_data_mb : s.test_data_mb;
    if (test) {
        const Model extended = extend_with_test_data(basic, *test, s.supplied_averages);
        e.extended_run = run(extended);
        e.projection = project(*test, e.rates);
        const double gb = mb_to_gb(*test);
        if (s.system_kind == SystemKind::Hybrid)
            e.test_data_cost = hybrid_cloud_cost(gb, s.transactions, std::get<ObjectStoreRates>(s.pricing));
        else
            e.test_data_cost = cloud_vault_cost(gb, gb, std::get<VaultRates>(s.pricing));
    }

    e.reliability = evaluate(s.reliability);
    e.compliance = evaluate(s.name, observe(loaded, e.projection), s.bia);
    return e;
}

} // namespace drsim
