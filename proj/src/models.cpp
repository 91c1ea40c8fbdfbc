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

#include "drsim/models.hpp"

#include <optional>
#include <set>
#include <sstream>

#include "drsim/errors.hpp"

namespace drsim {
namespace {

std::string number_text(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

std::vector<double> padded(std::span<const JobSample> log, int horizon, double JobSample::*field) {
    std::vector<double> out(static_cast<std::size_t>(horizon), 0.0);
    for (std::size_t i = 0; i < log.size(); ++i) out[i] = log[i].*field;
    return out;
}

const RestoreSample& single_sample(std::span<const RestoreSample> samples, SourceTier tier) {
    const RestoreSample* found = nullptr;
    for (const auto& s : samples) {
        if (s.source_tier != tier) continue;
        if (found) throw ConfigError("more than one " + to_string(tier) + " restore sample");
        found = &s;
    }
    if (!found) throw ConfigError("missing " + to_string(tier) + " restore sample");
    validate(*found);
    return *found;
}

// Value reported at one period only, zero elsewhere.
Expression at_period(int period, double value) {
    return [period, value](const EvalContext& ctx) { return ctx.period() == period ? value : 0.0; };
}

Expression ratio_of_inputs(std::string data, std::string time) {
    return [data = std::move(data), time = std::move(time)](const EvalContext& ctx) {
        const double t = ctx.input(time);
        return t > 0.0 ? throughput(ctx.input(data), t) : 0.0;
    };
}

Expression input_value(std::string name) {
    return [name = std::move(name)](const EvalContext& ctx) { return ctx.input(name); };
}

void check_sample_count(std::span<const JobSample> log, int expected, const char* what) {
    if (static_cast<int>(log.size()) != expected)
        throw ConfigError(std::string(what) + " needs " + std::to_string(expected) + " samples, got " +
                          std::to_string(log.size()));
    try {
        validate_job_log(log);
    } catch (const DomainError& e) {
        throw ConfigError(std::string(what) + ": " + e.what());
    }
}

} // namespace

Model build_hybrid_basic(std::span<const JobSample> job_log, std::span<const RestoreSample> restore_samples,
                         int tiering_threshold_days, const HybridOptions& options) {
    check_sample_count(job_log, kHybridBackupPeriods, "hybrid job log");
    if (tiering_threshold_days < 1) throw ConfigError("tiering threshold must be >= 1 day");
    validate(options.rates);
    const int horizon = kHybridBackupPeriods + 1;
    for (int p : {options.local_restore_period, options.archive_restore_period})
        if (p < 1 || p > horizon) throw ConfigError("restore period outside the model horizon");
    for (const auto& r : restore_samples)
        if (r.source_tier == SourceTier::Vault) throw ConfigError("hybrid model takes Local and Archive restores only");

    const auto& local = single_sample(restore_samples, SourceTier::Local);
    const auto& archive = single_sample(restore_samples, SourceTier::Archive);
    const auto summary = summarize_throughput(job_log);
    const double per_mb_local = restore_time_per_mb(local);
    const double per_mb_archive = restore_time_per_mb(archive);

    using namespace names;
    Model m("hybrid-basic", horizon, ModelKind::HybridBasic);
    m.set_exogenous("backup_data_mb", padded(job_log, horizon, &JobSample::data_mb));
    m.set_exogenous("backup_duration_s", padded(job_log, horizon, &JobSample::duration_s));
    m.note("tiering_threshold_days", std::to_string(tiering_threshold_days));
    m.note("restore_local", number_text(local.data_mb) + "/" + number_text(local.duration_s));
    m.note("restore_archive", number_text(archive.data_mb) + "/" + number_text(archive.duration_s));
    m.note("rates", number_text(options.rates.per_gb_month) + "/" + number_text(options.rates.per_10k_ingress_egress) +
                        "/" + number_text(options.rates.per_10k_listing));
    m.note("ops", number_text(options.transactions.ingress_egress_ops) + "/" +
                      number_text(options.transactions.listing_ops));
    m.note("restore_periods",
           std::to_string(options.local_restore_period) + "/" + std::to_string(options.archive_restore_period));

    m.add(ModelComponent::flow(kDailyBackup, "MB", input_value("backup_data_mb")).reading_inputs({"backup_data_mb"}));
    // A copy created at day d has been held p - d + 1 days at period p and
    // tiers once that exceeds the threshold.
    m.add(ModelComponent::flow(kTieringMove, "MB",
                               [tiering_threshold_days](const EvalContext& ctx) {
                                   return ctx.lagged(kDailyBackup, tiering_threshold_days);
                               })
              .reading_lagged({kDailyBackup}));
    m.add(ModelComponent::stock(kLocalStorage, "MB", 0.0, {kDailyBackup}, {kTieringMove}));
    m.add(ModelComponent::stock(kCloudTier, "MB", 0.0, {kTieringMove}, {}));
    m.add(ModelComponent::converter(kBackupTime, "s", input_value("backup_duration_s"))
              .reading_inputs({"backup_duration_s"}));
    m.add(ModelComponent::converter(kDailyThroughput, "MB/s", ratio_of_inputs("backup_data_mb", "backup_duration_s"))
              .reading_inputs({"backup_data_mb", "backup_duration_s"}));
    m.add(ModelComponent::converter(kRestoreDataLocal, "MB", at_period(options.local_restore_period, local.data_mb)));
    m.add(ModelComponent::converter(kRestoreTimeLocal, "s",
                                    at_period(options.local_restore_period, local.duration_s)));
    m.add(ModelComponent::converter(kRestoreDataArchive, "MB",
                                    at_period(options.archive_restore_period, archive.data_mb)));
    m.add(ModelComponent::converter(kRestoreTimeArchive, "s",
                                    at_period(options.archive_restore_period, archive.duration_s)));
    m.add(ModelComponent::converter(kAvgDailyThroughput, "MB/s", at_period(horizon, summary.mean_arithmetic)));
    m.add(ModelComponent::converter(kRestorePerMbLocal, "s/MB",
                                    at_period(options.local_restore_period, per_mb_local)));
    m.add(ModelComponent::converter(kRestorePerMbArchive, "s/MB",
                                    at_period(options.archive_restore_period, per_mb_archive)));
    m.add(ModelComponent::converter(
        kMonthlyServiceCost, "$",
        [rates = options.rates, ops = options.transactions](const EvalContext& ctx) {
            if (!ctx.is_final_period()) return 0.0;
            return hybrid_cloud_cost(mb_to_gb(ctx.value(kCloudTier)), ops, rates).total;
        },
        {kCloudTier}));

    m.rate_bindings = {
        {averages::kBackupThroughput, kAvgDailyThroughput, "BackupTimeTestData",
         {"Daily backup", Operation::Backup, RateKind::Throughput, summary.mean_arithmetic}},
        {averages::kRestorePerMbArchive, kRestorePerMbArchive, "RestoreTimeArchiveTestData",
         {"Restore ARCHIVE", Operation::Restore, RateKind::TimePerMb, per_mb_archive}},
        {averages::kRestorePerMbLocal, kRestorePerMbLocal, "RestoreTimeLocalTestData",
         {"Restore LOCAL", Operation::Restore, RateKind::TimePerMb, per_mb_local}},
    };
    m.test_data_cost = [rates = options.rates, ops = options.transactions](double test_data_mb) {
        return hybrid_cloud_cost(mb_to_gb(test_data_mb), ops, rates).total;
    };
    return m;
}

Model build_cloud_basic(std::span<const JobSample> job1_log, std::span<const JobSample> job2_log,
                        const RestoreSample& restore_sample, const CloudOptions& options) {
    check_sample_count(job1_log, kCloudBackupPeriods, "cloud job1 log");
    check_sample_count(job2_log, kCloudBackupPeriods, "cloud job2 log");
    if (restore_sample.source_tier != SourceTier::Vault) throw ConfigError("cloud model takes a Vault restore sample");
    validate(restore_sample);
    validate(options.rates);
    if (!(options.frontend_gb >= 0.0)) throw ConfigError("frontend_gb must be >= 0");
    const int horizon = kCloudBackupPeriods + 1;

    const auto job1 = summarize_throughput(job1_log);
    const auto job2 = summarize_throughput(job2_log);
    const double recovery = recovery_throughput(restore_sample);

    using namespace names;
    Model m("cloud-basic", horizon, ModelKind::CloudBasic);
    m.set_exogenous("job1_data_mb", padded(job1_log, horizon, &JobSample::data_mb));
    m.set_exogenous("job1_duration_s", padded(job1_log, horizon, &JobSample::duration_s));
    m.set_exogenous("job2_data_mb", padded(job2_log, horizon, &JobSample::data_mb));
    m.set_exogenous("job2_duration_s", padded(job2_log, horizon, &JobSample::duration_s));
    m.note("restore_vault", number_text(restore_sample.data_mb) + "/" + number_text(restore_sample.duration_s));
    m.note("frontend_gb", number_text(options.frontend_gb));
    std::string tiers;
    for (const auto& t : options.rates.tiers) tiers += number_text(t.up_to_gb) + ":" + number_text(t.fee) + ";";
    m.note("rates", number_text(options.rates.per_gb_month) + "/" + tiers + "/" +
                        number_text(options.rates.block_gb) + ":" + number_text(options.rates.block_fee));

    m.add(ModelComponent::converter(kJob1Data, "MB", input_value("job1_data_mb")).reading_inputs({"job1_data_mb"}));
    m.add(ModelComponent::converter(kJob1Time, "s", input_value("job1_duration_s"))
              .reading_inputs({"job1_duration_s"}));
    m.add(ModelComponent::converter(kJob1Throughput, "MB/s", ratio_of_inputs("job1_data_mb", "job1_duration_s"))
              .reading_inputs({"job1_data_mb", "job1_duration_s"}));
    m.add(ModelComponent::converter(kJob2Data, "MB", input_value("job2_data_mb")).reading_inputs({"job2_data_mb"}));
    m.add(ModelComponent::converter(kJob2Time, "s", input_value("job2_duration_s"))
              .reading_inputs({"job2_duration_s"}));
    m.add(ModelComponent::converter(kJob2Throughput, "MB/s", ratio_of_inputs("job2_data_mb", "job2_duration_s"))
              .reading_inputs({"job2_data_mb", "job2_duration_s"}));
    m.add(ModelComponent::flow(
        kDailyTransfer, "MB", [](const EvalContext& ctx) { return ctx.value(kJob1Data) + ctx.value(kJob2Data); },
        {kJob1Data, kJob2Data}));
    m.add(ModelComponent::stock(kRecoveryVault, "MB", 0.0, {kDailyTransfer}, {}));
    m.add(ModelComponent::converter(kRecoveryData, "MB", at_period(horizon, restore_sample.data_mb)));
    m.add(ModelComponent::converter(kRecoveryTime, "s", at_period(horizon, restore_sample.duration_s)));
    m.add(ModelComponent::converter(kAvgJob1Throughput, "MB/s", at_period(horizon, job1.mean_arithmetic)));
    m.add(ModelComponent::converter(kAvgJob2Throughput, "MB/s", at_period(horizon, job2.mean_arithmetic)));
    m.add(ModelComponent::converter(kRecoveryThroughput, "MB/s", at_period(horizon, recovery)));
    m.add(ModelComponent::converter(
        kMonthlyServiceCost, "$",
        [rates = options.rates, frontend = options.frontend_gb](const EvalContext& ctx) {
            if (!ctx.is_final_period()) return 0.0;
            return cloud_vault_cost(frontend, mb_to_gb(ctx.value(kRecoveryVault)), rates).total;
        },
        {kRecoveryVault}));

    m.rate_bindings = {
        {averages::kJob1Throughput, kAvgJob1Throughput, "BackupTimeJob1TestData",
         {"Backup job1", Operation::Backup, RateKind::Throughput, job1.mean_arithmetic}},
        {averages::kJob2Throughput, kAvgJob2Throughput, "BackupTimeJob2TestData",
         {"Backup job2", Operation::Backup, RateKind::Throughput, job2.mean_arithmetic}},
        {averages::kRecoveryThroughput, kRecoveryThroughput, "RecoveryTimeTestData",
         {"Recovery", Operation::Restore, RateKind::Throughput, recovery}},
    };
    // The test data is both the protected instance and what the vault stores.
    m.test_data_cost = [rates = options.rates](double test_data_mb) {
        const double gb = mb_to_gb(test_data_mb);
        return cloud_vault_cost(gb, gb, rates).total;
    };
    return m;
}

std::vector<Rate> effective_rates(const Model& model, const std::map<std::string, double>& supplied_averages) {
    std::set<std::string> known;
    for (const auto& b : model.rate_bindings) known.insert(b.key);
    for (const auto& [key, value] : supplied_averages) {
        if (!known.contains(key)) throw ConfigError("supplied average '" + key + "' does not apply to this model");
        if (!(value > 0.0)) throw ConfigError("supplied average '" + key + "' must be > 0");
    }
    std::vector<Rate> out;
    for (const auto& b : model.rate_bindings) {
        Rate r = b.rate;
        if (const auto it = supplied_averages.find(b.key); it != supplied_averages.end()) r.value = it->second;
        out.push_back(r);
    }
    return out;
}

Model extend_with_test_data(const Model& model, double test_data_mb,
                            const std::map<std::string, double>& supplied_averages) {
    ModelKind extended;
    switch (model.kind()) {
    case ModelKind::HybridBasic: extended = ModelKind::HybridExtended; break;
    case ModelKind::CloudBasic: extended = ModelKind::CloudExtended; break;
    case ModelKind::HybridExtended:
    case ModelKind::CloudExtended: throw ConfigError("model is already extended");
    default: throw ConfigError("only the hybrid and cloud basic models can be extended");
    }
    if (!(test_data_mb > 0.0)) throw ConfigError("test data must be > 0 MB");
    const auto rates = effective_rates(model, supplied_averages);

    Model m = with_kind(model, extended);
    m.test_data_mb = test_data_mb;
    m.note("test_data_mb", number_text(test_data_mb));
    for (const auto& [key, value] : supplied_averages) m.note("supplied." + key, number_text(value));

    using namespace names;
    m.add(ModelComponent::converter(kTestData, "MB", [test_data_mb](const EvalContext&) { return test_data_mb; }));
    for (std::size_t i = 0; i < m.rate_bindings.size(); ++i) {
        auto& binding = m.rate_bindings[i];
        const Rate rate = rates[i];
        const bool supplied = supplied_averages.contains(binding.key);
        // Reports wherever the source rate reports; a supplied average
        // replaces the value but keeps the period.
        m.add(ModelComponent::converter(
            binding.output, "h",
            [rate, supplied, source = binding.converter](const EvalContext& ctx) {
                const double computed = ctx.value(source);
                if (computed == 0.0) return 0.0;
                Rate r = rate;
                if (!supplied) r.value = computed;
                return seconds_to_hours(time_for(ctx.value(kTestData), r));
            },
            {kTestData, binding.converter}));
        binding.rate = rate;
    }
    m.add(ModelComponent::converter(
        kTestDataCost, "$",
        [cost = model.test_data_cost](const EvalContext& ctx) {
            return ctx.is_final_period() ? cost(ctx.value(kTestData)) : 0.0;
        },
        {kTestData}));
    return m;
}

} // namespace drsim
