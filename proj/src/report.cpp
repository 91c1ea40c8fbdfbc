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

#include "drsim/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "drsim/errors.hpp"
#include "drsim/io.hpp"
#include "drsim/models.hpp"

namespace drsim {
namespace {

std::string pad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string unit_of(RateKind kind) { return kind == RateKind::Throughput ? "MB/s" : "s/MB"; }

std::string rate_label(const Rate& r) { return r.label + " (" + unit_of(r.kind) + ")"; }

} // namespace

std::string ReportTable::render(TableFormat format) const {
    std::ostringstream os;
    if (format == TableFormat::Csv) {
        os << "section,metric";
        for (const auto& c : columns) os << ',' << csv_cell(c);
        os << '\n';
        for (const auto& section : sections)
            for (const auto& row : section.rows) {
                os << csv_cell(section.title) << ',' << csv_cell(row.label);
                for (const auto& cell : row.cells) os << ',' << csv_cell(cell);
                os << '\n';
            }
        return os.str();
    }

    std::size_t label_width = std::string("Metric").size();
    std::vector<std::size_t> widths;
    for (const auto& c : columns) widths.push_back(c.size());
    for (const auto& section : sections)
        for (const auto& row : section.rows) {
            label_width = std::max(label_width, row.label.size() + 2);
            for (std::size_t i = 0; i < row.cells.size(); ++i)
                widths[i] = std::max(widths[i], std::max<std::size_t>(row.cells[i].size(), 1));
        }

    os << pad("Metric", label_width);
    for (std::size_t i = 0; i < columns.size(); ++i) os << "  " << pad(columns[i], widths[i]);
    os << '\n';
    for (const auto& section : sections) {
        os << '[' << section.title << "]\n";
        for (const auto& row : section.rows) {
            std::string line = pad("  " + row.label, label_width);
            for (std::size_t i = 0; i < row.cells.size(); ++i)
                line += "  " + pad(row.cells[i].empty() ? "/" : row.cells[i], widths[i]);
            while (!line.empty() && line.back() == ' ') line.pop_back();
            os << line << '\n';
        }
    }
    return os.str();
}

double reported_value(const RunResult& run, const std::string& name) {
    const auto& s = run.at(name);
    for (auto it = s.rbegin(); it != s.rend(); ++it)
        if (*it != 0.0) return *it;
    return 0.0;
}

std::string render_trajectories(const RunResult& run) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"Component"});
    for (int p = 1; p <= run.horizon; ++p) rows.front().push_back(std::to_string(p));
    for (const auto& name : run.names) {
        const auto& unit = run.units.at(name);
        std::vector<std::string> row{unit.empty() ? name : name + " (" + unit + ")"};
        for (double v : run.at(name)) row.push_back(sig6(v));
        rows.push_back(std::move(row));
    }
    std::vector<std::size_t> widths(rows.front().size(), 0);
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], row[i].size());
    std::ostringstream os;
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) line += (i ? "  " : "") + pad(row[i], widths[i]);
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << '\n';
    }
    return os.str();
}

namespace {

std::vector<std::pair<std::string, std::string>> derived_components(SystemKind kind) {
    using namespace names;
    if (kind == SystemKind::Hybrid)
        return {{kAvgDailyThroughput, "Average daily data throughput (MB/s)"},
                {kRestorePerMbLocal, "Restore time per MB LOCAL (s/MB)"},
                {kRestorePerMbArchive, "Restore time per MB ARCHIVE (s/MB)"},
                {kMonthlyServiceCost, "Total service cost/month ($)"}};
    return {{kAvgJob1Throughput, "Average job1 data throughput (MB/s)"},
            {kAvgJob2Throughput, "Average job2 data throughput (MB/s)"},
            {kRecoveryThroughput, "Recovery throughput (MB/s)"},
            {kMonthlyServiceCost, "Total service cost/month ($)"}};
}

void write_pairs(std::ostringstream& os, const std::vector<std::pair<std::string, std::string>>& pairs) {
    std::size_t width = 0;
    for (const auto& [k, v] : pairs) width = std::max(width, k.size());
    for (const auto& [k, v] : pairs) os << "  " << pad(k, width) << "  " << v << '\n';
}

} // namespace

std::string render_simulation(const SystemEvaluation& e) {
    std::ostringstream os;
    os << "Scenario: " << e.name << " (" << to_string(e.kind) << ")\n";
    os << "Model: " << e.basic_run.model_id << ", " << e.basic_run.horizon << " periods\n\n";
    os << render_trajectories(e.basic_run) << '\n';
    os << "Derived variables\n";
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& [name, label] : derived_components(e.kind))
        pairs.emplace_back(label, sig6(reported_value(e.basic_run, name)));
    write_pairs(os, pairs);
    for (const auto& w : e.basic_run.warnings) os << "warning: " << w << '\n';
    return os.str();
}

std::string render_projection(const SystemEvaluation& e) {
    if (!e.projection) throw ConfigError("no test data volume: set test_data_mb or pass --test-data-mb");
    std::ostringstream os;
    os << "Scenario: " << e.name << " (" << to_string(e.kind) << ")\n";
    os << "Test data: " << sig6(e.projection->test_data_mb) << " MB\n\nRates\n";
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& r : e.rates) pairs.emplace_back(rate_label(r), sig6(r.value));
    write_pairs(os, pairs);
    if (!e.supplied.empty()) {
        os << "  supplied averages:";
        for (const auto& k : e.supplied) os << ' ' << k;
        os << '\n';
    }
    os << "\nProjected times\n";
    pairs.clear();
    for (const auto& t : e.projection->times) pairs.emplace_back(t.basis.label + " time (h)", sig6(t.hours()));
    if (e.test_data_cost) pairs.emplace_back("Total service cost/month ($)", sig6(e.test_data_cost->total));
    write_pairs(os, pairs);
    return os.str();
}

std::string render_cost(const SystemEvaluation& e) {
    std::ostringstream os;
    os << "Scenario: " << e.name << " (" << to_string(e.kind) << ")\n\nRates\n";
    std::vector<std::pair<std::string, std::string>> pairs;
    if (const auto* o = std::get_if<ObjectStoreRates>(&e.pricing)) {
        pairs = {{"Cost per used GB storage/month", sig6(o->per_gb_month)},
                 {"Cost per 10K ingress/egress operations", sig6(o->per_10k_ingress_egress)},
                 {"Cost per 10K listing operations", sig6(o->per_10k_listing)}};
    } else {
        const auto& v = std::get<VaultRates>(e.pricing);
        pairs.emplace_back("Cost per used GB storage/month", sig6(v.per_gb_month));
        double lower = 0.0;
        for (const auto& t : v.tiers) {
            pairs.emplace_back("Instance fee, frontend " + sig6(lower) + "-" + sig6(t.up_to_gb) + " GB", sig6(t.fee));
            lower = t.up_to_gb;
        }
        pairs.emplace_back("Instance fee above " + sig6(lower) + " GB, per started " + sig6(v.block_gb) + " GB",
                           sig6(v.block_fee));
    }
    write_pairs(os, pairs);

    auto breakdown = [&](const std::string& title, const CostBreakdown& c) {
        os << '\n' << title << '\n';
        write_pairs(os, {{"Storage ($)", sig6(c.storage_cost)},
                         {"Transactions ($)", sig6(c.transaction_cost)},
                         {"Instance ($)", sig6(c.instance_cost)},
                         {"Total/month ($)", sig6(c.total)}});
    };
    breakdown("Basic model", e.basic_cost);
    if (e.test_data_cost && e.projection)
        breakdown("Test data (" + sig6(e.projection->test_data_mb) + " MB)", *e.test_data_cost);
    return os.str();
}

std::string render_reliability(const SystemEvaluation& e) {
    std::ostringstream os;
    const auto& r = e.reliability;
    os << "Scenario: " << e.name << "\nMission time: " << sig6(r.mission_h) << " h";
    if (r.mission_h == kReconciledMissionHours) os << " (reconciled basis)";
    else if (r.mission_h == kStatedAnalysisHours) os << " (stated 15-day analysis period)";
    os << "\n\n";
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& c : r.components) {
        std::string v = sig6(c.reliability) + "  (MTBF " + sig6(c.mtbf_h) + " h";
        if (c.from_sla) v += ", from SLA";
        pairs.emplace_back("Reliability of " + c.name, v + ")");
    }
    pairs.emplace_back("SYSTEM RELIABILITY", sig6(r.system));
    write_pairs(os, pairs);
    return os.str();
}

std::string render_compliance(const ComplianceReport& report) {
    std::ostringstream os;
    os << "Scenario: " << report.scenario << '\n';
    std::vector<std::vector<std::string>> rows{{"Metric", "Measured", "Target", "Status"}};
    for (const auto& v : report.verdicts) {
        const std::string rel = v.relation == Relation::AtMost ? "<= " : ">= ";
        rows.push_back({v.metric, v.measured ? sig6(v.measured->value) + " " + to_string(v.measured->unit) : "-",
                        v.target ? rel + sig6(v.target->value) + " " + to_string(v.target->unit) : "-",
                        to_string(v.status)});
    }
    std::vector<std::size_t> widths(4, 0);
    for (const auto& row : rows)
        for (std::size_t i = 0; i < 4; ++i) widths[i] = std::max(widths[i], row[i].size());
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t i = 0; i < 4; ++i) line += "  " + pad(row[i], widths[i]);
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << '\n';
    }
    if (report.mtd_hours) os << "MTD (slowest restore + WRT): " << sig6(*report.mtd_hours) << " h\n";
    os << "Summary: " << report.count(Status::Pass) << " pass, " << report.count(Status::Fail) << " fail, "
       << report.count(Status::NotEvaluable) << " not evaluable\n";
    return os.str();
}

ReportTable comparison_table(std::span<const SystemEvaluation> systems) {
    if (systems.empty()) throw ConfigError("comparison needs at least one system");
    const auto& first = systems.front();
    for (const auto& e : systems) {
        const bool same = e.projection.has_value() == first.projection.has_value() &&
                          (!e.projection || e.projection->test_data_mb == first.projection->test_data_mb);
        if (!same) throw ConfigError("systems must be compared on the same test data volume");
    }

    ReportTable t;
    for (const auto& e : systems) t.columns.push_back(e.name);
    const std::size_t n = systems.size();

    // One row per distinct label, cells filled where a system has it.
    auto add_rows = [&](ReportTable::Section& section, auto&& items_of) {
        for (std::size_t s = 0; s < n; ++s)
            for (const auto& [label, value] : items_of(systems[s])) {
                auto it = std::find_if(section.rows.begin(), section.rows.end(),
                                       [&](const ReportTable::Row& r) { return r.label == label; });
                if (it == section.rows.end()) {
                    section.rows.push_back({label, std::vector<std::string>(n)});
                    it = std::prev(section.rows.end());
                }
                it->cells[s] = value;
            }
    };
    using Items = std::vector<std::pair<std::string, std::string>>;

    ReportTable::Section transfer{"Backup data transfer", {}};
    add_rows(transfer, [](const SystemEvaluation& e) {
        Items items;
        for (const auto& r : e.rates)
            if (r.operation == Operation::Backup) items.emplace_back(rate_label(r), sig6(r.value));
        return items;
    });
    t.sections.push_back(std::move(transfer));

    ReportTable::Section recovery{"Recovery process", {}};
    add_rows(recovery, [](const SystemEvaluation& e) {
        Items items;
        for (const auto& r : e.rates)
            if (r.operation == Operation::Restore) items.emplace_back(rate_label(r), sig6(r.value));
        return items;
    });
    t.sections.push_back(std::move(recovery));

    if (first.projection) {
        ReportTable::Section times{"Projected times for " + sig6(first.projection->test_data_mb) + " MB", {}};
        add_rows(times, [](const SystemEvaluation& e) {
            Items items;
            for (const auto& pt : e.projection->times) items.emplace_back(pt.basis.label + " time (h)", sig6(pt.hours()));
            return items;
        });
        t.sections.push_back(std::move(times));
    }

    ReportTable::Section cost{"Monthly cost", {}};
    add_rows(cost, [](const SystemEvaluation& e) {
        Items items;
        if (const auto* o = std::get_if<ObjectStoreRates>(&e.pricing)) {
            items.emplace_back("Cost per used GB storage/month ($)", sig6(o->per_gb_month));
            items.emplace_back("Cost per 10K ingress/egress operations ($)", sig6(o->per_10k_ingress_egress));
            items.emplace_back("Cost per 10K listing operations ($)", sig6(o->per_10k_listing));
        } else {
            const auto& v = std::get<VaultRates>(e.pricing);
            items.emplace_back("Cost per server instance/month ($)", sig6(v.block_fee));
            items.emplace_back("Cost per used GB storage/month ($)", sig6(v.per_gb_month));
        }
        items.emplace_back("Total cost, basic model ($/month)", sig6(e.basic_cost.total));
        if (e.test_data_cost) items.emplace_back("Total cost for test data ($/month)", sig6(e.test_data_cost->total));
        return items;
    });
    const std::vector<std::string> cost_order{"Cost per server instance/month ($)",
                                              "Cost per used GB storage/month ($)",
                                              "Cost per 10K ingress/egress operations ($)",
                                              "Cost per 10K listing operations ($)",
                                              "Total cost, basic model ($/month)",
                                              "Total cost for test data ($/month)"};
    std::stable_sort(cost.rows.begin(), cost.rows.end(), [&](const auto& a, const auto& b) {
        return std::find(cost_order.begin(), cost_order.end(), a.label) <
               std::find(cost_order.begin(), cost_order.end(), b.label);
    });
    t.sections.push_back(std::move(cost));

    ReportTable::Section reliability{"Reliability", {}};
    add_rows(reliability, [](const SystemEvaluation& e) {
        Items items;
        for (const auto& c : e.reliability.components) items.emplace_back("Reliability of " + c.name, sig6(c.reliability));
        items.emplace_back("System reliability", sig6(e.reliability.system));
        return items;
    });
    t.sections.push_back(std::move(reliability));

    ReportTable::Section compliance{"BIA compliance", {}};
    add_rows(compliance, [](const SystemEvaluation& e) {
        Items items;
        for (const auto& v : e.compliance.verdicts) items.emplace_back(v.metric, to_string(v.status));
        return items;
    });
    t.sections.push_back(std::move(compliance));
    return t;
}

std::string render_comparison(std::span<const SystemEvaluation> systems, TableFormat format) {
    return comparison_table(systems).render(format);
}

} // namespace drsim
