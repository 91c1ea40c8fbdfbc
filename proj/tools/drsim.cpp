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

// Command-line front end: thin wrappers over the library.
//
// Exit codes: 0 success, 1 invalid input or configuration, 2 when
// bia-check finds a failing verdict.

#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "drsim/errors.hpp"
#include "drsim/report.hpp"
#include "drsim/scenario.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitNonCompliant = 2;

drsim::SystemEvaluation evaluate_file(const std::string& path, std::optional<double> test_data_mb) {
    return drsim::evaluate_scenario(drsim::load_scenario(path), test_data_mb);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Disaster-recovery performability toolkit"};
    app.require_subcommand(1);

    std::string scenario;
    std::vector<std::string> scenarios;
    std::optional<double> test_data_mb;
    std::vector<std::string> components;
    std::string out_path;
    bool csv = false;
    bool extended = false;

    auto* simulate = app.add_subcommand("simulate", "Run the basic model and print trajectories and derived variables");
    simulate->add_option("scenario", scenario, "Scenario file")->required();

    auto* project = app.add_subcommand("project", "Project backup and restore times for a test data volume");
    project->add_option("scenario", scenario, "Scenario file")->required();
    project->add_option("--test-data-mb", test_data_mb, "Test data volume in MB (overrides the scenario)");

    auto* cost = app.add_subcommand("cost", "Monthly cloud service cost");
    cost->add_option("scenario", scenario, "Scenario file")->required();
    cost->add_option("--test-data-mb", test_data_mb, "Test data volume in MB (overrides the scenario)");

    auto* reliability = app.add_subcommand("reliability", "Series reliability of the protection concept");
    reliability->add_option("scenario", scenario, "Scenario file")->required();

    auto* bia = app.add_subcommand("bia-check", "Check projected times against BIA targets");
    bia->add_option("scenario", scenario, "Scenario file")->required();
    bia->add_option("--test-data-mb", test_data_mb, "Test data volume in MB (overrides the scenario)");

    auto* compare = app.add_subcommand("compare", "Side-by-side comparison of several systems");
    compare->add_option("scenarios", scenarios, "Scenario files")->required();
    compare->add_option("--test-data-mb", test_data_mb, "Test data volume in MB (overrides the scenarios)");
    compare->add_flag("--csv", csv, "Emit CSV instead of an aligned table");

    auto* plot = app.add_subcommand("plot", "Write an SVG chart of model trajectories");
    plot->add_option("scenario", scenario, "Scenario file")->required();
    plot->add_option("--component", components, "Component to draw (repeatable)")->required();
    plot->add_option("--out", out_path, "Output SVG path")->required();
    plot->add_flag("--extended", extended, "Plot the extended model run");

    auto* config = app.add_subcommand("config", "Print the scenario with all defaults applied");
    config->add_option("scenario", scenario, "Scenario file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (*simulate) {
            std::cout << drsim::render_simulation(evaluate_file(scenario, std::nullopt));
        } else if (*project) {
            std::cout << drsim::render_projection(evaluate_file(scenario, test_data_mb));
        } else if (*cost) {
            std::cout << drsim::render_cost(evaluate_file(scenario, test_data_mb));
        } else if (*reliability) {
            std::cout << drsim::render_reliability(evaluate_file(scenario, std::nullopt));
        } else if (*bia) {
            const auto e = evaluate_file(scenario, test_data_mb);
            std::cout << drsim::render_compliance(e.compliance);
            if (e.compliance.any_failed()) return kExitNonCompliant;
        } else if (*compare) {
            // Scenarios are independent; results are collected in argument order.
            std::vector<std::future<drsim::SystemEvaluation>> pending;
            for (const auto& path : scenarios)
                pending.push_back(std::async(std::launch::async, evaluate_file, path, test_data_mb));
            std::vector<drsim::SystemEvaluation> systems;
            for (auto& f : pending) systems.push_back(f.get());
            std::cout << drsim::render_comparison(systems, csv ? drsim::TableFormat::Csv : drsim::TableFormat::Text);
        } else if (*plot) {
            const auto e = evaluate_file(scenario, std::nullopt);
            if (extended && !e.extended_run) throw drsim::ConfigError("scenario has no test data to extend with");
            drsim::emit_plot(extended ? *e.extended_run : e.basic_run, components, out_path);
            std::cout << "wrote " << out_path << '\n';
        } else if (*config) {
            std::cout << drsim::serialize_scenario(drsim::load_scenario(scenario).scenario);
        }
    } catch (const drsim::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
    return kExitOk;
}
