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

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "drsim/model_core.hpp"

namespace drsim {

enum class ComponentKind { Stock, Flow, Converter };
std::string to_string(ComponentKind kind);

class EvalContext;
using Expression = std::function<double(const EvalContext&)>;

/// A named element of a stock-and-flow model.
///
/// Flows and converters compute their value from an expression. The
/// expression may read same-period values only of the components listed
/// in `depends_on` (these form the evaluation graph), values of earlier
/// periods of any component listed in `lagged`, and exogenous series
/// listed in `inputs`. A stock's value at period p is its value at p-1
/// plus its inflows minus its outflows at p; reading a stock from
/// `depends_on` yields that updated value.
struct ModelComponent {
    std::string name;
    ComponentKind kind = ComponentKind::Converter;
    std::string unit;
    Expression expression;
    std::vector<std::string> depends_on;
    std::vector<std::string> lagged;
    std::vector<std::string> inputs;
    double initial = 0.0;
    std::vector<std::string> inflows;
    std::vector<std::string> outflows;

    static ModelComponent stock(std::string name, std::string unit, double initial,
                                std::vector<std::string> inflows, std::vector<std::string> outflows);
    static ModelComponent flow(std::string name, std::string unit, Expression expression,
                               std::vector<std::string> depends_on = {});
    static ModelComponent converter(std::string name, std::string unit, Expression expression,
                                    std::vector<std::string> depends_on = {});

    ModelComponent& reading_inputs(std::vector<std::string> names);
    ModelComponent& reading_lagged(std::vector<std::string> names);
};

/// Values visible to one expression at one period.
class EvalContext {
public:
    int period() const { return period_; }
    int horizon() const;
    bool is_final_period() const { return period_ == horizon(); }

    /// Same-period value; `name` must be in the component's depends_on.
    double value(std::string_view name) const;
    /// Value `lag` periods back (lag >= 1). Before period 1 a stock reads
    /// its initial value and everything else reads zero.
    double lagged(std::string_view name, int lag) const;
    /// Exogenous value at the current period; zero when the series is short.
    double input(std::string_view name) const;

private:
    friend class Evaluator;
    EvalContext(const class Evaluator& evaluator, std::size_t component, int period)
        : evaluator_(evaluator), component_(component), period_(period) {}

    const class Evaluator& evaluator_;
    std::size_t component_;
    int period_;
};

enum class ModelKind { Generic, HybridBasic, CloudBasic, HybridExtended, CloudExtended };
std::string to_string(ModelKind kind);

/// A rate converter that an extended model projects test data through.
struct RateBinding {
    std::string key;        // override key accepted in supplied averages
    std::string converter;  // basic-model converter carrying the rate
    std::string output;     // extended-model converter, hours
    Rate rate;              // value computed from the basic model
};

/// Immutable once built; safe to run from several threads at once.
class Model {
public:
    Model(std::string identifier, int horizon, ModelKind kind = ModelKind::Generic);

    /// Throws ModelError on a duplicate name.
    Model& add(ModelComponent component);
    Model& set_exogenous(const std::string& name, std::vector<double> series);
    /// Appended to the configuration digest; builders record parameters here.
    Model& note(const std::string& key, const std::string& value);

    const std::string& identifier() const { return identifier_; }
    int horizon() const { return horizon_; }
    ModelKind kind() const { return kind_; }
    const std::vector<ModelComponent>& components() const { return components_; }
    const std::map<std::string, std::vector<double>>& exogenous() const { return exogenous_; }
    bool has_component(std::string_view name) const;
    const ModelComponent& component(std::string_view name) const;

    /// FNV-1a digest of structure, exogenous data and builder notes.
    std::uint64_t digest() const;

    // Builder metadata consumed by extend_with_test_data.
    std::vector<RateBinding> rate_bindings;
    std::function<double(double test_data_mb)> test_data_cost;
    double test_data_mb = 0.0;

private:
    friend Model with_kind(Model model, ModelKind kind);

    std::string identifier_;
    int horizon_;
    ModelKind kind_;
    std::vector<ModelComponent> components_;
    std::map<std::string, std::vector<double>> exogenous_;
    std::vector<std::pair<std::string, std::string>> notes_;
};

Model with_kind(Model model, ModelKind kind);

struct RunResult {
    std::string model_id;
    std::uint64_t digest = 0;
    int horizon = 0;
    std::vector<std::string> names;  // declaration order
    std::map<std::string, std::string> units;
    std::map<std::string, std::vector<double>> series;  // index 0 is period 1
    std::vector<std::string> warnings;

    const std::vector<double>& at(const std::string& name) const;
    double at(const std::string& name, int period) const;
    double final(const std::string& name) const { return at(name, horizon); }

    friend bool operator==(const RunResult&, const RunResult&) = default;
};

/// Deterministic evaluation of every period in dependency order.
/// Throws ModelError for unknown references, cycles and malformed stocks.
RunResult run(const Model& model);

} // namespace drsim
