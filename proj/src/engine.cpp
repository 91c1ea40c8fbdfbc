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

#include "drsim/engine.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <queue>
#include <unordered_map>
#include <unordered_set>

#include "drsim/errors.hpp"

namespace drsim {

std::string to_string(ComponentKind kind) {
    switch (kind) {
    case ComponentKind::Stock: return "stock";
    case ComponentKind::Flow: return "flow";
    case ComponentKind::Converter: return "converter";
    }
    return "?";
}

std::string to_string(ModelKind kind) {
    switch (kind) {
    case ModelKind::Generic: return "generic";
    case ModelKind::HybridBasic: return "hybrid-basic";
    case ModelKind::CloudBasic: return "cloud-basic";
    case ModelKind::HybridExtended: return "hybrid-extended";
    case ModelKind::CloudExtended: return "cloud-extended";
    }
    return "?";
}

ModelComponent ModelComponent::stock(std::string name, std::string unit, double initial,
                                     std::vector<std::string> inflows, std::vector<std::string> outflows) {
    ModelComponent c;
    c.name = std::move(name);
    c.kind = ComponentKind::Stock;
    c.unit = std::move(unit);
    c.initial = initial;
    c.inflows = std::move(inflows);
    c.outflows = std::move(outflows);
    return c;
}

ModelComponent ModelComponent::flow(std::string name, std::string unit, Expression expression,
                                    std::vector<std::string> depends_on) {
    ModelComponent c;
    c.name = std::move(name);
    c.kind = ComponentKind::Flow;
    c.unit = std::move(unit);
    c.expression = std::move(expression);
    c.depends_on = std::move(depends_on);
    return c;
}

ModelComponent ModelComponent::converter(std::string name, std::string unit, Expression expression,
                                         std::vector<std::string> depends_on) {
    auto c = flow(std::move(name), std::move(unit), std::move(expression), std::move(depends_on));
    c.kind = ComponentKind::Converter;
    return c;
}

ModelComponent& ModelComponent::reading_inputs(std::vector<std::string> names) {
    inputs = std::move(names);
    return *this;
}

ModelComponent& ModelComponent::reading_lagged(std::vector<std::string> names) {
    lagged = std::move(names);
    return *this;
}

Model::Model(std::string identifier, int horizon, ModelKind kind)
    : identifier_(std::move(identifier)), horizon_(horizon), kind_(kind) {
    if (horizon_ < 1) throw ModelError("model horizon must be >= 1");
}

Model& Model::add(ModelComponent component) {
    if (component.name.empty()) throw ModelError("component name must not be empty");
    if (has_component(component.name)) throw ModelError("duplicate component '" + component.name + "'");
    components_.push_back(std::move(component));
    return *this;
}

Model& Model::set_exogenous(const std::string& name, std::vector<double> series) {
    exogenous_[name] = std::move(series);
    return *this;
}

Model& Model::note(const std::string& key, const std::string& value) {
    notes_.emplace_back(key, value);
    return *this;
}

bool Model::has_component(std::string_view name) const {
    return std::any_of(components_.begin(), components_.end(), [&](const auto& c) { return c.name == name; });
}

const ModelComponent& Model::component(std::string_view name) const {
    for (const auto& c : components_)
        if (c.name == name) return c;
    throw ModelError("unknown component '" + std::string(name) + "'");
}

Model with_kind(Model model, ModelKind kind) {
    model.kind_ = kind;
    return model;
}

namespace {

class Fnv1a {
public:
    void bytes(const void* data, std::size_t n) {
        const auto* p = static_cast<const unsigned char*>(data);
        for (std::size_t i = 0; i < n; ++i) {
            hash_ ^= p[i];
            hash_ *= 1099511628211ULL;
        }
    }
    void text(std::string_view s) {
        bytes(s.data(), s.size());
        bytes("\0", 1);
    }
    void number(double v) {
        const auto bits = std::bit_cast<std::uint64_t>(v);
        bytes(&bits, sizeof bits);
    }
    void list(const std::vector<std::string>& items) {
        number(static_cast<double>(items.size()));
        for (const auto& s : items) text(s);
    }
    std::uint64_t value() const { return hash_; }

private:
    std::uint64_t hash_ = 14695981039346656037ULL;
};

} // namespace

std::uint64_t Model::digest() const {
    Fnv1a h;
    h.text(identifier_);
    h.text(to_string(kind_));
    h.number(horizon_);
    for (const auto& c : components_) {
        h.text(c.name);
        h.text(to_string(c.kind));
        h.text(c.unit);
        h.list(c.depends_on);
        h.list(c.lagged);
        h.list(c.inputs);
        h.number(c.initial);
        h.list(c.inflows);
        h.list(c.outflows);
    }
    for (const auto& [name, series] : exogenous_) {
        h.text(name);
        h.number(static_cast<double>(series.size()));
        for (double v : series) h.number(v);
    }
    for (const auto& [k, v] : notes_) {
        h.text(k);
        h.text(v);
    }
    return h.value();
}

// Holds the state of one run; EvalContext reads through it.
class Evaluator {
public:
    explicit Evaluator(const Model& model) : model_(model) {
        const auto& comps = model.components();
        for (std::size_t i = 0; i < comps.size(); ++i) index_[comps[i].name] = i;
        validate_references();
        order_ = topological_order();
        values_.assign(comps.size(), std::vector<double>(static_cast<std::size_t>(model.horizon()), 0.0));
    }

    RunResult run() {
        const auto& comps = model_.components();
        RunResult result;
        result.model_id = model_.identifier();
        result.digest = model_.digest();
        result.horizon = model_.horizon();
        for (const auto& [name, series] : model_.exogenous()) {
            if (static_cast<int>(series.size()) < model_.horizon())
                result.warnings.push_back("exogenous series '" + name + "' has " + std::to_string(series.size()) +
                                          " of " + std::to_string(model_.horizon()) +
                                          " periods; missing periods read as 0");
        }

        for (int p = 1; p <= model_.horizon(); ++p) {
            const auto slot = static_cast<std::size_t>(p - 1);
            for (std::size_t i : order_) {
                const auto& c = comps[i];
                double v;
                if (c.kind == ComponentKind::Stock) {
                    v = (p == 1 ? c.initial : values_[i][slot - 1]);
                    for (const auto& f : c.inflows) v += values_[index_.at(f)][slot];
                    for (const auto& f : c.outflows) v -= values_[index_.at(f)][slot];
                } else {
                    v = c.expression(EvalContext(*this, i, p));
                }
                values_[i][slot] = v;
            }
        }

        for (std::size_t i = 0; i < comps.size(); ++i) {
            result.names.push_back(comps[i].name);
            result.units[comps[i].name] = comps[i].unit;
            result.series[comps[i].name] = values_[i];
        }
        return result;
    }

    const Model& model() const { return model_; }

    double current(std::size_t reader, std::string_view name, int period) const {
        const auto& allowed = model_.components()[reader].depends_on;
        if (std::find(allowed.begin(), allowed.end(), name) == allowed.end())
            throw ModelError("component '" + model_.components()[reader].name + "' reads '" + std::string(name) +
                             "' without declaring the dependency");
        return values_[index_.at(std::string(name))][static_cast<std::size_t>(period - 1)];
    }

    double lagged(std::size_t reader, std::string_view name, int period, int lag) const {
        const auto& allowed = model_.components()[reader].lagged;
        if (std::find(allowed.begin(), allowed.end(), name) == allowed.end())
            throw ModelError("component '" + model_.components()[reader].name + "' reads lagged '" +
                             std::string(name) + "' without declaring it");
        if (lag < 1) throw ModelError("lag must be >= 1");
        const std::size_t idx = index_.at(std::string(name));
        const int at = period - lag;
        if (at < 1) {
            const auto& c = model_.components()[idx];
            return c.kind == ComponentKind::Stock ? c.initial : 0.0;
        }
        return values_[idx][static_cast<std::size_t>(at - 1)];
    }

    double input(std::size_t reader, std::string_view name, int period) const {
        const auto& allowed = model_.components()[reader].inputs;
        if (std::find(allowed.begin(), allowed.end(), name) == allowed.end())
            throw ModelError("component '" + model_.components()[reader].name + "' reads input '" +
                             std::string(name) + "' without declaring it");
        const auto& series = model_.exogenous().at(std::string(name));
        const auto slot = static_cast<std::size_t>(period - 1);
        return slot < series.size() ? series[slot] : 0.0;
    }

private:
    void validate_references() const {
        for (const auto& c : model_.components()) {
            auto require = [&](const std::string& ref, const char* role) {
                if (!index_.contains(ref))
                    throw ModelError("component '" + c.name + "' references unknown " + role + " '" + ref + "'");
            };
            for (const auto& d : c.depends_on) require(d, "component");
            for (const auto& d : c.lagged) require(d, "component");
            for (const auto& in : c.inputs)
                if (!model_.exogenous().contains(in))
                    throw ModelError("component '" + c.name + "' reads unknown input series '" + in + "'");
            if (c.kind == ComponentKind::Stock) {
                if (!c.depends_on.empty() || c.expression)
                    throw ModelError("stock '" + c.name + "' may only change through its flows");
                for (const auto& f : c.inflows) require(f, "flow");
                for (const auto& f : c.outflows) require(f, "flow");
                for (const auto* flows : {&c.inflows, &c.outflows})
                    for (const auto& f : *flows)
                        if (model_.components()[index_.at(f)].kind != ComponentKind::Flow)
                            throw ModelError("stock '" + c.name + "' is connected to non-flow '" + f + "'");
            } else {
                if (!c.expression) throw ModelError("component '" + c.name + "' has no expression");
                if (!c.inflows.empty() || !c.outflows.empty())
                    throw ModelError("only stocks take inflows/outflows ('" + c.name + "')");
            }
        }
    }

    std::vector<std::string> edges_into(const ModelComponent& c) const {
        if (c.kind != ComponentKind::Stock) return c.depends_on;
        std::vector<std::string> e = c.inflows;
        e.insert(e.end(), c.outflows.begin(), c.outflows.end());
        return e;
    }

    // Kahn's algorithm; ties broken by declaration order so runs are
    // reproducible regardless of container iteration order.
    std::vector<std::size_t> topological_order() const {
        const auto& comps = model_.components();
        const std::size_t n = comps.size();
        std::vector<std::size_t> pending(n, 0);
        std::vector<std::vector<std::size_t>> dependents(n);
        for (std::size_t i = 0; i < n; ++i) {
            std::unordered_set<std::string> seen;
            for (const auto& d : edges_into(comps[i])) {
                if (!seen.insert(d).second) continue;
                dependents[index_.at(d)].push_back(i);
                ++pending[i];
            }
        }
        std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
        for (std::size_t i = 0; i < n; ++i)
            if (pending[i] == 0) ready.push(i);
        std::vector<std::size_t> order;
        order.reserve(n);
        while (!ready.empty()) {
            const std::size_t i = ready.top();
            ready.pop();
            order.push_back(i);
            for (std::size_t j : dependents[i])
                if (--pending[j] == 0) ready.push(j);
        }
        if (order.size() != n) {
            std::string cycle;
            for (std::size_t i = 0; i < n; ++i)
                if (pending[i] != 0) cycle += (cycle.empty() ? "" : ", ") + comps[i].name;
            throw ModelError("cyclic dependencies among: " + cycle);
        }
        return order;
    }

    const Model& model_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<std::size_t> order_;
    std::vector<std::vector<double>> values_;
};

int EvalContext::horizon() const { return evaluator_.model().horizon(); }

double EvalContext::value(std::string_view name) const { return evaluator_.current(component_, name, period_); }

double EvalContext::lagged(std::string_view name, int lag) const {
    return evaluator_.lagged(component_, name, period_, lag);
}

double EvalContext::input(std::string_view name) const { return evaluator_.input(component_, name, period_); }

const std::vector<double>& RunResult::at(const std::string& name) const {
    const auto it = series.find(name);
    if (it == series.end()) throw ModelError("run result has no series '" + name + "'");
    return it->second;
}

double RunResult::at(const std::string& name, int period) const {
    const auto& s = at(name);
    if (period < 1 || period > static_cast<int>(s.size()))
        throw ModelError("period " + std::to_string(period) + " outside 1.." + std::to_string(s.size()));
    return s[static_cast<std::size_t>(period - 1)];
}

RunResult run(const Model& model) { return Evaluator(model).run(); }

} // namespace drsim
