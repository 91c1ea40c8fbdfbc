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

#include "drsim/engine.hpp"
#include "drsim/errors.hpp"

namespace drsim {
namespace {

Expression constant(double v) {
    return [v](const EvalContext&) { return v; };
}

TEST(Engine, UnitAccumulation) {
    Model m("acc", 5);
    m.add(ModelComponent::flow("in", "MB", constant(1.0)));
    m.add(ModelComponent::stock("level", "MB", 0.0, {"in"}, {}));
    const auto r = run(m);
    EXPECT_EQ(r.at("level"), (std::vector<double>{1, 2, 3, 4, 5}));
    EXPECT_EQ(r.horizon, 5);
}

TEST(Engine, BalancedFlowsConserveInitialValue) {
    Model m("balanced", 6);
    m.add(ModelComponent::flow("in", "MB", constant(7.5)));
    m.add(ModelComponent::flow("out", "MB", constant(7.5)));
    m.add(ModelComponent::stock("level", "MB", 42.0, {"in"}, {"out"}));
    const auto r = run(m);
    for (double v : r.at("level")) EXPECT_EQ(v, 42.0);
}

TEST(Engine, ConvertersSeeUpdatedStocksAndUpstreamValues) {
    Model m("chain", 3);
    m.add(ModelComponent::converter(
        "double_level", "MB", [](const EvalContext& c) { return 2 * c.value("level"); }, {"level"}));
    m.add(ModelComponent::stock("level", "MB", 10.0, {"in"}, {}));
    m.add(ModelComponent::flow(
        "in", "MB", [](const EvalContext& c) { return c.value("rate") * c.period(); }, {"rate"}));
    m.add(ModelComponent::converter("rate", "MB", constant(1.0)));
    const auto r = run(m);
    EXPECT_EQ(r.at("level"), (std::vector<double>{11, 13, 16}));
    EXPECT_EQ(r.at("double_level"), (std::vector<double>{22, 26, 32}));
    // Results keep declaration order regardless of evaluation order.
    EXPECT_EQ(r.names, (std::vector<std::string>{"double_level", "level", "in", "rate"}));
}

TEST(Engine, LaggedReadsAndInitialValues) {
    Model m("lag", 4);
    m.add(ModelComponent::stock("s", "MB", 5.0, {"f"}, {}));
    m.add(ModelComponent::flow("f", "MB", constant(1.0)));
    m.add(ModelComponent::converter("prev_s", "MB", [](const EvalContext& c) { return c.lagged("s", 1); })
              .reading_lagged({"s"}));
    m.add(ModelComponent::converter("prev2_f", "MB", [](const EvalContext& c) { return c.lagged("f", 2); })
              .reading_lagged({"f"}));
    const auto r = run(m);
    EXPECT_EQ(r.at("prev_s"), (std::vector<double>{5, 6, 7, 8}));
    EXPECT_EQ(r.at("prev2_f"), (std::vector<double>{0, 0, 1, 1}));
}

TEST(Engine, ShortExogenousSeriesDefaultsToZeroWithWarning) {
    Model m("exo", 4);
    m.set_exogenous("x", {3, 4});
    m.add(ModelComponent::flow("f", "MB", [](const EvalContext& c) { return c.input("x"); }).reading_inputs({"x"}));
    const auto r = run(m);
    EXPECT_EQ(r.at("f"), (std::vector<double>{3, 4, 0, 0}));
    ASSERT_EQ(r.warnings.size(), 1u);
    EXPECT_NE(r.warnings[0].find("'x'"), std::string::npos);
}

TEST(Engine, CyclicConvertersAreRejected) {
    Model m("cycle", 2);
    m.add(ModelComponent::converter("a", "", [](const EvalContext& c) { return c.value("b"); }, {"b"}));
    m.add(ModelComponent::converter("b", "", [](const EvalContext& c) { return c.value("a"); }, {"a"}));
    try {
        run(m);
        FAIL() << "expected ModelError";
    } catch (const ModelError& e) {
        EXPECT_NE(std::string(e.what()).find("cyclic"), std::string::npos);
    }
}

TEST(Engine, CycleThroughAStockIsRejected) {
    Model m("stock-cycle", 2);
    m.add(ModelComponent::stock("s", "", 0.0, {"f"}, {}));
    m.add(ModelComponent::flow("f", "", [](const EvalContext& c) { return c.value("s"); }, {"s"}));
    EXPECT_THROW(run(m), ModelError);
}

TEST(Engine, MalformedModelsAreRejected) {
    {
        Model m("unknown", 2);
        m.add(ModelComponent::converter("a", "", constant(1), {"missing"}));
        EXPECT_THROW(run(m), ModelError);
    }
    {
        Model m("dup", 2);
        m.add(ModelComponent::converter("a", "", constant(1)));
        EXPECT_THROW(m.add(ModelComponent::converter("a", "", constant(2))), ModelError);
    }
    {
        Model m("stock-from-converter", 2);
        m.add(ModelComponent::converter("c", "", constant(1)));
        m.add(ModelComponent::stock("s", "", 0.0, {"c"}, {}));
        EXPECT_THROW(run(m), ModelError);
    }
    {
        Model m("undeclared-read", 2);
        m.add(ModelComponent::converter("a", "", constant(1)));
        m.add(ModelComponent::converter("b", "", [](const EvalContext& c) { return c.value("a"); }));
        EXPECT_THROW(run(m), ModelError);
    }
    {
        Model m("unknown-input", 2);
        m.add(ModelComponent::flow("f", "", [](const EvalContext& c) { return c.input("x"); }).reading_inputs({"x"}));
        EXPECT_THROW(run(m), ModelError);
    }
    {
        Model m("no-expression", 2);
        m.add(ModelComponent::converter("a", "", Expression{}));
        EXPECT_THROW(run(m), ModelError);
    }
    EXPECT_THROW(Model("zero", 0), ModelError);
}

TEST(Engine, RerunsAreBitwiseIdentical) {
    Model m("det", 50);
    m.add(ModelComponent::flow("in", "", [](const EvalContext& c) { return 0.1 * c.period() + 1.0 / 3.0; }));
    m.add(ModelComponent::flow("out", "", [](const EvalContext& c) { return 0.05 * c.value("s_prev"); }, {"s_prev"}));
    m.add(ModelComponent::converter("s_prev", "", [](const EvalContext& c) { return c.lagged("s", 1); })
              .reading_lagged({"s"}));
    m.add(ModelComponent::stock("s", "", 1.0, {"in"}, {"out"}));
    const auto a = run(m);
    const auto b = run(m);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.digest, m.digest());
}

TEST(Engine, DigestTracksConfiguration) {
    auto build = [](double initial) {
        Model m("d", 3);
        m.add(ModelComponent::flow("f", "", constant(1)));
        m.add(ModelComponent::stock("s", "", initial, {"f"}, {}));
        return m;
    };
    EXPECT_EQ(build(0).digest(), build(0).digest());
    EXPECT_NE(build(0).digest(), build(1).digest());
    auto noted = build(0);
    noted.note("k", "v");
    EXPECT_NE(noted.digest(), build(0).digest());
}

TEST(Engine, DeclarationOrderOfSameKindComponentsDoesNotMatter) {
    auto build = [](bool reversed) {
        Model m("order", 10);
        std::vector<ModelComponent> parts{
            ModelComponent::flow("a", "", [](const EvalContext& c) { return 1.5 * c.period(); }),
            ModelComponent::flow("b", "", [](const EvalContext& c) { return c.value("a") / 3.0; }, {"a"}),
            ModelComponent::converter("k", "", [](const EvalContext& c) { return c.value("s") + c.value("b"); },
                                      {"s", "b"}),
            ModelComponent::stock("s", "", 2.0, {"a"}, {"b"}),
        };
        if (reversed) std::reverse(parts.begin(), parts.end());
        for (auto& p : parts) m.add(std::move(p));
        return run(m);
    };
    const auto forward = build(false);
    const auto backward = build(true);
    for (const auto& name : {"a", "b", "k", "s"}) EXPECT_EQ(forward.at(name), backward.at(name)) << name;
}

TEST(RunResult, PeriodAccessIsBoundsChecked) {
    Model m("b", 2);
    m.add(ModelComponent::converter("c", "", constant(3)));
    const auto r = run(m);
    EXPECT_EQ(r.at("c", 2), 3.0);
    EXPECT_EQ(r.final("c"), 3.0);
    EXPECT_THROW(r.at("c", 0), ModelError);
    EXPECT_THROW(r.at("c", 3), ModelError);
    EXPECT_THROW(r.at("nope"), ModelError);
}

} // namespace
} // namespace drsim
