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

#include <algorithm>
#include <array>
#include <cstdio>
#include <set>
#include <sstream>

#include "drsim/errors.hpp"
#include "drsim/io.hpp"
#include "drsim/report.hpp"

namespace drsim {
namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 90.0;
constexpr double kRight = 160.0;
constexpr double kTop = 30.0;
constexpr double kBottom = 60.0;
constexpr std::array<const char*, 6> kColors{"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"};

std::string fixed2(double v) {
    std::array<char, 32> buf{};
    std::snprintf(buf.data(), buf.size(), "%.2f", v);
    return buf.data();
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

// Periods past the last non-zero value lie outside the measured window
// and are not drawn.
std::size_t drawn_points(const std::vector<double>& series) {
    std::size_t n = series.size();
    while (n > 1 && series[n - 1] == 0.0) --n;
    return n;
}

} // namespace

std::string render_svg(const RunResult& run, std::span<const std::string> components) {
    if (components.empty()) throw ConfigError("plot: no components selected");
    double lo = 0.0;
    double hi = 0.0;
    bool first = true;
    std::set<std::string> units;
    for (const auto& name : components) {
        const auto& s = run.at(name);
        if (s.empty()) throw ConfigError("plot: series '" + name + "' is empty");
        units.insert(run.units.at(name));
        const auto n = drawn_points(s);
        const auto [mn, mx] = std::minmax_element(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(n));
        lo = first ? *mn : std::min(lo, *mn);
        hi = first ? *mx : std::max(hi, *mx);
        first = false;
    }
    lo = std::min(lo, 0.0);
    if (hi == lo) hi = lo + 1.0;

    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    const int horizon = std::max(run.horizon, 2);
    auto x_of = [&](int period) { return kLeft + plot_w * (period - 1) / (horizon - 1); };
    auto y_of = [&](double v) { return kTop + plot_h * (1.0 - (v - lo) / (hi - lo)); };

    std::string unit_label;
    for (const auto& u : units) unit_label += (unit_label.empty() ? "" : ", ") + u;

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
       << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
    os << "<title>" << escape(run.model_id) << "</title>\n";
    os << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";
    os << "<g stroke=\"black\" stroke-width=\"1\">\n";
    os << "<line x1=\"" << kLeft << "\" y1=\"" << kTop + plot_h << "\" x2=\"" << kLeft + plot_w << "\" y2=\""
       << kTop + plot_h << "\"/>\n";
    os << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\"" << kTop + plot_h
       << "\"/>\n</g>\n";

    os << "<g font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">\n";
    for (int p = 1; p <= run.horizon; ++p)
        os << "<text x=\"" << fixed2(x_of(p)) << "\" y=\"" << fixed2(kTop + plot_h + 16) << "\">" << p << "</text>\n";
    for (int i = 0; i <= 4; ++i) {
        const double v = lo + (hi - lo) * i / 4.0;
        os << "<text x=\"" << fixed2(kLeft - 8) << "\" y=\"" << fixed2(y_of(v) + 4)
           << "\" text-anchor=\"end\">" << escape(sig6(v)) << "</text>\n";
    }
    os << "<text x=\"" << fixed2(kLeft + plot_w / 2) << "\" y=\"" << fixed2(kHeight - 15)
       << "\">Period (days)</text>\n";
    os << "<text x=\"18\" y=\"" << fixed2(kTop + plot_h / 2) << "\" transform=\"rotate(-90 18 "
       << fixed2(kTop + plot_h / 2) << ")\">" << escape(unit_label) << "</text>\n</g>\n";

    for (std::size_t c = 0; c < components.size(); ++c) {
        const auto& name = components[c];
        const auto& s = run.at(name);
        const char* color = kColors[c % kColors.size()];
        os << "<polyline data-component=\"" << escape(name) << "\" fill=\"none\" stroke=\"" << color
           << "\" stroke-width=\"2\" points=\"";
        const auto n = drawn_points(s);
        for (std::size_t i = 0; i < n; ++i)
            os << (i ? " " : "") << fixed2(x_of(static_cast<int>(i) + 1)) << ',' << fixed2(y_of(s[i]));
        os << "\"/>\n";
        const double ly = kTop + 14.0 + 18.0 * static_cast<double>(c);
        os << "<text x=\"" << fixed2(kLeft + plot_w + 12) << "\" y=\"" << fixed2(ly)
           << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"" << color << "\">" << escape(name) << " ("
           << escape(run.units.at(name)) << ")</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

void emit_plot(const RunResult& run, std::span<const std::string> components, const std::filesystem::path& path) {
    write_text_file(path, render_svg(run, components));
}

} // namespace drsim
