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

#include "drsim/io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

#include "drsim/errors.hpp"

namespace drsim {
namespace {

struct Line {
    std::size_t number;
    std::string_view text;
};

std::vector<Line> split_lines(std::string_view text) {
    if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);
    std::vector<Line> lines;
    std::size_t number = 0;
    while (!text.empty()) {
        const auto end = text.find('\n');
        std::string_view line = text.substr(0, end);
        text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
        ++number;
        if (line.ends_with('\r')) line.remove_suffix(1);
        if (line.find_first_not_of(" \t") == std::string_view::npos) continue;
        lines.push_back({number, line});
    }
    return lines;
}

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_cells(std::string_view line) {
    std::vector<std::string_view> cells;
    while (true) {
        const auto comma = line.find(',');
        cells.push_back(trim(line.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        line.remove_prefix(comma + 1);
    }
    return cells;
}

double parse_number(std::string_view cell, std::size_t line, std::string_view column) {
    double value = 0.0;
    const auto* first = cell.data();
    const auto* last = cell.data() + cell.size();
    if (!cell.empty() && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (cell.empty() || ec != std::errc{} || ptr != last || !std::isfinite(value))
        throw ParseError("column '" + std::string(column) + "': not a number: '" + std::string(cell) + "'", line);
    return value;
}

int parse_day(std::string_view cell, std::size_t line) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
    if (cell.empty() || ec != std::errc{} || ptr != cell.data() + cell.size())
        throw ParseError("column 'day': not an integer: '" + std::string(cell) + "'", line);
    return value;
}

// Maps the header onto the expected columns; every expected column must
// be present exactly once and nothing else may appear.
template <std::size_t N>
std::array<std::size_t, N> locate_columns(const Line& header, const std::array<std::vector<std::string_view>, N>& wanted,
                                          std::array<std::string_view, N>& matched) {
    const auto cells = split_cells(header.text);
    std::array<std::optional<std::size_t>, N> found{};
    for (std::size_t c = 0; c < cells.size(); ++c) {
        bool known = false;
        for (std::size_t w = 0; w < N; ++w) {
            if (std::find(wanted[w].begin(), wanted[w].end(), cells[c]) == wanted[w].end()) continue;
            if (found[w]) throw ParseError("duplicate column '" + std::string(cells[c]) + "'", header.number);
            found[w] = c;
            matched[w] = cells[c];
            known = true;
        }
        if (!known) throw ParseError("unexpected column '" + std::string(cells[c]) + "'", header.number);
    }
    std::array<std::size_t, N> out{};
    for (std::size_t w = 0; w < N; ++w) {
        if (!found[w]) throw ParseError("missing column '" + std::string(wanted[w].front()) + "'", header.number);
        out[w] = *found[w];
    }
    return out;
}

std::vector<std::string_view> row_cells(const Line& line, std::size_t expected) {
    auto cells = split_cells(line.text);
    if (cells.size() != expected)
        throw ParseError("expected " + std::to_string(expected) + " cells, got " + std::to_string(cells.size()),
                         line.number);
    return cells;
}

} // namespace

std::vector<JobSample> parse_job_log(std::string_view text) {
    const auto lines = split_lines(text);
    if (lines.empty()) throw ParseError("no samples");
    std::array<std::string_view, 3> matched{};
    const auto cols = locate_columns<3>(lines.front(), {{{"day"}, {"data_mb"}, {"duration_s", "duration_min"}}}, matched);
    const double time_scale = matched[2] == "duration_min" ? kSecondsPerMinute : 1.0;

    std::vector<std::pair<JobSample, std::size_t>> rows;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& line = lines[i];
        const auto cells = row_cells(line, 3);
        JobSample s;
        s.day = parse_day(cells[cols[0]], line.number);
        s.data_mb = parse_number(cells[cols[1]], line.number, "data_mb");
        s.duration_s = parse_number(cells[cols[2]], line.number, matched[2]) * time_scale;
        if (s.day < 1) throw ParseError("day must be >= 1", line.number);
        if (s.data_mb < 0.0) throw ParseError("data_mb must be >= 0", line.number);
        if (!(s.duration_s > 0.0)) throw ParseError("duration must be > 0", line.number);
        rows.emplace_back(s, line.number);
    }
    if (rows.empty()) throw ParseError("no samples");
    std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first.day < b.first.day; });
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i].first.day == rows[i - 1].first.day)
            throw ParseError("duplicate day " + std::to_string(rows[i].first.day), rows[i].second);

    std::vector<JobSample> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(r.first);
    return out;
}

std::string render_job_log(std::span<const JobSample> samples) {
    std::string out = "day,data_mb,duration_s\n";
    for (const auto& s : samples)
        out += std::to_string(s.day) + "," + exact_number(s.data_mb) + "," + exact_number(s.duration_s) + "\n";
    return out;
}

std::vector<RestoreSample> parse_restore_samples(std::string_view text) {
    const auto lines = split_lines(text);
    if (lines.empty()) throw ParseError("no samples");
    std::array<std::string_view, 3> matched{};
    const auto cols = locate_columns<3>(lines.front(), {{{"source_tier"}, {"data_mb"}, {"duration_s"}}}, matched);
    std::vector<RestoreSample> out;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& line = lines[i];
        const auto cells = row_cells(line, 3);
        RestoreSample s;
        try {
            s.source_tier = source_tier_from_string(std::string(cells[cols[0]]));
        } catch (const DomainError& e) {
            throw ParseError(e.what(), line.number);
        }
        s.data_mb = parse_number(cells[cols[1]], line.number, "data_mb");
        s.duration_s = parse_number(cells[cols[2]], line.number, "duration_s");
        if (!(s.data_mb > 0.0)) throw ParseError("data_mb must be > 0", line.number);
        if (!(s.duration_s > 0.0)) throw ParseError("duration_s must be > 0", line.number);
        out.push_back(s);
    }
    if (out.empty()) throw ParseError("no samples");
    return out;
}

std::string render_restore_samples(std::span<const RestoreSample> samples) {
    std::string out = "source_tier,data_mb,duration_s\n";
    for (const auto& s : samples)
        out += to_string(s.source_tier) + "," + exact_number(s.data_mb) + "," + exact_number(s.duration_s) + "\n";
    return out;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot write '" + path.string() + "'");
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw ConfigError("failed writing '" + path.string() + "'");
}

std::string exact_number(double value) {
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), ptr);
}

std::string sig6(double value) {
    if (value == 0.0) value = 0.0;  // no "-0"
    std::array<char, 64> buf{};
    std::snprintf(buf.data(), buf.size(), "%.6g", value);
    return buf.data();
}

} // namespace drsim
