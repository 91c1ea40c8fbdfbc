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

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "drsim/model_core.hpp"

namespace drsim {

/// CSV with header `day,data_mb,duration_s` (or `duration_min`, converted
/// to seconds). LF or CRLF line endings; blank lines are ignored. Samples
/// are returned in day order. Throws ParseError with the offending line.
std::vector<JobSample> parse_job_log(std::string_view text);

/// Canonical form: `day,data_mb,duration_s`, shortest round-trip numbers.
std::string render_job_log(std::span<const JobSample> samples);

/// CSV with header `source_tier,data_mb,duration_s`; tiers are
/// local, archive or vault (case-insensitive).
std::vector<RestoreSample> parse_restore_samples(std::string_view text);
std::string render_restore_samples(std::span<const RestoreSample> samples);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

/// Shortest decimal text that parses back to the same double.
std::string exact_number(double value);
/// `%.6g`, the precision of the reference tables.
std::string sig6(double value);

} // namespace drsim
