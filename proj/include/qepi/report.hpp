// Copyright 2026 The qudit-epi Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "qepi/harness.hpp"

namespace qepi {

inline constexpr std::string_view kVersion = "0.1.0";

struct RunManifest {
    std::string command;
    TrialConfig config;
    std::string version{kVersion};
    std::string rng{RandomSource::kAlgorithm};
    std::string log_base = "natural";
    std::string timestamp = "1970-01-01T00:00:00Z";
    /// Free-form choices worth reproducing (measurement family, channel
    /// convention for the conjecture search, ...).
    std::map<std::string, std::string> notes;

    bool operator==(const RunManifest &) const = default;
};

RunManifest default_manifest(std::string command, const TrialConfig &config);

nlohmann::json to_json(const TrialConfig &c);
TrialConfig config_from_json(const nlohmann::json &j);

nlohmann::json to_json(const RunManifest &m);
RunManifest manifest_from_json(const nlohmann::json &j);

nlohmann::json to_json(const TrialRecord &r, bool with_timing = false);
TrialRecord record_from_json(const nlohmann::json &j);

nlohmann::json to_json(const Summary &s);
Summary summary_from_json(const nlohmann::json &j);

/// Compact single-line JSON with every float printed to 17 significant
/// digits; object keys come out sorted.
std::string render_line(const nlohmann::json &j);

struct RunFile {
    RunManifest manifest;
    std::vector<TrialRecord> records;
    Summary summary;
};

/// Manifest line, one line per record, summary line. An empty record list
/// yields a summary with trials = 0.
void emit(const RunManifest &manifest, std::span<const TrialRecord> records,
          const std::filesystem::path &out, bool with_timing = false);
std::string render_run(const RunManifest &manifest, std::span<const TrialRecord> records,
                       bool with_timing = false);

RunFile read_run(const std::filesystem::path &in);
RunFile parse_run(const std::string &text);

} // namespace qepi
