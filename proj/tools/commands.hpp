// Copyright 2026 The ghzbox Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GHZBOX_TOOLS_COMMANDS_HPP
#define GHZBOX_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ghzbox/doublewell.hpp"
#include "json.hpp"

namespace ghzbox::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct GlobalOptions {
    bool json = false;
    std::optional<std::uint64_t> seed;
    double tolerance = 1e-12;
};

/// Result of one command. `text` is the human-readable rendering; `to_json`
/// is the machine format described by schemas/run_report.schema.json.
struct RunReport {
    std::string command;
    Json inputs = Json::object();
    Json outputs = Json::object();
    std::string paper_anchor;
    std::vector<std::string> text;

    Json to_json() const;
};

RunReport cmd_expand(const std::vector<std::string>& frames, const GlobalOptions& opts);
RunReport cmd_rules(const GlobalOptions& opts);
RunReport cmd_epr(const GlobalOptions& opts);
RunReport cmd_lhv(const GlobalOptions& opts);

/// `script` entries look like "A:position" or "b:bonding". `state` is "ghz"
/// or "two-box". Throws UsageError for a missing seed, a malformed step or a
/// repeated box without `allow_repeat`.
RunReport cmd_measure(const std::string& state, const std::vector<std::string>& script, bool allow_repeat,
                      const GlobalOptions& opts);

/// Writes the CSV to `out_path`; throws IoError when it cannot be written.
RunReport cmd_waveform(const std::string& figure, int resolution, const std::string& out_path,
                       const FigureOptions& figure_options, const GlobalOptions& opts);

/// Prints the report as JSON or as text.
void print_report(std::ostream& out, const RunReport& report, bool json);

/// Full command-line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ghzbox::cli

#endif  // GHZBOX_TOOLS_COMMANDS_HPP
