// Copyright 2026 The graphgame Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Machine-readable reports produced by the command-line tool. Reports are
 * JSON with fixed key names (see schemas/report.schema.json); floating
 * point values carry 17 significant digits.
 */

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graphgame/classical_solver.hpp"
#include "graphgame/classification.hpp"
#include "graphgame/game_runner.hpp"
#include "graphgame/quantum_solver.hpp"

namespace graphgame {

struct QuantumRunInfo {
    int restarts_used = 0;
    bool converged = false;
    std::uint64_t seed = 0;
    std::string wiring;
};

struct GyniReport {
    bool injective = false;
    double classical_bound = 0.0;
    std::optional<double> brute_force_value;
    std::optional<double> quantum_probe;
    /// Set when the probe ran: true iff it stayed within 1e-3 of the
    /// classical value. Withheld for non-injective targets.
    std::optional<bool> no_advantage_observed;
};

struct ErrorInfo {
    int exit_code = 0;
    std::string kind;
    std::string message;
    std::optional<std::size_t> line;
    std::optional<std::size_t> column;
    std::optional<long double> required;
    std::optional<long double> budget;
};

struct GameValueReport {
    std::string command;
    std::optional<std::string> game_digest;
    std::optional<double> omega_c;
    std::optional<double> omega_q_lower;
    std::optional<Classification> classification;
    std::optional<DeterministicStrategy> classical_witness;
    std::optional<QuantumStrategy> quantum_witness;
    std::optional<QuantumRunInfo> quantum_run;
    std::optional<ValidationReport> validation;
    std::optional<SessionStats> session;
    std::optional<GyniReport> gyni;
    std::optional<ErrorInfo> error;
    std::vector<std::pair<std::string, double>> timings_ms;
};

/// JSON text. `game` is needed to name vertices in witness strategies and
/// may be null when no witness is present.
[[nodiscard]] std::string render_json(const GameValueReport &report,
                                      const CompiledGame *game);

/// Short human-readable summary.
[[nodiscard]] std::string render_text(const GameValueReport &report);

} // namespace graphgame
