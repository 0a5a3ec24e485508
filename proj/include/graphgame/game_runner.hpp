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
 * Referee and players for repeated rounds of a consistency game.
 *
 * Each round the referee samples x, hands player i nothing but x_i, lets
 * nature measure the EPR pairs the players asked for, hands each player
 * its own outcomes, and scores the returned signs. Round r draws all its
 * randomness from stream_seed(seed, r), so sessions do not depend on the
 * number of worker threads and any round can be replayed on its own.
 */

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "graphgame/classical_solver.hpp"
#include "graphgame/compiled_game.hpp"
#include "graphgame/parallel.hpp"
#include "graphgame/quantum_solver.hpp"

namespace graphgame {

using SessionStrategy = std::variant<DeterministicStrategy, QuantumStrategy>;

struct SessionConfig {
    std::uint64_t rounds = 0;
    std::uint64_t seed = 0;
    SessionStrategy strategy;
    Execution execution = Execution::Parallel;
};

struct InputCounts {
    std::uint64_t plays = 0;
    std::uint64_t wins = 0;

    friend bool operator==(const InputCounts &, const InputCounts &) = default;
};

struct SessionStats {
    std::uint64_t wins = 0;
    std::uint64_t rounds = 0;
    double estimate = 0.0;
    /// sqrt(estimate (1 - estimate) / rounds)
    double std_error = 0.0;
    /// Keyed by input bitstring; inputs never drawn are absent.
    std::map<std::string, InputCounts> per_input_counts;

    friend bool operator==(const SessionStats &, const SessionStats &) = default;
};

/// A player's request to measure its half of an EPR pair.
struct MeasurementRequest {
    std::size_t pair;
    double angle;
};

struct OwnOutcome {
    std::size_t pair;
    Sign outcome;
};

/// Everything a player sees during a round.
struct PlayerView {
    Bit input;
    std::span<const OwnOutcome> outcomes;
};

/**
 * @brief One player's side of a strategy.
 *
 * Holds only the player's own ownership sets and strategy slice. Its two
 * entry points see nothing beyond the player's own input and outcomes.
 */
class LocalPlayer {
  public:
    LocalPlayer(const CompiledGame &game, PlayerIndex self,
                const SessionStrategy &strategy);

    [[nodiscard]] std::vector<MeasurementRequest> plan(Bit input) const;
    /// Signs of the owned vertices, keyed by vertex index.
    [[nodiscard]] std::map<std::size_t, Sign> respond(PlayerView view) const;

  private:
    std::array<std::vector<std::size_t>, 2> owned_;
    std::array<std::vector<Sign>, 2> signs_;
    std::array<std::map<std::size_t, double>, 2> angles_;
    std::array<std::map<std::size_t, VertexOutput>, 2> wiring_;
    bool quantum_ = false;
};

struct PairOutcome {
    std::size_t pair;
    /// Outcomes of the first and second owner; empty when that side did
    /// not measure.
    std::optional<Sign> first;
    std::optional<Sign> second;

    friend bool operator==(const PairOutcome &, const PairOutcome &) = default;
};

struct RoundRecord {
    InputVector x;
    std::vector<PairOutcome> outcomes;
    OutputAssignment y;
    bool verdict = false;
};

/// Throws std::invalid_argument for zero rounds, DomainMismatch when the
/// strategy does not fit the game, UnsupportedGame for target games.
[[nodiscard]] SessionStats run_session(const CompiledGame &game,
                                       const SessionConfig &config);

/// Regenerates round `round_index` of the session. Throws std::out_of_range
/// unless round_index < rounds.
[[nodiscard]] RoundRecord replay_round(const CompiledGame &game,
                                       const SessionConfig &config,
                                       std::uint64_t round_index);

} // namespace graphgame
