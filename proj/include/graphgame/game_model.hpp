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
 * Graphic games: a vertex graph, per-player vertex ownership that depends on
 * the player's input bit, an input distribution and a payoff rule.
 *
 * Player indices are 0-based throughout the C++ API. Input vectors hold one
 * bit per player; bitstrings spell them out as "x_1 x_2 ... x_n" with the
 * first character belonging to player 0.
 */

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace graphgame {

using PlayerIndex = std::size_t;
using Bit = std::uint8_t;
using Sign = int;
using InputVector = std::vector<Bit>;

/// Vertex list of the underlying graph. Edges carry no meaning for the game.
struct Graph {
    std::vector<std::string> vertices;

    [[nodiscard]] std::optional<std::size_t>
    index_of(std::string_view name) const;

    friend bool operator==(const Graph &, const Graph &) = default;
};

/// owned[player][input] is the set V^{x_i} of vertex names held by the
/// player when it receives that input.
struct AssignmentMap {
    std::vector<std::array<std::vector<std::string>, 2>> owned;

    [[nodiscard]] const std::vector<std::string> &at(PlayerIndex player,
                                                     Bit input) const;

    friend bool operator==(const AssignmentMap &, const AssignmentMap &) = default;
};

/// Every player independently receives 0 with probability p and 1 with 1-p.
struct IidInputs {
    double p = 0.5;

    friend bool operator==(const IidInputs &, const IidInputs &) = default;
};

/// Explicit joint prior keyed by bitstring. Omitted inputs have probability 0.
struct JointInputs {
    std::map<std::string, double> table;

    friend bool operator==(const JointInputs &, const JointInputs &) = default;
};

using InputDistribution = std::variant<IidInputs, JointInputs>;

/// Players win iff their vertex signs satisfy the consistency conditions.
struct ConsistencyPayoff {
    friend bool operator==(const ConsistencyPayoff &,
                           const ConsistencyPayoff &) = default;
};

/// Players win iff each declared value equals f_i(x).
struct TargetFunction {
    /// tables[player][bitstring] = f_i(x)
    std::vector<std::map<std::string, std::int64_t>> tables;

    friend bool operator==(const TargetFunction &, const TargetFunction &) = default;
};

using PayoffMode = std::variant<ConsistencyPayoff, TargetFunction>;

struct GraphicGame {
    Graph graph;
    std::size_t players = 0; ///< n
    std::size_t split = 1;   ///< m, with 1 <= m < n
    AssignmentMap assignments;
    InputDistribution distribution = IidInputs{};
    PayoffMode payoff = ConsistencyPayoff{};

    [[nodiscard]] bool is_target() const {
        return std::holds_alternative<TargetFunction>(payoff);
    }
    [[nodiscard]] const TargetFunction &targets() const {
        return std::get<TargetFunction>(payoff);
    }

    friend bool operator==(const GraphicGame &, const GraphicGame &) = default;
};

// ---------------------------------------------------------------------------
// Validation

struct Violation {
    enum class Kind {
        EmptyGraph,
        DuplicateVertex,
        PlayerCount,
        SplitOutOfRange,
        UnknownPlayer,
        UnknownVertex,
        DuplicateOwnership,
        Disjointness,
        Distribution,
        TargetTable,
    };
    Kind kind;
    std::string message;
    std::optional<PlayerIndex> player;
    std::optional<Bit> input;
    std::optional<std::string> vertex;
};

using ValidationReport = std::vector<Violation>;

[[nodiscard]] std::string_view to_string(Violation::Kind kind);

/// Lists every violated invariant. An empty report means the game is
/// well-formed. Never throws on malformed games.
[[nodiscard]] ValidationReport validate_game(const GraphicGame &game);

// ---------------------------------------------------------------------------
// Inputs

/// Largest player count the exhaustive machinery accepts (2^n inputs).
inline constexpr std::size_t max_players = 24;

[[nodiscard]] std::string to_bitstring(const InputVector &x);
[[nodiscard]] InputVector parse_bitstring(std::string_view bits);
[[nodiscard]] std::uint32_t to_mask(const InputVector &x);
[[nodiscard]] InputVector from_mask(std::uint32_t mask, std::size_t n);
[[nodiscard]] std::string mask_bitstring(std::uint32_t mask, std::size_t n);

/// p(x). IID: p per zero bit, 1-p per one bit. Joint: table entry, 0 when
/// the input is omitted. Throws std::invalid_argument on malformed x.
[[nodiscard]] double input_probability(const InputDistribution &dist,
                                       const InputVector &x);

/// Dense p(x) over all 2^n masks.
[[nodiscard]] std::vector<double>
input_weights(const InputDistribution &dist, std::size_t n);

// ---------------------------------------------------------------------------
// Payoff

/// Vertex signs per player, keyed by vertex name.
struct OutputAssignment {
    std::vector<std::map<std::string, Sign>> values;
};

struct ConditionCheck {
    enum class Condition { SoloProduct, MixedPair, UpperPair };
    Condition condition;
    PlayerIndex first;
    PlayerIndex second; ///< equals first for SoloProduct
    Sign required;      ///< required product (or product of the two zetas)
    Sign observed;
    bool passed;
};

struct PayoffBreakdown {
    /// S^{x_i}: product of every sign player i assigned.
    std::vector<Sign> solo_products;
    /// (i, j) -> (zeta_i, zeta_j) over the shared region, for every
    /// constrained pair with a nonempty region.
    std::map<std::pair<PlayerIndex, PlayerIndex>, std::pair<Sign, Sign>>
        region_products;
    std::vector<ConditionCheck> checks;
    bool verdict = false;
};

/// owned(i, x_i) ∩ owned(j, x_j), in graph order.
[[nodiscard]] std::vector<std::string> shared_region(const GraphicGame &game,
                                                     PlayerIndex i,
                                                     PlayerIndex j, Bit xi,
                                                     Bit xj);

/// Consistency-mode payoff F(x, y) with the per-condition breakdown.
[[nodiscard]] PayoffBreakdown evaluate_payoff(const GraphicGame &game,
                                              const InputVector &x,
                                              const OutputAssignment &y);

/// Target-mode payoff: true iff declared[i] == f_i(x) for every player.
[[nodiscard]] bool
evaluate_target_payoff(const GraphicGame &game, const InputVector &x,
                       const std::vector<std::int64_t> &declared);

} // namespace graphgame
