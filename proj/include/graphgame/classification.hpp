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
 * Sharing structure of a graphic game and its quantum-advantage verdict.
 *
 * For a player i on the constrained side (i < m), A_i collects the players
 * j >= m that share vertices with i for every input pair. A tuple level s
 * is nonempty when some s-1 members of A_i, together with i, jointly share
 * vertices for every input combination. The sharing index I_i is the
 * largest such s; the game shows a quantum advantage iff min_i I_i = 2
 * (provided the classical value is below 1).
 *
 * Verdicts are decided in this order: NoQuantumAdvantage when min_i I_i > 2,
 * Trivial when omega_c = 1, NoSharedVertices when no A_i and no pair above
 * the split shares anything, QuantumAdvantage when some I_i is defined,
 * Unknown otherwise.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "graphgame/compiled_game.hpp"

namespace graphgame {

enum class TupleSemantics {
    /// Literal joint membership: the s players' sets intersect for every
    /// input combination.
    CommonIntersectionMax,
    /// Every pair inside the tuple shares vertices for every input pair.
    PairwiseCliqueMax,
};

enum class Verdict {
    QuantumAdvantage,
    NoQuantumAdvantage,
    Trivial,
    NoSharedVertices,
    Unknown,
};

struct SharingStructure {
    /// A_i for each i < m.
    std::vector<std::vector<PlayerIndex>> neighbor_sets;
    /// tuple_levels[i][s - 2] for s = 2 .. n - m + 1.
    std::vector<std::vector<bool>> tuple_levels;
    /// I_i, empty when A_i is empty.
    std::vector<std::optional<int>> indices;
    TupleSemantics semantics_used = TupleSemantics::CommonIntersectionMax;
};

struct Classification {
    Verdict verdict = Verdict::Unknown;
    SharingStructure indices;
    std::optional<double> classical_value_used;
};

[[nodiscard]] std::string_view to_string(Verdict verdict);
[[nodiscard]] std::string_view to_string(TupleSemantics semantics);
[[nodiscard]] std::optional<TupleSemantics>
parse_semantics(std::string_view text);

/// A_i. Throws std::out_of_range unless i < m.
[[nodiscard]] std::vector<PlayerIndex>
players_sharing_with(const CompiledGame &game, PlayerIndex i);

/// A_i^s != ∅. Requires i < m and s >= 2.
[[nodiscard]] bool tuple_level_nonempty(const CompiledGame &game,
                                        PlayerIndex i, int s,
                                        TupleSemantics semantics);

/// I_i: the largest s with a nonempty tuple level.
[[nodiscard]] std::optional<int> sharing_index(const CompiledGame &game,
                                               PlayerIndex i,
                                               TupleSemantics semantics);

[[nodiscard]] SharingStructure sharing_structure(const CompiledGame &game,
                                                 TupleSemantics semantics);

struct ClassifyOptions {
    TupleSemantics semantics = TupleSemantics::CommonIntersectionMax;
    /// Strategy budget for computing omega_c when the caller omits it.
    std::uint64_t budget = std::uint64_t{1} << 24;
};

/// Quantum-advantage verdict. When omega_c is not supplied it is
/// computed by exhaustive search, or the verdict is Unknown if that search
/// exceeds the budget.
[[nodiscard]] Classification classify(const CompiledGame &game,
                                      std::optional<double> omega_c,
                                      const ClassifyOptions &options = {});

/// Size of the largest set of players no two of which share a vertex at
/// any input pair. Exact; throws BudgetExceeded above max_search_players.
[[nodiscard]] int independence_number(const CompiledGame &game,
                                      std::size_t max_search_players = 24);

} // namespace graphgame
