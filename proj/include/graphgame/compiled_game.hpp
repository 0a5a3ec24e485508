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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graphgame/game_model.hpp"
#include "graphgame/vertex_set.hpp"

namespace graphgame {

/// One winning condition instantiated at a concrete input. For SoloProduct
/// the product of `first`'s signs over `region` must be +1. For the pair
/// conditions zeta_first * zeta_second over `region` must equal
/// (-1)^parity.
struct RegionCheck {
    ConditionCheck::Condition condition;
    PlayerIndex first;
    PlayerIndex second;
    std::vector<std::size_t> region;
    Bit parity;
};

/**
 * @brief Validated, index-based view of a GraphicGame used by every solver.
 *
 * Construction validates the game and throws InvalidGame with the full
 * violation list if it is malformed. Immutable afterwards.
 */
class CompiledGame {
  public:
    explicit CompiledGame(GraphicGame game);

    [[nodiscard]] const GraphicGame &source() const { return game_; }
    [[nodiscard]] std::size_t players() const { return game_.players; }
    [[nodiscard]] std::size_t split() const { return game_.split; }
    [[nodiscard]] std::size_t vertex_count() const {
        return game_.graph.vertices.size();
    }
    [[nodiscard]] const std::string &vertex_name(std::size_t v) const {
        return game_.graph.vertices[v];
    }
    [[nodiscard]] bool is_target() const { return game_.is_target(); }

    [[nodiscard]] const VertexSet &owned(PlayerIndex player, Bit input) const {
        return owned_[player][input];
    }
    [[nodiscard]] VertexSet region(PlayerIndex i, Bit xi, PlayerIndex j,
                                   Bit xj) const {
        return owned_[i][xi] & owned_[j][xj];
    }

    /// Nonempty region for all four input pairs.
    [[nodiscard]] bool shares_always(PlayerIndex i, PlayerIndex j) const;
    /// Nonempty region for at least one input pair.
    [[nodiscard]] bool shares_ever(PlayerIndex i, PlayerIndex j) const;
    /// True unless both players sit on the unconstrained side (index < m).
    [[nodiscard]] bool constrained_pair(PlayerIndex i, PlayerIndex j) const {
        return i != j && (i >= split() || j >= split());
    }

    [[nodiscard]] std::uint32_t input_count() const {
        return std::uint32_t{1} << players();
    }
    /// p(x) for every input mask.
    [[nodiscard]] const std::vector<double> &weights() const {
        return weights_;
    }

    /// Every consistency condition that applies at input mask x. Pairs
    /// with an empty region contribute nothing.
    [[nodiscard]] std::vector<RegionCheck> checks(std::uint32_t x) const;

    /// f_i(x) for target-mode games.
    [[nodiscard]] std::int64_t target(PlayerIndex player,
                                      std::uint32_t x) const {
        return targets_[player][x];
    }

  private:
    GraphicGame game_;
    std::vector<std::array<VertexSet, 2>> owned_;
    std::vector<double> weights_;
    std::vector<std::vector<std::int64_t>> targets_;
};

/// signs[player][vertex]; only entries inside the player's realized set
/// are read.
using SignTable = std::vector<std::vector<Sign>>;

/// True iff every check passes under the given signs.
[[nodiscard]] bool checks_pass(const std::vector<RegionCheck> &checks,
                               const SignTable &signs);

[[nodiscard]] inline Bit input_bit(std::uint32_t mask, PlayerIndex player) {
    return static_cast<Bit>((mask >> player) & 1U);
}

} // namespace graphgame
