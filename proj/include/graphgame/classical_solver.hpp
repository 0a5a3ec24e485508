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
 * Exact classical values by exhaustive search over deterministic
 * strategies, closed-form oracles for star and fully-shared games, and the
 * guess-your-neighbour bound for target games.
 *
 * Search space reduction: inside one (player, input) set, vertices with the
 * same membership signature across the other players' sets always appear
 * together in every region, so only the product of their signs matters.
 * One representative per group is enumerated and the rest are fixed to +1.
 * Groups that enter no condition at all are dropped.
 */

#pragma once

#include <cstdint>
#include <vector>

#include "graphgame/compiled_game.hpp"
#include "graphgame/parallel.hpp"

namespace graphgame {

/// Vertex signs for every (player, input). signs[p][b][v] is +1 or -1 for
/// owned vertices and 0 elsewhere.
struct DeterministicStrategy {
    std::vector<std::array<std::vector<Sign>, 2>> signs;
    /// Position in the solver's enumeration order, when produced by it.
    std::uint64_t index = 0;

    [[nodiscard]] static DeterministicStrategy
    all_plus(const CompiledGame &game);

    /// Signs for the realized input, as read by checks_pass.
    [[nodiscard]] SignTable realize(const CompiledGame &game,
                                    std::uint32_t x) const;
    [[nodiscard]] OutputAssignment output(const CompiledGame &game,
                                          std::uint32_t x) const;

    friend bool operator==(const DeterministicStrategy &,
                           const DeterministicStrategy &) = default;
};

/// Throws DomainMismatch unless signs cover exactly the owned vertices.
void check_strategy_domain(const CompiledGame &game,
                           const DeterministicStrategy &strategy);

struct SignGroup {
    PlayerIndex player;
    Bit input;
    /// First entry is the representative.
    std::vector<std::size_t> vertices;
};

/// Linear form of one condition over group bits: the condition holds iff
/// popcount(lambda & mask) has parity `parity`.
struct ParityCheck {
    std::uint64_t mask;
    Bit parity;
};

/// The reduced strategy space. Bit k of lambda set means group k's
/// representative signs -1.
struct StrategySpace {
    std::vector<SignGroup> groups;
    /// checks[x] for every input mask with positive weight; empty for the
    /// others.
    std::vector<std::vector<ParityCheck>> checks;
    std::vector<double> weights;

    [[nodiscard]] std::size_t bits() const { return groups.size(); }
    /// Number of strategies, 2^bits, as a float so that huge spaces can be
    /// reported.
    [[nodiscard]] long double size() const;
    [[nodiscard]] double value(std::uint64_t lambda) const;
    [[nodiscard]] DeterministicStrategy strategy(const CompiledGame &game,
                                                 std::uint64_t lambda) const;
};

[[nodiscard]] StrategySpace classical_strategy_space(const CompiledGame &game);

struct ClassicalOptions {
    std::uint64_t budget = std::uint64_t{1} << 24;
    Execution execution = Execution::Parallel;
};

struct ClassicalResult {
    double value = 0.0;
    DeterministicStrategy witness;
    long double space_size = 0;
};

/// omega_c with the lowest-index optimal strategy. Throws BudgetExceeded
/// when the reduced space is larger than the budget.
[[nodiscard]] ClassicalResult classical_value(const CompiledGame &game,
                                              const ClassicalOptions &options = {});

/// Winning probability of one deterministic strategy, evaluated directly
/// from the conditions without the grouped encoding.
[[nodiscard]] double strategy_value(const CompiledGame &game,
                                    const DeterministicStrategy &strategy);

// ---------------------------------------------------------------------------
// Closed forms

struct ClosedFormParams {
    double p = 0.5;
    double p_star = 1.0;
    int n1 = 2;
    int l = 3;
};

/// Throws std::invalid_argument when a parameter is out of range.
void validate(const ClosedFormParams &params);

/// Classical value of a star with n1 branches.
[[nodiscard]] double closed_form_star_classical(const ClosedFormParams &params);
/// Classical value of l players sharing one vertex set.
[[nodiscard]] double
closed_form_shared_classical(const ClosedFormParams &params);

// ---------------------------------------------------------------------------
// Target games

/// Best classical value for an injective target: max_x p(x) + p(~x).
[[nodiscard]] double gyni_classical_bound(const InputDistribution &dist,
                                          std::size_t n);

/// True iff x -> (f_1(x), ..., f_n(x)) has pairwise distinct images.
[[nodiscard]] bool check_injective(const TargetFunction &targets,
                                   std::size_t n);

struct TargetStrategy {
    /// responses[p][b]: declared value of player p on input b.
    std::vector<std::array<std::int64_t, 2>> responses;
};

struct TargetClassicalResult {
    double value = 0.0;
    TargetStrategy witness;
    long double space_size = 0;
};

/// Exact classical optimum over per-player response tables. Each player's
/// alphabet is the set of values its target takes. Accepts any n >= 1.
[[nodiscard]] TargetClassicalResult
target_classical_value(const TargetFunction &targets,
                       const InputDistribution &dist, std::size_t n,
                       const ClassicalOptions &options = {});

[[nodiscard]] TargetClassicalResult
target_classical_value(const CompiledGame &game,
                       const ClassicalOptions &options = {});

} // namespace graphgame
