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
 * EPR-pair strategies: exact winning probabilities, multi-start angle
 * optimization for lower bounds on the quantum value, and the closed forms
 * for star games.
 *
 * Every measurement is a projective measurement in one plane of the Bloch
 * sphere, given by a single angle. Two halves of an EPR pair measured at
 * angles a and b give outcomes with correlation cos(a - b) and uniform
 * marginals.
 */

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "graphgame/classical_solver.hpp"
#include "graphgame/compiled_game.hpp"
#include "graphgame/parallel.hpp"

namespace graphgame {

/// E[a b] for in-plane measurements of the two halves of an EPR pair.
[[nodiscard]] double epr_correlator(double theta_a, double theta_b);

/// P(a, b) indexed by (a == -1) * 2 + (b == -1): {++, +-, -+, --}.
using OutcomeTable = std::array<double, 4>;

[[nodiscard]] OutcomeTable pair_outcome_distribution(double theta_a,
                                                     double theta_b);

[[nodiscard]] inline double outcome_probability(const OutcomeTable &table,
                                                Sign a, Sign b) {
    return table[(a == -1 ? 2 : 0) + (b == -1 ? 1 : 0)];
}

// ---------------------------------------------------------------------------
// Resources and strategies

enum class ResourceModel {
    /// One EPR pair for every two constrained owners of a vertex.
    OnePairPerOwnerPair,
    /// One EPR pair per vertex with exactly two owners; vertices with three
    /// or more owners are rejected.
    OnePairPerVertex,
};

struct EprPair {
    std::size_t vertex;
    PlayerIndex first; ///< first < second
    PlayerIndex second;

    friend bool operator==(const EprPair &, const EprPair &) = default;
};

struct PairModel {
    /// Ordered by vertex index, then by owners.
    std::vector<EprPair> pairs;

    /// Throws UnsupportedGame under OnePairPerVertex when some vertex has
    /// three or more owners.
    [[nodiscard]] static PairModel
    build(const CompiledGame &game,
          ResourceModel model = ResourceModel::OnePairPerOwnerPair);

    [[nodiscard]] std::optional<std::size_t>
    find(std::size_t vertex, PlayerIndex a, PlayerIndex b) const;

    [[nodiscard]] bool holds(std::size_t pair, PlayerIndex player) const {
        return pairs[pair].first == player || pairs[pair].second == player;
    }

    friend bool operator==(const PairModel &, const PairModel &) = default;
};

/// Vertex sign = sign * product of the player's outcomes on `pairs`.
struct VertexOutput {
    Sign sign = 1;
    std::vector<std::size_t> pairs;

    friend bool operator==(const VertexOutput &, const VertexOutput &) = default;
};

struct QuantumStrategy {
    PairModel model;
    /// angles[player][input][pair]: measurement angle of the player's half.
    /// Absent pairs are not measured at that input.
    std::vector<std::array<std::map<std::size_t, double>, 2>> angles;
    /// wiring[player][input][vertex], one entry per owned vertex.
    std::vector<std::array<std::map<std::size_t, VertexOutput>, 2>> wiring;

    /// Pairs measured by at least one side at some input.
    [[nodiscard]] std::size_t active_pairs() const;

    friend bool operator==(const QuantumStrategy &,
                           const QuantumStrategy &) = default;
};

/// Throws DomainMismatch when the strategy does not fit the game.
void validate_strategy(const CompiledGame &game,
                       const QuantumStrategy &strategy);

/// The deterministic strategy as a quantum strategy that measures nothing.
[[nodiscard]] QuantumStrategy
as_quantum_strategy(const CompiledGame &game,
                    const DeterministicStrategy &strategy,
                    ResourceModel model = ResourceModel::OnePairPerOwnerPair);

enum class WiringTemplate {
    /// Each player copies the outcome of one designated pair per
    /// counterpart into its shared regions and keeps its own product +1
    /// where required.
    HubCopy,
    /// Each owned vertex outputs the product of the outcomes of its own
    /// pairs; vertices without pairs output +1.
    Direct,
};

/// Strategy skeleton for a template, all angles 0.
[[nodiscard]] QuantumStrategy
wiring_template(const CompiledGame &game, WiringTemplate kind,
                ResourceModel model = ResourceModel::OnePairPerOwnerPair);

// ---------------------------------------------------------------------------
// Exact evaluation

struct QuantumOptions {
    std::size_t pair_budget = 12;
};

/**
 * @brief Exact winning probability of a fixed wiring as a function of the
 * measurement angles.
 *
 * Every winning condition is a parity of outcome bits. For each input the
 * independent conditions are expanded into characters of the outcome
 * distribution, whose expectations are products of pair correlators. The
 * result is a sum of weighted products of cos(a - b) terms, evaluated in
 * time linear in the number of surviving terms.
 */
class QuantumEvaluator {
  public:
    /// Throws BudgetExceeded when more than pair_budget pairs are active.
    QuantumEvaluator(const CompiledGame &game, const QuantumStrategy &skeleton,
                     const QuantumOptions &options = {});

    /// Angles of the strategy in parameter order.
    [[nodiscard]] std::vector<double>
    parameters(const QuantumStrategy &strategy) const;
    void apply(QuantumStrategy &strategy,
               const std::vector<double> &params) const;

    [[nodiscard]] std::size_t dimension() const { return slots_.size(); }
    [[nodiscard]] double value(const std::vector<double> &params) const;

  private:
    struct Slot {
        PlayerIndex player;
        Bit input;
        std::size_t pair;
    };
    struct Term {
        double coefficient;
        /// Parameter index pairs (a, b) contributing cos(a - b).
        std::vector<std::pair<std::size_t, std::size_t>> factors;
    };

    std::vector<Slot> slots_;
    std::vector<Term> terms_;
};

[[nodiscard]] double exact_quantum_value(const CompiledGame &game,
                                         const QuantumStrategy &strategy,
                                         const QuantumOptions &options = {});

// ---------------------------------------------------------------------------
// Optimization

struct OptimizeOptions {
    int restarts = 20;
    int grid_size = 24;
    double tolerance = 1e-9;
    std::uint64_t seed = 0;
    int max_sweeps = 200;
    WiringTemplate wiring = WiringTemplate::HubCopy;
    ResourceModel resources = ResourceModel::OnePairPerOwnerPair;
    std::size_t pair_budget = 12;
    Execution execution = Execution::Parallel;
};

struct QuantumValueResult {
    double value = 0.0;
    QuantumStrategy strategy;
    int restarts_used = 0;
    bool converged = false;
};

/// Lower bound on the quantum value by multi-start coordinate ascent over
/// the angles of the chosen wiring template.
[[nodiscard]] QuantumValueResult
optimize_quantum(const CompiledGame &game, const OptimizeOptions &options = {});

struct TargetProbeResult {
    double value = 0.0;
    int restarts_used = 0;
    bool converged = false;
};

/**
 * Quantum probe for target-mode games: one EPR pair per pair of players,
 * one angle per (player, pair, input), and a free response table from
 * (input, own outcomes) to declared values. Angles and tables are improved
 * alternately. Classical strategies are a special case, so the probe starts
 * no lower than the classical optimum it happens to reach.
 */
[[nodiscard]] TargetProbeResult
target_quantum_probe(const CompiledGame &game,
                     const OptimizeOptions &options = {});

// ---------------------------------------------------------------------------
// Closed forms and analytic conditions

/// Quantum value of a star with n1 branches reached by equal-angle EPR
/// strategies. The angle is restricted to where both c cos(theta) and
/// c sin(theta) stay at most 1, i.e. where they are realizable
/// correlations.
[[nodiscard]] double closed_form_star_quantum(const ClosedFormParams &params);

/// Advantage condition of the CHSH game with input distribution
/// (p00, p01, p10, p11). Throws std::invalid_argument on zero entries or
/// when the entries do not sum to 1.
[[nodiscard]] bool unbalanced_chsh_has_advantage(double p00, double p01,
                                                 double p10, double p11);

/// Geometric means of sines and cosines are bounded by the sine and cosine
/// of the mean angle. Throws std::invalid_argument for fewer than two
/// angles or angles outside [0, pi/2].
[[nodiscard]] bool trig_power_mean_holds(const std::vector<double> &angles);

} // namespace graphgame
