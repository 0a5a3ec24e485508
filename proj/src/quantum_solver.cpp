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

#include "graphgame/quantum_solver.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>

#include "graphgame/errors.hpp"
#include "graphgame/optimizer.hpp"

namespace graphgame {

double epr_correlator(double theta_a, double theta_b) {
    return std::cos(theta_a - theta_b);
}

OutcomeTable pair_outcome_distribution(double theta_a, double theta_b) {
    const double c = epr_correlator(theta_a, theta_b);
    const double same = (1.0 + c) / 4.0;
    const double diff = (1.0 - c) / 4.0;
    return {same, diff, diff, same};
}

// ---------------------------------------------------------------------------

PairModel PairModel::build(const CompiledGame &game, ResourceModel model) {
    PairModel out;
    for (std::size_t v = 0; v < game.vertex_count(); ++v) {
        std::vector<PlayerIndex> owners;
        for (PlayerIndex p = 0; p < game.players(); ++p) {
            if (game.owned(p, 0).contains(v) || game.owned(p, 1).contains(v)) {
                owners.push_back(p);
            }
        }
        if (model == ResourceModel::OnePairPerVertex && owners.size() > 2) {
            throw UnsupportedGame("vertex '" + game.vertex_name(v) +
                                  "' has " + std::to_string(owners.size()) +
                                  " owners; one EPR pair cannot serve them");
        }
        for (std::size_t a = 0; a < owners.size(); ++a) {
            for (std::size_t b = a + 1; b < owners.size(); ++b) {
                if (game.constrained_pair(owners[a], owners[b])) {
                    out.pairs.push_back({v, owners[a], owners[b]});
                }
            }
        }
    }
    return out;
}

std::optional<std::size_t> PairModel::find(std::size_t vertex, PlayerIndex a,
                                           PlayerIndex b) const {
    const auto lo = std::min(a, b);
    const auto hi = std::max(a, b);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        if (pairs[k].vertex == vertex && pairs[k].first == lo &&
            pairs[k].second == hi) {
            return k;
        }
    }
    return std::nullopt;
}

std::size_t QuantumStrategy::active_pairs() const {
    std::set<std::size_t> active;
    for (const auto &per_player : angles) {
        for (const auto &per_input : per_player) {
            for (const auto &[pair, angle] : per_input) {
                active.insert(pair);
            }
        }
    }
    return active.size();
}

void validate_strategy(const CompiledGame &game,
                       const QuantumStrategy &strategy) {
    const auto n = game.players();
    if (strategy.angles.size() != n || strategy.wiring.size() != n) {
        throw DomainMismatch("quantum strategy must cover all " +
                             std::to_string(n) + " players");
    }
    for (const auto &pair : strategy.model.pairs) {
        if (pair.vertex >= game.vertex_count() || pair.first >= n ||
            pair.second >= n || pair.first >= pair.second) {
            throw DomainMismatch("EPR pair refers to an unknown vertex or "
                                 "player");
        }
    }
    for (PlayerIndex p = 0; p < n; ++p) {
        const auto who = "player " + std::to_string(p + 1);
        for (Bit b = 0; b < 2; ++b) {
            for (const auto &[pair, angle] : strategy.angles[p][b]) {
                if (pair >= strategy.model.pairs.size() ||
                    !strategy.model.holds(pair, p)) {
                    throw DomainMismatch(who + " measures a pair it does not "
                                               "hold");
                }
                if (!std::isfinite(angle)) {
                    throw DomainMismatch(who + " has a non-finite angle");
                }
            }
            const auto &owned = game.owned(p, b);
            const auto &wiring = strategy.wiring[p][b];
            if (wiring.size() != owned.size()) {
                throw DomainMismatch(who + " input " + std::to_string(b) +
                                     ": wiring must give one output per "
                                     "owned vertex");
            }
            for (const auto &[vertex, output] : wiring) {
                if (vertex >= game.vertex_count() || !owned.contains(vertex)) {
                    throw DomainMismatch(who + " wires a vertex it does not "
                                               "own");
                }
                if (output.sign != 1 && output.sign != -1) {
                    throw DomainMismatch(who + " wiring sign must be +1 or -1");
                }
                std::set<std::size_t> seen;
                for (auto pair : output.pairs) {
                    if (!strategy.angles[p][b].contains(pair)) {
                        throw DomainMismatch(
                            who + " wiring uses an outcome it does not "
                                  "measure at that input");
                    }
                    if (!seen.insert(pair).second) {
                        throw DomainMismatch(who + " wiring repeats an "
                                                   "outcome");
                    }
                }
            }
        }
    }
}

QuantumStrategy as_quantum_strategy(const CompiledGame &game,
                                    const DeterministicStrategy &strategy,
                                    ResourceModel model) {
    check_strategy_domain(game, strategy);
    QuantumStrategy out;
    out.model = PairModel::build(game, model);
    out.angles.resize(game.players());
    out.wiring.resize(game.players());
    for (PlayerIndex p = 0; p < game.players(); ++p) {
        for (Bit b = 0; b < 2; ++b) {
            for (auto v : game.owned(p, b).members()) {
                out.wiring[p][b][v] = {strategy.signs[p][b][v], {}};
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Exact evaluation

namespace {

struct ParityRow {
    std::uint64_t mask;
    Bit rhs;
};

// Row-reduces in place; returns false if the system is inconsistent.
bool reduce(std::vector<ParityRow> &rows) {
    std::vector<ParityRow> basis;
    for (auto row : rows) {
        for (const auto &b : basis) {
            if (row.mask & (std::uint64_t{1} << (63 - std::countl_zero(b.mask)))) {
                row.mask ^= b.mask;
                row.rhs ^= b.rhs;
            }
        }
        if (row.mask == 0) {
            if (row.rhs != 0) {
                return false;
            }
            continue;
        }
        // keep pivots distinct: clear this pivot from earlier rows
        const auto pivot = std::uint64_t{1} << (63 - std::countl_zero(row.mask));
        for (auto &b : basis) {
            if (b.mask & pivot) {
                b.mask ^= row.mask;
                b.rhs ^= row.rhs;
            }
        }
        basis.push_back(row);
    }
    rows = std::move(basis);
    return true;
}

} // namespace

QuantumEvaluator::QuantumEvaluator(const CompiledGame &game,
                                   const QuantumStrategy &skeleton,
                                   const QuantumOptions &options) {
    validate_strategy(game, skeleton);
    const auto active = skeleton.active_pairs();
    if (active > options.pair_budget) {
        throw BudgetExceeded("strategy uses " + std::to_string(active) +
                                 " EPR pairs, budget is " +
                                 std::to_string(options.pair_budget),
                             static_cast<long double>(active),
                             static_cast<long double>(options.pair_budget));
    }
    if (active > 31) {
        throw BudgetExceeded("too many EPR pairs for exact evaluation",
                             static_cast<long double>(active), 31.0L);
    }

    // slot index of (player, input, pair)
    std::map<std::tuple<PlayerIndex, Bit, std::size_t>, std::size_t> slot_of;
    for (PlayerIndex p = 0; p < game.players(); ++p) {
        for (Bit b = 0; b < 2; ++b) {
            for (const auto &[pair, angle] : skeleton.angles[p][b]) {
                slot_of[{p, b, pair}] = slots_.size();
                slots_.push_back({p, b, pair});
            }
        }
    }

    const auto &pairs = skeleton.model.pairs;
    for (std::uint32_t x = 0; x < game.input_count(); ++x) {
        const double w = game.weights()[x];
        if (w <= 0.0) {
            continue;
        }
        // outcome bit of (pair, side) measured at x
        std::map<std::pair<std::size_t, int>, int> bit_of;
        std::vector<std::pair<std::size_t, std::size_t>> bit_slot;
        auto side_of = [&](std::size_t pair, PlayerIndex p) {
            return pairs[pair].first == p ? 0 : 1;
        };
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            for (int side = 0; side < 2; ++side) {
                const auto p = side == 0 ? pairs[k].first : pairs[k].second;
                const Bit b = input_bit(x, p);
                auto it = slot_of.find({p, b, k});
                if (it != slot_of.end()) {
                    bit_of[{k, side}] = static_cast<int>(bit_slot.size());
                    bit_slot.emplace_back(k, it->second);
                }
            }
        }

        auto contribution = [&](PlayerIndex p, const std::vector<std::size_t> &region,
                                ParityRow &row) {
            const Bit b = input_bit(x, p);
            for (auto v : region) {
                const auto &out = skeleton.wiring[p][b].at(v);
                row.rhs ^= out.sign == -1 ? 1 : 0;
                for (auto k : out.pairs) {
                    row.mask ^= std::uint64_t{1} << bit_of.at({k, side_of(k, p)});
                }
            }
        };

        std::vector<ParityRow> rows;
        for (const auto &check : game.checks(x)) {
            ParityRow row{0, check.parity};
            contribution(check.first, check.region, row);
            if (check.condition != ConditionCheck::Condition::SoloProduct) {
                contribution(check.second, check.region, row);
            }
            rows.push_back(row);
        }
        if (!reduce(rows)) {
            continue;
        }

        const auto r = rows.size();
        const double scale = w * std::ldexp(1.0, -static_cast<int>(r));
        for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << r);
             ++subset) {
            std::uint64_t mask = 0;
            Bit rhs = 0;
            for (std::size_t t = 0; t < r; ++t) {
                if ((subset >> t) & 1U) {
                    mask ^= rows[t].mask;
                    rhs ^= rows[t].rhs;
                }
            }
            // every outcome bit in the character must pair up with the
            // other half of its EPR pair, or the expectation vanishes
            Term term{rhs != 0 ? -scale : scale, {}};
            bool survives = true;
            for (std::uint64_t rest = mask; rest != 0 && survives;) {
                const auto bit = static_cast<std::size_t>(std::countr_zero(rest));
                const auto [pair, slot] = bit_slot[bit];
                const auto partner = bit_of.find({pair, 1 - side_of(pair, slots_[slot].player)});
                if (partner == bit_of.end() ||
                    !((mask >> partner->second) & 1U)) {
                    survives = false;
                    break;
                }
                term.factors.emplace_back(slot, bit_slot[static_cast<std::size_t>(partner->second)].second);
                rest &= ~(std::uint64_t{1} << bit);
                rest &= ~(std::uint64_t{1} << partner->second);
            }
            if (survives) {
                terms_.push_back(std::move(term));
            }
        }
    }
}

std::vector<double>
QuantumEvaluator::parameters(const QuantumStrategy &strategy) const {
    std::vector<double> out;
    out.reserve(slots_.size());
    for (const auto &s : slots_) {
        out.push_back(strategy.angles[s.player][s.input].at(s.pair));
    }
    return out;
}

void QuantumEvaluator::apply(QuantumStrategy &strategy,
                             const std::vector<double> &params) const {
    for (std::size_t k = 0; k < slots_.size(); ++k) {
        const auto &s = slots_[k];
        strategy.angles[s.player][s.input][s.pair] = params[k];
    }
}

double QuantumEvaluator::value(const std::vector<double> &params) const {
    double total = 0.0;
    for (const auto &term : terms_) {
        double product = term.coefficient;
        for (const auto &[a, b] : term.factors) {
            product *= std::cos(params[a] - params[b]);
        }
        total += product;
    }
    return std::clamp(total, 0.0, 1.0);
}

double exact_quantum_value(const CompiledGame &game,
                           const QuantumStrategy &strategy,
                           const QuantumOptions &options) {
    if (game.is_target()) {
        throw UnsupportedGame("exact_quantum_value needs a consistency-mode "
                              "game");
    }
    const QuantumEvaluator evaluator(game, strategy, options);
    return evaluator.value(evaluator.parameters(strategy));
}

// ---------------------------------------------------------------------------
// Optimization

QuantumValueResult optimize_quantum(const CompiledGame &game,
                                    const OptimizeOptions &options) {
    if (game.is_target()) {
        throw UnsupportedGame("optimize_quantum needs a consistency-mode game; "
                              "use target_quantum_probe");
    }
    auto skeleton = wiring_template(game, options.wiring, options.resources);
    const QuantumEvaluator evaluator(game, skeleton,
                                     {.pair_budget = options.pair_budget});

    QuantumValueResult out;
    if (evaluator.dimension() == 0) {
        out.value = evaluator.value({});
        out.strategy = std::move(skeleton);
        out.restarts_used = 0;
        out.converged = true;
        return out;
    }
    const Objective f = [&](const std::vector<double> &params) {
        return evaluator.value(params);
    };
    const AscentOptions ascent{.restarts = options.restarts,
                               .grid_size = options.grid_size,
                               .tolerance = options.tolerance,
                               .seed = options.seed,
                               .max_sweeps = options.max_sweeps,
                               .execution = options.execution};
    const auto best = maximize_angles(f, evaluator.dimension(), ascent);
    evaluator.apply(skeleton, best.point);
    out.value = best.value;
    out.strategy = std::move(skeleton);
    out.restarts_used = best.restarts_used;
    out.converged = best.converged;
    return out;
}

} // namespace graphgame
