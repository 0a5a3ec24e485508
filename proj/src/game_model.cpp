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

#include "graphgame/game_model.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "graphgame/compiled_game.hpp"
#include "graphgame/errors.hpp"

namespace graphgame {

std::optional<std::size_t> Graph::index_of(std::string_view name) const {
    auto it = std::find(vertices.begin(), vertices.end(), name);
    if (it == vertices.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - vertices.begin());
}

const std::vector<std::string> &AssignmentMap::at(PlayerIndex player,
                                                  Bit input) const {
    if (player >= owned.size() || input > 1) {
        throw std::out_of_range("no assignment for player " +
                                std::to_string(player + 1));
    }
    return owned[player][input];
}

std::string_view to_string(Violation::Kind kind) {
    using K = Violation::Kind;
    switch (kind) {
    case K::EmptyGraph:
        return "empty_graph";
    case K::DuplicateVertex:
        return "duplicate_vertex";
    case K::PlayerCount:
        return "player_count";
    case K::SplitOutOfRange:
        return "split_out_of_range";
    case K::UnknownPlayer:
        return "unknown_player";
    case K::UnknownVertex:
        return "unknown_vertex";
    case K::DuplicateOwnership:
        return "duplicate_ownership";
    case K::Disjointness:
        return "disjointness";
    case K::Distribution:
        return "distribution";
    case K::TargetTable:
        return "target_table";
    }
    return "unknown";
}

namespace {

bool well_formed_bits(std::string_view bits, std::size_t n) {
    return bits.size() == n && std::all_of(bits.begin(), bits.end(), [](char c) {
               return c == '0' || c == '1';
           });
}

void validate_distribution(const GraphicGame &game, ValidationReport &out) {
    using K = Violation::Kind;
    if (const auto *iid = std::get_if<IidInputs>(&game.distribution)) {
        if (!(iid->p >= 0.0 && iid->p <= 1.0)) {
            out.push_back({K::Distribution,
                           "iid probability must lie in [0, 1]",
                           std::nullopt, std::nullopt, std::nullopt});
        }
        return;
    }
    const auto &joint = std::get<JointInputs>(game.distribution);
    double total = 0.0;
    for (const auto &[bits, prob] : joint.table) {
        if (!well_formed_bits(bits, game.players)) {
            out.push_back({K::Distribution,
                           "joint entry '" + bits + "' is not a " +
                               std::to_string(game.players) + "-bit string",
                           std::nullopt, std::nullopt, std::nullopt});
        }
        if (!(prob >= 0.0)) {
            out.push_back({K::Distribution,
                           "joint entry '" + bits + "' is negative",
                           std::nullopt, std::nullopt, std::nullopt});
        }
        total += prob;
    }
    if (std::abs(total - 1.0) > 1e-12) {
        out.push_back({K::Distribution,
                       "joint probabilities sum to " + std::to_string(total),
                       std::nullopt, std::nullopt, std::nullopt});
    }
}

void validate_targets(const GraphicGame &game, ValidationReport &out) {
    if (!game.is_target() || game.players == 0 ||
        game.players > max_players) {
        return;
    }
    const auto &tables = game.targets().tables;
    if (tables.size() != game.players) {
        out.push_back({Violation::Kind::TargetTable,
                       "expected one target table per player", std::nullopt,
                       std::nullopt, std::nullopt});
        return;
    }
    const std::uint32_t inputs = std::uint32_t{1} << game.players;
    for (PlayerIndex i = 0; i < tables.size(); ++i) {
        for (const auto &[bits, value] : tables[i]) {
            if (!well_formed_bits(bits, game.players)) {
                out.push_back({Violation::Kind::TargetTable,
                               "target key '" + bits + "' is malformed", i,
                               std::nullopt, std::nullopt});
            }
        }
        for (std::uint32_t x = 0; x < inputs; ++x) {
            if (!tables[i].contains(mask_bitstring(x, game.players))) {
                out.push_back({Violation::Kind::TargetTable,
                               "target table misses input " +
                                   mask_bitstring(x, game.players),
                               i, std::nullopt, std::nullopt});
            }
        }
    }
}

} // namespace

ValidationReport validate_game(const GraphicGame &game) {
    using K = Violation::Kind;
    ValidationReport out;

    if (game.graph.vertices.empty()) {
        out.push_back({K::EmptyGraph, "graph has no vertices", std::nullopt,
                       std::nullopt, std::nullopt});
    }
    std::set<std::string> seen;
    for (const auto &v : game.graph.vertices) {
        if (!seen.insert(v).second) {
            out.push_back({K::DuplicateVertex, "vertex '" + v + "' repeats",
                           std::nullopt, std::nullopt, v});
        }
    }

    if (game.players < 2 || game.players > max_players) {
        out.push_back({K::PlayerCount,
                       "player count must lie in [2, " +
                           std::to_string(max_players) + "]",
                       std::nullopt, std::nullopt, std::nullopt});
    }
    if (game.split < 1 || game.split >= game.players) {
        out.push_back({K::SplitOutOfRange, "m must satisfy 1 <= m < n",
                       std::nullopt, std::nullopt, std::nullopt});
    }

    for (PlayerIndex i = game.players; i < game.assignments.owned.size();
         ++i) {
        out.push_back({K::UnknownPlayer,
                       "assignment for player " + std::to_string(i + 1) +
                           " beyond n",
                       i, std::nullopt, std::nullopt});
    }

    const auto owned_count =
        std::min(game.players, game.assignments.owned.size());
    for (PlayerIndex i = 0; i < owned_count; ++i) {
        for (Bit b = 0; b < 2; ++b) {
            std::set<std::string> local;
            for (const auto &v : game.assignments.owned[i][b]) {
                if (!seen.contains(v)) {
                    out.push_back({K::UnknownVertex,
                                   "vertex '" + v + "' is not in the graph", i,
                                   b, v});
                }
                if (!local.insert(v).second) {
                    out.push_back({K::DuplicateOwnership,
                                   "vertex '" + v + "' listed twice", i, b, v});
                }
            }
        }
    }

    // V^{x_i} ∩ V^{x_j} = ∅ at x_i = x_j = 1 for 1 <= i < j <= m.
    const auto upper = std::min(game.split, owned_count);
    for (PlayerIndex i = 0; i < upper; ++i) {
        for (PlayerIndex j = i + 1; j < upper; ++j) {
            const auto &a = game.assignments.owned[i][1];
            const auto &b = game.assignments.owned[j][1];
            for (const auto &v : a) {
                if (std::find(b.begin(), b.end(), v) != b.end()) {
                    out.push_back({K::Disjointness,
                                   "players " + std::to_string(i + 1) +
                                       " and " + std::to_string(j + 1) +
                                       " both own '" + v + "' at input 1",
                                   i, Bit{1}, v});
                }
            }
        }
    }

    validate_distribution(game, out);
    validate_targets(game, out);
    return out;
}

std::string to_bitstring(const InputVector &x) {
    std::string out;
    out.reserve(x.size());
    for (auto b : x) {
        out.push_back(b != 0 ? '1' : '0');
    }
    return out;
}

InputVector parse_bitstring(std::string_view bits) {
    InputVector x;
    x.reserve(bits.size());
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("input bitstring must be 0/1 only");
        }
        x.push_back(static_cast<Bit>(c - '0'));
    }
    return x;
}

std::uint32_t to_mask(const InputVector &x) {
    std::uint32_t mask = 0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (x[k] > 1) {
            throw std::invalid_argument("input bits must be 0 or 1");
        }
        mask |= static_cast<std::uint32_t>(x[k]) << k;
    }
    return mask;
}

InputVector from_mask(std::uint32_t mask, std::size_t n) {
    InputVector x(n);
    for (std::size_t k = 0; k < n; ++k) {
        x[k] = static_cast<Bit>((mask >> k) & 1U);
    }
    return x;
}

std::string mask_bitstring(std::uint32_t mask, std::size_t n) {
    return to_bitstring(from_mask(mask, n));
}

double input_probability(const InputDistribution &dist, const InputVector &x) {
    if (const auto *iid = std::get_if<IidInputs>(&dist)) {
        double prob = 1.0;
        for (auto b : x) {
            if (b > 1) {
                throw std::invalid_argument("input bits must be 0 or 1");
            }
            prob *= b == 0 ? iid->p : 1.0 - iid->p;
        }
        return prob;
    }
    const auto &joint = std::get<JointInputs>(dist);
    const auto key = to_bitstring(x);
    if (!joint.table.empty() && joint.table.begin()->first.size() != x.size()) {
        throw std::invalid_argument("input length does not match the table");
    }
    auto it = joint.table.find(key);
    return it == joint.table.end() ? 0.0 : it->second;
}

std::vector<double> input_weights(const InputDistribution &dist,
                                  std::size_t n) {
    std::vector<double> w(std::size_t{1} << n);
    for (std::uint32_t x = 0; x < w.size(); ++x) {
        w[x] = input_probability(dist, from_mask(x, n));
    }
    return w;
}

std::vector<std::string> shared_region(const GraphicGame &game, PlayerIndex i,
                                       PlayerIndex j, Bit xi, Bit xj) {
    if (i >= game.players || j >= game.players) {
        throw std::out_of_range("unknown player index");
    }
    if (i == j) {
        throw std::invalid_argument("shared_region needs two distinct players");
    }
    const auto &a = game.assignments.at(i, xi);
    const auto &b = game.assignments.at(j, xj);
    std::vector<std::string> out;
    for (const auto &v : game.graph.vertices) {
        if (std::find(a.begin(), a.end(), v) != a.end() &&
            std::find(b.begin(), b.end(), v) != b.end()) {
            out.push_back(v);
        }
    }
    return out;
}

PayoffBreakdown evaluate_payoff(const GraphicGame &game, const InputVector &x,
                                const OutputAssignment &y) {
    if (game.is_target()) {
        throw UnsupportedGame("evaluate_payoff needs a consistency-mode game");
    }
    const CompiledGame compiled(game);
    const auto n = compiled.players();
    if (x.size() != n) {
        throw std::invalid_argument("input vector length does not match n");
    }
    if (y.values.size() != n) {
        throw DomainMismatch("assignment must cover every player");
    }
    const auto mask = to_mask(x);

    // signs[i][v]; 0 marks vertices outside the realized ownership.
    std::vector<std::vector<Sign>> signs(
        n, std::vector<Sign>(compiled.vertex_count(), 0));
    for (PlayerIndex i = 0; i < n; ++i) {
        const auto &owned = compiled.owned(i, x[i]);
        if (y.values[i].size() != owned.size()) {
            throw DomainMismatch("player " + std::to_string(i + 1) +
                                 " must sign exactly its owned vertices");
        }
        for (const auto &[name, sign] : y.values[i]) {
            auto v = game.graph.index_of(name);
            if (!v || !owned.contains(*v)) {
                throw DomainMismatch("player " + std::to_string(i + 1) +
                                     " signs unowned vertex '" + name + "'");
            }
            if (sign != 1 && sign != -1) {
                throw DomainMismatch("signs must be +1 or -1");
            }
            signs[i][*v] = sign;
        }
    }

    auto product = [&](PlayerIndex i, const std::vector<std::size_t> &verts) {
        Sign s = 1;
        for (auto v : verts) {
            s *= signs[i][v];
        }
        return s;
    };

    PayoffBreakdown out;
    out.solo_products.resize(n);
    for (PlayerIndex i = 0; i < n; ++i) {
        out.solo_products[i] = product(i, compiled.owned(i, x[i]).members());
    }

    out.verdict = true;
    for (const auto &check : compiled.checks(mask)) {
        const Sign required = check.parity != 0 ? -1 : 1;
        Sign observed = 0;
        if (check.condition == ConditionCheck::Condition::SoloProduct) {
            observed = product(check.first, check.region);
        } else {
            const Sign zi = product(check.first, check.region);
            const Sign zj = product(check.second, check.region);
            out.region_products[{check.first, check.second}] = {zi, zj};
            observed = zi * zj;
        }
        const bool passed = observed == required;
        out.checks.push_back({check.condition, check.first, check.second,
                              required, observed, passed});
        out.verdict = out.verdict && passed;
    }
    return out;
}

bool evaluate_target_payoff(const GraphicGame &game, const InputVector &x,
                            const std::vector<std::int64_t> &declared) {
    if (!game.is_target()) {
        throw UnsupportedGame("evaluate_target_payoff needs a target game");
    }
    const auto &tables = game.targets().tables;
    if (declared.size() != tables.size() || x.size() != game.players) {
        throw std::invalid_argument("one declared value per player required");
    }
    const auto key = to_bitstring(x);
    for (PlayerIndex i = 0; i < tables.size(); ++i) {
        auto it = tables[i].find(key);
        if (it == tables[i].end()) {
            throw DomainMismatch("target table of player " +
                                 std::to_string(i + 1) + " misses input " +
                                 key);
        }
        if (declared[i] != it->second) {
            return false;
        }
    }
    return true;
}

} // namespace graphgame
