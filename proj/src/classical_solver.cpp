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

#include "graphgame/classical_solver.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <set>
#include <stdexcept>

#include "graphgame/errors.hpp"

namespace graphgame {

namespace {

constexpr std::size_t max_enumerable_bits = 62;

std::string space_message(const char *what, long double size,
                          std::uint64_t budget) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s has %.6Lg strategies, budget is %llu",
                  what, size, static_cast<unsigned long long>(budget));
    return buf;
}

} // namespace

DeterministicStrategy DeterministicStrategy::all_plus(const CompiledGame &game) {
    DeterministicStrategy out;
    out.signs.resize(game.players());
    for (PlayerIndex p = 0; p < game.players(); ++p) {
        for (Bit b = 0; b < 2; ++b) {
            out.signs[p][b].assign(game.vertex_count(), 0);
            for (auto v : game.owned(p, b).members()) {
                out.signs[p][b][v] = 1;
            }
        }
    }
    return out;
}

SignTable DeterministicStrategy::realize(const CompiledGame &game,
                                         std::uint32_t x) const {
    SignTable out(game.players());
    for (PlayerIndex p = 0; p < game.players(); ++p) {
        out[p] = signs[p][input_bit(x, p)];
    }
    return out;
}

OutputAssignment DeterministicStrategy::output(const CompiledGame &game,
                                               std::uint32_t x) const {
    OutputAssignment out;
    out.values.resize(game.players());
    for (PlayerIndex p = 0; p < game.players(); ++p) {
        const Bit b = input_bit(x, p);
        for (auto v : game.owned(p, b).members()) {
            out.values[p][game.vertex_name(v)] = signs[p][b][v];
        }
    }
    return out;
}

void check_strategy_domain(const CompiledGame &game,
                           const DeterministicStrategy &strategy) {
    if (strategy.signs.size() != game.players()) {
        throw DomainMismatch("strategy covers " +
                             std::to_string(strategy.signs.size()) +
                             " players, game has " +
                             std::to_string(game.players()));
    }
    for (PlayerIndex p = 0; p < game.players(); ++p) {
        for (Bit b = 0; b < 2; ++b) {
            const auto &row = strategy.signs[p][b];
            if (row.size() != game.vertex_count()) {
                throw DomainMismatch("strategy sign table has the wrong size");
            }
            for (std::size_t v = 0; v < row.size(); ++v) {
                const bool owned = game.owned(p, b).contains(v);
                const bool ok = owned ? (row[v] == 1 || row[v] == -1)
                                      : row[v] == 0;
                if (!ok) {
                    throw DomainMismatch(
                        "player " + std::to_string(p + 1) + " input " +
                        std::to_string(b) + ": vertex '" +
                        game.vertex_name(v) +
                        (owned ? "' needs a sign of +1 or -1"
                               : "' is not owned but has a sign"));
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------

long double StrategySpace::size() const {
    return std::ldexp(1.0L, static_cast<int>(bits()));
}

double StrategySpace::value(std::uint64_t lambda) const {
    double total = 0.0;
    for (std::size_t x = 0; x < checks.size(); ++x) {
        if (weights[x] <= 0.0) {
            continue;
        }
        bool won = true;
        for (const auto &c : checks[x]) {
            if ((std::popcount(lambda & c.mask) & 1) != c.parity) {
                won = false;
                break;
            }
        }
        if (won) {
            total += weights[x];
        }
    }
    return total;
}

DeterministicStrategy StrategySpace::strategy(const CompiledGame &game,
                                              std::uint64_t lambda) const {
    auto out = DeterministicStrategy::all_plus(game);
    for (std::size_t k = 0; k < groups.size(); ++k) {
        if ((lambda >> k) & 1U) {
            const auto &g = groups[k];
            out.signs[g.player][g.input][g.vertices.front()] = -1;
        }
    }
    out.index = lambda;
    return out;
}

StrategySpace classical_strategy_space(const CompiledGame &game) {
    const auto n = game.players();
    StrategySpace space;
    space.weights = game.weights();

    // representative[p][b][v] = group index, or -1.
    std::vector<std::array<std::vector<long>, 2>> representative(n);
    for (PlayerIndex p = 0; p < n; ++p) {
        for (Bit b = 0; b < 2; ++b) {
            representative[p][b].assign(game.vertex_count(), -1);
            std::vector<std::pair<std::uint64_t, std::size_t>> seen;
            for (auto v : game.owned(p, b).members()) {
                std::uint64_t signature = 0;
                for (PlayerIndex q = 0; q < n; ++q) {
                    for (Bit c = 0; c < 2 && q != p; ++c) {
                        if (game.owned(q, c).contains(v)) {
                            signature |= std::uint64_t{1} << (2 * q + c);
                        }
                    }
                }
                if (signature == 0 && p < game.split()) {
                    continue;
                }
                auto it = std::find_if(seen.begin(), seen.end(), [&](auto &e) {
                    return e.first == signature;
                });
                if (it == seen.end()) {
                    seen.emplace_back(signature, space.groups.size());
                    representative[p][b][v] =
                        static_cast<long>(space.groups.size());
                    space.groups.push_back({p, b, {v}});
                } else {
                    space.groups[it->second].vertices.push_back(v);
                }
            }
        }
    }

    space.checks.assign(game.input_count(), {});
    if (space.bits() > max_enumerable_bits) {
        return space;
    }
    auto mask_of = [&](PlayerIndex p, Bit b,
                       const std::vector<std::size_t> &region) {
        std::uint64_t mask = 0;
        for (auto v : region) {
            const long k = representative[p][b][v];
            if (k >= 0) {
                mask ^= std::uint64_t{1} << k;
            }
        }
        return mask;
    };
    for (std::uint32_t x = 0; x < game.input_count(); ++x) {
        if (space.weights[x] <= 0.0) {
            continue;
        }
        auto &out = space.checks[x];
        bool impossible = false;
        for (const auto &check : game.checks(x)) {
            std::uint64_t mask =
                mask_of(check.first, input_bit(x, check.first), check.region);
            if (check.condition != ConditionCheck::Condition::SoloProduct) {
                mask ^= mask_of(check.second, input_bit(x, check.second),
                                check.region);
            }
            if (mask == 0) {
                impossible = impossible || check.parity != 0;
                continue;
            }
            ParityCheck pc{mask, check.parity};
            if (std::none_of(out.begin(), out.end(), [&](const auto &o) {
                    return o.mask == pc.mask && o.parity == pc.parity;
                })) {
                out.push_back(pc);
            }
        }
        if (impossible) {
            // never won: a check with no free signs that fails
            out.assign(1, ParityCheck{0, 1});
        }
    }
    return space;
}

ClassicalResult classical_value(const CompiledGame &game,
                                const ClassicalOptions &options) {
    if (game.is_target()) {
        throw UnsupportedGame("classical_value needs a consistency-mode game");
    }
    const auto space = classical_strategy_space(game);
    const long double size = space.size();
    if (space.bits() > max_enumerable_bits ||
        size > static_cast<long double>(options.budget)) {
        throw BudgetExceeded(
            space_message("classical strategy space", size, options.budget),
            size, static_cast<long double>(options.budget));
    }
    const std::uint64_t count = std::uint64_t{1} << space.bits();

    ArgMax best;
    if (options.execution == Execution::Serial) {
        for (std::uint64_t lambda = 0; lambda < count; ++lambda) {
            best.offer(space.value(lambda), lambda);
        }
    } else {
#pragma omp parallel
        {
            ArgMax local;
#pragma omp for schedule(static) nowait
            for (std::int64_t k = 0; k < static_cast<std::int64_t>(count);
                 ++k) {
                const auto lambda = static_cast<std::uint64_t>(k);
                local.offer(space.value(lambda), lambda);
            }
#pragma omp critical(graphgame_classical_merge)
            best.merge(local);
        }
    }

    ClassicalResult out;
    out.value = best.value;
    out.witness = space.strategy(game, best.index);
    out.space_size = size;
    return out;
}

double strategy_value(const CompiledGame &game,
                      const DeterministicStrategy &strategy) {
    if (game.is_target()) {
        throw UnsupportedGame("strategy_value needs a consistency-mode game");
    }
    check_strategy_domain(game, strategy);
    double total = 0.0;
    for (std::uint32_t x = 0; x < game.input_count(); ++x) {
        const double w = game.weights()[x];
        if (w > 0.0 && checks_pass(game.checks(x), strategy.realize(game, x))) {
            total += w;
        }
    }
    return total;
}

// ---------------------------------------------------------------------------
// Target games

double gyni_classical_bound(const InputDistribution &dist, std::size_t n) {
    if (n == 0 || n > max_players) {
        throw std::invalid_argument("player count out of range");
    }
    const auto w = input_weights(dist, n);
    const std::uint32_t all = static_cast<std::uint32_t>(w.size() - 1);
    double best = 0.0;
    for (std::uint32_t x = 0; x < w.size(); ++x) {
        best = std::max(best, w[x] + w[x ^ all]);
    }
    return best;
}

namespace {

std::vector<std::vector<std::int64_t>>
dense_targets(const TargetFunction &targets, std::size_t n) {
    if (n == 0 || n > max_players) {
        throw std::invalid_argument("player count out of range");
    }
    if (targets.tables.size() != n) {
        throw std::invalid_argument("need one target table per player");
    }
    const std::uint32_t count = std::uint32_t{1} << n;
    std::vector<std::vector<std::int64_t>> f(n,
                                             std::vector<std::int64_t>(count));
    for (PlayerIndex i = 0; i < n; ++i) {
        for (std::uint32_t x = 0; x < count; ++x) {
            auto it = targets.tables[i].find(mask_bitstring(x, n));
            if (it == targets.tables[i].end()) {
                throw std::invalid_argument(
                    "target table of player " + std::to_string(i + 1) +
                    " misses input " + mask_bitstring(x, n));
            }
            f[i][x] = it->second;
        }
    }
    return f;
}

} // namespace

bool check_injective(const TargetFunction &targets, std::size_t n) {
    const auto f = dense_targets(targets, n);
    std::set<std::vector<std::int64_t>> images;
    const std::uint32_t count = std::uint32_t{1} << n;
    for (std::uint32_t x = 0; x < count; ++x) {
        std::vector<std::int64_t> y(n);
        for (PlayerIndex i = 0; i < n; ++i) {
            y[i] = f[i][x];
        }
        if (!images.insert(std::move(y)).second) {
            return false;
        }
    }
    return true;
}

TargetClassicalResult target_classical_value(const TargetFunction &targets,
                                             const InputDistribution &dist,
                                             std::size_t n,
                                             const ClassicalOptions &options) {
    const auto f = dense_targets(targets, n);
    const auto w = input_weights(dist, n);

    std::vector<std::vector<std::int64_t>> alphabet(n);
    long double size = 1;
    for (PlayerIndex i = 0; i < n; ++i) {
        alphabet[i] = f[i];
        std::sort(alphabet[i].begin(), alphabet[i].end());
        alphabet[i].erase(std::unique(alphabet[i].begin(), alphabet[i].end()),
                          alphabet[i].end());
        size *= static_cast<long double>(alphabet[i].size()) *
                static_cast<long double>(alphabet[i].size());
    }
    if (size > static_cast<long double>(options.budget)) {
        throw BudgetExceeded(
            space_message("target response space", size, options.budget), size,
            static_cast<long double>(options.budget));
    }
    const auto count = static_cast<std::uint64_t>(size);

    // Digits of lambda, least significant first: player 0 input 0, player
    // 0 input 1, player 1 input 0, ...
    auto decode = [&](std::uint64_t lambda) {
        TargetStrategy s;
        s.responses.resize(n);
        for (PlayerIndex i = 0; i < n; ++i) {
            for (Bit b = 0; b < 2; ++b) {
                const auto radix = alphabet[i].size();
                s.responses[i][b] = alphabet[i][lambda % radix];
                lambda /= radix;
            }
        }
        return s;
    };
    auto value = [&](const TargetStrategy &s) {
        double total = 0.0;
        for (std::uint32_t x = 0; x < w.size(); ++x) {
            if (w[x] <= 0.0) {
                continue;
            }
            bool won = true;
            for (PlayerIndex i = 0; i < n && won; ++i) {
                won = s.responses[i][input_bit(x, i)] == f[i][x];
            }
            if (won) {
                total += w[x];
            }
        }
        return total;
    };

    ArgMax best;
    if (options.execution == Execution::Serial) {
        for (std::uint64_t lambda = 0; lambda < count; ++lambda) {
            best.offer(value(decode(lambda)), lambda);
        }
    } else {
#pragma omp parallel
        {
            ArgMax local;
#pragma omp for schedule(static) nowait
            for (std::int64_t k = 0; k < static_cast<std::int64_t>(count);
                 ++k) {
                const auto lambda = static_cast<std::uint64_t>(k);
                local.offer(value(decode(lambda)), lambda);
            }
#pragma omp critical(graphgame_target_merge)
            best.merge(local);
        }
    }

    TargetClassicalResult out;
    out.value = best.value;
    out.witness = decode(best.index);
    out.space_size = size;
    return out;
}

TargetClassicalResult target_classical_value(const CompiledGame &game,
                                             const ClassicalOptions &options) {
    if (!game.is_target()) {
        throw UnsupportedGame("target_classical_value needs a target-mode game");
    }
    return target_classical_value(game.source().targets(),
                                  game.source().distribution, game.players(),
                                  options);
}

} // namespace graphgame
