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

#include <algorithm>
#include <cmath>

#include "graphgame/errors.hpp"
#include "graphgame/optimizer.hpp"
#include "graphgame/quantum_solver.hpp"

namespace graphgame {

namespace {

constexpr long double max_probe_work = 1 << 22;

class TargetModel {
  public:
    explicit TargetModel(const CompiledGame &game) : game_(game) {
        const auto n = game.players();
        for (PlayerIndex a = 0; a < n; ++a) {
            for (PlayerIndex b = a + 1; b < n; ++b) {
                pairs_.emplace_back(a, b);
            }
        }
        alphabet_.resize(n);
        for (PlayerIndex p = 0; p < n; ++p) {
            for (std::uint32_t x = 0; x < game.input_count(); ++x) {
                alphabet_[p].push_back(game.target(p, x));
            }
            auto &a = alphabet_[p];
            std::sort(a.begin(), a.end());
            a.erase(std::unique(a.begin(), a.end()), a.end());
        }
    }

    [[nodiscard]] std::size_t pair_count() const { return pairs_.size(); }
    [[nodiscard]] std::size_t degree() const { return game_.players() - 1; }
    [[nodiscard]] std::size_t angle_count() const {
        return game_.players() * 2 * degree();
    }
    [[nodiscard]] std::size_t table_count() const {
        return game_.players() * 2 * (std::size_t{1} << degree());
    }
    [[nodiscard]] std::size_t alphabet_size(std::size_t table_slot) const {
        return alphabet_[table_slot / (2 * (std::size_t{1} << degree()))].size();
    }

    // angle index of player p's half of pair k at input b
    [[nodiscard]] std::size_t angle_slot(PlayerIndex p, Bit b,
                                         std::size_t local) const {
        return (p * 2 + b) * degree() + local;
    }
    [[nodiscard]] std::size_t table_slot(PlayerIndex p, Bit b,
                                         std::size_t tuple) const {
        return (p * 2 + b) * (std::size_t{1} << degree()) + tuple;
    }

    /// table[slot] indexes the player's alphabet.
    [[nodiscard]] double value(const std::vector<double> &angles,
                               const std::vector<std::size_t> &table) const {
        const auto n = game_.players();
        const auto pc = pairs_.size();
        const std::uint64_t combos = std::uint64_t{1} << (2 * pc);
        double total = 0.0;
        std::vector<double> corr(pc);
        for (std::uint32_t x = 0; x < game_.input_count(); ++x) {
            const double w = game_.weights()[x];
            if (w <= 0.0) {
                continue;
            }
            for (std::size_t k = 0; k < pc; ++k) {
                const auto [a, b] = pairs_[k];
                corr[k] = epr_correlator(
                    angles[angle_slot(a, input_bit(x, a), local(a, k))],
                    angles[angle_slot(b, input_bit(x, b), local(b, k))]);
            }
            double won = 0.0;
            for (std::uint64_t o = 0; o < combos; ++o) {
                // bits 2k and 2k+1: outcomes of the first and second owner
                bool ok = true;
                for (PlayerIndex p = 0; p < n && ok; ++p) {
                    std::size_t tuple = 0;
                    for (std::size_t k = 0; k < pc; ++k) {
                        const auto [a, b] = pairs_[k];
                        if (a == p || b == p) {
                            const auto bit = (o >> (2 * k + (a == p ? 0 : 1))) & 1U;
                            tuple |= static_cast<std::size_t>(bit) << local(p, k);
                        }
                    }
                    const Bit xp = input_bit(x, p);
                    ok = alphabet_[p][table[table_slot(p, xp, tuple)]] ==
                         game_.target(p, x);
                }
                if (!ok) {
                    continue;
                }
                double prob = 1.0;
                for (std::size_t k = 0; k < pc; ++k) {
                    const bool same = ((o >> (2 * k)) & 1U) == ((o >> (2 * k + 1)) & 1U);
                    prob *= (same ? 1.0 + corr[k] : 1.0 - corr[k]) / 4.0;
                }
                won += prob;
            }
            total += w * won;
        }
        return std::clamp(total, 0.0, 1.0);
    }

  private:
    // position of pair k among player p's pairs
    [[nodiscard]] std::size_t local(PlayerIndex p, std::size_t k) const {
        const auto [a, b] = pairs_[k];
        const PlayerIndex other = a == p ? b : a;
        return other < p ? other : other - 1;
    }

    const CompiledGame &game_;
    std::vector<std::pair<PlayerIndex, PlayerIndex>> pairs_;
    std::vector<std::vector<std::int64_t>> alphabet_;
};

struct ProbeRun {
    double value = 0.0;
    bool converged = false;
};

ProbeRun probe_once(const TargetModel &model, const OptimizeOptions &options,
                    std::uint64_t stream) {
    SplitMix64 rng(stream);
    auto angles = random_angles(rng, model.angle_count());
    std::vector<std::size_t> table(model.table_count());
    for (std::size_t s = 0; s < table.size(); ++s) {
        table[s] = static_cast<std::size_t>(rng() % model.alphabet_size(s));
    }
    const Objective f = [&](const std::vector<double> &a) {
        return model.value(a, table);
    };

    ProbeRun out;
    out.value = f(angles);
    for (int sweep = 0; sweep < options.max_sweeps; ++sweep) {
        const double before = out.value;
        for (std::size_t s = 0; s < table.size(); ++s) {
            const auto keep = table[s];
            for (std::size_t a = 0; a < model.alphabet_size(s); ++a) {
                if (a == keep) {
                    continue;
                }
                const auto previous = table[s];
                table[s] = a;
                if (const double v = f(angles); v > out.value) {
                    out.value = v;
                } else {
                    table[s] = previous;
                }
            }
        }
        for (std::size_t k = 0; k < angles.size(); ++k) {
            out.value = line_search(f, angles, k, out.value, options.grid_size,
                                    options.tolerance);
        }
        if (out.value - before < options.tolerance) {
            out.converged = true;
            break;
        }
    }
    return out;
}

} // namespace

TargetProbeResult target_quantum_probe(const CompiledGame &game,
                                       const OptimizeOptions &options) {
    if (!game.is_target()) {
        throw UnsupportedGame("target_quantum_probe needs a target-mode game");
    }
    const TargetModel model(game);
    if (model.pair_count() > options.pair_budget) {
        throw BudgetExceeded("target probe needs " +
                                 std::to_string(model.pair_count()) +
                                 " EPR pairs, budget is " +
                                 std::to_string(options.pair_budget),
                             static_cast<long double>(model.pair_count()),
                             static_cast<long double>(options.pair_budget));
    }
    const long double work = std::ldexp(1.0L, static_cast<int>(2 * model.pair_count() + game.players()));
    if (work > max_probe_work) {
        throw BudgetExceeded("target probe outcome space is too large", work,
                             max_probe_work);
    }

    const int restarts = std::max(options.restarts, 1);
    std::vector<ProbeRun> runs(static_cast<std::size_t>(restarts));
    auto run = [&](int r) {
        runs[static_cast<std::size_t>(r)] = probe_once(
            model, options,
            stream_seed(options.seed, static_cast<std::uint64_t>(r)));
    };
    if (options.execution == Execution::Serial) {
        for (int r = 0; r < restarts; ++r) {
            run(r);
        }
    } else {
#pragma omp parallel for schedule(dynamic, 1)
        for (int r = 0; r < restarts; ++r) {
            run(r);
        }
    }
    std::size_t best = 0;
    for (std::size_t r = 1; r < runs.size(); ++r) {
        if (runs[r].value > runs[best].value) {
            best = r;
        }
    }
    return {runs[best].value, restarts, runs[best].converged};
}

} // namespace graphgame
