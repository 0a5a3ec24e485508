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

#include "graphgame/game_runner.hpp"

#include <cmath>
#include <stdexcept>

#include "graphgame/errors.hpp"
#include "graphgame/rng.hpp"

namespace graphgame {

LocalPlayer::LocalPlayer(const CompiledGame &game, PlayerIndex self,
                         const SessionStrategy &strategy) {
    for (Bit b = 0; b < 2; ++b) {
        owned_[b] = game.owned(self, b).members();
    }
    if (const auto *det = std::get_if<DeterministicStrategy>(&strategy)) {
        signs_ = det->signs[self];
    } else {
        const auto &q = std::get<QuantumStrategy>(strategy);
        angles_ = q.angles[self];
        wiring_ = q.wiring[self];
        quantum_ = true;
    }
}

std::vector<MeasurementRequest> LocalPlayer::plan(Bit input) const {
    std::vector<MeasurementRequest> out;
    for (const auto &[pair, angle] : angles_[input]) {
        out.push_back({pair, angle});
    }
    return out;
}

std::map<std::size_t, Sign> LocalPlayer::respond(PlayerView view) const {
    std::map<std::size_t, Sign> out;
    for (auto v : owned_[view.input]) {
        if (!quantum_) {
            out[v] = signs_[view.input][v];
            continue;
        }
        const auto &expr = wiring_[view.input].at(v);
        Sign s = expr.sign;
        for (auto pair : expr.pairs) {
            for (const auto &o : view.outcomes) {
                if (o.pair == pair) {
                    s *= o.outcome;
                }
            }
        }
        out[v] = s;
    }
    return out;
}

namespace {

struct Session {
    const CompiledGame &game;
    std::vector<LocalPlayer> players;
    std::vector<EprPair> pairs;
    std::vector<double> cdf;
};

Session open_session(const CompiledGame &game, const SessionConfig &config) {
    if (game.is_target()) {
        throw UnsupportedGame("the simulator needs a consistency-mode game");
    }
    if (config.rounds == 0) {
        throw std::invalid_argument("a session needs at least one round");
    }
    Session s{game, {}, {}, {}};
    if (const auto *det = std::get_if<DeterministicStrategy>(&config.strategy)) {
        check_strategy_domain(game, *det);
    } else {
        const auto &q = std::get<QuantumStrategy>(config.strategy);
        validate_strategy(game, q);
        s.pairs = q.model.pairs;
    }
    for (PlayerIndex p = 0; p < game.players(); ++p) {
        s.players.emplace_back(game, p, config.strategy);
    }
    double acc = 0.0;
    for (double w : game.weights()) {
        acc += w;
        s.cdf.push_back(acc);
    }
    return s;
}

std::uint32_t sample_input(const Session &s, double u) {
    const double target = u * s.cdf.back();
    std::uint32_t last_positive = 0;
    for (std::uint32_t x = 0; x < s.cdf.size(); ++x) {
        const double w = s.game.weights()[x];
        if (w > 0.0) {
            last_positive = x;
            if (target < s.cdf[x]) {
                return x;
            }
        }
    }
    return last_positive;
}

Sign fair_sign(SplitMix64 &rng) { return rng.uniform() < 0.5 ? 1 : -1; }

struct RoundResult {
    std::uint32_t x;
    std::vector<PairOutcome> outcomes;
    std::vector<std::map<std::size_t, Sign>> signs;
};

RoundResult play_round(const Session &s, std::uint64_t seed,
                       std::uint64_t round) {
    SplitMix64 rng(stream_seed(seed, round));
    RoundResult out;
    out.x = sample_input(s, rng.uniform());
    const auto n = s.game.players();

    // referee -> players: own input only
    std::vector<std::map<std::size_t, double>> requested(n);
    for (PlayerIndex p = 0; p < n; ++p) {
        for (const auto &req : s.players[p].plan(input_bit(out.x, p))) {
            requested[p][req.pair] = req.angle;
        }
    }

    // nature measures pairs in order
    std::vector<std::vector<OwnOutcome>> own(n);
    for (std::size_t k = 0; k < s.pairs.size(); ++k) {
        const auto &e = s.pairs[k];
        const auto a = requested[e.first].find(k);
        const auto b = requested[e.second].find(k);
        const bool has_a = a != requested[e.first].end();
        const bool has_b = b != requested[e.second].end();
        PairOutcome po{k, std::nullopt, std::nullopt};
        if (has_a && has_b) {
            const auto table = pair_outcome_distribution(a->second, b->second);
            const double u = rng.uniform();
            double acc = 0.0;
            int cell = 3;
            for (int c = 0; c < 4; ++c) {
                acc += table[static_cast<std::size_t>(c)];
                if (u < acc) {
                    cell = c;
                    break;
                }
            }
            po.first = (cell & 2) != 0 ? -1 : 1;
            po.second = (cell & 1) != 0 ? -1 : 1;
        } else if (has_a) {
            po.first = fair_sign(rng);
        } else if (has_b) {
            po.second = fair_sign(rng);
        } else {
            continue;
        }
        if (po.first) {
            own[e.first].push_back({k, *po.first});
        }
        if (po.second) {
            own[e.second].push_back({k, *po.second});
        }
        out.outcomes.push_back(po);
    }

    out.signs.resize(n);
    for (PlayerIndex p = 0; p < n; ++p) {
        out.signs[p] = s.players[p].respond({input_bit(out.x, p), own[p]});
    }
    return out;
}

SignTable sign_table(const CompiledGame &game, const RoundResult &round) {
    SignTable table(game.players(), std::vector<Sign>(game.vertex_count(), 0));
    for (PlayerIndex p = 0; p < game.players(); ++p) {
        for (const auto &[v, sign] : round.signs[p]) {
            table[p][v] = sign;
        }
    }
    return table;
}

struct Tally {
    std::vector<std::uint64_t> plays;
    std::vector<std::uint64_t> wins;
};

void play_range(const Session &s, std::uint64_t seed, std::uint64_t begin,
                std::uint64_t end, Tally &tally) {
    std::vector<std::optional<std::vector<RegionCheck>>> checks(
        s.game.input_count());
    for (std::uint64_t r = begin; r < end; ++r) {
        const auto round = play_round(s, seed, r);
        auto &c = checks[round.x];
        if (!c) {
            c = s.game.checks(round.x);
        }
        ++tally.plays[round.x];
        if (checks_pass(*c, sign_table(s.game, round))) {
            ++tally.wins[round.x];
        }
    }
}

} // namespace

SessionStats run_session(const CompiledGame &game,
                         const SessionConfig &config) {
    const auto session = open_session(game, config);
    const auto inputs = game.input_count();
    Tally total{std::vector<std::uint64_t>(inputs, 0),
                std::vector<std::uint64_t>(inputs, 0)};

    if (config.execution == Execution::Serial) {
        play_range(session, config.seed, 0, config.rounds, total);
    } else {
#pragma omp parallel
        {
            Tally local{std::vector<std::uint64_t>(inputs, 0),
                        std::vector<std::uint64_t>(inputs, 0)};
            constexpr std::int64_t batch = 1024;
            const auto batches =
                static_cast<std::int64_t>((config.rounds + batch - 1) / batch);
#pragma omp for schedule(static) nowait
            for (std::int64_t b = 0; b < batches; ++b) {
                const auto begin = static_cast<std::uint64_t>(b * batch);
                const auto end = std::min<std::uint64_t>(begin + batch,
                                                         config.rounds);
                play_range(session, config.seed, begin, end, local);
            }
#pragma omp critical(graphgame_session_merge)
            for (std::uint32_t x = 0; x < inputs; ++x) {
                total.plays[x] += local.plays[x];
                total.wins[x] += local.wins[x];
            }
        }
    }

    SessionStats stats;
    stats.rounds = config.rounds;
    for (std::uint32_t x = 0; x < inputs; ++x) {
        stats.wins += total.wins[x];
        if (total.plays[x] > 0) {
            stats.per_input_counts[mask_bitstring(x, game.players())] = {
                total.plays[x], total.wins[x]};
        }
    }
    stats.estimate = static_cast<double>(stats.wins) /
                     static_cast<double>(stats.rounds);
    stats.std_error = std::sqrt(stats.estimate * (1.0 - stats.estimate) /
                                static_cast<double>(stats.rounds));
    return stats;
}

RoundRecord replay_round(const CompiledGame &game, const SessionConfig &config,
                         std::uint64_t round_index) {
    const auto session = open_session(game, config);
    if (round_index >= config.rounds) {
        throw std::out_of_range("round " + std::to_string(round_index) +
                                " is outside a session of " +
                                std::to_string(config.rounds) + " rounds");
    }
    const auto round = play_round(session, config.seed, round_index);
    RoundRecord out;
    out.x = from_mask(round.x, game.players());
    out.outcomes = round.outcomes;
    out.y.values.resize(game.players());
    for (PlayerIndex p = 0; p < game.players(); ++p) {
        for (const auto &[v, sign] : round.signs[p]) {
            out.y.values[p][game.vertex_name(v)] = sign;
        }
    }
    out.verdict = evaluate_payoff(game.source(), out.x, out.y).verdict;
    return out;
}

} // namespace graphgame
