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

#include "graphgame/compiled_game.hpp"

#include "graphgame/errors.hpp"

namespace graphgame {

CompiledGame::CompiledGame(GraphicGame game) : game_(std::move(game)) {
    const auto report = validate_game(game_);
    if (!report.empty()) {
        std::string what = "invalid game:";
        for (const auto &v : report) {
            what += "\n  " + v.message;
        }
        throw InvalidGame(what);
    }

    const auto n = game_.players;
    owned_.resize(n);
    for (PlayerIndex i = 0; i < n; ++i) {
        for (Bit b = 0; b < 2; ++b) {
            VertexSet set(vertex_count());
            for (const auto &name : game_.assignments.owned[i][b]) {
                set.insert(*game_.graph.index_of(name));
            }
            owned_[i][b] = std::move(set);
        }
    }

    weights_ = input_weights(game_.distribution, n);

    if (game_.is_target()) {
        const auto &tables = game_.targets().tables;
        targets_.assign(n, std::vector<std::int64_t>(input_count()));
        for (PlayerIndex i = 0; i < n; ++i) {
            for (std::uint32_t x = 0; x < input_count(); ++x) {
                targets_[i][x] = tables[i].at(mask_bitstring(x, n));
            }
        }
    }
}

bool CompiledGame::shares_always(PlayerIndex i, PlayerIndex j) const {
    for (Bit a = 0; a < 2; ++a) {
        for (Bit b = 0; b < 2; ++b) {
            if (!owned_[i][a].intersects(owned_[j][b])) {
                return false;
            }
        }
    }
    return true;
}

bool CompiledGame::shares_ever(PlayerIndex i, PlayerIndex j) const {
    for (Bit a = 0; a < 2; ++a) {
        for (Bit b = 0; b < 2; ++b) {
            if (owned_[i][a].intersects(owned_[j][b])) {
                return true;
            }
        }
    }
    return false;
}

std::vector<RegionCheck> CompiledGame::checks(std::uint32_t x) const {
    using C = ConditionCheck::Condition;
    const auto n = players();
    const auto m = split();
    std::vector<RegionCheck> out;

    // (a) players m+1..n must assign an overall product of +1.
    for (PlayerIndex i = m; i < n; ++i) {
        out.push_back({C::SoloProduct, i, i,
                       owned_[i][input_bit(x, i)].members(), Bit{0}});
    }
    // (b) mixed pairs: zeta_i * zeta_j = (-1)^{x_i x_j}.
    for (PlayerIndex i = 0; i < m; ++i) {
        for (PlayerIndex j = m; j < n; ++j) {
            const Bit xi = input_bit(x, i);
            const Bit xj = input_bit(x, j);
            auto shared = region(i, xi, j, xj);
            if (!shared.empty()) {
                out.push_back({C::MixedPair, i, j, shared.members(),
                               static_cast<Bit>(xi & xj)});
            }
        }
    }
    // (c) pairs above m must agree.
    for (PlayerIndex i = m; i < n; ++i) {
        for (PlayerIndex j = i + 1; j < n; ++j) {
            auto shared = region(i, input_bit(x, i), j, input_bit(x, j));
            if (!shared.empty()) {
                out.push_back({C::UpperPair, i, j, shared.members(), Bit{0}});
            }
        }
    }
    return out;
}

bool checks_pass(const std::vector<RegionCheck> &checks,
                 const SignTable &signs) {
    for (const auto &check : checks) {
        Sign product = 1;
        for (auto v : check.region) {
            product *= signs[check.first][v];
            if (check.condition != ConditionCheck::Condition::SoloProduct) {
                product *= signs[check.second][v];
            }
        }
        if (product != (check.parity != 0 ? -1 : 1)) {
            return false;
        }
    }
    return true;
}

} // namespace graphgame
