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
#include <map>
#include <set>

#include "graphgame/quantum_solver.hpp"

namespace graphgame {

namespace {

QuantumStrategy empty_strategy(const CompiledGame &game, PairModel model) {
    QuantumStrategy out;
    out.model = std::move(model);
    out.angles.resize(game.players());
    out.wiring.resize(game.players());
    return out;
}

QuantumStrategy direct_template(const CompiledGame &game, PairModel model) {
    auto out = empty_strategy(game, std::move(model));
    const auto &pairs = out.model.pairs;
    for (PlayerIndex p = 0; p < game.players(); ++p) {
        for (Bit b = 0; b < 2; ++b) {
            for (auto v : game.owned(p, b).members()) {
                VertexOutput output;
                for (std::size_t k = 0; k < pairs.size(); ++k) {
                    if (pairs[k].vertex == v && out.model.holds(k, p)) {
                        output.pairs.push_back(k);
                        out.angles[p][b][k] = 0.0;
                    }
                }
                out.wiring[p][b][v] = std::move(output);
            }
        }
    }
    return out;
}

// GF(2) row: coefficients on the player's owned vertices, then on outcome
// symbols.
struct Row {
    std::vector<Bit> lhs;
    std::vector<Bit> symbols;
};

bool all_zero(const std::vector<Bit> &v) {
    return std::all_of(v.begin(), v.end(), [](Bit b) { return b == 0; });
}

void add_into(std::vector<Bit> &dst, const std::vector<Bit> &src) {
    for (std::size_t k = 0; k < dst.size(); ++k) {
        dst[k] ^= src[k];
    }
}

// Vertex sign expressions for one (player, input): each owned vertex maps
// to the set of symbols whose product it outputs.
std::vector<std::vector<std::size_t>>
solve_hub_copy(const CompiledGame &game, PlayerIndex p, Bit b,
               const std::vector<std::vector<long>> &symbol_of,
               const std::vector<bool> &alive, std::size_t symbol_count) {
    const auto owned = game.owned(p, b).members();
    const auto u = owned.size();
    std::vector<Row> rows;

    for (PlayerIndex q = 0; q < game.players(); ++q) {
        if (q == p || !game.constrained_pair(p, q)) {
            continue;
        }
        for (Bit xq = 0; xq < 2; ++xq) {
            const auto region = game.region(p, b, q, xq);
            if (region.empty()) {
                continue;
            }
            Row row{std::vector<Bit>(u, 0), std::vector<Bit>(symbol_count, 0)};
            for (std::size_t t = 0; t < u; ++t) {
                row.lhs[t] = region.contains(owned[t]) ? 1 : 0;
            }
            const long s = symbol_of[p][q];
            if (s >= 0 && alive[static_cast<std::size_t>(s)]) {
                row.symbols[static_cast<std::size_t>(s)] = 1;
            }
            rows.push_back(std::move(row));
        }
    }
    if (p >= game.split() && u > 0) {
        rows.push_back({std::vector<Bit>(u, 1),
                        std::vector<Bit>(symbol_count, 0)});
    }

    // Gauss-Jordan on the vertex columns.
    std::vector<std::size_t> pivot_row(u, rows.size());
    std::size_t rank = 0;
    for (std::size_t col = 0; col < u && rank < rows.size(); ++col) {
        std::size_t r = rank;
        while (r < rows.size() && rows[r].lhs[col] == 0) {
            ++r;
        }
        if (r == rows.size()) {
            continue;
        }
        std::swap(rows[r], rows[rank]);
        for (std::size_t k = 0; k < rows.size(); ++k) {
            if (k != rank && rows[k].lhs[col] != 0) {
                add_into(rows[k].lhs, rows[rank].lhs);
                add_into(rows[k].symbols, rows[rank].symbols);
            }
        }
        pivot_row[col] = rank;
        ++rank;
    }

    // Rows left without vertex terms relate outcome symbols. Each one is
    // resolved by expressing its highest symbol through the others.
    for (std::size_t k = rank; k < rows.size(); ++k) {
        if (all_zero(rows[k].symbols)) {
            continue;
        }
        std::size_t high = symbol_count;
        while (rows[k].symbols[high - 1] == 0) {
            --high;
        }
        --high;
        const auto relation = rows[k].symbols;
        for (auto &row : rows) {
            if (row.symbols[high] != 0) {
                add_into(row.symbols, relation);
            }
        }
    }

    // Free vertices sign +1; pivot vertices carry their row's symbols.
    std::vector<std::vector<std::size_t>> out(u);
    for (std::size_t col = 0; col < u; ++col) {
        if (pivot_row[col] == rows.size()) {
            continue;
        }
        const auto &row = rows[pivot_row[col]];
        for (std::size_t s = 0; s < symbol_count; ++s) {
            if (row.symbols[s] != 0) {
                out[col].push_back(s);
            }
        }
    }
    return out;
}

QuantumStrategy hub_copy_template(const CompiledGame &game, PairModel model) {
    const auto n = game.players();
    // symbol (p, q): p's outcome on the designated pair shared with q
    std::vector<std::vector<long>> symbol_of(n, std::vector<long>(n, -1));
    std::vector<std::pair<PlayerIndex, std::size_t>> symbols; // owner, pair
    for (PlayerIndex p = 0; p < n; ++p) {
        for (PlayerIndex q = 0; q < n; ++q) {
            if (p == q) {
                continue;
            }
            for (std::size_t k = 0; k < model.pairs.size(); ++k) {
                const auto &e = model.pairs[k];
                if ((e.first == p && e.second == q) ||
                    (e.first == q && e.second == p)) {
                    symbol_of[p][q] = static_cast<long>(symbols.size());
                    symbols.emplace_back(p, k);
                    break;
                }
            }
        }
    }
    const auto count = symbols.size();
    auto partner_symbol = [&](std::size_t s) {
        const auto [owner, pair] = symbols[s];
        const auto &e = model.pairs[pair];
        const auto other = e.first == owner ? e.second : e.first;
        return static_cast<std::size_t>(symbol_of[other][owner]);
    };

    std::vector<bool> alive(count, true);
    std::vector<std::array<std::vector<std::vector<std::size_t>>, 2>> solution(n);
    while (true) {
        std::vector<bool> used(count, false);
        for (PlayerIndex p = 0; p < n; ++p) {
            for (Bit b = 0; b < 2; ++b) {
                solution[p][b] = solve_hub_copy(game, p, b, symbol_of, alive,
                                                count);
                for (const auto &expr : solution[p][b]) {
                    for (auto s : expr) {
                        used[s] = true;
                    }
                }
            }
        }
        // an outcome is worth measuring only if the other half is measured
        bool changed = false;
        for (std::size_t s = 0; s < count; ++s) {
            if (alive[s] && !used[partner_symbol(s)]) {
                alive[s] = false;
                changed = true;
            }
        }
        if (!changed) {
            break;
        }
    }

    auto out = empty_strategy(game, std::move(model));
    for (PlayerIndex p = 0; p < n; ++p) {
        for (Bit b = 0; b < 2; ++b) {
            const auto owned = game.owned(p, b).members();
            for (std::size_t t = 0; t < owned.size(); ++t) {
                VertexOutput output;
                for (auto s : solution[p][b][t]) {
                    const auto pair = symbols[s].second;
                    output.pairs.push_back(pair);
                    out.angles[p][b][pair] = 0.0;
                }
                std::sort(output.pairs.begin(), output.pairs.end());
                out.wiring[p][b][owned[t]] = std::move(output);
            }
        }
    }
    return out;
}

} // namespace

QuantumStrategy wiring_template(const CompiledGame &game, WiringTemplate kind,
                                ResourceModel model) {
    auto pairs = PairModel::build(game, model);
    return kind == WiringTemplate::Direct ? direct_template(game, std::move(pairs))
                                          : hub_copy_template(game, std::move(pairs));
}

} // namespace graphgame
