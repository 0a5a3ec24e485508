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

#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "graphgame/io.hpp"

namespace oracle {

std::filesystem::path fixture(const std::string &name) {
    return std::filesystem::path(GRAPHGAME_FIXTURE_DIR) / name;
}

GraphicGame load_fixture(const std::string &name) {
    return graphgame::load_game(fixture(name));
}

namespace {

const std::vector<std::string> &owned(const GraphicGame &g, std::size_t p,
                                      int b) {
    return g.assignments.owned[p][static_cast<std::size_t>(b)];
}

bool has(const std::vector<std::string> &set, const std::string &v) {
    return std::find(set.begin(), set.end(), v) != set.end();
}

std::vector<std::string> intersect(const std::vector<std::string> &a,
                                   const std::vector<std::string> &b) {
    std::vector<std::string> out;
    for (const auto &v : a) {
        if (has(b, v)) {
            out.push_back(v);
        }
    }
    return out;
}

std::vector<std::vector<int>> all_inputs(std::size_t n) {
    std::vector<std::vector<int>> out;
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        std::vector<int> x(n);
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = static_cast<int>((mask >> i) & 1U);
        }
        out.push_back(x);
    }
    return out;
}

} // namespace

double prob(const GraphicGame &game, const std::vector<int> &x) {
    if (const auto *iid = std::get_if<graphgame::IidInputs>(&game.distribution)) {
        double p = 1.0;
        for (int b : x) {
            p *= b == 0 ? iid->p : 1.0 - iid->p;
        }
        return p;
    }
    std::string key;
    for (int b : x) {
        key += static_cast<char>('0' + b);
    }
    const auto &table = std::get<graphgame::JointInputs>(game.distribution).table;
    auto it = table.find(key);
    return it == table.end() ? 0.0 : it->second;
}

bool wins(const GraphicGame &game, const std::vector<int> &x,
          const std::vector<std::map<std::string, int>> &signs) {
    const auto n = game.players;
    const auto m = game.split;
    auto product = [&](std::size_t p, const std::vector<std::string> &vs) {
        int s = 1;
        for (const auto &v : vs) {
            s *= signs[p].at(v);
        }
        return s;
    };
    for (std::size_t i = m; i < n; ++i) {
        if (product(i, owned(game, i, x[i])) != 1) {
            return false;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = std::max(i + 1, m); j < n; ++j) {
            const auto region = intersect(owned(game, i, x[i]), owned(game, j, x[j]));
            if (region.empty()) {
                continue;
            }
            const int want = (i < m && x[i] == 1 && x[j] == 1) ? -1 : 1;
            if (product(i, region) * product(j, region) != want) {
                return false;
            }
        }
    }
    return true;
}

double classical_value(const GraphicGame &game) {
    // one variable per (player, input, owned vertex)
    struct Var {
        std::size_t p;
        int b;
        std::string v;
    };
    std::vector<Var> vars;
    for (std::size_t p = 0; p < game.players; ++p) {
        for (int b = 0; b < 2; ++b) {
            for (const auto &v : owned(game, p, b)) {
                vars.push_back({p, b, v});
            }
        }
    }
    if (vars.size() > 22) {
        throw std::runtime_error("oracle: too many sign variables");
    }
    const auto inputs = all_inputs(game.players);
    double best = 0.0;
    for (std::uint64_t lambda = 0; lambda < (std::uint64_t{1} << vars.size());
         ++lambda) {
        double total = 0.0;
        for (const auto &x : inputs) {
            std::vector<std::map<std::string, int>> signs(game.players);
            for (std::size_t k = 0; k < vars.size(); ++k) {
                if (vars[k].b == x[vars[k].p]) {
                    signs[vars[k].p][vars[k].v] = ((lambda >> k) & 1U) ? -1 : 1;
                }
            }
            if (wins(game, x, signs)) {
                total += prob(game, x);
            }
        }
        best = std::max(best, total);
    }
    return best;
}

bool tuple_level(const GraphicGame &game, std::size_t i, int s) {
    const auto n = game.players;
    const auto m = game.split;
    std::vector<std::size_t> upper;
    for (std::size_t j = m; j < n; ++j) {
        upper.push_back(j);
    }
    // every (s-1)-subset of the upper players, every input combination
    for (std::uint32_t subset = 0; subset < (1U << upper.size()); ++subset) {
        if (std::popcount(subset) != s - 1) {
            continue;
        }
        std::vector<std::size_t> members{i};
        for (std::size_t k = 0; k < upper.size(); ++k) {
            if ((subset >> k) & 1U) {
                members.push_back(upper[k]);
            }
        }
        // each member must also share with i for all input pairs
        bool in_a = true;
        for (std::size_t k = 1; k < members.size() && in_a; ++k) {
            for (int a = 0; a < 2 && in_a; ++a) {
                for (int b = 0; b < 2 && in_a; ++b) {
                    in_a = !intersect(owned(game, i, a), owned(game, members[k], b)).empty();
                }
            }
        }
        if (!in_a) {
            continue;
        }
        bool ok = true;
        for (std::uint32_t combo = 0; combo < (1U << members.size()) && ok; ++combo) {
            auto common = owned(game, members[0], static_cast<int>(combo & 1U));
            for (std::size_t k = 1; k < members.size(); ++k) {
                common = intersect(common, owned(game, members[k],
                                                 static_cast<int>((combo >> k) & 1U)));
            }
            ok = !common.empty();
        }
        if (ok) {
            return true;
        }
    }
    return false;
}

std::optional<int> sharing_index(const GraphicGame &game, std::size_t i) {
    if (!tuple_level(game, i, 2)) {
        return std::nullopt;
    }
    int best = 2;
    for (int s = 3; s <= static_cast<int>(game.players - game.split) + 1; ++s) {
        if (tuple_level(game, i, s)) {
            best = s;
        }
    }
    return best;
}

int independence_number(const GraphicGame &game) {
    const auto n = game.players;
    auto shares = [&](std::size_t i, std::size_t j) {
        for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
                if (!intersect(owned(game, i, a), owned(game, j, b)).empty()) {
                    return true;
                }
            }
        }
        return false;
    };
    std::function<int(std::size_t, std::vector<std::size_t> &)> grow =
        [&](std::size_t next, std::vector<std::size_t> &chosen) -> int {
        if (next == n) {
            return static_cast<int>(chosen.size());
        }
        int best = grow(next + 1, chosen);
        const bool free = std::none_of(chosen.begin(), chosen.end(),
                                       [&](std::size_t c) { return shares(c, next); });
        if (free) {
            chosen.push_back(next);
            best = std::max(best, grow(next + 1, chosen));
            chosen.pop_back();
        }
        return best;
    };
    std::vector<std::size_t> chosen;
    return grow(0, chosen);
}

double target_value(const GraphicGame &game) {
    const auto n = game.players;
    const auto &tables = game.targets().tables;
    const auto inputs = all_inputs(n);
    auto key = [](const std::vector<int> &x) {
        std::string s;
        for (int b : x) {
            s += static_cast<char>('0' + b);
        }
        return s;
    };
    std::vector<std::vector<std::int64_t>> alphabet(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::set<std::int64_t> values;
        for (const auto &[k, v] : tables[i]) {
            values.insert(v);
        }
        alphabet[i].assign(values.begin(), values.end());
    }
    double best = 0.0;
    std::vector<std::size_t> digits(2 * n, 0);
    while (true) {
        double total = 0.0;
        for (const auto &x : inputs) {
            bool ok = true;
            for (std::size_t i = 0; i < n && ok; ++i) {
                ok = alphabet[i][digits[2 * i + static_cast<std::size_t>(x[i])]] ==
                     tables[i].at(key(x));
            }
            if (ok) {
                total += prob(game, x);
            }
        }
        best = std::max(best, total);
        std::size_t k = 0;
        while (k < digits.size() && ++digits[k] == alphabet[k / 2].size()) {
            digits[k] = 0;
            ++k;
        }
        if (k == digits.size()) {
            break;
        }
    }
    return best;
}

// ---------------------------------------------------------------------------

Amplitudes epr_state() {
    const double r = 1.0 / std::sqrt(2.0);
    return {r, 0.0, 0.0, r};
}

namespace {

// Eigenvector of cos(t) Z + sin(t) X for eigenvalue a.
std::array<std::complex<double>, 2> eigenvector(double t, int a) {
    if (a == 1) {
        return {std::cos(t / 2), std::sin(t / 2)};
    }
    return {-std::sin(t / 2), std::cos(t / 2)};
}

} // namespace

double measure_probability(const Amplitudes &psi, double theta_a,
                           double theta_b, int a, int b) {
    const auto u = eigenvector(theta_a, a);
    const auto w = eigenvector(theta_b, b);
    std::complex<double> amp = 0.0;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            amp += std::conj(u[static_cast<std::size_t>(i)]) *
                   std::conj(w[static_cast<std::size_t>(j)]) *
                   psi[static_cast<std::size_t>(2 * i + j)];
        }
    }
    return std::norm(amp);
}

double correlation(double theta_a, double theta_b) {
    const auto psi = epr_state();
    double e = 0.0;
    for (int a : {1, -1}) {
        for (int b : {1, -1}) {
            e += a * b * measure_probability(psi, theta_a, theta_b, a, b);
        }
    }
    return e;
}

double quantum_value(const graphgame::CompiledGame &game,
                     const graphgame::QuantumStrategy &strategy) {
    const auto &src = game.source();
    const auto n = src.players;
    const auto psi = epr_state();
    const auto &pairs = strategy.model.pairs;
    double total = 0.0;
    for (const auto &x : all_inputs(n)) {
        const double w = prob(src, x);
        if (w <= 0.0) {
            continue;
        }
        // measured sides at this input
        struct Side {
            std::size_t pair;
            std::size_t player;
            double angle;
        };
        std::vector<std::optional<double>> first(pairs.size()), second(pairs.size());
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            const auto &angles_a = strategy.angles[pairs[k].first][static_cast<std::size_t>(x[pairs[k].first])];
            const auto &angles_b = strategy.angles[pairs[k].second][static_cast<std::size_t>(x[pairs[k].second])];
            if (auto it = angles_a.find(k); it != angles_a.end()) {
                first[k] = it->second;
            }
            if (auto it = angles_b.find(k); it != angles_b.end()) {
                second[k] = it->second;
            }
        }
        // enumerate two outcome bits per pair; unmeasured sides are fixed
        const std::uint64_t combos = std::uint64_t{1} << (2 * pairs.size());
        double won = 0.0;
        for (std::uint64_t o = 0; o < combos; ++o) {
            double p = 1.0;
            std::vector<std::array<int, 2>> out(pairs.size());
            for (std::size_t k = 0; k < pairs.size() && p > 0.0; ++k) {
                const int a = ((o >> (2 * k)) & 1U) ? -1 : 1;
                const int b = ((o >> (2 * k + 1)) & 1U) ? -1 : 1;
                out[k] = {a, b};
                if (first[k] && second[k]) {
                    p *= measure_probability(psi, *first[k], *second[k], a, b);
                } else if (first[k]) {
                    p *= b == 1 ? 0.5 : 0.0;
                } else if (second[k]) {
                    p *= a == 1 ? 0.5 : 0.0;
                } else {
                    p *= (a == 1 && b == 1) ? 1.0 : 0.0;
                }
            }
            if (p <= 0.0) {
                continue;
            }
            std::vector<std::map<std::string, int>> signs(n);
            for (std::size_t i = 0; i < n; ++i) {
                for (const auto &[v, expr] : strategy.wiring[i][static_cast<std::size_t>(x[i])]) {
                    int s = expr.sign;
                    for (auto k : expr.pairs) {
                        s *= pairs[k].first == i ? out[k][0] : out[k][1];
                    }
                    signs[i][game.vertex_name(v)] = s;
                }
            }
            if (wins(src, x, signs)) {
                won += p;
            }
        }
        total += w * won;
    }
    return total;
}

namespace {

GraphicGame make(std::vector<std::string> vertices, std::size_t n,
                 std::vector<std::vector<std::string>> sets, double p) {
    GraphicGame g;
    g.graph.vertices = std::move(vertices);
    g.players = n;
    g.split = 1;
    g.assignments.owned.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        g.assignments.owned[i] = {sets[i], sets[i]};
    }
    g.distribution = graphgame::IidInputs{p};
    return g;
}

} // namespace

GraphicGame star_game(int n1, double p) {
    std::vector<std::string> vertices;
    std::vector<std::vector<std::string>> sets(static_cast<std::size_t>(n1));
    for (int j = 1; j < n1; ++j) {
        const auto s = "s" + std::to_string(j);
        const auto w = "w" + std::to_string(j);
        vertices.push_back(s);
        vertices.push_back(w);
        sets[0].push_back(s);
        sets[static_cast<std::size_t>(j)] = {s, w};
    }
    return make(vertices, static_cast<std::size_t>(n1), sets, p);
}

GraphicGame shared_game(int l, double p) {
    std::vector<std::string> vertices{"v"};
    std::vector<std::vector<std::string>> sets(static_cast<std::size_t>(l));
    sets[0] = {"v"};
    for (int j = 1; j < l; ++j) {
        const auto w = "w" + std::to_string(j);
        vertices.push_back(w);
        sets[static_cast<std::size_t>(j)] = {"v", w};
    }
    return make(vertices, static_cast<std::size_t>(l), sets, p);
}

} // namespace oracle
