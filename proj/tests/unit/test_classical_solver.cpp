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

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "graphgame/classical_solver.hpp"
#include "graphgame/errors.hpp"
#include "oracles.hpp"

using namespace graphgame;
using Catch::Matchers::WithinAbs;

namespace {

double omega_c(const GraphicGame &g, Execution ex = Execution::Parallel) {
    return classical_value(CompiledGame(g), {.execution = ex}).value;
}

TargetFunction make_targets(std::size_t n,
                            const std::function<std::int64_t(std::size_t, const InputVector &)> &f) {
    TargetFunction t;
    t.tables.resize(n);
    for (std::uint32_t x = 0; x < (1U << n); ++x) {
        const auto bits = from_mask(x, n);
        for (std::size_t i = 0; i < n; ++i) {
            t.tables[i][to_bitstring(bits)] = f(i, bits);
        }
    }
    return t;
}

TargetFunction cyclic_shift(std::size_t n) {
    return make_targets(n, [n](std::size_t i, const InputVector &x) {
        return static_cast<std::int64_t>(x[(i + 1) % n]);
    });
}

GraphicGame target_game(std::size_t n, TargetFunction targets,
                        InputDistribution dist) {
    GraphicGame g;
    g.graph.vertices = {"v"};
    g.players = n;
    g.split = 1;
    g.assignments.owned.resize(n);
    g.distribution = std::move(dist);
    g.payoff = std::move(targets);
    return g;
}

/// Renames vertices in reverse order and permutes the players above the
/// split by `perm`.
GraphicGame relabel(const GraphicGame &g, const std::vector<std::size_t> &perm) {
    GraphicGame out = g;
    std::map<std::string, std::string> rename;
    out.graph.vertices.clear();
    for (std::size_t k = g.graph.vertices.size(); k-- > 0;) {
        const auto name = "r" + std::to_string(k);
        rename[g.graph.vertices[k]] = name;
        out.graph.vertices.push_back(name);
    }
    for (std::size_t i = 0; i < g.players; ++i) {
        for (Bit b : {0, 1}) {
            auto &set = out.assignments.owned[perm[i]][b];
            set.clear();
            for (const auto &v : g.assignments.owned[i][b]) {
                set.push_back(rename.at(v));
            }
        }
    }
    return out;
}

} // namespace

TEST_CASE("classical_value examples") {
    CHECK_THAT(omega_c(oracle::load_fixture("chsh.game")), WithinAbs(0.75, 1e-12));
    CHECK_THAT(omega_c(oracle::load_fixture("star3.game")), WithinAbs(0.625, 1e-12));
    CHECK_THAT(omega_c(oracle::shared_game(3, 0.7)), WithinAbs(0.847, 1e-12));
    CHECK_THAT(omega_c(oracle::load_fixture("trivial.game")), WithinAbs(1.0, 1e-12));
}

TEST_CASE("classical_value matches the naive enumerator on the fixtures") {
    for (const auto *name : {"chsh.game", "star3.game", "star4.game", "shared3.game",
                             "chain4.game", "trivial.game", "disconnected.game"}) {
        INFO(name);
        const auto g = oracle::load_fixture(name);
        CHECK_THAT(omega_c(g), WithinAbs(oracle::classical_value(g), 1e-12));
    }
}

TEST_CASE("classical_value matches the naive enumerator on random games") {
    std::mt19937_64 rng(99);
    int checked = 0;
    while (checked < 60) {
        GraphicGame g;
        const std::size_t vertices = 2 + rng() % 3;
        for (std::size_t v = 0; v < vertices; ++v) {
            g.graph.vertices.push_back("v" + std::to_string(v));
        }
        g.players = 2 + rng() % 2;
        g.split = 1 + rng() % (g.players - 1);
        g.assignments.owned.resize(g.players);
        std::size_t vars = 0;
        for (auto &sets : g.assignments.owned) {
            for (auto &set : sets) {
                for (const auto &v : g.graph.vertices) {
                    if (rng() % 2 == 0) {
                        set.push_back(v);
                        ++vars;
                    }
                }
            }
        }
        g.distribution = IidInputs{static_cast<double>(rng() % 11) / 10.0};
        if (vars > 14 || !validate_game(g).empty()) {
            continue;
        }
        INFO("game " << checked);
        CHECK_THAT(omega_c(g), WithinAbs(oracle::classical_value(g), 1e-12));
        ++checked;
    }
}

TEST_CASE("star and shared oracle grids") {
    for (int k = 1; k <= 9; ++k) {
        const double p = k / 10.0;
        for (int n1 : {2, 3, 4}) {
            INFO("star n1=" << n1 << " p=" << p);
            CHECK_THAT(omega_c(oracle::star_game(n1, p)),
                       WithinAbs(closed_form_star_classical({.p = p, .n1 = n1}), 1e-12));
        }
        for (int l : {3, 4}) {
            INFO("shared l=" << l << " p=" << p);
            CHECK_THAT(omega_c(oracle::shared_game(l, p)),
                       WithinAbs(closed_form_shared_classical({.p = p, .l = l}), 1e-12));
        }
    }
}

TEST_CASE("closed form examples") {
    CHECK_THAT(closed_form_star_classical({.p = 0.5, .n1 = 2}), WithinAbs(0.75, 1e-15));
    CHECK_THAT(closed_form_star_classical({.p = 0.5, .n1 = 3}), WithinAbs(0.625, 1e-15));
    for (int n1 : {2, 3, 7}) {
        CHECK_THAT(closed_form_star_classical({.p = 1.0, .n1 = n1}), WithinAbs(1.0, 1e-15));
    }
    CHECK_THAT(closed_form_shared_classical({.p = 0.5, .l = 3}), WithinAbs(0.625, 1e-15));
    CHECK_THAT(closed_form_shared_classical({.p = 0.3, .l = 3}), WithinAbs(0.643, 1e-12));
    CHECK_THAT(closed_form_shared_classical({.p = 0.7, .l = 3}), WithinAbs(0.847, 1e-12));
    CHECK_THROWS_AS(validate({.p = 1.2}), std::invalid_argument);
    CHECK_THROWS_AS(validate({.n1 = 1}), std::invalid_argument);
    CHECK_THROWS_AS(validate({.l = 2}), std::invalid_argument);
    CHECK_THROWS_AS(validate({.p_star = -0.1}), std::invalid_argument);
}

TEST_CASE("closed forms scale linearly in p_star") {
    for (double p : {0.2, 0.5, 0.8}) {
        const double star = closed_form_star_classical({.p = p, .p_star = 1.0, .n1 = 3});
        const double shared = closed_form_shared_classical({.p = p, .p_star = 1.0, .l = 4});
        for (double ps : {0.25, 0.5, 1.0}) {
            CHECK_THAT(closed_form_star_classical({.p = p, .p_star = ps, .n1 = 3}) / ps,
                       WithinAbs(star, 1e-14));
            CHECK_THAT(closed_form_shared_classical({.p = p, .p_star = ps, .l = 4}) / ps,
                       WithinAbs(shared, 1e-14));
        }
    }
}

TEST_CASE("the two shared-vertex branches agree at p = 1/2") {
    for (int l : {3, 4, 5, 8}) {
        const double lo = 0.5 + std::pow(0.5, l);
        const double hi = 0.5 + std::pow(0.5, l - 1) - std::pow(0.5, l);
        CHECK_THAT(closed_form_shared_classical({.p = 0.5, .l = l}), WithinAbs(lo, 1e-15));
        CHECK_THAT(lo, WithinAbs(hi, 1e-15));
    }
}

TEST_CASE("serial and parallel enumeration agree on value and witness") {
    for (const auto *name : {"chsh.game", "star4.game", "chain4.game", "cube3.game"}) {
        INFO(name);
        const CompiledGame g(oracle::load_fixture(name));
        const auto a = classical_value(g, {.execution = Execution::Serial});
        const auto b = classical_value(g, {.execution = Execution::Parallel});
        CHECK(a.value == b.value);
        CHECK(a.witness == b.witness);
        CHECK(a.space_size == b.space_size);
    }
}

TEST_CASE("the witness attains the value and is the lowest optimal index") {
    for (const auto *name : {"chsh.game", "star3.game", "shared3.game", "disconnected.game"}) {
        INFO(name);
        const CompiledGame g(oracle::load_fixture(name));
        const auto result = classical_value(g);
        CHECK_THAT(strategy_value(g, result.witness), WithinAbs(result.value, 1e-12));
        const auto space = classical_strategy_space(g);
        for (std::uint64_t lambda = 0; lambda < result.witness.index; ++lambda) {
            CHECK(space.value(lambda) < result.value);
        }
        CHECK(space.strategy(g, result.witness.index) == result.witness);
    }
}

TEST_CASE("classical_value is invariant under relabeling") {
    const auto base = oracle::load_fixture("chain4.game");
    const double expected = omega_c(base);
    const auto reversed = relabel(base, {0, 1, 2, 3});
    CHECK_THAT(omega_c(reversed), WithinAbs(expected, 1e-12));

    // star leaves are interchangeable
    const auto star = oracle::star_game(4, 0.3);
    const double star_value = omega_c(star);
    std::vector<std::size_t> perm{0, 1, 2, 3};
    while (std::next_permutation(perm.begin() + 1, perm.end())) {
        CHECK_THAT(omega_c(relabel(star, perm)), WithinAbs(star_value, 1e-12));
    }
}

TEST_CASE("classical values are probabilities") {
    for (const auto *name : {"chsh.game", "star3.game", "star4.game", "shared3.game",
                             "chain4.game", "trivial.game", "disconnected.game", "cube3.game"}) {
        const double v = omega_c(oracle::load_fixture(name));
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
    }
}

TEST_CASE("the budget is enforced with the space size") {
    const CompiledGame g(oracle::load_fixture("cube3.game"));
    try {
        (void)classical_value(g, {.budget = 16});
        FAIL("expected BudgetExceeded");
    } catch (const BudgetExceeded &e) {
        CHECK(e.required() > 16);
        CHECK(e.budget() == 16);
        CHECK(std::string(e.what()).find("budget") != std::string::npos);
    }
    CHECK_THROWS_AS(classical_value(CompiledGame(oracle::load_fixture("gyni3.game"))),
                    UnsupportedGame);
}

TEST_CASE("strategy_value rejects strategies off the owned domain") {
    const CompiledGame g(oracle::load_fixture("chsh.game"));
    auto s = DeterministicStrategy::all_plus(g);
    CHECK_THAT(strategy_value(g, s), WithinAbs(0.75, 1e-15));
    s.signs[0][0][1] = 1; // A1 does not own v2 at input 0
    CHECK_THROWS_AS(strategy_value(g, s), DomainMismatch);
    s.signs.pop_back();
    CHECK_THROWS_AS(check_strategy_domain(g, s), DomainMismatch);
}

TEST_CASE("gyni_classical_bound examples") {
    CHECK_THAT(gyni_classical_bound(IidInputs{0.5}, 3), WithinAbs(0.25, 1e-15));
    CHECK_THAT(gyni_classical_bound(JointInputs{{{"000", 0.5}, {"111", 0.5}}}, 3),
               WithinAbs(1.0, 1e-15));
    CHECK_THAT(gyni_classical_bound(JointInputs{{{"000", 0.6}, {"011", 0.4}}}, 3),
               WithinAbs(0.6, 1e-15));
}

TEST_CASE("check_injective examples") {
    CHECK(check_injective(make_targets(3, [](std::size_t i, const InputVector &x) {
        return static_cast<std::int64_t>(x[i]);
    }), 3));
    CHECK(check_injective(make_targets(3, [](std::size_t i, const InputVector &x) {
        return static_cast<std::int64_t>(x[0] + x[1] + x[2] - x[i]);
    }), 3));
    CHECK_FALSE(check_injective(make_targets(3, [](std::size_t, const InputVector &) {
        return std::int64_t{0};
    }), 3));
    CHECK(check_injective(oracle::load_fixture("example2.game").targets(), 3));
    CHECK(check_injective(oracle::load_fixture("example2_f2.game").targets(), 3));
    CHECK_FALSE(check_injective(oracle::load_fixture("constant.game").targets(), 3));
}

TEST_CASE("target_classical_value examples") {
    const CompiledGame gyni(oracle::load_fixture("gyni3.game"));
    const auto result = target_classical_value(gyni);
    CHECK_THAT(result.value, WithinAbs(0.25, 1e-15));
    CHECK(result.value == gyni_classical_bound(IidInputs{0.5}, 3));
    CHECK(result.space_size == 64);

    const JointInputs skew{{{"000", 0.9}, {"111", 0.1}}};
    CHECK_THAT(target_classical_value(cyclic_shift(3), skew, 3).value, WithinAbs(1.0, 1e-15));

    const auto echo = make_targets(1, [](std::size_t, const InputVector &x) {
        return static_cast<std::int64_t>(x[0]);
    });
    CHECK_THAT(target_classical_value(echo, IidInputs{0.5}, 1).value, WithinAbs(1.0, 1e-15));

    CHECK_THROWS_AS(target_classical_value(CompiledGame(oracle::load_fixture("chsh.game"))),
                    UnsupportedGame);
}

TEST_CASE("cyclic-shift targets meet the bound exactly") {
    for (std::size_t n : {3U, 4U, 5U}) {
        for (double p : {0.5, 0.7}) {
            INFO("n=" << n << " p=" << p);
            const auto t = cyclic_shift(n);
            REQUIRE(check_injective(t, n));
            CHECK_THAT(target_classical_value(t, IidInputs{p}, n).value,
                       WithinAbs(gyni_classical_bound(IidInputs{p}, n), 1e-12));
        }
    }
}

TEST_CASE("injective targets never fall below the bound") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        // random bijection of {0,1}^3 read back as three output bits
        std::vector<std::uint32_t> image(8);
        std::iota(image.begin(), image.end(), 0U);
        std::shuffle(image.begin(), image.end(), rng);
        const auto t = make_targets(3, [&](std::size_t i, const InputVector &x) {
            return static_cast<std::int64_t>((image[to_mask(x)] >> i) & 1U);
        });
        REQUIRE(check_injective(t, 3));
        const double p = static_cast<double>(rng() % 9 + 1) / 10.0;
        const auto game = target_game(3, t, IidInputs{p});
        const double value = target_classical_value(t, IidInputs{p}, 3).value;
        CHECK(value >= gyni_classical_bound(IidInputs{p}, 3) - 1e-12);
        CHECK_THAT(value, WithinAbs(oracle::target_value(game), 1e-12));
    }
}

TEST_CASE("target search agrees with the naive oracle on the fixtures") {
    for (const auto *name : {"gyni3.game", "example2.game", "example2_f2.game", "constant.game"}) {
        INFO(name);
        const auto g = oracle::load_fixture(name);
        const CompiledGame compiled(g);
        CHECK_THAT(target_classical_value(compiled).value,
                   WithinAbs(oracle::target_value(g), 1e-12));
        CHECK(target_classical_value(compiled, {.execution = Execution::Serial}).value ==
              target_classical_value(compiled, {.execution = Execution::Parallel}).value);
    }
}
