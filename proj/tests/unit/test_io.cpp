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

#include <filesystem>
#include <random>

#include "graphgame/errors.hpp"
#include "graphgame/io.hpp"
#include "graphgame/quantum_solver.hpp"
#include "oracles.hpp"

using namespace graphgame;

namespace {

std::vector<std::string> fixture_names() {
    std::vector<std::string> names;
    for (const auto &entry : std::filesystem::directory_iterator(GRAPHGAME_FIXTURE_DIR)) {
        if (entry.path().extension() == ".game") {
            names.push_back(entry.path().filename().string());
        }
    }
    std::sort(names.begin(), names.end());
    return names;
}

ParseError parse_failure(std::string_view text) {
    try {
        (void)parse_game(text);
    } catch (const ParseError &e) {
        return e;
    }
    FAIL("expected a parse error");
    return ParseError("", 0, 0);
}

const char *const minimal = R"({
  "vertices": ["v1", "v2"],
  "n": 2,
  "m": 1,
  "assignments": [
    {"player": 1, "input": 0, "vertices": ["v1"]},
    {"player": 2, "input": 1, "vertices": ["v1", "v2"]}
  ],
  "distribution": {"kind": "iid", "p": 0.5},
  "payoff": {"mode": "consistency"}
})";

} // namespace

TEST_CASE("every fixture round-trips through the canonical form") {
    const auto names = fixture_names();
    REQUIRE(names.size() >= 9);
    for (const auto &name : names) {
        INFO(name);
        const auto g = oracle::load_fixture(name);
        const auto text = serialize_game(g);
        const auto again = parse_game(text);
        CHECK(again == g);
        CHECK(serialize_game(again) == text);
        CHECK(game_digest(again) == game_digest(g));
    }
}

TEST_CASE("omitted assignments mean empty sets") {
    const auto g = parse_game(minimal);
    CHECK(g.assignments.at(0, 1).empty());
    CHECK(g.assignments.at(1, 0).empty());
    CHECK(g.assignments.at(1, 1) == std::vector<std::string>{"v1", "v2"});
    CHECK(parse_game(serialize_game(g)) == g);
}

TEST_CASE("the digest ignores layout but not content") {
    const auto g = parse_game(minimal);
    std::string compact;
    for (char c : std::string(minimal)) {
        if (c != '\n' && c != ' ') {
            compact += c;
        }
    }
    CHECK(game_digest(parse_game(compact)) == game_digest(g));
    const auto digest = game_digest(g);
    CHECK(digest.size() == 64);
    CHECK(digest.find_first_not_of("0123456789abcdef") == std::string::npos);

    auto other = g;
    other.distribution = IidInputs{0.25};
    CHECK(game_digest(other) != digest);
}

TEST_CASE("random games round-trip") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 50; ++trial) {
        GraphicGame g;
        const std::size_t vertices = 1 + rng() % 5;
        for (std::size_t v = 0; v < vertices; ++v) {
            g.graph.vertices.push_back("n" + std::to_string(rng() % 1000) + "_" + std::to_string(v));
        }
        g.players = 2 + rng() % 3;
        g.split = 1 + rng() % (g.players - 1);
        g.assignments.owned.resize(g.players);
        for (auto &sets : g.assignments.owned) {
            for (auto &set : sets) {
                for (const auto &v : g.graph.vertices) {
                    if (rng() & 1U) {
                        set.push_back(v);
                    }
                }
            }
        }
        if (rng() & 1U) {
            g.distribution = IidInputs{static_cast<double>(rng() % 1000) / 999.0};
        } else {
            JointInputs joint;
            joint.table[std::string(g.players, '0')] = 0.125;
            joint.table[std::string(g.players, '1')] = 0.875;
            g.distribution = joint;
        }
        if (rng() % 3 == 0) {
            TargetFunction t;
            t.tables.resize(g.players);
            for (std::uint32_t x = 0; x < (1U << g.players); ++x) {
                for (auto &table : t.tables) {
                    table[mask_bitstring(x, g.players)] =
                        static_cast<std::int64_t>(rng() % 7) - 3;
                }
            }
            g.payoff = t;
        }
        CHECK(parse_game(serialize_game(g)) == g);
    }
}

TEST_CASE("syntax errors carry a position") {
    const auto e = parse_failure("{\n  \"n\": 2,\n  \"m\": ,\n}");
    CHECK(e.line() == 3);
    CHECK(e.column() > 0);
    CHECK(std::string(e.what()).rfind("line 3", 0) == 0);
}

TEST_CASE("structural errors name the offending key") {
    std::string unknown = minimal;
    unknown.insert(unknown.find("\"n\""), "\"edges\": [], ");
    const auto e = parse_failure(unknown);
    CHECK(std::string(e.what()).find("edges") != std::string::npos);

    std::string bad_kind = minimal;
    bad_kind.replace(bad_kind.find("\"iid\""), 5, "\"gauss\"");
    CHECK_THROWS_AS(parse_game(bad_kind), ParseError);

    std::string bad_input = minimal;
    bad_input.replace(bad_input.find("\"input\": 0"), 10, "\"input\": 2");
    CHECK_THROWS_AS(parse_game(bad_input), ParseError);

    std::string missing = minimal;
    missing.erase(missing.find("\"m\": 1,"), 7);
    CHECK_THROWS_AS(parse_game(missing), ParseError);
}

TEST_CASE("strategies round-trip") {
    const CompiledGame chsh(oracle::load_fixture("chsh.game"));
    for (const auto *file : {"strategies/chsh_quantum.strategy", "strategies/chsh_allplus.strategy"}) {
        INFO(file);
        const auto strategy = parse_strategy(read_text_file(oracle::fixture(file)), chsh);
        const auto text = serialize_strategy(chsh, strategy);
        CHECK(parse_strategy(text, chsh) == strategy);
    }
    for (const auto *name : {"star4.game", "shared3.game", "chain4.game"}) {
        INFO(name);
        const CompiledGame g(oracle::load_fixture(name));
        const auto result = optimize_quantum(g, {.restarts = 1});
        const SessionStrategy s = result.strategy;
        CHECK(parse_strategy(serialize_strategy(g, s), g) == s);
    }
}

TEST_CASE("a strategy for another game is rejected") {
    const CompiledGame star(oracle::load_fixture("star3.game"));
    const auto text = read_text_file(oracle::fixture("strategies/chsh_quantum.strategy"));
    CHECK_THROWS_AS(parse_strategy(text, star), DomainMismatch);
    CHECK_THROWS_AS(parse_strategy("{\"kind\": \"quantum\"", star), ParseError);
    CHECK_THROWS_AS(read_text_file(oracle::fixture("no_such.game")), std::runtime_error);
}
