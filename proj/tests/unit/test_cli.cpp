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
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "graphgame/cli.hpp"
#include "graphgame/io.hpp"
#include "oracles.hpp"

using namespace graphgame;
using nlohmann::json;

namespace {

struct Run {
    int code;
    json report;
    std::string text;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    Run r{code, json(), out.str(), err.str()};
    if (!r.text.empty() && r.text.front() == '{') {
        r.report = json::parse(r.text);
    }
    return r;
}

std::string path(const char *name) { return oracle::fixture(name).string(); }

std::string scratch(const std::string &name, const std::string &content) {
    const auto dir = std::filesystem::temp_directory_path() / "graphgame_cli_test";
    std::filesystem::create_directories(dir);
    const auto file = dir / name;
    std::ofstream(file) << content;
    return file.string();
}

/// The report without its timings, for comparing runs.
json stable(json report) {
    report.erase("timings_ms");
    return report;
}

} // namespace

TEST_CASE("validate exit codes") {
    CHECK(run({"validate", path("chsh.game")}).code == exit_ok);

    auto g = oracle::load_fixture("chsh.game");
    g.split = 2;
    const auto invalid = run({"validate", scratch("split.game", serialize_game(g))});
    CHECK(invalid.code == exit_invalid_game);
    REQUIRE(invalid.report["violations"].is_array());
    CHECK(invalid.report["violations"].size() >= 1);
    CHECK(invalid.report["valid"] == false);

    const auto malformed = run({"validate", scratch("bad.game", "{\n  \"n\": ,\n}")});
    CHECK(malformed.code == exit_parse_error);
    CHECK(malformed.report["error"]["line"] == 2);
    CHECK(malformed.report["error"]["column"].get<int>() > 0);

    CHECK(run({"validate", path("missing.game")}).code == exit_usage);
    CHECK(run({"frobnicate"}).code == exit_usage);
    CHECK(run({}).code == exit_usage);
}

TEST_CASE("classify reports indices and verdicts") {
    const auto star = run({"classify", path("star3.game")});
    CHECK(star.code == exit_ok);
    CHECK(star.report["classification"]["verdict"] == "QuantumAdvantage");
    CHECK(star.report["classification"]["players"][0]["index"] == 2);

    const auto cube = run({"classify", path("cube3.game")});
    CHECK(cube.report["classification"]["verdict"] == "NoQuantumAdvantage");
    CHECK(cube.report["classification"]["players"][0]["index"] == 3);

    const auto trivial = run({"classify", path("trivial.game")});
    CHECK(trivial.report["classification"]["verdict"] == "Trivial");
    CHECK(trivial.report["classification"]["classical_value_used"] == 1.0);

    const auto capped = run({"classify", path("chain4.game"), "--budget", "4"});
    CHECK(capped.code == exit_ok);
    CHECK(capped.report["classification"]["verdict"] == "Unknown");

    const auto clique = run({"classify", path("shared3.game"), "--semantics", "clique"});
    CHECK(clique.report["classification"]["semantics"] == "PairwiseCliqueMax");
    CHECK(run({"classify", path("star3.game"), "--semantics", "min"}).code == exit_usage);
}

TEST_CASE("value reports classical and quantum values") {
    const auto classical = run({"value", path("chsh.game"), "--classical"});
    CHECK(classical.code == exit_ok);
    CHECK(classical.report["omega_c"] == 0.75);
    CHECK(classical.report["omega_q_lower"].is_null());
    CHECK(classical.report["strategies"].contains("classical"));

    const auto quantum = run({"value", path("chsh.game"), "--quantum", "--restarts", "20"});
    CHECK(quantum.report["omega_q_lower"].get<double>() >= 0.8525);
    CHECK(quantum.report["strategies"].contains("quantum"));

    const auto shared = run({"value", path("shared3.game"), "--quantum"});
    CHECK(shared.report["omega_q_lower"].get<double>() <= 0.6260);

    const auto both = run({"value", path("star3.game")});
    CHECK(both.report["omega_q_lower"].get<double>() > both.report["omega_c"].get<double>());
}

TEST_CASE("value reports budget overruns") {
    const auto r = run({"value", path("cube3.game"), "--classical", "--budget", "16"});
    CHECK(r.code == exit_budget_exceeded);
    CHECK(r.report["error"]["kind"] == "budget_exceeded");
    CHECK(r.report["error"]["required"] == 16777216.0);
    CHECK(r.report["error"]["budget"] == 16.0);
    CHECK_FALSE(r.err.empty());

    const auto pairs = run({"value", path("star4.game"), "--quantum", "--pair-budget", "2"});
    CHECK(pairs.code == exit_budget_exceeded);
}

TEST_CASE("value output does not depend on the thread count") {
    const auto one = run({"--threads", "1", "value", path("star3.game"), "--restarts", "6", "--seed", "3"});
    const auto four = run({"value", path("star3.game"), "--restarts", "6", "--seed", "3", "--threads", "4"});
    CHECK(one.code == exit_ok);
    CHECK(stable(one.report) == stable(four.report));
}

TEST_CASE("simulate") {
    const auto q = run({"simulate", path("chsh.game"), "--strategy",
                        path("strategies/chsh_quantum.strategy"), "--rounds", "100000"});
    CHECK(q.code == exit_ok);
    CHECK(std::abs(q.report["session"]["estimate"].get<double>() - 0.8536) <= 0.01);

    const auto c = run({"simulate", path("chsh.game"), "--strategy",
                        path("strategies/chsh_allplus.strategy"), "--rounds", "100000"});
    CHECK(std::abs(c.report["session"]["estimate"].get<double>() - 0.75) <= 0.01);

    CHECK(run({"simulate", path("chsh.game"), "--strategy", path("strategies/none.strategy")}).code ==
          exit_strategy_mismatch);
    CHECK(run({"simulate", path("star3.game"), "--strategy",
               path("strategies/chsh_quantum.strategy")}).code == exit_strategy_mismatch);
    CHECK(run({"simulate", path("chsh.game"), "--strategy", scratch("bad.strategy", "{")}).code ==
          exit_strategy_mismatch);
    CHECK(run({"simulate", path("chsh.game"), "--strategy",
               path("strategies/chsh_allplus.strategy"), "--rounds", "0"}).code == exit_usage);
}

TEST_CASE("gyni") {
    const auto g = run({"gyni", path("gyni3.game")});
    CHECK(g.code == exit_ok);
    CHECK(g.report["gyni"]["injective"] == true);
    CHECK(g.report["gyni"]["classical_bound"] == 0.25);
    CHECK(g.report["gyni"]["brute_force_value"] == 0.25);
    CHECK(g.report["gyni"]["quantum_probe"].get<double>() <= 0.25 + 1e-3);
    CHECK(g.report["gyni"]["no_advantage_observed"] == true);

    CHECK(run({"gyni", path("example2.game")}).report["gyni"]["injective"] == true);

    const auto constant = run({"gyni", path("constant.game")});
    CHECK(constant.report["gyni"]["injective"] == false);
    CHECK(constant.report["gyni"]["no_advantage_observed"].is_null());

    CHECK(run({"gyni", path("chsh.game")}).code == exit_payoff_mode);
    CHECK(run({"classify", path("gyni3.game")}).code == exit_payoff_mode);
    CHECK(run({"value", path("gyni3.game")}).code == exit_payoff_mode);
}

TEST_CASE("text format") {
    const auto r = run({"--format", "text", "classify", path("star3.game")});
    CHECK(r.code == exit_ok);
    CHECK(r.text.find("QuantumAdvantage") != std::string::npos);
    CHECK(r.report.is_null());
}
