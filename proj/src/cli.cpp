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

#include "graphgame/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>

#include "graphgame/classical_solver.hpp"
#include "graphgame/classification.hpp"
#include "graphgame/errors.hpp"
#include "graphgame/game_runner.hpp"
#include "graphgame/io.hpp"
#include "graphgame/parallel.hpp"
#include "graphgame/quantum_solver.hpp"
#include "graphgame/report.hpp"

namespace graphgame {

namespace {

struct Settings {
    std::string game_file;
    std::string format = "json";
    int threads = -1;

    std::string semantics = "intersection";
    std::uint64_t budget = std::uint64_t{1} << 24;

    bool classical = false;
    bool quantum = false;
    int restarts = 20;
    std::uint64_t seed = 0;
    double tolerance = 1e-9;
    int grid = 24;
    std::size_t pair_budget = 12;
    std::string wiring = "hub-copy";
    std::string resources = "per-owner-pair";

    std::string strategy;
    std::uint64_t rounds = 100000;
};

class Stopwatch {
  public:
    double lap() {
        const auto now = std::chrono::steady_clock::now();
        const double ms =
            std::chrono::duration<double, std::milli>(now - last_).count();
        last_ = now;
        return ms;
    }

  private:
    std::chrono::steady_clock::time_point last_ =
        std::chrono::steady_clock::now();
};

/// Thrown inside a command to finish with a given exit code.
struct CommandFailure {
    ErrorInfo info;
};

[[noreturn]] void fail(int code, std::string kind, std::string message) {
    ErrorInfo info;
    info.exit_code = code;
    info.kind = std::move(kind);
    info.message = std::move(message);
    throw CommandFailure{std::move(info)};
}

GraphicGame read_game(const Settings &s) {
    std::string text;
    try {
        text = read_text_file(s.game_file);
    } catch (const std::runtime_error &e) {
        fail(exit_usage, "io", e.what());
    }
    try {
        return parse_game(text);
    } catch (const ParseError &e) {
        ErrorInfo info;
        info.exit_code = exit_parse_error;
        info.kind = "parse";
        info.message = e.what();
        if (e.line() > 0) {
            info.line = e.line();
            info.column = e.column();
        }
        throw CommandFailure{std::move(info)};
    }
}

CompiledGame compile(GraphicGame game, GameValueReport &report) {
    const auto violations = validate_game(game);
    if (!violations.empty()) {
        report.validation = violations;
        fail(exit_invalid_game, "invalid_game",
             violations.front().message +
                 (violations.size() > 1
                      ? " (+" + std::to_string(violations.size() - 1) + " more)"
                      : ""));
    }
    return CompiledGame(std::move(game));
}

[[noreturn]] void budget_failure(const BudgetExceeded &e) {
    ErrorInfo info;
    info.exit_code = exit_budget_exceeded;
    info.kind = "budget_exceeded";
    info.message = e.what();
    info.required = e.required();
    info.budget = e.budget();
    throw CommandFailure{std::move(info)};
}

void require_consistency(const CompiledGame &game) {
    if (game.is_target()) {
        fail(exit_payoff_mode, "payoff_mode",
             "this command needs a consistency-mode game");
    }
}

OptimizeOptions optimize_options(const Settings &s) {
    OptimizeOptions o;
    o.restarts = s.restarts;
    o.grid_size = s.grid;
    o.tolerance = s.tolerance;
    o.seed = s.seed;
    o.pair_budget = s.pair_budget;
    o.wiring = s.wiring == "direct" ? WiringTemplate::Direct
                                    : WiringTemplate::HubCopy;
    o.resources = s.resources == "per-vertex"
                      ? ResourceModel::OnePairPerVertex
                      : ResourceModel::OnePairPerOwnerPair;
    return o;
}

// ---------------------------------------------------------------------------

void cmd_validate(const Settings &s, GameValueReport &report) {
    auto game = read_game(s);
    report.game_digest = game_digest(game);
    report.validation = validate_game(game);
    if (!report.validation->empty()) {
        fail(exit_invalid_game, "invalid_game",
             std::to_string(report.validation->size()) +
                 " invariant violation(s)");
    }
}

void cmd_classify(const Settings &s, GameValueReport &report) {
    Stopwatch clock;
    auto raw = read_game(s);
    report.game_digest = game_digest(raw);
    const auto game = compile(std::move(raw), report);
    require_consistency(game);
    report.timings_ms.emplace_back("load", clock.lap());
    ClassifyOptions options;
    options.semantics = *parse_semantics(s.semantics);
    options.budget = s.budget;
    report.classification = classify(game, std::nullopt, options);
    report.timings_ms.emplace_back("classify", clock.lap());
}

void cmd_value(const Settings &s, GameValueReport &report,
               std::unique_ptr<CompiledGame> &keep) {
    Stopwatch clock;
    auto raw = read_game(s);
    report.game_digest = game_digest(raw);
    keep = std::make_unique<CompiledGame>(compile(std::move(raw), report));
    const auto &game = *keep;
    require_consistency(game);
    report.timings_ms.emplace_back("load", clock.lap());

    const bool classical = s.classical || !s.quantum;
    const bool quantum = s.quantum || !s.classical;
    if (classical) {
        try {
            auto result = classical_value(game, {.budget = s.budget});
            report.omega_c = result.value;
            report.classical_witness = std::move(result.witness);
        } catch (const BudgetExceeded &e) {
            budget_failure(e);
        }
        report.timings_ms.emplace_back("classical", clock.lap());
        ClassifyOptions options;
        options.semantics = *parse_semantics(s.semantics);
        report.classification = classify(game, report.omega_c, options);
    }
    if (quantum) {
        const auto options = optimize_options(s);
        try {
            auto result = optimize_quantum(game, options);
            report.omega_q_lower = result.value;
            report.quantum_run = QuantumRunInfo{result.restarts_used,
                                                result.converged, s.seed,
                                                s.wiring};
            report.quantum_witness = std::move(result.strategy);
        } catch (const BudgetExceeded &e) {
            budget_failure(e);
        } catch (const UnsupportedGame &e) {
            fail(exit_budget_exceeded, "unsupported_resources", e.what());
        }
        report.timings_ms.emplace_back("quantum", clock.lap());
    }
}

void cmd_simulate(const Settings &s, GameValueReport &report) {
    Stopwatch clock;
    auto raw = read_game(s);
    report.game_digest = game_digest(raw);
    const auto game = compile(std::move(raw), report);
    require_consistency(game);

    std::string text;
    try {
        text = read_text_file(s.strategy);
    } catch (const std::runtime_error &e) {
        fail(exit_strategy_mismatch, "strategy", e.what());
    }
    SessionStrategy strategy;
    try {
        strategy = parse_strategy(text, game);
    } catch (const ParseError &e) {
        fail(exit_strategy_mismatch, "strategy", e.what());
    } catch (const DomainMismatch &e) {
        fail(exit_strategy_mismatch, "strategy", e.what());
    } catch (const UnsupportedGame &e) {
        fail(exit_strategy_mismatch, "strategy", e.what());
    }
    report.timings_ms.emplace_back("load", clock.lap());
    if (s.rounds == 0) {
        fail(exit_usage, "usage", "--rounds must be at least 1");
    }
    report.session = run_session(game, {s.rounds, s.seed, strategy});
    report.timings_ms.emplace_back("simulate", clock.lap());
}

void cmd_gyni(const Settings &s, GameValueReport &report) {
    Stopwatch clock;
    auto raw = read_game(s);
    report.game_digest = game_digest(raw);
    const auto game = compile(std::move(raw), report);
    if (!game.is_target()) {
        fail(exit_payoff_mode, "payoff_mode",
             "gyni needs a target-mode game");
    }
    report.timings_ms.emplace_back("load", clock.lap());
    GyniReport g;
    g.injective = check_injective(game.source().targets(), game.players());
    g.classical_bound =
        gyni_classical_bound(game.source().distribution, game.players());
    try {
        g.brute_force_value = target_classical_value(game, {.budget = s.budget}).value;
        report.omega_c = g.brute_force_value;
        report.timings_ms.emplace_back("classical", clock.lap());
        g.quantum_probe = target_quantum_probe(game, optimize_options(s)).value;
        report.omega_q_lower = g.quantum_probe;
        report.timings_ms.emplace_back("quantum_probe", clock.lap());
    } catch (const BudgetExceeded &e) {
        report.gyni = g;
        budget_failure(e);
    }
    if (g.injective) {
        g.no_advantage_observed =
            *g.quantum_probe <= *g.brute_force_value + 1e-3;
    }
    report.gyni = g;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err) {
    Settings s;
    CLI::App app{"Nonlocal value, classification and simulation of graphic "
                 "games",
                 "graphgame"};
    app.require_subcommand(1);
    app.fallthrough();
    app.option_defaults()->always_capture_default();
    app.add_option("--threads", s.threads,
                   "worker threads (0 = all; default GRAPHGAME_THREADS)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--format", s.format, "report format")
        ->check(CLI::IsMember({"json", "text"}));

    auto game_arg = [&](CLI::App *cmd) {
        cmd->add_option("game", s.game_file, "game file")->required();
    };
    auto search_args = [&](CLI::App *cmd) {
        cmd->add_option("--restarts", s.restarts, "optimizer restarts")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--seed", s.seed, "random seed");
        cmd->add_option("--tolerance", s.tolerance, "optimizer tolerance")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--grid", s.grid, "line-search grid points")
            ->check(CLI::Range(3, 4096));
        cmd->add_option("--pair-budget", s.pair_budget,
                        "maximum EPR pairs for exact evaluation");
    };

    auto *validate = app.add_subcommand("validate", "check a game file");
    game_arg(validate);

    auto *classify_cmd =
        app.add_subcommand("classify", "sharing indices and verdict");
    game_arg(classify_cmd);
    classify_cmd->add_option("--semantics", s.semantics, "tuple semantics")
        ->check(CLI::IsMember({"intersection", "clique"}));
    classify_cmd->add_option("--budget", s.budget,
                             "classical strategy budget");

    auto *value = app.add_subcommand("value", "classical and quantum values");
    game_arg(value);
    value->add_flag("--classical", s.classical, "exact classical value");
    value->add_flag("--quantum", s.quantum, "quantum lower bound");
    value->add_option("--budget", s.budget, "classical strategy budget");
    value->add_option("--semantics", s.semantics, "tuple semantics")
        ->check(CLI::IsMember({"intersection", "clique"}));
    value->add_option("--wiring", s.wiring, "wiring template")
        ->check(CLI::IsMember({"hub-copy", "direct"}));
    value->add_option("--resources", s.resources, "EPR resource model")
        ->check(CLI::IsMember({"per-owner-pair", "per-vertex"}));
    search_args(value);

    auto *simulate = app.add_subcommand("simulate", "Monte Carlo session");
    game_arg(simulate);
    simulate->add_option("--strategy", s.strategy, "strategy file")
        ->required();
    simulate->add_option("--rounds", s.rounds, "rounds to play");
    simulate->add_option("--seed", s.seed, "random seed");

    auto *gyni = app.add_subcommand("gyni", "target-game analysis");
    game_arg(gyni);
    gyni->add_option("--budget", s.budget, "classical strategy budget");
    search_args(gyni);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    if (s.threads >= 0) {
        set_thread_count(s.threads);
    } else if (auto env = threads_from_environment()) {
        set_thread_count(*env);
    }

    GameValueReport report;
    std::unique_ptr<CompiledGame> game;
    int code = exit_ok;
    try {
        if (validate->parsed()) {
            report.command = "validate";
            cmd_validate(s, report);
        } else if (classify_cmd->parsed()) {
            report.command = "classify";
            cmd_classify(s, report);
        } else if (value->parsed()) {
            report.command = "value";
            cmd_value(s, report, game);
        } else if (simulate->parsed()) {
            report.command = "simulate";
            cmd_simulate(s, report);
        } else {
            report.command = "gyni";
            cmd_gyni(s, report);
        }
    } catch (const CommandFailure &f) {
        report.error = f.info;
        code = f.info.exit_code;
        err << "graphgame: " << f.info.message << "\n";
    } catch (const InvalidGame &e) {
        report.error = ErrorInfo{exit_invalid_game, "invalid_game", e.what(),
                                 {}, {}, {}, {}};
        code = exit_invalid_game;
        err << "graphgame: " << e.what() << "\n";
    }

    if (s.format == "text") {
        out << render_text(report);
    } else {
        out << render_json(report, game.get());
    }
    return code;
}

} // namespace graphgame
