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

#include "graphgame/report.hpp"

#include <cstdio>
#include <sstream>

#include "json_util.hpp"

namespace graphgame {

namespace {

using detail::Json;

Json classification_json(const Classification &c) {
    Json out;
    out["verdict"] = std::string(to_string(c.verdict));
    out["semantics"] = std::string(to_string(c.indices.semantics_used));
    Json players = Json::array();
    for (std::size_t i = 0; i < c.indices.indices.size(); ++i) {
        Json p;
        p["player"] = i + 1;
        Json neighbors = Json::array();
        for (auto j : c.indices.neighbor_sets[i]) {
            neighbors.push_back(j + 1);
        }
        p["neighbors"] = neighbors;
        Json levels = Json::array();
        for (bool level : c.indices.tuple_levels[i]) {
            levels.push_back(level);
        }
        p["tuple_levels"] = levels;
        p["index"] = c.indices.indices[i] ? Json(*c.indices.indices[i]) : Json();
        players.push_back(p);
    }
    out["players"] = players;
    out["classical_value_used"] =
        c.classical_value_used ? Json(*c.classical_value_used) : Json();
    return out;
}

Json validation_json(const ValidationReport &report) {
    Json out = Json::array();
    for (const auto &v : report) {
        Json e;
        e["kind"] = std::string(to_string(v.kind));
        e["message"] = v.message;
        if (v.player) {
            e["player"] = *v.player + 1;
        }
        if (v.input) {
            e["input"] = *v.input;
        }
        if (v.vertex) {
            e["vertex"] = *v.vertex;
        }
        out.push_back(e);
    }
    return out;
}

Json session_json(const SessionStats &s) {
    Json out;
    out["rounds"] = s.rounds;
    out["wins"] = s.wins;
    out["estimate"] = s.estimate;
    out["std_error"] = s.std_error;
    Json per_input = Json::object();
    for (const auto &[bits, counts] : s.per_input_counts) {
        per_input[bits] = {{"plays", counts.plays}, {"wins", counts.wins}};
    }
    out["per_input_counts"] = per_input;
    return out;
}

Json optional_number(const std::optional<double> &v) {
    return v ? Json(*v) : Json();
}

} // namespace

std::string render_json(const GameValueReport &report,
                        const CompiledGame *game) {
    Json out;
    out["command"] = report.command;
    out["game_digest"] = report.game_digest ? Json(*report.game_digest) : Json();
    out["omega_c"] = optional_number(report.omega_c);
    out["omega_q_lower"] = optional_number(report.omega_q_lower);
    out["classification"] =
        report.classification ? classification_json(*report.classification)
                              : Json();
    Json strategies = Json::object();
    if (game != nullptr && report.classical_witness) {
        strategies["classical"] =
            detail::strategy_json(*game, *report.classical_witness);
    }
    if (game != nullptr && report.quantum_witness) {
        strategies["quantum"] =
            detail::strategy_json(*game, *report.quantum_witness);
    }
    out["strategies"] = strategies;
    if (report.quantum_run) {
        const auto &q = *report.quantum_run;
        out["quantum_search"] = {{"restarts_used", q.restarts_used},
                                 {"converged", q.converged},
                                 {"seed", q.seed},
                                 {"wiring", q.wiring}};
    }
    if (report.validation) {
        out["valid"] = report.validation->empty();
        out["violations"] = validation_json(*report.validation);
    }
    if (report.session) {
        out["session"] = session_json(*report.session);
    }
    if (report.gyni) {
        const auto &g = *report.gyni;
        Json gj;
        gj["injective"] = g.injective;
        gj["classical_bound"] = g.classical_bound;
        gj["brute_force_value"] = optional_number(g.brute_force_value);
        gj["quantum_probe"] = optional_number(g.quantum_probe);
        gj["no_advantage_observed"] =
            g.no_advantage_observed ? Json(*g.no_advantage_observed) : Json();
        out["gyni"] = gj;
    }
    if (report.error) {
        const auto &e = *report.error;
        Json ej;
        ej["exit_code"] = e.exit_code;
        ej["kind"] = e.kind;
        ej["message"] = e.message;
        if (e.line) {
            ej["line"] = *e.line;
        }
        if (e.column) {
            ej["column"] = *e.column;
        }
        if (e.required) {
            ej["required"] = static_cast<double>(*e.required);
        }
        if (e.budget) {
            ej["budget"] = static_cast<double>(*e.budget);
        }
        out["error"] = ej;
    }
    Json timings = Json::object();
    for (const auto &[phase, ms] : report.timings_ms) {
        timings[phase] = ms;
    }
    out["timings_ms"] = timings;
    return detail::emit_json(out) + "\n";
}

std::string render_text(const GameValueReport &report) {
    std::ostringstream os;
    auto number = [](double v) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return std::string(buf);
    };
    os << report.command << "\n";
    if (report.game_digest) {
        os << "  digest         " << *report.game_digest << "\n";
    }
    if (report.validation) {
        os << "  valid          " << (report.validation->empty() ? "yes" : "no")
           << "\n";
        for (const auto &v : *report.validation) {
            os << "    " << to_string(v.kind) << ": " << v.message << "\n";
        }
    }
    if (report.classification) {
        const auto &c = *report.classification;
        os << "  verdict        " << to_string(c.verdict) << "\n";
        for (std::size_t i = 0; i < c.indices.indices.size(); ++i) {
            os << "  I_" << i + 1 << "            "
               << (c.indices.indices[i] ? std::to_string(*c.indices.indices[i])
                                        : std::string("undefined"))
               << "\n";
        }
        if (c.classical_value_used) {
            os << "  omega_c used   " << number(*c.classical_value_used) << "\n";
        }
    }
    if (report.omega_c) {
        os << "  omega_c        " << number(*report.omega_c) << "\n";
    }
    if (report.omega_q_lower) {
        os << "  omega_q >=     " << number(*report.omega_q_lower) << "\n";
    }
    if (report.session) {
        const auto &s = *report.session;
        os << "  estimate       " << number(s.estimate) << " +/- "
           << number(s.std_error) << " (" << s.wins << "/" << s.rounds
           << ")\n";
    }
    if (report.gyni) {
        const auto &g = *report.gyni;
        os << "  injective      " << (g.injective ? "yes" : "no") << "\n";
        os << "  bound          " << number(g.classical_bound) << "\n";
        if (g.brute_force_value) {
            os << "  brute force    " << number(*g.brute_force_value) << "\n";
        }
        if (g.quantum_probe) {
            os << "  quantum probe  " << number(*g.quantum_probe) << "\n";
        }
    }
    if (report.error) {
        os << "  error          " << report.error->message << "\n";
    }
    return os.str();
}

} // namespace graphgame
