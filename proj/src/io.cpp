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

#include "graphgame/io.hpp"

#include <openssl/sha.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "graphgame/errors.hpp"
#include "json_util.hpp"

namespace graphgame {

namespace {

using InJson = nlohmann::json;
using detail::Json;

[[noreturn]] void fail(const std::string &path, const std::string &what) {
    throw ParseError(path + ": " + what, 0, 0);
}

InJson parse_json(std::string_view text) {
    try {
        return InJson::parse(text.begin(), text.end());
    } catch (const InJson::parse_error &e) {
        // byte is 1-based and points just past the offending character
        const std::size_t offset = e.byte == 0 ? 0 : e.byte - 1;
        std::size_t line = 1;
        std::size_t column = 1;
        for (std::size_t k = 0; k < offset && k < text.size(); ++k) {
            if (text[k] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        std::string what = e.what();
        // drop the library's "[json.exception.parse_error.101] " prefix
        if (auto pos = what.find("] "); pos != std::string::npos) {
            what = what.substr(pos + 2);
        }
        throw ParseError("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + what,
                         line, column);
    }
}

void require_keys(const InJson &obj, const std::string &path,
                  std::initializer_list<const char *> required,
                  std::initializer_list<const char *> optional = {}) {
    if (!obj.is_object()) {
        fail(path, "expected an object");
    }
    for (const auto &[key, value] : obj.items()) {
        const bool known =
            std::any_of(required.begin(), required.end(),
                        [&](const char *k) { return key == k; }) ||
            std::any_of(optional.begin(), optional.end(),
                        [&](const char *k) { return key == k; });
        if (!known) {
            fail(path, "unknown key '" + key + "'");
        }
    }
    for (const char *key : required) {
        if (!obj.contains(key)) {
            fail(path, std::string("missing key '") + key + "'");
        }
    }
}

std::int64_t get_int(const InJson &v, const std::string &path) {
    if (!v.is_number_integer()) {
        fail(path, "expected an integer");
    }
    return v.get<std::int64_t>();
}

double get_number(const InJson &v, const std::string &path) {
    if (!v.is_number()) {
        fail(path, "expected a number");
    }
    return v.get<double>();
}

std::string get_string(const InJson &v, const std::string &path) {
    if (!v.is_string()) {
        fail(path, "expected a string");
    }
    return v.get<std::string>();
}

const InJson &get_array(const InJson &v, const std::string &path) {
    if (!v.is_array()) {
        fail(path, "expected an array");
    }
    return v;
}

std::size_t get_player(const InJson &v, const std::string &path) {
    const auto p = get_int(v, path);
    if (p < 1) {
        fail(path, "player numbers start at 1");
    }
    return static_cast<std::size_t>(p - 1);
}

Bit get_input(const InJson &v, const std::string &path) {
    const auto b = get_int(v, path);
    if (b != 0 && b != 1) {
        fail(path, "input must be 0 or 1");
    }
    return static_cast<Bit>(b);
}

std::string hex(const unsigned char *bytes, std::size_t n) {
    static const char *digits = "0123456789abcdef";
    std::string out;
    for (std::size_t k = 0; k < n; ++k) {
        out += digits[bytes[k] >> 4];
        out += digits[bytes[k] & 15];
    }
    return out;
}

void emit(std::ostringstream &os, const Json &value, int indent, int depth) {
    const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
    const std::string close(static_cast<std::size_t>(indent * depth), ' ');
    switch (value.type()) {
    case Json::value_t::object: {
        if (value.empty()) {
            os << "{}";
            return;
        }
        os << "{\n";
        bool first = true;
        for (const auto &[key, item] : value.items()) {
            if (!first) {
                os << ",\n";
            }
            first = false;
            os << pad << Json(key).dump() << ": ";
            emit(os, item, indent, depth + 1);
        }
        os << "\n" << close << "}";
        return;
    }
    case Json::value_t::array: {
        if (value.empty()) {
            os << "[]";
            return;
        }
        os << "[\n";
        for (std::size_t k = 0; k < value.size(); ++k) {
            if (k > 0) {
                os << ",\n";
            }
            os << pad;
            emit(os, value[k], indent, depth + 1);
        }
        os << "\n" << close << "]";
        return;
    }
    case Json::value_t::number_float: {
        const double d = value.get<double>();
        if (!std::isfinite(d)) {
            os << "null";
            return;
        }
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", d);
        std::string text = buf;
        // keep it a JSON float so readers see the same type
        if (text.find_first_of(".eE") == std::string::npos) {
            text += ".0";
        }
        os << text;
        return;
    }
    default:
        os << value.dump();
    }
}

} // namespace

namespace detail {

std::string emit_json(const Json &value, int indent) {
    std::ostringstream os;
    emit(os, value, indent, 0);
    return os.str();
}

Json game_json(const GraphicGame &game) {
    Json out;
    out["vertices"] = game.graph.vertices;
    out["n"] = game.players;
    out["m"] = game.split;
    Json assignments = Json::array();
    for (std::size_t p = 0; p < game.assignments.owned.size(); ++p) {
        for (Bit b = 0; b < 2; ++b) {
            Json entry;
            entry["player"] = p + 1;
            entry["input"] = b;
            entry["vertices"] = game.assignments.owned[p][b];
            assignments.push_back(entry);
        }
    }
    out["assignments"] = assignments;
    Json dist;
    if (const auto *iid = std::get_if<IidInputs>(&game.distribution)) {
        dist["kind"] = "iid";
        dist["p"] = iid->p;
    } else {
        dist["kind"] = "joint";
        Json table = Json::object();
        for (const auto &[key, prob] : std::get<JointInputs>(game.distribution).table) {
            table[key] = prob;
        }
        dist["table"] = table;
    }
    out["distribution"] = dist;
    Json payoff;
    if (game.is_target()) {
        payoff["mode"] = "target";
        Json tables = Json::object();
        const auto &t = game.targets().tables;
        for (std::size_t p = 0; p < t.size(); ++p) {
            Json table = Json::object();
            for (const auto &[key, value] : t[p]) {
                table[key] = value;
            }
            tables[std::to_string(p + 1)] = table;
        }
        payoff["tables"] = tables;
    } else {
        payoff["mode"] = "consistency";
    }
    out["payoff"] = payoff;
    return out;
}

Json strategy_json(const CompiledGame &game, const SessionStrategy &strategy) {
    Json out;
    if (const auto *det = std::get_if<DeterministicStrategy>(&strategy)) {
        out["kind"] = "deterministic";
        Json signs = Json::array();
        for (PlayerIndex p = 0; p < det->signs.size(); ++p) {
            for (Bit b = 0; b < 2; ++b) {
                for (std::size_t v = 0; v < det->signs[p][b].size(); ++v) {
                    if (det->signs[p][b][v] == 0) {
                        continue;
                    }
                    Json e;
                    e["player"] = p + 1;
                    e["input"] = b;
                    e["vertex"] = game.vertex_name(v);
                    e["sign"] = det->signs[p][b][v];
                    signs.push_back(e);
                }
            }
        }
        out["signs"] = signs;
        return out;
    }
    const auto &q = std::get<QuantumStrategy>(strategy);
    auto half = [&](std::size_t pair, PlayerIndex p) {
        const auto &e = q.model.pairs[pair];
        Json h;
        h["vertex"] = game.vertex_name(e.vertex);
        h["partner"] = (e.first == p ? e.second : e.first) + 1;
        return h;
    };
    out["kind"] = "quantum";
    Json angles = Json::array();
    Json wiring = Json::array();
    for (PlayerIndex p = 0; p < q.angles.size(); ++p) {
        for (Bit b = 0; b < 2; ++b) {
            for (const auto &[pair, angle] : q.angles[p][b]) {
                Json e;
                e["player"] = p + 1;
                e["input"] = b;
                const auto h = half(pair, p);
                e["vertex"] = h["vertex"];
                e["partner"] = h["partner"];
                e["angle"] = angle;
                angles.push_back(e);
            }
            for (const auto &[vertex, output] : q.wiring[p][b]) {
                Json e;
                e["player"] = p + 1;
                e["input"] = b;
                e["vertex"] = game.vertex_name(vertex);
                e["sign"] = output.sign;
                Json measure = Json::array();
                for (auto pair : output.pairs) {
                    measure.push_back(half(pair, p));
                }
                e["measure"] = measure;
                wiring.push_back(e);
            }
        }
    }
    out["angles"] = angles;
    out["wiring"] = wiring;
    return out;
}

} // namespace detail

GraphicGame parse_game(std::string_view text) {
    const auto doc = parse_json(text);
    require_keys(doc, "/", {"vertices", "n", "m", "assignments", "distribution",
                            "payoff"});
    GraphicGame game;

    const auto &verts = get_array(doc["vertices"], "/vertices");
    for (std::size_t k = 0; k < verts.size(); ++k) {
        game.graph.vertices.push_back(
            get_string(verts[k], "/vertices/" + std::to_string(k)));
    }
    const auto n = get_int(doc["n"], "/n");
    const auto m = get_int(doc["m"], "/m");
    if (n < 0 || m < 0) {
        fail("/n", "player counts must be nonnegative");
    }
    game.players = static_cast<std::size_t>(n);
    game.split = static_cast<std::size_t>(m);

    game.assignments.owned.resize(game.players);
    std::set<std::pair<std::size_t, Bit>> seen;
    const auto &assignments = get_array(doc["assignments"], "/assignments");
    for (std::size_t k = 0; k < assignments.size(); ++k) {
        const auto path = "/assignments/" + std::to_string(k);
        const auto &entry = assignments[k];
        require_keys(entry, path, {"player", "input", "vertices"});
        const auto p = get_player(entry["player"], path + "/player");
        const auto b = get_input(entry["input"], path + "/input");
        if (!seen.insert({p, b}).second) {
            fail(path, "player " + std::to_string(p + 1) + " input " +
                           std::to_string(b) + " is assigned twice");
        }
        if (p >= game.assignments.owned.size()) {
            game.assignments.owned.resize(p + 1);
        }
        const auto &list = get_array(entry["vertices"], path + "/vertices");
        for (std::size_t t = 0; t < list.size(); ++t) {
            game.assignments.owned[p][b].push_back(get_string(
                list[t], path + "/vertices/" + std::to_string(t)));
        }
    }

    const auto &dist = doc["distribution"];
    require_keys(dist, "/distribution", {"kind"}, {"p", "table"});
    const auto kind = get_string(dist["kind"], "/distribution/kind");
    if (kind == "iid") {
        require_keys(dist, "/distribution", {"kind", "p"});
        game.distribution = IidInputs{get_number(dist["p"], "/distribution/p")};
    } else if (kind == "joint") {
        require_keys(dist, "/distribution", {"kind", "table"});
        const auto &table = dist["table"];
        if (!table.is_object()) {
            fail("/distribution/table", "expected an object");
        }
        JointInputs joint;
        for (const auto &[key, value] : table.items()) {
            joint.table[key] =
                get_number(value, "/distribution/table/" + key);
        }
        game.distribution = std::move(joint);
    } else {
        fail("/distribution/kind", "expected \"iid\" or \"joint\"");
    }

    const auto &payoff = doc["payoff"];
    require_keys(payoff, "/payoff", {"mode"}, {"tables"});
    const auto mode = get_string(payoff["mode"], "/payoff/mode");
    if (mode == "consistency") {
        require_keys(payoff, "/payoff", {"mode"});
        game.payoff = ConsistencyPayoff{};
    } else if (mode == "target") {
        require_keys(payoff, "/payoff", {"mode", "tables"});
        const auto &tables = payoff["tables"];
        if (!tables.is_object()) {
            fail("/payoff/tables", "expected an object");
        }
        TargetFunction f;
        f.tables.resize(game.players);
        for (const auto &[key, table] : tables.items()) {
            const auto path = "/payoff/tables/" + key;
            std::size_t player = 0;
            try {
                std::size_t used = 0;
                player = std::stoul(key, &used);
                if (used != key.size()) {
                    throw std::invalid_argument(key);
                }
            } catch (const std::exception &) {
                fail(path, "table keys are player numbers");
            }
            if (player < 1) {
                fail(path, "player numbers start at 1");
            }
            if (player > f.tables.size()) {
                f.tables.resize(player);
            }
            if (!table.is_object()) {
                fail(path, "expected an object");
            }
            for (const auto &[bits, value] : table.items()) {
                f.tables[player - 1][bits] = get_int(value, path + "/" + bits);
            }
        }
        game.payoff = std::move(f);
    } else {
        fail("/payoff/mode", "expected \"consistency\" or \"target\"");
    }
    return game;
}

std::string serialize_game(const GraphicGame &game) {
    return detail::emit_json(detail::game_json(game)) + "\n";
}

std::string game_digest(const GraphicGame &game) {
    const auto text = detail::game_json(game).dump();
    unsigned char digest[SHA256_DIGEST_LENGTH];
    SHA256(reinterpret_cast<const unsigned char *>(text.data()), text.size(),
           digest);
    return hex(digest, sizeof digest);
}

std::string read_text_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open '" + path.string() + "'");
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

GraphicGame load_game(const std::filesystem::path &path) {
    return parse_game(read_text_file(path));
}

SessionStrategy parse_strategy(std::string_view text,
                               const CompiledGame &game) {
    const auto doc = parse_json(text);
    require_keys(doc, "/", {"kind"}, {"signs", "angles", "wiring", "resources"});
    const auto kind = get_string(doc["kind"], "/kind");

    auto vertex_index = [&](const InJson &v, const std::string &path) {
        const auto name = get_string(v, path);
        const auto idx = game.source().graph.index_of(name);
        if (!idx) {
            throw DomainMismatch(path + ": unknown vertex '" + name + "'");
        }
        return *idx;
    };
    auto player_index = [&](const InJson &v, const std::string &path) {
        const auto p = get_player(v, path);
        if (p >= game.players()) {
            throw DomainMismatch(path + ": no player " + std::to_string(p + 1));
        }
        return p;
    };

    if (kind == "deterministic") {
        require_keys(doc, "/", {"kind", "signs"});
        DeterministicStrategy s;
        s.signs.resize(game.players());
        for (auto &per_player : s.signs) {
            for (auto &row : per_player) {
                row.assign(game.vertex_count(), 0);
            }
        }
        const auto &signs = get_array(doc["signs"], "/signs");
        for (std::size_t k = 0; k < signs.size(); ++k) {
            const auto path = "/signs/" + std::to_string(k);
            require_keys(signs[k], path, {"player", "input", "vertex", "sign"});
            const auto p = player_index(signs[k]["player"], path + "/player");
            const auto b = get_input(signs[k]["input"], path + "/input");
            const auto v = vertex_index(signs[k]["vertex"], path + "/vertex");
            const auto sign = get_int(signs[k]["sign"], path + "/sign");
            if (sign != 1 && sign != -1) {
                fail(path + "/sign", "sign must be 1 or -1");
            }
            if (s.signs[p][b][v] != 0) {
                throw DomainMismatch(path + ": sign given twice");
            }
            s.signs[p][b][v] = static_cast<Sign>(sign);
        }
        check_strategy_domain(game, s);
        return s;
    }
    if (kind != "quantum") {
        fail("/kind", "expected \"deterministic\" or \"quantum\"");
    }
    require_keys(doc, "/", {"kind", "angles", "wiring"}, {"resources"});
    auto model = ResourceModel::OnePairPerOwnerPair;
    if (doc.contains("resources")) {
        const auto r = get_string(doc["resources"], "/resources");
        if (r == "per-vertex") {
            model = ResourceModel::OnePairPerVertex;
        } else if (r != "per-owner-pair") {
            fail("/resources", "expected \"per-owner-pair\" or \"per-vertex\"");
        }
    }
    QuantumStrategy s;
    s.model = PairModel::build(game, model);
    s.angles.resize(game.players());
    s.wiring.resize(game.players());

    auto pair_of = [&](const InJson &obj, PlayerIndex p, const std::string &path) {
        const auto v = vertex_index(obj["vertex"], path + "/vertex");
        const auto partner = player_index(obj["partner"], path + "/partner");
        const auto k = s.model.find(v, p, partner);
        if (!k) {
            throw DomainMismatch(path + ": no EPR pair at vertex '" +
                                 game.vertex_name(v) + "' between players " +
                                 std::to_string(p + 1) + " and " +
                                 std::to_string(partner + 1));
        }
        return *k;
    };

    const auto &angles = get_array(doc["angles"], "/angles");
    for (std::size_t k = 0; k < angles.size(); ++k) {
        const auto path = "/angles/" + std::to_string(k);
        require_keys(angles[k], path,
                     {"player", "input", "vertex", "partner", "angle"});
        const auto p = player_index(angles[k]["player"], path + "/player");
        const auto b = get_input(angles[k]["input"], path + "/input");
        const auto pair = pair_of(angles[k], p, path);
        if (s.angles[p][b].contains(pair)) {
            throw DomainMismatch(path + ": angle given twice");
        }
        s.angles[p][b][pair] = get_number(angles[k]["angle"], path + "/angle");
    }
    const auto &wiring = get_array(doc["wiring"], "/wiring");
    for (std::size_t k = 0; k < wiring.size(); ++k) {
        const auto path = "/wiring/" + std::to_string(k);
        require_keys(wiring[k], path,
                     {"player", "input", "vertex", "sign", "measure"});
        const auto p = player_index(wiring[k]["player"], path + "/player");
        const auto b = get_input(wiring[k]["input"], path + "/input");
        const auto v = vertex_index(wiring[k]["vertex"], path + "/vertex");
        const auto sign = get_int(wiring[k]["sign"], path + "/sign");
        if (sign != 1 && sign != -1) {
            fail(path + "/sign", "sign must be 1 or -1");
        }
        VertexOutput output{static_cast<Sign>(sign), {}};
        const auto &measure = get_array(wiring[k]["measure"], path + "/measure");
        for (std::size_t t = 0; t < measure.size(); ++t) {
            const auto mpath = path + "/measure/" + std::to_string(t);
            require_keys(measure[t], mpath, {"vertex", "partner"});
            output.pairs.push_back(pair_of(measure[t], p, mpath));
        }
        if (s.wiring[p][b].contains(v)) {
            throw DomainMismatch(path + ": vertex wired twice");
        }
        s.wiring[p][b][v] = std::move(output);
    }
    validate_strategy(game, s);
    return s;
}

std::string serialize_strategy(const CompiledGame &game,
                               const SessionStrategy &strategy) {
    return detail::emit_json(detail::strategy_json(game, strategy)) + "\n";
}

} // namespace graphgame
