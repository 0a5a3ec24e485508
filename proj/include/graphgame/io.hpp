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

/**
 * @file
 * Game and strategy files.
 *
 * Both are JSON documents. Player numbers are 1-based in files. Unknown
 * keys are rejected. Syntax errors carry a line and column; structural
 * errors name the offending JSON path instead (line and column 0).
 */

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "graphgame/compiled_game.hpp"
#include "graphgame/game_runner.hpp"

namespace graphgame {

/// Throws ParseError. Does not validate game invariants; see validate_game.
[[nodiscard]] GraphicGame parse_game(std::string_view text);

/// Canonical form: fixed key order, every (player, input) listed.
/// parse_game(serialize_game(g)) == g for every parsed game.
[[nodiscard]] std::string serialize_game(const GraphicGame &game);

/// Hex SHA-256 of the compact canonical serialization.
[[nodiscard]] std::string game_digest(const GraphicGame &game);

/// Reads a file; throws std::runtime_error when it cannot be opened.
[[nodiscard]] std::string read_text_file(const std::filesystem::path &path);

[[nodiscard]] GraphicGame load_game(const std::filesystem::path &path);

/// Throws ParseError for malformed JSON and DomainMismatch when the
/// strategy does not fit the game.
[[nodiscard]] SessionStrategy parse_strategy(std::string_view text,
                                             const CompiledGame &game);

[[nodiscard]] std::string serialize_strategy(const CompiledGame &game,
                                             const SessionStrategy &strategy);

} // namespace graphgame
