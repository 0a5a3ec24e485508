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

// Internal JSON helpers shared by the file, report and CLI code.

#pragma once

#include <json.hpp>

#include <string>

#include "graphgame/compiled_game.hpp"
#include "graphgame/game_runner.hpp"

namespace graphgame::detail {

using Json = nlohmann::ordered_json;

/// Pretty JSON with doubles printed as %.17g.
[[nodiscard]] std::string emit_json(const Json &value, int indent = 2);

[[nodiscard]] Json game_json(const GraphicGame &game);
[[nodiscard]] Json strategy_json(const CompiledGame &game,
                                 const SessionStrategy &strategy);

} // namespace graphgame::detail
