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

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace graphgame {

/// Base class for every error raised by the library.
class GameError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// The game description breaks a structural invariant.
class InvalidGame : public GameError {
  public:
    using GameError::GameError;
};

/// An exhaustive search or exact evaluation would exceed its budget.
class BudgetExceeded : public GameError {
  public:
    BudgetExceeded(const std::string &what, long double required,
                   long double budget)
        : GameError(what), required_(required), budget_(budget) {}

    [[nodiscard]] long double required() const { return required_; }
    [[nodiscard]] long double budget() const { return budget_; }

  private:
    long double required_;
    long double budget_;
};

/// An output assignment or strategy does not match the game it is used with.
class DomainMismatch : public GameError {
  public:
    using GameError::GameError;
};

/// The operation does not apply to this kind of game (wrong payoff mode,
/// unsupported resource layout).
class UnsupportedGame : public GameError {
  public:
    using GameError::GameError;
};

/// Malformed game or strategy text. Line and column are 1-based; 0 when
/// the position is unknown.
class ParseError : public GameError {
  public:
    ParseError(const std::string &what, std::size_t line, std::size_t column)
        : GameError(what), line_(line), column_(column) {}

    [[nodiscard]] std::size_t line() const { return line_; }
    [[nodiscard]] std::size_t column() const { return column_; }

  private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace graphgame
