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
 * Thread-count control and the deterministic arg-max reductions shared by
 * the solvers. Every parallel kernel has a serial twin producing the same
 * result, used as the test reference.
 */

#pragma once

#include <cstdint>
#include <optional>

namespace graphgame {

enum class Execution { Serial, Parallel };

/// Threads used by parallel kernels. 0 restores the OpenMP default.
void set_thread_count(int threads);
[[nodiscard]] int thread_count();

/// Reads GRAPHGAME_THREADS; returns nullopt when unset or malformed.
[[nodiscard]] std::optional<int> threads_from_environment();

/// Best value seen with its index. Ties keep the lowest index, so merging
/// partial results in any order gives the same answer.
struct ArgMax {
    double value = -1.0;
    std::uint64_t index = 0;
    bool valid = false;

    void offer(double v, std::uint64_t i) {
        if (!valid || v > value || (v == value && i < index)) {
            value = v;
            index = i;
            valid = true;
        }
    }
    void merge(const ArgMax &other) {
        if (other.valid) {
            offer(other.value, other.index);
        }
    }
};

} // namespace graphgame
