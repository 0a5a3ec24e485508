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
 * Derivative-free maximization over angle vectors: cyclic coordinate
 * ascent where each line search scans a grid over [0, 2pi) and refines the
 * best cell by golden-section search.
 */

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "graphgame/parallel.hpp"
#include "graphgame/rng.hpp"

namespace graphgame {

using Objective = std::function<double(const std::vector<double> &)>;

struct AscentOptions {
    int restarts = 20;
    int grid_size = 24;
    double tolerance = 1e-9;
    std::uint64_t seed = 0;
    int max_sweeps = 200;
    Execution execution = Execution::Parallel;
};

struct AscentResult {
    std::vector<double> point;
    double value = 0.0;
    int restarts_used = 0;
    int best_restart = 0;
    /// The best restart stopped because a sweep improved by less than the
    /// tolerance, not because it ran out of sweeps.
    bool converged = false;
};

/// Maximizes f along coordinate k in place and returns the new value.
double line_search(const Objective &f, std::vector<double> &point,
                   std::size_t k, double current, int grid_size,
                   double tolerance);

/// One restart from the given start point.
AscentResult coordinate_ascent(const Objective &f, std::vector<double> start,
                               const AscentOptions &options);

/// Uniform random angles in [0, 2pi).
[[nodiscard]] std::vector<double> random_angles(SplitMix64 &rng,
                                                std::size_t dim);

/// Restart r starts from random_angles(SplitMix64(stream_seed(seed, r))).
/// The result keeps the best value, lowest restart index on ties, so it is
/// independent of the execution mode.
[[nodiscard]] AscentResult maximize_angles(const Objective &f, std::size_t dim,
                                           const AscentOptions &options);

} // namespace graphgame
