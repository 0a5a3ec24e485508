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

#include "graphgame/optimizer.hpp"

#include <cmath>
#include <numbers>

namespace graphgame {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

} // namespace

double line_search(const Objective &f, std::vector<double> &point,
                   std::size_t k, double current, int grid_size,
                   double tolerance) {
    const double original = point[k];
    double best_t = original;
    double best = current;

    auto at = [&](double t) {
        point[k] = t;
        return f(point);
    };

    const int steps = std::max(grid_size, 3);
    const double h = two_pi / steps;
    for (int g = 0; g < steps; ++g) {
        const double t = h * g;
        const double v = at(t);
        if (v > best) {
            best = v;
            best_t = t;
        }
    }

    // golden-section refinement around the best point
    const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = best_t - h;
    double hi = best_t + h;
    double c = hi - ratio * (hi - lo);
    double d = lo + ratio * (hi - lo);
    double fc = at(c);
    double fd = at(d);
    while (hi - lo > tolerance) {
        if (fc >= fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - ratio * (hi - lo);
            fc = at(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + ratio * (hi - lo);
            fd = at(d);
        }
    }
    const double mid = 0.5 * (lo + hi);
    const double fm = at(mid);
    if (fm > best) {
        best = fm;
        best_t = mid;
    }

    point[k] = std::fmod(best_t, two_pi);
    if (point[k] < 0.0) {
        point[k] += two_pi;
    }
    if (best_t == original) {
        point[k] = original;
        return current;
    }
    return f(point);
}

AscentResult coordinate_ascent(const Objective &f, std::vector<double> start,
                               const AscentOptions &options) {
    AscentResult out;
    out.point = std::move(start);
    out.value = f(out.point);
    out.restarts_used = 1;
    for (int sweep = 0; sweep < options.max_sweeps; ++sweep) {
        const double before = out.value;
        for (std::size_t k = 0; k < out.point.size(); ++k) {
            out.value = line_search(f, out.point, k, out.value,
                                    options.grid_size, options.tolerance);
        }
        if (out.value - before < options.tolerance) {
            out.converged = true;
            break;
        }
    }
    return out;
}

std::vector<double> random_angles(SplitMix64 &rng, std::size_t dim) {
    std::vector<double> out(dim);
    for (auto &a : out) {
        a = two_pi * rng.uniform();
    }
    return out;
}

AscentResult maximize_angles(const Objective &f, std::size_t dim,
                             const AscentOptions &options) {
    const int restarts = std::max(options.restarts, 1);
    std::vector<AscentResult> runs(static_cast<std::size_t>(restarts));
    auto run = [&](int r) {
        SplitMix64 rng(stream_seed(options.seed, static_cast<std::uint64_t>(r)));
        runs[static_cast<std::size_t>(r)] =
            coordinate_ascent(f, random_angles(rng, dim), options);
    };
    if (options.execution == Execution::Serial) {
        for (int r = 0; r < restarts; ++r) {
            run(r);
        }
    } else {
#pragma omp parallel for schedule(dynamic, 1)
        for (int r = 0; r < restarts; ++r) {
            run(r);
        }
    }

    int best = 0;
    for (int r = 1; r < restarts; ++r) {
        if (runs[static_cast<std::size_t>(r)].value >
            runs[static_cast<std::size_t>(best)].value) {
            best = r;
        }
    }
    AscentResult out = std::move(runs[static_cast<std::size_t>(best)]);
    out.restarts_used = restarts;
    out.best_restart = best;
    return out;
}

} // namespace graphgame
