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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "graphgame/classical_solver.hpp"
#include "graphgame/quantum_solver.hpp"

namespace graphgame {

void validate(const ClosedFormParams &params) {
    if (!(params.p >= 0.0 && params.p <= 1.0)) {
        throw std::invalid_argument("p must lie in [0, 1]");
    }
    if (!(params.p_star >= 0.0 && params.p_star <= 1.0)) {
        throw std::invalid_argument("p_star must lie in [0, 1]");
    }
    if (params.n1 < 2) {
        throw std::invalid_argument("n1 must be at least 2");
    }
    if (params.l < 3) {
        throw std::invalid_argument("l must be at least 3");
    }
}

double closed_form_star_classical(const ClosedFormParams &params) {
    validate(params);
    const double p0 = std::max(params.p, 1.0 - params.p);
    return params.p_star * p0 +
           params.p_star * (1.0 - p0) * std::pow(p0, params.n1 - 1);
}

double closed_form_shared_classical(const ClosedFormParams &params) {
    validate(params);
    const double p = params.p;
    if (p >= 0.5) {
        return params.p_star *
               (p + std::pow(p, params.l - 1) - std::pow(p, params.l));
    }
    return params.p_star * (p + std::pow(1.0 - p, params.l));
}

double closed_form_star_quantum(const ClosedFormParams &params) {
    validate(params);
    const double p = params.p;
    const double q = 1.0 - p;
    const double c = std::sqrt(std::max(0.0, 2.0 - 4.0 * p * q));
    const int k = params.n1 - 1;

    // c >= 1 always; keep both correlations within [-1, 1].
    const double inv = std::min(1.0, 1.0 / c);
    const double lo = std::acos(inv);
    const double hi = std::asin(inv);
    auto g = [&](double t) {
        return p * std::pow(1.0 + c * std::cos(t), k) +
               q * std::pow(1.0 + c * std::sin(t), k);
    };

    double best_t = lo;
    double best = g(lo);
    constexpr int grid = 256;
    for (int i = 1; i <= grid; ++i) {
        const double t = lo + (hi - lo) * i / grid;
        if (const double v = g(t); v > best) {
            best = v;
            best_t = t;
        }
    }
    if (hi > lo) {
        const double h = (hi - lo) / grid;
        double a = std::max(lo, best_t - h);
        double b = std::min(hi, best_t + h);
        const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
        double x1 = b - ratio * (b - a);
        double x2 = a + ratio * (b - a);
        double f1 = g(x1);
        double f2 = g(x2);
        while (b - a > 1e-12) {
            if (f1 >= f2) {
                b = x2;
                x2 = x1;
                f2 = f1;
                x1 = b - ratio * (b - a);
                f1 = g(x1);
            } else {
                a = x1;
                x1 = x2;
                f1 = f2;
                x2 = a + ratio * (b - a);
                f2 = g(x2);
            }
        }
        best = std::max({best, f1, f2, g(0.5 * (a + b))});
    }
    return params.p_star * best / std::ldexp(1.0, k);
}

bool unbalanced_chsh_has_advantage(double p00, double p01, double p10,
                                   double p11) {
    for (double v : {p00, p01, p10, p11}) {
        if (!(v > 0.0)) {
            throw std::invalid_argument(
                "every input probability must be strictly positive");
        }
    }
    if (std::abs(p00 + p01 + p10 + p11 - 1.0) > 1e-9) {
        throw std::invalid_argument("input probabilities must sum to 1");
    }
    auto sq = [](double v) { return v * v; };
    if (std::min(p10, p11) <= std::min(p00, p01)) {
        return sq(1.0 / p10 - 1.0 / p11) - sq(1.0 / p00 + 1.0 / p01) < 0.0;
    }
    return sq(1.0 / p00 - 1.0 / p01) - sq(1.0 / p10 + 1.0 / p11) < 0.0;
}

bool trig_power_mean_holds(const std::vector<double> &angles) {
    if (angles.size() < 2) {
        throw std::invalid_argument("need at least two angles");
    }
    double sum = 0.0;
    double sines = 1.0;
    double cosines = 1.0;
    for (double t : angles) {
        if (!(t >= 0.0 && t <= std::numbers::pi / 2)) {
            throw std::invalid_argument("angles must lie in [0, pi/2]");
        }
        sum += t;
        sines *= std::sin(t);
        cosines *= std::cos(t);
    }
    const double s = static_cast<double>(angles.size());
    const double mean = sum / s;
    return std::pow(sines, 1.0 / s) <= std::sin(mean) + 1e-12 &&
           std::pow(cosines, 1.0 / s) <= std::cos(mean) + 1e-12;
}

} // namespace graphgame
