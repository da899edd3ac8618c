// Copyright 2026 The vqsim Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

// http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <algorithm>
#include <cmath>
#include <limits>

#include "vqsim/varqte.hpp"

namespace vqs {

namespace {

constexpr int kGrid = 2001;
constexpr int kRefine = 201;

double sigma_of(const BoundInputs &b) { return std::sqrt(std::max(0.0, b.variance)); }

double zeta_objective(const BoundInputs &b, double a) {
    return std::abs(a * b.energy - sigma_of(b) * std::sqrt(a * (2.0 - a)));
}

/// Objective of the overlap problem at alpha, as (value, 1 - value,
/// feasible).
struct ChiPoint {
    double value;
    double one_minus;
    bool feasible;
};

ChiPoint chi_point(const BoundInputs &b, double eps, double delta, double a) {
    const double r = 1.0 - std::abs(a);
    const double var = std::max(0.0, b.variance);
    const double m = r + a * b.energy;
    const double c2 = r * r + 2.0 * a * r * b.energy + a * a * b.h2;
    if (c2 <= 0.0) {
        return {1.0, 0.0, false};
    }
    const double c = std::sqrt(c2);
    // 1 - m/c = a^2 Var / (c (c + m)) avoids cancellation for m > 0.
    const double one_minus_s =
        m > 0.0 ? a * a * var / (c * (c + m)) : 1.0 - m / c;
    const double s = 1.0 - one_minus_s;
    const bool feasible = m > 0.0 ? one_minus_s <= 0.5 * eps * eps
                                  : -s >= 1.0 - 0.5 * eps * eps;
    const double shift = 2.0 * delta * a * var / c;
    const double v = s - shift;
    if (v >= 0.0) {
        return {v, one_minus_s + shift, feasible};
    }
    return {-v, 1.0 + v, feasible};
}

} // namespace

double zeta_bound(const BoundInputs &b, double eps) {
    if (eps <= 0.0) {
        return 0.0;
    }
    const double amax = std::min(0.5 * eps * eps, 1.0);
    double best = std::max(zeta_objective(b, 0.0), zeta_objective(b, amax));
    double arg = 0.0;
    for (int i = 0; i < kGrid; ++i) {
        const double a = amax * i / (kGrid - 1);
        const double v = zeta_objective(b, a);
        if (v > best) {
            best = v;
            arg = a;
        }
    }
    const double w = amax / (kGrid - 1);
    for (int i = 0; i < kRefine; ++i) {
        const double a =
            std::clamp(arg - w + 2.0 * w * i / (kRefine - 1), 0.0, amax);
        best = std::max(best, zeta_objective(b, a));
    }
    if (b.energy > 0.0 && b.h2 > 0.0) {
        const double astar = 1.0 - b.energy / std::sqrt(b.h2);
        if (astar > 0.0 && astar < amax) {
            best = std::max(best, zeta_objective(b, astar));
        }
    }
    return eps * eps * b.norm_h + 2.0 * best;
}

ChiResult chi_bound(const BoundInputs &b, double eps, double delta) {
    ChiResult best;
    auto consider = [&](double a) {
        const ChiPoint p = chi_point(b, eps, delta, a);
        if (p.feasible && p.value < best.chi) {
            best.chi = p.value;
            best.one_minus_chi = p.one_minus;
            best.alpha = a;
        }
    };
    consider(0.0);
    for (int i = 0; i < kGrid; ++i) {
        consider(-1.0 + 2.0 * i / (kGrid - 1));
    }
    const double w = 2.0 / (kGrid - 1);
    const double centre = best.alpha;
    for (int i = 0; i < kRefine; ++i) {
        consider(std::clamp(centre - w + 2.0 * w * i / (kRefine - 1), -1.0,
                            1.0));
    }
    // The optimum sits on the feasibility boundary when the feasible set
    // around alpha = 0 is narrower than the grid spacing.
    for (double dir : {-1.0, 1.0}) {
        if (chi_point(b, eps, delta, dir).feasible) {
            continue;
        }
        double lo = 0.0;
        double hi = 1.0;
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (chi_point(b, eps, delta, dir * mid).feasible) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        consider(dir * lo);
    }
    return best;
}

double eps_rate_imaginary(double grad_err, const BoundInputs &b, double eps,
                          double delta) {
    if (eps >= std::sqrt(2.0)) {
        return 0.0;
    }
    const double zeta = zeta_bound(b, eps);
    const ChiResult chi = chi_bound(b, eps, delta);
    // sqrt(2 + 2 d zeta - 2 chi) - eps = Y / (sqrt(eps^2 + Y) + eps).
    const double y = 2.0 * chi.one_minus_chi - eps * eps + 2.0 * delta * zeta;
    double third = 0.0;
    if (y > 0.0) {
        third = y / (delta * (std::sqrt(eps * eps + y) + eps));
    } else if (y < 0.0 && eps > 0.0) {
        third = y / (delta * (std::sqrt(std::max(0.0, eps * eps + y)) + eps));
    }
    return std::max(0.0, grad_err + zeta + third);
}

} // namespace vqs
