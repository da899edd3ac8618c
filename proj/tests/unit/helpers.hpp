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

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

#include "catch_amalgamated.hpp"
#include "vqsim/common.hpp"
#include "vqsim/rng.hpp"
#include "vqsim/statevector.hpp"

namespace vqs::test {

inline CVec random_vector(Eigen::Index dim, std::uint64_t seed) {
    Rng rng(seed);
    CVec v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        v[i] = cplx(rng.normal(), rng.normal());
    }
    return v;
}

inline StateVector random_state(int n, std::uint64_t seed) {
    return StateVector::from_amplitudes(random_vector(Eigen::Index{1} << n, seed),
                                        true);
}

inline RVec random_vec(Eigen::Index k, double lo, double hi,
                       std::uint64_t seed) {
    Rng rng(seed);
    RVec v(k);
    for (Eigen::Index i = 0; i < k; ++i) {
        v[i] = rng.uniform(lo, hi);
    }
    return v;
}

inline double max_abs(const CMat &m) { return m.cwiseAbs().maxCoeff(); }
inline double max_abs(const CVec &v) { return v.cwiseAbs().maxCoeff(); }
inline double max_abs(const RVec &v) {
    return v.size() ? v.cwiseAbs().maxCoeff() : 0.0;
}
inline double max_abs(const RMat &m) {
    return m.size() ? m.cwiseAbs().maxCoeff() : 0.0;
}

/// Equality up to a global phase.
inline double phase_distance(const CVec &a, const CVec &b) {
    const cplx ov = a.dot(b);
    if (std::abs(ov) < 1e-300) {
        return (a - b).norm();
    }
    return (a * (ov / std::abs(ov)) - b).norm();
}

} // namespace vqs::test
