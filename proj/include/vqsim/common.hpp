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

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace vqs {

using cplx = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;
using RVec = Eigen::VectorXd;
using RMat = Eigen::MatrixXd;

/// Maximum register width for dense statevectors.
inline constexpr int kMaxQubits = 12;

enum class Status : int {
    Ok = 0,
    InvalidArgument = 1,
    DimensionMismatch = 2,
    Numerical = 3,
    Parse = 4,
    Capacity = 5,
    Unsupported = 6,
};

class Error : public std::runtime_error {
  public:
    Error(Status status, const std::string &what)
        : std::runtime_error(what), status_(status) {}
    [[nodiscard]] Status status() const noexcept { return status_; }

  private:
    Status status_;
};

[[noreturn]] inline void fail(Status s, const std::string &msg) {
    throw Error(s, msg);
}

inline void require(bool cond, Status s, const std::string &msg) {
    if (!cond) {
        fail(s, msg);
    }
}

} // namespace vqs
