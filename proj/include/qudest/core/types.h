// Copyright 2026 The Qudest Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include <Eigen/Dense>

namespace qudest {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

inline constexpr double kPi = std::numbers::pi;
inline constexpr Complex kI{0.0, 1.0};

/// ω^k with ω = exp(2πi/d); k is reduced mod d first so large exponents stay exact.
inline Complex root_of_unity(long long k, int d) {
    long long r = k % d;
    if (r < 0) {
        r += d;
    }
    return std::polar(1.0, 2.0 * kPi * static_cast<double>(r) / static_cast<double>(d));
}

/// Wraps an angle into (-π, π].
inline double wrap_phase(double angle) {
    double w = std::remainder(angle, 2.0 * kPi);
    if (w <= -kPi) {
        w += 2.0 * kPi;
    }
    return w;
}

/// Largest entrywise modulus of M·M† − I.
inline double unitarity_deviation(const CMatrix &m) {
    if (m.rows() != m.cols()) {
        return std::numeric_limits<double>::infinity();
    }
    return (m * m.adjoint() - CMatrix::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff();
}

}  // namespace qudest
