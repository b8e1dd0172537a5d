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

#include "qudest/core/unitary.h"

#include <random>

#include "qudest/core/error.h"
#include "qudest/core/gell_mann.h"
#include "qudest/core/rng.h"

namespace qudest {

UnitaryMatrix::UnitaryMatrix(CMatrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols() || m_.rows() == 0) {
        throw Error(ErrorCode::kShapeError, "unitary must be a non-empty square matrix");
    }
    double dev = unitarity_deviation(m_);
    if (!(dev <= kUnitarityTolerance)) {
        throw Error(ErrorCode::kInvalidArgument, "matrix is not unitary (deviation " + std::to_string(dev) + ")");
    }
}

UnitaryMatrix UnitaryMatrix::trusted(CMatrix m) {
    return UnitaryMatrix(std::move(m), TrustedTag{});
}

UnitaryMatrix UnitaryMatrix::identity(int d) {
    return trusted(CMatrix::Identity(d, d));
}

UnitaryMatrix haar_random_unitary(int d, uint64_t seed) {
    if (d < 1) {
        throw Error(ErrorCode::kInvalidDimension, "dimension must be >= 1");
    }
    CounterRng rng(seed);
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
    CMatrix g(d, d);
    for (int c = 0; c < d; ++c) {
        for (int r = 0; r < d; ++r) {
            double re = normal(rng);
            double im = normal(rng);
            g(r, c) = Complex(re, im);
        }
    }
    Eigen::HouseholderQR<CMatrix> qr(g);
    CMatrix q = qr.householderQ();
    CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int k = 0; k < d; ++k) {
        Complex diag = r(k, k);
        double mag = std::abs(diag);
        Complex phase = mag > 0.0 ? diag / mag : Complex(1.0);
        q.col(k) *= phase;
    }
    return UnitaryMatrix::trusted(std::move(q));
}

HamiltonianParams::HamiltonianParams(int dim, std::vector<double> values) : d(dim), lambda(std::move(values)) {
    if (d < 2) {
        throw Error(ErrorCode::kInvalidDimension, "dimension must be >= 2");
    }
    if (lambda.size() != static_cast<size_t>(d * d - 1)) {
        throw Error(
            ErrorCode::kShapeError,
            "expected " + std::to_string(d * d - 1) + " parameters, got " + std::to_string(lambda.size()));
    }
    for (double v : lambda) {
        if (!std::isfinite(v)) {
            throw Error(ErrorCode::kInvalidArgument, "Hamiltonian parameters must be finite");
        }
    }
}

HamiltonianParams HamiltonianParams::zero(int d) {
    return HamiltonianParams(d, std::vector<double>(static_cast<size_t>(std::max(d * d - 1, 0)), 0.0));
}

bool HamiltonianParams::in_first_order_regime() const {
    for (double v : lambda) {
        if (v < 0.0 || v > 0.1) {
            return false;
        }
    }
    return true;
}

CMatrix hamiltonian_matrix(const HamiltonianParams &params) {
    GellMannBasis basis(params.d);
    CMatrix h = CMatrix::Zero(params.d, params.d);
    for (int k = 1; k <= basis.size(); ++k) {
        h += params.lambda[static_cast<size_t>(k - 1)] * basis.matrix(k);
    }
    return h;
}

UnitaryMatrix exp_hamiltonian(const HamiltonianParams &params) {
    CMatrix h = hamiltonian_matrix(params);
    Eigen::SelfAdjointEigenSolver<CMatrix> eig(h);
    const RVector &w = eig.eigenvalues();
    const CMatrix &v = eig.eigenvectors();
    CVector phases(w.size());
    for (Eigen::Index k = 0; k < w.size(); ++k) {
        phases(k) = std::polar(1.0, w(k));
    }
    return UnitaryMatrix::trusted(v * phases.asDiagonal() * v.adjoint());
}

}  // namespace qudest
