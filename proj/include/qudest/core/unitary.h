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

#include <cstdint>
#include <vector>

#include "qudest/core/types.h"

namespace qudest {

inline constexpr double kUnitarityTolerance = 1e-10;

/// Square complex matrix with U·U† = I to within kUnitarityTolerance (max-abs).
class UnitaryMatrix {
   public:
    /// Validates shape and unitarity; throws shape-error / invalid-argument.
    explicit UnitaryMatrix(CMatrix m);

    /// Skips validation. For matrices that are unitary by construction.
    static UnitaryMatrix trusted(CMatrix m);

    static UnitaryMatrix identity(int d);

    int dim() const {
        return static_cast<int>(m_.rows());
    }
    const CMatrix &matrix() const {
        return m_;
    }
    UnitaryMatrix adjoint() const {
        return trusted(m_.adjoint());
    }
    Complex operator()(int row, int col) const {
        return m_(row, col);
    }

    friend UnitaryMatrix operator*(const UnitaryMatrix &a, const UnitaryMatrix &b) {
        return trusted(a.m_ * b.m_);
    }

   private:
    struct TrustedTag {};
    UnitaryMatrix(CMatrix m, TrustedTag) : m_(std::move(m)) {
    }

    CMatrix m_;
};

/// Haar-distributed unitary: QR of a complex Ginibre matrix with the phases of
/// diag(R) absorbed into Q. Deterministic per (d, seed).
UnitaryMatrix haar_random_unitary(int d, uint64_t seed);

/// Real coefficients λ_j of H = Σ_j λ_j T_j over the d²−1 generalized Gell-Mann
/// matrices.
struct HamiltonianParams {
    /// Throws shape-error unless lambda.size() == d²−1, invalid-argument on
    /// non-finite entries.
    HamiltonianParams(int d, std::vector<double> lambda);

    static HamiltonianParams zero(int d);

    /// Every λ_j in [0, 0.1].
    bool in_first_order_regime() const;

    int d;
    std::vector<double> lambda;
};

/// H = Σ λ_j T_j.
CMatrix hamiltonian_matrix(const HamiltonianParams &params);

/// U = exp(iH), via Hermitian eigendecomposition of H.
UnitaryMatrix exp_hamiltonian(const HamiltonianParams &params);

}  // namespace qudest
