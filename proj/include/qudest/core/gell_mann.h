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

#include <vector>

#include "qudest/core/types.h"

namespace qudest {

/// Generalized Gell-Mann matrices T_1..T_{d²−1}, Hermitian, traceless, with
/// Tr[T_i† T_j] = 2δ_ij.
///
/// Ordering: symmetric |j⟩⟨k| + |k⟩⟨j| for j < k, then antisymmetric
/// −i|j⟩⟨k| + i|k⟩⟨j| for j < k, both lexicographic in (j, k), then the diagonal
/// matrices √(2/(l(l+1))) (Σ_{m<l} |m⟩⟨m| − l|l⟩⟨l|) for l = 1..d−1. For d = 2
/// this is (X, Y, Z).
class GellMannBasis {
   public:
    explicit GellMannBasis(int d);

    int dim() const {
        return d_;
    }
    /// Number of traceless generators, d² − 1.
    int size() const {
        return static_cast<int>(matrices_.size());
    }

    /// T_k for k in [1, d²−1]; index-error otherwise.
    const CMatrix &matrix(int k) const;
    /// T̃_k = √(d/2) T_k.
    CMatrix normalized(int k) const;

    /// Coefficients c_k = Tr[T_k† M]/2 for k = 1..d²−1, followed by the coefficient
    /// on the identity direction √(2/d)·I. Length d².
    std::vector<Complex> expand(const CMatrix &m) const;

    /// t̃^{(k)}_n = Tr[D_n† T̃_k]/d in flat WH order; k in [1, d²−1].
    CVector wh_components(int k) const;

    /// Rows are the conjugated WH component vectors of the identity direction
    /// (row 0) and T̃_1..T̃_{d²−1} (rows 1..d²−1). Unitary; maps WH coefficient
    /// vectors to normalized-Gell-Mann coefficient vectors.
    CMatrix wh_to_gm_transform() const;

   private:
    int d_;
    std::vector<CMatrix> matrices_;
};

inline GellMannBasis gell_mann_basis(int d) {
    return GellMannBasis(d);
}

/// Components of the normalized Gell-Mann matrix T̃_k in the Weyl-Heisenberg basis.
CVector gm_to_wh_vector(int k, int d);

}  // namespace qudest
