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

#include "qudest/core/gell_mann.h"

#include "qudest/core/error.h"
#include "qudest/core/weyl_heisenberg.h"

namespace qudest {

GellMannBasis::GellMannBasis(int d) : d_(d) {
    if (d < 2) {
        throw Error(ErrorCode::kInvalidDimension, "dimension must be >= 2, got " + std::to_string(d));
    }
    matrices_.reserve(static_cast<size_t>(d * d - 1));
    for (int j = 0; j < d; ++j) {
        for (int k = j + 1; k < d; ++k) {
            CMatrix m = CMatrix::Zero(d, d);
            m(j, k) = 1.0;
            m(k, j) = 1.0;
            matrices_.push_back(std::move(m));
        }
    }
    for (int j = 0; j < d; ++j) {
        for (int k = j + 1; k < d; ++k) {
            CMatrix m = CMatrix::Zero(d, d);
            m(j, k) = -kI;
            m(k, j) = kI;
            matrices_.push_back(std::move(m));
        }
    }
    for (int l = 1; l < d; ++l) {
        CMatrix m = CMatrix::Zero(d, d);
        double scale = std::sqrt(2.0 / (l * (l + 1.0)));
        for (int i = 0; i < l; ++i) {
            m(i, i) = scale;
        }
        m(l, l) = -scale * l;
        matrices_.push_back(std::move(m));
    }
}

const CMatrix &GellMannBasis::matrix(int k) const {
    if (k < 1 || k > size()) {
        throw Error(ErrorCode::kIndexError, "Gell-Mann index " + std::to_string(k) + " out of range");
    }
    return matrices_[static_cast<size_t>(k - 1)];
}

CMatrix GellMannBasis::normalized(int k) const {
    return std::sqrt(d_ / 2.0) * matrix(k);
}

std::vector<Complex> GellMannBasis::expand(const CMatrix &m) const {
    if (m.rows() != d_ || m.cols() != d_) {
        throw Error(ErrorCode::kShapeError, "matrix dimension does not match the basis");
    }
    std::vector<Complex> out;
    out.reserve(static_cast<size_t>(d_ * d_));
    for (const CMatrix &t : matrices_) {
        out.push_back((t.adjoint() * m).trace() / 2.0);
    }
    out.push_back(std::sqrt(2.0 / d_) * m.trace() / 2.0);
    return out;
}

CVector GellMannBasis::wh_components(int k) const {
    WHCoefficients c = wh_expand(normalized(k));
    return c.as_vector();
}

CMatrix GellMannBasis::wh_to_gm_transform() const {
    int n = d_ * d_;
    CMatrix b = CMatrix::Zero(n, n);
    b(0, 0) = 1.0;
    for (int k = 1; k <= size(); ++k) {
        b.row(k) = wh_components(k).conjugate().transpose();
    }
    return b;
}

CVector gm_to_wh_vector(int k, int d) {
    return GellMannBasis(d).wh_components(k);
}

}  // namespace qudest
