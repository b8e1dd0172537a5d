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

#include "qudest/core/weyl_heisenberg.h"

#include <algorithm>

#include "qudest/core/error.h"

namespace qudest {

namespace {

int mod(int a, int d) {
    int r = a % d;
    return r < 0 ? r + d : r;
}

void require_dimension(int d) {
    if (d < 2) {
        throw Error(ErrorCode::kInvalidDimension, "dimension must be >= 2, got " + std::to_string(d));
    }
}

}  // namespace

WHIndex WHIndex::reduced(int x, int z, int d) {
    return WHIndex{mod(x, d), mod(z, d)};
}

WHIndex WHIndex::negated(int d) const {
    return reduced(d - x, d - z, d);
}

WHIndex WHIndex::plus(WHIndex other, int d) const {
    return reduced(x + other.x, z + other.z, d);
}

std::string WHIndex::str() const {
    return "(" + std::to_string(x) + "," + std::to_string(z) + ")";
}

WHCoefficients::WHCoefficients(int d, std::vector<Complex> values) : dim_(d), values_(std::move(values)) {
    require_dimension(d);
    if (values_.size() != static_cast<size_t>(d) * static_cast<size_t>(d)) {
        throw Error(
            ErrorCode::kIncompleteCoefficients,
            "expected " + std::to_string(d * d) + " coefficients, got " + std::to_string(values_.size()));
    }
}

WHCoefficients WHCoefficients::zero(int d) {
    require_dimension(d);
    return WHCoefficients(d, std::vector<Complex>(static_cast<size_t>(d * d)));
}

WHCoefficients WHCoefficients::from_map(int d, const std::map<WHIndex, Complex> &entries) {
    require_dimension(d);
    std::vector<Complex> values(static_cast<size_t>(d * d));
    for (int k = 0; k < d * d; ++k) {
        WHIndex n = WHIndex::from_flat(k, d);
        auto it = entries.find(n);
        if (it == entries.end()) {
            throw Error(ErrorCode::kIncompleteCoefficients, "missing coefficient for index " + n.str());
        }
        values[static_cast<size_t>(k)] = it->second;
    }
    if (entries.size() != values.size()) {
        throw Error(ErrorCode::kIndexError, "coefficient map contains indices outside Z_d^2");
    }
    return WHCoefficients(d, std::move(values));
}

double WHCoefficients::phase(WHIndex n) const {
    return wrap_phase(std::arg((*this)[n]));
}

double WHCoefficients::norm_squared() const {
    double total = 0.0;
    for (const Complex &u : values_) {
        total += std::norm(u);
    }
    return total;
}

CVector WHCoefficients::as_vector() const {
    return Eigen::Map<const CVector>(values_.data(), static_cast<Eigen::Index>(values_.size()));
}

WHCoefficients WHCoefficients::with_fixed_phase() const {
    Complex u0 = values_[0];
    double r0 = std::abs(u0);
    if (r0 == 0.0) {
        return *this;
    }
    Complex rotation = std::conj(u0) / r0;
    std::vector<Complex> rotated(values_);
    for (Complex &u : rotated) {
        u *= rotation;
    }
    rotated[0] = Complex(r0, 0.0);
    return WHCoefficients(dim_, std::move(rotated));
}

UnitaryMatrix wh_operator(WHIndex n, int d) {
    require_dimension(d);
    n = WHIndex::reduced(n.x, n.z, d);
    // (X^{n_x} Z^{n_z})|k⟩ = ω^{n_z k} |k ⊕ n_x⟩.
    CMatrix m = CMatrix::Zero(d, d);
    for (int k = 0; k < d; ++k) {
        m(mod(k + n.x, d), k) = root_of_unity(static_cast<long long>(n.z) * k, d);
    }
    return UnitaryMatrix::trusted(std::move(m));
}

UnitaryMatrix fourier_matrix(int d) {
    require_dimension(d);
    CMatrix f(d, d);
    double scale = 1.0 / std::sqrt(static_cast<double>(d));
    for (int j = 0; j < d; ++j) {
        for (int k = 0; k < d; ++k) {
            f(j, k) = scale * root_of_unity(static_cast<long long>(j) * k, d);
        }
    }
    return UnitaryMatrix::trusted(std::move(f));
}

WHCoefficients wh_expand(const CMatrix &u) {
    if (u.rows() != u.cols()) {
        throw Error(ErrorCode::kShapeError, "wh_expand requires a square matrix");
    }
    int d = static_cast<int>(u.rows());
    require_dimension(d);
    // Tr[D_n† U] = Σ_k ω^{−n_z k} U_{k⊕n_x, k}.
    std::vector<Complex> values(static_cast<size_t>(d * d));
    for (int nx = 0; nx < d; ++nx) {
        for (int nz = 0; nz < d; ++nz) {
            Complex acc = 0.0;
            for (int k = 0; k < d; ++k) {
                acc += root_of_unity(-static_cast<long long>(nz) * k, d) * u(mod(k + nx, d), k);
            }
            values[static_cast<size_t>(nx * d + nz)] = acc / static_cast<double>(d);
        }
    }
    return WHCoefficients(d, std::move(values));
}

CMatrix wh_reconstruct(const WHCoefficients &c) {
    int d = c.dim();
    CMatrix m = CMatrix::Zero(d, d);
    for (int nx = 0; nx < d; ++nx) {
        for (int nz = 0; nz < d; ++nz) {
            Complex u = c[WHIndex{nx, nz}];
            if (u == Complex(0.0)) {
                continue;
            }
            for (int k = 0; k < d; ++k) {
                m(mod(k + nx, d), k) += u * root_of_unity(static_cast<long long>(nz) * k, d);
            }
        }
    }
    return m;
}

Complex unitarity_residual(const WHCoefficients &c, WHIndex p) {
    int d = c.dim();
    p = WHIndex::reduced(p.x, p.z, d);
    if (p.is_zero()) {
        throw Error(ErrorCode::kIndexError, "p = (0,0) is the normalization condition; use normalization_residual");
    }
    // conj(u_m) u_{p⊕m} = r_m r_{p⊕m} e^{i(φ_{p⊕m} − φ_m)}.
    Complex acc = 0.0;
    for (int k = 0; k < d * d; ++k) {
        WHIndex m = WHIndex::from_flat(k, d);
        acc += std::conj(c[m]) * c[p.plus(m, d)] * root_of_unity(-static_cast<long long>(m.x) * p.z, d);
    }
    return acc;
}

double normalization_residual(const WHCoefficients &c) {
    return c.norm_squared() - 1.0;
}

double max_unitarity_residual(const WHCoefficients &c) {
    int d = c.dim();
    double worst = std::abs(normalization_residual(c));
    for (int k = 1; k < d * d; ++k) {
        worst = std::max(worst, std::abs(unitarity_residual(c, WHIndex::from_flat(k, d))));
    }
    return worst;
}

}  // namespace qudest
