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

#include <compare>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "qudest/core/types.h"
#include "qudest/core/unitary.h"

namespace qudest {

/// Index n = (n_x, n_z) of the displacement operator D_n = X^{n_x} Z^{n_z}.
/// Components are kept reduced mod d by every factory.
struct WHIndex {
    int x = 0;
    int z = 0;

    static WHIndex reduced(int x, int z, int d);
    static WHIndex from_flat(int flat, int d) {
        return WHIndex{flat / d, flat % d};
    }

    /// Position of |x⟩₁|z⟩₂ in a two-qudit register (first wire most significant).
    int flat(int d) const {
        return x * d + z;
    }
    /// ⊖n = ((d - n_x) mod d, (d - n_z) mod d).
    WHIndex negated(int d) const;
    WHIndex plus(WHIndex other, int d) const;
    bool is_zero() const {
        return x == 0 && z == 0;
    }

    std::string str() const;

    auto operator<=>(const WHIndex &) const = default;
};

/// Coefficients u_n of U = Σ_n u_n D_n, stored densely in flat-index order.
class WHCoefficients {
   public:
    /// Throws incomplete-coefficients unless values.size() == d².
    WHCoefficients(int d, std::vector<Complex> values);

    static WHCoefficients zero(int d);
    /// Every index of Z_d² must be present.
    static WHCoefficients from_map(int d, const std::map<WHIndex, Complex> &entries);

    int dim() const {
        return dim_;
    }
    Complex operator[](WHIndex n) const {
        return values_[static_cast<size_t>(n.flat(dim_))];
    }
    Complex &operator[](WHIndex n) {
        return values_[static_cast<size_t>(n.flat(dim_))];
    }
    std::span<const Complex> values() const {
        return values_;
    }

    double amplitude(WHIndex n) const {
        return std::abs((*this)[n]);
    }
    /// arg(u_n) in (-π, π].
    double phase(WHIndex n) const;

    double norm_squared() const;
    CVector as_vector() const;

    /// Multiplies every coefficient by the global phase that makes u_{0,0} real and
    /// non-negative. Leaves the map unchanged when u_{0,0} vanishes.
    WHCoefficients with_fixed_phase() const;

   private:
    int dim_;
    std::vector<Complex> values_;
};

/// D_n = X^{n_x} Z^{n_z}; X|k⟩ = |k⊕1⟩, Z|k⟩ = ω^k|k⟩.
UnitaryMatrix wh_operator(WHIndex n, int d);

/// F_{jk} = ω^{jk}/√d.
UnitaryMatrix fourier_matrix(int d);

/// u_n = Tr[D_n† U]/d. No phase convention is applied, so
/// wh_reconstruct(wh_expand(U)) == U; use with_fixed_phase() for φ_{0,0} = 0.
WHCoefficients wh_expand(const CMatrix &u);
inline WHCoefficients wh_expand(const UnitaryMatrix &u) {
    return wh_expand(u.matrix());
}

/// Σ_n u_n D_n. Unitarity is not checked.
CMatrix wh_reconstruct(const WHCoefficients &c);

/// Σ_m r_m r_{p⊕m} e^{i(φ_{p⊕m} − φ_m)} ω^{−m_x p_z}, i.e. Tr[D_p† U U†]/d.
/// Vanishes for every p ≠ 0 iff the coefficients describe a unitary. p = 0 is
/// rejected with index-error; use normalization_residual() for that case.
Complex unitarity_residual(const WHCoefficients &c, WHIndex p);

/// Σ_n r_n² − 1.
double normalization_residual(const WHCoefficients &c);

/// Largest |unitarity_residual| over p ≠ 0 together with |normalization_residual|.
double max_unitarity_residual(const WHCoefficients &c);

}  // namespace qudest
