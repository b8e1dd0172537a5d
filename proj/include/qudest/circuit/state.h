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

#include <cstddef>
#include <vector>

#include "qudest/core/types.h"

namespace qudest {

/// Per-wire local dimensions. Wire 0 is the most significant tensor factor.
class WireLayout {
   public:
    explicit WireLayout(std::vector<int> dims);
    static WireLayout uniform(int wires, int d) {
        return WireLayout(std::vector<int>(static_cast<size_t>(wires), d));
    }

    int num_wires() const {
        return static_cast<int>(dims_.size());
    }
    int dim(int wire) const;
    const std::vector<int> &dims() const {
        return dims_;
    }
    Eigen::Index total() const {
        return total_;
    }
    Eigen::Index stride(int wire) const {
        return strides_[static_cast<size_t>(wire)];
    }

    bool operator==(const WireLayout &other) const {
        return dims_ == other.dims_;
    }

   private:
    std::vector<int> dims_;
    std::vector<Eigen::Index> strides_;
    Eigen::Index total_ = 1;
};

class PureState {
   public:
    /// Throws shape-error on a length mismatch and normalization-error unless
    /// the vector has unit norm within 1e−10.
    PureState(WireLayout layout, CVector amplitudes);

    /// Product state ⊗_w v_w; each factor must be normalized.
    static PureState product(const std::vector<CVector> &factors);
    static PureState basis(const WireLayout &layout, Eigen::Index index);

    const WireLayout &layout() const {
        return layout_;
    }
    const CVector &amplitudes() const {
        return amplitudes_;
    }

   private:
    WireLayout layout_;
    CVector amplitudes_;
};

class DensityState {
   public:
    /// Validates shape, Hermiticity and unit trace.
    DensityState(WireLayout layout, CMatrix matrix);
    static DensityState from_pure(const PureState &s);

    const WireLayout &layout() const {
        return layout_;
    }
    const CMatrix &matrix() const {
        return matrix_;
    }

    /// Reduced state on the listed wires, kept in the listed order.
    CMatrix reduced(const std::vector<int> &wires) const;
    double purity() const;
    double min_eigenvalue() const;

   private:
    WireLayout layout_;
    CMatrix matrix_;
};

/// Left-multiplies every column of `columns` by `op` acting on `wires` (first
/// listed wire most significant in op's index). Other wires are untouched.
void apply_local_operator(CMatrix &columns, const WireLayout &layout, const std::vector<int> &wires, const CMatrix &op);

/// ρ ↦ OρO† for an operator on the listed wires.
void conjugate_local_operator(CMatrix &rho, const WireLayout &layout, const std::vector<int> &wires, const CMatrix &op);

/// Diagonal of the reduced state on `wires`, i.e. computational-basis outcome
/// probabilities with the first listed wire most significant.
RVector marginal_probabilities(const CVector &amplitudes, const WireLayout &layout, const std::vector<int> &wires);
RVector marginal_probabilities(const CMatrix &rho, const WireLayout &layout, const std::vector<int> &wires);

}  // namespace qudest
