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

#include "qudest/circuit/state.h"

#include <algorithm>

#include "qudest/core/error.h"

namespace qudest {

namespace {

constexpr double kNormTolerance = 1e-10;
constexpr double kTraceTolerance = 1e-8;

// Offsets of the local basis states of `wires` (first wire most significant)
// and the base offsets enumerating every configuration of the remaining wires.
struct LocalIndexing {
    std::vector<Eigen::Index> local;
    std::vector<Eigen::Index> bases;
};

LocalIndexing make_indexing(const WireLayout &layout, const std::vector<int> &wires) {
    std::vector<bool> used(static_cast<size_t>(layout.num_wires()), false);
    for (int w : wires) {
        if (w < 0 || w >= layout.num_wires() || used[static_cast<size_t>(w)]) {
            throw Error(ErrorCode::kWiringError, "invalid or repeated wire " + std::to_string(w));
        }
        used[static_cast<size_t>(w)] = true;
    }
    LocalIndexing out;
    out.local = {0};
    for (int w : wires) {
        std::vector<Eigen::Index> next;
        next.reserve(out.local.size() * static_cast<size_t>(layout.dim(w)));
        for (Eigen::Index base : out.local) {
            for (int k = 0; k < layout.dim(w); ++k) {
                next.push_back(base + k * layout.stride(w));
            }
        }
        out.local = std::move(next);
    }
    out.bases = {0};
    for (int w = 0; w < layout.num_wires(); ++w) {
        if (used[static_cast<size_t>(w)]) {
            continue;
        }
        std::vector<Eigen::Index> next;
        next.reserve(out.bases.size() * static_cast<size_t>(layout.dim(w)));
        for (Eigen::Index base : out.bases) {
            for (int k = 0; k < layout.dim(w); ++k) {
                next.push_back(base + k * layout.stride(w));
            }
        }
        out.bases = std::move(next);
    }
    return out;
}

}  // namespace

WireLayout::WireLayout(std::vector<int> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) {
        throw Error(ErrorCode::kInvalidDimension, "layout needs at least one wire");
    }
    strides_.assign(dims_.size(), 1);
    for (size_t k = dims_.size(); k-- > 0;) {
        if (dims_[k] < 2) {
            throw Error(ErrorCode::kInvalidDimension, "wire dimension must be >= 2");
        }
        strides_[k] = total_;
        total_ *= dims_[k];
    }
}

int WireLayout::dim(int wire) const {
    if (wire < 0 || wire >= num_wires()) {
        throw Error(ErrorCode::kWiringError, "wire " + std::to_string(wire) + " out of range");
    }
    return dims_[static_cast<size_t>(wire)];
}

PureState::PureState(WireLayout layout, CVector amplitudes)
    : layout_(std::move(layout)), amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() != layout_.total()) {
        throw Error(ErrorCode::kShapeError, "amplitude vector length does not match the layout");
    }
    double norm = amplitudes_.norm();
    if (!(std::abs(norm - 1.0) <= kNormTolerance)) {
        throw Error(ErrorCode::kNormalizationError, "state norm is " + std::to_string(norm));
    }
}

PureState PureState::product(const std::vector<CVector> &factors) {
    std::vector<int> dims;
    CVector acc = CVector::Ones(1);
    for (const CVector &f : factors) {
        dims.push_back(static_cast<int>(f.size()));
        CVector next(acc.size() * f.size());
        for (Eigen::Index i = 0; i < acc.size(); ++i) {
            next.segment(i * f.size(), f.size()) = acc(i) * f;
        }
        acc = std::move(next);
    }
    return PureState(WireLayout(std::move(dims)), std::move(acc));
}

PureState PureState::basis(const WireLayout &layout, Eigen::Index index) {
    if (index < 0 || index >= layout.total()) {
        throw Error(ErrorCode::kIndexError, "basis index out of range");
    }
    CVector v = CVector::Zero(layout.total());
    v(index) = 1.0;
    return PureState(layout, std::move(v));
}

DensityState::DensityState(WireLayout layout, CMatrix matrix) : layout_(std::move(layout)), matrix_(std::move(matrix)) {
    if (matrix_.rows() != layout_.total() || matrix_.cols() != layout_.total()) {
        throw Error(ErrorCode::kShapeError, "density matrix size does not match the layout");
    }
    if ((matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff() > kTraceTolerance) {
        throw Error(ErrorCode::kInvalidArgument, "density matrix is not Hermitian");
    }
    if (std::abs(matrix_.trace() - Complex(1.0)) > kTraceTolerance) {
        throw Error(ErrorCode::kNormalizationError, "density matrix trace differs from 1");
    }
}

DensityState DensityState::from_pure(const PureState &s) {
    return DensityState(s.layout(), s.amplitudes() * s.amplitudes().adjoint());
}

CMatrix DensityState::reduced(const std::vector<int> &wires) const {
    LocalIndexing ix = make_indexing(layout_, wires);
    auto n = static_cast<Eigen::Index>(ix.local.size());
    CMatrix out = CMatrix::Zero(n, n);
    for (Eigen::Index base : ix.bases) {
        for (Eigen::Index i = 0; i < n; ++i) {
            for (Eigen::Index j = 0; j < n; ++j) {
                out(i, j) += matrix_(base + ix.local[static_cast<size_t>(i)], base + ix.local[static_cast<size_t>(j)]);
            }
        }
    }
    return out;
}

double DensityState::purity() const {
    return (matrix_ * matrix_).trace().real();
}

double DensityState::min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<CMatrix> eig(matrix_, Eigen::EigenvaluesOnly);
    return eig.eigenvalues().minCoeff();
}

void apply_local_operator(CMatrix &columns, const WireLayout &layout, const std::vector<int> &wires, const CMatrix &op) {
    if (columns.rows() != layout.total()) {
        throw Error(ErrorCode::kLayoutMismatch, "state size does not match the layout");
    }
    LocalIndexing ix = make_indexing(layout, wires);
    auto n = static_cast<Eigen::Index>(ix.local.size());
    if (op.rows() != n || op.cols() != n) {
        throw Error(ErrorCode::kShapeError, "operator size does not match the addressed wires");
    }
    CVector buf(n);
    for (Eigen::Index col = 0; col < columns.cols(); ++col) {
        for (Eigen::Index base : ix.bases) {
            for (Eigen::Index i = 0; i < n; ++i) {
                buf(i) = columns(base + ix.local[static_cast<size_t>(i)], col);
            }
            CVector out = op * buf;
            for (Eigen::Index i = 0; i < n; ++i) {
                columns(base + ix.local[static_cast<size_t>(i)], col) = out(i);
            }
        }
    }
}

void conjugate_local_operator(CMatrix &rho, const WireLayout &layout, const std::vector<int> &wires, const CMatrix &op) {
    apply_local_operator(rho, layout, wires, op);
    CMatrix half = rho.adjoint();
    apply_local_operator(half, layout, wires, op);
    rho = std::move(half);
}

RVector marginal_probabilities(const CVector &amplitudes, const WireLayout &layout, const std::vector<int> &wires) {
    LocalIndexing ix = make_indexing(layout, wires);
    RVector p = RVector::Zero(static_cast<Eigen::Index>(ix.local.size()));
    for (Eigen::Index base : ix.bases) {
        for (size_t i = 0; i < ix.local.size(); ++i) {
            p(static_cast<Eigen::Index>(i)) += std::norm(amplitudes(base + ix.local[i]));
        }
    }
    return p;
}

RVector marginal_probabilities(const CMatrix &rho, const WireLayout &layout, const std::vector<int> &wires) {
    LocalIndexing ix = make_indexing(layout, wires);
    RVector p = RVector::Zero(static_cast<Eigen::Index>(ix.local.size()));
    for (Eigen::Index base : ix.bases) {
        for (size_t i = 0; i < ix.local.size(); ++i) {
            Eigen::Index k = base + ix.local[i];
            p(static_cast<Eigen::Index>(i)) += rho(k, k).real();
        }
    }
    return p;
}

}  // namespace qudest
