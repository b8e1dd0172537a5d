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

#include "qudest/circuit/measurement.h"

#include <algorithm>

#include "qudest/core/error.h"
#include "qudest/core/gell_mann.h"
#include "qudest/core/rng.h"
#include "qudest/estimation/partition.h"

namespace qudest {

namespace {

constexpr double kSimplexTolerance = 1e-8;

CMatrix qubit_basis_change(MeasurementBasis basis) {
    double s = 1.0 / std::sqrt(2.0);
    CMatrix h(2, 2);
    h << s, s, s, -s;
    if (basis == MeasurementBasis::kQubitY) {
        CMatrix phase = CMatrix::Zero(2, 2);
        phase(0, 0) = 1.0;
        phase(1, 1) = kI;
        h = h * phase;
    }
    return h;
}

CMatrix kron(const CMatrix &a, const CMatrix &b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

}  // namespace

std::string basis_name(MeasurementBasis basis) {
    switch (basis) {
        case MeasurementBasis::kComputational:
            return "computational";
        case MeasurementBasis::kTildeH:
            return "tildeH";
        case MeasurementBasis::kQubitX:
            return "qubit-X";
        case MeasurementBasis::kQubitY:
            return "qubit-Y";
        case MeasurementBasis::kGellMann:
            return "gm-basis";
    }
    return "unknown";
}

RVector MeasurementCounts::frequencies() const {
    if (shots == 0) {
        throw Error(ErrorCode::kInsufficientData, "measurement record has zero shots");
    }
    RVector f(static_cast<Eigen::Index>(counts.size()));
    for (size_t k = 0; k < counts.size(); ++k) {
        f(static_cast<Eigen::Index>(k)) = static_cast<double>(counts[k]) / static_cast<double>(shots);
    }
    return f;
}

RVector born_probabilities(const PureState &control, MeasurementBasis basis) {
    const WireLayout &layout = control.layout();
    if (layout.num_wires() != 2 || layout.dim(0) != layout.dim(1)) {
        throw Error(ErrorCode::kLayoutMismatch, "control state must be two qudits of equal dimension");
    }
    int d = layout.dim(0);
    CVector a = control.amplitudes();
    switch (basis) {
        case MeasurementBasis::kComputational:
            break;
        case MeasurementBasis::kTildeH:
            a = tilde_h_operator(d) * a;
            break;
        case MeasurementBasis::kQubitX:
        case MeasurementBasis::kQubitY: {
            if (d != 2) {
                throw Error(ErrorCode::kBasisUnavailable, basis_name(basis) + " requires d = 2");
            }
            CMatrix b = qubit_basis_change(basis);
            a = kron(b, b) * a;
            break;
        }
        case MeasurementBasis::kGellMann:
            a = GellMannBasis(d).wh_to_gm_transform() * a;
            break;
    }
    return validated_distribution(a.cwiseAbs2());
}

RVector validated_distribution(const RVector &p) {
    if (p.size() == 0) {
        throw Error(ErrorCode::kInvalidDistribution, "empty probability vector");
    }
    for (Eigen::Index k = 0; k < p.size(); ++k) {
        if (!std::isfinite(p(k)) || p(k) < -kSimplexTolerance) {
            throw Error(ErrorCode::kInvalidDistribution, "negative or non-finite probability");
        }
    }
    double total = p.sum();
    if (std::abs(total - 1.0) > kSimplexTolerance) {
        throw Error(ErrorCode::kInvalidDistribution, "probabilities sum to " + std::to_string(total));
    }
    RVector q = p.cwiseMax(0.0);
    return q / q.sum();
}

MeasurementCounts sample_counts(const RVector &probabilities, uint64_t shots, uint64_t seed, MeasurementBasis basis) {
    if (shots == 0) {
        throw Error(ErrorCode::kInsufficientData, "shots must be positive");
    }
    RVector p = validated_distribution(probabilities);
    std::vector<double> cdf(static_cast<size_t>(p.size()));
    double acc = 0.0;
    for (Eigen::Index k = 0; k < p.size(); ++k) {
        acc += p(k);
        cdf[static_cast<size_t>(k)] = acc;
    }
    Eigen::Index last = p.size() - 1;
    while (last > 0 && p(last) == 0.0) {
        --last;
    }
    for (size_t k = static_cast<size_t>(last); k < cdf.size(); ++k) {
        cdf[k] = 1.0;
    }
    MeasurementCounts out;
    out.basis = basis;
    out.shots = shots;
    out.counts.assign(cdf.size(), 0);
    CounterRng rng(seed);
    for (uint64_t s = 0; s < shots; ++s) {
        double u = rng.uniform01();
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        size_t k = std::min(static_cast<size_t>(it - cdf.begin()), cdf.size() - 1);
        ++out.counts[k];
    }
    return out;
}

CMatrix tilde_h_operator(int d) {
    PartitionSets parts = partition_indices(d);
    int n = d * d;
    CMatrix h = CMatrix::Identity(n, n);
    double s = 1.0 / std::sqrt(2.0);
    for (size_t i = 0; i < parts.plus.size(); ++i) {
        int a = parts.plus[i].flat(d);
        int b = parts.minus[i].flat(d);
        h(a, a) = s;
        h(b, a) = s;
        h(a, b) = s;
        h(b, b) = -s;
    }
    return h;
}

}  // namespace qudest
