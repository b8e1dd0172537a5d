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

#include "qudest/estimation/estimators.h"

#include <algorithm>

#include "qudest/core/error.h"
#include "qudest/core/gell_mann.h"
#include "qudest/core/rng.h"

namespace qudest {

namespace {

constexpr double kDegenerateThreshold = 1e-12;
constexpr double kZeroProbability = 1e-12;
constexpr double kTieThreshold = 1e-9;

CMatrix pauli(int k) {
    return GellMannBasis(2).matrix(k);
}

int random_sign(CounterRng &rng) {
    return (rng() >> 63) != 0 ? 1 : -1;
}

int sign_or_random(double v, CounterRng &rng) {
    if (v > 0.0) {
        return 1;
    }
    if (v < 0.0) {
        return -1;
    }
    return random_sign(rng);
}

RVector checked_four(const RVector &p) {
    if (p.size() != 4) {
        throw Error(ErrorCode::kInvalidDistribution, "qubit estimators need 4 outcome probabilities");
    }
    return validated_distribution(p);
}

double safe_sqrt(double x) {
    return std::sqrt(std::max(x, 0.0));
}

}  // namespace

UnitaryMatrix qubit_unitary(double alpha, double theta, double phi) {
    double nx = std::sin(theta) * std::cos(phi);
    double ny = std::sin(theta) * std::sin(phi);
    double nz = std::cos(theta);
    CMatrix u = std::cos(alpha) * CMatrix::Identity(2, 2) -
                kI * std::sin(alpha) * (nx * pauli(1) + ny * pauli(2) + nz * pauli(3));
    return UnitaryMatrix::trusted(std::move(u));
}

RVector qubit_probabilities(double alpha, double theta, double phi) {
    double ca = std::cos(alpha);
    double sa = std::sin(alpha);
    double st = std::sin(theta);
    double ct = std::cos(theta);
    RVector p(4);
    p(0) = ca * ca;
    p(1) = sa * sa * ct * ct;
    p(2) = sa * sa * st * st * std::cos(phi) * std::cos(phi);
    p(3) = sa * sa * st * st * std::sin(phi) * std::sin(phi);
    return p;
}

QubitAngles estimate_qubit_with_octant(const RVector &p_in, const Octant &octant) {
    RVector p = checked_four(p_in);
    QubitAngles out;
    out.octant = octant;
    double rest = p(1) + p(2) + p(3);
    out.alpha = std::atan2(std::sqrt(rest), std::sqrt(p(0)));
    if (rest < kDegenerateThreshold) {
        out.degenerate = true;
        return out;
    }
    double transverse = p(2) + p(3);
    out.theta = std::atan2(std::sqrt(transverse), (octant.sz >= 0 ? 1.0 : -1.0) * std::sqrt(p(1)));
    if (transverse < kDegenerateThreshold) {
        out.degenerate = true;
        return out;
    }
    double cos_phi = (octant.sx >= 0 ? 1.0 : -1.0) * std::sqrt(std::clamp(p(2) / transverse, 0.0, 1.0));
    double sin_phi = (octant.sy >= 0 ? 1.0 : -1.0) * std::sqrt(std::clamp(p(3) / transverse, 0.0, 1.0));
    double phi = std::atan2(sin_phi, cos_phi);
    if (phi < 0.0) {
        phi += 2.0 * kPi;
    }
    out.phi = phi >= 2.0 * kPi ? 0.0 : phi;
    return out;
}

UnitaryMatrix QubitCoefficients::unitary() const {
    CMatrix u = c_i * CMatrix::Identity(2, 2) - kI * (c_x * pauli(1) + c_y * pauli(2) + c_z * pauli(3));
    return UnitaryMatrix::trusted(std::move(u));
}

QubitCoefficients estimate_qubit_no_prior(const RVector &pz_in, const RVector &px_in, const RVector &py_in,
                                          uint64_t tie_seed) {
    RVector pz = checked_four(pz_in);
    RVector px = checked_four(px_in);
    RVector py = checked_four(py_in);
    CounterRng rng(tie_seed);

    double r_z = safe_sqrt(pz(0));
    double r_i = safe_sqrt(pz(1));
    double r_y = safe_sqrt(pz(2));
    double r_x = safe_sqrt(pz(3));
    auto is_zero = [](double r) { return r * r < kZeroProbability; };

    QubitCoefficients c;
    int zeros = static_cast<int>(is_zero(r_z)) + static_cast<int>(is_zero(r_i)) + static_cast<int>(is_zero(r_y)) +
                static_cast<int>(is_zero(r_x));

    double xz_stat = px(0) + px(3) - py(0) - py(3);
    double y_stat = px(0) + px(3) + py(0) + py(3) - 1.0;

    if (zeros >= 3) {
        c.branch = "pauli";
        c.c_i = r_i;
        c.c_x = r_x;
        c.c_y = r_y;
        c.c_z = r_z;
    } else if (is_zero(r_z) && is_zero(r_x)) {
        c.branch = "xz-zero";
        c.c_i = r_i;
        c.c_x = 0.0;
        c.c_y = sign_or_random(y_stat, rng) * r_y;
        c.c_z = 0.0;
    } else if (is_zero(r_i) && is_zero(r_y)) {
        c.branch = "iy-zero";
        int s_x = random_sign(rng);
        int s_xz = sign_or_random(xz_stat, rng);
        c.c_i = 0.0;
        c.c_x = s_x * r_x;
        c.c_y = 0.0;
        c.c_z = s_x * s_xz * r_z;
    } else {
        c.branch = "general";
        int s_xz = sign_or_random(xz_stat, rng);
        int s_y = sign_or_random(y_stat, rng);
        double num1 = py(2) + py(3) - 0.5;
        double den1 = s_xz * s_y * r_z * r_y - r_x * r_i;
        double num2 = py(2) - py(3) + s_y * r_i * r_y - s_xz * r_x * r_z;
        double den2 = s_y * r_y * r_x - s_xz * r_i * r_z;
        int s_x;
        if (std::abs(den1) < kTieThreshold && std::abs(den2) < kTieThreshold) {
            s_x = sign_or_random(num2, rng);
        } else if (std::abs(den1) >= std::abs(den2)) {
            s_x = sign_or_random(num1 / den1, rng);
        } else {
            s_x = sign_or_random(num2 / den2, rng);
        }
        c.c_i = r_i;
        c.c_x = s_x * r_x;
        c.c_y = s_y * r_y;
        c.c_z = s_x * s_xz * r_z;
    }

    double norm = std::sqrt(c.c_i * c.c_i + c.c_x * c.c_x + c.c_y * c.c_y + c.c_z * c.c_z);
    if (norm > 0.0) {
        c.c_i /= norm;
        c.c_x /= norm;
        c.c_y /= norm;
        c.c_z /= norm;
    } else {
        c.c_i = 1.0;
    }
    return c;
}

QubitCoefficients estimate_qubit_no_prior(const MeasurementCounts &z, const MeasurementCounts &x,
                                          const MeasurementCounts &y, uint64_t tie_seed) {
    return estimate_qubit_no_prior(z.frequencies(), x.frequencies(), y.frequencies(), tie_seed);
}

double CloseIdEstimate::normalization() const {
    double total = r0 * r0;
    for (const auto &[index, r] : unpaired) {
        total += r * r;
    }
    for (const PairEstimate &pair : paired) {
        total += 2.0 * pair.r * pair.r;
    }
    return total;
}

std::array<double, 4> phase_candidates(WHIndex a, double cos_delta, int d) {
    double half = 0.5 * std::acos(std::clamp(cos_delta, -1.0, 1.0));
    double offset = kPi * a.x * a.z / static_cast<double>(d);
    std::array<double, 4> out{};
    int k = 0;
    for (int n = 0; n < 2; ++n) {
        for (double s : {1.0, -1.0}) {
            out[static_cast<size_t>(k++)] = wrap_phase(s * half + offset + (n + 0.5) * kPi);
        }
    }
    return out;
}

CloseIdEstimate estimate_close_identity(const RVector &p_in, int d) {
    if (p_in.size() != static_cast<Eigen::Index>(d) * d) {
        throw Error(ErrorCode::kShapeError, "expected d^2 outcome probabilities");
    }
    RVector p = validated_distribution(p_in);
    PartitionSets parts = partition_indices(d);
    CloseIdEstimate est;
    est.d = d;
    est.r0 = std::sqrt(p(0));
    for (WHIndex f : parts.unpaired) {
        est.unpaired.emplace_back(f, std::sqrt(p(f.flat(d))));
    }
    for (size_t i = 0; i < parts.plus.size(); ++i) {
        WHIndex a = parts.plus[i];
        double pa = p(a.flat(d));
        double pm = p(parts.minus[i].flat(d));
        PairEstimate pair;
        pair.index = a;
        double sum = pa + pm;
        if (sum <= 0.0) {
            pair.phase_undefined = true;
        } else {
            pair.r = std::sqrt(sum / 2.0);
            pair.cos_delta = std::clamp((pa - pm) / sum, -1.0, 1.0);
            pair.candidates = phase_candidates(a, pair.cos_delta, d);
        }
        est.paired.push_back(pair);
    }
    return est;
}

CloseIdEstimate estimate_close_identity(const MeasurementCounts &counts, int d) {
    return estimate_close_identity(counts.frequencies(), d);
}

std::vector<double> select_phase_candidate(const CloseIdEstimate &est, const WHCoefficients &reference) {
    if (reference.dim() != est.d) {
        throw Error(ErrorCode::kShapeError, "reference dimension does not match the estimate");
    }
    std::vector<double> out;
    out.reserve(est.paired.size());
    for (const PairEstimate &pair : est.paired) {
        double target = reference.phase(pair.index);
        double best = pair.candidates[0];
        double best_dist = std::abs(wrap_phase(best - target));
        for (double c : pair.candidates) {
            double dist = std::abs(wrap_phase(c - target));
            if (dist < best_dist) {
                best = c;
                best_dist = dist;
            }
        }
        out.push_back(best);
    }
    return out;
}

HamiltonianParams gm_first_order_estimate(const RVector &p, int d) {
    if (p.size() != static_cast<Eigen::Index>(d) * d) {
        throw Error(ErrorCode::kShapeError, "expected d^2 outcome probabilities");
    }
    std::vector<double> lambda(static_cast<size_t>(d * d - 1));
    for (int j = 1; j < d * d; ++j) {
        lambda[static_cast<size_t>(j - 1)] = std::sqrt(std::max(p(j), 0.0) * d / 2.0);
    }
    return HamiltonianParams(d, std::move(lambda));
}

HamiltonianParams gm_first_order_estimate(const MeasurementCounts &counts, int d) {
    return gm_first_order_estimate(counts.frequencies(), d);
}

double closeness_measure(const UnitaryMatrix &u) {
    if (u.dim() < 2) {
        throw Error(ErrorCode::kInvalidDimension, "dimension must be >= 2");
    }
    return 1.0 - std::abs(wh_expand(u).with_fixed_phase()[WHIndex{0, 0}]);
}

}  // namespace qudest
