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

#include "qudest/fisher/fisher.h"

#include "qudest/core/error.h"
#include "qudest/core/unitary.h"
#include "qudest/estimation/estimators.h"
#include "qudest/estimation/partition.h"

namespace qudest {

namespace {

constexpr double kSkipProbability = 1e-12;
constexpr double kSimplexSlack = 1e-8;
constexpr double kModelUnitarity = 1e-6;

bool on_simplex(const RVector &p) {
    return p.minCoeff() >= -kSimplexSlack && std::abs(p.sum() - 1.0) <= kSimplexSlack;
}

}  // namespace

double FisherMatrix::asymmetry() const {
    if (entries.size() == 0) {
        return 0.0;
    }
    return (entries - entries.transpose()).cwiseAbs().maxCoeff();
}

double FisherMatrix::min_eigenvalue() const {
    if (entries.size() == 0) {
        return 0.0;
    }
    RMatrix sym = 0.5 * (entries + entries.transpose());
    return Eigen::SelfAdjointEigenSolver<RMatrix>(sym, Eigen::EigenvaluesOnly).eigenvalues().minCoeff();
}

std::vector<std::string> qubit_labels() {
    return {"alpha", "theta", "phi"};
}

std::vector<std::string> lambda_labels(int d) {
    std::vector<std::string> out;
    for (int j = 1; j < d * d; ++j) {
        out.push_back("lambda" + std::to_string(j));
    }
    return out;
}

FisherMatrix qfi_qubit(double alpha, double theta) {
    double s2a = std::sin(alpha) * std::sin(alpha);
    double s2t = std::sin(theta) * std::sin(theta);
    FisherMatrix f{qubit_labels(), RMatrix::Zero(3, 3)};
    f.entries(0, 0) = 4.0;
    f.entries(1, 1) = 4.0 * s2a;
    f.entries(2, 2) = 4.0 * s2a * s2t;
    return f;
}

CloseIdParams CloseIdParams::from_coefficients(const WHCoefficients &c) {
    PartitionSets parts = partition_indices(c.dim());
    CloseIdParams p;
    p.d = c.dim();
    for (WHIndex f : parts.unpaired) {
        p.r_unpaired.push_back(c.amplitude(f));
    }
    for (WHIndex a : parts.plus) {
        p.r_paired.push_back(c.amplitude(a));
        p.phi_paired.push_back(c.phase(a));
    }
    return p;
}

CloseIdParams CloseIdParams::from_vector(int d, const RVector &values) {
    PartitionSets parts = partition_indices(d);
    size_t nf = parts.unpaired.size();
    size_t na = parts.plus.size();
    if (static_cast<size_t>(values.size()) != nf + 2 * na) {
        throw Error(ErrorCode::kShapeError, "parameter vector length does not match the partition");
    }
    CloseIdParams p;
    p.d = d;
    for (size_t k = 0; k < nf; ++k) {
        p.r_unpaired.push_back(values(static_cast<Eigen::Index>(k)));
    }
    for (size_t k = 0; k < na; ++k) {
        p.r_paired.push_back(values(static_cast<Eigen::Index>(nf + k)));
        p.phi_paired.push_back(values(static_cast<Eigen::Index>(nf + na + k)));
    }
    return p;
}

RVector CloseIdParams::to_vector() const {
    RVector v(static_cast<Eigen::Index>(r_unpaired.size() + 2 * r_paired.size()));
    Eigen::Index k = 0;
    for (double r : r_unpaired) {
        v(k++) = r;
    }
    for (double r : r_paired) {
        v(k++) = r;
    }
    for (double phi : phi_paired) {
        v(k++) = phi;
    }
    return v;
}

std::vector<std::string> CloseIdParams::labels() const {
    PartitionSets parts = partition_indices(d);
    std::vector<std::string> out;
    for (WHIndex f : parts.unpaired) {
        out.push_back("r" + f.str());
    }
    for (WHIndex a : parts.plus) {
        out.push_back("r" + a.str());
    }
    for (WHIndex a : parts.plus) {
        out.push_back("phi" + a.str());
    }
    return out;
}

double CloseIdParams::r0_squared() const {
    double s = 1.0;
    for (double r : r_unpaired) {
        s -= r * r;
    }
    for (double r : r_paired) {
        s -= 2.0 * r * r;
    }
    return s;
}

namespace {

void check_shape(const CloseIdParams &p) {
    PartitionSets parts = partition_indices(p.d);
    if (p.r_unpaired.size() != parts.unpaired.size() || p.r_paired.size() != parts.plus.size() ||
        p.phi_paired.size() != parts.plus.size()) {
        throw Error(ErrorCode::kShapeError, "close-to-identity parameters do not match the partition");
    }
}

double checked_r0_squared(const CloseIdParams &p) {
    check_shape(p);
    double r0sq = p.r0_squared();
    if (!(r0sq > 0.0)) {
        throw Error(ErrorCode::kOutOfRegime, "r0^2 = " + std::to_string(r0sq) + " is not positive");
    }
    return r0sq;
}

}  // namespace

FisherMatrix qfi_close_identity(const CloseIdParams &params) {
    double r0sq = checked_r0_squared(params);
    auto nf = static_cast<Eigen::Index>(params.r_unpaired.size());
    auto na = static_cast<Eigen::Index>(params.r_paired.size());
    FisherMatrix f{params.labels(), RMatrix::Zero(nf + 2 * na, nf + 2 * na)};
    RMatrix &m = f.entries;
    for (Eigen::Index i = 0; i < nf; ++i) {
        double ri = params.r_unpaired[static_cast<size_t>(i)];
        for (Eigen::Index j = 0; j < nf; ++j) {
            m(i, j) = 4.0 * ri * params.r_unpaired[static_cast<size_t>(j)] / r0sq + (i == j ? 4.0 : 0.0);
        }
        for (Eigen::Index a = 0; a < na; ++a) {
            double b = 8.0 * ri * params.r_paired[static_cast<size_t>(a)] / r0sq;
            m(i, nf + a) = b;
            m(nf + a, i) = b;
        }
    }
    for (Eigen::Index a = 0; a < na; ++a) {
        double ra = params.r_paired[static_cast<size_t>(a)];
        for (Eigen::Index b = 0; b < na; ++b) {
            m(nf + a, nf + b) = 16.0 * ra * params.r_paired[static_cast<size_t>(b)] / r0sq + (a == b ? 8.0 : 0.0);
        }
        m(nf + na + a, nf + na + a) = 8.0 * ra * ra;
    }
    return f;
}

FisherMatrix cfi_close_identity(const CloseIdParams &params) {
    double r0sq = checked_r0_squared(params);
    PartitionSets parts = partition_indices(params.d);
    auto nf = static_cast<Eigen::Index>(params.r_unpaired.size());
    auto na = static_cast<Eigen::Index>(params.r_paired.size());
    Eigen::Index n = nf + 2 * na;
    FisherMatrix f{params.labels(), RMatrix::Zero(n, n)};
    RMatrix &m = f.entries;

    // Outcome 0: P0 = r0², ∂P0/∂r_f = −2r_f, ∂P0/∂r_a = −4r_a.
    RVector g0 = RVector::Zero(n);
    for (Eigen::Index i = 0; i < nf; ++i) {
        g0(i) = -2.0 * params.r_unpaired[static_cast<size_t>(i)];
    }
    for (Eigen::Index a = 0; a < na; ++a) {
        g0(nf + a) = -4.0 * params.r_paired[static_cast<size_t>(a)];
    }
    m += g0 * g0.transpose() / r0sq;

    // Outcomes f: P_f = r_f², contributing (2r_f)² / r_f² = 4.
    for (Eigen::Index i = 0; i < nf; ++i) {
        m(i, i) += 4.0;
    }

    // Outcomes a and ⊖a: P = r_a²(1 ± cos Δ_a), Δ_a = 2φ_a − 2π a_x a_z/d − π.
    for (Eigen::Index a = 0; a < na; ++a) {
        double ra = params.r_paired[static_cast<size_t>(a)];
        WHIndex idx = parts.plus[static_cast<size_t>(a)];
        double delta = 2.0 * params.phi_paired[static_cast<size_t>(a)] -
                       2.0 * kPi * idx.x * idx.z / static_cast<double>(params.d) - kPi;
        double c = std::cos(delta);
        double s = std::sin(delta);
        Eigen::Index ir = nf + a;
        Eigen::Index ip = nf + na + a;
        for (double sign : {1.0, -1.0}) {
            // ∂P/∂r_a = 2r_a(1 ± c), ∂P/∂φ_a = ∓2r_a² s·2/2; divided through by P.
            m(ir, ir) += 4.0 * (1.0 + sign * c);
            m(ir, ip) += -sign * 4.0 * ra * s;
            m(ip, ir) += -sign * 4.0 * ra * s;
            m(ip, ip) += 4.0 * ra * ra * (1.0 - sign * c);
        }
    }
    return f;
}

FisherMatrix cfi_numeric(const ProbabilityModel &model, const RVector &at, std::vector<std::string> labels,
                         double step) {
    auto n = at.size();
    if (static_cast<Eigen::Index>(labels.size()) != n) {
        throw Error(ErrorCode::kShapeError, "label count does not match the parameter vector");
    }
    RVector p = model(at);
    if (!on_simplex(p)) {
        throw Error(ErrorCode::kInvalidModel, "model probabilities are not a simplex point");
    }
    RMatrix grad(p.size(), n);
    for (Eigen::Index a = 0; a < n; ++a) {
        double h = step;
        bool ok = false;
        for (int attempt = 0; attempt < 8 && !ok; ++attempt, h /= 10.0) {
            RVector plus = at;
            RVector minus = at;
            plus(a) += h;
            minus(a) -= h;
            RVector pp = model(plus);
            RVector pm = model(minus);
            if (pp.size() != p.size() || pm.size() != p.size()) {
                throw Error(ErrorCode::kInvalidModel, "model output length changed under perturbation");
            }
            if (on_simplex(pp) && on_simplex(pm)) {
                grad.col(a) = (pp - pm) / (2.0 * h);
                ok = true;
            }
        }
        if (!ok) {
            throw Error(ErrorCode::kInvalidModel, "perturbed probabilities leave the simplex");
        }
    }
    FisherMatrix f{std::move(labels), RMatrix::Zero(n, n)};
    for (Eigen::Index y = 0; y < p.size(); ++y) {
        if (p(y) < kSkipProbability) {
            continue;
        }
        RVector g = grad.row(y).transpose();
        f.entries += g * g.transpose() / p(y);
    }
    return f;
}

FisherMatrix qfi_numeric(const UnitaryModel &model, const RVector &at, const PureState &probe,
                         std::vector<std::string> labels, double step) {
    auto n = at.size();
    if (static_cast<Eigen::Index>(labels.size()) != n) {
        throw Error(ErrorCode::kShapeError, "label count does not match the parameter vector");
    }
    auto checked = [&](const RVector &x) {
        CMatrix u = model(x);
        if (unitarity_deviation(u) > kModelUnitarity) {
            throw Error(ErrorCode::kInvalidModel, "unitary model is not unitary at a sample point");
        }
        return u;
    };
    CMatrix u = checked(at);
    const WireLayout &layout = probe.layout();
    if (layout.dim(0) != u.rows()) {
        throw Error(ErrorCode::kShapeError, "probe target dimension does not match the model");
    }
    CMatrix vectors(layout.total(), n);
    RVector means(n);
    for (Eigen::Index a = 0; a < n; ++a) {
        RVector plus = at;
        RVector minus = at;
        plus(a) += step;
        minus(a) -= step;
        CMatrix du = (checked(plus) - checked(minus)) / (2.0 * step);
        CMatrix h = kI * du.adjoint() * u;
        h = 0.5 * (h + h.adjoint());
        CMatrix v = probe.amplitudes();
        apply_local_operator(v, layout, {0}, h);
        vectors.col(a) = v.col(0);
        means(a) = probe.amplitudes().dot(v.col(0)).real();
    }
    FisherMatrix f{std::move(labels), RMatrix::Zero(n, n)};
    CMatrix gram = vectors.adjoint() * vectors;
    f.entries = 4.0 * gram.real() - 4.0 * means * means.transpose();
    f.entries = 0.5 * (f.entries + f.entries.transpose()).eval();
    return f;
}

double fisher_trace_distance(const FisherMatrix &f1, const FisherMatrix &f2, bool halved) {
    if (f1.labels != f2.labels || f1.entries.rows() != f2.entries.rows()) {
        throw Error(ErrorCode::kLabelMismatch, "Fisher matrices use different parameter lists");
    }
    RMatrix diff = f1.entries - f2.entries;
    diff = 0.5 * (diff + diff.transpose()).eval();
    if (diff.size() == 0) {
        return 0.0;
    }
    double total = Eigen::SelfAdjointEigenSolver<RMatrix>(diff, Eigen::EigenvaluesOnly).eigenvalues().cwiseAbs().sum();
    return halved ? 0.5 * total : total;
}

CVector close_identity_control(const CloseIdParams &params) {
    double r0sq = checked_r0_squared(params);
    int d = params.d;
    PartitionSets parts = partition_indices(d);
    CVector u = CVector::Zero(d * d);
    u(0) = std::sqrt(r0sq);
    for (size_t i = 0; i < parts.unpaired.size(); ++i) {
        WHIndex f = parts.unpaired[i];
        double phase = kPi * f.x * f.z / static_cast<double>(d) + kPi / 2.0;
        u(f.flat(d)) = std::polar(params.r_unpaired[i], phase);
    }
    for (size_t i = 0; i < parts.plus.size(); ++i) {
        WHIndex a = parts.plus[i];
        double phi = params.phi_paired[i];
        double partner = -phi + 2.0 * kPi * a.x * a.z / static_cast<double>(d) + kPi;
        u(a.flat(d)) = std::polar(params.r_paired[i], phi);
        u(parts.minus[i].flat(d)) = std::polar(params.r_paired[i], partner);
    }
    return u;
}

RVector close_identity_probabilities(const CloseIdParams &params) {
    PureState control(WireLayout::uniform(2, params.d), close_identity_control(params));
    return born_probabilities(control, MeasurementBasis::kTildeH);
}

UnitaryModel qubit_unitary_model() {
    return [](const RVector &x) { return qubit_unitary(x(0), x(1), x(2)).matrix(); };
}

ProbabilityModel qubit_probability_model() {
    return [](const RVector &x) { return qubit_probabilities(x(0), x(1), x(2)); };
}

UnitaryModel gell_mann_unitary_model(int d) {
    return [d](const RVector &x) {
        return exp_hamiltonian(HamiltonianParams(d, std::vector<double>(x.data(), x.data() + x.size()))).matrix();
    };
}

ProbabilityModel gell_mann_probability_model(int d, MeasurementBasis basis) {
    return [d, basis](const RVector &x) {
        UnitaryMatrix u = exp_hamiltonian(HamiltonianParams(d, std::vector<double>(x.data(), x.data() + x.size())));
        CVector amps = wh_expand(u).as_vector();
        amps /= amps.norm();
        return RVector(born_probabilities(PureState(WireLayout::uniform(2, d), std::move(amps)), basis));
    };
}

}  // namespace qudest
