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

#include <gtest/gtest.h>

#include <set>

#include "qudest/circuit/circuit.h"
#include "qudest/core/error.h"
#include "qudest/core/rng.h"
#include "qudest/estimation/estimators.h"

namespace qudest {
namespace {

double unitary_agf(const UnitaryMatrix &v, const UnitaryMatrix &u) {
    int d = u.dim();
    double overlap = std::norm((u.matrix().adjoint() * v.matrix()).trace());
    return (overlap / d + 1.0) / (d + 1.0);
}

CVector ket0(int d) {
    return CVector::Unit(d, 0);
}

TEST(Partition, SizesAndSymmetry) {
    for (int d = 2; d <= 8; ++d) {
        PartitionSets p = partition_indices(d);
        size_t expected_unpaired = d % 2 == 0 ? 3u : 0u;
        EXPECT_EQ(p.unpaired.size(), expected_unpaired);
        EXPECT_EQ(p.plus.size(), (static_cast<size_t>(d * d) - 1 - expected_unpaired) / 2);
        std::set<WHIndex> seen = {WHIndex{0, 0}};
        for (WHIndex f : p.unpaired) {
            EXPECT_TRUE(seen.insert(f).second);
            EXPECT_EQ(f, f.negated(d));
        }
        for (size_t i = 0; i < p.plus.size(); ++i) {
            EXPECT_EQ(p.minus[i], p.plus[i].negated(d));
            EXPECT_LT(p.plus[i], p.minus[i]);
            EXPECT_TRUE(seen.insert(p.plus[i]).second);
            EXPECT_TRUE(seen.insert(p.minus[i]).second);
            EXPECT_EQ(p.category(p.plus[i]), 2);
            EXPECT_EQ(p.category(p.minus[i]), 3);
        }
        EXPECT_EQ(seen.size(), static_cast<size_t>(d * d));
    }
    PartitionSets two = partition_indices(2);
    EXPECT_EQ(two.unpaired, (std::vector<WHIndex>{{0, 1}, {1, 0}, {1, 1}}));
    EXPECT_TRUE(two.plus.empty());
    EXPECT_EQ(partition_indices(4).plus.size(), 6u);
}

TEST(WithOctant, IdentityIsDegenerate) {
    RVector p = RVector::Zero(4);
    p(0) = 1.0;
    QubitAngles a = estimate_qubit_with_octant(p, {});
    EXPECT_NEAR(a.alpha, 0.0, 1e-15);
    EXPECT_TRUE(a.degenerate);
    EXPECT_EQ(a.theta, 0.0);
    EXPECT_EQ(a.phi, 0.0);
}

TEST(WithOctant, HalfAndHalf) {
    RVector p(4);
    p << 0.5, 0.0, 0.5, 0.0;
    QubitAngles a = estimate_qubit_with_octant(p, {1, 1, 1});
    EXPECT_NEAR(a.alpha, kPi / 4, 1e-12);
    EXPECT_NEAR(a.theta, kPi / 2, 1e-12);
    EXPECT_NEAR(a.phi, 0.0, 1e-12);
}

TEST(WithOctant, RoundTrip) {
    CounterRng rng(77);
    for (int k = 0; k < 1000; ++k) {
        double alpha = 0.05 + (kPi / 2 - 0.1) * rng.uniform01();
        double theta = 0.05 + (kPi - 0.1) * rng.uniform01();
        double phi = 0.05 + (2 * kPi - 0.1) * rng.uniform01();
        Octant o{std::cos(phi) >= 0 ? 1 : -1, std::sin(phi) >= 0 ? 1 : -1, std::cos(theta) >= 0 ? 1 : -1};
        RVector p = qubit_probabilities(alpha, theta, phi);
        QubitAngles a = estimate_qubit_with_octant(p, o);
        EXPECT_NEAR(a.alpha, alpha, 1e-10);
        EXPECT_NEAR(a.theta, theta, 1e-10);
        EXPECT_NEAR(std::abs(wrap_phase(a.phi - phi)), 0.0, 1e-10);
        // Circuit probabilities agree with the closed form.
        RVector sim = born_probabilities(run_estimation(qubit_unitary(alpha, theta, phi), ket0(2)).control,
                                         MeasurementBasis::kComputational);
        EXPECT_LT((sim - p).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(WithOctant, RejectsInvalidDistribution) {
    RVector p(4);
    p << 0.5, 0.5, 0.5, -0.5;
    try {
        estimate_qubit_with_octant(p, {});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::kInvalidDistribution);
    }
}

QubitCoefficients exact_no_prior(const UnitaryMatrix &u, uint64_t seed) {
    return estimate_qubit_no_prior(qubit_measurement_probabilities(u, QubitBasis::kZ),
                                   qubit_measurement_probabilities(u, QubitBasis::kX),
                                   qubit_measurement_probabilities(u, QubitBasis::kY), seed);
}

TEST(NoPrior, Identity) {
    QubitCoefficients c = exact_no_prior(UnitaryMatrix::identity(2), 1);
    EXPECT_NEAR(c.c_i, 1.0, 1e-12);
    EXPECT_NEAR(std::abs(c.c_x) + std::abs(c.c_y) + std::abs(c.c_z), 0.0, 1e-6);
}

TEST(NoPrior, GlobalPhaseBranch) {
    UnitaryMatrix u = qubit_unitary(kPi / 2, kPi / 4, 0.0);
    QubitCoefficients c = exact_no_prior(u, 5);
    EXPECT_EQ(c.branch, "iy-zero");
    EXPECT_NEAR(unitary_agf(c.unitary(), u), 1.0, 1e-12);
}

TEST(NoPrior, HaarRoundTrip) {
    for (uint64_t k = 0; k < 500; ++k) {
        UnitaryMatrix u = haar_random_unitary(2, derive_seed(4, {k}));
        QubitCoefficients c = exact_no_prior(u, k);
        EXPECT_GE(unitary_agf(c.unitary(), u), 1.0 - 1e-9) << "unitary " << k << " branch " << c.branch;
        EXPECT_GE(c.c_i, 0.0);
    }
}

TEST(NoPrior, ZeroShotsRejected) {
    MeasurementCounts empty;
    empty.counts = {0, 0, 0, 0};
    try {
        estimate_qubit_no_prior(empty, empty, empty, 1);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::kInsufficientData);
    }
}

TEST(CloseIdentity, IdentityEstimate) {
    RVector p = RVector::Zero(9);
    p(0) = 1.0;
    CloseIdEstimate est = estimate_close_identity(p, 3);
    EXPECT_NEAR(est.r0, 1.0, 1e-15);
    for (const PairEstimate &pair : est.paired) {
        EXPECT_EQ(pair.r, 0.0);
        EXPECT_TRUE(pair.phase_undefined);
    }
}

TEST(CloseIdentity, SymmetricPair) {
    PartitionSets parts = partition_indices(3);
    RVector p = RVector::Zero(9);
    p(parts.plus[0].flat(3)) = 0.01;
    p(parts.minus[0].flat(3)) = 0.01;
    p(0) = 0.98;
    CloseIdEstimate est = estimate_close_identity(p, 3);
    EXPECT_NEAR(est.paired[0].cos_delta, 0.0, 1e-15);
    EXPECT_NEAR(est.paired[0].r, 0.1, 1e-12);
    EXPECT_NEAR(est.normalization(), 1.0, 1e-12);
}

struct CloseIdErrors {
    double amplitude = 0.0;
    double phase = 0.0;
};

CloseIdErrors close_identity_errors(int d, double scale, uint64_t seed, int trials) {
    CounterRng rng(seed);
    CloseIdErrors worst;
    PartitionSets parts = partition_indices(d);
    for (int trial = 0; trial < trials; ++trial) {
        std::vector<double> lambda(static_cast<size_t>(d * d - 1));
        for (double &v : lambda) {
            v = scale * rng.uniform01();
        }
        UnitaryMatrix u = exp_hamiltonian(HamiltonianParams(d, lambda));
        WHCoefficients truth = wh_expand(u).with_fixed_phase();
        RVector p = born_probabilities(run_estimation(u, ket0(d)).control, MeasurementBasis::kTildeH);
        CloseIdEstimate est = estimate_close_identity(p, d);
        worst.amplitude = std::max(worst.amplitude, std::abs(est.r0 - truth.amplitude({0, 0})));
        for (const auto &[f, r] : est.unpaired) {
            worst.amplitude = std::max(worst.amplitude, std::abs(r - truth.amplitude(f)));
        }
        std::vector<double> phases = select_phase_candidate(est, truth);
        for (size_t i = 0; i < est.paired.size(); ++i) {
            worst.amplitude = std::max(worst.amplitude, std::abs(est.paired[i].r - truth.amplitude(parts.plus[i])));
            worst.amplitude = std::max(worst.amplitude, std::abs(est.paired[i].r - truth.amplitude(parts.minus[i])));
            worst.phase = std::max(worst.phase, std::abs(wrap_phase(phases[i] - truth.phase(parts.plus[i]))));
        }
    }
    return worst;
}

TEST(CloseIdentity, ExactProbabilityRecovery) {
    for (int d : {3, 4}) {
        CloseIdErrors e = close_identity_errors(d, 0.01, derive_seed(8, {static_cast<uint64_t>(d)}), 50);
        EXPECT_LT(e.amplitude, 1e-4);
        CloseIdErrors tiny = close_identity_errors(d, 1e-4, derive_seed(9, {static_cast<uint64_t>(d)}), 50);
        EXPECT_LT(tiny.phase, 1e-3);
    }
}

TEST(CloseIdentity, PhaseErrorIsFirstOrderInLambda) {
    double coarse = close_identity_errors(3, 1e-2, 21, 100).phase;
    double fine = close_identity_errors(3, 1e-3, 21, 100).phase;
    EXPECT_GT(coarse / fine, 5.0);
    EXPECT_LT(coarse / fine, 20.0);
}

TEST(CloseIdentity, RandomQuquartPhasesResolve) {
    CloseIdErrors e = close_identity_errors(4, 1e-4, 33, 20);
    EXPECT_LT(e.phase, 2e-3);
}

TEST(PhaseSelection, PicksNearest) {
    CloseIdEstimate est;
    est.d = 3;
    PairEstimate pair;
    pair.index = {0, 1};
    pair.cos_delta = 0.0;
    pair.candidates = phase_candidates(pair.index, 0.0, 3);
    est.paired.push_back(pair);
    WHCoefficients ref = WHCoefficients::zero(3);
    ref[{0, 0}] = 1.0;
    ref[{0, 1}] = std::polar(0.1, pair.candidates[2]);
    EXPECT_NEAR(select_phase_candidate(est, ref)[0], pair.candidates[2], 1e-15);
    // cos Δ = 1 puts the candidates at π/2 and 3π/2 (each twice).
    est.paired[0].cos_delta = 1.0;
    est.paired[0].candidates = phase_candidates(pair.index, 1.0, 3);
    ref[{0, 1}] = std::polar(0.1, kPi / 2 - 0.01);
    std::vector<double> chosen = select_phase_candidate(est, ref);
    EXPECT_NEAR(std::abs(wrap_phase(chosen[0] - kPi / 2)), 0.0, 1e-12);
}

TEST(GellMann, ZeroProbabilities) {
    RVector p = RVector::Zero(9);
    p(0) = 1.0;
    HamiltonianParams h = gm_first_order_estimate(p, 3);
    for (double v : h.lambda) {
        EXPECT_EQ(v, 0.0);
    }
}

TEST(GellMann, QubitAccuracy) {
    HamiltonianParams truth(2, {0.05, 0.0, 0.0});
    RVector p = born_probabilities(run_estimation(exp_hamiltonian(truth), ket0(2)).control, MeasurementBasis::kGellMann);
    HamiltonianParams est = gm_first_order_estimate(p, 2);
    EXPECT_NEAR(est.lambda[0], 0.05, 0.05 * 0.005);
    EXPECT_NEAR(est.lambda[1], 0.0, 1e-12);
}

TEST(Closeness, Oracles) {
    EXPECT_NEAR(closeness_measure(UnitaryMatrix::identity(3)), 0.0, 1e-15);
    EXPECT_NEAR(closeness_measure(wh_operator({1, 0}, 2)), 1.0, 1e-15);
    double prev = -1.0;
    for (double t : {0.001, 0.003, 0.01, 0.03}) {
        std::vector<double> lambda(8, 0.0);
        lambda[0] = t;
        double c = closeness_measure(exp_hamiltonian(HamiltonianParams(3, lambda)));
        EXPECT_GT(c, prev);
        EXPECT_LT(c, t * t);
        prev = c;
    }
}

}  // namespace
}  // namespace qudest
