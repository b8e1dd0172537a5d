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

#include "qudest/core/error.h"
#include "qudest/core/rng.h"
#include "qudest/noise/channels.h"
#include "qudest/sqpt/sqpt.h"

namespace qudest {
namespace {

QubitChannel depolarizing(double p) {
    KrausChannel k = depolarizing_channel(p, 2);
    return [k](const CMatrix &rho) { return k.apply(rho); };
}

UnitaryMatrix pauli(int k) {
    return UnitaryMatrix::trusted(pauli_matrices()[static_cast<size_t>(k)]);
}

UnitaryMatrix z_rotation(double eps) {
    CMatrix m = CMatrix::Zero(2, 2);
    m(0, 0) = std::polar(1.0, -eps);
    m(1, 1) = std::polar(1.0, eps);
    return UnitaryMatrix::trusted(m);
}

TEST(Sqpt, IdentityAndPauliChannels) {
    ProcessMatrix id = sqpt_exact(unitary_channel(UnitaryMatrix::identity(2)));
    CMatrix want = CMatrix::Zero(4, 4);
    want(0, 0) = 1.0;
    EXPECT_LT((id.chi - want).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT((id.chi_raw - want).cwiseAbs().maxCoeff(), 1e-12);
    ProcessMatrix x = sqpt_exact(unitary_channel(pauli(1)));
    CMatrix want_x = CMatrix::Zero(4, 4);
    want_x(1, 1) = 1.0;
    EXPECT_LT((x.chi - want_x).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Sqpt, DepolarizingChi) {
    for (double p : {0.0, 0.1, 0.5, 1.0}) {
        ProcessMatrix chi = sqpt_exact(depolarizing(p));
        CMatrix want = CMatrix::Zero(4, 4);
        want.diagonal() << 1 - 3 * p / 4, p / 4, p / 4, p / 4;
        EXPECT_LT((chi.chi - want).cwiseAbs().maxCoeff(), 1e-12) << p;
    }
}

TEST(Sqpt, RandomUnitaryExactReconstruction) {
    for (uint64_t s = 0; s < 50; ++s) {
        UnitaryMatrix u = haar_random_unitary(2, derive_seed(3, {s}));
        ProcessMatrix chi = sqpt_exact(unitary_channel(u));
        EXPECT_LT((chi.chi - unitary_chi(u)).cwiseAbs().maxCoeff(), 1e-10);
        EXPECT_GE(average_gate_fidelity(chi, u), 1.0 - 1e-9);
        EXPECT_NEAR((chi.chi - chi.chi.adjoint()).cwiseAbs().maxCoeff(), 0.0, 1e-12);
    }
}

TEST(Sqpt, ChoiRoundTrip) {
    UnitaryMatrix u = haar_random_unitary(2, 8);
    CMatrix chi = unitary_chi(u);
    EXPECT_LT((chi_from_choi(choi_from_chi(chi)) - chi).cwiseAbs().maxCoeff(), 1e-13);
    EXPECT_NEAR(choi_from_chi(chi).trace().real(), 2.0, 1e-12);
}

TEST(Sqpt, ProjectedChoiIsPsdUnderSampling) {
    UnitaryMatrix u = haar_random_unitary(2, 12);
    ProcessMatrix chi = sqpt_reconstruct(exact_channel_sampler(unitary_channel(u)), 50, 77);
    CMatrix choi = choi_from_chi(chi.chi);
    double min_eig = Eigen::SelfAdjointEigenSolver<CMatrix>(choi).eigenvalues().minCoeff();
    EXPECT_GT(min_eig, -1e-8);
    EXPECT_NEAR(choi.trace().real(), 2.0, 1e-12);
}

TEST(Sqpt, ErrorShrinksWithShots) {
    UnitaryMatrix u = haar_random_unitary(2, 21);
    CMatrix truth = unitary_chi(u);
    ChannelSampler sampler = exact_channel_sampler(unitary_channel(u));
    std::vector<double> shots = {1e3, 1e4, 1e5};
    std::vector<double> mean_err;
    for (double n : shots) {
        double total = 0.0;
        int reps = 40;
        for (int r = 0; r < reps; ++r) {
            ProcessMatrix chi = sqpt_reconstruct(sampler, static_cast<uint64_t>(n), derive_seed(5, {static_cast<uint64_t>(n), static_cast<uint64_t>(r)}));
            total += (chi.chi_raw - truth).norm();
        }
        mean_err.push_back(total / reps);
    }
    double slope = std::log(mean_err[2] / mean_err[0]) / std::log(shots[2] / shots[0]);
    EXPECT_NEAR(slope, -0.5, 0.1);
}

TEST(Sqpt, DeterministicPerSeed) {
    ChannelSampler sampler = exact_channel_sampler(depolarizing(0.2));
    ProcessMatrix a = sqpt_reconstruct(sampler, 100, 9);
    ProcessMatrix b = sqpt_reconstruct(sampler, 100, 9);
    EXPECT_EQ(a.chi, b.chi);
    EXPECT_THROW(sqpt_reconstruct(sampler, 0, 9), Error);
}

TEST(Agf, Examples) {
    UnitaryMatrix u = haar_random_unitary(2, 1);
    EXPECT_NEAR(average_gate_fidelity(unitary_channel(u), u), 1.0, 1e-12);
    EXPECT_NEAR(average_gate_fidelity(depolarizing(1.0), u), 0.5, 1e-12);
    double eps = 0.1;
    UnitaryMatrix v = UnitaryMatrix::trusted(z_rotation(eps).matrix() * u.matrix());
    double want = (2 * std::cos(eps) * std::cos(eps) + 1) / 3;
    EXPECT_NEAR(agf_between_unitaries(v, u), want, 1e-12);
    EXPECT_NEAR(average_gate_fidelity(unitary_channel(v), u), want, 1e-12);
    EXPECT_NEAR(agf_between_unitaries(pauli(1), pauli(3)), 1.0 / 3.0, 1e-12);
    UnitaryMatrix phased = UnitaryMatrix::trusted(std::polar(1.0, 0.7) * u.matrix());
    EXPECT_NEAR(agf_between_unitaries(phased, u), 1.0, 1e-12);
    EXPECT_THROW(agf_between_unitaries(u, haar_random_unitary(3, 1)), Error);
}

TEST(Agf, UnitaryFastPathAgreesForQudits) {
    for (int d = 2; d <= 4; ++d) {
        for (uint64_t s = 0; s < 10; ++s) {
            UnitaryMatrix u = haar_random_unitary(d, derive_seed(40, {static_cast<uint64_t>(d), s}));
            UnitaryMatrix v = haar_random_unitary(d, derive_seed(41, {static_cast<uint64_t>(d), s}));
            EXPECT_NEAR(average_gate_fidelity(unitary_channel(v), u), agf_between_unitaries(v, u), 1e-10);
        }
    }
}

TEST(Agf, MonotoneInDepolarizing) {
    UnitaryMatrix id = UnitaryMatrix::identity(2);
    double previous = 2.0;
    for (int k = 0; k <= 10; ++k) {
        double f = average_gate_fidelity(sqpt_exact(depolarizing(0.1 * k)), id);
        EXPECT_LT(f, previous);
        EXPECT_NEAR(f, 1.0 - 0.1 * k / 2.0, 1e-12);
        previous = f;
    }
}

TEST(NoisySampler, NoiselessMatchesIdealAndNoiseLowersFidelity) {
    UnitaryMatrix u = haar_random_unitary(2, 60);
    ProcessMatrix clean = sqpt_reconstruct(noisy_qubit_sampler(u, noise_scenario("noiseless")), 200000, 1);
    EXPECT_GT(average_gate_fidelity(clean, u), 0.995);
    ChannelSampler noisy = noisy_qubit_sampler(u, noise_scenario("full"));
    MeasurementCounts c = noisy(TomographyInput::kZero, PauliBasis::kZ, 1000, 3);
    EXPECT_EQ(c.counts[0] + c.counts[1], 1000u);
    ProcessMatrix dirty = sqpt_reconstruct(noisy, 200000, 1);
    EXPECT_LT(average_gate_fidelity(dirty, u), average_gate_fidelity(clean, u));
}

}  // namespace
}  // namespace qudest
