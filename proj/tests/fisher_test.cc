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

#include "qudest/circuit/circuit.h"
#include "qudest/core/error.h"
#include "qudest/core/rng.h"
#include "qudest/estimation/partition.h"
#include "qudest/fisher/fisher.h"

namespace qudest {
namespace {

CloseIdParams random_close_identity(int d, double scale, uint64_t seed) {
    CounterRng rng(seed);
    PartitionSets parts = partition_indices(d);
    CloseIdParams p;
    p.d = d;
    for (size_t i = 0; i < parts.unpaired.size(); ++i) {
        p.r_unpaired.push_back(scale * rng.uniform01());
    }
    for (size_t i = 0; i < parts.plus.size(); ++i) {
        p.r_paired.push_back(scale * rng.uniform01());
        p.phi_paired.push_back(2.0 * kPi * rng.uniform01());
    }
    return p;
}

double max_relative_diagonal_error(const RMatrix &got, const RMatrix &want) {
    double worst = 0.0;
    for (Eigen::Index i = 0; i < want.rows(); ++i) {
        worst = std::max(worst, std::abs(got(i, i) - want(i, i)) / std::max(std::abs(want(i, i)), 1e-12));
    }
    return worst;
}

TEST(QfiQubit, Examples) {
    RMatrix f = qfi_qubit(kPi / 2, kPi / 2).entries;
    EXPECT_TRUE(f.isApprox(4.0 * RMatrix::Identity(3, 3), 1e-14));
    f = qfi_qubit(0.0, 1.0).entries;
    EXPECT_DOUBLE_EQ(f(0, 0), 4.0);
    EXPECT_NEAR(f(1, 1), 0.0, 1e-15);
    EXPECT_NEAR(f(2, 2), 0.0, 1e-15);
    f = qfi_qubit(kPi / 4, kPi / 3).entries;
    EXPECT_NEAR(f(0, 0), 4.0, 1e-12);
    EXPECT_NEAR(f(1, 1), 2.0, 1e-12);
    EXPECT_NEAR(f(2, 2), 1.5, 1e-12);
    EXPECT_EQ(qfi_qubit(1.0, 1.0).labels, qubit_labels());
}

TEST(QfiQubit, MatchesNumericAndCfiOnGrid) {
    PureState probe = probe_state(CVector::Unit(2, 0), 2);
    double worst_q = 0.0;
    double worst_c = 0.0;
    for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j) {
            for (int k = 0; k < 6; ++k) {
                double alpha = (i + 0.37) * (kPi / 2) / 6;
                double theta = (j + 0.37) * kPi / 6;
                double phi = (k + 0.37) * 2 * kPi / 6;
                RVector at(3);
                at << alpha, theta, phi;
                RMatrix want = qfi_qubit(alpha, theta).entries;
                RMatrix q = qfi_numeric(qubit_unitary_model(), at, probe, qubit_labels()).entries;
                RMatrix c = cfi_numeric(qubit_probability_model(), at, qubit_labels()).entries;
                double scale = want.cwiseAbs().maxCoeff();
                worst_q = std::max(worst_q, (q - want).cwiseAbs().maxCoeff() / scale);
                worst_c = std::max(worst_c, (c - want).cwiseAbs().maxCoeff() / scale);
            }
        }
    }
    EXPECT_LT(worst_q, 1e-4);
    EXPECT_LT(worst_c, 1e-4);
}

TEST(QfiCloseIdentity, QubitExample) {
    double eps = 0.01;
    CloseIdParams p{2, {eps, eps, eps}, {}, {}};
    FisherMatrix f = qfi_close_identity(p);
    double r0sq = 1.0 - 3 * eps * eps;
    RMatrix want = 4.0 * eps * eps / r0sq * RMatrix::Ones(3, 3) + 4.0 * RMatrix::Identity(3, 3);
    EXPECT_TRUE(f.entries.isApprox(want, 1e-14));
    EXPECT_LT((f.entries - 4.0 * RMatrix::Identity(3, 3)).cwiseAbs().maxCoeff(), 1e-3);
    CloseIdParams zero{2, {0.0, 0.0, 0.0}, {}, {}};
    EXPECT_TRUE(cfi_close_identity(zero).entries.isApprox(4.0 * RMatrix::Identity(3, 3)));
}

TEST(QfiCloseIdentity, BlockStructure) {
    CloseIdParams odd = random_close_identity(3, 0.05, 1);
    FisherMatrix f3 = qfi_close_identity(odd);
    EXPECT_EQ(f3.entries.rows(), 8);
    EXPECT_EQ(f3.labels.front(), "r(0,1)");
    for (size_t a = 0; a < odd.r_paired.size(); ++a) {
        auto ip = static_cast<Eigen::Index>(4 + a);
        EXPECT_DOUBLE_EQ(f3.entries(ip, ip), 8.0 * odd.r_paired[a] * odd.r_paired[a]);
    }
    CloseIdParams even = random_close_identity(4, 0.05, 2);
    FisherMatrix f4 = cfi_close_identity(even);
    Eigen::Index nf = 3;
    Eigen::Index na = 6;
    RMatrix d_block = f4.entries.block(nf + na, nf + na, na, na);
    EXPECT_LT((d_block - RMatrix(d_block.diagonal().asDiagonal())).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT(f4.entries.block(nf + na, 0, na, nf + na).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(QfiCloseIdentity, OutOfRegime) {
    CloseIdParams p{2, {0.6, 0.6, 0.6}, {}, {}};
    EXPECT_THROW(qfi_close_identity(p), Error);
    try {
        cfi_close_identity(p);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::kOutOfRegime);
    }
}

TEST(CfiCloseIdentity, EqualsQfi) {
    for (int d = 2; d <= 5; ++d) {
        for (uint64_t s = 0; s < 100; ++s) {
            CloseIdParams p = random_close_identity(d, 0.1, derive_seed(7, {static_cast<uint64_t>(d), s}));
            RMatrix diff = cfi_close_identity(p).entries - qfi_close_identity(p).entries;
            ASSERT_LT(diff.cwiseAbs().maxCoeff(), 1e-12) << "d=" << d;
        }
    }
}

TEST(CfiCloseIdentity, MatchesNumeric) {
    for (int d = 2; d <= 5; ++d) {
        for (uint64_t s = 0; s < 5; ++s) {
            CloseIdParams p = random_close_identity(d, 0.01, derive_seed(11, {static_cast<uint64_t>(d), s}));
            for (double &r : p.r_paired) {
                r = std::max(r, 1e-3);
            }
            for (double &r : p.r_unpaired) {
                r = std::max(r, 1e-3);
            }
            ProbabilityModel model = [d](const RVector &x) {
                return close_identity_probabilities(CloseIdParams::from_vector(d, x));
            };
            RMatrix num = cfi_numeric(model, p.to_vector(), p.labels()).entries;
            EXPECT_LT(max_relative_diagonal_error(num, cfi_close_identity(p).entries), 5e-3) << "d=" << d;
        }
    }
}

TEST(CfiCloseIdentity, OffDiagonalSmall) {
    for (int d = 2; d <= 5; ++d) {
        CloseIdParams p = random_close_identity(d, 0.02, 100 + static_cast<uint64_t>(d));
        RMatrix f = qfi_close_identity(p).entries;
        double rmax = 0.0;
        for (double r : p.r_unpaired) {
            rmax = std::max(rmax, r);
        }
        for (double r : p.r_paired) {
            rmax = std::max(rmax, r);
        }
        double bound = 10.0 * rmax * rmax / p.r0_squared();
        Eigen::Index amp = static_cast<Eigen::Index>(p.r_unpaired.size() + p.r_paired.size());
        for (Eigen::Index i = 0; i < amp; ++i) {
            for (Eigen::Index j = 0; j < amp; ++j) {
                if (i != j) {
                    EXPECT_LE(std::abs(f(i, j)) / f(i, i), bound);
                }
            }
        }
    }
}

TEST(CfiNumeric, ConstantModelAndErrors) {
    ProbabilityModel constant = [](const RVector &) {
        RVector p(2);
        p << 0.3, 0.7;
        return p;
    };
    RVector at = RVector::Zero(2);
    EXPECT_LT(cfi_numeric(constant, at, {"a", "b"}).entries.cwiseAbs().maxCoeff(), 1e-15);
    ProbabilityModel bad = [](const RVector &x) {
        RVector p(2);
        p << (x(0) == 0.0 ? 0.5 : 0.6), 0.5;
        return p;
    };
    try {
        cfi_numeric(bad, RVector::Zero(1), {"a"});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::kInvalidModel);
    }
    EXPECT_THROW(cfi_numeric(constant, at, {"a"}), Error);
}

TEST(QfiNumeric, SingleParameterVariance) {
    CVector psi(2);
    psi << std::sqrt(0.3), Complex(0.0, std::sqrt(0.7));
    PureState probe = probe_state(psi, 2);
    CMatrix z = CMatrix::Zero(2, 2);
    z(0, 0) = 1.0;
    z(1, 1) = -1.0;
    UnitaryModel model = [](const RVector &t) {
        CMatrix u = CMatrix::Zero(2, 2);
        u(0, 0) = std::polar(1.0, -t(0));
        u(1, 1) = std::polar(1.0, t(0));
        return u;
    };
    // Wire 0 of the probe is maximally entangled with wire 1, so its reduced state is I/2.
    double variance = 1.0;
    RMatrix f = qfi_numeric(model, RVector::Constant(1, 0.3), probe, {"t"}).entries;
    EXPECT_NEAR(f(0, 0), 4.0 * variance, 1e-6);
    UnitaryModel broken = [](const RVector &t) { return CMatrix((1.0 + t(0)) * CMatrix::Identity(2, 2)); };
    try {
        qfi_numeric(broken, RVector::Constant(1, 0.5), probe, {"t"});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::kInvalidModel);
    }
}

TEST(QfiNumeric, GellMannSymmetricPsdAndDominatesCfi) {
    int d = 3;
    PureState probe = probe_state(CVector::Unit(d, 0), d);
    for (uint64_t s = 0; s < 5; ++s) {
        CounterRng rng(derive_seed(21, {s}));
        RVector lambda(d * d - 1);
        for (Eigen::Index j = 0; j < lambda.size(); ++j) {
            lambda(j) = 0.05 * rng.uniform01();
        }
        FisherMatrix q = qfi_numeric(gell_mann_unitary_model(d), lambda, probe, lambda_labels(d));
        EXPECT_LT(q.asymmetry(), 1e-9);
        EXPECT_GT(q.min_eigenvalue(), -1e-8);
        for (MeasurementBasis basis : {MeasurementBasis::kComputational, MeasurementBasis::kGellMann}) {
            FisherMatrix c = cfi_numeric(gell_mann_probability_model(d, basis), lambda, lambda_labels(d));
            EXPECT_LT(c.asymmetry(), 1e-9);
            EXPECT_GT(c.min_eigenvalue(), -1e-8);
            FisherMatrix gap{c.labels, q.entries - c.entries};
            EXPECT_GT(gap.min_eigenvalue(), -1e-6) << basis_name(basis);
        }
    }
}

TEST(CfiNumeric, QubitRandomModelsBelowQfi) {
    PureState probe = probe_state(CVector::Unit(2, 0), 2);
    for (uint64_t s = 0; s < 20; ++s) {
        CounterRng rng(derive_seed(31, {s}));
        RVector at(3);
        at << 0.1 + 1.3 * rng.uniform01(), 0.1 + 2.9 * rng.uniform01(), 6.0 * rng.uniform01();
        FisherMatrix q = qfi_numeric(qubit_unitary_model(), at, probe, qubit_labels());
        FisherMatrix c = cfi_numeric(qubit_probability_model(), at, qubit_labels());
        FisherMatrix gap{c.labels, q.entries - c.entries};
        EXPECT_GT(gap.min_eigenvalue(), -1e-6);
    }
}

TEST(TraceDistance, Examples) {
    FisherMatrix a{qubit_labels(), 4.0 * RMatrix::Identity(3, 3)};
    FisherMatrix b{qubit_labels(), RMatrix::Zero(3, 3)};
    b.entries.diagonal() << 4.0, 2.0, 2.0;
    EXPECT_DOUBLE_EQ(fisher_trace_distance(a, a), 0.0);
    EXPECT_NEAR(fisher_trace_distance(a, b), 2.0, 1e-12);
    EXPECT_NEAR(fisher_trace_distance(a, b, false), 4.0, 1e-12);
    FisherMatrix c{{"x", "y", "z"}, a.entries};
    try {
        fisher_trace_distance(a, c);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::kLabelMismatch);
    }
}

TEST(CloseIdentityModel, ControlIsNormalizedAndMatchesUnitary) {
    CloseIdParams p = random_close_identity(3, 0.05, 5);
    CVector u = close_identity_control(p);
    EXPECT_NEAR(u.squaredNorm(), 1.0, 1e-12);
    RVector probs = close_identity_probabilities(p);
    EXPECT_NEAR(probs.sum(), 1.0, 1e-12);
    EXPECT_NEAR(probs(0), p.r0_squared(), 1e-12);
}

}  // namespace
}  // namespace qudest
