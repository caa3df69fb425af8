// Copyright 2026 The holonomy-lab Authors
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

#include "holo/linalg.h"

#include <gtest/gtest.h>

#include "holo/errors.h"
#include "test_support.h"

namespace holo {
namespace {

using testing::Gen;
using testing::kPi;
using testing::max_diff;

ComplexMatrix taylor_exp(const ComplexMatrix &g, double t, int terms) {
    ComplexMatrix sum = ComplexMatrix::Identity(g.rows(), g.cols());
    ComplexMatrix term = sum;
    for (int k = 1; k < terms; ++k) {
        term = term * g * (t / k);
        sum += term;
    }
    return sum;
}

TEST(Expm, ZeroGeneratorIsIdentity) {
    ComplexMatrix z = ComplexMatrix::Zero(4, 4);
    EXPECT_LT(max_diff(expm_generator(z, 3.7), ComplexMatrix::Identity(4, 4)), 1e-15);
}

TEST(Expm, SigmaYQuarterTurnIsNot) {
    ComplexMatrix g = kI * pauli_y();
    ComplexMatrix expected(2, 2);
    expected << 0.0, 1.0, -1.0, 0.0;
    EXPECT_LT(max_diff(expm_generator(g, kPi / 2), expected), 1e-15);
}

TEST(Expm, MatchesTaylorSeries) {
    Gen gen(11);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix4c g = 0.5 * gen.anti_hermitian();
        ComplexMatrix got = expm_generator(g, 0.7);
        EXPECT_LT(max_diff(got, taylor_exp(g, 0.7, 30)), 1e-10) << "trial " << trial;
        EXPECT_TRUE(is_unitary(got));
    }
}

TEST(Expm, InverseAndSemigroup) {
    Gen gen(12);
    for (int trial = 0; trial < 50; ++trial) {
        Matrix4c g = gen.anti_hermitian();
        double t1 = gen.uniform(-3, 3), t2 = gen.uniform(-3, 3);
        ComplexMatrix a = expm_generator(g, t1);
        EXPECT_LT(max_diff(a * expm_generator(g, -t1), ComplexMatrix::Identity(4, 4)), 1e-9);
        EXPECT_LT(max_diff(expm_generator(g, t1 + t2), a * expm_generator(g, t2)), 1e-9);
    }
}

TEST(Expm, RejectsNonAntiHermitian) {
    Matrix4c g = Matrix4c::Identity();
    EXPECT_THROW(expm_generator(g, 1.0), ValidationError);
}

TEST(Eigh, ReconstructsHermitianMatrix) {
    Gen gen(13);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix4c h = gen.hermitian();
        HermitianEigen e = eigh(h);
        ComplexMatrix back = e.vectors * e.values.cast<cplx>().asDiagonal() * e.vectors.adjoint();
        EXPECT_LT(max_diff(back, h), 1e-12);
        for (int i = 1; i < 4; ++i) {
            EXPECT_LE(e.values(i - 1), e.values(i));
        }
    }
}

TEST(Hermitize, LeavesHermitianInputUnchanged) {
    Gen gen(14);
    Matrix4c h = gen.hermitian();
    EXPECT_EQ(max_diff(hermitize(h), h), 0.0);
}

TEST(Hermitize, RemovesAntisymmetricPerturbation) {
    Gen gen(15);
    Matrix4c h = gen.hermitian();
    Matrix4c eps = 1e-10 * gen.anti_hermitian();
    EXPECT_LT(max_diff(hermitize(h + eps), h), 1e-16);
}

TEST(Hermitize, ThrowsPastDriftBound) {
    Gen gen(16);
    Matrix4c m = gen.hermitian() + 1e-3 * gen.anti_hermitian();
    EXPECT_THROW(hermitize(m), IntegrationDiverged);
    EXPECT_NO_THROW(hermitize(m, 1.0));
}

TEST(StateVector, NormalizedHasUnitNorm) {
    Gen gen(17);
    StateVector v(4);
    for (int i = 0; i < 4; ++i) {
        v(i) = gen.complex_normal() * 7.0;
    }
    EXPECT_NEAR(normalized(v).norm(), 1.0, 1e-12);
    EXPECT_THROW(normalized(StateVector::Zero(4)), ValidationError);
}

TEST(DensityMatrix, ValidatesInvariants) {
    ComplexMatrix m = ComplexMatrix::Zero(4, 4);
    m(0, 0) = 0.5;
    EXPECT_THROW(DensityMatrix{m}, ValidationError);  // trace
    m(1, 1) = 0.5;
    m(0, 1) = 0.1;
    EXPECT_THROW(DensityMatrix{m}, ValidationError);  // not Hermitian
    m(1, 0) = 0.1;
    EXPECT_NO_THROW(DensityMatrix{m});
    ComplexMatrix neg = ComplexMatrix::Zero(4, 4);
    neg(0, 0) = 1.5;
    neg(1, 1) = -0.5;
    EXPECT_THROW(DensityMatrix{neg}, ValidationError);
}

TEST(DensityMatrix, PureAndMixedPurity) {
    StateVector v = StateVector::Zero(4);
    v(0) = 1.0;
    v(1) = kI;
    EXPECT_NEAR(DensityMatrix::pure(v).purity(), 1.0, 1e-12);
    EXPECT_NEAR(DensityMatrix::maximally_mixed(4).purity(), 0.25, 1e-12);
}

TEST(StateFidelity, IdenticalOrthogonalAndMixed) {
    StateVector up = StateVector::Zero(4), down = StateVector::Zero(4);
    up(0) = 1.0;
    down(1) = 1.0;
    DensityMatrix a = DensityMatrix::pure(up), b = DensityMatrix::pure(down);
    EXPECT_NEAR(state_fidelity(a, a), 1.0, 1e-15);
    EXPECT_NEAR(state_fidelity(a, b), 0.0, 1e-15);
    ComplexMatrix half = ComplexMatrix::Zero(4, 4);
    half(0, 0) = half(1, 1) = 0.5;
    EXPECT_NEAR(state_fidelity(a, DensityMatrix(half)), 0.5, 1e-15);
}

TEST(StateFidelity, RejectsMixedReference) {
    DensityMatrix mixed = DensityMatrix::maximally_mixed(4);
    EXPECT_THROW(state_fidelity(mixed, mixed), ValidationError);
}

TEST(StateFidelity, SymmetricAndBoundedForPureStates) {
    Gen gen(18);
    for (int trial = 0; trial < 100; ++trial) {
        StateVector x(4), y(4);
        for (int i = 0; i < 4; ++i) {
            x(i) = gen.complex_normal();
            y(i) = gen.complex_normal();
        }
        DensityMatrix a = DensityMatrix::pure(x), b = DensityMatrix::pure(y);
        double f = state_fidelity(a, b);
        EXPECT_NEAR(f, state_fidelity(b, a), 1e-12);
        EXPECT_GE(f, -1e-10);
        EXPECT_LE(f, 1 + 1e-10);
    }
}

TEST(EmbedBlock, PlacesBlockTopLeft) {
    ComplexMatrix m = embed_block(pauli_y());
    EXPECT_EQ(m.rows(), 4);
    EXPECT_EQ(m(0, 1), -kI);
    EXPECT_EQ(m(1, 0), kI);
    EXPECT_EQ(m(2, 2), cplx(0.0));
}

}  // namespace
}  // namespace holo
