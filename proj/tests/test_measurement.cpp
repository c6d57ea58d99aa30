// Copyright 2026 The qudit-epi Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qepi/channels.hpp"
#include "qepi/error.hpp"
#include "qepi/measurement.hpp"

namespace qepi {
namespace {

DensityMatrix bell() {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(4);
    v(0) = 1.0;
    v(3) = 1.0;
    return pure_state(v);
}

CMatrix hadamard() {
    CMatrix h(2, 2);
    h << 1.0, 1.0, 1.0, -1.0;
    return h / std::sqrt(2.0);
}

TEST(ProjectiveFromUnitary, ComputationalAndHadamardBases) {
    const MeasurementSet z = projective_from_unitary(CMatrix::Identity(2, 2));
    ASSERT_EQ(z.size(), 2u);
    CMatrix p0 = CMatrix::Zero(2, 2);
    p0(0, 0) = 1.0;
    EXPECT_EQ(matrix_distance(z.kraus()[0], p0), 0.0);

    const MeasurementSet x = projective_from_unitary(hadamard());
    CMatrix plus = CMatrix::Constant(2, 2, 0.5);
    CMatrix minus(2, 2);
    minus << 0.5, -0.5, -0.5, 0.5;
    EXPECT_LE(matrix_distance(x.kraus()[0], plus), 1e-15);
    EXPECT_LE(matrix_distance(x.kraus()[1], minus), 1e-15);
}

TEST(ProjectiveFromUnitary, HaarBasesAreComplete) {
    RandomSource rng(31, 0);
    for (std::size_t d = 2; d <= 4; ++d) {
        EXPECT_LE(projective_from_unitary(random_unitary(d, rng)).completeness_residual(), 1e-12);
    }
    CMatrix bad = CMatrix::Identity(2, 2);
    bad(0, 0) = 2.0;
    EXPECT_THROW(projective_from_unitary(bad), Error);
}

TEST(MeasurementSet, RejectsIncompleteAndEmpty) {
    CMatrix half = CMatrix::Identity(2, 2) * std::sqrt(0.5);
    EXPECT_NO_THROW(MeasurementSet({half, half}));
    EXPECT_THROW(MeasurementSet({half}), Error);
    EXPECT_THROW(MeasurementSet(std::vector<CMatrix>{}), Error);
}

TEST(MeasurementSet, GeneralKrausWithMoreOutcomesThanDimension) {
    // Trine-like POVM on a qubit: three weighted projectors.
    const double pi = std::acos(-1.0);
    std::vector<CMatrix> kraus;
    for (int k = 0; k < 3; ++k) {
        Eigen::Vector2cd v(std::cos(k * pi / 3), std::sin(k * pi / 3));
        kraus.push_back(std::sqrt(2.0 / 3.0) * v * v.adjoint());
    }
    const MeasurementSet m(kraus);
    EXPECT_EQ(m.size(), 3u);
    RandomSource rng(32, 0);
    const MultipartiteState s(random_state(6, {}, rng), {3, 2});
    const auto outcomes = condition_all(s, m);
    double total = 0.0;
    for (const auto &o : outcomes) total += o.probability;
    EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST(Condition, ProductInputLeavesSystemUntouched) {
    RandomSource rng(33, 0);
    const DensityMatrix x = random_state(3, {}, rng);
    const DensityMatrix e = random_state(2, {}, rng);
    const MultipartiteState s(tensor(x, e), {3, 2});
    const MeasurementSet m = projective_from_unitary(random_unitary(2, rng));
    for (std::size_t j = 0; j < m.size(); ++j) {
        const ConditionalOutcome o = condition(s, m, j);
        EXPECT_NEAR(o.probability, (m.effect(j) * e.matrix()).trace().real(), 1e-14);
        ASSERT_FALSE(o.negligible());
        EXPECT_LE(matrix_distance(o.state->matrix(), x.matrix()), 1e-10);
    }
}

TEST(Condition, BellStateCollapses) {
    const MultipartiteState s(bell(), {2, 2});
    const auto outcomes = condition_all(s, projective_from_unitary(CMatrix::Identity(2, 2)));
    ASSERT_EQ(outcomes.size(), 2u);
    for (std::size_t j = 0; j < 2; ++j) {
        EXPECT_NEAR(outcomes[j].probability, 0.5, 1e-15);
        CMatrix expected = CMatrix::Zero(2, 2);
        expected(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j)) = 1.0;
        EXPECT_LE(matrix_distance(outcomes[j].state->matrix(), expected), 1e-15);
    }
}

TEST(Condition, MatchesExplicitKrausSandwich) {
    RandomSource rng(34, 0);
    const MultipartiteState s(random_state(9, {}, rng), {3, 3});
    const MeasurementSet m = projective_from_unitary(random_unitary(3, rng));
    for (std::size_t j = 0; j < 3; ++j) {
        const CMatrix op = oracle::kron(CMatrix::Identity(3, 3), m.kraus()[j]);
        const CMatrix raw = oracle::partial_trace(op * s.matrix() * op.adjoint(), {3, 3}, {0});
        const double p = raw.trace().real();
        const ConditionalOutcome o = condition(s, m, j);
        EXPECT_NEAR(o.probability, p, 1e-15);
        EXPECT_LE(matrix_distance(o.state->matrix(), raw / p), 1e-13);
    }
}

TEST(Condition, ComputationalBasisOnClassicalEnvironment) {
    RandomSource rng(35, 0);
    const DensityMatrix x = random_state(2, {}, rng);
    const DensityMatrix e = make_density(Eigen::Vector3cd(0.2, 0.5, 0.3).asDiagonal().toDenseMatrix());
    const MultipartiteState s(tensor(x, e), {2, 3});
    const auto outcomes = condition_all(s, projective_from_unitary(CMatrix::Identity(3, 3)));
    EXPECT_NEAR(outcomes[0].probability, 0.2, 1e-15);
    EXPECT_NEAR(outcomes[1].probability, 0.5, 1e-15);
    EXPECT_NEAR(outcomes[2].probability, 0.3, 1e-15);
}

TEST(Condition, NegligibleOutcomeCarriesNoState) {
    CMatrix m = CMatrix::Zero(4, 4);
    m(0, 0) = 1.0; // |0>_X |0>_E
    const MultipartiteState s(make_density(m), {2, 2});
    const auto outcomes = condition_all(s, projective_from_unitary(CMatrix::Identity(2, 2)));
    EXPECT_FALSE(outcomes[0].negligible());
    EXPECT_TRUE(outcomes[1].negligible());
    EXPECT_EQ(outcomes[1].probability, 0.0);
    EXPECT_THROW(conditional_spectrum(outcomes[1]), Error);
}

TEST(Condition, ErrorPaths) {
    const MultipartiteState s(maximally_mixed(4), {2, 2});
    const MeasurementSet m3 = MeasurementSet::trivial(3);
    const MeasurementSet m2 = MeasurementSet::trivial(2);
    try {
        condition(s, m3, 0);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
    }
    try {
        condition(s, m2, 1);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::BadIndex);
    }
}

TEST(ConditionBilocal, ProductOfThreeIsInvariant) {
    RandomSource rng(36, 0);
    const DensityMatrix y = random_state(2, {}, rng);
    const DensityMatrix s_all =
        tensor(tensor(y, random_state(2, {}, rng)), random_state(3, {}, rng));
    const MultipartiteState s(s_all, {2, 2, 3});
    const OutcomeGrid grid = condition_bilocal(s, projective_from_unitary(random_unitary(2, rng)),
                                               projective_from_unitary(random_unitary(3, rng)));
    EXPECT_EQ(grid.rows(), 2u);
    EXPECT_EQ(grid.cols(), 3u);
    double total = 0.0;
    for (const auto &o : grid.outcomes()) {
        total += o.probability;
        EXPECT_LE(matrix_distance(o.state->matrix(), y.matrix()), 1e-10);
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST(ConditionBilocal, TrivialMeasurementsGiveMarginal) {
    RandomSource rng(37, 0);
    const MultipartiteState s(random_state(12, {}, rng), {3, 2, 2});
    const OutcomeGrid grid =
        condition_bilocal(s, MeasurementSet::trivial(2), MeasurementSet::trivial(2));
    ASSERT_EQ(grid.outcomes().size(), 1u);
    EXPECT_NEAR(grid.at(0, 0).probability, 1.0, 1e-14);
    EXPECT_LE(matrix_distance(grid.at(0, 0).state->matrix(), partial_trace(s, {0}).matrix()), 1e-14);
}

TEST(ConditionBilocal, ProbabilitiesFactorizeOnProductEnvironments) {
    RandomSource rng(38, 0);
    for (int rep = 0; rep < 50; ++rep) {
        const MultipartiteState s1(random_state(6, {}, rng), {3, 2});
        const MultipartiteState s2(random_state(9, {}, rng), {3, 3});
        const MeasurementSet m1 = projective_from_unitary(random_unitary(2, rng));
        const MeasurementSet m2 = projective_from_unitary(random_unitary(3, rng));
        const MultipartiteState out = partial_swap_global(s1, s2, MixingParameter(rng.uniform()));
        const OutcomeGrid grid = condition_bilocal(out, m1, m2);
        const auto q1 = condition_all(s1, m1);
        const auto q2 = condition_all(s2, m2);
        for (std::size_t j = 0; j < 2; ++j) {
            for (std::size_t k = 0; k < 3; ++k) {
                EXPECT_LE(std::abs(grid.at(j, k).probability - q1[j].probability * q2[k].probability),
                          1e-9);
            }
        }
    }
}

TEST(ConditionalSpectrum, KnownStates) {
    const MultipartiteState s(tensor(maximally_mixed(3), maximally_mixed(2)), {3, 2});
    const auto outcomes = condition_all(s, projective_from_unitary(CMatrix::Identity(2, 2)));
    const Spectrum flat = conditional_spectrum(outcomes[0]);
    for (double v : flat.values()) EXPECT_NEAR(v, 1.0 / 3.0, 1e-14);

    const MultipartiteState b(bell(), {2, 2});
    const auto pure = condition_all(b, projective_from_unitary(CMatrix::Identity(2, 2)));
    const Spectrum pure_spectrum = conditional_spectrum(pure[0]);
    const RVector &ev = pure_spectrum.values();
    EXPECT_NEAR(ev[0], 1.0, 1e-14);
    EXPECT_NEAR(ev[1], 0.0, 1e-14);
}

} // namespace
} // namespace qepi
