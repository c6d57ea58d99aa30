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

#include <algorithm>
#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qepi/entropy.hpp"
#include "qepi/error.hpp"

namespace qepi {
namespace {

const double kLn2 = std::log(2.0);

DensityMatrix worked_example() {
    CMatrix m(2, 2);
    m << 0.75, Complex(0.25, -0.25), Complex(0.25, 0.25), 0.25;
    return make_density(m);
}

DensityMatrix bell() {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(4);
    v(0) = 1.0;
    v(3) = 1.0;
    return pure_state(v);
}

RVector simplex(std::size_t d, RandomSource &rng) {
    RVector p(d);
    double total = 0.0;
    for (double &x : p) {
        x = -std::log(1.0 - rng.uniform());
        total += x;
    }
    for (double &x : p) x /= total;
    return p;
}

TEST(Majorization, TextbookExamples) {
    const std::vector<double> flat{0.5, 0.5};
    const std::vector<double> tilt{0.7, 0.3};
    EXPECT_TRUE(majorizes(tilt, flat));
    EXPECT_FALSE(majorizes(flat, std::vector<double>{0.6, 0.4}));
    EXPECT_TRUE(majorizes(std::vector<double>{1.0, 0.0},
                          std::vector<double>{0.9330127018922193, 0.0669872981077807}));
    EXPECT_TRUE(majorizes(flat, flat));
}

TEST(Majorization, OrderOfEntriesIsIrrelevant) {
    EXPECT_TRUE(majorizes(std::vector<double>{0.3, 0.7}, std::vector<double>{0.4, 0.6}));
}

TEST(Majorization, TotalMismatchThrows) {
    try {
        majorizes(std::vector<double>{0.5, 0.5}, std::vector<double>{0.5, 0.4});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::TotalMismatch);
    }
}

TEST(Majorization, SlackIsMinimumPrefixGap) {
    const MajorizationSlack s =
        majorization_slack(std::vector<double>{0.7, 0.2, 0.1}, std::vector<double>{0.5, 0.3, 0.2});
    EXPECT_NEAR(s.prefix, 0.1, 1e-15);
    EXPECT_NEAR(s.total, 0.0, 1e-15);
}

TEST(Majorization, MixingIsMajorizedByItsParts) {
    RandomSource rng(41, 0);
    for (int rep = 0; rep < 200; ++rep) {
        RVector a = simplex(4, rng);
        RVector b = simplex(4, rng);
        std::sort(a.rbegin(), a.rend());
        std::sort(b.rbegin(), b.rend());
        const double w = rng.uniform();
        const RVector m = mix_sorted(a, b, w);
        // Same-order mixing majorizes any re-pairing of the parts.
        RVector shuffled(4);
        for (std::size_t k = 0; k < 4; ++k) shuffled[k] = w * a[k] + (1 - w) * b[3 - k];
        EXPECT_TRUE(majorizes(m, shuffled));
    }
}

TEST(Shannon, KnownValues) {
    EXPECT_NEAR(shannon_entropy(std::vector<double>{0.5, 0.5}), kLn2, 1e-15);
    EXPECT_NEAR(shannon_entropy(std::vector<double>{1.0 / 3, 1.0 / 3, 1.0 / 3}), std::log(3.0),
                1e-15);
    EXPECT_EQ(shannon_entropy(std::vector<double>{1.0, 0.0}), 0.0);
}

TEST(VonNeumann, WorkedExample) {
    EXPECT_NEAR(von_neumann_entropy(worked_example()), 0.24577536666847088, 1e-13);
    const EntropyPowerOrder one(1.0);
    EXPECT_NEAR(entropy_power(worked_example(), one), 1.2786123223341481, 1e-12);
}

TEST(EntropyPower, MaximallyMixedQubitAtConcavityBound) {
    const double k1 = kappa_bounds(2).concavity;
    EXPECT_NEAR(k1, 2.0813689810056077, 1e-14);
    EXPECT_NEAR(entropy_power(maximally_mixed(2), EntropyPowerOrder(k1)), 4.232086106557082,
                1e-12);
    // exp(kappa ln d) = d^kappa
    EXPECT_NEAR(entropy_power(maximally_mixed(3), EntropyPowerOrder(0.5)), std::sqrt(3.0), 1e-13);
}

TEST(EntropyPower, ZeroOrderIsConstant) {
    RandomSource rng(42, 0);
    EXPECT_EQ(entropy_power(random_state(3, {}, rng), EntropyPowerOrder(0.0)), 1.0);
    EXPECT_THROW(EntropyPowerOrder(-0.1), Error);
}

TEST(KappaBounds, ValuesAndOrdering) {
    for (std::size_t d = 2; d <= 6; ++d) {
        const KappaBounds b = kappa_bounds(d);
        EXPECT_NEAR(b.concavity, 1.0 / std::pow(std::log(double(d)), 2), 1e-15);
        EXPECT_NEAR(b.photon, 1.0 / double(d - 1), 1e-15);
    }
    for (std::size_t d = 2; d < 6; ++d) {
        EXPECT_GT(kappa_bounds(d).concavity, kappa_bounds(d + 1).concavity);
    }
    EXPECT_THROW(kappa_bounds(1), Error);
}

TEST(ConditionalEntropy, StandardStates) {
    EXPECT_NEAR(conditional_vn_entropy(MultipartiteState(bell(), {2, 2})), -kLn2, 1e-13);
    EXPECT_NEAR(conditional_vn_entropy(MultipartiteState(maximally_mixed(4), {2, 2})), kLn2, 1e-13);
    RandomSource rng(43, 0);
    const DensityMatrix a = random_state(3, {}, rng);
    const DensityMatrix b = random_state(2, {}, rng);
    EXPECT_NEAR(conditional_vn_entropy(MultipartiteState(tensor(a, b), {3, 2})),
                von_neumann_entropy(a), 1e-12);
}

TEST(ExpectedEntropyPower, TwoOutcomes) {
    // Outcome 0: |0><0| with weight 1/2; outcome 1: I/2 with weight 1/2.
    CMatrix m = CMatrix::Zero(4, 4);
    m(0, 0) = 0.5;     // |0>_X|0>_E / 2
    m(1, 1) = 0.25;    // I_X/2 (x) |1><1| / 2
    m(3, 3) = 0.25;
    const MultipartiteState s(make_density(m), {2, 2});
    const auto outcomes = condition_all(s, projective_from_unitary(CMatrix::Identity(2, 2)));
    // 1/2 * exp(0) + 1/2 * exp(ln 2) = 3/2
    EXPECT_NEAR(expected_entropy_power(outcomes, EntropyPowerOrder(1.0)), 1.5, 1e-13);
}

TEST(EntropyProperties, SchurConcavityOnRandomPairs) {
    RandomSource rng(44, 0);
    const EntropyPowerOrder k(kappa_bounds(4).concavity);
    for (int rep = 0; rep < 500; ++rep) {
        RVector p = simplex(4, rng);
        RVector q = simplex(4, rng);
        std::sort(p.rbegin(), p.rend());
        std::sort(q.rbegin(), q.rend());
        const RVector mixed = mix_sorted(p, q, 0.5);
        if (majorizes(p, mixed)) {
            EXPECT_GE(shannon_entropy(mixed), shannon_entropy(p) - 1e-12);
            EXPECT_GE(entropy_power(mixed, k), entropy_power(p, k) - 1e-12);
        }
    }
}

TEST(EntropyProperties, MidpointConcavityAndRange) {
    RandomSource rng(45, 0);
    for (std::size_t d = 2; d <= 5; ++d) {
        const EntropyPowerOrder k(kappa_bounds(d).concavity);
        for (int rep = 0; rep < 500; ++rep) {
            const RVector p = simplex(d, rng);
            const RVector q = simplex(d, rng);
            RVector mid(d);
            for (std::size_t i = 0; i < d; ++i) mid[i] = (p[i] + q[i]) / 2;
            EXPECT_GE(entropy_power(mid, k) - (entropy_power(p, k) + entropy_power(q, k)) / 2,
                      -1e-12);
            const double h = shannon_entropy(p);
            EXPECT_GE(h, 0.0);
            EXPECT_LE(h, std::log(double(d)) + 1e-14);
        }
    }
}

TEST(EntropyProperties, QubitConcavityMarginMatchesClosedForm) {
    // The second-derivative sign of exp(k H(p)) on the qubit simplex is
    // governed by max_p p(1-p) ln^2((1-p)/p) <= 1/k.
    double worst = 0.0;
    for (int i = 1; i < 100000; ++i) {
        const double p = i / 200000.0;
        worst = std::max(worst, p * (1 - p) * std::pow(std::log((1 - p) / p), 2));
    }
    EXPECT_NEAR(worst, 0.4392, 1e-4);
    EXPECT_LT(worst, 1.0 / kappa_bounds(2).concavity);
}

OptimizerConfig small_opt(std::uint64_t seed) { return OptimizerConfig{6, 48, 0.3, seed, 0}; }

TEST(Optimizer, ProductStateHasBasisIndependentValue) {
    RandomSource rng(46, 0);
    const DensityMatrix x = random_state(3, {}, rng);
    const MultipartiteState s(tensor(x, random_state(2, {}, rng)), {3, 2});
    const EntropyPowerOrder k(0.7);
    EXPECT_NEAR(minimize_conditional_entropy_power(s, k, small_opt(1)).value, entropy_power(x, k),
                1e-9);
}

TEST(Optimizer, ZeroOrderGivesOne) {
    RandomSource rng(47, 0);
    const MultipartiteState s(random_state(6, {}, rng), {3, 2});
    EXPECT_NEAR(minimize_conditional_entropy_power(s, EntropyPowerOrder(0.0), small_opt(2)).value,
                1.0, 1e-12);
}

TEST(Optimizer, BellStateReachesOne) {
    const MultipartiteState s(bell(), {2, 2});
    const BasisMinimum m =
        minimize_conditional_entropy_power(s, EntropyPowerOrder(kappa_bounds(2).concavity), small_opt(3));
    EXPECT_LE(m.value, 1.0 + 1e-9);
    EXPECT_LE(unitarity_residual(m.basis), 1e-10);
}

TEST(Optimizer, AgreesWithGridScanOnQubitEnvironment) {
    RandomSource rng(48, 0);
    const double kappa = 1.0;
    for (int rep = 0; rep < 4; ++rep) {
        const MultipartiteState s(random_state(4, {}, rng), {2, 2});
        const OptimizerConfig fine{6, 400, 0.05, 10u + static_cast<std::uint64_t>(rep), 0};
        const double found =
            minimize_conditional_entropy_power(s, EntropyPowerOrder(kappa), fine).value;
        const double scanned = oracle::scan_qubit_bases(s.matrix(), 2, kappa, 60, 120);
        // Both are upper bounds on the true minimum; a 3-degree grid is
        // accurate to a few 1e-4 near a smooth optimum.
        EXPECT_NEAR(found, scanned, 1e-3);
    }
}

TEST(Optimizer, DeterministicForFixedSeed) {
    RandomSource rng(49, 0);
    const MultipartiteState s(random_state(12, {}, rng), {2, 2, 3});
    const EntropyPowerOrder k(0.5);
    const auto a = minimize_bilocal_entropy_power(s, k, small_opt(5));
    const auto b = minimize_bilocal_entropy_power(s, k, small_opt(5));
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(matrix_distance(a.basis1, b.basis1), 0.0);
}

TEST(Optimizer, BilocalNeverAboveTrivialProductBasis) {
    RandomSource rng(50, 0);
    const MultipartiteState s(random_state(12, {}, rng), {3, 2, 2});
    const EntropyPowerOrder k(0.6);
    const auto best = minimize_bilocal_entropy_power(s, k, small_opt(6));
    const auto fixed = condition_bilocal(s, projective_from_unitary(CMatrix::Identity(2, 2)),
                                         projective_from_unitary(CMatrix::Identity(2, 2)));
    EXPECT_LE(best.value, expected_entropy_power(fixed.outcomes(), k) + 1e-12);
}

TEST(Optimizer, RejectsBadConfig) {
    const MultipartiteState s(maximally_mixed(4), {2, 2});
    EXPECT_THROW(minimize_conditional_entropy_power(s, EntropyPowerOrder(1.0),
                                                    OptimizerConfig{0, 8, 0.2, 0, 0}),
                 Error);
}

} // namespace
} // namespace qepi
