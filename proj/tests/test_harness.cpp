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
#include <random>

#include <gtest/gtest.h>

#include "qepi/error.hpp"
#include "qepi/harness.hpp"

namespace qepi {
namespace {

TrialConfig small(std::size_t trials, std::uint64_t seed = 11) {
    TrialConfig c;
    c.trials = trials;
    c.seed = seed;
    c.optimizer = OptimizerConfig{2, 8, 0.2, 0, 0};
    return c;
}

void expect_same(const std::vector<TrialRecord> &a, const std::vector<TrialRecord> &b) {
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_TRUE(same_outcome(a[i], b[i])) << "record " << i;
    }
}

TEST(Parsing, ExperimentAndModes) {
    EXPECT_EQ(parse_experiment("qepi"), Experiment::Qepi);
    EXPECT_EQ(to_string(Experiment::Conjecture), "conjecture");
    EXPECT_THROW(parse_experiment("nope"), Error);
    EXPECT_TRUE(TauMode::parse("random").random);
    EXPECT_EQ(TauMode::parse("0.25").value, 0.25);
    EXPECT_THROW(TauMode::parse("1.5"), Error);
    EXPECT_EQ(KappaMode::parse("max").kind, KappaMode::Kind::Max);
    EXPECT_EQ(KappaMode::parse("grid").kind, KappaMode::Kind::Grid);
    EXPECT_THROW(KappaMode::parse("-1"), Error);
    EXPECT_THROW(KappaMode::parse("abc"), Error);
}

TEST(TrialConfig, Validation) {
    TrialConfig c = small(1);
    EXPECT_NO_THROW(c.validate());
    c.dim = 7;
    EXPECT_THROW(c.validate(), Error);
    c = small(1);
    c.env_dim1 = 5;
    EXPECT_THROW(c.validate(), Error);
    c = small(1);
    c.kappa = KappaMode{KappaMode::Kind::Fixed, 3.0};
    EXPECT_THROW(c.validate(), Error);
    c.exploratory_kappa = true;
    EXPECT_NO_THROW(c.validate());
    c = small(1);
    c.state_kind = StateSampler{StateKind::MixedRankK, 3};
    EXPECT_THROW(c.validate(), Error);
}

TEST(TrialConfig, KappaGrid) {
    TrialConfig c = small(1);
    c.dim = 3;
    const auto grid = c.kappa_values();
    ASSERT_EQ(grid.size(), 3u);
    EXPECT_EQ(grid[0], 0.0);
    EXPECT_EQ(grid[2], kappa_bounds(3).concavity);
}

TEST(DrawTau, EndpointsFirstThenUniform) {
    const TrialConfig c = small(10);
    RandomSource r0(1, 0), r1(1, 1), r2(1, 2), r3(1, 3);
    EXPECT_EQ(draw_tau(c, 0, r0), 0.0);
    EXPECT_EQ(draw_tau(c, 1, r1), 0.5);
    EXPECT_EQ(draw_tau(c, 2, r2), 1.0);
    const double t = draw_tau(c, 3, r3);
    EXPECT_GE(t, 0.0);
    EXPECT_LT(t, 1.0);
}

class BatchEquivalence : public ::testing::TestWithParam<Experiment> {};

TEST_P(BatchEquivalence, ParallelMatchesSerialForAnyTeamSize) {
    TrialConfig c = small(12);
    c.dim = 3;
    const auto serial = run_batch_serial(GetParam(), c);
    expect_same(serial, run_batch(GetParam(), c, 1));
    expect_same(serial, run_batch(GetParam(), c, 3));
    expect_same(serial, run_batch(GetParam(), c, 0));
}

INSTANTIATE_TEST_SUITE_P(AllExperiments, BatchEquivalence,
                         ::testing::Values(Experiment::Lemma, Experiment::Theorem,
                                           Experiment::Qepi, Experiment::Concavity,
                                           Experiment::Conjecture),
                         [](const auto &info) { return std::string(to_string(info.param)); });

TEST(Trials, DeterministicAcrossCalls) {
    const TrialConfig c = small(1, 99);
    for (Experiment e : {Experiment::Lemma, Experiment::Theorem, Experiment::Qepi}) {
        EXPECT_TRUE(same_outcome(run_trial(e, c, 5), run_trial(e, c, 5)));
    }
    EXPECT_FALSE(same_outcome(run_trial(Experiment::Qepi, c, 5), run_trial(Experiment::Qepi, c, 6)));
}

TEST(Trials, LemmaResidualsAreTiny) {
    TrialConfig c = small(30);
    c.dim = 3;
    c.env_dim2 = 3;
    for (const auto &r : run_batch_serial(Experiment::Lemma, c)) {
        EXPECT_TRUE(r.pass);
        EXPECT_LE(r.residuals.at("identity"), 1e-10);
        EXPECT_LE(r.residuals.at("global_oracle"), 1e-11);
        EXPECT_GE(r.slacks.at("majorization"), -1e-9);
    }
}

TEST(Trials, ZeroOrderSlackVanishes) {
    TrialConfig c = small(20);
    c.min_form = false;
    for (const auto &r : run_batch_serial(Experiment::Theorem, c)) {
        EXPECT_LE(std::abs(r.slacks.at("per_measurement@k0")), 1e-12);
    }
    for (const auto &r : run_batch_serial(Experiment::Qepi, c)) {
        EXPECT_LE(std::abs(r.slacks.at("qepi@k0")), 1e-12);
    }
}

TEST(Trials, TauEndpointsMakeQepiTight) {
    TrialConfig c = small(3);
    const auto records = run_batch_serial(Experiment::Qepi, c);
    // Trials 0 and 2 sit at tau = 0 and tau = 1, where the output is an input.
    for (std::size_t i : {0u, 2u}) {
        for (const auto &[name, v] : records[i].slacks) EXPECT_NEAR(v, 0.0, 1e-9) << name;
    }
}

TEST(Trials, ConcavityFixedKappaStaysNonNegative) {
    TrialConfig c = small(200);
    c.dim = 5;
    c.kappa = KappaMode{KappaMode::Kind::Max, 0.0};
    const Summary s = summarize(run_batch(Experiment::Concavity, c));
    EXPECT_EQ(s.violations, 0u);
    EXPECT_GE(s.min_slack.at("concavity@k0"), -1e-9);
}

TEST(Trials, ExploratoryKappaGoesToDiagnostics) {
    TrialConfig c = small(5);
    c.kappa = KappaMode{KappaMode::Kind::Fixed, 5.0};
    c.exploratory_kappa = true;
    for (const auto &r : run_batch_serial(Experiment::Concavity, c)) {
        EXPECT_TRUE(r.slacks.empty());
        EXPECT_EQ(r.diagnostics.count("concavity@k0"), 1u);
    }
}

TEST(Conjecture, TrivialEnvironmentHasNoCandidates) {
    for (std::size_t d : {2u, 3u}) {
        TrialConfig c = small(200, 5);
        c.dim = d;
        c.env_dim1 = 1;
        const Summary s = search_conjecture(c);
        EXPECT_EQ(s.candidates, 0u) << "d=" << d;
        EXPECT_EQ(s.violations, 0u);
    }
}

TEST(Conjecture, CorrelatedInputsAreReproducible) {
    TrialConfig c = small(40, 8);
    c.env_dim1 = 2;
    const Summary a = search_conjecture(c, 1);
    const Summary b = search_conjecture(c, 2);
    EXPECT_EQ(a, b);
    EXPECT_GE(a.min_diagnostic.at("control"), -1e-9);
}

TEST(Summary, IndependentOfRecordOrder) {
    TrialConfig c = small(25);
    auto records = run_batch_serial(Experiment::Lemma, c);
    const Summary a = summarize(records);
    std::mt19937 shuffle(3);
    std::shuffle(records.begin(), records.end(), shuffle);
    EXPECT_EQ(a, summarize(records));
    EXPECT_EQ(a.trials, 25u);
    std::size_t binned = 0;
    for (std::size_t n : a.histogram.counts) binned += n;
    EXPECT_EQ(binned, 25u * 2u); // two slacks per lemma trial
}

TEST(Summary, EmptyInputThrows) {
    try {
        summarize(std::vector<TrialRecord>{});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::EmptyInput);
    }
}

TEST(Summary, ViolationCountingAndResidualLimits) {
    TrialRecord r;
    r.slacks["x"] = -1e-6;
    r.finalize(1e-9);
    EXPECT_FALSE(r.pass);
    TrialRecord q;
    q.residuals["identity"] = 5e-10; // above its 1e-10 limit
    q.finalize(1e-9);
    EXPECT_FALSE(q.pass);
    TrialRecord ok;
    ok.residuals["probability_sum"] = 5e-10;
    ok.finalize(1e-9);
    EXPECT_TRUE(ok.pass);
    const std::vector<TrialRecord> all{r, q, ok};
    EXPECT_EQ(summarize(all).violations, 2u);
}

} // namespace
} // namespace qepi
