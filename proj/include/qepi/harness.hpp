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

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qepi/entropy.hpp"
#include "qepi/state.hpp"

namespace qepi {

inline constexpr std::size_t kMaxDim = 6;
inline constexpr std::size_t kMaxEnvDim = 4;
inline constexpr std::uint64_t kDefaultSeed = 20180423;

enum class Experiment { Lemma, Theorem, Qepi, Concavity, Conjecture };

std::string_view to_string(Experiment e) noexcept;
Experiment parse_experiment(std::string_view name);

struct TauMode {
    bool random = true;
    double value = 0.5; // used when !random

    /// "random" or a number in [0, 1].
    static TauMode parse(const std::string &text);
    [[nodiscard]] std::string to_string() const;
    bool operator==(const TauMode &) const = default;
};

struct KappaMode {
    enum class Kind { Fixed, Max, Grid };
    Kind kind = Kind::Grid;
    double value = 0.0; // used when kind == Fixed

    /// "max", "grid" or a number >= 0.
    static KappaMode parse(const std::string &text);
    [[nodiscard]] std::string to_string() const;
    bool operator==(const KappaMode &) const = default;
};

struct TrialConfig {
    std::size_t dim = 2;
    std::size_t env_dim1 = 2;
    std::size_t env_dim2 = 2;
    TauMode tau;
    KappaMode kappa;
    StateSampler state_kind;
    std::size_t trials = 100;
    std::uint64_t seed = kDefaultSeed;
    double tolerance = 1e-9;
    bool exploratory_kappa = false;
    /// Evaluate the optimizer-based diagnostic in theorem trials.
    bool min_form = true;
    OptimizerConfig optimizer{4, 24, 0.2, 0, 0};

    /// Throws BadParameter / BadDimension naming the violated limit.
    void validate() const;
    /// kappa values checked by each trial, in record order.
    [[nodiscard]] std::vector<double> kappa_values() const;
    bool operator==(const TrialConfig &) const;
};

/// Upper bound for each named residual; unknown names use `fallback`.
double residual_limit(std::string_view name, double fallback);

struct TrialRecord {
    Experiment experiment = Experiment::Lemma;
    std::size_t index = 0;
    double tau = 0.0;
    std::vector<double> kappa;
    /// Hard checks: pass iff value >= -tolerance.
    std::map<std::string, double> slacks;
    /// Hard checks: pass iff value <= residual_limit(name).
    std::map<std::string, double> residuals;
    /// Reported only.
    std::map<std::string, double> diagnostics;
    std::size_t negligible_outcomes = 0;
    bool candidate = false;
    bool pass = true;
    double wall_seconds = 0.0;

    /// Recomputes `pass` from the hard checks and `candidate` confirmation.
    void finalize(double tolerance, bool confirmed_violation = false);
};

/// Equality of every field except wall time.
bool same_outcome(const TrialRecord &a, const TrialRecord &b);

struct Histogram {
    /// Bin i covers [edges[i-1], edges[i]); bin 0 and the last bin are open.
    std::vector<double> edges;
    std::vector<std::size_t> counts;
    bool operator==(const Histogram &) const = default;
};

struct Summary {
    std::size_t trials = 0;
    std::size_t violations = 0;
    std::size_t candidates = 0;
    std::size_t negligible_outcomes = 0;
    std::map<std::string, double> min_slack;
    std::map<std::string, double> min_diagnostic;
    std::map<std::string, double> max_residuals;
    double max_residual = 0.0;
    Histogram histogram;
    bool operator==(const Summary &) const = default;
};

Histogram empty_histogram();
Summary empty_summary();

/// Order-independent aggregation. Throws EmptyInput on no records.
Summary summarize(std::span<const TrialRecord> records);

TrialRecord run_lemma_trial(const TrialConfig &cfg, std::size_t i);
TrialRecord run_theorem_trial(const TrialConfig &cfg, std::size_t i);
TrialRecord run_qepi_trial(const TrialConfig &cfg, std::size_t i);
TrialRecord run_concavity_trial(const TrialConfig &cfg, std::size_t i);
TrialRecord run_conjecture_trial(const TrialConfig &cfg, std::size_t i);

TrialRecord run_trial(Experiment e, const TrialConfig &cfg, std::size_t i);

/// Trials 0..cfg.trials-1 on an OpenMP team of `threads` workers (0 keeps
/// the runtime default). Records come back in index order.
std::vector<TrialRecord> run_batch(Experiment e, const TrialConfig &cfg, int threads = 0);

/// Single-threaded reference for run_batch.
std::vector<TrialRecord> run_batch_serial(Experiment e, const TrialConfig &cfg);

Summary search_conjecture(const TrialConfig &cfg, int threads = 0);

/// tau used by trial i: endpoints 0, 1/2, 1 for the first three trials in
/// random mode, uniform draws afterwards.
double draw_tau(const TrialConfig &cfg, std::size_t i, RandomSource &rng);

} // namespace qepi
