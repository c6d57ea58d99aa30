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

#include "qepi/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <limits>
#include <sstream>

#include "qepi/channels.hpp"
#include "qepi/error.hpp"
#include "qepi/measurement.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qepi {

namespace {

// Identity residuals must be exact up to float accumulation.
constexpr double kIdentityLimit = 1e-10;
constexpr double kGlobalOracleLimit = 1e-11;
constexpr double kClosedOracleLimit = 1e-12;
constexpr double kProbabilityLimit = 1e-9;
constexpr double kTotalLimit = 1e-9;
constexpr double kPerturbation = 1e-8;
constexpr double kCandidateFactor = 10.0;
// Residual recorded when a conditional on one side is missing although the
// joint outcome is not negligible; always fails the check.
constexpr double kMissingOutcome = 1.0;

std::string kappa_key(std::string_view name, std::size_t k) {
    return std::string(name) + "@k" + std::to_string(k);
}

void keep_max(std::map<std::string, double> &m, const std::string &key, double v) {
    auto [it, inserted] = m.emplace(key, v);
    if (!inserted) it->second = std::max(it->second, v);
}

void keep_min(std::map<std::string, double> &m, const std::string &key, double v) {
    auto [it, inserted] = m.emplace(key, v);
    if (!inserted) it->second = std::min(it->second, v);
}

double probability_deviation(std::span<const ConditionalOutcome> outcomes) {
    double total = 0.0;
    for (const auto &o : outcomes) total += o.probability;
    return std::abs(total - 1.0);
}

std::size_t count_negligible(std::span<const ConditionalOutcome> outcomes) {
    return static_cast<std::size_t>(
        std::count_if(outcomes.begin(), outcomes.end(), [](const auto &o) { return o.negligible(); }));
}

MultipartiteState sample_joint(std::size_t dx, std::size_t de, const StateSampler &sampler,
                               RandomSource &rng) {
    return {random_state(dx * de, sampler, rng), {dx, de}};
}

RVector sample_simplex(std::size_t d, RandomSource &rng) {
    RVector p(d);
    double total = 0.0;
    for (double &x : p) {
        x = -std::log1p(-rng.uniform());
        total += x;
    }
    for (double &x : p) x /= total;
    return p;
}

bool within_window(double kappa, std::size_t d) {
    return kappa <= kappa_bounds(d).concavity * (1.0 + 1e-12);
}

class Stopwatch {
  public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    [[nodiscard]] double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

double parse_number(const std::string &text, const char *what) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &pos);
    } catch (const std::exception &) {
        pos = 0;
    }
    if (pos == 0 || pos != text.size() || !std::isfinite(v)) {
        throw Error(ErrorKind::ParseFailure, std::string("cannot read ") + what + " from '" + text + "'");
    }
    return v;
}

std::string format_number(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

} // namespace

std::string_view to_string(Experiment e) noexcept {
    switch (e) {
    case Experiment::Lemma: return "lemma";
    case Experiment::Theorem: return "theorem";
    case Experiment::Qepi: return "qepi";
    case Experiment::Concavity: return "concavity";
    case Experiment::Conjecture: return "conjecture";
    }
    return "unknown";
}

Experiment parse_experiment(std::string_view name) {
    for (Experiment e : {Experiment::Lemma, Experiment::Theorem, Experiment::Qepi,
                         Experiment::Concavity, Experiment::Conjecture}) {
        if (to_string(e) == name) return e;
    }
    throw Error(ErrorKind::ParseFailure, "unknown experiment '" + std::string(name) + "'");
}

TauMode TauMode::parse(const std::string &text) {
    if (text == "random") return {true, 0.5};
    const double v = parse_number(text, "tau");
    if (!(v >= 0.0 && v <= 1.0)) {
        throw Error(ErrorKind::BadParameter, "tau " + text + " outside [0, 1]");
    }
    return {false, v};
}

std::string TauMode::to_string() const { return random ? "random" : format_number(value); }

KappaMode KappaMode::parse(const std::string &text) {
    if (text == "max") return {Kind::Max, 0.0};
    if (text == "grid") return {Kind::Grid, 0.0};
    const double v = parse_number(text, "kappa");
    if (!(v >= 0.0)) {
        throw Error(ErrorKind::BadParameter, "kappa " + text + " is negative");
    }
    return {Kind::Fixed, v};
}

std::string KappaMode::to_string() const {
    switch (kind) {
    case Kind::Max: return "max";
    case Kind::Grid: return "grid";
    case Kind::Fixed: return format_number(value);
    }
    return "grid";
}

void TrialConfig::validate() const {
    if (dim < 2 || dim > kMaxDim) {
        throw Error(ErrorKind::BadDimension, "--dim " + std::to_string(dim) +
                                                 " outside [2, " + std::to_string(kMaxDim) +
                                                 "] (dimension cap is " +
                                                 std::to_string(kMaxDim) + ")");
    }
    for (std::size_t e : {env_dim1, env_dim2}) {
        if (e < 1 || e > kMaxEnvDim) {
            throw Error(ErrorKind::BadDimension,
                        "environment dimension " + std::to_string(e) + " outside [1, " +
                            std::to_string(kMaxEnvDim) + "]");
        }
    }
    if (dim * env_dim1 * dim * env_dim2 > kMaxTotalDim) {
        throw Error(ErrorKind::BadDimension, "total dimension exceeds " + std::to_string(kMaxTotalDim));
    }
    if (trials < 1) {
        throw Error(ErrorKind::BadParameter, "--trials must be at least 1");
    }
    if (!(tolerance > 0.0)) {
        throw Error(ErrorKind::BadParameter, "--tol must be positive");
    }
    if (state_kind.kind == StateKind::MixedRankK &&
        (state_kind.rank < 1 || state_kind.rank > dim)) {
        throw Error(ErrorKind::BadRank, "rank-k needs 1 <= K <= " + std::to_string(dim));
    }
    if (kappa.kind == KappaMode::Kind::Fixed && !exploratory_kappa &&
        !within_window(kappa.value, dim)) {
        throw Error(ErrorKind::BadParameter,
                    "kappa " + format_number(kappa.value) + " exceeds 1/(ln d)^2 = " +
                        format_number(kappa_bounds(dim).concavity) +
                        "; pass --exploratory-kappa to scan it");
    }
    optimizer.validate();
}

std::vector<double> TrialConfig::kappa_values() const {
    const double k1 = kappa_bounds(dim).concavity;
    switch (kappa.kind) {
    case KappaMode::Kind::Fixed: return {kappa.value};
    case KappaMode::Kind::Max: return {k1};
    case KappaMode::Kind::Grid: return {0.0, k1 / 2.0, k1};
    }
    return {k1};
}

bool TrialConfig::operator==(const TrialConfig &o) const {
    return dim == o.dim && env_dim1 == o.env_dim1 && env_dim2 == o.env_dim2 && tau == o.tau &&
           kappa == o.kappa && state_kind == o.state_kind && trials == o.trials &&
           seed == o.seed && tolerance == o.tolerance &&
           exploratory_kappa == o.exploratory_kappa && min_form == o.min_form &&
           optimizer.restarts == o.optimizer.restarts &&
           optimizer.refine_steps == o.optimizer.refine_steps &&
           optimizer.step_scale == o.optimizer.step_scale;
}

double residual_limit(std::string_view name, double fallback) {
    if (name == "identity") return kIdentityLimit;
    if (name == "global_oracle") return kGlobalOracleLimit;
    if (name == "closed_oracle") return kClosedOracleLimit;
    if (name == "probability_sum" || name == "factorization") return kProbabilityLimit;
    if (name == "majorization_total") return kTotalLimit;
    return fallback;
}

void TrialRecord::finalize(double tolerance, bool confirmed_violation) {
    pass = !confirmed_violation;
    for (const auto &[name, v] : slacks) {
        if (!(v >= -tolerance)) pass = false;
    }
    for (const auto &[name, v] : residuals) {
        if (!(v <= residual_limit(name, tolerance))) pass = false;
    }
}

bool same_outcome(const TrialRecord &a, const TrialRecord &b) {
    return a.experiment == b.experiment && a.index == b.index && a.tau == b.tau && a.kappa == b.kappa && a.slacks == b.slacks &&
           a.residuals == b.residuals && a.diagnostics == b.diagnostics &&
           a.negligible_outcomes == b.negligible_outcomes && a.candidate == b.candidate &&
           a.pass == b.pass;
}

Histogram empty_histogram() {
    Histogram h;
    h.edges = {-1e-3, -1e-6, -1e-9, 0.0, 1e-9, 1e-6, 1e-3, 1e-1, 1.0};
    h.counts.assign(h.edges.size() + 1, 0);
    return h;
}

Summary empty_summary() {
    Summary s;
    s.histogram = empty_histogram();
    return s;
}

Summary summarize(std::span<const TrialRecord> records) {
    if (records.empty()) {
        throw Error(ErrorKind::EmptyInput, "no trial records to summarize");
    }
    Summary s = empty_summary();
    s.trials = records.size();
    for (const TrialRecord &r : records) {
        if (!r.pass) ++s.violations;
        if (r.candidate) ++s.candidates;
        s.negligible_outcomes += r.negligible_outcomes;
        for (const auto &[name, v] : r.slacks) {
            keep_min(s.min_slack, name, v);
            const auto bin = std::upper_bound(s.histogram.edges.begin(), s.histogram.edges.end(), v) -
                             s.histogram.edges.begin();
            ++s.histogram.counts[static_cast<std::size_t>(bin)];
        }
        for (const auto &[name, v] : r.diagnostics) keep_min(s.min_diagnostic, name, v);
        for (const auto &[name, v] : r.residuals) {
            keep_max(s.max_residuals, name, v);
            s.max_residual = std::max(s.max_residual, v);
        }
    }
    return s;
}

double draw_tau(const TrialConfig &cfg, std::size_t i, RandomSource &rng) {
    // Always consume one draw so the rest of the trial's stream does not
    // depend on the tau mode.
    const double u = rng.uniform();
    if (!cfg.tau.random) return cfg.tau.value;
    if (i == 0) return 0.0;
    if (i == 1) return 0.5;
    if (i == 2) return 1.0;
    return u;
}

TrialRecord run_lemma_trial(const TrialConfig &cfg, std::size_t i) {
    const Stopwatch clock;
    RandomSource rng(cfg.seed, i);
    TrialRecord rec;
    rec.experiment = Experiment::Lemma;
    rec.index = i;
    rec.tau = draw_tau(cfg, i, rng);
    const MixingParameter tau(rec.tau);

    const MultipartiteState s1 = sample_joint(cfg.dim, cfg.env_dim1, cfg.state_kind, rng);
    const MultipartiteState s2 = sample_joint(cfg.dim, cfg.env_dim2, cfg.state_kind, rng);
    const MeasurementSet m1 = projective_from_unitary(random_unitary(cfg.env_dim1, rng));
    const MeasurementSet m2 = projective_from_unitary(random_unitary(cfg.env_dim2, rng));

    const MultipartiteState out = partial_swap_global(s1, s2, tau);
    rec.residuals["global_oracle"] =
        matrix_distance(out.matrix(), partial_swap_global_closed(s1, s2, tau).matrix());

    const OutcomeGrid grid = condition_bilocal(out, m1, m2);
    const auto o1 = condition_all(s1, m1);
    const auto o2 = condition_all(s2, m2);

    double identity = 0.0;
    double factorization = 0.0;
    double prefix = std::numeric_limits<double>::infinity();
    double total = 0.0;
    for (std::size_t j = 0; j < grid.rows(); ++j) {
        for (std::size_t k = 0; k < grid.cols(); ++k) {
            const ConditionalOutcome &y = grid.at(j, k);
            factorization = std::max(
                factorization, std::abs(y.probability - o1[j].probability * o2[k].probability));
            if (y.negligible()) continue;
            if (o1[j].negligible() || o2[k].negligible()) {
                identity = std::max(identity, kMissingOutcome);
                continue;
            }
            const DensityMatrix mixed = partial_swap_closed(*o1[j].state, *o2[k].state, tau);
            identity = std::max(identity, matrix_distance(y.state->matrix(), mixed.matrix()));

            const RVector bound = mix_sorted(conditional_spectrum(o1[j]).values(),
                                             conditional_spectrum(o2[k]).values(), rec.tau);
            const MajorizationSlack slack =
                majorization_slack(bound, conditional_spectrum(y).values());
            prefix = std::min(prefix, slack.prefix);
            total = std::max(total, slack.total);
        }
    }

    const DensityMatrix x1 = partial_trace(s1, {0}).state();
    const DensityMatrix x2 = partial_trace(s2, {0}).state();
    const MajorizationSlack plain = majorization_slack(
        mix_sorted(eigenvalues_descending(x1).values(), eigenvalues_descending(x2).values(), rec.tau),
        eigenvalues_descending(partial_swap_closed(x1, x2, tau)).values());

    rec.residuals["identity"] = identity;
    rec.residuals["factorization"] = factorization;
    rec.residuals["probability_sum"] =
        std::max({probability_deviation(grid.outcomes()), probability_deviation(o1),
                  probability_deviation(o2)});
    rec.residuals["majorization_total"] = std::max(total, plain.total);
    if (std::isfinite(prefix)) rec.slacks["conditional_majorization"] = prefix;
    rec.slacks["majorization"] = plain.prefix;
    rec.negligible_outcomes = count_negligible(grid.outcomes());
    rec.finalize(cfg.tolerance);
    rec.wall_seconds = clock.seconds();
    return rec;
}

TrialRecord run_theorem_trial(const TrialConfig &cfg, std::size_t i) {
    const Stopwatch clock;
    RandomSource rng(cfg.seed, i);
    TrialRecord rec;
    rec.experiment = Experiment::Theorem;
    rec.index = i;
    rec.tau = draw_tau(cfg, i, rng);
    rec.kappa = cfg.kappa_values();
    const MixingParameter tau(rec.tau);

    const MultipartiteState s1 = sample_joint(cfg.dim, cfg.env_dim1, cfg.state_kind, rng);
    const MultipartiteState s2 = sample_joint(cfg.dim, cfg.env_dim2, cfg.state_kind, rng);
    const MeasurementSet m1 = projective_from_unitary(random_unitary(cfg.env_dim1, rng));
    const MeasurementSet m2 = projective_from_unitary(random_unitary(cfg.env_dim2, rng));

    const MultipartiteState out = partial_swap_global(s1, s2, tau);
    const OutcomeGrid grid = condition_bilocal(out, m1, m2);
    const auto o1 = condition_all(s1, m1);
    const auto o2 = condition_all(s2, m2);

    double factorization = 0.0;
    for (std::size_t j = 0; j < grid.rows(); ++j) {
        for (std::size_t k = 0; k < grid.cols(); ++k) {
            factorization = std::max(factorization, std::abs(grid.at(j, k).probability -
                                                             o1[j].probability * o2[k].probability));
        }
    }
    rec.residuals["factorization"] = factorization;
    rec.residuals["probability_sum"] =
        std::max({probability_deviation(grid.outcomes()), probability_deviation(o1),
                  probability_deviation(o2)});

    for (std::size_t n = 0; n < rec.kappa.size(); ++n) {
        const EntropyPowerOrder kappa(rec.kappa[n]);
        double lhs = 0.0;
        for (std::size_t j = 0; j < grid.rows(); ++j) {
            for (std::size_t k = 0; k < grid.cols(); ++k) {
                const ConditionalOutcome &y = grid.at(j, k);
                if (y.negligible()) continue;
                lhs += o1[j].probability * o2[k].probability * entropy_power(*y.state, kappa);
            }
        }
        const double rhs = rec.tau * expected_entropy_power(o1, kappa) +
                           (1.0 - rec.tau) * expected_entropy_power(o2, kappa);
        const bool hard = within_window(rec.kappa[n], cfg.dim);
        (hard ? rec.slacks : rec.diagnostics)[kappa_key("per_measurement", n)] = lhs - rhs;

        if (cfg.min_form) {
            OptimizerConfig opt = cfg.optimizer;
            opt.seed = splitmix64(cfg.seed ^ 0x6d696e666f726dULL);
            opt.stream = 3 * i;
            const double v1 = minimize_conditional_entropy_power(s1, kappa, opt).value;
            opt.stream = 3 * i + 1;
            const double v2 = minimize_conditional_entropy_power(s2, kappa, opt).value;
            opt.stream = 3 * i + 2;
            const double vy = minimize_bilocal_entropy_power(out, kappa, opt).value;
            rec.diagnostics[kappa_key("min_form", n)] =
                vy - rec.tau * v1 - (1.0 - rec.tau) * v2;
        }
    }
    rec.negligible_outcomes = count_negligible(grid.outcomes());
    rec.finalize(cfg.tolerance);
    rec.wall_seconds = clock.seconds();
    return rec;
}

TrialRecord run_qepi_trial(const TrialConfig &cfg, std::size_t i) {
    const Stopwatch clock;
    RandomSource rng(cfg.seed, i);
    TrialRecord rec;
    rec.experiment = Experiment::Qepi;
    rec.index = i;
    rec.tau = draw_tau(cfg, i, rng);
    rec.kappa = cfg.kappa_values();
    const MixingParameter tau(rec.tau);

    const DensityMatrix r1 = random_state(cfg.dim, cfg.state_kind, rng);
    const DensityMatrix r2 = random_state(cfg.dim, cfg.state_kind, rng);
    const DensityMatrix out = partial_swap_closed(r1, r2, tau);
    rec.residuals["closed_oracle"] =
        matrix_distance(out.matrix(), partial_swap_conjugation(r1, r2, tau).matrix());

    const Spectrum l1 = eigenvalues_descending(r1);
    const Spectrum l2 = eigenvalues_descending(r2);
    const Spectrum ly = eigenvalues_descending(out);
    const MajorizationSlack slack =
        majorization_slack(mix_sorted(l1.values(), l2.values(), rec.tau), ly.values());
    rec.slacks["majorization"] = slack.prefix;
    rec.residuals["majorization_total"] = slack.total;

    for (std::size_t n = 0; n < rec.kappa.size(); ++n) {
        const EntropyPowerOrder kappa(rec.kappa[n]);
        const double v = entropy_power(ly, kappa) - rec.tau * entropy_power(l1, kappa) -
                         (1.0 - rec.tau) * entropy_power(l2, kappa);
        const bool hard = within_window(rec.kappa[n], cfg.dim);
        (hard ? rec.slacks : rec.diagnostics)[kappa_key("qepi", n)] = v;
    }
    rec.finalize(cfg.tolerance);
    rec.wall_seconds = clock.seconds();
    return rec;
}

TrialRecord run_concavity_trial(const TrialConfig &cfg, std::size_t i) {
    const Stopwatch clock;
    RandomSource rng(cfg.seed, i);
    TrialRecord rec;
    rec.experiment = Experiment::Concavity;
    rec.index = i;
    rec.kappa = cfg.kappa_values();

    const RVector p = sample_simplex(cfg.dim, rng);
    const RVector q = sample_simplex(cfg.dim, rng);
    RVector mid(cfg.dim);
    for (std::size_t k = 0; k < cfg.dim; ++k) mid[k] = (p[k] + q[k]) / 2.0;

    for (std::size_t n = 0; n < rec.kappa.size(); ++n) {
        const EntropyPowerOrder kappa(rec.kappa[n]);
        const double v =
            entropy_power(mid, kappa) - (entropy_power(p, kappa) + entropy_power(q, kappa)) / 2.0;
        const bool hard = within_window(rec.kappa[n], cfg.dim);
        (hard ? rec.slacks : rec.diagnostics)[kappa_key("concavity", n)] = v;
    }
    rec.finalize(cfg.tolerance);
    rec.wall_seconds = clock.seconds();
    return rec;
}

namespace {

// Slack of S(Y|E) >= tau S(X1|E) + (1 - tau) S(X2|E) for a state on
// (X1, X2, E).
double conjecture_slack(const CMatrix &rho, std::size_t d, std::size_t de, MixingParameter tau) {
    const MultipartiteState s(DensityMatrix::unchecked(rho), {d, d, de});
    const CMatrix evolved = conjugate_leading(rho, partial_swap_unitary(d, tau), de);
    const std::size_t dims[] = {d, d, de};
    const std::size_t keep_ye[] = {0, 2};
    const MultipartiteState ye(DensityMatrix::unchecked(partial_trace_matrix(evolved, dims, keep_ye)),
                               {d, de});
    const double h_y = conditional_vn_entropy(ye);
    const double h_1 = conditional_vn_entropy(partial_trace(s, {0, 2}));
    const double h_2 = conditional_vn_entropy(partial_trace(s, {1, 2}));
    return h_y - tau.value() * h_1 - (1.0 - tau.value()) * h_2;
}

// I(X1:X2|E) = S(X1E) + S(X2E) - S(E) - S(X1X2E).
double conditional_mutual_information(const MultipartiteState &s) {
    const double s_all = von_neumann_entropy(s.state());
    const double s_1e = von_neumann_entropy(partial_trace(s, {0, 2}).state());
    const double s_2e = von_neumann_entropy(partial_trace(s, {1, 2}).state());
    const double s_e = s.dims()[2] == 1 ? 0.0 : von_neumann_entropy(partial_trace(s, {2}).state());
    return s_1e + s_2e - s_e - s_all;
}

} // namespace

TrialRecord run_conjecture_trial(const TrialConfig &cfg, std::size_t i) {
    const Stopwatch clock;
    RandomSource rng(cfg.seed, i);
    TrialRecord rec;
    rec.experiment = Experiment::Conjecture;
    rec.index = i;
    rec.tau = draw_tau(cfg, i, rng);
    const MixingParameter tau(rec.tau);
    const std::size_t d = cfg.dim;
    const std::size_t de = cfg.env_dim1;

    // With a trivial conditioning system, conditional independence of X1
    // and X2 means a product input.
    const DensityMatrix joint =
        de == 1 ? tensor(random_state(d, cfg.state_kind, rng), random_state(d, cfg.state_kind, rng))
                : random_state(d * d * de, cfg.state_kind, rng);
    const MultipartiteState s(joint, {d, d, de});

    const double slack = conjecture_slack(joint.matrix(), d, de, tau);
    rec.diagnostics["conjecture"] = slack;
    rec.diagnostics["conditional_mutual_information"] = conditional_mutual_information(s);

    bool confirmed = false;
    if (slack < -kCandidateFactor * cfg.tolerance) {
        rec.candidate = true;
        const DensityMatrix resym = make_density(joint.matrix(), 1e-9);
        const double again = conjecture_slack(resym.matrix(), d, de, tau);
        RandomSource noise = rng.substream(0x70657274);
        const DensityMatrix sigma = random_state(d * d * de, StateSampler{}, noise);
        const CMatrix perturbed = (1.0 - kPerturbation) * joint.matrix() + kPerturbation * sigma.matrix();
        const double shaken = conjecture_slack(perturbed, d, de, tau);
        rec.diagnostics["reverify_symmetrized"] = again;
        rec.diagnostics["reverify_perturbed"] = shaken;
        confirmed = again < -kCandidateFactor * cfg.tolerance && shaken < 0.0;
    }

    // Control arm: rho_{X1E1} (x) rho_{X2E2}, conditioning on E1E2.
    const MultipartiteState c1 = sample_joint(d, cfg.env_dim1, cfg.state_kind, rng);
    const MultipartiteState c2 = sample_joint(d, cfg.env_dim2, cfg.state_kind, rng);
    const MultipartiteState y = partial_swap_global(c1, c2, tau);
    const MultipartiteState y_e(y.state(), {d, cfg.env_dim1 * cfg.env_dim2});
    rec.diagnostics["control"] = conditional_vn_entropy(y_e) -
                                 rec.tau * conditional_vn_entropy(c1) -
                                 (1.0 - rec.tau) * conditional_vn_entropy(c2);

    rec.finalize(cfg.tolerance, confirmed);
    rec.wall_seconds = clock.seconds();
    return rec;
}

TrialRecord run_trial(Experiment e, const TrialConfig &cfg, std::size_t i) {
    TrialRecord rec;
    switch (e) {
    case Experiment::Lemma: rec = run_lemma_trial(cfg, i); break;
    case Experiment::Theorem: rec = run_theorem_trial(cfg, i); break;
    case Experiment::Qepi: rec = run_qepi_trial(cfg, i); break;
    case Experiment::Concavity: rec = run_concavity_trial(cfg, i); break;
    case Experiment::Conjecture: rec = run_conjecture_trial(cfg, i); break;
    }
    rec.experiment = e;
    return rec;
}

std::vector<TrialRecord> run_batch(Experiment e, const TrialConfig &cfg, int threads) {
    cfg.validate();
    std::vector<TrialRecord> records(cfg.trials);
    std::vector<std::exception_ptr> errors(cfg.trials);
    const auto n = static_cast<long>(cfg.trials);
#ifdef _OPENMP
    const int team = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(team)
#else
    (void)threads;
#endif
    for (long t = 0; t < n; ++t) {
        const auto i = static_cast<std::size_t>(t);
        try {
            records[i] = run_trial(e, cfg, i);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }
    for (const auto &err : errors) {
        if (err) std::rethrow_exception(err);
    }
    return records;
}

std::vector<TrialRecord> run_batch_serial(Experiment e, const TrialConfig &cfg) {
    cfg.validate();
    std::vector<TrialRecord> records;
    records.reserve(cfg.trials);
    for (std::size_t i = 0; i < cfg.trials; ++i) {
        records.push_back(run_trial(e, cfg, i));
    }
    return records;
}

Summary search_conjecture(const TrialConfig &cfg, int threads) {
    const auto records = run_batch(Experiment::Conjecture, cfg, threads);
    return summarize(records);
}

} // namespace qepi
