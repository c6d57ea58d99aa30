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

#include "qepi/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "qepi/error.hpp"

namespace qepi {

namespace {

RVector sorted_padded(std::span<const double> v, std::size_t len) {
    RVector out(v.begin(), v.end());
    out.resize(std::max(len, out.size()), 0.0);
    std::sort(out.begin(), out.end(), std::greater<>{});
    return out;
}

double sum_of(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s;
}

} // namespace

EntropyPowerOrder::EntropyPowerOrder(double kappa) : kappa_(kappa) {
    if (!(kappa >= 0.0) || !std::isfinite(kappa)) {
        throw Error(ErrorKind::BadParameter, "kappa must be finite and >= 0");
    }
}

KappaBounds kappa_bounds(std::size_t d) {
    if (d < 2) {
        throw Error(ErrorKind::BadDimension, "kappa bounds need d >= 2");
    }
    const double ln_d = std::log(static_cast<double>(d));
    return {1.0 / (ln_d * ln_d), 1.0 / static_cast<double>(d - 1)};
}

MajorizationSlack majorization_slack(std::span<const double> n, std::span<const double> m) {
    const std::size_t len = std::max(n.size(), m.size());
    const RVector ns = sorted_padded(n, len);
    const RVector ms = sorted_padded(m, len);
    double pn = 0.0;
    double pm = 0.0;
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k + 1 < len; ++k) {
        pn += ns[k];
        pm += ms[k];
        worst = std::min(worst, pn - pm);
    }
    if (len < 2) {
        worst = 0.0;
    }
    return {worst, std::abs(sum_of(ns) - sum_of(ms))};
}

bool majorizes(std::span<const double> n, std::span<const double> m, double tol) {
    const MajorizationSlack slack = majorization_slack(n, m);
    if (slack.total > tol) {
        throw Error(ErrorKind::TotalMismatch,
                    "totals differ by " + std::to_string(slack.total));
    }
    return slack.prefix >= -tol;
}

RVector mix_sorted(std::span<const double> a, std::span<const double> b, double weight) {
    const std::size_t len = std::max(a.size(), b.size());
    const RVector as = sorted_padded(a, len);
    const RVector bs = sorted_padded(b, len);
    RVector out(len);
    for (std::size_t i = 0; i < len; ++i) {
        out[i] = weight * as[i] + (1.0 - weight) * bs[i];
    }
    return out;
}

double shannon_entropy(std::span<const double> p) {
    if (p.empty()) {
        throw Error(ErrorKind::NotDistribution, "empty distribution");
    }
    for (double x : p) {
        if (!(x >= -kSpectrumClip)) {
            throw Error(ErrorKind::NotDistribution, "entry " + std::to_string(x) + " is negative");
        }
    }
    if (std::abs(sum_of(p) - 1.0) > kSpectrumSumTol) {
        throw Error(ErrorKind::NotDistribution, "entries sum to " + std::to_string(sum_of(p)));
    }
    // Summing in sorted order makes the value exactly permutation invariant.
    const RVector sorted = sorted_padded(p, p.size());
    double h = 0.0;
    for (double x : sorted) {
        if (x > 0.0) {
            h -= x * std::log(x);
        }
    }
    return h;
}

double von_neumann_entropy(const DensityMatrix &rho) {
    return shannon_entropy(eigenvalues_descending(rho).values());
}

double entropy_power(std::span<const double> p, EntropyPowerOrder kappa) {
    if (kappa.kappa() == 0.0) {
        shannon_entropy(p);
        return 1.0;
    }
    return std::exp(kappa.kappa() * shannon_entropy(p));
}

double entropy_power(const Spectrum &spectrum, EntropyPowerOrder kappa) {
    return entropy_power(spectrum.values(), kappa);
}

double entropy_power(const DensityMatrix &rho, EntropyPowerOrder kappa) {
    return entropy_power(eigenvalues_descending(rho), kappa);
}

double conditional_vn_entropy(const MultipartiteState &s) {
    if (s.num_subsystems() != 2) {
        throw Error(ErrorKind::DimensionMismatch, "conditional entropy needs an (A, B) state");
    }
    return von_neumann_entropy(s.state()) - von_neumann_entropy(partial_trace(s, {1}).state());
}

double expected_entropy_power(std::span<const ConditionalOutcome> outcomes,
                              EntropyPowerOrder kappa) {
    double total = 0.0;
    for (const ConditionalOutcome &o : outcomes) {
        if (!o.negligible()) {
            total += o.probability * entropy_power(*o.state, kappa);
        }
    }
    return total;
}

void OptimizerConfig::validate() const {
    if (restarts < 1) {
        throw Error(ErrorKind::BadParameter, "optimizer needs at least one restart");
    }
    if (!(step_scale > 0.0)) {
        throw Error(ErrorKind::BadParameter, "step_scale must be positive");
    }
}

namespace {

using Bases = std::vector<CMatrix>;
using Objective = std::function<double(const Bases &)>;

struct ClimbResult {
    double value;
    Bases bases;
};

ClimbResult climb(const std::vector<std::size_t> &dims, const Objective &objective,
                  const OptimizerConfig &cfg, RandomSource rng) {
    Bases current;
    for (std::size_t d : dims) {
        current.push_back(random_unitary(d, rng));
    }
    double best = objective(current);
    for (std::size_t step = 0; step < cfg.refine_steps; ++step) {
        Bases trial = current;
        for (std::size_t b = 0; b < trial.size(); ++b) {
            const CMatrix g = rng.ginibre(dims[b], dims[b]);
            const CMatrix h = cfg.step_scale * (g + g.adjoint()) / 2.0;
            trial[b] = trial[b] * expi_hermitian(h);
        }
        const double value = objective(trial);
        if (value < best) {
            best = value;
            current = std::move(trial);
        }
    }
    return {best, std::move(current)};
}

ClimbResult search(const std::vector<std::size_t> &dims, const Objective &objective,
                   const OptimizerConfig &cfg) {
    cfg.validate();
    const RandomSource root(cfg.seed, cfg.stream);
    std::vector<ClimbResult> results(cfg.restarts);
    const auto n = static_cast<long>(cfg.restarts);
#pragma omp parallel for schedule(dynamic)
    for (long r = 0; r < n; ++r) {
        results[static_cast<std::size_t>(r)] =
            climb(dims, objective, cfg, root.substream(static_cast<std::uint64_t>(r)));
    }
    std::size_t arg = 0;
    for (std::size_t r = 1; r < results.size(); ++r) {
        if (results[r].value < results[arg].value) {
            arg = r;
        }
    }
    return std::move(results[arg]);
}

} // namespace

BasisMinimum minimize_conditional_entropy_power(const MultipartiteState &s,
                                                EntropyPowerOrder kappa,
                                                const OptimizerConfig &cfg) {
    if (s.num_subsystems() != 2) {
        throw Error(ErrorKind::DimensionMismatch, "optimizer needs an (X, E) state");
    }
    const Objective objective = [&](const Bases &b) {
        return expected_entropy_power(condition_all(s, projective_from_unitary(b[0])), kappa);
    };
    ClimbResult r = search({s.dims()[1]}, objective, cfg);
    return {r.value, std::move(r.bases[0])};
}

BilocalMinimum minimize_bilocal_entropy_power(const MultipartiteState &s,
                                              EntropyPowerOrder kappa,
                                              const OptimizerConfig &cfg) {
    if (s.num_subsystems() != 3) {
        throw Error(ErrorKind::DimensionMismatch, "bilocal optimizer needs a (Y, E1, E2) state");
    }
    const Objective objective = [&](const Bases &b) {
        const OutcomeGrid grid =
            condition_bilocal(s, projective_from_unitary(b[0]), projective_from_unitary(b[1]));
        return expected_entropy_power(grid.outcomes(), kappa);
    };
    ClimbResult r = search({s.dims()[1], s.dims()[2]}, objective, cfg);
    return {r.value, std::move(r.bases[0]), std::move(r.bases[1])};
}

} // namespace qepi
