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
#include <span>
#include <vector>

#include "qepi/measurement.hpp"
#include "qepi/state.hpp"

namespace qepi {

inline constexpr double kMajorizationTol = 1e-9;

/// Order kappa >= 0 of the entropy power exp(kappa S).
class EntropyPowerOrder {
  public:
    explicit EntropyPowerOrder(double kappa);
    [[nodiscard]] double kappa() const noexcept { return kappa_; }

  private:
    double kappa_;
};

struct KappaBounds {
    double concavity; // 1 / (ln d)^2
    double photon;    // 1 / (d - 1)
};

/// Natural-log constants; kappa up to `concavity` keeps exp(kappa H) concave
/// on the d-simplex.
KappaBounds kappa_bounds(std::size_t d);

/// Whether `m` is majorized by `n` (m < n). Vectors are sorted internally
/// and the shorter one is zero-padded. Throws TotalMismatch when the sums
/// differ by more than `tol`.
bool majorizes(std::span<const double> n, std::span<const double> m,
               double tol = kMajorizationTol);

struct MajorizationSlack {
    /// min over k < len of (prefix_k(n) - prefix_k(m)); >= 0 iff m < n.
    double prefix;
    /// |sum(n) - sum(m)|.
    double total;
};

MajorizationSlack majorization_slack(std::span<const double> n, std::span<const double> m);

/// Entries combined as weight * a + (1 - weight) * b after sorting each
/// descending and zero-padding.
RVector mix_sorted(std::span<const double> a, std::span<const double> b, double weight);

/// Nats; 0 ln 0 = 0.
double shannon_entropy(std::span<const double> p);
double von_neumann_entropy(const DensityMatrix &rho);

double entropy_power(std::span<const double> p, EntropyPowerOrder kappa);
double entropy_power(const Spectrum &spectrum, EntropyPowerOrder kappa);
double entropy_power(const DensityMatrix &rho, EntropyPowerOrder kappa);

/// S(AB) - S(B) for an (A, B) state.
double conditional_vn_entropy(const MultipartiteState &s);

/// sum_j p_j nu_kappa(rho_j); negligible outcomes contribute nothing.
double expected_entropy_power(std::span<const ConditionalOutcome> outcomes,
                              EntropyPowerOrder kappa);

struct OptimizerConfig {
    std::size_t restarts = 8;
    std::size_t refine_steps = 64;
    double step_scale = 0.2;
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;

    void validate() const;
};

struct BasisMinimum {
    double value = 0.0;
    CMatrix basis;
};

/// Upper bound on min over rank-1 projective bases on E of the expected
/// entropy power of X; `s` is ordered (X, E).
///
/// Each restart starts from a Haar unitary and hill-climbs with random
/// rotations U <- U exp(i H), H Hermitian Gaussian times step_scale,
/// keeping only improvements. Restarts use independent substreams and may
/// run in parallel; the result is the lowest value, ties going to the
/// lowest restart index.
BasisMinimum minimize_conditional_entropy_power(const MultipartiteState &s,
                                                EntropyPowerOrder kappa,
                                                const OptimizerConfig &cfg);

struct BilocalMinimum {
    double value = 0.0;
    CMatrix basis1;
    CMatrix basis2;
};

/// Same search over product bases on (E1, E2) of a (Y, E1, E2) state.
BilocalMinimum minimize_bilocal_entropy_power(const MultipartiteState &s,
                                              EntropyPowerOrder kappa,
                                              const OptimizerConfig &cfg);

} // namespace qepi
