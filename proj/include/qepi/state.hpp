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
#include <span>
#include <string>
#include <vector>

#include "qepi/linalg.hpp"
#include "qepi/random.hpp"

namespace qepi {

inline constexpr double kStateTol = 1e-10;
inline constexpr double kSpectrumClip = 1e-10;
inline constexpr double kSpectrumSumTol = 1e-9;
inline constexpr std::size_t kMaxTotalDim = 576;

/// Hermitian, positive semidefinite, unit-trace d x d matrix.
///
/// Instances only come out of make_density() or out of operations that
/// map states to states, so holders may rely on the invariants.
class DensityMatrix {
  public:
    [[nodiscard]] std::size_t dim() const noexcept {
        return static_cast<std::size_t>(rho_.rows());
    }
    [[nodiscard]] const CMatrix &matrix() const noexcept { return rho_; }

    /// Wraps a matrix already known to be a state up to round-off. The
    /// matrix is symmetrized but not eigen-checked.
    static DensityMatrix unchecked(CMatrix m);

  private:
    explicit DensityMatrix(CMatrix m) : rho_(std::move(m)) {}
    friend DensityMatrix make_density(const CMatrix &, double);

    CMatrix rho_;
};

/// Symmetrizes (rho + rho^dagger)/2 and validates all three invariants.
DensityMatrix make_density(const CMatrix &entries, double tol = kStateTol);

/// Eigenvalues in non-increasing order.
class Spectrum {
  public:
    /// Applies the clipping rule: values in [-1e-10, 0) become 0 and the
    /// vector is renormalized if its sum is within 1e-9 of one; anything
    /// else is rejected.
    static Spectrum from_values(RVector values);

    [[nodiscard]] const RVector &values() const noexcept { return values_; }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }

  private:
    explicit Spectrum(RVector v) : values_(std::move(v)) {}
    RVector values_;
};

/// A state together with its ordered subsystem dimensions. Subsystem 0 is
/// the slowest-varying tensor index.
class MultipartiteState {
  public:
    MultipartiteState(DensityMatrix state, std::vector<std::size_t> dims);

    [[nodiscard]] const DensityMatrix &state() const noexcept { return state_; }
    [[nodiscard]] const CMatrix &matrix() const noexcept { return state_.matrix(); }
    [[nodiscard]] const std::vector<std::size_t> &dims() const noexcept { return dims_; }
    [[nodiscard]] std::size_t num_subsystems() const noexcept { return dims_.size(); }
    [[nodiscard]] std::size_t dim() const noexcept { return state_.dim(); }

  private:
    DensityMatrix state_;
    std::vector<std::size_t> dims_;
};

DensityMatrix tensor(const DensityMatrix &a, const DensityMatrix &b);
MultipartiteState tensor(const MultipartiteState &a, const MultipartiteState &b);

/// Reduced state on `keep`; kept subsystems stay in their original order.
MultipartiteState partial_trace(const MultipartiteState &s,
                                std::span<const std::size_t> keep);
MultipartiteState partial_trace(const MultipartiteState &s,
                                std::initializer_list<std::size_t> keep);

/// Subsystem i of the input ends up at position perm[i] of the output.
MultipartiteState permute_subsystems(const MultipartiteState &s,
                                     std::span<const std::size_t> perm);
MultipartiteState permute_subsystems(const MultipartiteState &s,
                                     std::initializer_list<std::size_t> perm);

/// Raw-matrix kernels behind the state operations. `dims` is the subsystem
/// layout of `m`.
CMatrix partial_trace_matrix(const CMatrix &m, std::span<const std::size_t> dims,
                             std::span<const std::size_t> keep);
CMatrix permute_matrix(const CMatrix &m, std::span<const std::size_t> dims,
                       std::span<const std::size_t> perm);

Spectrum eigenvalues_descending(const DensityMatrix &rho);
Spectrum eigenvalues_descending(const CMatrix &hermitian);

double purity(const DensityMatrix &rho);

enum class StateKind { PureHaar, MixedGinibre, MixedRankK };

struct StateSampler {
    StateKind kind = StateKind::MixedGinibre;
    std::size_t rank = 0; // only for MixedRankK

    /// "pure", "ginibre" or "rank-k:K".
    static StateSampler parse(const std::string &text);
    [[nodiscard]] std::string to_string() const;
    bool operator==(const StateSampler &) const = default;
};

DensityMatrix random_state(std::size_t d, const StateSampler &sampler, RandomSource &rng);

/// Haar unitary: QR of a Ginibre matrix with the phases of diag(R) moved
/// into Q.
CMatrix random_unitary(std::size_t d, RandomSource &rng);

DensityMatrix maximally_mixed(std::size_t d);
DensityMatrix pure_state(const Eigen::VectorXcd &psi);

} // namespace qepi
