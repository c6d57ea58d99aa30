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
#include <optional>
#include <vector>

#include "qepi/state.hpp"

namespace qepi {

inline constexpr double kCompletenessTol = 1e-10;
inline constexpr double kProbabilityFloor = 1e-12;
inline constexpr double kProbabilitySumTol = 1e-9;

/// Kraus operators {M_j} on one subsystem with sum_j M_j^dagger M_j = I.
class MeasurementSet {
  public:
    explicit MeasurementSet(std::vector<CMatrix> kraus);

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] std::size_t size() const noexcept { return kraus_.size(); }
    [[nodiscard]] const std::vector<CMatrix> &kraus() const noexcept { return kraus_; }
    /// M_j^dagger M_j.
    [[nodiscard]] const CMatrix &effect(std::size_t j) const { return effects_.at(j); }
    [[nodiscard]] double completeness_residual() const;

    /// The one-outcome measurement {I}.
    static MeasurementSet trivial(std::size_t d);

  private:
    std::size_t dim_ = 0;
    std::vector<CMatrix> kraus_;
    std::vector<CMatrix> effects_;
};

/// Rank-1 projectors onto the columns of a unitary.
MeasurementSet projective_from_unitary(const CMatrix &u);

/// {M_j (x) N_k} with outcome index j * b.size() + k.
MeasurementSet product_measurement(const MeasurementSet &a, const MeasurementSet &b);

struct ConditionalOutcome {
    std::size_t index = 0;
    double probability = 0.0;
    /// Absent when probability <= kProbabilityFloor.
    std::optional<DensityMatrix> state;

    [[nodiscard]] bool negligible() const noexcept { return !state.has_value(); }
};

/// Post-measurement state of X after outcome j on E; `s` is ordered (X, E).
ConditionalOutcome condition(const MultipartiteState &s, const MeasurementSet &m, std::size_t j);

/// All outcomes of `m`; throws NotDistribution if the probabilities do not
/// sum to one within kProbabilitySumTol.
std::vector<ConditionalOutcome> condition_all(const MultipartiteState &s,
                                              const MeasurementSet &m);

/// Outcomes of local measurements on both environments of a (Y, E1, E2)
/// state, indexed row-major by (j, k).
class OutcomeGrid {
  public:
    OutcomeGrid(std::size_t rows, std::size_t cols, std::vector<ConditionalOutcome> outcomes)
        : rows_(rows), cols_(cols), outcomes_(std::move(outcomes)) {}

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] const ConditionalOutcome &at(std::size_t j, std::size_t k) const {
        return outcomes_.at(j * cols_ + k);
    }
    [[nodiscard]] const std::vector<ConditionalOutcome> &outcomes() const noexcept {
        return outcomes_;
    }

  private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<ConditionalOutcome> outcomes_;
};

OutcomeGrid condition_bilocal(const MultipartiteState &s, const MeasurementSet &m1,
                              const MeasurementSet &m2);

Spectrum conditional_spectrum(const ConditionalOutcome &outcome);

} // namespace qepi
