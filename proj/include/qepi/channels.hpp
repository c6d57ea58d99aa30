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

#include "qepi/state.hpp"

namespace qepi {

/// Mixing weight tau in [0, 1].
class MixingParameter {
  public:
    explicit MixingParameter(double tau);

    [[nodiscard]] double value() const noexcept { return tau_; }
    /// sqrt(tau), exact at the endpoints.
    [[nodiscard]] double sqrt_tau() const noexcept;
    /// sqrt(1 - tau), exact at the endpoints.
    [[nodiscard]] double sqrt_one_minus() const noexcept;
    /// sqrt(tau (1 - tau)); exactly zero at the endpoints.
    [[nodiscard]] double cross_weight() const noexcept;

  private:
    double tau_;
};

/// Swap W on C^d (x) C^d: W|a>|b> = |b>|a>.
CMatrix swap_operator(std::size_t d);

/// U = sqrt(tau) I + i sqrt(1 - tau) W.
CMatrix partial_swap_unitary(std::size_t d, MixingParameter tau);

/// Qudit addition rule: tau r1 + (1 - tau) r2 - i sqrt(tau(1 - tau)) [r1, r2].
DensityMatrix partial_swap_closed(const DensityMatrix &rho1, const DensityMatrix &rho2,
                                  MixingParameter tau);

/// Same map evaluated as Tr_2[U (r1 (x) r2) U^dagger] with the dense U.
DensityMatrix partial_swap_conjugation(const DensityMatrix &rho1, const DensityMatrix &rho2,
                                       MixingParameter tau);

/// Partial swap on the X legs of rho_{X1E1} (x) rho_{X2E2}, environments
/// untouched. Inputs are ordered (X, E); the output is ordered (Y, E1, E2).
///
/// Builds the four-party state in (X1, E1, X2, E2) order, moves it to
/// (X1, X2, E1, E2), conjugates with U (x) I and traces out X2.
MultipartiteState partial_swap_global(const MultipartiteState &s1, const MultipartiteState &s2,
                                      MixingParameter tau);

/// Closed form of partial_swap_global:
///   tau (rho_{X1E1} (x) rho_{E2}) + (1 - tau) (rho_{E1} (x) rho_{X2E2})
///   - i sqrt(tau(1 - tau)) [A, B]
/// with A = rho_{X1E1} (x) I_{E2}, B = I_{E1} (x) rho_{X2E2}, all on
/// (Y, E1, E2) and multiplied along the shared X index.
MultipartiteState partial_swap_global_closed(const MultipartiteState &s1,
                                             const MultipartiteState &s2, MixingParameter tau);

/// (U (x) I_rest) rho (U (x) I_rest)^dagger where rho is laid out as
/// (X1, X2, rest) and U acts on the leading d^2 block index.
CMatrix conjugate_leading(const CMatrix &rho, const CMatrix &u, std::size_t rest_dim);

} // namespace qepi
