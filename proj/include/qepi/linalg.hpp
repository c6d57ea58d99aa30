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

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace qepi {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using RVector = std::vector<double>;

/// Maximum elementwise absolute difference.
double matrix_distance(const CMatrix &a, const CMatrix &b);

/// AB - BA.
CMatrix commutator(const CMatrix &a, const CMatrix &b);

/// Kronecker product; the left factor indexes the slower-varying subsystem.
CMatrix kron(const CMatrix &a, const CMatrix &b);

/// max |U^dagger U - I|.
double unitarity_residual(const CMatrix &u);

/// exp(i * h) for Hermitian h, through its eigendecomposition.
CMatrix expi_hermitian(const CMatrix &h);

} // namespace qepi
