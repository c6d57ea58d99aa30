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

#include "qepi/linalg.hpp"

#include <string>

#include "qepi/error.hpp"

namespace qepi {

namespace {

void require_same_shape(const CMatrix &a, const CMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorKind::DimensionMismatch,
                    std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " vs " +
                        std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
}

} // namespace

double matrix_distance(const CMatrix &a, const CMatrix &b) {
    require_same_shape(a, b);
    if (a.size() == 0) {
        return 0.0;
    }
    return (a - b).cwiseAbs().maxCoeff();
}

CMatrix commutator(const CMatrix &a, const CMatrix &b) {
    require_same_shape(a, b);
    if (a.rows() != a.cols()) {
        throw Error(ErrorKind::NotSquare, "commutator needs square matrices");
    }
    return a * b - b * a;
}

CMatrix kron(const CMatrix &a, const CMatrix &b) {
    const Eigen::Index br = b.rows();
    const Eigen::Index bc = b.cols();
    CMatrix out(a.rows() * br, a.cols() * bc);
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * br, j * bc, br, bc) = a(i, j) * b;
        }
    }
    return out;
}

double unitarity_residual(const CMatrix &u) {
    if (u.rows() != u.cols()) {
        throw Error(ErrorKind::NotSquare, "unitarity check needs a square matrix");
    }
    const CMatrix gram = u.adjoint() * u;
    return matrix_distance(gram, CMatrix::Identity(u.rows(), u.cols()));
}

CMatrix expi_hermitian(const CMatrix &h) {
    const CMatrix sym = (h + h.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<CMatrix> es(sym);
    if (es.info() != Eigen::Success) {
        throw Error(ErrorKind::EigenSolverFailure, "exp(iH) eigendecomposition failed");
    }
    const Eigen::VectorXcd phases =
        es.eigenvalues().unaryExpr([](double x) { return std::polar(1.0, x); });
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

} // namespace qepi
