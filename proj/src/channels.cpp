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

#include "qepi/channels.hpp"

#include <cmath>
#include <string>

#include "qepi/error.hpp"

namespace qepi {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_same_dim(const DensityMatrix &a, const DensityMatrix &b) {
    if (a.dim() != b.dim()) {
        throw Error(ErrorKind::DimensionMismatch,
                    "partial swap needs equal input dimensions, got " + std::to_string(a.dim()) +
                        " and " + std::to_string(b.dim()));
    }
}

void require_xe(const MultipartiteState &s, const char *which) {
    if (s.num_subsystems() != 2) {
        throw Error(ErrorKind::DimensionMismatch,
                    std::string(which) + " must be bipartite (X, E)");
    }
}

} // namespace

MixingParameter::MixingParameter(double tau) : tau_(tau) {
    if (!(tau >= 0.0 && tau <= 1.0)) {
        throw Error(ErrorKind::BadParameter, "tau = " + std::to_string(tau) + " outside [0, 1]");
    }
}

double MixingParameter::sqrt_tau() const noexcept {
    if (tau_ == 0.0) return 0.0;
    if (tau_ == 1.0) return 1.0;
    return std::sqrt(tau_);
}

double MixingParameter::sqrt_one_minus() const noexcept {
    if (tau_ == 0.0) return 1.0;
    if (tau_ == 1.0) return 0.0;
    return std::sqrt(1.0 - tau_);
}

double MixingParameter::cross_weight() const noexcept {
    if (tau_ == 0.0 || tau_ == 1.0) return 0.0;
    return std::sqrt(tau_ * (1.0 - tau_));
}

CMatrix swap_operator(std::size_t d) {
    const auto n = static_cast<Eigen::Index>(d);
    CMatrix w = CMatrix::Zero(n * n, n * n);
    for (Eigen::Index a = 0; a < n; ++a) {
        for (Eigen::Index b = 0; b < n; ++b) {
            w(b * n + a, a * n + b) = 1.0;
        }
    }
    return w;
}

CMatrix partial_swap_unitary(std::size_t d, MixingParameter tau) {
    const auto n = static_cast<Eigen::Index>(d * d);
    return tau.sqrt_tau() * CMatrix::Identity(n, n) +
           kI * tau.sqrt_one_minus() * swap_operator(d);
}

DensityMatrix partial_swap_closed(const DensityMatrix &rho1, const DensityMatrix &rho2,
                                  MixingParameter tau) {
    require_same_dim(rho1, rho2);
    const double t = tau.value();
    CMatrix out = t * rho1.matrix() + (1.0 - t) * rho2.matrix();
    if (tau.cross_weight() != 0.0) {
        out -= kI * tau.cross_weight() * commutator(rho1.matrix(), rho2.matrix());
    }
    return make_density(out);
}

CMatrix conjugate_leading(const CMatrix &rho, const CMatrix &u, std::size_t rest_dim) {
    const Eigen::Index m = static_cast<Eigen::Index>(rest_dim);
    const Eigen::Index n = u.rows();
    if (u.cols() != n || rho.rows() != n * m || rho.cols() != n * m) {
        throw Error(ErrorKind::DimensionMismatch, "conjugation layout mismatch");
    }
    CMatrix left = CMatrix::Zero(rho.rows(), rho.cols());
    for (Eigen::Index a = 0; a < n; ++a) {
        for (Eigen::Index c = 0; c < n; ++c) {
            const Complex w = u(a, c);
            if (w == Complex{}) continue;
            left.middleRows(a * m, m).noalias() += w * rho.middleRows(c * m, m);
        }
    }
    CMatrix out = CMatrix::Zero(rho.rows(), rho.cols());
    for (Eigen::Index b = 0; b < n; ++b) {
        for (Eigen::Index c = 0; c < n; ++c) {
            const Complex w = std::conj(u(b, c));
            if (w == Complex{}) continue;
            out.middleCols(b * m, m).noalias() += w * left.middleCols(c * m, m);
        }
    }
    return out;
}

DensityMatrix partial_swap_conjugation(const DensityMatrix &rho1, const DensityMatrix &rho2,
                                       MixingParameter tau) {
    require_same_dim(rho1, rho2);
    const std::size_t d = rho1.dim();
    const CMatrix u = partial_swap_unitary(d, tau);
    const CMatrix joint = u * kron(rho1.matrix(), rho2.matrix()) * u.adjoint();
    const std::size_t dims[] = {d, d};
    const std::size_t keep[] = {0};
    return DensityMatrix::unchecked(partial_trace_matrix(joint, dims, keep));
}

MultipartiteState partial_swap_global(const MultipartiteState &s1, const MultipartiteState &s2,
                                      MixingParameter tau) {
    require_xe(s1, "first input");
    require_xe(s2, "second input");
    const std::size_t d = s1.dims()[0];
    if (s2.dims()[0] != d) {
        throw Error(ErrorKind::DimensionMismatch, "X1 and X2 dimensions differ");
    }
    const std::size_t de1 = s1.dims()[1];
    const std::size_t de2 = s2.dims()[1];

    // (X1, E1, X2, E2) -> (X1, X2, E1, E2)
    const MultipartiteState joint = tensor(s1, s2);
    const MultipartiteState ordered = permute_subsystems(joint, {0, 2, 1, 3});
    const CMatrix u = partial_swap_unitary(d, tau);
    const CMatrix evolved = conjugate_leading(ordered.matrix(), u, de1 * de2);

    const std::size_t dims[] = {d, d, de1, de2};
    const std::size_t keep[] = {0, 2, 3};
    return {DensityMatrix::unchecked(partial_trace_matrix(evolved, dims, keep)), {d, de1, de2}};
}

MultipartiteState partial_swap_global_closed(const MultipartiteState &s1,
                                             const MultipartiteState &s2, MixingParameter tau) {
    require_xe(s1, "first input");
    require_xe(s2, "second input");
    const std::size_t d = s1.dims()[0];
    if (s2.dims()[0] != d) {
        throw Error(ErrorKind::DimensionMismatch, "X1 and X2 dimensions differ");
    }
    const std::size_t de1 = s1.dims()[1];
    const std::size_t de2 = s2.dims()[1];
    const auto e1 = static_cast<Eigen::Index>(de1);
    const auto e2 = static_cast<Eigen::Index>(de2);

    const CMatrix rho_e1 = partial_trace(s1, {1}).matrix();
    const CMatrix rho_e2 = partial_trace(s2, {1}).matrix();

    // Terms built in (X, E2, E1) order are brought to (X, E1, E2).
    const std::size_t xe2e1[] = {d, de2, de1};
    const std::size_t to_xe1e2[] = {0, 2, 1};

    const CMatrix first = kron(s1.matrix(), rho_e2);
    const CMatrix second = permute_matrix(kron(s2.matrix(), rho_e1), xe2e1, to_xe1e2);

    const double t = tau.value();
    CMatrix out = t * first + (1.0 - t) * second;
    if (tau.cross_weight() != 0.0) {
        const CMatrix a = kron(s1.matrix(), CMatrix::Identity(e2, e2));
        const CMatrix b =
            permute_matrix(kron(s2.matrix(), CMatrix::Identity(e1, e1)), xe2e1, to_xe1e2);
        out -= kI * tau.cross_weight() * commutator(a, b);
    }
    return {make_density(out), {d, de1, de2}};
}

} // namespace qepi
