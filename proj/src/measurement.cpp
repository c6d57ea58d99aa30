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

#include "qepi/measurement.hpp"

#include <cmath>
#include <string>

#include "qepi/error.hpp"

namespace qepi {

MeasurementSet::MeasurementSet(std::vector<CMatrix> kraus) : kraus_(std::move(kraus)) {
    if (kraus_.empty()) {
        throw Error(ErrorKind::NotComplete, "measurement has no elements");
    }
    dim_ = static_cast<std::size_t>(kraus_.front().rows());
    effects_.reserve(kraus_.size());
    for (const CMatrix &m : kraus_) {
        if (static_cast<std::size_t>(m.rows()) != dim_ || m.rows() != m.cols()) {
            throw Error(ErrorKind::DimensionMismatch, "Kraus operators must share one square shape");
        }
        effects_.push_back(m.adjoint() * m);
    }
    const double residual = completeness_residual();
    if (residual > kCompletenessTol) {
        throw Error(ErrorKind::NotComplete,
                    "max |sum M^dagger M - I| = " + std::to_string(residual));
    }
}

double MeasurementSet::completeness_residual() const {
    const auto n = static_cast<Eigen::Index>(dim_);
    CMatrix total = CMatrix::Zero(n, n);
    for (const CMatrix &e : effects_) {
        total += e;
    }
    return matrix_distance(total, CMatrix::Identity(n, n));
}

MeasurementSet MeasurementSet::trivial(std::size_t d) {
    const auto n = static_cast<Eigen::Index>(d);
    return MeasurementSet({CMatrix::Identity(n, n)});
}

MeasurementSet projective_from_unitary(const CMatrix &u) {
    if (u.rows() != u.cols() || unitarity_residual(u) > kCompletenessTol) {
        throw Error(ErrorKind::NotUnitary, "projective measurement needs a unitary basis");
    }
    std::vector<CMatrix> projectors;
    projectors.reserve(static_cast<std::size_t>(u.cols()));
    for (Eigen::Index j = 0; j < u.cols(); ++j) {
        projectors.emplace_back(u.col(j) * u.col(j).adjoint());
    }
    return MeasurementSet(std::move(projectors));
}

MeasurementSet product_measurement(const MeasurementSet &a, const MeasurementSet &b) {
    std::vector<CMatrix> kraus;
    kraus.reserve(a.size() * b.size());
    for (const CMatrix &ma : a.kraus()) {
        for (const CMatrix &mb : b.kraus()) {
            kraus.push_back(kron(ma, mb));
        }
    }
    return MeasurementSet(std::move(kraus));
}

ConditionalOutcome condition(const MultipartiteState &s, const MeasurementSet &m, std::size_t j) {
    if (s.num_subsystems() != 2 || s.dims()[1] != m.dim()) {
        throw Error(ErrorKind::DimensionMismatch,
                    "measurement dimension " + std::to_string(m.dim()) +
                        " does not match the environment of an (X, E) state");
    }
    if (j >= m.size()) {
        throw Error(ErrorKind::BadIndex, "outcome " + std::to_string(j) + " of " +
                                             std::to_string(m.size()));
    }
    const auto dx = static_cast<Eigen::Index>(s.dims()[0]);
    const auto de = static_cast<Eigen::Index>(s.dims()[1]);
    // Tr_E[(I (x) M) rho (I (x) M^dagger)] = Tr_E[(I (x) M^dagger M) rho].
    const CMatrix effect_t = m.effect(j).transpose();
    CMatrix reduced(dx, dx);
    for (Eigen::Index c = 0; c < dx; ++c) {
        for (Eigen::Index r = 0; r < dx; ++r) {
            reduced(r, c) = s.matrix().block(r * de, c * de, de, de).cwiseProduct(effect_t).sum();
        }
    }
    ConditionalOutcome out;
    out.index = j;
    out.probability = reduced.trace().real();
    if (out.probability > kProbabilityFloor) {
        out.state = DensityMatrix::unchecked(reduced / out.probability);
    }
    return out;
}

namespace {

void require_normalized(const std::vector<ConditionalOutcome> &outcomes) {
    double total = 0.0;
    for (const auto &o : outcomes) {
        total += o.probability;
    }
    if (std::abs(total - 1.0) > kProbabilitySumTol) {
        throw Error(ErrorKind::NotDistribution,
                    "outcome probabilities sum to " + std::to_string(total));
    }
}

} // namespace

std::vector<ConditionalOutcome> condition_all(const MultipartiteState &s,
                                              const MeasurementSet &m) {
    std::vector<ConditionalOutcome> outcomes;
    outcomes.reserve(m.size());
    for (std::size_t j = 0; j < m.size(); ++j) {
        outcomes.push_back(condition(s, m, j));
    }
    require_normalized(outcomes);
    return outcomes;
}

OutcomeGrid condition_bilocal(const MultipartiteState &s, const MeasurementSet &m1,
                              const MeasurementSet &m2) {
    if (s.num_subsystems() != 3 || s.dims()[1] != m1.dim() || s.dims()[2] != m2.dim()) {
        throw Error(ErrorKind::DimensionMismatch,
                    "bilocal conditioning needs a (Y, E1, E2) state matching both measurements");
    }
    const MultipartiteState merged(s.state(), {s.dims()[0], s.dims()[1] * s.dims()[2]});
    const MeasurementSet joint = product_measurement(m1, m2);
    return {m1.size(), m2.size(), condition_all(merged, joint)};
}

Spectrum conditional_spectrum(const ConditionalOutcome &outcome) {
    if (outcome.negligible()) {
        throw Error(ErrorKind::NegligibleOutcome,
                    "outcome " + std::to_string(outcome.index) + " has probability " +
                        std::to_string(outcome.probability));
    }
    return eigenvalues_descending(*outcome.state);
}

} // namespace qepi
