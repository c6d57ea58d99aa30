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

#include "qepi/state.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

#include "qepi/error.hpp"

namespace qepi {

namespace {

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << x;
    return os.str();
}

std::size_t product(std::span<const std::size_t> dims) {
    return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>{});
}

// Row-major strides: the last subsystem varies fastest.
std::vector<std::size_t> strides_of(std::span<const std::size_t> dims) {
    std::vector<std::size_t> strides(dims.size(), 1);
    for (std::size_t k = dims.size(); k-- > 1;) {
        strides[k - 1] = strides[k] * dims[k];
    }
    return strides;
}

void require_layout(const CMatrix &m, std::span<const std::size_t> dims) {
    if (dims.empty() || std::find(dims.begin(), dims.end(), 0) != dims.end()) {
        throw Error(ErrorKind::BadDimension, "subsystem dimensions must be positive");
    }
    if (static_cast<std::size_t>(m.rows()) != product(dims) || m.rows() != m.cols()) {
        throw Error(ErrorKind::DimensionMismatch,
                    "matrix of size " + std::to_string(m.rows()) +
                        " does not match the product of subsystem dimensions");
    }
}

} // namespace

DensityMatrix DensityMatrix::unchecked(CMatrix m) {
    CMatrix sym = (m + m.adjoint()) / 2.0;
    return DensityMatrix(std::move(sym));
}

DensityMatrix make_density(const CMatrix &entries, double tol) {
    if (!(tol > 0.0)) {
        throw Error(ErrorKind::BadParameter, "tolerance must be positive");
    }
    if (entries.rows() != entries.cols() || entries.rows() == 0) {
        throw Error(ErrorKind::NotSquare, "density matrix must be a non-empty square matrix");
    }
    const double asym = matrix_distance(entries, entries.adjoint());
    if (asym > tol) {
        throw Error(ErrorKind::NotHermitian, "max |rho - rho^dagger| = " + fmt(asym));
    }
    CMatrix sym = (entries + entries.adjoint()) / 2.0;
    const double trace_dev = std::abs(sym.trace() - Complex(1.0, 0.0));
    if (trace_dev > tol) {
        throw Error(ErrorKind::NotUnitTrace, "|Tr rho - 1| = " + fmt(trace_dev));
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> es(sym, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) {
        throw Error(ErrorKind::EigenSolverFailure, "validation eigendecomposition failed");
    }
    const double lowest = es.eigenvalues()(0);
    if (lowest < -tol) {
        throw Error(ErrorKind::NotPositive, "smallest eigenvalue = " + fmt(lowest));
    }
    return DensityMatrix(std::move(sym));
}

Spectrum Spectrum::from_values(RVector values) {
    if (values.empty()) {
        throw Error(ErrorKind::NotDistribution, "empty spectrum");
    }
    double sum = 0.0;
    for (double &v : values) {
        if (v < -kSpectrumClip) {
            throw Error(ErrorKind::NotPositive, "eigenvalue " + fmt(v) + " below clip threshold");
        }
        if (v < 0.0) {
            v = 0.0;
        }
        sum += v;
    }
    if (std::abs(sum - 1.0) > kSpectrumSumTol) {
        throw Error(ErrorKind::NotUnitTrace, "spectrum sums to 1 + " + fmt(sum - 1.0));
    }
    for (double &v : values) {
        v /= sum;
    }
    std::sort(values.begin(), values.end(), std::greater<>{});
    return Spectrum(std::move(values));
}

MultipartiteState::MultipartiteState(DensityMatrix state, std::vector<std::size_t> dims)
    : state_(std::move(state)), dims_(std::move(dims)) {
    require_layout(state_.matrix(), dims_);
}

DensityMatrix tensor(const DensityMatrix &a, const DensityMatrix &b) {
    return DensityMatrix::unchecked(kron(a.matrix(), b.matrix()));
}

MultipartiteState tensor(const MultipartiteState &a, const MultipartiteState &b) {
    std::vector<std::size_t> dims = a.dims();
    dims.insert(dims.end(), b.dims().begin(), b.dims().end());
    return {tensor(a.state(), b.state()), std::move(dims)};
}

CMatrix partial_trace_matrix(const CMatrix &m, std::span<const std::size_t> dims,
                             std::span<const std::size_t> keep) {
    require_layout(m, dims);
    const std::size_t n = dims.size();
    std::vector<bool> kept(n, false);
    for (std::size_t k : keep) {
        if (k >= n || kept[k]) {
            throw Error(ErrorKind::BadSubsystemIndex,
                        "subsystem " + std::to_string(k) + " invalid for " +
                            std::to_string(n) + " subsystems");
        }
        kept[k] = true;
    }
    std::vector<std::size_t> kept_dims;
    std::vector<std::size_t> traced_dims;
    for (std::size_t k = 0; k < n; ++k) {
        (kept[k] ? kept_dims : traced_dims).push_back(dims[k]);
    }
    const std::size_t dk = product(kept_dims);
    const std::size_t dt = product(traced_dims);
    const auto full_strides = strides_of(dims);

    // rows[t * dk + r]: full index of (kept index r, traced index t).
    std::vector<Eigen::Index> rows(dk * dt);
    for (std::size_t full = 0; full < dk * dt; ++full) {
        std::size_t r = 0;
        std::size_t t = 0;
        for (std::size_t k = 0; k < n; ++k) {
            const std::size_t digit = (full / full_strides[k]) % dims[k];
            if (kept[k]) {
                r = r * dims[k] + digit;
            } else {
                t = t * dims[k] + digit;
            }
        }
        rows[t * dk + r] = static_cast<Eigen::Index>(full);
    }

    CMatrix out = CMatrix::Zero(static_cast<Eigen::Index>(dk), static_cast<Eigen::Index>(dk));
    for (std::size_t t = 0; t < dt; ++t) {
        const Eigen::Index *block = rows.data() + t * dk;
        for (std::size_t c = 0; c < dk; ++c) {
            for (std::size_t r = 0; r < dk; ++r) {
                out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) +=
                    m(block[r], block[c]);
            }
        }
    }
    return out;
}

MultipartiteState partial_trace(const MultipartiteState &s, std::span<const std::size_t> keep) {
    if (keep.empty() || keep.size() >= s.num_subsystems()) {
        throw Error(ErrorKind::BadSubsystemIndex, "keep must be a non-empty proper subset");
    }
    std::vector<std::size_t> sorted(keep.begin(), keep.end());
    std::sort(sorted.begin(), sorted.end());
    CMatrix reduced = partial_trace_matrix(s.matrix(), s.dims(), sorted);
    std::vector<std::size_t> dims;
    for (std::size_t k : sorted) {
        dims.push_back(s.dims()[k]);
    }
    return {DensityMatrix::unchecked(std::move(reduced)), std::move(dims)};
}

MultipartiteState partial_trace(const MultipartiteState &s,
                                std::initializer_list<std::size_t> keep) {
    return partial_trace(s, std::span<const std::size_t>(keep.begin(), keep.size()));
}

CMatrix permute_matrix(const CMatrix &m, std::span<const std::size_t> dims,
                       std::span<const std::size_t> perm) {
    require_layout(m, dims);
    const std::size_t n = dims.size();
    std::vector<bool> seen(n, false);
    if (perm.size() != n) {
        throw Error(ErrorKind::BadPermutation, "permutation length differs from subsystem count");
    }
    for (std::size_t p : perm) {
        if (p >= n || seen[p]) {
            throw Error(ErrorKind::BadPermutation, "not a permutation of 0..n-1");
        }
        seen[p] = true;
    }
    std::vector<std::size_t> out_dims(n);
    for (std::size_t k = 0; k < n; ++k) {
        out_dims[perm[k]] = dims[k];
    }
    const auto in_strides = strides_of(dims);
    const auto out_strides = strides_of(out_dims);
    const std::size_t total = product(dims);
    std::vector<Eigen::Index> target(total);
    for (std::size_t i = 0; i < total; ++i) {
        std::size_t j = 0;
        for (std::size_t k = 0; k < n; ++k) {
            j += ((i / in_strides[k]) % dims[k]) * out_strides[perm[k]];
        }
        target[i] = static_cast<Eigen::Index>(j);
    }
    CMatrix out(m.rows(), m.cols());
    for (std::size_t c = 0; c < total; ++c) {
        for (std::size_t r = 0; r < total; ++r) {
            out(target[r], target[c]) =
                m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
        }
    }
    return out;
}

MultipartiteState permute_subsystems(const MultipartiteState &s,
                                     std::span<const std::size_t> perm) {
    CMatrix out = permute_matrix(s.matrix(), s.dims(), perm);
    std::vector<std::size_t> dims(s.num_subsystems());
    for (std::size_t k = 0; k < dims.size(); ++k) {
        dims[perm[k]] = s.dims()[k];
    }
    return {DensityMatrix::unchecked(std::move(out)), std::move(dims)};
}

MultipartiteState permute_subsystems(const MultipartiteState &s,
                                     std::initializer_list<std::size_t> perm) {
    return permute_subsystems(s, std::span<const std::size_t>(perm.begin(), perm.size()));
}

Spectrum eigenvalues_descending(const CMatrix &hermitian) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) {
        throw Error(ErrorKind::EigenSolverFailure,
                    "no convergence for " + std::to_string(hermitian.rows()) +
                        "x" + std::to_string(hermitian.cols()) + " matrix, max |entry| = " +
                        fmt(hermitian.cwiseAbs().maxCoeff()));
    }
    const auto &ev = es.eigenvalues();
    return Spectrum::from_values(RVector(ev.data(), ev.data() + ev.size()));
}

Spectrum eigenvalues_descending(const DensityMatrix &rho) {
    return eigenvalues_descending(rho.matrix());
}

double purity(const DensityMatrix &rho) {
    return (rho.matrix() * rho.matrix()).trace().real();
}

StateSampler StateSampler::parse(const std::string &text) {
    if (text == "pure") {
        return {StateKind::PureHaar, 0};
    }
    if (text == "ginibre") {
        return {StateKind::MixedGinibre, 0};
    }
    const std::string prefix = "rank-k:";
    if (text.rfind(prefix, 0) == 0) {
        const std::string tail = text.substr(prefix.size());
        std::size_t pos = 0;
        unsigned long k = 0;
        try {
            k = std::stoul(tail, &pos);
        } catch (const std::exception &) {
            pos = 0;
        }
        if (pos == 0 || pos != tail.size() || k == 0) {
            throw Error(ErrorKind::BadRank, "cannot read rank from '" + text + "'");
        }
        return {StateKind::MixedRankK, static_cast<std::size_t>(k)};
    }
    throw Error(ErrorKind::ParseFailure, "unknown state kind '" + text + "'");
}

std::string StateSampler::to_string() const {
    switch (kind) {
    case StateKind::PureHaar: return "pure";
    case StateKind::MixedGinibre: return "ginibre";
    case StateKind::MixedRankK: return "rank-k:" + std::to_string(rank);
    }
    return "ginibre";
}

DensityMatrix random_state(std::size_t d, const StateSampler &sampler, RandomSource &rng) {
    if (d < 1) {
        throw Error(ErrorKind::BadDimension, "state dimension must be positive");
    }
    std::size_t cols = d;
    switch (sampler.kind) {
    case StateKind::PureHaar: cols = 1; break;
    case StateKind::MixedGinibre: cols = d; break;
    case StateKind::MixedRankK:
        if (sampler.rank < 1 || sampler.rank > d) {
            throw Error(ErrorKind::BadRank, "rank " + std::to_string(sampler.rank) +
                                                " outside [1, " + std::to_string(d) + "]");
        }
        cols = sampler.rank;
        break;
    }
    const CMatrix g = rng.ginibre(d, cols);
    CMatrix rho = g * g.adjoint();
    const double tr = rho.trace().real();
    if (!(tr > 0.0)) {
        throw Error(ErrorKind::DegenerateSample, "zero Ginibre sample");
    }
    rho /= tr;
    return DensityMatrix::unchecked(std::move(rho));
}

CMatrix random_unitary(std::size_t d, RandomSource &rng) {
    if (d < 1) {
        throw Error(ErrorKind::BadDimension, "unitary dimension must be positive");
    }
    for (int attempt = 0; attempt < 3; ++attempt) {
        const CMatrix g = rng.ginibre(d, d);
        Eigen::HouseholderQR<CMatrix> qr(g);
        const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
        Eigen::VectorXcd phases(static_cast<Eigen::Index>(d));
        bool degenerate = false;
        for (Eigen::Index i = 0; i < phases.size(); ++i) {
            const double mag = std::abs(r(i, i));
            if (mag < 1e-12) {
                degenerate = true;
                break;
            }
            phases(i) = r(i, i) / mag;
        }
        if (degenerate) {
            continue;
        }
        CMatrix q = qr.householderQ();
        return q * phases.asDiagonal();
    }
    throw Error(ErrorKind::DegenerateSample, "rank-deficient Ginibre draw three times");
}

DensityMatrix maximally_mixed(std::size_t d) {
    const auto n = static_cast<Eigen::Index>(d);
    return DensityMatrix::unchecked(CMatrix::Identity(n, n) / static_cast<double>(d));
}

DensityMatrix pure_state(const Eigen::VectorXcd &psi) {
    const double norm = psi.norm();
    if (!(norm > 0.0)) {
        throw Error(ErrorKind::BadParameter, "zero state vector");
    }
    const Eigen::VectorXcd v = psi / norm;
    return DensityMatrix::unchecked(v * v.adjoint());
}

} // namespace qepi
