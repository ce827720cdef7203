// Copyright 2026-present the opuc project
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "opuc/cmv.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace opuc {

namespace {

using Mat = Eigen::MatrixXcd;

Mat to_eigen(const CmvTruncation& t) {
    Mat m(t.N, t.N);
    for (std::size_t i = 0; i < t.N; ++i) {
        for (std::size_t j = 0; j < t.N; ++j) {
            m(i, j) = t.at(i, j);
        }
    }
    return m;
}

// Places Theta(a) at rows/cols (k, k+1), truncated at N.
void put_theta(Mat& m, std::size_t k, cplx a, std::size_t N) {
    const double rho = std::sqrt(std::max(0.0, 1.0 - std::norm(a)));
    m(k, k) = std::conj(a);
    if (k + 1 < N) {
        m(k, k + 1) = rho;
        m(k + 1, k) = rho;
        m(k + 1, k + 1) = -a;
    }
}

}  // namespace

CmvTruncation build_truncation(const VerblunskySeq& seq, std::size_t N,
                               std::optional<cplx> last_override) {
    if (N < 1) {
        throw Error(Errc::precondition, "CMV truncation needs N >= 1");
    }
    std::vector<cplx> a = seq.alphas(N);
    if (last_override) {
        if (!(std::abs(*last_override) <= 1.0 + 1e-14)) {
            throw Error(Errc::invalid_parameter, "override for alpha_{N-1} must lie in the closed disk");
        }
        a[N - 1] = *last_override;
    }
    Mat L = Mat::Zero(N, N);
    Mat M = Mat::Zero(N, N);
    M(0, 0) = 1.0;
    for (std::size_t k = 0; k < N; k += 2) {
        put_theta(L, k, a[k], N);
    }
    for (std::size_t k = 1; k < N; k += 2) {
        put_theta(M, k, a[k], N);
    }
    const Mat C = L * M;
    CmvTruncation t;
    t.N = N;
    t.entries.resize(N * N);
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) {
            // Products of zeros stay exact; only the band can be nonzero.
            t.entries[i * N + j] = C(i, j);
        }
    }
    return t;
}

CoeffVec char_poly(const CmvTruncation& trunc) {
    const std::size_t N = trunc.N;
    if (N > kCharPolyMaxN) {
        throw Error(Errc::size_limit, "char_poly is limited to N <= 64");
    }
    Eigen::HessenbergDecomposition<Mat> hd(to_eigen(trunc));
    const Mat H = hd.matrixH();
    // p_k(z) = (z - h_kk) p_{k-1}(z)
    //          - sum_{i<k} h_ik (prod_{m=i+1..k} h_{m,m-1}) p_{i-1}(z)
    std::vector<CoeffVec> p(N + 1);
    p[0] = {cplx(1.0)};
    for (std::size_t k = 1; k <= N; ++k) {
        CoeffVec next(k + 1, cplx(0.0));
        const CoeffVec& prev = p[k - 1];
        const cplx hkk = H(k - 1, k - 1);
        for (std::size_t d = 0; d < prev.size(); ++d) {
            next[d + 1] += prev[d];
            next[d] -= hkk * prev[d];
        }
        cplx sub(1.0);
        for (std::size_t i = k - 1; i-- > 0;) {
            sub *= H(i + 1, i);
            const cplx coef = H(i, k - 1) * sub;
            if (coef == cplx(0.0)) {
                continue;
            }
            const CoeffVec& q = p[i];
            for (std::size_t d = 0; d < q.size(); ++d) {
                next[d] -= coef * q[d];
            }
        }
        p[k] = std::move(next);
    }
    p[N][N] = 1.0;
    return p[N];
}

std::vector<cplx> normalized_moments(const CmvTruncation& trunc, std::size_t k_max) {
    if (k_max < 1) {
        throw Error(Errc::precondition, "normalized_moments needs k_max >= 1");
    }
    const Mat C = to_eigen(trunc);
    Mat P = C;
    std::vector<cplx> m(k_max);
    const double inv = 1.0 / static_cast<double>(trunc.N);
    for (std::size_t k = 0; k < k_max; ++k) {
        m[k] = P.trace() * inv;
        if (k + 1 < k_max) {
            P = P * C;
        }
    }
    return m;
}

std::vector<cplx> cmv_eigenvalues(const CmvTruncation& trunc) {
    Eigen::ComplexEigenSolver<Mat> es(to_eigen(trunc), false);
    if (es.info() != Eigen::Success) {
        throw Error(Errc::non_convergence, "CMV eigensolver failed");
    }
    const auto& ev = es.eigenvalues();
    return std::vector<cplx>(ev.data(), ev.data() + ev.size());
}

}  // namespace opuc
