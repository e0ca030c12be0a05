// Copyright 2026 The qloq authors
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

#pragma once

#include <vector>

#include "qloq/common.hpp"
#include "qloq/linalg.hpp"

namespace qloq {

/**
 * Cosine-sine factors of a 2m x 2m unitary:
 *
 *   U = [A1   ] [C  -S] [B1   ]
 *       [   A2] [S   C] [   B2]
 *
 * with C = diag(cos theta), S = diag(sin theta), theta in [0, pi/2] sorted
 * ascending (cosines descending). The middle factor is a multiplexed Y
 * rotation; the block-diagonal factors feed the demultiplexing step.
 */
struct CsdFactors {
    Mat a1, a2;
    Eigen::VectorXd theta;
    Mat b1, b2;

    Mat reassemble() const {
        const Eigen::Index m = a1.rows();
        Mat c = Mat::Zero(m, m), s = Mat::Zero(m, m);
        for (Eigen::Index i = 0; i < m; ++i) {
            c(i, i) = std::cos(theta(i));
            s(i, i) = std::sin(theta(i));
        }
        Mat u(2 * m, 2 * m);
        u.topLeftCorner(m, m) = a1 * c * b1;
        u.topRightCorner(m, m) = -a1 * s * b2;
        u.bottomLeftCorner(m, m) = a2 * s * b1;
        u.bottomRightCorner(m, m) = a2 * c * b2;
        return u;
    }
};

namespace detail {

/// Extends a set of orthonormal columns to a full unitary (Gram-Schmidt
/// against identity candidates, deterministic).
inline Mat complete_columns(const Mat& cols, Eigen::Index m) {
    std::vector<Vec> basis;
    for (Eigen::Index j = 0; j < cols.cols(); ++j) basis.push_back(cols.col(j));
    for (Eigen::Index cand = 0; cand < m && static_cast<Eigen::Index>(basis.size()) < m;
         ++cand) {
        Vec v = Vec::Zero(m);
        v(cand) = 1.0;
        for (int pass = 0; pass < 2; ++pass)
            for (const Vec& u : basis) v -= u * (u.dot(v));
        const double nn = v.norm();
        if (nn > 1e-6) basis.push_back(v / nn);
    }
    require(static_cast<Eigen::Index>(basis.size()) == m, "column completion failed");
    Mat out(m, m);
    for (Eigen::Index j = 0; j < m; ++j) out.col(j) = basis[j];
    return out;
}

} // namespace detail

/**
 * Cosine-sine decomposition via SVD of the upper-left block, followed by a
 * few alternating orthogonal-Procrustes polish sweeps. The initial
 * construction divides by sines where they are safely large and completes
 * the degenerate (theta ~ 0) cluster explicitly; the polish step then pushes
 * the residual to machine precision, which also resolves gauge coupling
 * between near-degenerate clusters.
 */
inline CsdFactors cosine_sine_decompose(const Mat& u, double tol = 1e-7) {
    require(u.rows() == u.cols() && u.rows() % 2 == 0,
            "cosine-sine decomposition needs even dimension");
    require(is_unitary(u, 1e-9), "input is not unitary");
    const Eigen::Index m = u.rows() / 2;
    const Mat u00 = u.topLeftCorner(m, m), u01 = u.topRightCorner(m, m);
    const Mat u10 = u.bottomLeftCorner(m, m), u11 = u.bottomRightCorner(m, m);

    Eigen::JacobiSVD<Mat> svd(u00, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Mat a1 = svd.matrixU();
    Mat b1 = svd.matrixV().adjoint();
    Eigen::VectorXd c = svd.singularValues().cwiseMin(1.0).cwiseMax(0.0);
    Eigen::VectorXd s(m);
    for (Eigen::Index i = 0; i < m; ++i) s(i) = std::sqrt(1.0 - c(i) * c(i));

    Mat a2 = Mat::Zero(m, m), b2 = Mat::Zero(m, m);
    const Mat z = u10 * b1.adjoint();  // = A2 S
    const Mat w = a1.adjoint() * u01;  // = -S B2
    std::vector<Eigen::Index> big, small;
    for (Eigen::Index i = 0; i < m; ++i) (s(i) > tol ? big : small).push_back(i);

    Mat a2_big(m, static_cast<Eigen::Index>(big.size()));
    for (std::size_t k = 0; k < big.size(); ++k) {
        a2.col(big[k]) = z.col(big[k]) / s(big[k]);
        a2_big.col(k) = a2.col(big[k]);
        b2.row(big[k]) = -w.row(big[k]) / s(big[k]);
    }
    if (!small.empty()) {
        Mat filled = detail::complete_columns(a2_big, m);
        for (std::size_t k = 0; k < small.size(); ++k)
            a2.col(small[k]) = filled.col(static_cast<Eigen::Index>(big.size() + k));
        Mat b2_rows(m, static_cast<Eigen::Index>(big.size()));
        for (std::size_t k = 0; k < big.size(); ++k) b2_rows.col(k) = b2.row(big[k]).adjoint();
        Mat filled_b = detail::complete_columns(b2_rows, m);
        for (std::size_t k = 0; k < small.size(); ++k)
            b2.row(small[k]) = filled_b.col(static_cast<Eigen::Index>(big.size() + k)).adjoint();
        // gauge-fix the free cluster against the lower-right block
        Mat t = a2.adjoint() * u11 * b2.adjoint();
        Mat tb(static_cast<Eigen::Index>(small.size()), static_cast<Eigen::Index>(small.size()));
        for (std::size_t r = 0; r < small.size(); ++r)
            for (std::size_t cc = 0; cc < small.size(); ++cc) tb(r, cc) = t(small[r], small[cc]);
        Mat fix = polar_unitary(tb);
        Mat blk(m, static_cast<Eigen::Index>(small.size()));
        for (std::size_t k = 0; k < small.size(); ++k) blk.col(k) = a2.col(small[k]);
        blk = blk * fix;
        for (std::size_t k = 0; k < small.size(); ++k) a2.col(small[k]) = blk.col(k);
    }

    CsdFactors f;
    f.a1 = a1;
    f.a2 = a2;
    f.b1 = b1;
    f.b2 = b2;
    f.theta.resize(m);
    for (Eigen::Index i = 0; i < m; ++i) f.theta(i) = std::atan2(s(i), c(i));

    for (int sweep = 0; sweep < 40; ++sweep) {
        if (max_abs(f.reassemble() - u) < 1e-13) break;
        Mat cd = Mat::Zero(m, m), sd = Mat::Zero(m, m);
        for (Eigen::Index i = 0; i < m; ++i) {
            cd(i, i) = std::cos(f.theta(i));
            sd(i, i) = std::sin(f.theta(i));
        }
        f.a1 = polar_unitary(u00 * f.b1.adjoint() * cd - u01 * f.b2.adjoint() * sd);
        f.a2 = polar_unitary(u10 * f.b1.adjoint() * sd + u11 * f.b2.adjoint() * cd);
        f.b1 = polar_unitary(cd * f.a1.adjoint() * u00 + sd * f.a2.adjoint() * u10);
        f.b2 = polar_unitary(cd * f.a2.adjoint() * u11 - sd * f.a1.adjoint() * u01);
        for (Eigen::Index i = 0; i < m; ++i) {
            const double dc = std::max(0.0, (f.a1.adjoint() * u00 * f.b1.adjoint())(i, i).real());
            const double ds = std::max(0.0, (f.a2.adjoint() * u10 * f.b1.adjoint())(i, i).real());
            f.theta(i) = std::atan2(ds, dc);
        }
    }
    require(max_abs(f.reassemble() - u) < 1e-10, "cosine-sine decomposition did not converge");
    return f;
}

} // namespace qloq
