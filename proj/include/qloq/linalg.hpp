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

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <vector>

#include "qloq/common.hpp"
#include "qloq/rng.hpp"

namespace qloq {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;

inline Mat dagger(const Mat& m) { return m.adjoint(); }

inline double max_abs(const Mat& m) { return m.cwiseAbs().maxCoeff(); }

inline bool is_unitary(const Mat& u, double tol = 1e-10) {
    if (u.rows() != u.cols()) return false;
    return max_abs(u.adjoint() * u - Mat::Identity(u.rows(), u.cols())) < tol;
}

inline Mat kron(const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

/// Haar-distributed random unitary (QR of a complex Ginibre matrix with
/// phase-normalized R diagonal).
inline Mat random_unitary(int dim, Rng& rng) {
    Mat g(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) g(i, j) = cxd(rng.normal(), rng.normal());
    Eigen::HouseholderQR<Mat> qr(g);
    Mat q = qr.householderQ();
    Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < dim; ++i) {
        cxd d = r(i, i);
        double a = std::abs(d);
        q.col(i) *= (a > 0) ? d / a : cxd(1, 0);
    }
    return q;
}

inline Mat random_unitary(int dim, std::uint64_t seed) {
    Rng rng(seed);
    return random_unitary(dim, rng);
}

/// Unitary polar factor of a (square, full-rank) matrix.
inline Mat polar_unitary(const Mat& m) {
    Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    return svd.matrixU() * svd.matrixV().adjoint();
}

/**
 * Simultaneously diagonalizes a commuting pair of Hermitian matrices.
 *
 * Eigenvectors of `a` are computed first; within each eigenvalue cluster
 * (tolerance `cluster_tol`) the restriction of `b` is diagonalized, which
 * resolves the within-cluster freedom. The returned basis is unitary and
 * diagonalizes both inputs. Used for the eigenstructure of normal matrices
 * (split into commuting Hermitian and anti-Hermitian parts), where repeated
 * eigenvalues would otherwise yield non-orthogonal eigenvector sets.
 */
inline Mat simdiag_hermitian(const Mat& a, const Mat& b, double cluster_tol = 1e-8) {
    const Eigen::Index n = a.rows();
    Eigen::SelfAdjointEigenSolver<Mat> es(a);
    Mat p = es.eigenvectors();
    Eigen::VectorXd w = es.eigenvalues();
    Eigen::Index i = 0;
    while (i < n) {
        Eigen::Index j = i;
        while (j + 1 < n && std::abs(w(j + 1) - w(i)) < cluster_tol) ++j;
        if (j > i) {
            Mat blk = p.middleCols(i, j - i + 1);
            Mat sub = blk.adjoint() * b * blk;
            sub = (sub + sub.adjoint()) / 2.0;
            Eigen::SelfAdjointEigenSolver<Mat> es2(sub);
            p.middleCols(i, j - i + 1) = blk * es2.eigenvectors();
        }
        i = j + 1;
    }
    return p;
}

/// Real-symmetric variant of the simultaneous diagonalization above; returns
/// a real orthogonal basis.
inline RMat simdiag_symmetric(const RMat& a, const RMat& b, double cluster_tol = 1e-8) {
    const Eigen::Index n = a.rows();
    Eigen::SelfAdjointEigenSolver<RMat> es(a);
    RMat p = es.eigenvectors();
    Eigen::VectorXd w = es.eigenvalues();
    Eigen::Index i = 0;
    while (i < n) {
        Eigen::Index j = i;
        while (j + 1 < n && std::abs(w(j + 1) - w(i)) < cluster_tol) ++j;
        if (j > i) {
            RMat blk = p.middleCols(i, j - i + 1);
            RMat sub = blk.transpose() * b * blk;
            sub = (sub + sub.transpose()) / 2.0;
            Eigen::SelfAdjointEigenSolver<RMat> es2(sub);
            p.middleCols(i, j - i + 1) = blk * es2.eigenvectors();
        }
        i = j + 1;
    }
    return p;
}

/// Unit-modulus eigenvalues and a unitary eigenbasis of a unitary matrix.
/// Robust to repeated eigenvalues (clusters are re-orthonormalized).
inline void unitary_eig(const Mat& u, Vec& eigs, Mat& basis, double cluster_tol = 1e-8) {
    Mat h1 = (u + u.adjoint()) / 2.0;
    Mat h2 = (u - u.adjoint()) / cxd(0, 2);
    basis = simdiag_hermitian(h1, h2, cluster_tol);
    Mat d = basis.adjoint() * u * basis;
    eigs = d.diagonal();
    for (Eigen::Index i = 0; i < eigs.size(); ++i) eigs(i) /= std::abs(eigs(i));
}

/// Splits an exact Kronecker product X = A (x) B of two unitaries into
/// factors with det(B) = 1. X must be (2m x 2m) with B of size (p x p).
inline void split_kron(const Mat& x, Eigen::Index p, Mat& a, Mat& b) {
    const Eigen::Index rows_a = x.rows() / p;
    Eigen::Index pr = 0, pc = 0;
    double best = -1.0;
    for (Eigen::Index i = 0; i < x.rows(); ++i)
        for (Eigen::Index j = 0; j < x.cols(); ++j)
            if (std::abs(x(i, j)) > best) { best = std::abs(x(i, j)); pr = i; pc = j; }
    const Eigen::Index r0 = pr / p, s0 = pr % p, c0 = pc / p, d0 = pc % p;
    Mat bp = x.block(r0 * p, c0 * p, p, p);
    cxd mu = std::sqrt(bp.determinant());
    b = bp / mu;
    a.resize(rows_a, rows_a);
    for (Eigen::Index r = 0; r < rows_a; ++r)
        for (Eigen::Index c = 0; c < rows_a; ++c) a(r, c) = x(r * p + s0, c * p + d0) / b(s0, d0);
}

// 2x2 primitives ------------------------------------------------------------

inline Mat mat2(cxd a, cxd b, cxd c, cxd d) {
    Mat m(2, 2);
    m << a, b, c, d;
    return m;
}

inline Mat pauli_x() { return mat2(0, 1, 1, 0); }
inline Mat pauli_y() { return mat2(0, cxd(0, -1), cxd(0, 1), 0); }
inline Mat pauli_z() { return mat2(1, 0, 0, -1); }
inline Mat hadamard() { return mat2(1, 1, 1, -1) / std::sqrt(2.0); }
inline Mat sgate() { return mat2(1, 0, 0, cxd(0, 1)); }

inline Mat rx(double t) {
    double c = std::cos(t / 2), s = std::sin(t / 2);
    return mat2(c, cxd(0, -s), cxd(0, -s), c);
}
inline Mat ry(double t) {
    double c = std::cos(t / 2), s = std::sin(t / 2);
    return mat2(c, -s, s, c);
}
inline Mat rz(double t) {
    return mat2(std::exp(cxd(0, -t / 2)), 0, 0, std::exp(cxd(0, t / 2)));
}

} // namespace qloq
