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

#include "qloq/common.hpp"
#include "qloq/linalg.hpp"

namespace qloq {

/// Factorization of a unitary pair: u1 = V D W and u2 = V D^dag W with D
/// diagonal unit-modulus. `angles` holds arg(D).
struct Demux {
    Mat v;
    Eigen::VectorXd angles;
    Mat w;

    Mat d() const {
        Mat out = Mat::Zero(angles.size(), angles.size());
        for (Eigen::Index i = 0; i < angles.size(); ++i) out(i, i) = std::exp(cxd(0, angles(i)));
        return out;
    }
};

/**
 * Demultiplexes (u1, u2) through the eigendecomposition of u1 u2^dag.
 * The product is normal; its Hermitian and anti-Hermitian parts commute and
 * are diagonalized simultaneously, so repeated eigenvalues (u1 = u2 being the
 * extreme case) still yield an orthonormal V. D is the principal square root
 * of the eigenvalues and W = D^dag V^dag u1.
 */
inline Demux demultiplex(const Mat& u1, const Mat& u2) {
    require(u1.rows() == u1.cols() && u2.rows() == u2.cols() && u1.rows() == u2.rows(),
            "demultiplex needs equal square inputs");
    require(is_unitary(u1, 1e-9) && is_unitary(u2, 1e-9), "demultiplex inputs must be unitary");
    const Mat x = u1 * u2.adjoint();
    Vec eigs;
    Mat basis;
    unitary_eig(x, eigs, basis);

    Demux out;
    out.v = basis;
    out.angles.resize(eigs.size());
    for (Eigen::Index i = 0; i < eigs.size(); ++i) out.angles(i) = std::arg(eigs(i)) / 2.0;
    out.w = out.d().adjoint() * basis.adjoint() * u1;
    return out;
}

} // namespace qloq
