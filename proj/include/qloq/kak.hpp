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

#include "qloq/circuit.hpp"
#include "qloq/common.hpp"
#include "qloq/linalg.hpp"

namespace qloq {

/**
 * Canonical two-qubit form: U = e^{i phase} (A1 x A2) N(ax,ay,az) (B1 x B2)
 * with N(a,b,c) = exp(i (a XX + b YY + c ZZ)).
 *
 * Obtained in the magic basis: the magic form of U is factored as
 * Q D P^T with Q, P real special orthogonal and D unitary diagonal; the
 * orthogonal factors conjugate back to tensor products of single-qubit
 * unitaries, and D carries the canonical angles.
 */
struct TwoQubitKak {
    double phase = 0.0;
    Mat a1, a2;
    double ax = 0, ay = 0, az = 0;
    Mat b1, b2;
};

inline Mat magic_basis() {
    Mat m(4, 4);
    const double s = 1.0 / std::sqrt(2.0);
    const cxd i(0, 1);
    m << s, i * s, 0, 0,
         0, 0, i * s, s,
         0, 0, i * s, -s,
         s, -i * s, 0, 0;
    return m;
}

/// exp(i (a XX + b YY + c ZZ)); test oracle for the canonical factor.
inline Mat canonical_gate(double a, double b, double c) {
    const Mat xx = kron(pauli_x(), pauli_x());
    const Mat yy = kron(pauli_y(), pauli_y());
    const Mat zz = kron(pauli_z(), pauli_z());
    // XX, YY, ZZ commute; exponentiate via the shared Bell eigenbasis.
    Mat gen = a * xx + b * yy + c * zz;
    Eigen::SelfAdjointEigenSolver<Mat> es(gen);
    Mat d = Mat::Zero(4, 4);
    for (int k = 0; k < 4; ++k) d(k, k) = std::exp(cxd(0, es.eigenvalues()(k)));
    return es.eigenvectors() * d * es.eigenvectors().adjoint();
}

inline TwoQubitKak kak_decompose(const Mat& u) {
    require(u.rows() == 4 && u.cols() == 4, "kak expects a 4x4 unitary");
    require(is_unitary(u, 1e-9), "kak input is not unitary");

    TwoQubitKak out;
    const cxd det = u.determinant();
    out.phase = std::arg(det) / 4.0;
    const Mat us = u * std::exp(cxd(0, -out.phase));

    const Mat m = magic_basis();
    const Mat v = m.adjoint() * us * m;
    const Mat w = v.transpose() * v;

    RMat wr = w.real();
    RMat wi = w.imag();
    wr = (wr + wr.transpose()) / 2.0;
    wi = (wi + wi.transpose()) / 2.0;
    RMat p = simdiag_symmetric(wr, wi);
    if (p.determinant() < 0) p.col(0) = -p.col(0);

    const Mat pc = p.cast<cxd>();
    Vec d2 = (pc.transpose() * w * pc).diagonal();
    std::vector<double> phi(4);
    for (int k = 0; k < 4; ++k) phi[k] = std::arg(d2(k)) / 2.0;
    double total = phi[0] + phi[1] + phi[2] + phi[3];
    if (std::abs(std::exp(cxd(0, total)) - cxd(1, 0)) > 1.0) phi[0] += kPi; // det(D) branch

    Mat dinv = Mat::Zero(4, 4);
    for (int k = 0; k < 4; ++k) dinv(k, k) = std::exp(cxd(0, -phi[k]));
    Mat q = v * pc * dinv;
    require(q.imag().cwiseAbs().maxCoeff() < 1e-7, "magic form failed to realize");

    const Mat left = m * q * m.adjoint();
    const Mat right = m * pc.transpose() * m.adjoint();
    split_kron(left, 2, out.a1, out.a2);
    split_kron(right, 2, out.b1, out.b2);

    out.ax = (phi[0] + phi[2]) / 2.0;
    out.ay = (phi[1] + phi[2]) / 2.0;
    out.az = (phi[0] + phi[1]) / 2.0;
    return out;
}

inline Mat kak_reconstruct(const TwoQubitKak& k) {
    return std::exp(cxd(0, k.phase)) * kron(k.a1, k.a2) *
           canonical_gate(k.ax, k.ay, k.az) * kron(k.b1, k.b2);
}

/**
 * Emits an arbitrary two-qubit unitary on single-qubit carriers (cp, cq) as
 * exactly three two-level entanglers plus local gates.
 *
 * The canonical factor expands, with K1 = CNOT(p;q) and K2 = CNOT(q;p), as
 *
 *   N(a,b,c) = K1 (H e^{iaZ} (x) I) K2 (e^{-ibZ} H S (x) Rz(-2c) S H) CZ (I (x) H S^dag)
 *
 * which follows from conjugating the commuting generator triple through K1,
 * writing the residual two-parameter factor as a Z-rotation multiplexor, and
 * absorbing the trailing CZ * CNOT pair into one CZ by diagonalizing the
 * controlled ZX it represents. The identity is exact including global phase.
 */
inline std::vector<PhysicalOp> two_qubit_ops(const Mat& u, int cp, int cq) {
    const TwoQubitKak k = kak_decompose(u);
    const Mat h = hadamard(), s = sgate();
    auto ez = [](double t) { return mat2(std::exp(cxd(0, t)), 0, 0, std::exp(cxd(0, -t))); };

    std::vector<PhysicalOp> ops;
    ops.push_back(PhysicalOp::local(cp, k.b1));
    ops.push_back(PhysicalOp::local(cq, Mat(h * s.adjoint() * k.b2)));
    ops.push_back(PhysicalOp::cz(cp, 1, cq, 0, 1));
    ops.push_back(PhysicalOp::local(cp, Mat(ez(-k.ay) * h * s)));
    ops.push_back(PhysicalOp::local(cq, Mat(rz(-2.0 * k.az) * s * h)));
    ops.push_back(PhysicalOp::cx(cq, 1, cp, 0, 1));
    ops.push_back(PhysicalOp::local(cp, Mat(h * ez(k.ax))));
    ops.push_back(PhysicalOp::cx(cp, 1, cq, 0, 1));
    ops.push_back(PhysicalOp::local(cp, Mat(std::exp(cxd(0, k.phase)) * k.a1)));
    ops.push_back(PhysicalOp::local(cq, k.a2));
    return ops;
}

} // namespace qloq
