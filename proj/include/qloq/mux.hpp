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

#include <algorithm>
#include <set>
#include <vector>

#include "qloq/circuit.hpp"
#include "qloq/common.hpp"
#include "qloq/linalg.hpp"

namespace qloq {

/**
 * Rotation multiplexor: applies Ry/Rz(theta_t) to the target for each
 * computational state t of the select qubits (selects[0] is the most
 * significant bit of t).
 */
struct MultiplexorSpec {
    GateKind axis = GateKind::Rz; // Ry or Rz
    std::vector<int> selects;
    int target = 0;
    std::vector<double> theta;

    int select_count() const { return static_cast<int>(selects.size()); }

    void validate() const {
        require(axis == GateKind::Ry || axis == GateKind::Rz, "multiplexor axis must be Y or Z");
        require(theta.size() == (std::size_t{1} << selects.size()),
                "angle vector length must be 2^s");
        std::set<int> seen(selects.begin(), selects.end());
        require(seen.size() == selects.size(), "select qubits must be distinct");
        require(!seen.count(target), "target cannot be a select");
    }

    /// Dense unitary over (selects..., target), target least significant.
    Mat matrix() const {
        validate();
        const Eigen::Index m = Eigen::Index(1) << selects.size();
        Mat u = Mat::Zero(2 * m, 2 * m);
        for (Eigen::Index t = 0; t < m; ++t)
            u.block(2 * t, 2 * t, 2, 2) = (axis == GateKind::Ry) ? ry(theta[t]) : rz(theta[t]);
        return u;
    }
};

namespace detail {

struct MuxElement {
    bool level_gate = false; // level-controlled flip on the carrier, else external CX
    int value = 0;           // carrier level, or external select position
};

/// Cyclic reflected-Gray transition bit sequence (bit 0 = least significant).
inline std::vector<int> gray_transitions(int e) {
    std::vector<int> t;
    if (e == 0) return t;
    for (int i = 0; i + 1 < (1 << e); ++i) {
        int v = i + 1;
        int b = 0;
        while (!(v & 1)) { v >>= 1; ++b; }
        t.push_back(b);
    }
    t.push_back(e - 1);
    return t;
}

/**
 * Entangler schedule for a multiplexor whose selects split into a carrier
 * digit of 2^g values and e external bits, 2^{g+e} gates total. With no
 * externals the schedule cycles once through every carrier level and a final
 * local NOT on the target restores net identity (each select state then
 * triggers an even number of NOTs). With externals, each block walks the
 * carrier levels short of one and hands over to a Gray-coded external CX, so
 * every state already fires evenly.
 */
inline std::vector<MuxElement> mux_schedule(int g, int e, bool& xfix) {
    std::vector<MuxElement> seq;
    if (e == 0) {
        for (int lvl = 0; lvl < (1 << g); ++lvl) seq.push_back({true, lvl});
        xfix = g > 0;
        return seq;
    }
    const auto trans = gray_transitions(e);
    for (int blk = 0; blk < (1 << e); ++blk) {
        for (int lvl = 0; lvl + 1 < (1 << g); ++lvl) seq.push_back({true, lvl});
        seq.push_back({false, trans[blk]});
    }
    xfix = false;
    return seq;
}

} // namespace detail

/// Solves theta = S a for the interleaved rotation angles. For the canonical
/// Walsh-type sign matrix this reduces to a = S^T theta / 2^s; the general
/// solve covers every invertible schedule.
inline std::vector<double> mux_angles_solve(const std::vector<double>& theta, const RMat& sign) {
    require(sign.rows() == sign.cols(), "sign matrix must be square");
    require(static_cast<Eigen::Index>(theta.size()) == sign.rows(),
            "angle count must match the sign system");
    Eigen::VectorXd rhs(theta.size());
    for (std::size_t i = 0; i < theta.size(); ++i) rhs(static_cast<Eigen::Index>(i)) = theta[i];
    Eigen::FullPivLU<RMat> lu(sign);
    require(lu.isInvertible(), "singular multiplexor sign matrix");
    Eigen::VectorXd a = lu.solve(rhs);
    return {a.data(), a.data() + a.size()};
}

/**
 * Lowers a rotation multiplexor onto a QLOQ map using exactly 2^s two-level
 * entanglers. Selects resident on (at most) one multi-qubit carrier are
 * folded into level-controlled entanglers; every external select contributes
 * Gray-coded CXs, two of which cancel per added select, keeping the count at
 * 2^s. The emitted fragment equals the multiplexor unitary exactly.
 */
inline PhysicalCircuit mux_to_physical(const MultiplexorSpec& spec, const QloqMap& map) {
    spec.validate();
    PhysicalCircuit pc;
    pc.map = map;

    const int tc = map.carrier_of(spec.target);
    require(map.carrier_qubits(tc) == 1, "multiplexor target must sit on a single-qubit carrier");

    // split selects into the carrier group and externals
    int carrier = -1;
    std::vector<int> externals;
    for (int q : spec.selects) {
        const int c = map.carrier_of(q);
        if (map.carrier_qubits(c) > 1) {
            require(carrier == -1 || carrier == c,
                    "multiplexor supports at most one multi-qubit carrier");
            carrier = c;
        } else {
            externals.push_back(q);
        }
    }
    int g = 0;
    if (carrier >= 0) {
        g = map.carrier_qubits(carrier);
        for (int q : map.partition[carrier])
            require(std::find(spec.selects.begin(), spec.selects.end(), q) != spec.selects.end(),
                    "every qubit of the select carrier must be a select");
    }
    const int e = static_cast<int>(externals.size());
    const int s = spec.select_count();
    require(g + e == s, "select bookkeeping failed");

    if (s == 0) {
        const Mat r = (spec.axis == GateKind::Ry) ? ry(spec.theta[0]) : rz(spec.theta[0]);
        pc.ops.push_back(PhysicalOp::local(tc, r));
        return pc;
    }

    bool xfix = false;
    const auto schedule = detail::mux_schedule(g, e, xfix);
    const int slots = 1 << s;

    // map a list-order select state t to (carrier level, external bits)
    auto decode = [&](int t, int& level, int& ext) {
        level = 0;
        ext = 0;
        for (int i = 0; i < s; ++i) {
            const int bit = (t >> (s - 1 - i)) & 1;
            const int q = spec.selects[i];
            const int c = map.carrier_of(q);
            if (c == carrier)
                level |= bit << (g - 1 - map.slot_of(q));
            else {
                const auto pos = std::find(externals.begin(), externals.end(), q) -
                                 externals.begin();
                ext |= bit << (e - 1 - static_cast<int>(pos));
            }
        }
    };

    RMat sign(slots, slots);
    for (int t = 0; t < slots; ++t) {
        int level = 0, ext = 0;
        decode(t, level, ext);
        int parity = 0;
        for (int ell = 0; ell < slots; ++ell) {
            sign(t, ell) = parity ? -1.0 : 1.0;
            const auto& el = schedule[ell];
            const bool fires = el.level_gate ? (level == el.value) : ((ext >> el.value) & 1);
            if (fires) parity ^= 1;
        }
    }
    const std::vector<double> a = mux_angles_solve(spec.theta, sign);

    for (int ell = 0; ell < slots; ++ell) {
        const Mat r = (spec.axis == GateKind::Ry) ? ry(a[ell]) : rz(a[ell]);
        pc.ops.push_back(PhysicalOp::local(tc, r));
        const auto& el = schedule[ell];
        if (el.level_gate)
            pc.ops.push_back(PhysicalOp::cx(carrier, el.value, tc, 0, 1));
        else {
            const int ec = map.carrier_of(externals[e - 1 - el.value]);
            pc.ops.push_back(PhysicalOp::cx(ec, 1, tc, 0, 1));
        }
    }
    if (xfix) pc.ops.push_back(PhysicalOp::local(tc, pauli_x()));
    return pc;
}

} // namespace qloq
