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

#include <string>
#include <vector>

#include "qloq/circuit.hpp"
#include "qloq/common.hpp"
#include "qloq/cost.hpp"
#include "qloq/csd.hpp"
#include "qloq/demux.hpp"
#include "qloq/embed.hpp"
#include "qloq/kak.hpp"
#include "qloq/mux.hpp"

namespace qloq {

enum class QsdMode { Qubit, Qloq };

struct QsdResult {
    PhysicalCircuit circuit;
    CostReport report; // one row per synthesis stage; total = entangler count
};

namespace detail {

struct QsdEngine {
    const QloqMap& map;
    std::vector<int> qubits; // qubit ids the unitary acts on, MSB first
    int terminal = 2;        // recursion stops at this width
    bool terminal_local = false;
    PhysicalCircuit out;
    CostReport report;

    QsdEngine(const QloqMap& m) : map(m) { out.map = m; }

    void add_stage(long long k, CostRule rule, std::string note) {
        GateCost gc;
        gc.gate_index = static_cast<int>(report.per_gate.size());
        gc.k = k;
        gc.rule = rule;
        gc.note = std::move(note);
        report.total += k;
        report.per_gate.push_back(std::move(gc));
    }

    void emit_mux(GateKind axis, int offset, const std::vector<double>& theta) {
        MultiplexorSpec spec;
        spec.axis = axis;
        spec.target = qubits[offset];
        spec.selects.assign(qubits.begin() + offset + 1, qubits.end());
        spec.theta = theta;
        PhysicalCircuit frag = mux_to_physical(spec, map);
        out.append(frag);
        add_stage(frag.entangler_count(), CostRule::BridgeEq1,
                  "multiplexor s=" + std::to_string(spec.select_count()));
    }

    // Emits ops for `u` acting on qubits[offset..]; time order is handled by
    // the caller composing sub-circuits left-to-right.
    void synth(const Mat& u, int offset) {
        const int width = static_cast<int>(qubits.size()) - offset;
        if (width <= terminal) {
            emit_terminal(u, offset);
            return;
        }
        CsdFactors csd = cosine_sine_decompose(u);
        Demux db = demultiplex(csd.b1, csd.b2);
        Demux da = demultiplex(csd.a1, csd.a2);

        const Eigen::Index half = csd.theta.size();
        std::vector<double> rz_b(half), rz_a(half), ry_mid(half);
        for (Eigen::Index i = 0; i < half; ++i) {
            rz_b[i] = -2.0 * db.angles(i);
            rz_a[i] = -2.0 * da.angles(i);
            ry_mid[i] = 2.0 * csd.theta(i);
        }

        synth(db.w, offset + 1);
        emit_mux(GateKind::Rz, offset, rz_b);
        synth(db.v, offset + 1);
        emit_mux(GateKind::Ry, offset, ry_mid);
        synth(da.w, offset + 1);
        emit_mux(GateKind::Rz, offset, rz_a);
        synth(da.v, offset + 1);
    }

    void emit_terminal(const Mat& u, int offset) {
        const int width = static_cast<int>(qubits.size()) - offset;
        if (terminal_local) {
            // all terminal qubits live on one carrier: a free local unitary
            const int c = map.carrier_of(qubits[offset]);
            LogicalGate block =
                LogicalGate::unitary({qubits.begin() + offset, qubits.end()}, u);
            out.ops.push_back(PhysicalOp::local(c, embedded_matrix(map, c, block)));
            add_stage(0, CostRule::Internal, "terminal carrier-local block");
            return;
        }
        if (width == 1) {
            out.ops.push_back(PhysicalOp::local(map.carrier_of(qubits[offset]), u));
            add_stage(0, CostRule::Internal, "terminal single-qubit block");
            return;
        }
        require(width == 2, "qubit-mode recursion bottoms out at two qubits");
        auto ops = two_qubit_ops(u, map.carrier_of(qubits[offset]),
                                 map.carrier_of(qubits[offset + 1]));
        for (auto& op : ops) out.ops.push_back(op);
        add_stage(3, CostRule::BridgeEq1, "terminal two-qubit block");
    }
};

} // namespace detail

/**
 * Shannon decomposition of an n-qubit unitary (recursive cosine-sine split
 * plus demultiplexing).
 *
 * Qubit mode bottoms out at two-qubit blocks costing 3 entanglers each; the
 * total equals 4^{n-2}(3 + 6) - 3*2^{n-1}. Qloq mode places the last g
 * qubits on one carrier, where the final g-qubit blocks are free local
 * operations, for a total of 3*4^{n-g}*2^{g-1} - 3*2^{n-1}. Output equality
 * with the input is exact, global phase included.
 */
inline QsdResult synthesize_qsd(const Mat& u, QsdMode mode, int lg = 2) {
    require(u.rows() == u.cols(), "unitary must be square");
    int n = 0;
    while ((Eigen::Index(1) << n) < u.rows()) ++n;
    require((Eigen::Index(1) << n) == u.rows(), "dimension must be a power of two");
    require(is_unitary(u, 1e-9), "input is not unitary");

    QloqMap map;
    if (mode == QsdMode::Qubit) {
        require(lg == 2, "qubit mode bottoms out at two-qubit blocks");
        require(n >= 1, "need at least one qubit");
        map = QloqMap::qubit_encoding(n);
    } else {
        require(lg >= 1 && lg < n, "qloq mode requires 1 <= g < n");
        std::vector<std::vector<int>> part;
        for (int q = 0; q < n - lg; ++q) part.push_back({q});
        std::vector<int> carrier;
        for (int q = n - lg; q < n; ++q) carrier.push_back(q);
        part.push_back(carrier);
        map = QloqMap(part);
    }

    detail::QsdEngine engine(map);
    for (int q = 0; q < n; ++q) engine.qubits.push_back(q);
    engine.terminal = (mode == QsdMode::Qubit) ? std::min(2, n) : lg;
    engine.terminal_local = (mode == QsdMode::Qloq && lg >= 2);
    engine.synth(u, 0);
    return {std::move(engine.out), std::move(engine.report)};
}

// ---------------------------------------------------------------------------
// Mid-circuit remapping
// ---------------------------------------------------------------------------

enum class RemapDirection { Merge, Split, RoundTrip };

/**
 * Remapping fragment over f payload qubits. The layout models the physical
 * space: payload qubit 0 starts on the big carrier (2^f levels), payloads
 * 1..f-1 start on their own two-level carriers, and f-1 ancilla slot qubits
 * (ids f..2f-2) mark the carrier levels that begin in |0>.
 *
 * Merging relocates payload j into slot j with two logical CNOTs against the
 * |0> ancilla; each lowers to 2^j entanglers because the still-empty upper
 * slots stay pinned to |0>. The round trip costs 2^{f+2} - 8 entanglers.
 */
struct RemapFragment {
    QloqMap map;
    PhysicalCircuit circuit;
    std::vector<int> payload;  // logical ids 0..f-1
    std::vector<int> ancillas; // logical ids f..2f-2 (slot qubits)
};

namespace detail {

inline void remap_merge_step(PhysicalCircuit& pc, const QloqMap& map, int carrier, int payload_q,
                             int slot_q, int step, int f, bool reverse) {
    // pinned: slots step+1..f-1 still hold |0>
    std::map<int, int> pinned;
    for (int s = step + 1; s < f; ++s) pinned[map.partition[carrier][s]] = 0;
    auto cnot1 = bridge_ops(LogicalGate::mcx({payload_q}, slot_q), map, pinned);
    auto cnot2 = bridge_ops(LogicalGate::mcx({slot_q}, payload_q), map, pinned);
    std::vector<PhysicalOp> step_ops = cnot1;
    step_ops.insert(step_ops.end(), cnot2.begin(), cnot2.end());
    if (reverse) std::reverse(step_ops.begin(), step_ops.end());
    for (auto& op : step_ops) pc.ops.push_back(op);
}

} // namespace detail

inline RemapFragment remap_fragment(int f, RemapDirection direction) {
    require(f >= 2, "remapping needs f >= 2");
    RemapFragment frag;
    std::vector<int> carrier = {0};
    for (int j = 1; j < f; ++j) carrier.push_back(f - 1 + j); // slot qubits
    std::vector<std::vector<int>> part = {carrier};
    for (int j = 1; j < f; ++j) part.push_back({j});
    frag.map = QloqMap(part);
    frag.circuit.map = frag.map;
    for (int j = 0; j < f; ++j) frag.payload.push_back(j);
    for (int j = 1; j < f; ++j) frag.ancillas.push_back(f - 1 + j);

    auto merge = [&](bool reverse_all) {
        std::vector<int> order;
        for (int j = 1; j < f; ++j) order.push_back(j);
        if (reverse_all) std::reverse(order.begin(), order.end());
        for (int j : order)
            detail::remap_merge_step(frag.circuit, frag.map, 0, j, f - 1 + j, j, f, reverse_all);
    };
    if (direction == RemapDirection::Merge) merge(false);
    else if (direction == RemapDirection::Split) merge(true);
    else { merge(false); merge(true); }
    return frag;
}

/**
 * Shannon decomposition bracketed by remapping, so the fragment acts on an
 * all-single-qubit boundary encoding. Total entangler count equals
 * 3*4^{n-g}*2^{g-1} - 3*2^{n-1} + 2^{g+2} - 8.
 *
 * Layout: payload qubits 0..n-1; the big carrier holds payload n-g plus g-1
 * ancilla slot qubits (ids n..n+g-2). The decomposition body acts on qubits
 * (0..n-g, slots...) while payloads n-g+1..n-1 sit merged inside the carrier.
 */
inline QsdResult synthesize_qsd_with_remap(const Mat& u, int g) {
    int n = 0;
    while ((Eigen::Index(1) << n) < u.rows()) ++n;
    require((Eigen::Index(1) << n) == u.rows(), "dimension must be a power of two");
    require(g >= 2 && g < n, "remapped mode requires 2 <= g < n");

    std::vector<int> carrier = {n - g};
    for (int j = 1; j < g; ++j) carrier.push_back(n - 1 + j); // ancilla slot ids
    std::vector<std::vector<int>> part;
    for (int q = 0; q < n - g; ++q) part.push_back({q});
    part.push_back(carrier);
    for (int q = n - g + 1; q < n; ++q) part.push_back({q});
    QloqMap map(part);

    detail::QsdEngine engine(map);
    for (int q = 0; q <= n - g; ++q) engine.qubits.push_back(q);
    for (int j = 1; j < g; ++j) engine.qubits.push_back(n - 1 + j);
    engine.terminal = g;
    engine.terminal_local = true;

    // merge payloads n-g+1..n-1 into carrier slots
    PhysicalCircuit pre;
    pre.map = map;
    for (int j = 1; j < g; ++j)
        detail::remap_merge_step(pre, map, map.carrier_of(n - g), n - g + j, n - 1 + j, j, g,
                                 false);
    PhysicalCircuit post;
    post.map = map;
    for (int j = g - 1; j >= 1; --j)
        detail::remap_merge_step(post, map, map.carrier_of(n - g), n - g + j, n - 1 + j, j, g,
                                 true);

    QsdResult result;
    result.circuit.map = map;
    result.circuit.append(pre);
    engine.add_stage(pre.entangler_count(), CostRule::BridgeEq1, "remap merge");
    engine.synth(u, 0);
    result.circuit.append(engine.out);
    result.circuit.ops.insert(result.circuit.ops.end(), post.ops.begin(), post.ops.end());
    engine.add_stage(post.entangler_count(), CostRule::BridgeEq1, "remap split");
    result.report = std::move(engine.report);
    return result;
}

} // namespace qloq
