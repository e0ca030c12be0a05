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

#include <map>
#include <set>
#include <vector>

#include "qloq/circuit.hpp"
#include "qloq/common.hpp"
#include "qloq/sim.hpp"

namespace qloq {

/**
 * Embeds a logical gate whose support lies within one carrier as a dense
 * level-space matrix. A single-qubit gate on the least significant slot comes
 * out block-diagonal over consecutive level pairs; on other slots the block
 * pattern is the one an internal reorder would produce. An internal swap is a
 * level permutation.
 */
inline Mat embedded_matrix(const QloqMap& map, int carrier, const LogicalGate& gate) {
    const int g = map.carrier_qubits(carrier);
    LogicalCircuit sub;
    sub.num_qubits = g;
    LogicalGate local = gate;
    auto to_slot = [&](int q) {
        require(map.carrier_of(q) == carrier, "gate support must lie within the carrier");
        return map.slot_of(q);
    };
    for (auto& q : local.controls) q = to_slot(q);
    for (auto& q : local.negated_controls) q = to_slot(q);
    for (auto& q : local.targets) q = to_slot(q);
    sub.gates.push_back(std::move(local));
    return circuit_unitary(sub);
}

/// Lowers a gate supported by a single carrier (or a lone qubit) to local
/// physical ops. Throws if the support spans carriers.
inline std::vector<PhysicalOp> embed_logical_gate(const LogicalGate& gate, const QloqMap& map) {
    std::set<int> carriers;
    for (int q : gate.support()) carriers.insert(map.carrier_of(q));
    require(carriers.size() == 1,
            "gate support spans carriers; it must be synthesized, not embedded");
    const int c = *carriers.begin();
    return {PhysicalOp::local(c, embedded_matrix(map, c, gate))};
}

/**
 * Two-level entangler sequence for an mcx/mcz gate whose support spans
 * exactly two carriers. One entangler is emitted per assignment of the
 * non-participating slots on both carriers, which reproduces the bridge
 * count 2^{g_a+g_b-n} exactly.
 *
 * `pinned` maps qubits to fixed bit values; pinned slots are excluded from
 * the enumeration (used by remapping fragments, where unused logical slots
 * are guaranteed to sit in |0>).
 */
inline std::vector<PhysicalOp> bridge_ops(const LogicalGate& gate, const QloqMap& map,
                                          const std::map<int, int>& pinned = {}) {
    require(gate.kind == GateKind::Mcx || gate.kind == GateKind::Mcz,
            "bridge construction covers mcx/mcz gates");
    std::set<int> carriers;
    for (int q : gate.support()) carriers.insert(map.carrier_of(q));
    require(carriers.size() == 2, "bridge construction needs a two-carrier span");

    const int target = gate.targets[0];
    const int tc = map.carrier_of(target);
    auto it = carriers.begin();
    const int other = (*it == tc) ? *std::next(it) : *it;

    auto required_bit = [&](int q) {
        const bool neg = std::find(gate.negated_controls.begin(), gate.negated_controls.end(),
                                   q) != gate.negated_controls.end();
        return neg ? 0 : 1;
    };

    // Partition each carrier's slots into fixed (control/target/pinned) and free.
    struct Side {
        std::vector<int> free_slots;
        int fixed_level = 0;
    };
    auto analyze = [&](int carrier, bool include_target) {
        Side side;
        const int g = map.carrier_qubits(carrier);
        for (int s = 0; s < g; ++s) {
            const int q = map.partition[carrier][s];
            const int shift = g - 1 - s;
            if (std::find(gate.controls.begin(), gate.controls.end(), q) != gate.controls.end()) {
                side.fixed_level |= required_bit(q) << shift;
            } else if (include_target && q == target) {
                // target slot handled by the level pair
            } else if (auto p = pinned.find(q); p != pinned.end()) {
                side.fixed_level |= p->second << shift;
            } else {
                side.free_slots.push_back(shift);
            }
        }
        return side;
    };

    const Side ctrl_side = analyze(other, false);
    const Side tgt_side = analyze(tc, true);
    const int tshift = map.carrier_qubits(tc) - 1 - map.slot_of(target);

    std::vector<PhysicalOp> ops;
    const long fa = 1L << ctrl_side.free_slots.size();
    const long fb = 1L << tgt_side.free_slots.size();
    for (long a = 0; a < fa; ++a) {
        int clevel = ctrl_side.fixed_level;
        for (std::size_t i = 0; i < ctrl_side.free_slots.size(); ++i)
            if ((a >> i) & 1) clevel |= 1 << ctrl_side.free_slots[i];
        for (long b = 0; b < fb; ++b) {
            int base = tgt_side.fixed_level;
            for (std::size_t i = 0; i < tgt_side.free_slots.size(); ++i)
                if ((b >> i) & 1) base |= 1 << tgt_side.free_slots[i];
            const int p0 = base;
            const int p1 = base | (1 << tshift);
            if (gate.kind == GateKind::Mcx)
                ops.push_back(PhysicalOp::cx(other, clevel, tc, p0, p1));
            else
                ops.push_back(PhysicalOp::cz(other, clevel, tc, p0, p1));
        }
    }
    return ops;
}

namespace detail {

inline Mat tgate(bool dagger) {
    return mat2(1, 0, 0, std::exp(cxd(0, dagger ? -kPi / 4 : kPi / 4)));
}

/// Ancilla-free Toffoli in terms of CNOTs, H and T gates.
inline std::vector<LogicalGate> toffoli_network(int a, int b, int t) {
    std::vector<LogicalGate> out;
    auto u1 = [&](int q, const Mat& m) { out.push_back(LogicalGate::unitary({q}, m)); };
    auto cx = [&](int c, int tt) { out.push_back(LogicalGate::mcx({c}, tt)); };
    out.push_back(LogicalGate::h(t));
    cx(b, t); u1(t, tgate(true));
    cx(a, t); u1(t, tgate(false));
    cx(b, t); u1(t, tgate(true));
    cx(a, t); u1(b, tgate(false)); u1(t, tgate(false));
    out.push_back(LogicalGate::h(t));
    cx(a, b); u1(a, tgate(false)); u1(b, tgate(true));
    cx(a, b);
    return out;
}

} // namespace detail

/**
 * Lowers a logical circuit onto carriers: intra-carrier gates become local
 * unitaries, two-carrier mcx/mcz gates become bridge entangler sequences, a
 * cross-carrier swap becomes three logical CNOTs, and a Toffoli spanning
 * three carriers falls back to its ancilla-free CNOT network. This is the
 * oracle-grade lowering: it is always unitary-exact, and gate counts match
 * the cost model on the supported cases.
 */
inline PhysicalCircuit lower_to_physical(const LogicalCircuit& circuit, const QloqMap& map) {
    circuit.validate();
    map.require_valid();
    require(circuit.num_qubits == map.num_qubits(), "circuit width does not match map");
    PhysicalCircuit pc;
    pc.map = map;

    std::vector<LogicalGate> queue(circuit.gates.begin(), circuit.gates.end());
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        const LogicalGate g = queue[qi];
        std::set<int> carriers;
        for (int q : g.support()) carriers.insert(map.carrier_of(q));

        if (carriers.size() == 1) {
            const int c = *carriers.begin();
            pc.ops.push_back(PhysicalOp::local(c, embedded_matrix(map, c, g)));
            continue;
        }
        if (carriers.size() == 2 && (g.kind == GateKind::Mcx || g.kind == GateKind::Mcz)) {
            for (auto& op : bridge_ops(g, map)) pc.ops.push_back(op);
            continue;
        }
        if (g.kind == GateKind::Swap) {
            const int a = g.targets[0], b = g.targets[1];
            std::vector<LogicalGate> expand = {LogicalGate::mcx({a}, b), LogicalGate::mcx({b}, a),
                                               LogicalGate::mcx({a}, b)};
            queue.insert(queue.begin() + qi + 1, expand.begin(), expand.end());
            continue;
        }
        if ((g.kind == GateKind::Mcx || g.kind == GateKind::Mcz) && g.controls.size() == 2) {
            // Toffoli over three carriers: ancilla-free network, pieces lowered in turn.
            std::vector<LogicalGate> expand;
            for (int q : g.negated_controls) expand.push_back(LogicalGate::x(q));
            if (g.kind == GateKind::Mcz) expand.push_back(LogicalGate::h(g.targets[0]));
            auto net = detail::toffoli_network(g.controls[0], g.controls[1], g.targets[0]);
            expand.insert(expand.end(), net.begin(), net.end());
            if (g.kind == GateKind::Mcz) expand.push_back(LogicalGate::h(g.targets[0]));
            for (int q : g.negated_controls) expand.push_back(LogicalGate::x(q));
            queue.insert(queue.begin() + qi + 1, expand.begin(), expand.end());
            continue;
        }
        throw Error("cannot lower a " + std::string(gate_kind_name(g.kind)) + " spanning " +
                    std::to_string(carriers.size()) + " carriers");
    }
    return pc;
}

} // namespace qloq
