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
#include "qloq/embed.hpp"
#include "qloq/metrics.hpp"

namespace qloq {

/**
 * Built-in circuit registry.
 *
 * Contents:
 *  - "internal-cnot", "bridge-cccx", "cross-cnot": the three canonical QLOQ
 *    gate decompositions (CNOT inside a carrier, four-qubit Toffoli bridging
 *    two carriers, CNOT between qubits on different carriers).
 *  - "qfa": the Feynman quantum full adder (two Toffolis + three CNOTs,
 *    15 CNOTs when each gate is decomposed naively) in the QLOQ(1,2) map.
 *  - "sim-circuit-1/2/9": circuits 1, 2 and 9 of the Sim et al. four-qubit
 *    ansatz benchmark set.
 *  - "qloq-circuit-A/I..N/O": the companion QLOQ benchmark ansatze on
 *    QLOQ(0,1)(2,3); every inter-carrier entangler is a CCCZ that lowers to
 *    one physical entangler. I..N share one layer structure repeated 1..6
 *    times. Reference descriptor values are listed per fixture and
 *    reproduced by the metrics test suite within sampling tolerance.
 *  - "lih-qloq"/"lih-qubit": the eigensolver ansatz pair (QLOQ CCCZ ansatz
 *    with the phase applied on |0111>, and the qubit-encoded CZ-cascade
 *    ansatz).
 *  - "su4-carrier": a 15-parameter universal two-qubit block on a single
 *    4-level carrier (all operations local).
 */
struct Fixture {
    std::string name;
    std::string description;
    ParameterizedAnsatz ansatz;
    long long declared_entanglers = -1; // physical entanglers under the map
};

namespace detail {

class AnsatzBuilder {
  public:
    AnsatzBuilder(int num_qubits, QloqMap map) {
        a_.base.num_qubits = num_qubits;
        a_.map = std::move(map);
    }

    AnsatzBuilder& rot(GateKind axis, int q) {
        a_.bindings.emplace_back(static_cast<int>(a_.base.gates.size()), a_.param_count++);
        a_.base.gates.push_back(LogicalGate::rotation(axis, q, 0.0));
        return *this;
    }
    AnsatzBuilder& gate(LogicalGate g) {
        a_.base.gates.push_back(std::move(g));
        return *this;
    }
    AnsatzBuilder& rot_layer(GateKind axis, const std::vector<int>& qs) {
        for (int q : qs) rot(axis, q);
        return *this;
    }
    AnsatzBuilder& u3(int q) { return rot(GateKind::Rz, q).rot(GateKind::Ry, q).rot(GateKind::Rz, q); }
    AnsatzBuilder& ryrz(int q) { return rot(GateKind::Ry, q).rot(GateKind::Rz, q); }
    AnsatzBuilder& carrier_czs() {
        a_.base.gates.push_back(LogicalGate::mcz({0}, 1));
        a_.base.gates.push_back(LogicalGate::mcz({2}, 3));
        return *this;
    }
    AnsatzBuilder& h_all() {
        for (int q = 0; q < a_.base.num_qubits; ++q) a_.base.gates.push_back(LogicalGate::h(q));
        return *this;
    }

    ParameterizedAnsatz build(std::string id) {
        a_.id = std::move(id);
        a_.base.validate();
        return a_;
    }

  private:
    ParameterizedAnsatz a_;
};

inline QloqMap pair_map() { return QloqMap({{0, 1}, {2, 3}}); }

inline ParameterizedAnsatz sim_circuit_1() {
    AnsatzBuilder b(4, QloqMap::qubit_encoding(4));
    b.rot_layer(GateKind::Rx, {0, 1, 2, 3}).rot_layer(GateKind::Rz, {0, 1, 2, 3});
    return b.build("sim-circuit-1");
}

inline ParameterizedAnsatz sim_circuit_2() {
    AnsatzBuilder b(4, QloqMap::qubit_encoding(4));
    b.rot_layer(GateKind::Rx, {0, 1, 2, 3}).rot_layer(GateKind::Rz, {0, 1, 2, 3});
    b.gate(LogicalGate::mcx({3}, 2)).gate(LogicalGate::mcx({2}, 1)).gate(LogicalGate::mcx({1}, 0));
    return b.build("sim-circuit-2");
}

inline ParameterizedAnsatz sim_circuit_9() {
    AnsatzBuilder b(4, QloqMap::qubit_encoding(4));
    b.h_all();
    b.gate(LogicalGate::mcz({3}, 2)).gate(LogicalGate::mcz({2}, 1)).gate(LogicalGate::mcz({1}, 0));
    b.rot_layer(GateKind::Rx, {0, 1, 2, 3});
    return b.build("sim-circuit-9");
}

inline ParameterizedAnsatz qloq_circuit_a() {
    AnsatzBuilder b(4, pair_map());
    b.rot_layer(GateKind::Ry, {0, 1, 2, 3}).carrier_czs();
    b.gate(LogicalGate::mcz({0, 1, 2}, 3));
    return b.build("qloq-circuit-A");
}

inline ParameterizedAnsatz qloq_circuit_layered(int layers, char id) {
    AnsatzBuilder b(4, pair_map());
    b.rot_layer(GateKind::Ry, {0, 1, 2, 3}).carrier_czs();
    for (int l = 0; l < layers; ++l) {
        b.gate(LogicalGate::mcz({0, 1, 2}, 3));
        b.rot(GateKind::Ry, 0).rot(GateKind::Rz, 1).rot(GateKind::Ry, 2).rot(GateKind::Rz, 3);
        b.carrier_czs().h_all();
    }
    return b.build(std::string("qloq-circuit-") + id);
}

inline ParameterizedAnsatz qloq_circuit_o(bool negated_control) {
    AnsatzBuilder b(4, pair_map());
    for (int q = 0; q < 4; ++q) b.u3(q);
    b.carrier_czs();
    for (int q = 0; q < 4; ++q) b.ryrz(q);
    b.carrier_czs().h_all().carrier_czs();
    b.gate(negated_control ? LogicalGate::mcz({0, 1, 2}, 3, {0}) : LogicalGate::mcz({0, 1, 2}, 3));
    for (int q = 0; q < 4; ++q) b.ryrz(q);
    b.carrier_czs().h_all().carrier_czs();
    for (int q = 0; q < 4; ++q) b.ryrz(q);
    b.h_all().carrier_czs();
    return b.build(negated_control ? "lih-qloq" : "qloq-circuit-O");
}

inline ParameterizedAnsatz lih_qubit() {
    AnsatzBuilder b(4, QloqMap::qubit_encoding(4));
    b.rot_layer(GateKind::Ry, {0, 1, 2, 3});
    b.gate(LogicalGate::mcz({0}, 1)).gate(LogicalGate::mcz({1}, 2)).gate(LogicalGate::mcz({2}, 3));
    b.rot_layer(GateKind::Ry, {0, 1, 2, 3});
    return b.build("lih-qubit");
}

inline ParameterizedAnsatz su4_carrier() {
    AnsatzBuilder b(2, QloqMap({{0, 1}}));
    b.u3(0).u3(1);
    b.gate(LogicalGate::mcx({1}, 0));
    b.rot(GateKind::Rz, 0).rot(GateKind::Ry, 1);
    b.gate(LogicalGate::mcx({0}, 1));
    b.rot(GateKind::Ry, 1);
    b.gate(LogicalGate::mcx({1}, 0));
    b.u3(0).u3(1);
    return b.build("su4-carrier");
}

} // namespace detail

inline const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names = {
        "internal-cnot", "bridge-cccx", "cross-cnot", "qfa",
        "sim-circuit-1", "sim-circuit-2", "sim-circuit-9",
        "qloq-circuit-A", "qloq-circuit-I", "qloq-circuit-J", "qloq-circuit-K",
        "qloq-circuit-L", "qloq-circuit-M", "qloq-circuit-N", "qloq-circuit-O",
        "lih-qloq", "lih-qubit", "su4-carrier"};
    return names;
}

inline Fixture builtin_fixture(const std::string& name) {
    using detail::AnsatzBuilder;
    Fixture f;
    f.name = name;
    if (name == "internal-cnot") {
        AnsatzBuilder b(2, QloqMap({{0, 1}}));
        b.gate(LogicalGate::mcx({0}, 1));
        f.ansatz = b.build(name);
        f.declared_entanglers = 0;
        f.description = "CNOT between co-located qubits: a local level swap";
    } else if (name == "bridge-cccx") {
        AnsatzBuilder b(4, detail::pair_map());
        b.gate(LogicalGate::mcx({0, 1, 2}, 3));
        f.ansatz = b.build(name);
        f.declared_entanglers = 1;
        f.description = "four-qubit Toffoli bridging two 4-level carriers";
    } else if (name == "cross-cnot") {
        AnsatzBuilder b(4, detail::pair_map());
        b.gate(LogicalGate::mcx({1}, 2));
        f.ansatz = b.build(name);
        f.declared_entanglers = 4;
        f.description = "CNOT between carriers, via control removal";
    } else if (name == "qfa") {
        AnsatzBuilder b(4, QloqMap({{0}, {1, 2}, {3}}));
        b.gate(LogicalGate::mcx({0, 1}, 3));
        b.gate(LogicalGate::mcx({0}, 1));
        b.gate(LogicalGate::mcx({1, 2}, 3));
        b.gate(LogicalGate::mcx({1}, 2));
        b.gate(LogicalGate::mcx({0}, 1));
        f.ansatz = b.build(name);
        f.description = "Feynman quantum full adder in QLOQ(1,2); 15 CNOTs naive";
    } else if (name == "sim-circuit-1") {
        f.ansatz = detail::sim_circuit_1();
        f.declared_entanglers = 0;
        f.description = "Sim et al. benchmark circuit 1; reference Expr 0.2930, Ent 0.0000";
    } else if (name == "sim-circuit-2") {
        f.ansatz = detail::sim_circuit_2();
        f.declared_entanglers = 3;
        f.description = "Sim et al. benchmark circuit 2; reference Expr 0.3176, Ent 0.6210";
    } else if (name == "sim-circuit-9") {
        f.ansatz = detail::sim_circuit_9();
        f.declared_entanglers = 3;
        f.description = "Sim et al. benchmark circuit 9; reference Expr 0.6450, Ent 1.0000";
    } else if (name == "qloq-circuit-A") {
        f.ansatz = detail::qloq_circuit_a();
        f.declared_entanglers = 1;
        f.description = "QLOQ benchmark A; reference Expr 0.6731, Ent 0.2078";
    } else if (name.size() == 14 && name.rfind("qloq-circuit-", 0) == 0 && name[13] >= 'I' &&
               name[13] <= 'N') {
        const int layers = name[13] - 'I' + 1;
        f.ansatz = detail::qloq_circuit_layered(layers, name[13]);
        f.declared_entanglers = layers;
        f.description = "QLOQ benchmark " + std::string(1, name[13]) + ": layered structure, " +
                        std::to_string(layers) + " global layer(s)";
    } else if (name == "qloq-circuit-O") {
        f.ansatz = detail::qloq_circuit_o(false);
        f.declared_entanglers = 1;
        f.description = "QLOQ benchmark O; reference Expr 0.0176, Ent 0.5369";
    } else if (name == "lih-qloq") {
        f.ansatz = detail::qloq_circuit_o(true);
        f.declared_entanglers = 1;
        f.description = "QLOQ eigensolver ansatz: CCCZ phase on |0111>, rich local layers";
    } else if (name == "lih-qubit") {
        f.ansatz = detail::lih_qubit();
        f.declared_entanglers = 3;
        f.description = "qubit-encoded eigensolver ansatz with a CZ cascade";
    } else if (name == "su4-carrier") {
        f.ansatz = detail::su4_carrier();
        f.declared_entanglers = 0;
        f.description = "universal two-qubit block, fully local on one carrier";
    } else {
        throw Error("unknown fixture: " + name);
    }
    return f;
}

/// Reference CNOT count when every gate is decomposed individually in qubit
/// encoding without ancillas.
inline long long naive_cnot_count(const LogicalCircuit& c) {
    long long total = 0;
    for (const auto& g : c.gates) {
        if (g.kind == GateKind::Mcx || g.kind == GateKind::Mcz) {
            if (g.controls.empty()) continue;
            total += multicontrolled_reference_cost(g.arity(), McRefMode::QubitPlain);
        } else if (g.kind == GateKind::Swap) {
            total += 3;
        }
    }
    return total;
}

/// Expr/Ent sweep over registered fixtures with parameters.
inline std::vector<SweepRow> benchmark_sweep(const std::vector<std::string>& names,
                                             const SweepSettings& settings = {}) {
    std::vector<SweepRow> rows;
    for (const auto& name : names) {
        Fixture f = builtin_fixture(name);
        SweepRow row;
        row.id = f.name;
        row.params = f.ansatz.param_count;
        row.entanglers = f.declared_entanglers;
        if (f.ansatz.param_count > 0) {
            row.expr = expressibility(f.ansatz, settings.pairs, settings.bins, settings.seed);
            row.ent = entangling_capability(f.ansatz, settings.samples, settings.seed + 1);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace qloq
