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

#include <catch2/catch_amalgamated.hpp>

#include "qloq/cost.hpp"
#include "qloq/embed.hpp"
#include "qloq/sim.hpp"

using namespace qloq;

namespace {

// Brute-force check: the lowered physical circuit acts exactly like the
// logical circuit (the basis iso is the identity, so matrices must agree).
void check_lowering(const LogicalCircuit& c, const QloqMap& map, double tol = 1e-10) {
    PhysicalCircuit pc = lower_to_physical(c, map);
    pc.validate();
    Mat got = circuit_unitary(pc);
    Mat want = circuit_unitary(c, map);
    CHECK(max_abs(got - want) < tol);
}

} // namespace

TEST_CASE("Ry on the least significant slot is block-diagonal over level pairs") {
    QloqMap map({{0, 1, 2}});
    LogicalGate g = LogicalGate::rotation(GateKind::Ry, 2, 0.77);
    Mat m = embedded_matrix(map, 0, g);
    Mat r = ry(0.77);
    for (int blk = 0; blk < 4; ++blk) {
        CHECK(max_abs(m.block(2 * blk, 2 * blk, 2, 2) - r) < 1e-14);
    }
    // everything off the pair blocks vanishes
    Mat mask = m;
    for (int blk = 0; blk < 4; ++blk) mask.block(2 * blk, 2 * blk, 2, 2).setZero();
    CHECK(max_abs(mask) < 1e-14);
}

TEST_CASE("internal swap(q0,q2) on an 8-level carrier permutes levels 1<->4 and 3<->6") {
    QloqMap map({{0, 1, 2}});
    Mat m = embedded_matrix(map, 0, LogicalGate::swap(0, 2));
    Mat expect = Mat::Zero(8, 8);
    expect(0, 0) = expect(2, 2) = expect(5, 5) = expect(7, 7) = 1;
    expect(1, 4) = expect(4, 1) = expect(3, 6) = expect(6, 3) = 1;
    CHECK(max_abs(m - expect) < 1e-14);

    // brute force against the 3-qubit swap unitary
    LogicalCircuit c;
    c.num_qubits = 3;
    c.gates.push_back(LogicalGate::swap(0, 2));
    CHECK(max_abs(m - circuit_unitary(c)) < 1e-14);
}

TEST_CASE("X on a lone 2-level carrier embeds as Pauli-X") {
    QloqMap map(std::vector<std::vector<int>>{{0}});
    CHECK(max_abs(embedded_matrix(map, 0, LogicalGate::x(0)) - pauli_x()) < 1e-14);
}

TEST_CASE("embed_logical_gate rejects cross-carrier support") {
    QloqMap map({{0, 1}, {2}});
    CHECK_THROWS_AS(embed_logical_gate(LogicalGate::mcx({0}, 2), map), Error);
    CHECK_NOTHROW(embed_logical_gate(LogicalGate::mcx({0}, 1), map));
}

TEST_CASE("CCCX over QLOQ(0,1)(2,3) lowers to a single entangler") {
    QloqMap map({{0, 1}, {2, 3}});
    LogicalCircuit c;
    c.num_qubits = 4;
    c.gates.push_back(LogicalGate::mcx({0, 1, 2}, 3));
    PhysicalCircuit pc = lower_to_physical(c, map);
    CHECK(pc.entangler_count() == 1);
    check_lowering(c, map);
}

TEST_CASE("cross-carrier CNOT lowers to four entanglers") {
    QloqMap map({{0, 1}, {2, 3}});
    LogicalCircuit c;
    c.num_qubits = 4;
    c.gates.push_back(LogicalGate::mcx({1}, 2));
    PhysicalCircuit pc = lower_to_physical(c, map);
    CHECK(pc.entangler_count() == 4);
    check_lowering(c, map);
}

TEST_CASE("negated controls survive lowering") {
    QloqMap map({{0, 1}, {2, 3}});
    LogicalCircuit c;
    c.num_qubits = 4;
    c.gates.push_back(LogicalGate::mcx({0, 1, 2}, 3, {0}));
    check_lowering(c, map);
    c.gates[0] = LogicalGate::mcz({0, 2}, 3, {2});
    check_lowering(c, map);
}

TEST_CASE("lowered entangler counts match the cost model on bridge gates") {
    QloqMap map({{0, 1, 2}, {3, 4}});
    for (auto gate : {LogicalGate::mcx({0, 1, 2, 3}, 4), LogicalGate::mcx({0, 3}, 4),
                      LogicalGate::mcz({2}, 3), LogicalGate::mcx({0, 1, 2}, 4)}) {
        LogicalCircuit c;
        c.num_qubits = 5;
        c.gates.push_back(gate);
        PhysicalCircuit pc = lower_to_physical(c, map);
        CHECK(pc.entangler_count() == circuit_cost(c, map).total);
        check_lowering(c, map);
    }
}

TEST_CASE("mcz bridge is symmetric under carrier choice") {
    QloqMap map({{0, 1}, {2, 3}});
    LogicalCircuit c;
    c.num_qubits = 4;
    c.gates.push_back(LogicalGate::mcz({0, 1, 2}, 3));
    PhysicalCircuit pc = lower_to_physical(c, map);
    CHECK(pc.entangler_count() == 1);
    check_lowering(c, map);
}

TEST_CASE("three-carrier Toffoli falls back to the CNOT network") {
    QloqMap map({{0}, {1, 2}, {3}});
    LogicalCircuit c;
    c.num_qubits = 4;
    c.gates.push_back(LogicalGate::mcx({0, 1}, 3));
    check_lowering(c, map);
    c.gates[0] = LogicalGate::mcz({0, 1}, 3, {1});
    check_lowering(c, map);
}

TEST_CASE("cross-carrier swap lowering") {
    QloqMap map({{0, 1}, {2}});
    LogicalCircuit c;
    c.num_qubits = 3;
    c.gates.push_back(LogicalGate::swap(1, 2));
    PhysicalCircuit pc = lower_to_physical(c, map);
    CHECK(pc.entangler_count() == 3 * bridge_cost(2, 1, 2));
    check_lowering(c, map);
}

TEST_CASE("map-compatible 4-qubit circuits lower exactly") {
    QloqMap map({{0, 1}, {2, 3}});
    LogicalCircuit c;
    c.num_qubits = 4;
    c.gates.push_back(LogicalGate::h(0));
    c.gates.push_back(LogicalGate::rotation(GateKind::Ry, 2, 0.4));
    c.gates.push_back(LogicalGate::mcx({0}, 1));
    c.gates.push_back(LogicalGate::mcz({0, 1, 2}, 3));
    c.gates.push_back(LogicalGate::mcx({1}, 3));
    c.gates.push_back(LogicalGate::swap(2, 3));
    c.gates.push_back(LogicalGate::rotation(GateKind::Rz, 3, 1.2));
    check_lowering(c, map);
}
