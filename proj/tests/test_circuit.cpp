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

#include "qloq/circuit.hpp"

using namespace qloq;

TEST_CASE("gate validation catches bad indices") {
    LogicalCircuit c;
    c.num_qubits = 4;
    c.gates.push_back(LogicalGate::mcx({0}, 5));
    CHECK_THROWS_AS(c.validate(), Error);

    LogicalCircuit dup;
    dup.num_qubits = 4;
    dup.gates.push_back(LogicalGate::mcx({1}, 1));
    CHECK_THROWS_AS(dup.validate(), Error);
}

TEST_CASE("rotation gates carry exactly one angle") {
    LogicalGate g = LogicalGate::rotation(GateKind::Rz, 0, 0.5);
    CHECK_NOTHROW(g.validate(2));
    g.params.push_back(1.0);
    CHECK_THROWS_AS(g.validate(2), Error);
}

TEST_CASE("negated controls must be controls") {
    LogicalGate g = LogicalGate::mcx({0, 1}, 2, {1});
    CHECK_NOTHROW(g.validate(3));
    g.negated_controls = {2};
    CHECK_THROWS_AS(g.validate(3), Error);
}

TEST_CASE("opaque payload must be unitary") {
    Mat u = Mat::Identity(4, 4);
    CHECK_NOTHROW(LogicalGate::unitary({0, 1}, u).validate(2));
    u(0, 0) = 2.0;
    CHECK_THROWS_AS(LogicalGate::unitary({0, 1}, u).validate(2), Error);
    CHECK_THROWS_AS(LogicalGate::unitary({0}, Mat::Identity(4, 4)).validate(2), Error);
}

TEST_CASE("map validation") {
    QloqMap ok({{0, 1}, {2, 3}});
    CHECK(validate_map(ok, 2).empty());
    CHECK(ok.num_carriers() == 2);
    CHECK(ok.levels(0) == 4);

    QloqMap big({{0, 1, 2}, {3}});
    auto v = validate_map(big, 2);
    REQUIRE(v.size() == 1);
    CHECK(v[0].message.find("8 levels") != std::string::npos);

    QloqMap dup({{0, 1}, {1, 2}});
    auto vd = validate_map(dup, 0);
    REQUIRE_FALSE(vd.empty());
    CHECK(vd[0].message.find("duplicated") != std::string::npos);
}

TEST_CASE("identity iso bit shifts") {
    QloqMap m({{0, 1}, {2, 3}});
    // carrier-major, big-endian in carriers: q0 is the global MSB
    CHECK(m.bit_shift(0) == 3);
    CHECK(m.bit_shift(1) == 2);
    CHECK(m.bit_shift(2) == 1);
    CHECK(m.bit_shift(3) == 0);
    CHECK(m.carrier_of(2) == 1);
    CHECK(m.slot_of(3) == 1);
    CHECK(m.total_dim() == 16);
}

TEST_CASE("physical op validation") {
    QloqMap m({{0, 1}, {2}});
    CHECK_NOTHROW(PhysicalOp::cx(0, 3, 1, 0, 1).validate(m));
    CHECK_THROWS_AS(PhysicalOp::cx(0, 4, 1, 0, 1).validate(m), Error);
    CHECK_THROWS_AS(PhysicalOp::cx(0, 0, 0, 0, 1).validate(m), Error);
    CHECK_THROWS_AS(PhysicalOp::cx(0, 0, 1, 1, 1).validate(m), Error);
    CHECK_NOTHROW(PhysicalOp::local(0, Mat::Identity(4, 4)).validate(m));
    CHECK_THROWS_AS(PhysicalOp::local(0, Mat::Identity(2, 2)).validate(m), Error);
}

TEST_CASE("entangler count counts only entanglers") {
    PhysicalCircuit pc;
    pc.map = QloqMap({{0, 1}, {2}});
    pc.ops.push_back(PhysicalOp::local(0, Mat::Identity(4, 4)));
    pc.ops.push_back(PhysicalOp::cx(1, 1, 0, 2, 3));
    pc.ops.push_back(PhysicalOp::cz(1, 1, 0, 0, 1));
    CHECK(pc.entangler_count() == 2);
    CHECK_NOTHROW(pc.validate());
}
