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

#include "qloq/embed.hpp"
#include "qloq/fixtures.hpp"
#include "qloq/loqc.hpp"

using namespace qloq;

TEST_CASE("cascade layer success hits the published points") {
    CHECK(layer_success(LayerKind::CascadeRalph, 2) == Catch::Approx(1.0 / 9).epsilon(1e-12));
    CHECK(layer_success(LayerKind::CascadeRalph, 4) == Catch::Approx(1.0 / 81).epsilon(1e-12));
    CHECK(layer_success(LayerKind::CascadeRalph, 6) == Catch::Approx(1.0 / 729).epsilon(1e-12));
    CHECK(layer_success(LayerKind::CascadeRalph, 1) == 1.0);
}

TEST_CASE("heralded layer success follows (2/27)^(ceil(N/G)-1)") {
    CHECK(layer_success(LayerKind::HeraldedKnill, 6, 3) == Catch::Approx(2.0 / 27).epsilon(1e-12));
    CHECK(layer_success(LayerKind::HeraldedKnill, 12, 2) ==
          Catch::Approx(std::pow(2.0 / 27, 5)).epsilon(1e-12));
    CHECK(layer_success(LayerKind::HeraldedKnill, 4, 4) == 1.0);
    // non-decreasing in G for fixed N
    for (int n : {4, 7, 12})
        for (int g = 2; g <= 4; ++g)
            CHECK(layer_success(LayerKind::HeraldedKnill, n, g) >=
                  layer_success(LayerKind::HeraldedKnill, n, g - 1));
    // two layers multiply: (2/27)^2 at N=6, G=3
    const double one = layer_success(LayerKind::HeraldedKnill, 6, 3);
    CHECK(one * one == Catch::Approx(4.0 / 729).epsilon(1e-12));
}

TEST_CASE("circuit success is the product over entanglers") {
    Fixture f = builtin_fixture("bridge-cccx");
    PhysicalCircuit pc = lower_to_physical(f.ansatz.base, f.ansatz.map);
    GateModel ralph;
    CHECK(circuit_success(pc, ralph) == Catch::Approx(1.0 / 9).epsilon(1e-12));

    PhysicalCircuit empty;
    empty.map = QloqMap::qubit_encoding(2);
    CHECK(circuit_success(empty, ralph) == 1.0);

    GateModel balanced;
    balanced.overrides[0] = 0.448; // dump-port-balanced entangler
    // find the entangler index
    for (int i = 0; i < static_cast<int>(pc.ops.size()); ++i)
        if (pc.ops[i].kind == PhysicalOp::Kind::TwoLevelEntangler) {
            balanced.overrides.clear();
            balanced.overrides[i] = 0.448;
        }
    CHECK(circuit_success(pc, balanced) == Catch::Approx(0.448).epsilon(1e-12));

    // multiplicative over composition
    PhysicalCircuit two = pc;
    two.append(pc);
    CHECK(circuit_success(two, ralph) ==
          Catch::Approx(circuit_success(pc, ralph) * circuit_success(pc, ralph)).epsilon(1e-12));
}

TEST_CASE("resource counts") {
    // QLOQ(0,1)(2,3) ansatz: 2 photons; qubit encoding of 4: 4 photons
    QloqMap qloq({{0, 1}, {2, 3}});
    PhysicalCircuit none;
    none.map = qloq;
    auto est = resources(qloq, none, 0);
    CHECK(est.photons == 2);
    CHECK(est.modes == 8);

    QloqMap qubits = QloqMap::qubit_encoding(4);
    PhysicalCircuit none4;
    none4.map = qubits;
    auto est4 = resources(qubits, none4, 0);
    CHECK(est4.photons == 4);
    CHECK(est4.modes == 8);

    // QLOQ(0,1,2)(3,4,5) with one heralded entangler: 2 photons, 8+8+2 modes
    QloqMap big({{0, 1, 2}, {3, 4, 5}});
    PhysicalCircuit one;
    one.map = big;
    one.ops.push_back(PhysicalOp::cz(0, 7, 1, 0, 1));
    auto estb = resources(big, one, 0);
    CHECK(estb.photons == 2);
    CHECK(estb.modes == 18);

    // dump ports add modes one-for-one
    CHECK(resources(big, one, 5).modes == 23);
}

TEST_CASE("speedup table rows") {
    std::vector<SpeedupScenario> rows = {
        {"lih", 0.448, 1.0 / 81, 9000, 20, 218, 103},
        {"six-qubit", 2.0 / 27, 1.0 / 729, 500, 1, 1, 1},
        {"identical", 0.5, 0.5, 3, 3, 7, 7}};
    auto out = speedup_table(rows);
    REQUIRE(out.size() == 3);
    CHECK(std::abs(out[0].speedup - 7705) / 7705 < 0.01);
    CHECK(out[1].speedup == Catch::Approx(27000.0));
    CHECK(out[2].speedup == Catch::Approx(1.0));
}

TEST_CASE("model validation") {
    GateModel bad;
    bad.default_success = 0.0;
    PhysicalCircuit pc;
    pc.map = QloqMap::qubit_encoding(2);
    CHECK_THROWS_AS(circuit_success(pc, bad), Error);
}
