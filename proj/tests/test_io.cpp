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

#include "qloq/fixtures.hpp"
#include "qloq/io.hpp"
#include "qloq/qsd.hpp"
#include "qloq/sim.hpp"

using namespace qloq;

TEST_CASE("minimal circuit JSON parses to a CNOT") {
    auto parsed = parse_circuit(R"({"qubits":2,"gates":[{"kind":"mcx","controls":[0],"target":[1]}]})");
    CHECK(parsed.circuit.num_qubits == 2);
    REQUIRE(parsed.circuit.gates.size() == 1);
    CHECK(parsed.circuit.gates[0].kind == GateKind::Mcx);
    CHECK_FALSE(parsed.map.has_value());
}

TEST_CASE("map field parses into a QLOQ map") {
    auto parsed = parse_circuit(R"({"qubits":4,"map":[[0,1],[2,3]],"gates":[]})");
    REQUIRE(parsed.map.has_value());
    CHECK(parsed.map->num_carriers() == 2);
    CHECK(parsed.map->carrier_qubits(0) == 2);
}

TEST_CASE("parse errors: malformed JSON, bad index, unknown kind, non-unitary payload") {
    CHECK_THROWS_AS(parse_circuit("{not json"), Error);
    CHECK_THROWS_AS(
        parse_circuit(R"({"qubits":4,"gates":[{"kind":"mcx","controls":[0],"target":[5]}]})"),
        Error);
    CHECK_THROWS_AS(
        parse_circuit(R"({"qubits":2,"gates":[{"kind":"frobnicate","target":[0]}]})"), Error);
    CHECK_THROWS_AS(parse_circuit(
                        R"({"qubits":1,"gates":[{"kind":"opaque-unitary","target":[0],
                            "matrix":[[[2,0],[0,0]],[[0,0],[1,0]]]}]})"),
                    Error);
}

TEST_CASE("round trip: parse(serialize(c)) is structurally equal for all fixtures") {
    for (const auto& name : fixture_names()) {
        Fixture f = builtin_fixture(name);
        Rng rng(5);
        std::vector<double> params(f.ansatz.param_count);
        for (auto& p : params) p = rng.angle();
        LogicalCircuit bound = f.ansatz.bind(params);
        const std::string text = circuit_to_json(bound, f.ansatz.map).dump();
        ParsedCircuit back = parse_circuit(text);
        REQUIRE(back.map.has_value());
        CHECK(back.map->partition == f.ansatz.map.partition);
        REQUIRE(back.circuit.gates.size() == bound.gates.size());
        for (std::size_t i = 0; i < bound.gates.size(); ++i) {
            const auto& a = bound.gates[i];
            const auto& b = back.circuit.gates[i];
            CHECK(a.kind == b.kind);
            CHECK(a.controls == b.controls);
            CHECK(a.negated_controls == b.negated_controls);
            CHECK(a.targets == b.targets);
            REQUIRE(a.params.size() == b.params.size());
            for (std::size_t p = 0; p < a.params.size(); ++p)
                CHECK(a.params[p] == Catch::Approx(b.params[p]).margin(1e-14));
        }
    }
}

TEST_CASE("unitary grid round trip") {
    Mat u = random_unitary(8, 42);
    Mat back = matrix_from_json(matrix_to_json(u));
    CHECK(max_abs(back - u) < 1e-14);
}

TEST_CASE("physical circuit JSON round trip preserves the operator") {
    Mat u = random_unitary(8, 17);
    QsdResult r = synthesize_qsd(u, QsdMode::Qloq, 2);
    PhysicalCircuit back = physical_from_json(physical_to_json(r.circuit));
    CHECK(back.entangler_count() == r.circuit.entangler_count());
    CHECK(max_abs(circuit_unitary(back) - circuit_unitary(r.circuit)) < 1e-12);
}

TEST_CASE("hamiltonian JSON-lines parsing") {
    auto h = parse_hamiltonian("{\"coeff\":1.0,\"pauli\":\"ZZ\"}\n{\"coeff\":0.5,\"pauli\":\"ZI\"}\n");
    CHECK(h.terms.size() == 2);
    CHECK(h.groups.size() == 1);
    CHECK_THROWS_AS(parse_hamiltonian("{\"coeff\":1.0}\n"), Error);
    CHECK_THROWS_AS(parse_hamiltonian("garbage\n"), Error);
}

TEST_CASE("cost report serialization") {
    QloqMap map({{0, 1}, {2, 3}});
    LogicalCircuit c;
    c.num_qubits = 4;
    c.gates.push_back(LogicalGate::mcx({0}, 1));
    c.gates.push_back(LogicalGate::mcx({0, 1, 2}, 3));
    auto report = circuit_cost(c, map);
    const std::string csv = cost_report_to_csv(report);
    CHECK(csv == "gate_index,k\n0,0\n1,1\ntotal,1\n");
    json j = cost_report_to_json(report);
    CHECK(j["total"] == 1);
    CHECK(j["per_gate"].size() == 2);
    CHECK(j["per_gate"][0]["rule"] == "internal");
    CHECK(j["per_gate"][1]["rule"] == "bridge-eq1");
}

TEST_CASE("digest is stable") {
    CHECK(digest_hex("") == "cbf29ce484222325");
    CHECK(digest_hex("qloq") != digest_hex("qlqo"));
}

TEST_CASE("manifest carries run metadata") {
    json m = run_manifest("qsd", {"u.json"}, 7, {{"circuit.json", "abc"}}, "2026-01-01T00:00:00Z");
    CHECK(m["subcommand"] == "qsd");
    CHECK(m["seed"] == 7);
    CHECK(m["outputs"]["circuit.json"] == "abc");
    CHECK(m["tool_version"] == std::string(kVersion));
}
