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
#include "qloq/metrics.hpp"

using namespace qloq;

TEST_CASE("haar bin probabilities") {
    // d = 2 is uniform; d = 3 integrates (d-1)(1-F)^{d-2} to (3/4, 1/4)
    auto p2 = haar_bin_probs(2, 2);
    CHECK(p2[0] == Catch::Approx(0.5).margin(1e-15));
    CHECK(p2[1] == Catch::Approx(0.5).margin(1e-15));
    auto p3 = haar_bin_probs(3, 2);
    CHECK(p3[0] == Catch::Approx(0.75).margin(1e-15));
    CHECK(p3[1] == Catch::Approx(0.25).margin(1e-15));

    for (long d : {2L, 5L, 16L, 64L}) {
        auto p = haar_bin_probs(d, 75);
        double sum = 0;
        for (double v : p) {
            CHECK(v > 0.0);
            sum += v;
        }
        CHECK(sum == Catch::Approx(1.0).margin(1e-12));
    }
    auto p16 = haar_bin_probs(16, 75);
    CHECK(p16[0] == Catch::Approx(1.0 - std::pow(74.0 / 75.0, 15)).margin(1e-15));
}

TEST_CASE("fidelity is symmetric in the sampled pair") {
    Fixture f = builtin_fixture("sim-circuit-2");
    Rng ra(3), rb(4);
    auto sa = f.ansatz.prepare(f.ansatz.sample_params(ra));
    auto sb = f.ansatz.prepare(f.ansatz.sample_params(rb));
    const double fab = std::norm(sa.amplitudes().dot(sb.amplitudes()));
    const double fba = std::norm(sb.amplitudes().dot(sa.amplitudes()));
    CHECK(fab == Catch::Approx(fba).margin(1e-14));
}

TEST_CASE("haar sampler sits at the estimator bias floor") {
    const double e = haar_sampler_expressibility(4, 5000, 75, 17);
    CHECK(e >= 0.0);
    CHECK(e < 0.02);
}

TEST_CASE("entangling capability is exactly zero without entanglers") {
    Fixture f = builtin_fixture("sim-circuit-1");
    CHECK(entangling_capability(f.ansatz, 200, 5) == Catch::Approx(0.0).margin(1e-12));
}

TEST_CASE("benchmark descriptors: circuits 1 and 9") {
    Fixture c1 = builtin_fixture("sim-circuit-1");
    CHECK(expressibility(c1.ansatz, 5000, 75, 2) == Catch::Approx(0.2930).margin(0.03));

    Fixture c9 = builtin_fixture("sim-circuit-9");
    CHECK(expressibility(c9.ansatz, 5000, 75, 2) == Catch::Approx(0.6450).margin(0.03));
    CHECK(entangling_capability(c9.ansatz, 1000, 3) == Catch::Approx(1.0).margin(0.01));
}

TEST_CASE("benchmark descriptors: circuit O") {
    Fixture o = builtin_fixture("qloq-circuit-O");
    CHECK(o.ansatz.param_count == 36);
    CHECK(o.declared_entanglers == 1);
    CHECK(expressibility(o.ansatz, 5000, 75, 2) == Catch::Approx(0.0176).margin(0.01));
    CHECK(entangling_capability(o.ansatz, 1000, 3) == Catch::Approx(0.5369).margin(0.03));
}

TEST_CASE("expressibility is non-negative and beats the floor for weak circuits") {
    Fixture c1 = builtin_fixture("sim-circuit-1");
    const double expr1 = expressibility(c1.ansatz, 2000, 75, 9);
    const double floor = haar_sampler_expressibility(4, 2000, 75, 9);
    CHECK(expr1 > floor);
    CHECK(floor >= 0.0);
}

TEST_CASE("layered fixtures: entanglement grows, expressibility saturates") {
    SweepSettings fast;
    fast.pairs = 2000;
    fast.samples = 400;
    auto rows = benchmark_sweep(
        {"qloq-circuit-I", "qloq-circuit-J", "qloq-circuit-K", "qloq-circuit-N"}, fast);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].ent < rows[1].ent);
    CHECK(rows[1].ent < rows[2].ent);
    CHECK(rows[2].ent < rows[3].ent);
    CHECK(rows[0].expr > rows[1].expr);
    CHECK(rows[1].expr > rows[2].expr);
    for (const auto& r : rows) CHECK(r.expr >= 0.0);
}

TEST_CASE("bind consumes exactly param_count angles") {
    Fixture f = builtin_fixture("qloq-circuit-A");
    std::vector<double> good(4, 0.1);
    CHECK_NOTHROW(f.ansatz.bind(good));
    std::vector<double> bad(5, 0.1);
    CHECK_THROWS_AS(f.ansatz.bind(bad), Error);
}

TEST_CASE("shard-stable parameter sampling") {
    Fixture f = builtin_fixture("qloq-circuit-A");
    const double a = expressibility(f.ansatz, 500, 75, 1212);
    const double b = expressibility(f.ansatz, 500, 75, 1212);
    CHECK(a == b);
}
