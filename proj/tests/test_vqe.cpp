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
#include "qloq/vqe.hpp"

using namespace qloq;

namespace {
PauliHamiltonian toy_hamiltonian() {
    return PauliHamiltonian::from_terms({{1.0, "ZZ"}, {0.5, "XI"}});
}
double ground_energy(const PauliHamiltonian& h) {
    Eigen::SelfAdjointEigenSolver<Mat> es(h.dense());
    return es.eigenvalues().minCoeff();
}
} // namespace

TEST_CASE("grouping by shared tensor-product basis") {
    auto zz_zi = PauliHamiltonian::from_terms({{1.0, "ZZ"}, {0.5, "ZI"}});
    CHECK(zz_zi.groups.size() == 1);

    auto xx_zz = PauliHamiltonian::from_terms({{1.0, "XX"}, {1.0, "ZZ"}});
    CHECK(xx_zz.groups.size() == 2);

    auto single = PauliHamiltonian::from_terms({{1.0, "ZZ"}});
    CHECK(single.groups.size() == 1);
    CHECK(single.num_qubits == 2);

    CHECK_THROWS_AS(PauliHamiltonian::from_terms({{1.0, "ZB"}}), Error);
    CHECK_THROWS_AS(PauliHamiltonian::from_terms({{1.0, "ZZ"}, {1.0, "Z"}}), Error);
}

TEST_CASE("exact expectation: basis states and matrix oracle") {
    auto hz = PauliHamiltonian::from_terms({{1.0, "Z"}});
    MixedRadixState zero(QloqMap::qubit_encoding(1));
    CHECK(expectation_exact(zero, hz) == Catch::Approx(1.0));
    MixedRadixState one = MixedRadixState::from_bitstring(QloqMap::qubit_encoding(1), "1");
    CHECK(expectation_exact(one, hz) == Catch::Approx(-1.0));

    Rng rng(4);
    auto h = PauliHamiltonian::from_terms(
        {{0.7, "XY"}, {-1.3, "ZZ"}, {0.4, "IX"}, {0.9, "YI"}});
    for (int trial = 0; trial < 5; ++trial) {
        Vec amp(4);
        for (int i = 0; i < 4; ++i) amp(i) = cxd(rng.normal(), rng.normal());
        amp.normalize();
        MixedRadixState st(QloqMap::qubit_encoding(2), amp);
        const cxd want = (amp.adjoint() * h.dense() * amp)(0, 0);
        CHECK(expectation_exact(st, h) == Catch::Approx(want.real()).margin(1e-10));
    }
}

TEST_CASE("grouped estimation equals term-by-term estimation in exact mode") {
    auto h = PauliHamiltonian::from_terms(
        {{0.8, "ZZI"}, {0.3, "ZIZ"}, {-0.5, "XXI"}, {0.2, "IXX"}, {0.1, "YYY"}});
    Rng rng(9);
    Vec amp(8);
    for (int i = 0; i < 8; ++i) amp(i) = cxd(rng.normal(), rng.normal());
    amp.normalize();
    MixedRadixState st(QloqMap::qubit_encoding(3), amp);
    const double grouped = expectation_exact(st, h);
    double termwise = 0;
    for (const auto& t : h.terms) {
        auto single = PauliHamiltonian::from_terms({t});
        termwise += expectation_exact(st, single);
    }
    CHECK(grouped == Catch::Approx(termwise).margin(1e-12));
}

TEST_CASE("sampled expectation: deterministic outcome and binomial bound") {
    auto hz = PauliHamiltonian::from_terms({{1.0, "Z"}});
    MixedRadixState zero(QloqMap::qubit_encoding(1));
    const auto exact_case = expectation_sampled(zero, hz, 500, 3);
    CHECK(exact_case.energy == 1.0);
    CHECK(exact_case.stderr_ == 0.0);

    auto hx = PauliHamiltonian::from_terms({{1.0, "X"}});
    MixedRadixState plus(QloqMap::qubit_encoding(1));
    plus.apply_logical(LogicalGate::h(0));
    const auto xcase = expectation_sampled(plus, hx, 1000000, 5);
    CHECK(std::abs(xcase.energy - 1.0) < 3.0 / std::sqrt(1e6) + 1e-9);
}

TEST_CASE("sampled estimator is unbiased against the exact value") {
    auto h = toy_hamiltonian();
    Fixture f = builtin_fixture("su4-carrier");
    Rng rng(12);
    std::vector<double> params(15);
    for (auto& p : params) p = rng.angle();
    MixedRadixState st(QloqMap::qubit_encoding(2));
    st.apply(f.ansatz.bind(params));
    const double exact = expectation_exact(st, h);

    const int reps = 100;
    const long shots = 4000;
    double mean = 0, var = 0;
    std::vector<double> estimates;
    for (int r = 0; r < reps; ++r) {
        const auto est = expectation_sampled(st, h, shots, 1000 + r);
        estimates.push_back(est.energy);
        mean += est.energy / reps;
    }
    for (double e : estimates) var += (e - mean) * (e - mean) / reps;
    const double sem = std::sqrt(var / reps);
    CHECK(std::abs(mean - exact) < 3.0 * sem + 1e-12);
}

TEST_CASE("nelder-mead: convex sanity and descent property") {
    auto quad = [](const std::vector<double>& x) { return (x[0] - 1.0) * (x[0] - 1.0); };
    auto res = nelder_mead(quad, {0.0}, 400, 7);
    CHECK(std::abs(res.best_params[0] - 1.0) < 1e-4);

    auto rastrigin = [](const std::vector<double>& x) {
        return 10.0 + x[0] * x[0] - 10.0 * std::cos(2 * kPi * x[0]);
    };
    const double initial = rastrigin({0.45});
    auto r2 = nelder_mead(rastrigin, {0.45}, 200, 7);
    CHECK(r2.best_value <= initial);
    CHECK_THROWS_AS(nelder_mead(quad, {0.0}, 0, 1), Error);
}

TEST_CASE("vqe: identity ansatz on |01> reproduces the diagonal element") {
    auto h = toy_hamiltonian();
    ParameterizedAnsatz idle;
    idle.id = "idle";
    idle.base.num_qubits = 2;
    idle.map = QloqMap::qubit_encoding(2);
    VqeOptions opt;
    opt.budget = 1;
    opt.input_state = "01";
    VqeTrace tr = vqe_run(idle, h, opt);
    REQUIRE(tr.iterations.size() >= 1);
    MixedRadixState st = MixedRadixState::from_bitstring(QloqMap::qubit_encoding(2), "01");
    CHECK(tr.iterations[0].energy == Catch::Approx(expectation_exact(st, h)).margin(1e-12));
}

TEST_CASE("vqe: exact mode reaches the ground energy of the toy Hamiltonian") {
    auto h = toy_hamiltonian();
    Fixture f = builtin_fixture("su4-carrier");
    VqeOptions opt;
    opt.budget = 4000;
    opt.seed = 3;
    VqeTrace tr = vqe_run(f.ansatz, h, opt);
    const double e0 = ground_energy(h);
    CHECK(tr.best_energy <= e0 + 1e-3);
    // variational bound: nothing dips below the spectrum
    for (const auto& it : tr.iterations) CHECK(it.energy >= e0 - 1e-9);
    CHECK(tr.best_energy >= e0 - 1e-9);
}

TEST_CASE("vqe: monotone best-so-far trace and budget respected") {
    auto h = toy_hamiltonian();
    Fixture f = builtin_fixture("su4-carrier");
    VqeOptions opt;
    opt.budget = 60;
    VqeTrace tr = vqe_run(f.ansatz, h, opt);
    CHECK(static_cast<long>(tr.iterations.size()) <= opt.budget);
    double best = tr.iterations[0].energy;
    for (const auto& it : tr.iterations) best = std::min(best, it.energy);
    CHECK(tr.best_energy == Catch::Approx(best));
}

TEST_CASE("vqe: reproducible under fixed seed") {
    auto h = toy_hamiltonian();
    Fixture f = builtin_fixture("su4-carrier");
    VqeOptions opt;
    opt.budget = 80;
    opt.shots_per_group = 256;
    opt.seed = 21;
    VqeTrace a = vqe_run(f.ansatz, h, opt);
    VqeTrace b = vqe_run(f.ansatz, h, opt);
    REQUIRE(a.iterations.size() == b.iterations.size());
    for (std::size_t i = 0; i < a.iterations.size(); ++i)
        CHECK(a.iterations[i].energy == b.iterations[i].energy);
}
