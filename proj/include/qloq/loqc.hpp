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

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "qloq/circuit.hpp"
#include "qloq/common.hpp"
#include "qloq/cost.hpp"

namespace qloq {

// Linear-optical gate success probabilities. Each heralded or post-selected
// entangling gate also consumes two ancilla modes.
inline constexpr double kRalphCzSuccess = 1.0 / 9.0;
inline constexpr double kKnillCzSuccess = 2.0 / 27.0;
inline constexpr int kAncillaModesPerGate = 2;

enum class LayerKind { HeraldedKnill, CascadeRalph };

/**
 * Success probability of one global entangling layer over N qubits at max G
 * qubits per carrier. Heralded layers chain ceil(N/G)-1 Knill-type gates:
 * (2/27)^{ceil(N/G)-1}. The post-selected cascade in qubit encoding follows
 * 3^{-N}; that closed form interpolates the published even-N points (1/9,
 * 1/81, 1/729 at N = 2, 4, 6), which are the authoritative values.
 */
inline double layer_success(LayerKind kind, long long n_qubits, long long max_g = 1) {
    require(n_qubits >= 1 && max_g >= 1, "N and G must be >= 1");
    if (kind == LayerKind::HeraldedKnill) {
        const long long gates = min_entangling_count(n_qubits, max_g);
        return std::pow(kKnillCzSuccess, static_cast<double>(gates));
    }
    if (n_qubits == 1) return 1.0;
    return std::pow(3.0, -static_cast<double>(n_qubits));
}

struct GateModel {
    double default_success = kRalphCzSuccess;
    std::map<int, double> overrides; // op index -> success probability

    void validate() const {
        require(default_success > 0 && default_success <= 1, "success must lie in (0, 1]");
        for (const auto& [_, p] : overrides)
            require(p > 0 && p <= 1, "override success must lie in (0, 1]");
    }
};

/// Product of per-entangler success probabilities; local ops contribute 1.
inline double circuit_success(const PhysicalCircuit& pc, const GateModel& model) {
    model.validate();
    double p = 1.0;
    for (int i = 0; i < static_cast<int>(pc.ops.size()); ++i) {
        if (pc.ops[i].kind != PhysicalOp::Kind::TwoLevelEntangler) continue;
        auto it = model.overrides.find(i);
        p *= (it != model.overrides.end()) ? it->second : model.default_success;
    }
    return p;
}

struct ResourceEstimate {
    long long photons = 0;
    long long modes = 0;
    double success = 1.0;
    std::string notes;
};

/// Photon and mode counts of a spatially encoded circuit: one photon per
/// carrier, 2^{g_i} rail modes per carrier, two ancilla modes per heralded or
/// post-selected entangler, plus caller-supplied dump ports.
inline ResourceEstimate resources(const QloqMap& map, const PhysicalCircuit& pc,
                                  long long dump_ports = 0,
                                  const GateModel& model = GateModel{}) {
    map.require_valid();
    require(dump_ports >= 0, "dump ports must be >= 0");
    ResourceEstimate est;
    est.photons = map.num_carriers();
    long long rails = 0;
    for (int i = 0; i < map.num_carriers(); ++i) rails += map.levels(i);
    est.modes = rails + kAncillaModesPerGate * pc.entangler_count() + dump_ports;
    est.success = circuit_success(pc, model);
    return est;
}

struct SpeedupScenario {
    std::string name;
    double success_a = 1, success_b = 1;
    double rate_a = 1, rate_b = 1;
    double iters_a = 1, iters_b = 1;
};

struct SpeedupRow {
    std::string name;
    double speedup = 1;
};

inline std::vector<SpeedupRow> speedup_table(const std::vector<SpeedupScenario>& scenarios) {
    std::vector<SpeedupRow> rows;
    for (const auto& s : scenarios)
        rows.push_back({s.name, speedup_estimate(s.success_a, s.success_b, s.rate_a, s.rate_b,
                                                 s.iters_a, s.iters_b)});
    return rows;
}

} // namespace qloq
