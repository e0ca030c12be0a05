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

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "qloq/circuit.hpp"
#include "qloq/common.hpp"

namespace qloq {

// All counts are exact integers computed in 64-bit integer arithmetic; the
// closed forms stay far below overflow for every supported argument range.

inline long long ipow2(int e) {
    require(e >= 0 && e < 62, "2^e out of the supported range");
    return 1LL << e;
}
inline long long ipow4(int e) {
    require(e >= 0 && e < 31, "4^e out of the supported range");
    return 1LL << (2 * e);
}

/// Physical two-level entangler count of an n-qubit multi-controlled gate
/// between two carriers holding g_a and g_b qubits: 2^{g_a+g_b-n}.
inline long long bridge_cost(int g_a, int g_b, int n) {
    require(g_a >= 1 && g_b >= 1, "carrier sizes must be >= 1");
    require(n >= 2 && n <= g_a + g_b, "gate arity must satisfy 2 <= n <= g_a+g_b");
    return ipow2(g_a + g_b - n);
}

/// Entangler count of an n-qubit multi-controlled phase/X gate touching one
/// carrier of g qubits plus x external single qubits that each have an
/// auxiliary level available: 2x - 2 + 2^{g-n+x}.
inline long long external_cost(int g, int n, int x) {
    require(x >= 1, "external-qubit rule requires x >= 1 (x = 0 gates are internal, k = 0)");
    require(g >= 1 && n >= 2, "bad carrier size or arity");
    require(n - x <= g && n - x >= 0, "internal qubit count n-x must fit on the carrier");
    return 2LL * x - 2 + ipow2(g - n + x);
}

enum class McRefMode { QubitPlain, QubitLowerBound, AuxLevel };

/// Reference entangler counts for n-qubit Toffoli-family gates.
///  - QubitPlain: cited ancilla-free CNOT counts (6 for CCX, 14 for CCCX).
///  - QubitLowerBound: 2n.
///  - AuxLevel: 2q - 3 for a gate spread over q carriers with auxiliary levels.
inline long long multicontrolled_reference_cost(int n, McRefMode mode) {
    switch (mode) {
        case McRefMode::QubitPlain:
            if (n == 2) return 1;
            if (n == 3) return 6;
            if (n == 4) return 14;
            throw Error("no cited ancilla-free count for arity " + std::to_string(n));
        case McRefMode::QubitLowerBound:
            require(n >= 2, "arity must be >= 2");
            return 2LL * n;
        case McRefMode::AuxLevel:
            require(n >= 2, "carrier count must be >= 2");
            return 2LL * n - 3;
    }
    throw Error("unreachable");
}

/// Minimum entangler count to entangle N qubits at max G qubits per carrier:
/// ceil(N/G) - 1.
inline long long min_entangling_count(long long n_qubits, long long max_g) {
    require(n_qubits >= 1 && max_g >= 1, "N and G must be >= 1");
    return (n_qubits + max_g - 1) / max_g - 1;
}

/// Worst-case CNOT lower bound for an arbitrary n-qubit unitary in qubit
/// encoding: ceil((4^n - 3n - 1) / 4).
inline long long qubit_unitary_lower_bound(int n) {
    require(n >= 1, "n must be >= 1");
    const long long num = ipow4(n) - 3LL * n - 1;
    return (num + 3) / 4;
}

/// Entangler lower bound for an arbitrary unitary over a carrier partition.
/// Parameter-counting argument: the initial local layer provides
/// sum(4^{g_i} - 1) parameters and every entangler applied between the two
/// largest carriers admits (4^{g_c} - 2^{g_c}) + (4^{g_t} - 2^{g_t}) more.
/// For a uniform partition this reproduces the closed form
/// ceil((4^n - 1 - (4^g - 1) n/g) / (2 (4^g - 2^g))).
inline long long qloq_unitary_lower_bound(const std::vector<int>& partition) {
    require(!partition.empty(), "partition must be non-empty");
    int n = 0;
    long long initial = 0;
    for (int g : partition) {
        require(g >= 1, "carrier sizes must be >= 1");
        n += g;
        initial += ipow4(g) - 1;
    }
    const long long needed = ipow4(n) - 1;
    if (initial >= needed) return 0;
    std::vector<int> sorted = partition;
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    require(sorted.size() >= 2, "a single carrier cannot need entanglers");
    const long long inc = (ipow4(sorted[0]) - ipow2(sorted[0])) +
                          (ipow4(sorted[1]) - ipow2(sorted[1]));
    return (needed - initial + inc - 1) / inc;
}

// -- Shannon-decomposition cost forms ----------------------------------------

/// 4^{n-l} (c_l + 3 * 2^{l-1}) - 3 * 2^{n-1}.
inline long long qsd_cost_qubit_base(int n, int l, long long c_l) {
    require(n >= l && l >= 1, "need n >= l >= 1");
    return ipow4(n - l) * (c_l + 3 * ipow2(l - 1)) - 3 * ipow2(n - 1);
}

/// (23/48) 4^n - (3/2) 2^n + 4/3, evaluated exactly in rationals.
inline long long qsd_cost_qubit_optimized(int n) {
    require(n >= 2, "n must be >= 2");
    const long long num = 23 * ipow4(n) - 72 * ipow2(n) + 64;
    require(num % 48 == 0, "optimized QSD cost is not integral");
    return num / 48;
}

/// (3/2) 4^n (1/2)^g - 3 * 2^{n-1}.
inline long long qsd_cost_qloq(int n, int g) {
    require(n > g && g >= 1, "qloq mode requires 1 <= g < n");
    return 3 * ipow4(n - g) * ipow2(g - 1) - 3 * ipow2(n - 1);
}

/// Round-trip remapping cost for f qubits merged onto one carrier:
/// 2 * sum_{a=2..f} 2^a = 2^{f+2} - 8. One-way is half.
inline long long remap_cost(int f, bool round_trip = true) {
    require(f >= 2, "remapping needs f >= 2");
    const long long rt = ipow2(f + 2) - 8;
    return round_trip ? rt : rt / 2;
}

/// qsd_cost_qloq plus the round-trip remap overhead 2^{g+2} - 8.
inline long long qsd_cost_qloq_with_remap(int n, int g) {
    return qsd_cost_qloq(n, g) + remap_cost(g, true);
}

// -- runtime speedup ----------------------------------------------------------

/// (success_a / success_b) * (rate_a / rate_b) * (iters_b / iters_a).
inline double speedup_estimate(double success_a, double success_b, double rate_a,
                               double rate_b, double iters_a, double iters_b) {
    require(success_a > 0 && success_b > 0 && rate_a > 0 && rate_b > 0 && iters_a > 0 &&
                iters_b > 0,
            "speedup inputs must be positive");
    return (success_a / success_b) * (rate_a / rate_b) * (iters_b / iters_a);
}

// ---------------------------------------------------------------------------
// Gate-by-gate circuit costing
// ---------------------------------------------------------------------------

enum class CostRule { Internal, BridgeEq1, ExternalEq15, Unsupported, HeuristicUpperBound };

inline const char* cost_rule_name(CostRule r) {
    switch (r) {
        case CostRule::Internal: return "internal";
        case CostRule::BridgeEq1: return "bridge-eq1";
        case CostRule::ExternalEq15: return "external-eq15";
        case CostRule::Unsupported: return "unsupported";
        case CostRule::HeuristicUpperBound: return "heuristic-upper-bound";
    }
    return "?";
}

struct GateCost {
    int gate_index = 0;
    long long k = 0;
    CostRule rule = CostRule::Internal;
    std::string note;
};

struct CostReport {
    std::vector<GateCost> per_gate;
    long long total = 0;
    bool has_unsupported = false;
};

struct CostOptions {
    bool aux_levels = false;       // enable the external-qubit rule
    bool heuristic = false;        // price unsupported spans as an upper bound
    bool strict = false;           // throw instead of tagging unsupported
};

/**
 * Prices a logical circuit gate by gate under a QLOQ map.
 *
 * Rules, in order: support inside one carrier is free; support spanning
 * exactly two carriers is priced by the bridge formula (a cross-carrier swap
 * counts as three logical CNOTs); a multi-controlled phase/X gate covering
 * one carrier plus x external single qubits is priced by the auxiliary-level
 * formula when aux_levels is set. Anything else has no exact published price
 * and is tagged unsupported, or priced by control removal to a fully spanning
 * gate (an upper bound) when the heuristic option is set.
 */
inline CostReport circuit_cost(const LogicalCircuit& circuit, const QloqMap& map,
                               const CostOptions& options = {}) {
    circuit.validate();
    map.require_valid();
    require(circuit.num_qubits == map.num_qubits(), "circuit width does not match map");
    CostReport report;
    for (int gi = 0; gi < static_cast<int>(circuit.gates.size()); ++gi) {
        const LogicalGate& g = circuit.gates[gi];
        require(g.kind != GateKind::Unitary,
                "opaque-unitary blocks have no gate-by-gate price; synthesize them instead");
        GateCost gc;
        gc.gate_index = gi;

        std::set<int> carriers;
        for (int q : g.support()) carriers.insert(map.carrier_of(q));
        const int m = static_cast<int>(carriers.size());
        const int n = g.arity();

        if (m == 1) {
            gc.rule = CostRule::Internal;
            gc.k = 0;
        } else if (m == 2) {
            auto it = carriers.begin();
            const int ga = map.carrier_qubits(*it++);
            const int gb = map.carrier_qubits(*it);
            if (g.kind == GateKind::Swap) {
                gc.rule = CostRule::BridgeEq1;
                gc.k = 3 * bridge_cost(ga, gb, 2);
                gc.note = "cross-carrier swap: 3 logical CNOTs";
            } else if (g.kind == GateKind::Mcx || g.kind == GateKind::Mcz) {
                gc.rule = CostRule::BridgeEq1;
                gc.k = bridge_cost(ga, gb, n);
            } else {
                gc.rule = CostRule::Unsupported;
                gc.note = "no published price for this gate kind across carriers";
            }
        } else {
            // m >= 3 carriers
            int multi = 0, multi_g = 1, singles = 0;
            long long sum_g = 0;
            for (int c : carriers) {
                const int gc_sz = map.carrier_qubits(c);
                sum_g += gc_sz;
                if (gc_sz > 1) { ++multi; multi_g = gc_sz; }
                else ++singles;
            }
            const bool mc_family = g.kind == GateKind::Mcx || g.kind == GateKind::Mcz;
            if (mc_family && options.aux_levels && multi <= 1) {
                const int gsz = multi == 1 ? multi_g : 1;
                gc.rule = CostRule::ExternalEq15;
                gc.k = external_cost(gsz, n, singles);
            } else if (options.heuristic && mc_family) {
                gc.rule = CostRule::HeuristicUpperBound;
                gc.k = ipow2(static_cast<int>(sum_g) - n) * (2 * m - 3);
                gc.note = "upper bound: control removal to a fully spanning gate";
            } else {
                gc.rule = CostRule::Unsupported;
                gc.note = options.aux_levels
                              ? "gate spans more than one multi-qubit carrier"
                              : "gate spans >2 carriers (enable aux levels or heuristic)";
            }
        }

        if (gc.rule == CostRule::Unsupported) {
            if (options.strict)
                throw Error("gate " + std::to_string(gi) + " unsupported: " + gc.note);
            report.has_unsupported = true;
        }
        report.total += gc.k;
        report.per_gate.push_back(std::move(gc));
    }
    return report;
}

} // namespace qloq
