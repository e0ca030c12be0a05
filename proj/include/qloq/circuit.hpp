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
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qloq/common.hpp"
#include "qloq/linalg.hpp"

namespace qloq {

// ---------------------------------------------------------------------------
// Logical IR
// ---------------------------------------------------------------------------

enum class GateKind { Mcx, Mcz, Rx, Ry, Rz, X, H, Swap, Unitary };

inline const char* gate_kind_name(GateKind k) {
    switch (k) {
        case GateKind::Mcx: return "mcx";
        case GateKind::Mcz: return "mcz";
        case GateKind::Rx: return "rx";
        case GateKind::Ry: return "ry";
        case GateKind::Rz: return "rz";
        case GateKind::X: return "x";
        case GateKind::H: return "h";
        case GateKind::Swap: return "swap";
        case GateKind::Unitary: return "opaque-unitary";
    }
    return "?";
}

inline std::optional<GateKind> gate_kind_from_name(const std::string& s) {
    if (s == "mcx") return GateKind::Mcx;
    if (s == "mcz") return GateKind::Mcz;
    if (s == "rx") return GateKind::Rx;
    if (s == "ry") return GateKind::Ry;
    if (s == "rz") return GateKind::Rz;
    if (s == "x") return GateKind::X;
    if (s == "h") return GateKind::H;
    if (s == "swap") return GateKind::Swap;
    if (s == "opaque-unitary") return GateKind::Unitary;
    return std::nullopt;
}

/**
 * One gate of a qubit-logical circuit.
 *
 * Multi-controlled gates carry a control list plus an optional subset of
 * controls that trigger on |0> instead of |1>. Rotations carry exactly one
 * angle in radians. Opaque unitary blocks carry a dense payload over their
 * target list (most significant qubit first).
 */
struct LogicalGate {
    GateKind kind = GateKind::X;
    std::vector<int> controls;
    std::vector<int> negated_controls;
    std::vector<int> targets;
    std::vector<double> params;
    Mat matrix; // opaque-unitary payload only

    std::vector<int> support() const {
        std::vector<int> s = controls;
        s.insert(s.end(), targets.begin(), targets.end());
        return s;
    }
    int arity() const { return static_cast<int>(controls.size() + targets.size()); }

    bool is_rotation() const {
        return kind == GateKind::Rx || kind == GateKind::Ry || kind == GateKind::Rz;
    }

    static LogicalGate mcx(std::vector<int> ctrls, int target, std::vector<int> neg = {}) {
        LogicalGate g;
        g.kind = GateKind::Mcx;
        g.controls = std::move(ctrls);
        g.negated_controls = std::move(neg);
        g.targets = {target};
        return g;
    }
    static LogicalGate mcz(std::vector<int> ctrls, int target, std::vector<int> neg = {}) {
        LogicalGate g = mcx(std::move(ctrls), target, std::move(neg));
        g.kind = GateKind::Mcz;
        return g;
    }
    static LogicalGate rotation(GateKind axis, int target, double angle) {
        LogicalGate g;
        g.kind = axis;
        g.targets = {target};
        g.params = {angle};
        return g;
    }
    static LogicalGate x(int target) {
        LogicalGate g;
        g.targets = {target};
        return g;
    }
    static LogicalGate h(int target) {
        LogicalGate g;
        g.kind = GateKind::H;
        g.targets = {target};
        return g;
    }
    static LogicalGate swap(int a, int b) {
        LogicalGate g;
        g.kind = GateKind::Swap;
        g.targets = {a, b};
        return g;
    }
    static LogicalGate unitary(std::vector<int> qubits, Mat payload) {
        LogicalGate g;
        g.kind = GateKind::Unitary;
        g.targets = std::move(qubits);
        g.matrix = std::move(payload);
        return g;
    }

    void validate(int num_qubits) const {
        std::set<int> seen;
        for (int q : support()) {
            require(q >= 0 && q < num_qubits,
                    std::string(gate_kind_name(kind)) + ": qubit index " + std::to_string(q) +
                        " out of range for " + std::to_string(num_qubits) + " qubits");
            require(seen.insert(q).second, "gate qubit indices must be distinct");
        }
        for (int q : negated_controls)
            require(std::find(controls.begin(), controls.end(), q) != controls.end(),
                    "negated_controls must be a subset of controls");
        switch (kind) {
            case GateKind::Rx:
            case GateKind::Ry:
            case GateKind::Rz:
                require(params.size() == 1, "rotation gate carries exactly one angle");
                require(controls.empty(), "rotation gates are uncontrolled in this IR");
                require(targets.size() == 1, "rotation gate has one target");
                break;
            case GateKind::Mcx:
            case GateKind::Mcz:
                require(params.empty(), "mcx/mcz carry no parameters");
                require(targets.size() == 1, "mcx/mcz have one target");
                break;
            case GateKind::X:
            case GateKind::H:
                require(params.empty() && controls.empty() && targets.size() == 1,
                        "x/h are single-qubit gates");
                break;
            case GateKind::Swap:
                require(params.empty() && controls.empty() && targets.size() == 2,
                        "swap has exactly two targets");
                break;
            case GateKind::Unitary: {
                require(controls.empty(), "opaque-unitary has no separate control list");
                const Eigen::Index dim = Eigen::Index(1) << targets.size();
                require(matrix.rows() == dim && matrix.cols() == dim,
                        "opaque-unitary payload dimension must be 2^arity");
                require(is_unitary(matrix, 1e-12), "opaque-unitary payload is not unitary");
                break;
            }
        }
    }
};

struct LogicalCircuit {
    int num_qubits = 0;
    std::vector<LogicalGate> gates;

    void validate() const {
        require(num_qubits >= 1, "circuit needs at least one qubit");
        for (const auto& g : gates) g.validate(num_qubits);
    }
};

// ---------------------------------------------------------------------------
// QLOQ map
// ---------------------------------------------------------------------------

struct MapViolation {
    std::string message;
};

/**
 * Ordered partition of logical qubits into carriers. Carrier i holds g_i
 * qubits on 2^{g_i} levels. Qubit order within a carrier follows the
 * partition list; the logical basis index of a carrier is the big-endian
 * concatenation of its qubits' bits, so the logical-to-physical basis map is
 * the identity permutation.
 */
struct QloqMap {
    std::vector<std::vector<int>> partition;

    QloqMap() = default;
    explicit QloqMap(std::vector<std::vector<int>> p) : partition(std::move(p)) {}

    static QloqMap qubit_encoding(int n) {
        QloqMap m;
        for (int q = 0; q < n; ++q) m.partition.push_back({q});
        return m;
    }

    int num_carriers() const { return static_cast<int>(partition.size()); }
    int carrier_qubits(int i) const { return static_cast<int>(partition[i].size()); }
    int levels(int i) const { return 1 << carrier_qubits(i); }
    int num_qubits() const {
        int n = 0;
        for (const auto& c : partition) n += static_cast<int>(c.size());
        return n;
    }
    long total_dim() const {
        long d = 1;
        for (int i = 0; i < num_carriers(); ++i) d *= levels(i);
        return d;
    }
    int max_carrier_qubits() const {
        int g = 0;
        for (const auto& c : partition) g = std::max<int>(g, static_cast<int>(c.size()));
        return g;
    }

    int carrier_of(int qubit) const {
        for (int i = 0; i < num_carriers(); ++i)
            for (int q : partition[i])
                if (q == qubit) return i;
        throw Error("qubit " + std::to_string(qubit) + " not present in map");
    }
    int slot_of(int qubit) const {
        int c = carrier_of(qubit);
        for (int s = 0; s < carrier_qubits(c); ++s)
            if (partition[c][s] == qubit) return s;
        throw Error("unreachable");
    }

    /// Bit shift of `qubit` inside the global basis index (identity iso:
    /// carrier-major, big-endian within carriers).
    int bit_shift(int qubit) const {
        int total = num_qubits();
        int offset = 0;
        for (const auto& carrier : partition) {
            for (std::size_t s = 0; s < carrier.size(); ++s) {
                if (carrier[s] == qubit) return total - 1 - (offset + static_cast<int>(s));
            }
            offset += static_cast<int>(carrier.size());
        }
        throw Error("qubit " + std::to_string(qubit) + " not present in map");
    }

    /// Diagnostic validation: partition property plus optional capacity limit.
    std::vector<MapViolation> validate(int max_g = 0) const {
        std::vector<MapViolation> out;
        std::set<int> seen;
        int n = num_qubits();
        for (int i = 0; i < num_carriers(); ++i) {
            if (partition[i].empty())
                out.push_back({"carrier " + std::to_string(i) + " is empty"});
            for (int q : partition[i]) {
                if (q < 0 || q >= n)
                    out.push_back({"qubit " + std::to_string(q) + " out of range"});
                else if (!seen.insert(q).second)
                    out.push_back({"qubit " + std::to_string(q) + " duplicated"});
            }
            if (max_g > 0 && carrier_qubits(i) > max_g)
                out.push_back({"carrier " + std::to_string(i) + " holds " +
                               std::to_string(carrier_qubits(i)) + " qubits and needs " +
                               std::to_string(levels(i)) + " levels (limit G=" +
                               std::to_string(max_g) + ")"});
        }
        for (int q = 0; q < n; ++q)
            if (!seen.count(q)) out.push_back({"qubit " + std::to_string(q) + " unassigned"});
        return out;
    }

    void require_valid() const {
        auto v = validate();
        if (!v.empty()) throw Error("invalid QLOQ map: " + v.front().message);
    }
};

inline std::vector<MapViolation> validate_map(const QloqMap& map, int max_g) {
    return map.validate(max_g);
}

// ---------------------------------------------------------------------------
// Physical IR
// ---------------------------------------------------------------------------

/**
 * Carrier-level operation: either a local unitary on one carrier, or a
 * two-level entangling gate. The entangler fires when the control carrier is
 * in one designated level; CX exchanges the target level pair (t0, t1), CZ
 * phases -1 the joint (control level, t1) component. All other levels are
 * untouched.
 */
struct PhysicalOp {
    enum class Kind { LocalUnitary, TwoLevelEntangler };
    enum class Flavor { CX, CZ };

    Kind kind = Kind::LocalUnitary;
    int carrier = 0; // local-unitary carrier
    Mat matrix;      // local-unitary payload, dim = levels(carrier)

    int control_carrier = 0;
    int control_level = 0;
    int target_carrier = 0;
    int t0 = 0, t1 = 1;
    Flavor flavor = Flavor::CX;

    static PhysicalOp local(int carrier, Mat m) {
        PhysicalOp op;
        op.kind = Kind::LocalUnitary;
        op.carrier = carrier;
        op.matrix = std::move(m);
        return op;
    }
    static PhysicalOp cx(int cc, int clevel, int tc, int t0, int t1) {
        PhysicalOp op;
        op.kind = Kind::TwoLevelEntangler;
        op.flavor = Flavor::CX;
        op.control_carrier = cc;
        op.control_level = clevel;
        op.target_carrier = tc;
        op.t0 = t0;
        op.t1 = t1;
        return op;
    }
    static PhysicalOp cz(int cc, int clevel, int tc, int t0, int t1) {
        PhysicalOp op = cx(cc, clevel, tc, t0, t1);
        op.flavor = Flavor::CZ;
        return op;
    }

    void validate(const QloqMap& map) const {
        if (kind == Kind::LocalUnitary) {
            require(carrier >= 0 && carrier < map.num_carriers(), "local op: bad carrier");
            const Eigen::Index dim = map.levels(carrier);
            require(matrix.rows() == dim && matrix.cols() == dim,
                    "local op: matrix dimension mismatch");
            require(is_unitary(matrix, 1e-12), "local op: matrix not unitary");
        } else {
            require(control_carrier >= 0 && control_carrier < map.num_carriers(),
                    "entangler: bad control carrier");
            require(target_carrier >= 0 && target_carrier < map.num_carriers(),
                    "entangler: bad target carrier");
            require(control_carrier != target_carrier,
                    "entangler: control and target carriers must differ");
            require(control_level >= 0 && control_level < map.levels(control_carrier),
                    "entangler: control level out of range");
            require(t0 != t1 && t0 >= 0 && t1 >= 0 && t0 < map.levels(target_carrier) &&
                        t1 < map.levels(target_carrier),
                    "entangler: target levels out of range");
        }
    }
};

struct PhysicalCircuit {
    QloqMap map;
    std::vector<PhysicalOp> ops;

    int entangler_count() const {
        int k = 0;
        for (const auto& op : ops)
            if (op.kind == PhysicalOp::Kind::TwoLevelEntangler) ++k;
        return k;
    }

    void validate() const {
        map.require_valid();
        for (const auto& op : ops) op.validate(map);
    }

    void append(const PhysicalCircuit& other) {
        ops.insert(ops.end(), other.ops.begin(), other.ops.end());
    }
};

} // namespace qloq
