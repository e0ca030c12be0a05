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

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qloq/circuit.hpp"
#include "qloq/common.hpp"
#include "qloq/cost.hpp"
#include "qloq/vqe.hpp"

namespace qloq {

inline constexpr const char* kVersion = "1.0.0";

using nlohmann::json;

// ---------------------------------------------------------------------------
// Complex grids
// ---------------------------------------------------------------------------

inline json matrix_to_json(const Mat& m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            row.push_back({m(r, c).real(), m(r, c).imag()});
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Mat matrix_from_json(const json& j) {
    require(j.is_array() && !j.empty(), "matrix JSON must be a non-empty array of rows");
    const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
    const Eigen::Index cols = static_cast<Eigen::Index>(j[0].size());
    Mat m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
        require(j[r].is_array() && static_cast<Eigen::Index>(j[r].size()) == cols,
                "ragged matrix JSON");
        for (Eigen::Index c = 0; c < cols; ++c) {
            const auto& e = j[r][c];
            require(e.is_array() && e.size() == 2, "complex entries are [re, im] pairs");
            m(r, c) = cxd(e[0].get<double>(), e[1].get<double>());
        }
    }
    return m;
}

// ---------------------------------------------------------------------------
// Logical circuit JSON
// ---------------------------------------------------------------------------

struct ParsedCircuit {
    LogicalCircuit circuit;
    std::optional<QloqMap> map;
};

inline json circuit_to_json(const LogicalCircuit& c, const std::optional<QloqMap>& map = {}) {
    json j;
    j["qubits"] = c.num_qubits;
    if (map) j["map"] = map->partition;
    json gates = json::array();
    for (const auto& g : c.gates) {
        json gj;
        gj["kind"] = gate_kind_name(g.kind);
        if (!g.controls.empty()) gj["controls"] = g.controls;
        if (!g.negated_controls.empty()) gj["negated_controls"] = g.negated_controls;
        gj["target"] = g.targets;
        if (!g.params.empty()) gj["params"] = g.params;
        if (g.kind == GateKind::Unitary) gj["matrix"] = matrix_to_json(g.matrix);
        gates.push_back(std::move(gj));
    }
    j["gates"] = std::move(gates);
    return j;
}

inline ParsedCircuit parse_circuit(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(std::string("malformed circuit JSON: ") + e.what());
    }
    require(j.contains("qubits") && j["qubits"].is_number_integer(),
            "circuit JSON needs an integer 'qubits' field");
    ParsedCircuit out;
    out.circuit.num_qubits = j["qubits"].get<int>();
    if (j.contains("map")) {
        QloqMap m(j["map"].get<std::vector<std::vector<int>>>());
        auto violations = m.validate();
        require(violations.empty(), violations.empty() ? "" : violations.front().message);
        out.map = std::move(m);
    }
    for (const auto& gj : j.value("gates", json::array())) {
        require(gj.contains("kind") && gj["kind"].is_string(), "gate needs a string 'kind'");
        const auto kind = gate_kind_from_name(gj["kind"].get<std::string>());
        require(kind.has_value(), "unknown gate kind: " + gj["kind"].get<std::string>());
        LogicalGate g;
        g.kind = *kind;
        g.controls = gj.value("controls", std::vector<int>{});
        g.negated_controls = gj.value("negated_controls", std::vector<int>{});
        g.targets = gj.value("target", std::vector<int>{});
        g.params = gj.value("params", std::vector<double>{});
        if (gj.contains("matrix")) g.matrix = matrix_from_json(gj["matrix"]);
        out.circuit.gates.push_back(std::move(g));
    }
    out.circuit.validate();
    return out;
}

// ---------------------------------------------------------------------------
// Physical circuit JSON
// ---------------------------------------------------------------------------

inline json physical_to_json(const PhysicalCircuit& pc) {
    json j;
    j["map"] = pc.map.partition;
    j["entangler_count"] = pc.entangler_count();
    json ops = json::array();
    for (const auto& op : pc.ops) {
        json oj;
        if (op.kind == PhysicalOp::Kind::LocalUnitary) {
            oj["kind"] = "local";
            oj["carrier"] = op.carrier;
            oj["matrix"] = matrix_to_json(op.matrix);
        } else {
            oj["kind"] = op.flavor == PhysicalOp::Flavor::CX ? "cx" : "cz";
            oj["control_carrier"] = op.control_carrier;
            oj["control_level"] = op.control_level;
            oj["target_carrier"] = op.target_carrier;
            oj["t0"] = op.t0;
            oj["t1"] = op.t1;
        }
        ops.push_back(std::move(oj));
    }
    j["ops"] = std::move(ops);
    return j;
}

inline PhysicalCircuit physical_from_json(const json& j) {
    PhysicalCircuit pc;
    pc.map = QloqMap(j.at("map").get<std::vector<std::vector<int>>>());
    for (const auto& oj : j.at("ops")) {
        const std::string kind = oj.at("kind").get<std::string>();
        if (kind == "local") {
            pc.ops.push_back(PhysicalOp::local(oj.at("carrier").get<int>(),
                                               matrix_from_json(oj.at("matrix"))));
        } else if (kind == "cx" || kind == "cz") {
            PhysicalOp op = PhysicalOp::cx(
                oj.at("control_carrier").get<int>(), oj.at("control_level").get<int>(),
                oj.at("target_carrier").get<int>(), oj.at("t0").get<int>(),
                oj.at("t1").get<int>());
            if (kind == "cz") op.flavor = PhysicalOp::Flavor::CZ;
            pc.ops.push_back(op);
        } else {
            throw Error("unknown physical op kind: " + kind);
        }
    }
    pc.validate();
    return pc;
}

// ---------------------------------------------------------------------------
// Hamiltonian JSON-lines
// ---------------------------------------------------------------------------

inline PauliHamiltonian parse_hamiltonian(const std::string& jsonl) {
    std::vector<PauliTerm> terms;
    std::istringstream in(jsonl);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        json j;
        try {
            j = json::parse(line);
        } catch (const json::exception& e) {
            throw Error("Hamiltonian line " + std::to_string(lineno) + ": " + e.what());
        }
        require(j.contains("coeff") && j.contains("pauli"),
                "Hamiltonian line " + std::to_string(lineno) +
                    " needs 'coeff' and 'pauli' fields");
        terms.push_back({j["coeff"].get<double>(), j["pauli"].get<std::string>()});
    }
    return PauliHamiltonian::from_terms(std::move(terms));
}

// ---------------------------------------------------------------------------
// Cost report serialization
// ---------------------------------------------------------------------------

inline json cost_report_to_json(const CostReport& r) {
    json j;
    j["total"] = r.total;
    j["has_unsupported"] = r.has_unsupported;
    json rows = json::array();
    for (const auto& gc : r.per_gate) {
        json row;
        row["gate_index"] = gc.gate_index;
        row["k"] = gc.k;
        row["rule"] = cost_rule_name(gc.rule);
        if (!gc.note.empty()) row["note"] = gc.note;
        rows.push_back(std::move(row));
    }
    j["per_gate"] = std::move(rows);
    return j;
}

inline std::string cost_report_to_csv(const CostReport& r) {
    std::ostringstream out;
    out << "gate_index,k\n";
    for (const auto& gc : r.per_gate) out << gc.gate_index << "," << gc.k << "\n";
    out << "total," << r.total << "\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// Files, CSV, manifests
// ---------------------------------------------------------------------------

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    require(in.good(), "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    require(out.good(), "cannot write " + path);
    out << contents;
}

/// FNV-1a 64-bit content digest, hex-encoded.
inline std::string digest_hex(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

class CsvBuilder {
  public:
    explicit CsvBuilder(std::vector<std::string> header) {
        append_row(header);
    }
    void append_row(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out_ << ',';
            out_ << cells[i];
        }
        out_ << '\n';
    }
    std::string str() const { return out_.str(); }

  private:
    std::ostringstream out_;
};

inline std::string format_double(double v, int precision = 9) {
    std::ostringstream ss;
    ss.precision(precision);
    ss << v;
    return ss.str();
}

/**
 * Run manifest written alongside every CLI output. Timestamps live only
 * here, never in the data files, so identical argv + seed reproduce
 * byte-identical outputs.
 */
inline json run_manifest(const std::string& subcommand, const std::vector<std::string>& inputs,
                         std::uint64_t seed,
                         const std::vector<std::pair<std::string, std::string>>& output_digests,
                         const std::string& timestamp) {
    json j;
    j["subcommand"] = subcommand;
    j["inputs"] = inputs;
    j["seed"] = seed;
    j["tool_version"] = kVersion;
    j["timestamp"] = timestamp;
    json outs = json::object();
    for (const auto& [path, digest] : output_digests) outs[path] = digest;
    j["outputs"] = std::move(outs);
    return j;
}

} // namespace qloq
