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

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qloq/circuit.hpp"
#include "qloq/common.hpp"
#include "qloq/linalg.hpp"
#include "qloq/rng.hpp"

namespace qloq {

/**
 * Dense state vector over a carrier product space.
 *
 * The amplitude index is the mixed-radix digit string over carriers,
 * carrier-major and big-endian within each carrier. With that convention the
 * logical basis index and the physical basis index coincide, so logical gates
 * (addressed by qubit) and physical ops (addressed by carrier/level) act on
 * the same vector without any permutation bookkeeping.
 *
 * Operations mutate in place; `applied` returns a mutated copy and leaves the
 * original untouched. Concurrent reads are safe, concurrent mutation is not.
 */
class MixedRadixState {
  public:
    explicit MixedRadixState(QloqMap map) : map_(std::move(map)) {
        map_.require_valid();
        init_strides();
        amp_ = Vec::Zero(dim_);
        amp_(0) = 1.0;
    }

    MixedRadixState(QloqMap map, Vec amplitudes) : map_(std::move(map)) {
        map_.require_valid();
        init_strides();
        require(amplitudes.size() == dim_, "amplitude vector has wrong dimension");
        amp_ = std::move(amplitudes);
    }

    /// Computational basis state |index> (index over the identity iso).
    static MixedRadixState basis(QloqMap map, long index) {
        MixedRadixState st(std::move(map));
        require(index >= 0 && index < st.dim_, "basis index out of range");
        st.amp_.setZero();
        st.amp_(index) = 1.0;
        return st;
    }

    /// Basis state from a logical bitstring such as "0101" (qubit 0 first).
    static MixedRadixState from_bitstring(QloqMap map, const std::string& bits) {
        require(static_cast<int>(bits.size()) == map.num_qubits(),
                "bitstring length must equal qubit count");
        long idx = 0;
        for (int q = 0; q < static_cast<int>(bits.size()); ++q) {
            require(bits[q] == '0' || bits[q] == '1', "bitstring must be binary");
            if (bits[q] == '1') idx |= 1L << map.bit_shift(q);
        }
        return basis(std::move(map), idx);
    }

    const QloqMap& map() const { return map_; }
    long dim() const { return dim_; }
    const Vec& amplitudes() const { return amp_; }
    Vec& amplitudes() { return amp_; }

    double norm() const { return amp_.norm(); }

    int digit(long index, int carrier) const {
        return static_cast<int>((index / stride_[carrier]) % map_.levels(carrier));
    }

    // -- physical ops --------------------------------------------------------

    void apply_local(int carrier, const Mat& m) {
        const long L = map_.levels(carrier);
        require(m.rows() == L && m.cols() == L, "local matrix dimension mismatch");
        const long stride = stride_[carrier];
        const long block = stride * L;
        Vec tmp(L);
        for (long hi = 0; hi < dim_; hi += block) {
            for (long lo = 0; lo < stride; ++lo) {
                const long base = hi + lo;
                for (long l = 0; l < L; ++l) tmp(l) = amp_(base + l * stride);
                tmp = m * tmp;
                for (long l = 0; l < L; ++l) amp_(base + l * stride) = tmp(l);
            }
        }
    }

    void apply_two_level(const PhysicalOp& op) {
        require(op.kind == PhysicalOp::Kind::TwoLevelEntangler, "expected entangler op");
        op.validate(map_);
        const long cs = stride_[op.control_carrier];
        const long ts = stride_[op.target_carrier];
        if (op.flavor == PhysicalOp::Flavor::CX) {
            const long delta = (static_cast<long>(op.t1) - op.t0) * ts;
            for (long i = 0; i < dim_; ++i) {
                if ((i / cs) % map_.levels(op.control_carrier) != op.control_level) continue;
                if ((i / ts) % map_.levels(op.target_carrier) != op.t0) continue;
                std::swap(amp_(i), amp_(i + delta));
            }
        } else {
            for (long i = 0; i < dim_; ++i) {
                if ((i / cs) % map_.levels(op.control_carrier) != op.control_level) continue;
                if ((i / ts) % map_.levels(op.target_carrier) != op.t1) continue;
                amp_(i) = -amp_(i);
            }
        }
    }

    void apply_physical(const PhysicalOp& op) {
        if (op.kind == PhysicalOp::Kind::LocalUnitary)
            apply_local(op.carrier, op.matrix);
        else
            apply_two_level(op);
    }

    void apply(const PhysicalCircuit& pc) {
        for (const auto& op : pc.ops) apply_physical(op);
    }

    // -- logical gates (map-agnostic via the identity iso) --------------------

    void apply_logical(const LogicalGate& g) {
        g.validate(map_.num_qubits());
        switch (g.kind) {
            case GateKind::Rx: apply_1q(g.targets[0], rx(g.params[0])); return;
            case GateKind::Ry: apply_1q(g.targets[0], ry(g.params[0])); return;
            case GateKind::Rz: apply_1q(g.targets[0], rz(g.params[0])); return;
            case GateKind::X: apply_1q(g.targets[0], pauli_x()); return;
            case GateKind::H: apply_1q(g.targets[0], hadamard()); return;
            case GateKind::Swap: {
                const long ba = 1L << map_.bit_shift(g.targets[0]);
                const long bb = 1L << map_.bit_shift(g.targets[1]);
                for (long i = 0; i < dim_; ++i)
                    if ((i & ba) && !(i & bb)) std::swap(amp_(i), amp_((i & ~ba) | bb));
                return;
            }
            case GateKind::Mcx: {
                const long tb = 1L << map_.bit_shift(g.targets[0]);
                for (long i = 0; i < dim_; ++i)
                    if (!(i & tb) && controls_satisfied(g, i)) std::swap(amp_(i), amp_(i | tb));
                return;
            }
            case GateKind::Mcz: {
                const long tb = 1L << map_.bit_shift(g.targets[0]);
                for (long i = 0; i < dim_; ++i)
                    if ((i & tb) && controls_satisfied(g, i)) amp_(i) = -amp_(i);
                return;
            }
            case GateKind::Unitary: {
                apply_block(g.targets, g.matrix);
                return;
            }
        }
    }

    void apply(const LogicalCircuit& c) {
        require(c.num_qubits == map_.num_qubits(), "circuit width does not match map");
        for (const auto& g : c.gates) apply_logical(g);
    }

    MixedRadixState applied(const LogicalGate& g) const {
        MixedRadixState out = *this;
        out.apply_logical(g);
        return out;
    }
    MixedRadixState applied(const PhysicalOp& op) const {
        MixedRadixState out = *this;
        out.apply_physical(op);
        return out;
    }

    // -- reductions -----------------------------------------------------------

    /// Tr[rho_j^2] for the single-qubit reduced state of logical qubit j.
    double reduced_purity(int qubit) const {
        const long b = 1L << map_.bit_shift(qubit);
        double r00 = 0, r11 = 0;
        cxd r01 = 0;
        for (long i = 0; i < dim_; ++i) {
            if (i & b) continue;
            const cxd a0 = amp_(i), a1 = amp_(i | b);
            r00 += std::norm(a0);
            r11 += std::norm(a1);
            r01 += a0 * std::conj(a1);
        }
        return r00 * r00 + r11 * r11 + 2.0 * std::norm(r01);
    }

    /// Multinomial sample of logical bitstrings, deterministic under `seed`.
    std::map<std::string, long> sample(long shots, std::uint64_t seed) const {
        require(shots >= 1, "shots must be >= 1");
        std::vector<double> cdf(dim_);
        double acc = 0;
        for (long i = 0; i < dim_; ++i) {
            acc += std::norm(amp_(i));
            cdf[i] = acc;
        }
        Rng rng(seed);
        std::map<std::string, long> hist;
        const int n = map_.num_qubits();
        for (long s = 0; s < shots; ++s) {
            const double u = rng.uniform() * acc;
            long lo = 0, hi = dim_ - 1;
            while (lo < hi) {
                const long mid = (lo + hi) / 2;
                if (cdf[mid] <= u) lo = mid + 1; else hi = mid;
            }
            std::string bits(n, '0');
            for (int q = 0; q < n; ++q)
                if (lo & (1L << map_.bit_shift(q))) bits[q] = '1';
            ++hist[bits];
        }
        return hist;
    }

  private:
    void init_strides() {
        dim_ = map_.total_dim();
        require(dim_ <= (1L << 14), "state dimension exceeds the dense-simulation limit");
        stride_.assign(map_.num_carriers(), 1);
        for (int i = map_.num_carriers() - 2; i >= 0; --i)
            stride_[i] = stride_[i + 1] * map_.levels(i + 1);
    }

    bool controls_satisfied(const LogicalGate& g, long index) const {
        for (int c : g.controls) {
            const bool neg = std::find(g.negated_controls.begin(), g.negated_controls.end(),
                                       c) != g.negated_controls.end();
            const bool one = (index >> map_.bit_shift(c)) & 1;
            if (one == neg) return false;
        }
        return true;
    }

    void apply_1q(int qubit, const Mat& m) {
        const long b = 1L << map_.bit_shift(qubit);
        for (long i = 0; i < dim_; ++i) {
            if (i & b) continue;
            const cxd a0 = amp_(i), a1 = amp_(i | b);
            amp_(i) = m(0, 0) * a0 + m(0, 1) * a1;
            amp_(i | b) = m(1, 0) * a0 + m(1, 1) * a1;
        }
    }

    void apply_block(const std::vector<int>& qubits, const Mat& m) {
        const int k = static_cast<int>(qubits.size());
        const long sub = 1L << k;
        std::vector<long> bits(k);
        for (int j = 0; j < k; ++j) bits[j] = 1L << map_.bit_shift(qubits[j]);
        long mask = 0;
        for (long b : bits) mask |= b;
        Vec tmp(sub);
        for (long i = 0; i < dim_; ++i) {
            if (i & mask) continue;
            for (long p = 0; p < sub; ++p) {
                long addr = i;
                for (int j = 0; j < k; ++j)
                    if ((p >> (k - 1 - j)) & 1) addr |= bits[j];
                tmp(p) = amp_(addr);
            }
            tmp = m * tmp;
            for (long p = 0; p < sub; ++p) {
                long addr = i;
                for (int j = 0; j < k; ++j)
                    if ((p >> (k - 1 - j)) & 1) addr |= bits[j];
                amp_(addr) = tmp(p);
            }
        }
    }

    QloqMap map_;
    Vec amp_;
    long dim_ = 0;
    std::vector<long> stride_;
};

// ---------------------------------------------------------------------------
// Circuit-level oracles
// ---------------------------------------------------------------------------

inline Mat circuit_unitary(const LogicalCircuit& c, const QloqMap& map) {
    const long dim = map.total_dim();
    Mat u(dim, dim);
    for (long col = 0; col < dim; ++col) {
        MixedRadixState st = MixedRadixState::basis(map, col);
        st.apply(c);
        u.col(col) = st.amplitudes();
    }
    return u;
}

inline Mat circuit_unitary(const LogicalCircuit& c) {
    return circuit_unitary(c, QloqMap::qubit_encoding(c.num_qubits));
}

inline Mat circuit_unitary(const PhysicalCircuit& pc) {
    const long dim = pc.map.total_dim();
    Mat u(dim, dim);
    for (long col = 0; col < dim; ++col) {
        MixedRadixState st = MixedRadixState::basis(pc.map, col);
        st.apply(pc);
        u.col(col) = st.amplitudes();
    }
    return u;
}

struct Equivalence {
    bool equivalent = false;
    double fidelity = 0.0;
};

/// Global-phase-insensitive operator comparison: |tr(A^dag B)| / dim.
inline Equivalence equivalent_up_to_global_phase(const Mat& a, const Mat& b,
                                                 double tol = 1e-10) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), "dimension mismatch");
    const double fid = std::abs((a.adjoint() * b).trace()) / static_cast<double>(a.rows());
    return {fid >= 1.0 - tol, fid};
}

inline double meyer_wallach(const MixedRadixState& st) {
    const int n = st.map().num_qubits();
    double acc = 0;
    for (int q = 0; q < n; ++q) acc += st.reduced_purity(q);
    return 2.0 * (1.0 - acc / n);
}

} // namespace qloq
