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
#include <string>
#include <vector>

#include "qloq/circuit.hpp"
#include "qloq/common.hpp"
#include "qloq/rng.hpp"
#include "qloq/sim.hpp"

namespace qloq {

/**
 * Parameterized circuit: a gate template plus (gate, parameter) bindings.
 * bind() substitutes a full angle vector; sampling draws each parameter
 * i.i.d. uniform on [0, 2*pi).
 */
struct ParameterizedAnsatz {
    std::string id;
    LogicalCircuit base;
    QloqMap map;
    int param_count = 0;
    std::vector<std::pair<int, int>> bindings; // (gate index, parameter index)

    LogicalCircuit bind(const std::vector<double>& params) const {
        require(static_cast<int>(params.size()) == param_count,
                "bind consumes exactly param_count angles");
        LogicalCircuit out = base;
        for (auto [gi, pi] : bindings) out.gates[gi].params[0] = params[pi];
        return out;
    }

    std::vector<double> sample_params(Rng& rng) const {
        std::vector<double> p(param_count);
        for (auto& v : p) v = rng.angle();
        return p;
    }

    MixedRadixState prepare(const std::vector<double>& params) const {
        MixedRadixState st(QloqMap::qubit_encoding(base.num_qubits));
        st.apply(bind(params));
        return st;
    }
};

/// Analytic Haar fidelity mass per histogram bin:
/// p_j = (1 - F_j)^{d-1} - (1 - F_{j+1})^{d-1} with F_j = j / bins.
inline std::vector<double> haar_bin_probs(long dim, int bins = 75) {
    require(dim >= 2, "Hilbert dimension must be >= 2");
    require(bins >= 1, "need at least one bin");
    std::vector<double> p(bins);
    for (int j = 0; j < bins; ++j) {
        const double lo = static_cast<double>(j) / bins;
        const double hi = static_cast<double>(j + 1) / bins;
        p[j] = std::pow(1.0 - lo, dim - 1) - std::pow(1.0 - hi, dim - 1);
    }
    return p;
}

namespace detail {

inline double kl_vs_haar(const std::vector<long>& counts, long pairs, long dim) {
    const auto p = haar_bin_probs(dim, static_cast<int>(counts.size()));
    double kl = 0;
    for (std::size_t j = 0; j < counts.size(); ++j) {
        if (counts[j] == 0) continue;
        const double phat = static_cast<double>(counts[j]) / static_cast<double>(pairs);
        kl += phat * std::log(phat / p[j]);
    }
    return kl;
}

inline int fidelity_bin(double f, int bins) {
    int b = static_cast<int>(std::floor(f * bins));
    if (b < 0) b = 0;
    if (b >= bins) b = bins - 1;
    return b;
}

} // namespace detail

/**
 * Expressibility: KL divergence between the ansatz output-fidelity histogram
 * and the Haar distribution. States are prepared from |0...0> with parameter
 * vectors drawn per pair from seeded substreams, so the estimate is
 * deterministic under (seed, shard count). Lower is more expressive.
 */
inline double expressibility(const ParameterizedAnsatz& ansatz, long pairs = 5000,
                             int bins = 75, std::uint64_t seed = 1) {
    require(pairs >= 1, "need at least one pair");
    const long dim = 1L << ansatz.base.num_qubits;
    std::vector<long> counts(bins, 0);
    for (long k = 0; k < pairs; ++k) {
        Rng ra = Rng::substream(seed, 2 * static_cast<std::uint64_t>(k));
        Rng rb = Rng::substream(seed, 2 * static_cast<std::uint64_t>(k) + 1);
        const MixedRadixState sa = ansatz.prepare(ansatz.sample_params(ra));
        const MixedRadixState sb = ansatz.prepare(ansatz.sample_params(rb));
        const double f = std::norm(sa.amplitudes().dot(sb.amplitudes()));
        ++counts[detail::fidelity_bin(f, bins)];
    }
    return detail::kl_vs_haar(counts, pairs, dim);
}

/// Same estimator fed with Haar-random states; measures the finite-sample
/// bias floor (about (bins-1) / (2 * pairs)).
inline double haar_sampler_expressibility(int num_qubits, long pairs = 5000, int bins = 75,
                                          std::uint64_t seed = 1) {
    const long dim = 1L << num_qubits;
    std::vector<long> counts(bins, 0);
    auto haar_state = [&](Rng& rng) {
        Vec v(dim);
        for (long i = 0; i < dim; ++i) v(i) = cxd(rng.normal(), rng.normal());
        v.normalize();
        return v;
    };
    for (long k = 0; k < pairs; ++k) {
        Rng ra = Rng::substream(seed, 2 * static_cast<std::uint64_t>(k));
        Rng rb = Rng::substream(seed, 2 * static_cast<std::uint64_t>(k) + 1);
        const double f = std::norm(haar_state(ra).dot(haar_state(rb)));
        ++counts[detail::fidelity_bin(f, bins)];
    }
    return detail::kl_vs_haar(counts, pairs, dim);
}

/// Entangling capability: mean Meyer-Wallach measure over sampled bindings.
inline double entangling_capability(const ParameterizedAnsatz& ansatz, long samples = 1000,
                                    std::uint64_t seed = 2) {
    require(samples >= 1, "need at least one sample");
    double acc = 0;
    for (long k = 0; k < samples; ++k) {
        Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(k));
        acc += meyer_wallach(ansatz.prepare(ansatz.sample_params(rng)));
    }
    return acc / static_cast<double>(samples);
}

struct SweepRow {
    std::string id;
    long long entanglers = 0;
    int params = 0;
    double expr = 0;
    double ent = 0;
};

struct SweepSettings {
    long pairs = 5000;
    int bins = 75;
    long samples = 1000;
    std::uint64_t seed = 1;
};

} // namespace qloq
