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

#include <functional>
#include <string>
#include <vector>

#include "qloq/common.hpp"
#include "qloq/linalg.hpp"
#include "qloq/metrics.hpp"
#include "qloq/rng.hpp"
#include "qloq/sim.hpp"

namespace qloq {

// ---------------------------------------------------------------------------
// Pauli-sum Hamiltonians
// ---------------------------------------------------------------------------

struct PauliTerm {
    double coeff = 0;
    std::string pauli; // e.g. "XZIY", one letter per qubit
};

struct PauliHamiltonian {
    int num_qubits = 0;
    std::vector<PauliTerm> terms;
    std::vector<std::vector<int>> groups; // simultaneously measurable term sets

    static PauliHamiltonian from_terms(std::vector<PauliTerm> ts) {
        PauliHamiltonian h;
        require(!ts.empty(), "Hamiltonian needs at least one term");
        h.num_qubits = static_cast<int>(ts[0].pauli.size());
        for (const auto& t : ts) {
            require(static_cast<int>(t.pauli.size()) == h.num_qubits,
                    "inconsistent Pauli string lengths");
            for (char c : t.pauli)
                require(c == 'I' || c == 'X' || c == 'Y' || c == 'Z',
                        "Pauli letters must be one of I, X, Y, Z");
        }
        h.terms = std::move(ts);
        h.regroup();
        return h;
    }

    /// Greedy first-fit grouping into tensor-product basis sets: terms join a
    /// group when every qubit position carries at most one non-identity
    /// letter kind across the group.
    void regroup() {
        groups.clear();
        std::vector<std::string> bases; // per group, per-qubit letter or 'I'
        for (int i = 0; i < static_cast<int>(terms.size()); ++i) {
            bool placed = false;
            for (std::size_t gi = 0; gi < groups.size() && !placed; ++gi) {
                bool ok = true;
                for (int q = 0; q < num_qubits; ++q) {
                    const char t = terms[i].pauli[q];
                    const char b = bases[gi][q];
                    if (t != 'I' && b != 'I' && t != b) { ok = false; break; }
                }
                if (ok) {
                    groups[gi].push_back(i);
                    for (int q = 0; q < num_qubits; ++q)
                        if (terms[i].pauli[q] != 'I') bases[gi][q] = terms[i].pauli[q];
                    placed = true;
                }
            }
            if (!placed) {
                groups.push_back({i});
                bases.push_back(terms[i].pauli);
            }
        }
    }

    /// Shared measurement basis of a group (per-qubit letter, 'I' if free).
    std::string group_basis(int gi) const {
        std::string b(num_qubits, 'I');
        for (int ti : groups[gi])
            for (int q = 0; q < num_qubits; ++q)
                if (terms[ti].pauli[q] != 'I') b[q] = terms[ti].pauli[q];
        return b;
    }

    /// Dense matrix (oracle use; n <= 8).
    Mat dense() const {
        const long dim = 1L << num_qubits;
        Mat h = Mat::Zero(dim, dim);
        for (const auto& t : terms) {
            Mat p = Mat::Identity(1, 1);
            for (char c : t.pauli) {
                Mat letter = c == 'X'   ? pauli_x()
                             : c == 'Y' ? pauli_y()
                             : c == 'Z' ? pauli_z()
                                        : Mat(Mat::Identity(2, 2));
                p = kron(p, letter);
            }
            h += t.coeff * p;
        }
        return h;
    }
};

namespace detail {

inline Mat pauli_letter(char c) {
    switch (c) {
        case 'X': return pauli_x();
        case 'Y': return pauli_y();
        case 'Z': return pauli_z();
        default: return Mat::Identity(2, 2);
    }
}

inline MixedRadixState apply_string(const MixedRadixState& st, const std::string& pauli) {
    MixedRadixState out = st;
    for (int q = 0; q < static_cast<int>(pauli.size()); ++q)
        if (pauli[q] != 'I')
            out.apply_logical(LogicalGate::unitary({q}, pauli_letter(pauli[q])));
    return out;
}

} // namespace detail

/// <psi| H |psi> from the state vector; the imaginary part (roundoff only)
/// is checked and dropped.
inline double expectation_exact(const MixedRadixState& st, const PauliHamiltonian& h) {
    require(st.map().num_qubits() == h.num_qubits, "state width does not match Hamiltonian");
    cxd acc = 0;
    for (const auto& t : h.terms) {
        const MixedRadixState pst = detail::apply_string(st, t.pauli);
        acc += t.coeff * st.amplitudes().dot(pst.amplitudes());
    }
    require(std::abs(acc.imag()) < 1e-9, "expectation value came out complex");
    return acc.real();
}

struct SampledEnergy {
    double energy = 0;
    double stderr_ = 0;
    long shots_per_group = 0;
    int group_count = 0;
};

/**
 * Shot-based estimator: per measurement group, rotates into the shared
 * tensor-product basis (H for X, H S^dag for Y), samples bitstrings and
 * averages the per-shot eigenvalue combination of all terms in the group.
 * The per-group standard errors combine in quadrature.
 */
inline SampledEnergy expectation_sampled(const MixedRadixState& st, const PauliHamiltonian& h,
                                         long shots_per_group, std::uint64_t seed) {
    require(shots_per_group >= 1, "shots must be >= 1");
    require(st.map().num_qubits() == h.num_qubits, "state width does not match Hamiltonian");
    SampledEnergy out;
    out.shots_per_group = shots_per_group;
    out.group_count = static_cast<int>(h.groups.size());
    double var_total = 0;
    for (std::size_t gi = 0; gi < h.groups.size(); ++gi) {
        const std::string basis = h.group_basis(static_cast<int>(gi));
        MixedRadixState rotated = st;
        for (int q = 0; q < h.num_qubits; ++q) {
            if (basis[q] == 'X') {
                rotated.apply_logical(LogicalGate::h(q));
            } else if (basis[q] == 'Y') {
                rotated.apply_logical(LogicalGate::unitary({q}, Mat(sgate().adjoint())));
                rotated.apply_logical(LogicalGate::h(q));
            }
        }
        const auto hist = rotated.sample(
            shots_per_group, Rng::substream(seed, gi).next_u64());
        double mean = 0, meansq = 0;
        for (const auto& [bits, count] : hist) {
            double v = 0;
            for (int ti : h.groups[gi]) {
                double eig = 1;
                for (int q = 0; q < h.num_qubits; ++q)
                    if (h.terms[ti].pauli[q] != 'I' && bits[q] == '1') eig = -eig;
                v += h.terms[ti].coeff * eig;
            }
            const double w = static_cast<double>(count) / shots_per_group;
            mean += w * v;
            meansq += w * v * v;
        }
        out.energy += mean;
        var_total += std::max(0.0, meansq - mean * mean) / shots_per_group;
    }
    out.stderr_ = std::sqrt(var_total);
    return out;
}

// ---------------------------------------------------------------------------
// Derivative-free minimization (Nelder-Mead simplex)
// ---------------------------------------------------------------------------

struct MinimizeResult {
    std::vector<double> best_params;
    double best_value = 0;
    long evaluations = 0;
    bool converged = false;
};

/**
 * Nelder-Mead simplex search. Deterministic for a fixed seed (the seed only
 * jitters the initial simplex). `should_stop` is polled after every
 * evaluation; returning true ends the search early.
 */
inline MinimizeResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                                  std::vector<double> x0, long budget, std::uint64_t seed = 0,
                                  const std::function<bool()>& should_stop = {}) {
    require(budget >= 1, "evaluation budget must be >= 1");
    const int n = static_cast<int>(x0.size());
    require(n >= 1, "need at least one parameter");
    const double alpha = 1.0, gamma = 2.0, rho = 0.5, sigma = 0.5;

    MinimizeResult res;
    long evals = 0;
    bool stop = false;
    auto eval = [&](const std::vector<double>& x) {
        const double v = f(x);
        ++evals;
        if (evals == 1 || v < res.best_value) {
            res.best_value = v;
            res.best_params = x;
        }
        if (evals >= budget || (should_stop && should_stop())) stop = true;
        return v;
    };

    Rng rng(seed);
    std::vector<std::vector<double>> xs(n + 1, x0);
    std::vector<double> fs(n + 1);
    for (int i = 1; i <= n; ++i) xs[i][i - 1] += 0.35 + 0.1 * rng.uniform();
    for (int i = 0; i <= n && !stop; ++i) fs[i] = eval(xs[i]);

    while (!stop) {
        // order ascending by value
        std::vector<int> idx(n + 1);
        for (int i = 0; i <= n; ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](int a, int b) { return fs[a] < fs[b]; });
        std::vector<std::vector<double>> oxs(n + 1);
        std::vector<double> ofs(n + 1);
        for (int i = 0; i <= n; ++i) { oxs[i] = xs[idx[i]]; ofs[i] = fs[idx[i]]; }
        xs = oxs;
        fs = ofs;
        if (std::abs(fs[n] - fs[0]) < 1e-12) {
            res.converged = true;
            break;
        }
        std::vector<double> centroid(n, 0.0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) centroid[j] += xs[i][j] / n;

        auto blend = [&](double coeff) {
            std::vector<double> x(n);
            for (int j = 0; j < n; ++j) x[j] = centroid[j] + coeff * (xs[n][j] - centroid[j]);
            return x;
        };
        const std::vector<double> xr = blend(-alpha);
        const double fr = eval(xr);
        if (stop) break;
        if (fr < fs[0]) {
            const std::vector<double> xe = blend(-alpha * gamma);
            const double fe = eval(xe);
            xs[n] = (fe < fr) ? xe : xr;
            fs[n] = std::min(fe, fr);
        } else if (fr < fs[n - 1]) {
            xs[n] = xr;
            fs[n] = fr;
        } else {
            const std::vector<double> xc = blend(rho);
            const double fc = eval(xc);
            if (stop) break;
            if (fc < fs[n]) {
                xs[n] = xc;
                fs[n] = fc;
            } else {
                for (int i = 1; i <= n && !stop; ++i) {
                    for (int j = 0; j < n; ++j)
                        xs[i][j] = xs[0][j] + sigma * (xs[i][j] - xs[0][j]);
                    fs[i] = eval(xs[i]);
                }
            }
        }
    }
    res.evaluations = evals;
    return res;
}

// ---------------------------------------------------------------------------
// VQE driver
// ---------------------------------------------------------------------------

struct VqeIteration {
    long index = 0;
    double energy = 0;
    double stderr_ = 0;
    long shots = 0;
};

struct VqeTrace {
    std::vector<VqeIteration> iterations;
    std::vector<double> best_params;
    double best_energy = 0;
    bool converged = false;
};

struct VqeOptions {
    long shots_per_group = 0; // 0 = exact expectation
    std::uint64_t seed = 1;
    long budget = 2000;
    std::string input_state;          // computational-basis bitstring; empty = all zeros
    double improvement_tol = 1e-6;    // stop when best improves less than this
    long patience = 25;               // ... over this many evaluations
};

inline VqeTrace vqe_run(const ParameterizedAnsatz& ansatz, const PauliHamiltonian& h,
                        const VqeOptions& options = {}) {
    require(ansatz.base.num_qubits == h.num_qubits,
            "ansatz qubit count must equal Hamiltonian width");
    const std::string input = options.input_state.empty()
                                  ? std::string(h.num_qubits, '0')
                                  : options.input_state;

    VqeTrace trace;
    double best_at_mark = 0;
    long evals_since_mark = 0;
    bool improved_once = false;

    auto objective = [&](const std::vector<double>& params) {
        MixedRadixState st = MixedRadixState::from_bitstring(
            QloqMap::qubit_encoding(h.num_qubits), input);
        st.apply(ansatz.bind(params));
        VqeIteration it;
        it.index = static_cast<long>(trace.iterations.size());
        if (options.shots_per_group > 0) {
            const auto est = expectation_sampled(
                st, h, options.shots_per_group,
                Rng::substream(options.seed, 1000 + it.index).next_u64());
            it.energy = est.energy;
            it.stderr_ = est.stderr_;
            it.shots = options.shots_per_group;
        } else {
            it.energy = expectation_exact(st, h);
        }
        trace.iterations.push_back(it);
        if (!improved_once || it.energy < trace.best_energy - options.improvement_tol) {
            best_at_mark = it.energy;
            evals_since_mark = 0;
        } else {
            ++evals_since_mark;
        }
        if (!improved_once || it.energy < trace.best_energy) {
            trace.best_energy = it.energy;
            trace.best_params = params;
            improved_once = true;
        }
        return it.energy;
    };
    auto should_stop = [&] { return evals_since_mark >= options.patience; };

    if (ansatz.param_count == 0) {
        objective({});
        trace.converged = true;
        return trace;
    }

    std::vector<double> x0(ansatz.param_count, 0.0);
    Rng rng(options.seed);
    for (auto& v : x0) v = rng.uniform(0.5) - 0.25;
    const MinimizeResult res =
        nelder_mead(objective, x0, options.budget, options.seed, should_stop);
    trace.converged = res.converged || evals_since_mark >= options.patience;
    return trace;
}

} // namespace qloq
