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
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "qloq/common.hpp"
#include "qloq/cost.hpp"
#include "qloq/rng.hpp"

namespace qloq {

// ---------------------------------------------------------------------------
// Random two-qubit-gate circuits as connectivity multigraphs
// ---------------------------------------------------------------------------

struct ConnectivityMultigraph {
    int num_qubits = 0;
    std::vector<std::pair<int, int>> edges; // unordered pairs, stored (lo, hi)
};

/// m edges drawn independently and uniformly over the C(N,2) pairs.
/// Edge choice derives from per-edge substreams, so sharded generation with
/// the same seed reproduces the same multigraph.
inline ConnectivityMultigraph random_circuit(int n_qubits, int gates, std::uint64_t seed) {
    require(n_qubits >= 2, "need at least two qubits");
    require(gates >= 0, "gate count must be >= 0");
    ConnectivityMultigraph g;
    g.num_qubits = n_qubits;
    const std::uint64_t pairs =
        static_cast<std::uint64_t>(n_qubits) * (n_qubits - 1) / 2;
    for (int e = 0; e < gates; ++e) {
        Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(e));
        std::uint64_t k = rng.below(pairs);
        // unrank the pair (a, b), a < b
        int a = 0;
        std::uint64_t row = static_cast<std::uint64_t>(n_qubits - 1);
        while (k >= row) {
            k -= row;
            ++a;
            --row;
        }
        const int b = a + 1 + static_cast<int>(k);
        g.edges.emplace_back(a, b);
    }
    return g;
}

/**
 * A circuit of two-qubit gates is compressible at G = 2 iff some qubit pair
 * has more internal than external connections: pairing them on one carrier
 * then saves more than the doubled external gates cost.
 */
inline bool is_compressible(const ConnectivityMultigraph& g, int max_g = 2) {
    require(max_g == 2, "the analysis covers the pairwise (G = 2) regime");
    std::map<std::pair<int, int>, long> mult;
    std::vector<long> degree(g.num_qubits, 0);
    for (auto [a, b] : g.edges) {
        ++mult[{a, b}];
        ++degree[a];
        ++degree[b];
    }
    for (const auto& [pair, m] : mult) {
        const long external = degree[pair.first] + degree[pair.second] - 2 * m;
        if (m > external) return true;
    }
    return false;
}

struct FractionEstimate {
    double fraction = 0;
    double stderr_ = 0;
    long trials = 0;
};

/// Monte Carlo estimate of the compressible fraction over random circuits.
inline FractionEstimate compressible_fraction(int n_qubits, int gates, long trials,
                                              std::uint64_t seed) {
    require(trials >= 1, "need at least one trial");
    long hits = 0;
    for (long t = 0; t < trials; ++t) {
        const std::uint64_t sub = Rng::substream(seed, static_cast<std::uint64_t>(t)).next_u64();
        if (is_compressible(random_circuit(n_qubits, gates, sub))) ++hits;
    }
    FractionEstimate est;
    est.trials = trials;
    est.fraction = static_cast<double>(hits) / static_cast<double>(trials);
    est.stderr_ = std::sqrt(est.fraction * (1.0 - est.fraction) / static_cast<double>(trials));
    return est;
}

// ---------------------------------------------------------------------------
// Expected cost ratio R of a randomly placed n-qubit gate
// ---------------------------------------------------------------------------

struct RatioQuery {
    int g = 2;        // carrier size
    int n = 2;        // gate arity
    long long N = 4;  // circuit qubits

    void validate() const {
        require(n >= 2 && g >= 1, "need n >= 2 and g >= 1");
        require(N >= std::max<long long>(n, g + 1),
                "N must be at least max(n, g+1) for a meaningful external set");
    }
};

namespace detail {

inline bool ratio_fits_exact(const RatioQuery& q) {
    // binomials evaluated in __int128; C(N, n) stays well inside range here
    return q.N <= 2000 && q.n <= 12;
}

inline __int128 binom_i128(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    __int128 r = 1;
    for (long long i = 1; i <= k; ++i) {
        r = r * (n - k + i);
        r = r / i;
    }
    return r;
}

/// C(n, k) as a long double factor product. For the arities used here
/// (k <= 12) every factor is exactly representable and the relative error
/// stays near machine epsilon even at n = 1e12, far better than forming
/// differences of large log-gamma values.
inline long double binom_ld(long long n, long long k) {
    if (k < 0 || k > n) return 0.0L;
    k = std::min(k, n - k);
    long double r = 1.0L;
    for (long long i = 0; i < k; ++i) r *= static_cast<long double>(n - i) / (i + 1);
    return r;
}

} // namespace detail

/// Exact rational numerator/denominator of R for moderate N. The denominator
/// uses the telescoped form sum_{j<g} C(N-1-j, n-1), which never subtracts
/// close binomials.
inline void expected_ratio_rational(const RatioQuery& q, __int128& num, __int128& den) {
    q.validate();
    require(detail::ratio_fits_exact(q), "exact rational path needs moderate N");
    const int s = (q.n > q.g) ? q.n - q.g : 1;
    num = 0;
    for (int x = s; x <= q.n - 1; ++x) {
        if (q.g - q.n + x < 0) continue;
        const __int128 arrangements =
            detail::binom_i128(q.g, q.n - x) * detail::binom_i128(q.N - q.g, x);
        num += arrangements * (2 * x - 2 + (__int128(1) << (q.g - q.n + x)));
    }
    __int128 involving = 0;
    for (int j = 0; j < q.g; ++j) involving += detail::binom_i128(q.N - 1 - j, q.n - 1);
    den = involving * (2 * q.n - 3);
    require(den > 0, "degenerate ratio query");
}

/**
 * Closed-form expected cost ratio (big-N safe). Exact rationals for moderate
 * N; beyond that, floating-point factor products with the telescoped
 * denominator sum_{j<g} C(N-1-j, n-1), so no catastrophic cancellation occurs
 * (relative error well under 1e-9 at N = 1e12).
 */
inline double expected_ratio_closed(const RatioQuery& q) {
    q.validate();
    if (detail::ratio_fits_exact(q)) {
        __int128 num = 0, den = 1;
        expected_ratio_rational(q, num, den);
        return static_cast<double>(static_cast<long double>(num) /
                                   static_cast<long double>(den));
    }
    const int s = (q.n > q.g) ? q.n - q.g : 1;
    long double denom = 0;
    for (int j = 0; j < q.g; ++j) denom += detail::binom_ld(q.N - 1 - j, q.n - 1);
    long double r = 0;
    for (int x = s; x <= q.n - 1; ++x) {
        if (q.g - q.n + x < 0) continue;
        const long double arrangements =
            detail::binom_ld(q.g, q.n - x) * detail::binom_ld(q.N - q.g, x);
        const long double cost = 2.0L * x - 2.0L + std::ldexp(1.0L, q.g - q.n + x);
        r += (arrangements / denom) * cost;
    }
    return static_cast<double>(r / (2.0L * q.n - 3.0L));
}

struct RatioEstimate {
    double ratio = 0;
    double stderr_ = 0;
    long trials = 0;
};

/// Monte Carlo verification of the closed-form ratio: uniform placements of
/// an n-qubit gate that touch the carrier, priced by the internal/external
/// rules and divided by the uncompressed cost 2n-3.
inline RatioEstimate expected_ratio_mc(const RatioQuery& q, long trials, std::uint64_t seed) {
    q.validate();
    require(trials >= 1, "need at least one trial");
    double sum = 0, sumsq = 0;
    const double uncompressed = 2.0 * q.n - 3.0;
    for (long t = 0; t < trials; ++t) {
        Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(t));
        int internal = 0;
        while (true) {
            // sample n distinct qubits out of N; carrier qubits are 0..g-1
            internal = 0;
            std::vector<long long> chosen;
            while (static_cast<int>(chosen.size()) < q.n) {
                const long long pick = static_cast<long long>(rng.below(q.N));
                bool dup = false;
                for (long long c : chosen) dup |= (c == pick);
                if (!dup) chosen.push_back(pick);
            }
            for (long long c : chosen)
                if (c < q.g) ++internal;
            if (internal > 0) break; // condition on touching the carrier
        }
        const int x = q.n - internal;
        const double cost =
            (x == 0) ? 0.0 : static_cast<double>(external_cost(q.g, q.n, x));
        const double ratio = cost / uncompressed;
        sum += ratio;
        sumsq += ratio * ratio;
    }
    RatioEstimate est;
    est.trials = trials;
    est.ratio = sum / static_cast<double>(trials);
    const double var = std::max(0.0, sumsq / trials - est.ratio * est.ratio);
    est.stderr_ = std::sqrt(var / static_cast<double>(trials));
    return est;
}

/// Smallest N with R > 1 (exact comparison), or nullopt up to n_max.
inline std::optional<long long> threshold_scan(int g, int n, long long n_max = 64) {
    for (long long N = std::max<long long>(n, g + 1); N <= n_max; ++N) {
        RatioQuery q{g, n, N};
        __int128 num = 0, den = 1;
        expected_ratio_rational(q, num, den);
        if (num > den) return N;
    }
    return std::nullopt;
}

} // namespace qloq
