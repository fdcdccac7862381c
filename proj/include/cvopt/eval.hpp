// Copyright 2026 the cvopt authors
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

// External scoring against reference labels and grouping of methods.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cvopt/dataset.hpp"
#include "cvopt/error.hpp"
#include "cvopt/stats.hpp"

namespace cvopt {

/// Co-occurrence counts of two labelings (arbitrary integer label values).
struct ConfusionMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<std::size_t> counts;  // rows x cols
    std::vector<std::size_t> row_sums, col_sums;
    std::size_t total = 0;

    static ConfusionMatrix build(std::span<const int> a, std::span<const int> b) {
        if (a.size() != b.size()) throw LengthError("labelings differ in length");
        const auto ids = [](std::span<const int> x) {
            std::vector<int> u(x.begin(), x.end());
            std::sort(u.begin(), u.end());
            u.erase(std::unique(u.begin(), u.end()), u.end());
            return u;
        };
        const auto ra = ids(a);
        const auto rb = ids(b);
        ConfusionMatrix m;
        m.rows = ra.size();
        m.cols = rb.size();
        m.counts.assign(m.rows * m.cols, 0);
        m.row_sums.assign(m.rows, 0);
        m.col_sums.assign(m.cols, 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            const auto r = static_cast<std::size_t>(std::lower_bound(ra.begin(), ra.end(), a[i]) - ra.begin());
            const auto c = static_cast<std::size_t>(std::lower_bound(rb.begin(), rb.end(), b[i]) - rb.begin());
            ++m.counts[r * m.cols + c];
            ++m.row_sums[r];
            ++m.col_sums[c];
        }
        m.total = a.size();
        return m;
    }

    std::size_t operator()(std::size_t r, std::size_t c) const { return counts[r * cols + c]; }
};

namespace detail {

inline __int128 pairs(std::size_t x) { return static_cast<__int128>(x) * (static_cast<__int128>(x) - 1) / 2; }

}  // namespace detail

/// Adjusted Rand index from pair counts:
///   ARI = 2 (N t - A B) / (N (A + B) - 2 A B),
/// with t the pairs together in both labelings, A and B the pairs together
/// in each one, N all pairs. Exact integer arithmetic up to the final
/// division. A zero denominator (both labelings trivial) yields 1.
inline double ari_from_pair_counts(__int128 together_both, __int128 together_a, __int128 together_b, __int128 all) {
    const __int128 num = 2 * (all * together_both - together_a * together_b);
    const __int128 den = all * (together_a + together_b) - 2 * together_a * together_b;
    if (den == 0) return 1.0;
    // correctly rounded whenever both operands are exact doubles
    constexpr __int128 exact = __int128{1} << 53;
    if (num < exact && -num < exact && den < exact && -den < exact)
        return static_cast<double>(num) / static_cast<double>(den);
    return static_cast<double>(static_cast<long double>(num) / static_cast<long double>(den));
}

/// Raw ARI between a reference and a candidate labeling. With
/// exclude_noise, points whose reference label is 0 are ignored.
inline double adjusted_rand(std::span<const int> reference, std::span<const int> candidate, bool exclude_noise = false) {
    if (reference.size() != candidate.size()) throw LengthError("labelings differ in length");
    std::vector<int> a, b;
    a.reserve(reference.size());
    b.reserve(reference.size());
    for (std::size_t i = 0; i < reference.size(); ++i) {
        if (exclude_noise && reference[i] == 0) continue;
        a.push_back(reference[i]);
        b.push_back(candidate[i]);
    }
    if (a.size() < 2) throw UndefinedScoreError("ARI needs at least two scored points");
    const auto m = ConfusionMatrix::build(a, b);
    __int128 t = 0, sa = 0, sb = 0;
    for (std::size_t c : m.counts) t += detail::pairs(c);
    for (std::size_t c : m.row_sums) sa += detail::pairs(c);
    for (std::size_t c : m.col_sums) sb += detail::pairs(c);
    return ari_from_pair_counts(t, sa, sb, detail::pairs(m.total));
}

inline double clamp_score(double ari) { return std::max(0.0, ari); }

/// Q: the highest clamped ARI over all references, each scored against the
/// output obtained for its cardinality. Noise is excluded.
inline double best_reference_score(const std::map<int, std::vector<int>>& outputs, const ReferenceSet& refs) {
    double q = 0.0;
    for (std::size_t j = 0; j < refs.size(); ++j) {
        const auto it = outputs.find(refs.cardinalities[j]);
        if (it == outputs.end())
            throw ContractViolation("no output for k = " + std::to_string(refs.cardinalities[j]));
        q = std::max(q, clamp_score(adjusted_rand(refs.labelings[j], it->second, true)));
    }
    return q;
}

// ---------------------------------------------------------------------------
// Meta-clustering of methods

enum class Aggregator { Mean, Median, Q3 };

inline Aggregator parse_aggregator(std::string_view s) {
    if (s == "mean") return Aggregator::Mean;
    if (s == "median") return Aggregator::Median;
    if (s == "q3") return Aggregator::Q3;
    throw ParseError("unknown aggregator '" + std::string(s) + "' (mean|median|q3)");
}

inline std::string to_string(Aggregator a) {
    switch (a) {
        case Aggregator::Mean: return "mean";
        case Aggregator::Median: return "median";
        case Aggregator::Q3: return "q3";
    }
    return {};
}

inline double aggregate(Aggregator a, std::span<const double> x) {
    switch (a) {
        case Aggregator::Mean: return stats::mean(x);
        case Aggregator::Median: return stats::median(x);
        case Aggregator::Q3: return stats::quantile(x, 0.75);
    }
    return 0.0;
}

/// Outputs of one method keyed by dataset (or dataset/k) identifier.
using MethodOutputs = std::map<std::string, std::vector<int>>;

using Matrix = std::vector<std::vector<double>>;

/// Entry (u, v): aggregate over shared datasets of 1 - raw ARI between the
/// two methods' outputs. References play no part.
inline Matrix method_dissimilarity(std::span<const MethodOutputs> methods, Aggregator agg) {
    const std::size_t m = methods.size();
    if (m < 2) throw ParameterError("need at least two methods");
    Matrix d(m, std::vector<double>(m, 0.0));
    for (std::size_t u = 0; u < m; ++u)
        for (std::size_t v = u + 1; v < m; ++v) {
            std::vector<double> vals;
            for (const auto& [key, lu] : methods[u]) {
                const auto it = methods[v].find(key);
                if (it != methods[v].end()) vals.push_back(1.0 - adjusted_rand(lu, it->second));
            }
            if (vals.empty())
                throw MissingOverlapError("methods " + std::to_string(u) + " and " + std::to_string(v) +
                                          " share no dataset");
            d[u][v] = d[v][u] = aggregate(agg, vals);
        }
    return d;
}

struct Merge {
    std::size_t left, right;  // cluster ids: leaves 0..n-1, merge s creates n+s
    double height;
    std::size_t size;
};

struct Dendrogram {
    std::size_t leaves = 0;
    std::vector<Merge> merges;
};

/// Agglomerative complete linkage. Ties go to the pair with the lowest
/// (smaller id, larger id).
inline Dendrogram complete_linkage(const Matrix& diss) {
    const std::size_t n = diss.size();
    if (n < 2) throw ContractViolation("linkage needs at least two items");
    for (std::size_t i = 0; i < n; ++i) {
        if (diss[i].size() != n) throw ContractViolation("dissimilarity matrix is not square");
        if (diss[i][i] != 0.0) throw ContractViolation("dissimilarity diagonal must be zero");
        for (std::size_t j = 0; j < n; ++j)
            if (!std::isfinite(diss[i][j]) || diss[i][j] < 0.0 || diss[i][j] != diss[j][i])
                throw ContractViolation("dissimilarity must be finite, non-negative and symmetric");
    }
    std::vector<std::size_t> id(n), size(n, 1);
    std::vector<std::size_t> active(n);
    for (std::size_t i = 0; i < n; ++i) id[i] = active[i] = i;
    Matrix d = diss;  // indexed by slot

    Dendrogram out{n, {}};
    for (std::size_t step = 0; step + 1 < n; ++step) {
        std::size_t ba = 0, bb = 0;
        double best = std::numeric_limits<double>::infinity();
        std::pair<std::size_t, std::size_t> best_ids{~std::size_t{0}, ~std::size_t{0}};
        for (std::size_t x = 0; x < active.size(); ++x)
            for (std::size_t y = x + 1; y < active.size(); ++y) {
                const std::size_t a = active[x], b = active[y];
                const std::pair<std::size_t, std::size_t> ids = std::minmax(id[a], id[b]);
                const double h = d[a][b];
                if (h < best || (h == best && ids < best_ids)) {
                    best = h;
                    best_ids = ids;
                    ba = x;
                    bb = y;
                }
            }
        const std::size_t a = active[ba], b = active[bb];
        out.merges.push_back({best_ids.first, best_ids.second, best, size[a] + size[b]});
        for (std::size_t c : active) {
            if (c == a || c == b) continue;
            d[a][c] = d[c][a] = std::max(d[a][c], d[b][c]);
        }
        id[a] = n + step;
        size[a] += size[b];
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(bb));
    }
    return out;
}

/// Merge list as CSV: step,left,right,height.
inline std::string dendrogram_csv(const Dendrogram& dg) {
    std::string s = "step,left,right,height\n";
    char buf[128];
    for (std::size_t i = 0; i < dg.merges.size(); ++i) {
        const auto& m = dg.merges[i];
        std::snprintf(buf, sizeof buf, "%zu,%zu,%zu,%.17g\n", i + 1, m.left, m.right, m.height);
        s += buf;
    }
    return s;
}

}  // namespace cvopt
