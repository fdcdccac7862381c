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

#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "cvopt/error.hpp"

namespace cvopt {

/// Relocation of a single point to another cluster.
struct Move {
    std::size_t point = 0;
    int from = 0;
    int to = 0;

    Move reversed() const { return {point, to, from}; }
    bool operator==(const Move&) const = default;
};

/// A k-partition encoded as a surjection onto 0..k-1.
class Partition {
public:
    Partition() = default;

    static Partition from_labels(std::vector<int> raw, int k) {
        if (k < 2) throw ParameterError("a partition needs k >= 2");
        Partition p;
        p.sizes_.assign(static_cast<std::size_t>(k), 0);
        for (int v : raw) {
            if (v < 0 || v >= k) throw RangeError("label " + std::to_string(v) + " outside 0.." + std::to_string(k - 1));
            ++p.sizes_[static_cast<std::size_t>(v)];
        }
        for (int j = 0; j < k; ++j)
            if (p.sizes_[static_cast<std::size_t>(j)] == 0)
                throw NotSurjectiveError("cluster " + std::to_string(j) + " is empty");
        p.labels_ = std::move(raw);
        return p;
    }

    /// Labels with values 0..k-1 in any order; k is inferred as max+1.
    static Partition from_labels(std::vector<int> raw) {
        int k = 0;
        for (int v : raw) k = std::max(k, v + 1);
        return from_labels(std::move(raw), k);
    }

    std::size_t n() const { return labels_.size(); }
    int k() const { return static_cast<int>(sizes_.size()); }
    int operator[](std::size_t i) const { return labels_[i]; }
    const std::vector<int>& labels() const { return labels_; }
    const std::vector<std::size_t>& sizes() const { return sizes_; }
    std::size_t size_of(int cluster) const { return sizes_[static_cast<std::size_t>(cluster)]; }

    bool operator==(const Partition&) const = default;

private:
    friend Partition apply_move(const Partition&, const Move&);
    std::vector<int> labels_;
    std::vector<std::size_t> sizes_;
};

/// Renumbers clusters by order of first appearance.
inline std::vector<int> canonical_labels(std::span<const int> labels, int k) {
    std::vector<int> map(static_cast<std::size_t>(k), -1);
    std::vector<int> out(labels.size());
    int next = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        int& m = map[static_cast<std::size_t>(labels[i])];
        if (m < 0) m = next++;
        out[i] = m;
    }
    return out;
}

inline Partition canonicalize(const Partition& p) {
    return Partition::from_labels(canonical_labels(p.labels(), p.k()), p.k());
}

inline bool is_valid_move(const Partition& p, const Move& m) {
    return m.point < p.n() && m.from == p[m.point] && m.to >= 0 && m.to < p.k() && m.to != m.from &&
           p.size_of(m.from) >= 2;
}

/// All single-point relocations that keep every cluster nonempty, ordered
/// by point and then by target cluster.
inline std::vector<Move> enumerate_moves(const Partition& p) {
    std::vector<Move> out;
    for (std::size_t i = 0; i < p.n(); ++i) {
        const int from = p[i];
        if (p.size_of(from) < 2) continue;
        for (int to = 0; to < p.k(); ++to)
            if (to != from) out.push_back({i, from, to});
    }
    return out;
}

inline Partition apply_move(const Partition& p, const Move& m) {
    if (!is_valid_move(p, m)) throw ContractViolation("invalid move for this partition");
    Partition q = p;
    q.labels_[m.point] = m.to;
    --q.sizes_[static_cast<std::size_t>(m.from)];
    ++q.sizes_[static_cast<std::size_t>(m.to)];
    return q;
}

/// Normalised Gini index of the cluster sizes:
/// sum_{i<j} |s_i - s_j| / ((k-1) n).
inline double cluster_size_gini(std::span<const std::size_t> sizes) {
    const std::size_t k = sizes.size();
    if (k < 2) throw ParameterError("gini index needs k >= 2");
    std::vector<std::size_t> s(sizes.begin(), sizes.end());
    std::sort(s.begin(), s.end());
    double num = 0.0;
    double n = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        num += (2.0 * static_cast<double>(i) - static_cast<double>(k) + 1.0) * static_cast<double>(s[i]);
        n += static_cast<double>(s[i]);
    }
    return num / ((static_cast<double>(k) - 1.0) * n);
}

inline double cluster_size_gini(const Partition& p) { return cluster_size_gini(p.sizes()); }

}  // namespace cvopt
