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
#include <numeric>
#include <span>
#include <vector>

#include "cvopt/dataset.hpp"
#include "cvopt/error.hpp"

namespace cvopt {

/// Exact M-nearest-neighbour lists, closest first.
struct NNGraph {
    std::size_t n = 0;
    std::size_t M = 0;
    std::vector<std::size_t> neighbours;  // n*M, row-major
    std::vector<double> distances;        // n*M

    std::span<const std::size_t> of(std::size_t i) const { return {neighbours.data() + i * M, M}; }
    std::span<const double> distances_of(std::size_t i) const { return {distances.data() + i * M, M}; }
};

struct Edge {
    std::size_t i = 0;  // i < j
    std::size_t j = 0;
    double distance = 0.0;

    bool operator==(const Edge&) const = default;
};

using EdgeList = std::vector<Edge>;

/// Brute-force exact kNN. Equal distances are ordered by point index.
inline NNGraph build_knn(const Dataset& ds, std::size_t M) {
    const std::size_t n = ds.size();
    if (M < 1 || M >= n) throw ParameterError("need 1 <= M <= n-1");
    NNGraph g;
    g.n = n;
    g.M = M;
    g.neighbours.resize(n * M);
    g.distances.resize(n * M);

    std::vector<std::pair<double, std::size_t>> cand(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t c = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) cand[c++] = {euclidean(ds.row(i), ds.row(j)), j};
        std::partial_sort(cand.begin(), cand.begin() + static_cast<std::ptrdiff_t>(M), cand.end());
        for (std::size_t r = 0; r < M; ++r) {
            g.neighbours[i * M + r] = cand[r].second;
            g.distances[i * M + r] = cand[r].first;
        }
    }
    return g;
}

/// Undirected edges {i, j} with i in NN(j) or j in NN(i), sorted by (i, j).
inline EdgeList symmetric_edges(const NNGraph& g) {
    EdgeList e;
    e.reserve(g.n * g.M);
    for (std::size_t i = 0; i < g.n; ++i) {
        const auto nb = g.of(i);
        const auto dd = g.distances_of(i);
        for (std::size_t r = 0; r < g.M; ++r) e.push_back({std::min(i, nb[r]), std::max(i, nb[r]), dd[r]});
    }
    std::sort(e.begin(), e.end(), [](const Edge& a, const Edge& b) { return a.i != b.i ? a.i < b.i : a.j < b.j; });
    e.erase(std::unique(e.begin(), e.end(), [](const Edge& a, const Edge& b) { return a.i == b.i && a.j == b.j; }),
            e.end());
    return e;
}

namespace detail {

struct DisjointSets {
    std::vector<std::size_t> parent;
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

}  // namespace detail

/// Component ids 0..c-1 over the symmetrised graph, numbered by first point.
inline std::vector<int> connected_components(const NNGraph& g) {
    detail::DisjointSets ds(g.n);
    for (std::size_t i = 0; i < g.n; ++i)
        for (std::size_t j : g.of(i)) ds.unite(i, j);
    std::vector<int> id(g.n, -1);
    std::vector<int> out(g.n);
    int next = 0;
    for (std::size_t i = 0; i < g.n; ++i) {
        const std::size_t r = ds.find(i);
        if (id[r] < 0) id[r] = next++;
        out[i] = id[r];
    }
    return out;
}

inline std::vector<std::size_t> component_sizes(std::span<const int> components) {
    std::vector<std::size_t> sizes;
    for (int c : components) {
        if (static_cast<std::size_t>(c) >= sizes.size()) sizes.resize(static_cast<std::size_t>(c) + 1, 0);
        ++sizes[static_cast<std::size_t>(c)];
    }
    return sizes;
}

}  // namespace cvopt
