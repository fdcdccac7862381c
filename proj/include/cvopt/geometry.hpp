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
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <vector>

#include "cvopt/dataset.hpp"
#include "cvopt/nngraph.hpp"

namespace cvopt {

/// Near-neighbour structures for one M, shared by all evaluators.
struct NeighbourhoodIndex {
    NNGraph graph;
    EdgeList edges;                                   // sorted by (i, j)
    std::vector<std::size_t> by_distance;             // edge ids ordered by (distance, i, j)
    std::vector<std::size_t> rank;                    // rank[e] = position of e in by_distance
    std::vector<std::vector<std::size_t>> incident;   // edge ids touching each point
    std::vector<std::vector<std::size_t>> reverse;    // reverse[j] = {i : j in NN(i)}
    std::vector<int> components;

    explicit NeighbourhoodIndex(NNGraph g) : graph(std::move(g)) {
        edges = symmetric_edges(graph);
        by_distance.resize(edges.size());
        std::iota(by_distance.begin(), by_distance.end(), 0);
        std::sort(by_distance.begin(), by_distance.end(), [&](std::size_t a, std::size_t b) {
            const Edge& x = edges[a];
            const Edge& y = edges[b];
            if (x.distance != y.distance) return x.distance < y.distance;
            return x.i != y.i ? x.i < y.i : x.j < y.j;
        });
        rank.resize(edges.size());
        for (std::size_t r = 0; r < by_distance.size(); ++r) rank[by_distance[r]] = r;
        incident.assign(graph.n, {});
        for (std::size_t e = 0; e < edges.size(); ++e) {
            incident[edges[e].i].push_back(e);
            incident[edges[e].j].push_back(e);
        }
        reverse.assign(graph.n, {});
        for (std::size_t i = 0; i < graph.n; ++i)
            for (std::size_t j : graph.of(i)) reverse[j].push_back(i);
        components = connected_components(graph);
    }
};

/// Immutable dataset plus lazily built distance structures.
///
/// Pairwise distances are tabulated when n is at most `matrix_limit`;
/// larger inputs compute them on demand. kNN structures are built once
/// per M and cached. All accessors are safe to call concurrently.
class Geometry {
public:
    static constexpr std::size_t default_matrix_limit = 4096;

    explicit Geometry(Dataset ds, std::size_t matrix_limit = default_matrix_limit) : data_(std::move(ds)) {
        const std::size_t n = data_.size();
        if (n <= matrix_limit) {
            matrix_.resize(n * n);
            for (std::size_t i = 0; i < n; ++i) {
                matrix_[i * n + i] = 0.0;
                for (std::size_t j = i + 1; j < n; ++j)
                    matrix_[i * n + j] = matrix_[j * n + i] = euclidean(data_.row(i), data_.row(j));
            }
        }
    }

    const Dataset& data() const { return data_; }
    std::size_t size() const { return data_.size(); }
    bool has_matrix() const { return !matrix_.empty(); }

    double distance(std::size_t i, std::size_t j) const {
        if (!matrix_.empty()) return matrix_[i * data_.size() + j];
        return euclidean(data_.row(i), data_.row(j));
    }

    // Row i of the distance matrix; requires has_matrix().
    const double* matrix_row(std::size_t i) const { return matrix_.data() + i * data_.size(); }

    const NeighbourhoodIndex& neighbourhood(std::size_t M) const {
        std::lock_guard lock(mutex_);
        auto it = nn_.find(M);
        if (it == nn_.end()) it = nn_.emplace(M, std::make_unique<NeighbourhoodIndex>(build_knn(data_, M))).first;
        return *it->second;
    }

    const NNGraph& knn(std::size_t M) const { return neighbourhood(M).graph; }

private:
    Dataset data_;
    std::vector<double> matrix_;
    mutable std::mutex mutex_;
    mutable std::map<std::size_t, std::unique_ptr<NeighbourhoodIndex>> nn_;
};

}  // namespace cvopt
