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

// From-scratch evaluation of every index, written directly from the
// definitions with plain O(n^2) loops. These are the reference the
// incremental evaluators are checked against, so they deliberately share
// nothing with them beyond the distance function.

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "cvopt/cvi/spec.hpp"
#include "cvopt/dataset.hpp"
#include "cvopt/geometry.hpp"
#include "cvopt/nngraph.hpp"
#include "cvopt/owa.hpp"
#include "cvopt/partition.hpp"

namespace cvopt {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

namespace full {

inline std::vector<std::vector<double>> centroids(const Dataset& ds, const Partition& p) {
    std::vector<std::vector<double>> mu(static_cast<std::size_t>(p.k()), std::vector<double>(ds.dim(), 0.0));
    for (std::size_t i = 0; i < ds.size(); ++i)
        for (std::size_t u = 0; u < ds.dim(); ++u) mu[static_cast<std::size_t>(p[i])][u] += ds(i, u);
    for (int j = 0; j < p.k(); ++j)
        for (double& v : mu[static_cast<std::size_t>(j)]) v /= static_cast<double>(p.size_of(j));
    return mu;
}

// Mean distance from each cluster's points to its centroid.
inline std::vector<double> centroid_spreads(const Dataset& ds, const Partition& p,
                                            const std::vector<std::vector<double>>& mu) {
    std::vector<double> s(static_cast<std::size_t>(p.k()), 0.0);
    for (std::size_t i = 0; i < ds.size(); ++i) s[static_cast<std::size_t>(p[i])] += euclidean(ds.row(i), mu[static_cast<std::size_t>(p[i])]);
    for (int j = 0; j < p.k(); ++j) s[static_cast<std::size_t>(j)] /= static_cast<double>(p.size_of(j));
    return s;
}

}  // namespace full

inline double ball_hall(const Dataset& ds, const Partition& p) {
    const auto mu = full::centroids(ds, p);
    double s = 0.0;
    for (std::size_t i = 0; i < ds.size(); ++i)
        s += squared_euclidean(ds.row(i), mu[static_cast<std::size_t>(p[i])]) / static_cast<double>(p.size_of(p[i]));
    return -s;
}

inline double calinski_harabasz(const Dataset& ds, const Partition& p) {
    const auto mu = full::centroids(ds, p);
    std::vector<double> all(ds.dim(), 0.0);
    for (std::size_t i = 0; i < ds.size(); ++i)
        for (std::size_t u = 0; u < ds.dim(); ++u) all[u] += ds(i, u);
    for (double& v : all) v /= static_cast<double>(ds.size());
    double between = 0.0;
    double within = 0.0;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        between += squared_euclidean(all, mu[static_cast<std::size_t>(p[i])]);
        within += squared_euclidean(ds.row(i), mu[static_cast<std::size_t>(p[i])]);
    }
    if (within == 0.0) return kInf;
    const double n = static_cast<double>(ds.size());
    const double k = static_cast<double>(p.k());
    return (n - k) / (k - 1.0) * between / within;
}

inline double davies_bouldin(const Dataset& ds, const Partition& p) {
    const auto mu = full::centroids(ds, p);
    auto s = full::centroid_spreads(ds, p, mu);
    for (int j = 0; j < p.k(); ++j)
        if (p.size_of(j) <= 1) s[static_cast<std::size_t>(j)] = kInf;
    double total = 0.0;
    for (int i = 0; i < p.k(); ++i) {
        double worst = -kInf;
        for (int j = 0; j < p.k(); ++j) {
            if (i == j) continue;
            const double m = euclidean(mu[static_cast<std::size_t>(i)], mu[static_cast<std::size_t>(j)]);
            const double r = m == 0.0 ? kInf : (s[static_cast<std::size_t>(i)] + s[static_cast<std::size_t>(j)]) / m;
            worst = std::max(worst, r);
        }
        total += worst;
    }
    return -total / static_cast<double>(p.k());
}

// Per-point silhouette widths, 0 for members of singletons.
inline std::vector<double> silhouette_widths(const Dataset& ds, const Partition& p) {
    const std::size_t n = ds.size();
    const std::size_t k = static_cast<std::size_t>(p.k());
    std::vector<double> out(n, 0.0);
    std::vector<double> sums(k);
    for (std::size_t i = 0; i < n; ++i) {
        std::fill(sums.begin(), sums.end(), 0.0);
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) sums[static_cast<std::size_t>(p[j])] += euclidean(ds.row(i), ds.row(j));
        const std::size_t own = static_cast<std::size_t>(p[i]);
        if (p.size_of(p[i]) <= 1) continue;
        const double a = sums[own] / static_cast<double>(p.size_of(p[i]) - 1);
        double b = kInf;
        for (std::size_t c = 0; c < k; ++c)
            if (c != own) b = std::min(b, sums[c] / static_cast<double>(p.size_of(static_cast<int>(c))));
        const double m = std::max(a, b);
        out[i] = m == 0.0 ? 0.0 : (b - a) / m;
    }
    return out;
}

inline double silhouette(const Dataset& ds, const Partition& p) {
    const auto w = silhouette_widths(ds, p);
    double s = 0.0;
    for (double v : w) s += v;
    return s / static_cast<double>(ds.size());
}

inline double silhouette_w(const Dataset& ds, const Partition& p) {
    const auto w = silhouette_widths(ds, p);
    std::size_t singletons = 0;
    for (int j = 0; j < p.k(); ++j) singletons += p.size_of(j) == 1;
    if (singletons == static_cast<std::size_t>(p.k())) return -kInf;
    double s = 0.0;
    for (std::size_t i = 0; i < ds.size(); ++i) s += w[i] / static_cast<double>(p.size_of(p[i]));
    return s / static_cast<double>(static_cast<std::size_t>(p.k()) - singletons);
}

/// Generalised Dunn index: min_{i != j} d(X_i, X_j) / max_i D(X_i).
inline double gdunn(const Dataset& ds, const Partition& p, int lowercase_d, int uppercase_d) {
    const std::size_t n = ds.size();
    const std::size_t k = static_cast<std::size_t>(p.k());
    const auto mu = full::centroids(ds, p);
    const auto spread = full::centroid_spreads(ds, p, mu);

    // pairwise aggregates over clusters (u <= v)
    std::vector<double> mn(k * k, kInf), mx(k * k, 0.0), sm(k * k, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            std::size_t u = static_cast<std::size_t>(p[i]);
            std::size_t v = static_cast<std::size_t>(p[j]);
            if (u > v) std::swap(u, v);
            const double dij = euclidean(ds.row(i), ds.row(j));
            mn[u * k + v] = std::min(mn[u * k + v], dij);
            mx[u * k + v] = std::max(mx[u * k + v], dij);
            sm[u * k + v] += dij;
        }

    double num = kInf;
    for (std::size_t u = 0; u < k; ++u)
        for (std::size_t v = u + 1; v < k; ++v) {
            const double nu = static_cast<double>(p.size_of(static_cast<int>(u)));
            const double nv = static_cast<double>(p.size_of(static_cast<int>(v)));
            double sep = 0.0;
            switch (lowercase_d) {
                case 1: sep = mn[u * k + v]; break;
                case 2: sep = mx[u * k + v]; break;
                case 3: sep = sm[u * k + v] / (nu * nv); break;
                case 4: sep = euclidean(mu[u], mu[v]); break;
                case 5: sep = (nu * spread[u] + nv * spread[v]) / (nu + nv); break;
                default: throw ParameterError("GDunn separation variant must be 1..5");
            }
            num = std::min(num, sep);
        }

    double den = 0.0;
    for (std::size_t u = 0; u < k; ++u) {
        const double nu = static_cast<double>(p.size_of(static_cast<int>(u)));
        double comp = 0.0;
        switch (uppercase_d) {
            case 1: comp = mx[u * k + u]; break;
            case 2: comp = nu > 1.0 ? sm[u * k + u] / (nu * (nu - 1.0) / 2.0) : 0.0; break;
            case 3: comp = spread[u]; break;
            default: throw ParameterError("GDunn compactness variant must be 1..3");
        }
        den = std::max(den, comp);
    }
    if (den == 0.0) return kInf;
    return num / den;
}

/// Near-neighbour Dunn index: OWA_s over NN-edge lengths between clusters
/// divided by OWA_c over NN-edge lengths within clusters.
inline double dunn_nn(const Partition& p, const NNGraph& g, const OwaSpec& sep, const OwaSpec& comp) {
    std::vector<double> cross, within;
    for (const Edge& e : symmetric_edges(g)) (p[e.i] == p[e.j] ? within : cross).push_back(e.distance);
    if (cross.empty()) return kInf;
    const auto c = aggregate(comp, within);
    if (!c) return -kInf;
    const double s = *aggregate(sep, cross);
    if (*c == 0.0) return kInf;
    return s / *c;
}

inline double dunn_nn(const Dataset& ds, const Partition& p, std::size_t M, const OwaSpec& sep, const OwaSpec& comp) {
    return dunn_nn(p, build_knn(ds, M), sep, comp);
}

/// Share of directed M-NN relations that stay inside a cluster; -inf if
/// any cluster has at most M points.
inline double wcnn(const Partition& p, const NNGraph& g) {
    for (int j = 0; j < p.k(); ++j)
        if (p.size_of(j) <= g.M) return -kInf;
    std::size_t same = 0;
    for (std::size_t i = 0; i < g.n; ++i)
        for (std::size_t j : g.of(i)) same += p[i] == p[j];
    return static_cast<double>(same) / static_cast<double>(g.n * g.M);
}

inline double wcnn(const Dataset& ds, const Partition& p, std::size_t M) { return wcnn(p, build_knn(ds, M)); }

/// From-scratch value of any index. kNN graphs come from the geometry cache.
inline double evaluate(const CviSpec& spec, const Geometry& geo, const Partition& p) {
    const Dataset& ds = geo.data();
    if (p.n() != ds.size()) throw ContractViolation("partition size does not match dataset");
    switch (spec.family) {
        case CviFamily::BallHall: return ball_hall(ds, p);
        case CviFamily::CalinskiHarabasz: return calinski_harabasz(ds, p);
        case CviFamily::DaviesBouldin: return davies_bouldin(ds, p);
        case CviFamily::Silhouette: return silhouette(ds, p);
        case CviFamily::SilhouetteW: return silhouette_w(ds, p);
        case CviFamily::GDunn: return gdunn(ds, p, spec.lowercase_d, spec.uppercase_d);
        case CviFamily::DuNN: return dunn_nn(p, geo.knn(spec.M), spec.separation, spec.compactness);
        case CviFamily::WCNN: return wcnn(p, geo.knn(spec.M));
    }
    return 0.0;
}

inline double evaluate(const CviSpec& spec, const Dataset& ds, const Partition& p) {
    return evaluate(spec, Geometry(ds, 0), p);
}

}  // namespace cvopt
