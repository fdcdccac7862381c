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

// Candidate generators and tabu-assisted steepest-ascent hill climbing.

#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <limits>
#include <memory>
#include <random>
#include <set>
#include <span>
#include <unordered_map>
#include <vector>

#include "cvopt/cvi/evaluator.hpp"
#include "cvopt/cvi/spec.hpp"
#include "cvopt/dataset.hpp"
#include "cvopt/error.hpp"
#include "cvopt/geometry.hpp"
#include "cvopt/partition.hpp"
#include "cvopt/rng.hpp"

namespace cvopt {

// ---------------------------------------------------------------------------
// Candidate generators

/// Labels drawn i.i.d. uniformly from 0..k-1, redrawn until every cluster
/// is non-empty.
inline Partition random_partition(std::size_t n, int k, std::uint64_t seed) {
    if (k < 2) throw ParameterError("k must be at least 2");
    if (static_cast<std::size_t>(k) > n) throw ParameterError("k exceeds the number of points");
    Rng rng(seed);
    std::uniform_int_distribution<int> pick(0, k - 1);
    std::vector<int> labels(n);
    std::vector<std::size_t> sizes(static_cast<std::size_t>(k));
    for (;;) {
        std::fill(sizes.begin(), sizes.end(), 0);
        for (auto& v : labels) {
            v = pick(rng);
            ++sizes[static_cast<std::size_t>(v)];
        }
        if (std::find(sizes.begin(), sizes.end(), 0) == sizes.end()) return Partition::from_labels(std::move(labels), k);
    }
}

/// Assigns each point to the cluster floor(t / V) of its nearest vantage
/// point t (ties to the lower t). The result need not be surjective.
inline std::vector<int> assign_to_vantage_points(const Dataset& ds, const Dataset& vantage, std::size_t V) {
    if (V < 1) throw ParameterError("V must be at least 1");
    if (vantage.dim() != ds.dim()) throw ParameterError("vantage points have the wrong dimension");
    std::vector<int> labels(ds.size());
    for (std::size_t i = 0; i < ds.size(); ++i) {
        std::size_t best = 0;
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t t = 0; t < vantage.size(); ++t) {
            const double dist = squared_euclidean(ds.row(i), vantage.row(t));
            if (dist < best_d) {
                best_d = dist;
                best = t;
            }
        }
        labels[i] = static_cast<int>(best / V);
    }
    return labels;
}

/// Nearest-vantage-point partition with V pivots per cluster, sampled
/// uniformly from the bounding box of the data.
inline Partition vantage_point_partition(const Dataset& ds, int k, std::size_t V, std::uint64_t seed,
                                         std::size_t max_attempts = 1000) {
    if (k < 2) throw ParameterError("k must be at least 2");
    if (static_cast<std::size_t>(k) > ds.size()) throw ParameterError("k exceeds the number of points");
    if (V < 1) throw ParameterError("V must be at least 1");
    const std::size_t d = ds.dim();
    std::vector<double> lo(d, std::numeric_limits<double>::infinity());
    std::vector<double> hi(d, -std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < ds.size(); ++i)
        for (std::size_t u = 0; u < d; ++u) {
            lo[u] = std::min(lo[u], ds(i, u));
            hi[u] = std::max(hi[u], ds(i, u));
        }
    Rng rng(seed);
    const std::size_t count = V * static_cast<std::size_t>(k);
    std::vector<double> pts(count * d);
    for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
        for (std::size_t t = 0; t < count; ++t)
            for (std::size_t u = 0; u < d; ++u)
                pts[t * d + u] = std::uniform_real_distribution<double>(lo[u], hi[u])(rng);
        auto labels = assign_to_vantage_points(ds, Dataset(pts, count, d), V);
        std::vector<bool> seen(static_cast<std::size_t>(k), false);
        for (int v : labels) seen[static_cast<std::size_t>(v)] = true;
        if (std::find(seen.begin(), seen.end(), false) == seen.end()) return Partition::from_labels(std::move(labels), k);
    }
    throw GenerationFailure("no surjective vantage-point partition within the retry cap");
}

/// Within-cluster sum of squared distances to the centroids.
inline double wcss(const Dataset& ds, const Partition& p) {
    const auto mu = full::centroids(ds, p);
    double s = 0.0;
    for (std::size_t i = 0; i < ds.size(); ++i) s += squared_euclidean(ds.row(i), mu[static_cast<std::size_t>(p[i])]);
    return s;
}

namespace detail {

struct LloydState {
    std::vector<int> labels;
    std::vector<double> centroids;  // k x d
};

inline void update_centroids(const Dataset& ds, int k, LloydState& s) {
    const std::size_t d = ds.dim();
    std::vector<std::size_t> sizes(static_cast<std::size_t>(k), 0);
    std::fill(s.centroids.begin(), s.centroids.end(), 0.0);
    for (std::size_t i = 0; i < ds.size(); ++i) {
        const std::size_t c = static_cast<std::size_t>(s.labels[i]);
        ++sizes[c];
        for (std::size_t u = 0; u < d; ++u) s.centroids[c * d + u] += ds(i, u);
    }
    for (std::size_t c = 0; c < sizes.size(); ++c)
        for (std::size_t u = 0; u < d; ++u) s.centroids[c * d + u] /= static_cast<double>(sizes[c]);
}

// Moves the point farthest from its centroid within the largest cluster
// into each empty cluster.
inline void repair_empty(const Dataset& ds, int k, LloydState& s) {
    const std::size_t d = ds.dim();
    for (;;) {
        std::vector<std::size_t> sizes(static_cast<std::size_t>(k), 0);
        for (int v : s.labels) ++sizes[static_cast<std::size_t>(v)];
        const auto empty = std::find(sizes.begin(), sizes.end(), 0);
        if (empty == sizes.end()) return;
        const int largest = static_cast<int>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
        update_centroids(ds, k, s);  // empty clusters get NaN centroids, unused here
        std::size_t far = 0;
        double far_d = -1.0;
        for (std::size_t i = 0; i < ds.size(); ++i) {
            if (s.labels[i] != largest) continue;
            const double dist = squared_euclidean(
                ds.row(i), std::span<const double>(s.centroids.data() + static_cast<std::size_t>(largest) * d, d));
            if (dist > far_d) {
                far_d = dist;
                far = i;
            }
        }
        s.labels[far] = static_cast<int>(empty - sizes.begin());
    }
}

}  // namespace detail

/// Best-of-restarts Lloyd iteration with k-means++ seeding.
inline Partition lloyd_kmeans(const Dataset& ds, int k, std::size_t restarts, std::uint64_t seed,
                              std::size_t max_iter = 300) {
    if (k < 2) throw ParameterError("k must be at least 2");
    const std::size_t n = ds.size();
    const std::size_t d = ds.dim();
    if (static_cast<std::size_t>(k) > n) throw ParameterError("k exceeds the number of points");
    if (restarts < 1) throw ParameterError("k-means needs at least one restart");
    const std::size_t kk = static_cast<std::size_t>(k);

    std::vector<int> best;
    double best_wcss = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < restarts; ++r) {
        Rng rng(derive_seed(seed, r));
        detail::LloydState s{std::vector<int>(n, 0), std::vector<double>(kk * d)};

        // k-means++
        std::vector<double> closest(n, std::numeric_limits<double>::infinity());
        std::size_t first = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
        for (std::size_t c = 0; c < kk; ++c) {
            std::size_t pick = first;
            if (c > 0) {
                double total = 0.0;
                for (double v : closest) total += v;
                if (total > 0.0) {
                    double u = std::uniform_real_distribution<double>(0.0, total)(rng);
                    pick = n - 1;
                    for (std::size_t i = 0; i < n; ++i) {
                        u -= closest[i];
                        if (u < 0.0) {
                            pick = i;
                            break;
                        }
                    }
                } else {
                    pick = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
                }
            }
            std::copy_n(ds.row(pick).begin(), d, s.centroids.begin() + static_cast<std::ptrdiff_t>(c * d));
            for (std::size_t i = 0; i < n; ++i)
                closest[i] = std::min(closest[i], squared_euclidean(ds.row(i), ds.row(pick)));
        }

        for (std::size_t it = 0; it < max_iter; ++it) {
            bool changed = it == 0;
            for (std::size_t i = 0; i < n; ++i) {
                int arg = 0;
                double dist = std::numeric_limits<double>::infinity();
                for (std::size_t c = 0; c < kk; ++c) {
                    const double dc =
                        squared_euclidean(ds.row(i), std::span<const double>(s.centroids.data() + c * d, d));
                    if (dc < dist) {
                        dist = dc;
                        arg = static_cast<int>(c);
                    }
                }
                if (s.labels[i] != arg) {
                    s.labels[i] = arg;
                    changed = true;
                }
            }
            detail::repair_empty(ds, k, s);
            if (!changed) break;
            detail::update_centroids(ds, k, s);
        }
        const double w = wcss(ds, Partition::from_labels(s.labels, k));
        if (w < best_wcss) {
            best_wcss = w;
            best = s.labels;
        }
    }
    return Partition::from_labels(std::move(best), k);
}

/// Completes a reference labeling (file convention, 0 = noise) by giving
/// each noise point the cluster of its nearest non-noise point. Returns
/// internal 0-based labels.
inline std::vector<int> fill_noise(const Geometry& geo, std::span<const int> file_labels) {
    const std::size_t n = file_labels.size();
    if (n != geo.size()) throw LengthError("labeling length does not match dataset");
    std::vector<std::size_t> anchored;
    for (std::size_t i = 0; i < n; ++i)
        if (file_labels[i] > 0) anchored.push_back(i);
    if (anchored.empty()) throw DegenerateDataError("labeling marks every point as noise");
    std::vector<int> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (file_labels[i] > 0) {
            out[i] = file_labels[i] - 1;
            continue;
        }
        std::size_t best = anchored.front();
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t j : anchored) {
            const double dist = geo.distance(i, j);
            if (dist < best_d) {
                best_d = dist;
                best = j;
            }
        }
        out[i] = file_labels[best] - 1;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Tabu list

/// Visited partitions up to relabelling.
///
/// Each partition is fingerprinted by sum_j mix(sum_{i in X_j} r_i), which
/// does not depend on cluster numbering and changes in O(1) per move;
/// fingerprint hits are confirmed on canonical label vectors.
class TabuList {
public:
    explicit TabuList(std::size_t n) : weights_(n) {
        for (std::size_t i = 0; i < n; ++i) weights_[i] = splitmix64(0x7ab0ULL + i);
    }

    std::size_t n() const { return weights_.size(); }
    std::size_t size() const { return stored_.size(); }
    std::uint64_t point_weight(std::size_t i) const { return weights_[i]; }
    static std::uint64_t mix(std::uint64_t cluster_sum) { return splitmix64(cluster_sum); }

    std::uint64_t fingerprint(std::span<const int> labels, int k) const {
        std::vector<std::uint64_t> sums(static_cast<std::size_t>(k), 0);
        for (std::size_t i = 0; i < labels.size(); ++i) sums[static_cast<std::size_t>(labels[i])] += weights_[i];
        std::uint64_t h = 0;
        for (auto s : sums) h += mix(s);
        return h;
    }

    bool contains(std::uint64_t fp, std::span<const int> canonical) const {
        const auto [lo, hi] = index_.equal_range(fp);
        for (auto it = lo; it != hi; ++it)
            if (std::equal(canonical.begin(), canonical.end(), stored_[it->second].begin(), stored_[it->second].end()))
                return true;
        return false;
    }

    // Returns false if already present.
    bool insert(std::uint64_t fp, std::vector<int> canonical) {
        if (contains(fp, canonical)) return false;
        index_.emplace(fp, stored_.size());
        stored_.push_back(std::move(canonical));
        return true;
    }

    bool contains(const Partition& p) const {
        const auto c = canonical_labels(p.labels(), p.k());
        return contains(fingerprint(c, p.k()), c);
    }

private:
    std::vector<std::uint64_t> weights_;
    std::unordered_multimap<std::uint64_t, std::size_t> index_;
    std::vector<std::vector<int>> stored_;
};

// ---------------------------------------------------------------------------
// Hill climbing

struct ClimbTrace {
    std::size_t candidates = 0;           // m
    std::size_t tabu_size = 0;            // executions of the tabu insertion step
    std::vector<double> best_history;     // incumbent value after each step
    std::vector<std::size_t> steps_per_candidate;
};

struct OptimResult {
    Partition best;
    double value = 0.0;   // along the incremental trajectory
    ClimbTrace trace;
};

/// Tabu-assisted steepest ascent over single-point relocations.
///
/// Candidates are visited in decreasing objective order (stable; -inf
/// last). From each, the best neighbour not yet visited is taken even if
/// worse, the tabu list is shared across candidates, and a candidate is
/// abandoned once more than P steps failed to strictly improve the
/// incumbent, or when no admissible neighbour remains.
inline OptimResult tabu_hill_climb(const CviSpec& spec, const std::shared_ptr<const Geometry>& geo,
                                   std::span<const Partition> candidates, std::size_t P = 250) {
    if (candidates.empty()) throw ContractViolation("no candidate partitions");
    if (P < 1) throw ParameterError("P must be at least 1");
    const std::size_t n = geo->size();
    const int k = candidates.front().k();
    for (const auto& c : candidates)
        if (c.n() != n || c.k() != k) throw ContractViolation("candidate has the wrong n or k");

    std::vector<std::pair<double, std::size_t>> order;
    order.reserve(candidates.size());
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        double v = make_evaluator(spec, geo, candidates[i])->value();
        if (std::isnan(v)) v = -kInf;
        order.emplace_back(v, i);
    }
    std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) { return a.first > b.first; });

    OptimResult res{candidates[order.front().second], order.front().first, {}};
    res.trace.candidates = candidates.size();
    TabuList tabu(n);
    std::vector<int> scratch(n);
    std::vector<std::uint64_t> cluster_sum(static_cast<std::size_t>(k));

    for (const auto& [start_value, ci] : order) {
        auto ev = make_evaluator(spec, geo, candidates[ci]);
        std::fill(cluster_sum.begin(), cluster_sum.end(), 0);
        for (std::size_t i = 0; i < n; ++i) cluster_sum[static_cast<std::size_t>(ev->label(i))] += tabu.point_weight(i);
        std::uint64_t fp = 0;
        for (auto s : cluster_sum) fp += TabuList::mix(s);

        const auto moved_fp = [&](const Move& m) {
            const std::uint64_t w = tabu.point_weight(m.point);
            const std::uint64_t a = cluster_sum[static_cast<std::size_t>(m.from)];
            const std::uint64_t b = cluster_sum[static_cast<std::size_t>(m.to)];
            return fp - TabuList::mix(a) - TabuList::mix(b) + TabuList::mix(a - w) + TabuList::mix(b + w);
        };
        const auto moved_canonical = [&](const Move& m) {
            std::copy(ev->labels().begin(), ev->labels().end(), scratch.begin());
            scratch[m.point] = m.to;
            return canonical_labels(scratch, k);
        };

        std::size_t p = 1;
        std::size_t steps = 0;
        for (;;) {
            bool found = false;
            Move best_move{};
            double best_value = -kInf;
            std::uint64_t best_fp = 0;
            for (std::size_t i = 0; i < n; ++i) {
                const int from = ev->label(i);
                if (ev->sizes()[static_cast<std::size_t>(from)] < 2) continue;
                for (int to = 0; to < k; ++to) {
                    if (to == from) continue;
                    const Move m{i, from, to};
                    const double v = ev->peek(m);
                    if (!(v > best_value)) continue;
                    const std::uint64_t mfp = moved_fp(m);
                    if (tabu.contains(mfp, moved_canonical(m))) continue;
                    found = true;
                    best_move = m;
                    best_value = v;
                    best_fp = mfp;
                }
            }
            if (!found) break;

            tabu.insert(best_fp, moved_canonical(best_move));
            ev->commit(best_move);
            const std::uint64_t w = tabu.point_weight(best_move.point);
            cluster_sum[static_cast<std::size_t>(best_move.from)] -= w;
            cluster_sum[static_cast<std::size_t>(best_move.to)] += w;
            fp = best_fp;
            ++steps;

            const double v = ev->value();
            if (v > res.value) {
                res.value = v;
                res.best = ev->partition();
            } else {
                ++p;
            }
            res.trace.best_history.push_back(res.value);
            if (p > P) break;
        }
        res.trace.steps_per_candidate.push_back(steps);
    }
    res.trace.tabu_size = tabu.size();
    res.best = canonicalize(res.best);
    return res;
}

inline OptimResult tabu_hill_climb(const CviSpec& spec, const Dataset& ds, std::span<const Partition> candidates,
                                   std::size_t P = 250) {
    return tabu_hill_climb(spec, std::make_shared<const Geometry>(ds), candidates, P);
}

// ---------------------------------------------------------------------------
// Candidate pool assembly

struct GeneratorConfig {
    std::uint64_t seed = 42;
    std::size_t random_count = 5;
    std::size_t vantage_count = 5;
    std::size_t vantage_V = 5;
    std::size_t kmeans_restarts = 10;  // 0 disables k-means
    std::size_t P = 250;
};

/// Drops candidates equal up to relabelling, keeping first occurrences.
inline std::vector<Partition> deduplicate(std::vector<Partition> pool) {
    std::set<std::vector<int>> seen;
    std::vector<Partition> out;
    for (auto& p : pool)
        if (seen.insert(canonical_labels(p.labels(), p.k())).second) out.push_back(std::move(p));
    return out;
}

/// Candidate pool for one k: external labelings and references with k
/// clusters (noise filled in), then random, vantage-point and k-means
/// partitions; deduplicated.
inline std::vector<Partition> assemble_candidates(const Geometry& geo, int k,
                                                  std::span<const std::vector<int>> references,
                                                  std::span<const std::vector<int>> external,
                                                  const GeneratorConfig& cfg) {
    std::vector<Partition> pool;
    const auto admit = [&](const std::vector<int>& file_labels) {
        int kk = 0;
        for (int v : file_labels) kk = std::max(kk, v);
        if (kk != k) return;
        pool.push_back(Partition::from_labels(fill_noise(geo, file_labels), k));
    };
    for (const auto& l : external) admit(l);
    for (const auto& l : references) admit(l);

    const Dataset& ds = geo.data();
    const std::uint64_t base = derive_seed(cfg.seed, static_cast<std::uint64_t>(k));
    for (std::size_t r = 0; r < cfg.random_count; ++r) pool.push_back(random_partition(ds.size(), k, derive_seed(base, r)));
    for (std::size_t r = 0; r < cfg.vantage_count; ++r) {
        try {
            pool.push_back(vantage_point_partition(ds, k, cfg.vantage_V, derive_seed(base, 1000 + r)));
        } catch (const GenerationFailure&) {
            pool.push_back(random_partition(ds.size(), k, derive_seed(base, 2000 + r)));
        }
    }
    if (cfg.kmeans_restarts > 0) pool.push_back(lloyd_kmeans(ds, k, cfg.kmeans_restarts, derive_seed(base, 3000)));
    return deduplicate(std::move(pool));
}

/// Loads every label file in `dirs` that has exactly n entries.
inline std::vector<std::vector<int>> load_candidate_dirs(std::span<const std::filesystem::path> dirs, std::size_t n) {
    std::vector<std::vector<int>> out;
    for (const auto& dir : dirs) {
        if (!std::filesystem::is_directory(dir)) throw IoError("candidate directory not found: " + dir.string());
        std::vector<std::filesystem::path> files;
        for (const auto& e : std::filesystem::directory_iterator(dir))
            if (e.is_regular_file()) files.push_back(e.path());
        std::sort(files.begin(), files.end());
        for (const auto& f : files) out.push_back(load_labels(f, n));
    }
    return out;
}

/// Assembles the candidate pool for `k` and runs the hill climber.
inline OptimResult optimise_dataset(const CviSpec& spec, const std::shared_ptr<const Geometry>& geo, int k,
                                    std::span<const std::vector<int>> references,
                                    std::span<const std::vector<int>> external, const GeneratorConfig& cfg) {
    auto pool = assemble_candidates(*geo, k, references, external, cfg);
    if (pool.empty()) throw ConfigError("empty candidate pool");
    return tabu_hill_climb(spec, geo, pool, cfg.P);
}

}  // namespace cvopt
