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

// Incremental index evaluation.
//
// An Evaluator tracks one partition and caches whatever sufficient
// statistics its index needs, so that the value after relocating a single
// point can be obtained without a full recompute:
//
//   centroid indices   per-cluster sums, centroids, WCSS, spreads   O(d) .. O(nd)
//   silhouettes        per-point per-cluster distance sums          O(nk)
//   generalised Dunn   per-point per-cluster distance sum/min/max   O(nk)
//   DuNN               Fenwick-indexed within/cross NN-edge sets    O(deg log E)
//   WCNN               within-cluster directed NN relation count    O(M + indeg)
//
// peek() applies the move to the cached state while journaling every
// overwritten double, evaluates, then restores the journal, leaving the
// state bit-identical. commit() applies the move for good; accumulated
// sums are rebuilt from scratch every resync_period() commits.

#pragma once

#include <algorithm>
#include <cmath>
#include <memory>
#include <span>
#include <vector>

#include "cvopt/cvi/indices.hpp"
#include "cvopt/cvi/spec.hpp"
#include "cvopt/error.hpp"
#include "cvopt/geometry.hpp"
#include "cvopt/owa.hpp"
#include "cvopt/partition.hpp"

namespace cvopt {

namespace detail {

class Journal {
public:
    void set(double& ref, double v) {
        log_.emplace_back(&ref, ref);
        ref = v;
    }
    void rollback() {
        for (auto it = log_.rbegin(); it != log_.rend(); ++it) *it->first = it->second;
        log_.clear();
    }

private:
    std::vector<std::pair<double*, double>> log_;
};

// Writes through the journal when one is active.
struct Writer {
    Journal* journal = nullptr;
    void operator()(double& ref, double v) const {
        if (journal) journal->set(ref, v);
        else ref = v;
    }
    bool tentative() const { return journal != nullptr; }
};

/// Labels, sizes and member lists with an exactly reversible move.
class ClusterBook {
public:
    explicit ClusterBook(const Partition& p)
        : labels_(p.labels()), sizes_(p.sizes()), members_(static_cast<std::size_t>(p.k())), slot_(p.n()) {
        for (std::size_t i = 0; i < labels_.size(); ++i) {
            auto& m = members_[static_cast<std::size_t>(labels_[i])];
            slot_[i] = m.size();
            m.push_back(i);
        }
    }

    std::size_t n() const { return labels_.size(); }
    int k() const { return static_cast<int>(sizes_.size()); }
    int label(std::size_t i) const { return labels_[i]; }
    std::size_t size(int c) const { return sizes_[static_cast<std::size_t>(c)]; }
    const std::vector<int>& labels() const { return labels_; }
    const std::vector<std::size_t>& sizes() const { return sizes_; }
    std::span<const std::size_t> members(int c) const { return members_[static_cast<std::size_t>(c)]; }

    // Returns the vacated slot, needed by undo_move.
    std::size_t move(std::size_t p, int to) {
        const int from = labels_[p];
        auto& src = members_[static_cast<std::size_t>(from)];
        auto& dst = members_[static_cast<std::size_t>(to)];
        const std::size_t s = slot_[p];
        const std::size_t last = src.back();
        src[s] = last;
        slot_[last] = s;
        src.pop_back();
        slot_[p] = dst.size();
        dst.push_back(p);
        labels_[p] = to;
        --sizes_[static_cast<std::size_t>(from)];
        ++sizes_[static_cast<std::size_t>(to)];
        return s;
    }

    void undo_move(std::size_t p, int from, std::size_t s) {
        const int to = labels_[p];
        auto& src = members_[static_cast<std::size_t>(from)];
        auto& dst = members_[static_cast<std::size_t>(to)];
        dst.pop_back();
        if (s == src.size()) {
            src.push_back(p);
        } else {
            const std::size_t q = src[s];
            slot_[q] = src.size();
            src.push_back(q);
            src[s] = p;
        }
        slot_[p] = s;
        labels_[p] = from;
        ++sizes_[static_cast<std::size_t>(from)];
        --sizes_[static_cast<std::size_t>(to)];
    }

    Partition partition() const { return Partition::from_labels(labels_, k()); }

private:
    std::vector<int> labels_;
    std::vector<std::size_t> sizes_;
    std::vector<std::vector<std::size_t>> members_;
    std::vector<std::size_t> slot_;
};

}  // namespace detail

/// Stateful objective over one evaluator-owned partition.
///
/// Not thread-safe: peek() temporarily mutates internal state. Distinct
/// evaluators over one Geometry may run concurrently.
class Evaluator {
public:
    static constexpr std::size_t default_resync_period = 64;

    virtual ~Evaluator() = default;
    Evaluator(const Evaluator&) = delete;
    Evaluator& operator=(const Evaluator&) = delete;

    double value() const { return value_; }
    std::size_t n() const { return book_.n(); }
    int k() const { return book_.k(); }
    int label(std::size_t i) const { return book_.label(i); }
    const std::vector<int>& labels() const { return book_.labels(); }
    const std::vector<std::size_t>& sizes() const { return book_.sizes(); }
    Partition partition() const { return book_.partition(); }

    /// Value after applying m; the evaluator is left unchanged.
    double peek(const Move& m) {
        check(m);
        const std::size_t slot = book_.move(m.point, m.to);
        on_move(m, detail::Writer{&journal_});
        const double v = compute();
        on_undo(m);
        journal_.rollback();
        book_.undo_move(m.point, m.from, slot);
        return v;
    }

    void commit(const Move& m) {
        check(m);
        book_.move(m.point, m.to);
        on_move(m, detail::Writer{});
        ++commits_;
        if (resync_period_ != 0 && commits_ % resync_period_ == 0) rebuild();
        value_ = compute();
    }

    /// Rebuilds all cached statistics from the current labels.
    void resync() {
        rebuild();
        value_ = compute();
    }

    std::size_t resync_period() const { return resync_period_; }
    void set_resync_period(std::size_t period) { resync_period_ = period; }

protected:
    explicit Evaluator(const Partition& p) : book_(p) {}

    // Derived constructors call this once their members are in place.
    void initialise() {
        rebuild();
        value_ = compute();
    }

    virtual void rebuild() = 0;
    // Called after book_ has been moved.
    virtual void on_move(const Move& m, detail::Writer w) = 0;
    // Called after a tentative on_move, before the journal is rolled back;
    // restores any state not written through the journal.
    virtual void on_undo(const Move&) {}
    virtual double compute() const = 0;

    detail::ClusterBook book_;

private:
    void check(const Move& m) const {
        if (m.point >= book_.n() || m.from != book_.label(m.point) || m.to < 0 || m.to >= book_.k() ||
            m.to == m.from || book_.size(m.from) < 2)
            throw ContractViolation("invalid move for the evaluator's partition");
    }

    detail::Journal journal_;
    double value_ = 0.0;
    std::size_t commits_ = 0;
    std::size_t resync_period_ = default_resync_period;
};

namespace detail {

inline std::size_t idx(std::size_t row, int c, int k) { return row * static_cast<std::size_t>(k) + static_cast<std::size_t>(c); }

/// Per-cluster coordinate sums, centroids, WCSS and (optionally) the sum
/// of point-to-centroid distances.
class CentroidStats {
public:
    CentroidStats(const Dataset& ds, int k, bool with_spread) : ds_(ds), k_(k), d_(ds.dim()), with_spread_(with_spread) {
        const std::size_t kk = static_cast<std::size_t>(k);
        sums_.assign(kk * d_, 0.0);
        centroids_.assign(kk * d_, 0.0);
        wcss_.assign(kk, 0.0);
        spread_.assign(kk, 0.0);
        scratch_.resize(d_);
    }

    void rebuild(const ClusterBook& book) {
        for (int c = 0; c < k_; ++c) recompute(book, c, Writer{});
    }

    void on_move(const ClusterBook& book, const Move& m, Writer w) {
        if (!w.tentative()) {
            recompute(book, m.from, w);
            recompute(book, m.to, w);
            return;
        }
        const auto x = ds_.row(m.point);
        // source loses x
        {
            const std::size_t a = static_cast<std::size_t>(m.from);
            const double na = static_cast<double>(book.size(m.from));  // after removal
            const double dist2 = squared_euclidean(x, centroid(m.from));
            w(wcss_[a], na <= 1.0 ? 0.0 : std::max(0.0, wcss_[a] - (na + 1.0) / na * dist2));
            if (na == 1.0) {
                // a lone survivor is its own centroid, exactly
                const auto y = ds_.row(book.members(m.from).front());
                for (std::size_t u = 0; u < d_; ++u) {
                    w(sums_[a * d_ + u], y[u]);
                    w(centroids_[a * d_ + u], y[u]);
                }
            } else {
                for (std::size_t u = 0; u < d_; ++u) {
                    w(sums_[a * d_ + u], sums_[a * d_ + u] - x[u]);
                    w(centroids_[a * d_ + u], sums_[a * d_ + u] / na);
                }
            }
        }
        // target gains x
        {
            const std::size_t b = static_cast<std::size_t>(m.to);
            const double nb = static_cast<double>(book.size(m.to));  // after insertion
            const double dist2 = squared_euclidean(x, centroid(m.to));
            w(wcss_[b], wcss_[b] + (nb - 1.0) / nb * dist2);
            for (std::size_t u = 0; u < d_; ++u) {
                w(sums_[b * d_ + u], sums_[b * d_ + u] + x[u]);
                w(centroids_[b * d_ + u], sums_[b * d_ + u] / nb);
            }
        }
        if (with_spread_) {
            w(spread_[static_cast<std::size_t>(m.from)], spread_sum(book, m.from));
            w(spread_[static_cast<std::size_t>(m.to)], spread_sum(book, m.to));
        }
    }

    std::span<const double> centroid(int c) const { return {centroids_.data() + static_cast<std::size_t>(c) * d_, d_}; }
    double wcss(int c) const { return wcss_[static_cast<std::size_t>(c)]; }
    // Sum over members of the distance to the centroid.
    double spread(int c) const { return spread_[static_cast<std::size_t>(c)]; }

private:
    double spread_sum(const ClusterBook& book, int c) const {
        if (book.size(c) <= 1) return 0.0;
        double s = 0.0;
        const auto mu = centroid(c);
        for (std::size_t i : book.members(c)) s += euclidean(ds_.row(i), mu);
        return s;
    }

    void recompute(const ClusterBook& book, int c, Writer w) {
        const std::size_t cc = static_cast<std::size_t>(c);
        std::fill(scratch_.begin(), scratch_.end(), 0.0);
        for (std::size_t i : book.members(c))
            for (std::size_t u = 0; u < d_; ++u) scratch_[u] += ds_(i, u);
        const double nc = static_cast<double>(book.size(c));
        for (std::size_t u = 0; u < d_; ++u) {
            w(sums_[cc * d_ + u], scratch_[u]);
            w(centroids_[cc * d_ + u], scratch_[u] / nc);
        }
        const auto mu = centroid(c);
        double ss = 0.0;
        for (std::size_t i : book.members(c)) ss += squared_euclidean(ds_.row(i), mu);
        w(wcss_[cc], ss);
        if (with_spread_) w(spread_[cc], spread_sum(book, c));
    }

    const Dataset& ds_;
    int k_;
    std::size_t d_;
    bool with_spread_;
    std::vector<double> sums_, centroids_, wcss_, spread_, scratch_;
};

/// For every point i and cluster c: sum, min and max of the distances
/// from i to the members of c other than i itself.
class PairwiseStats {
public:
    PairwiseStats(const Geometry& geo, int k, bool with_sum, bool with_min, bool with_max)
        : geo_(geo), n_(geo.size()), k_(k), with_sum_(with_sum), with_min_(with_min), with_max_(with_max) {
        const std::size_t cells = n_ * static_cast<std::size_t>(k);
        if (with_sum_) sum_.assign(cells, 0.0);
        if (with_min_) min_.assign(cells, kInf);
        if (with_max_) max_.assign(cells, -kInf);
        if (!geo_.has_matrix()) row_.resize(n_);
    }

    void rebuild(const ClusterBook& book) {
        if (with_sum_) std::fill(sum_.begin(), sum_.end(), 0.0);
        if (with_min_) std::fill(min_.begin(), min_.end(), kInf);
        if (with_max_) std::fill(max_.begin(), max_.end(), -kInf);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) {
                if (i == j) continue;
                const double dij = geo_.distance(i, j);
                const std::size_t cell = idx(i, book.label(j), k_);
                if (with_sum_) sum_[cell] += dij;
                if (with_min_) min_[cell] = std::min(min_[cell], dij);
                if (with_max_) max_[cell] = std::max(max_[cell], dij);
            }
    }

    void on_move(const ClusterBook& book, const Move& m, Writer w) {
        const std::size_t p = m.point;
        const double* dp = distances_from(p);
        for (std::size_t i = 0; i < n_; ++i) {
            if (i == p) continue;
            const double dip = dp[i];
            const std::size_t ca = idx(i, m.from, k_);
            const std::size_t cb = idx(i, m.to, k_);
            if (with_sum_) {
                w(sum_[ca], sum_[ca] - dip);
                w(sum_[cb], sum_[cb] + dip);
            }
            if (with_min_) {
                if (dip < min_[cb]) w(min_[cb], dip);
                if (dip == min_[ca]) w(min_[ca], extreme_over(book, i, m.from, true));
            }
            if (with_max_) {
                if (dip > max_[cb]) w(max_[cb], dip);
                if (dip == max_[ca]) w(max_[ca], extreme_over(book, i, m.from, false));
            }
        }
    }

    double sum(std::size_t i, int c) const { return sum_[idx(i, c, k_)]; }
    double min(std::size_t i, int c) const { return min_[idx(i, c, k_)]; }
    double max(std::size_t i, int c) const { return max_[idx(i, c, k_)]; }

private:
    const double* distances_from(std::size_t p) {
        if (geo_.has_matrix()) return geo_.matrix_row(p);
        for (std::size_t i = 0; i < n_; ++i) row_[i] = geo_.distance(p, i);
        return row_.data();
    }

    double extreme_over(const ClusterBook& book, std::size_t i, int c, bool lowest) const {
        double best = lowest ? kInf : -kInf;
        for (std::size_t j : book.members(c)) {
            if (j == i) continue;
            const double dij = geo_.distance(i, j);
            best = lowest ? std::min(best, dij) : std::max(best, dij);
        }
        return best;
    }

    const Geometry& geo_;
    std::size_t n_;
    int k_;
    bool with_sum_, with_min_, with_max_;
    std::vector<double> sum_, min_, max_, row_;
};

// Fenwick tree of 0/1 flags supporting k-th set position queries.
class RankCounter {
public:
    explicit RankCounter(std::size_t size = 0) { reset(size); }

    void reset(std::size_t size) {
        tree_.assign(size + 1, 0);
        total_ = 0;
        top_ = 1;
        while (top_ * 2 <= size) top_ *= 2;
    }

    void add(std::size_t pos, int delta) {
        total_ += delta;
        for (std::size_t i = pos + 1; i < tree_.size(); i += i & (~i + 1)) tree_[i] += delta;
    }

    std::size_t count() const { return static_cast<std::size_t>(total_); }

    // Position of the r-th set flag, r = 1..count().
    std::size_t kth(std::size_t r) const {
        std::size_t pos = 0;
        long long rem = static_cast<long long>(r);
        for (std::size_t step = top_; step > 0; step >>= 1) {
            const std::size_t nxt = pos + step;
            if (nxt < tree_.size() && tree_[nxt] < rem) {
                pos = nxt;
                rem -= tree_[nxt];
            }
        }
        return pos;  // 0-based
    }

private:
    std::vector<long long> tree_;
    long long total_ = 0;
    std::size_t top_ = 1;
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Concrete evaluators

class CentroidEvaluator final : public Evaluator {
public:
    CentroidEvaluator(CviFamily family, std::shared_ptr<const Geometry> geo, const Partition& p)
        : Evaluator(p),
          family_(family),
          geo_(std::move(geo)),
          stats_(geo_->data(), p.k(), family == CviFamily::DaviesBouldin),
          mean_(geo_->data().dim(), 0.0) {
        const Dataset& ds = geo_->data();
        for (std::size_t i = 0; i < ds.size(); ++i)
            for (std::size_t u = 0; u < ds.dim(); ++u) mean_[u] += ds(i, u);
        for (double& v : mean_) v /= static_cast<double>(ds.size());
        initialise();
    }

protected:
    void rebuild() override { stats_.rebuild(book_); }
    void on_move(const Move& m, detail::Writer w) override { stats_.on_move(book_, m, w); }

    double compute() const override {
        const int k = book_.k();
        switch (family_) {
            case CviFamily::BallHall: {
                double s = 0.0;
                for (int c = 0; c < k; ++c) s += stats_.wcss(c) / static_cast<double>(book_.size(c));
                return -s;
            }
            case CviFamily::CalinskiHarabasz: {
                double between = 0.0;
                double within = 0.0;
                for (int c = 0; c < k; ++c) {
                    between += static_cast<double>(book_.size(c)) * squared_euclidean(mean_, stats_.centroid(c));
                    within += stats_.wcss(c);
                }
                if (within == 0.0) return kInf;
                const double n = static_cast<double>(book_.n());
                return (n - k) / (k - 1.0) * between / within;
            }
            case CviFamily::DaviesBouldin: {
                double total = 0.0;
                for (int i = 0; i < k; ++i) {
                    double worst = -kInf;
                    for (int j = 0; j < k; ++j) {
                        if (i == j) continue;
                        const double m = euclidean(stats_.centroid(i), stats_.centroid(j));
                        const double r = m == 0.0 ? kInf : (dispersion(i) + dispersion(j)) / m;
                        worst = std::max(worst, r);
                    }
                    total += worst;
                }
                return -total / k;
            }
            default: break;
        }
        return 0.0;
    }

private:
    double dispersion(int c) const {
        const std::size_t nc = book_.size(c);
        return nc <= 1 ? kInf : stats_.spread(c) / static_cast<double>(nc);
    }

    CviFamily family_;
    std::shared_ptr<const Geometry> geo_;
    detail::CentroidStats stats_;
    std::vector<double> mean_;
};

class SilhouetteEvaluator final : public Evaluator {
public:
    SilhouetteEvaluator(bool weighted, std::shared_ptr<const Geometry> geo, const Partition& p)
        : Evaluator(p), weighted_(weighted), geo_(std::move(geo)), stats_(*geo_, p.k(), true, false, false) {
        initialise();
    }

protected:
    void rebuild() override { stats_.rebuild(book_); }
    void on_move(const Move& m, detail::Writer w) override { stats_.on_move(book_, m, w); }

    double compute() const override {
        const int k = book_.k();
        const std::size_t n = book_.n();
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const int own = book_.label(i);
            const std::size_t n_own = book_.size(own);
            if (n_own <= 1) continue;
            const double a = stats_.sum(i, own) / static_cast<double>(n_own - 1);
            double b = kInf;
            for (int c = 0; c < k; ++c)
                if (c != own) b = std::min(b, stats_.sum(i, c) / static_cast<double>(book_.size(c)));
            const double m = std::max(a, b);
            const double s = m == 0.0 ? 0.0 : (b - a) / m;
            total += weighted_ ? s / static_cast<double>(n_own) : s;
        }
        if (!weighted_) return total / static_cast<double>(n);
        std::size_t singletons = 0;
        for (int c = 0; c < k; ++c) singletons += book_.size(c) == 1;
        if (singletons == static_cast<std::size_t>(k)) return -kInf;
        return total / static_cast<double>(static_cast<std::size_t>(k) - singletons);
    }

private:
    bool weighted_;
    std::shared_ptr<const Geometry> geo_;
    detail::PairwiseStats stats_;
};

class GDunnEvaluator final : public Evaluator {
public:
    GDunnEvaluator(int lowercase_d, int uppercase_d, std::shared_ptr<const Geometry> geo, const Partition& p)
        : Evaluator(p),
          sep_(lowercase_d),
          comp_(uppercase_d),
          geo_(std::move(geo)),
          pairwise_(*geo_, p.k(), sep_ == 3 || comp_ == 2, sep_ == 1, sep_ == 2 || comp_ == 1),
          centroid_(geo_->data(), p.k(), sep_ == 5 || comp_ == 3),
          use_pairwise_(sep_ <= 3 || comp_ <= 2),
          use_centroid_(sep_ >= 4 || comp_ == 3),
          scratch_(static_cast<std::size_t>(p.k()) * static_cast<std::size_t>(p.k())) {
        if (sep_ < 1 || sep_ > 5 || comp_ < 1 || comp_ > 3) throw ParameterError("GDunn variants are d1..d5, D1..D3");
        initialise();
    }

protected:
    void rebuild() override {
        if (use_pairwise_) pairwise_.rebuild(book_);
        if (use_centroid_) centroid_.rebuild(book_);
    }

    void on_move(const Move& m, detail::Writer w) override {
        if (use_pairwise_) pairwise_.on_move(book_, m, w);
        if (use_centroid_) centroid_.on_move(book_, m, w);
    }

    double compute() const override {
        const double den = compactness();
        if (den == 0.0) return kInf;
        return separation() / den;
    }

private:
    double separation() const {
        const int k = book_.k();
        const std::size_t n = book_.n();
        const std::size_t kk = static_cast<std::size_t>(k);
        double best = kInf;
        switch (sep_) {
            case 1:
                for (std::size_t i = 0; i < n; ++i)
                    for (int c = 0; c < k; ++c)
                        if (c != book_.label(i)) best = std::min(best, pairwise_.min(i, c));
                return best;
            case 2:
            case 3: {
                auto& acc = scratch_;
                std::fill(acc.begin(), acc.end(), sep_ == 2 ? -kInf : 0.0);
                for (std::size_t i = 0; i < n; ++i) {
                    const std::size_t u = static_cast<std::size_t>(book_.label(i));
                    for (int c = 0; c < k; ++c) {
                        if (static_cast<std::size_t>(c) == u) continue;
                        double& cell = acc[u * kk + static_cast<std::size_t>(c)];
                        if (sep_ == 2) cell = std::max(cell, pairwise_.max(i, c));
                        else cell += pairwise_.sum(i, c);
                    }
                }
                for (int u = 0; u < k; ++u)
                    for (int v = u + 1; v < k; ++v) {
                        double s = acc[static_cast<std::size_t>(u) * kk + static_cast<std::size_t>(v)];
                        if (sep_ == 3) s /= static_cast<double>(book_.size(u)) * static_cast<double>(book_.size(v));
                        best = std::min(best, s);
                    }
                return best;
            }
            case 4:
                for (int u = 0; u < k; ++u)
                    for (int v = u + 1; v < k; ++v)
                        best = std::min(best, euclidean(centroid_.centroid(u), centroid_.centroid(v)));
                return best;
            case 5:
                for (int u = 0; u < k; ++u)
                    for (int v = u + 1; v < k; ++v)
                        best = std::min(best, (centroid_.spread(u) + centroid_.spread(v)) /
                                                  static_cast<double>(book_.size(u) + book_.size(v)));
                return best;
            default: break;
        }
        return best;
    }

    double compactness() const {
        const int k = book_.k();
        double worst = 0.0;
        switch (comp_) {
            case 1:
                for (std::size_t i = 0; i < book_.n(); ++i) worst = std::max(worst, pairwise_.max(i, book_.label(i)));
                return worst;
            case 2:
                for (int c = 0; c < k; ++c) {
                    const double nc = static_cast<double>(book_.size(c));
                    if (nc <= 1.0) continue;
                    double s = 0.0;
                    for (std::size_t i : book_.members(c)) s += pairwise_.sum(i, c);
                    worst = std::max(worst, s / (nc * (nc - 1.0)));
                }
                return worst;
            case 3:
                for (int c = 0; c < k; ++c)
                    worst = std::max(worst, centroid_.spread(c) / static_cast<double>(book_.size(c)));
                return worst;
            default: break;
        }
        return worst;
    }

    int sep_, comp_;
    std::shared_ptr<const Geometry> geo_;
    detail::PairwiseStats pairwise_;
    detail::CentroidStats centroid_;
    bool use_pairwise_, use_centroid_;
    mutable std::vector<double> scratch_;
};

class DunnNNEvaluator final : public Evaluator {
public:
    DunnNNEvaluator(std::size_t M, OwaSpec sep, OwaSpec comp, std::shared_ptr<const Geometry> geo, const Partition& p)
        : Evaluator(p), sep_(sep), comp_(comp), geo_(std::move(geo)), nn_(geo_->neighbourhood(M)) {
        within_.resize(nn_.edges.size());
        initialise();
    }

protected:
    void rebuild() override {
        const std::size_t E = nn_.edges.size();
        within_count_.reset(E);
        cross_count_.reset(E);
        sum_within_ = 0.0;
        sum_cross_ = 0.0;
        for (std::size_t r = 0; r < E; ++r) {
            const std::size_t e = nn_.by_distance[r];
            const Edge& ed = nn_.edges[e];
            within_[e] = book_.label(ed.i) == book_.label(ed.j);
            if (within_[e]) {
                within_count_.add(r, 1);
                sum_within_ += ed.distance;
            } else {
                cross_count_.add(r, 1);
                sum_cross_ += ed.distance;
            }
        }
    }

    void on_move(const Move& m, detail::Writer w) override {
        flipped_.clear();
        double dw = 0.0;
        for (std::size_t e : nn_.incident[m.point]) {
            const Edge& ed = nn_.edges[e];
            const std::size_t other = ed.i == m.point ? ed.j : ed.i;
            const bool now = book_.label(other) == m.to;
            if (static_cast<bool>(within_[e]) == now) continue;
            flip(e);
            flipped_.push_back(e);
            dw += now ? ed.distance : -ed.distance;
        }
        if (!flipped_.empty()) {
            w(sum_within_, sum_within_ + dw);
            w(sum_cross_, sum_cross_ - dw);
        }
    }

    void on_undo(const Move&) override {
        for (std::size_t e : flipped_) flip(e);
    }

    double compute() const override {
        if (cross_count_.count() == 0) return kInf;
        double c = 1.0;
        if (comp_.kind != OwaKind::Const) {
            if (within_count_.count() == 0) return -kInf;
            c = aggregate(comp_, within_count_, sum_within_);
        }
        const double s = aggregate(sep_, cross_count_, sum_cross_);
        if (c == 0.0) return kInf;
        return s / c;
    }

private:
    void flip(std::size_t e) {
        const std::size_t r = nn_.rank[e];
        if (within_[e]) {
            within_count_.add(r, -1);
            cross_count_.add(r, 1);
        } else {
            cross_count_.add(r, -1);
            within_count_.add(r, 1);
        }
        within_[e] = !within_[e];
    }

    // r-th smallest distance (1-based) in the set.
    double nth(const detail::RankCounter& set, std::size_t r) const {
        return nn_.edges[nn_.by_distance[set.kth(r)]].distance;
    }

    double aggregate(const OwaSpec& spec, const detail::RankCounter& set, double sum) const {
        const std::size_t z = set.count();
        switch (spec.kind) {
            case OwaKind::Min: return nth(set, 1);
            case OwaKind::Max: return nth(set, z);
            case OwaKind::Mean: return std::clamp(sum / static_cast<double>(z), nth(set, 1), nth(set, z));
            case OwaKind::SMin: {
                const double r = smooth_extreme(spec.delta, std::min(z, spec.support()),
                                                [&](std::size_t j) { return nth(set, j + 1); });
                return std::clamp(r, nth(set, 1), nth(set, z));
            }
            case OwaKind::SMax: {
                const double r = smooth_extreme(spec.delta, std::min(z, spec.support()),
                                                [&](std::size_t j) { return nth(set, z - j); });
                return std::clamp(r, nth(set, 1), nth(set, z));
            }
            case OwaKind::Const: return 1.0;
        }
        return 1.0;
    }

    OwaSpec sep_, comp_;
    std::shared_ptr<const Geometry> geo_;
    const NeighbourhoodIndex& nn_;
    std::vector<char> within_;
    detail::RankCounter within_count_, cross_count_;
    double sum_within_ = 0.0;
    double sum_cross_ = 0.0;
    std::vector<std::size_t> flipped_;
};

class WcnnEvaluator final : public Evaluator {
public:
    WcnnEvaluator(std::size_t M, std::shared_ptr<const Geometry> geo, const Partition& p)
        : Evaluator(p), M_(M), geo_(std::move(geo)), nn_(geo_->neighbourhood(M)) {
        initialise();
    }

protected:
    void rebuild() override {
        std::size_t same = 0;
        for (std::size_t i = 0; i < book_.n(); ++i)
            for (std::size_t j : nn_.graph.of(i)) same += book_.label(i) == book_.label(j);
        same_ = static_cast<double>(same);
    }

    void on_move(const Move& m, detail::Writer w) override {
        long long delta = 0;
        const auto count = [&](std::size_t other) {
            const int c = book_.label(other);
            delta += (c == m.to) - (c == m.from);
        };
        for (std::size_t j : nn_.graph.of(m.point)) count(j);
        for (std::size_t i : nn_.reverse[m.point]) count(i);
        if (delta != 0) w(same_, same_ + static_cast<double>(delta));
    }

    double compute() const override {
        for (int c = 0; c < book_.k(); ++c)
            if (book_.size(c) <= M_) return -kInf;
        return same_ / static_cast<double>(book_.n() * M_);
    }

private:
    std::size_t M_;
    std::shared_ptr<const Geometry> geo_;
    const NeighbourhoodIndex& nn_;
    double same_ = 0.0;
};

/// Builds the incremental evaluator for `spec` positioned at `p`.
inline std::unique_ptr<Evaluator> make_evaluator(const CviSpec& spec, std::shared_ptr<const Geometry> geo,
                                                 const Partition& p) {
    if (!geo) throw ContractViolation("null geometry");
    if (p.n() != geo->size()) throw ContractViolation("partition size does not match dataset");
    switch (spec.family) {
        case CviFamily::BallHall:
        case CviFamily::CalinskiHarabasz:
        case CviFamily::DaviesBouldin: return std::make_unique<CentroidEvaluator>(spec.family, std::move(geo), p);
        case CviFamily::Silhouette: return std::make_unique<SilhouetteEvaluator>(false, std::move(geo), p);
        case CviFamily::SilhouetteW: return std::make_unique<SilhouetteEvaluator>(true, std::move(geo), p);
        case CviFamily::GDunn:
            return std::make_unique<GDunnEvaluator>(spec.lowercase_d, spec.uppercase_d, std::move(geo), p);
        case CviFamily::DuNN:
            return std::make_unique<DunnNNEvaluator>(spec.M, spec.separation, spec.compactness, std::move(geo), p);
        case CviFamily::WCNN: return std::make_unique<WcnnEvaluator>(spec.M, std::move(geo), p);
    }
    throw ParameterError("unknown index family");
}

}  // namespace cvopt
