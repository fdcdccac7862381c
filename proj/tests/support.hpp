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

#include <cmath>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "cvopt/cvopt.hpp"

namespace testing_support {

// |x - y| <= tol * max(|x|, |y|); infinities must agree exactly.
inline bool rel_close(double x, double y, double tol = 1e-9) {
    if (std::isinf(x) || std::isinf(y)) return x == y;
    if (std::isnan(x) || std::isnan(y)) return false;
    return std::abs(x - y) <= tol * std::max(std::abs(x), std::abs(y)) || x == y;
}

inline cvopt::Dataset random_dataset(std::size_t n, std::size_t d, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<double> v(n * d);
    for (auto& x : v) x = g(rng);
    return cvopt::Dataset(std::move(v), n, d);
}

// Gaussian blobs around k random centres.
inline cvopt::Dataset blobs(std::size_t n, std::size_t d, int k, double spread, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<double> centres(static_cast<std::size_t>(k) * d);
    for (auto& c : centres) c = 5.0 * g(rng);
    std::vector<double> v(n * d);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t u = 0; u < d; ++u) v[i * d + u] = centres[(i % static_cast<std::size_t>(k)) * d + u] + spread * g(rng);
    return cvopt::Dataset(std::move(v), n, d);
}

inline cvopt::Partition random_partition(std::size_t n, int k, std::mt19937_64& rng) {
    return cvopt::random_partition(n, k, rng());
}

// Every partition of n points into exactly k clusters, in canonical form.
inline std::vector<cvopt::Partition> all_partitions(std::size_t n, int k) {
    std::vector<cvopt::Partition> out;
    std::vector<int> labels(n, 0);
    // restricted growth strings
    const auto rec = [&](auto&& self, std::size_t i, int used) -> void {
        if (i == n) {
            if (used == k) out.push_back(cvopt::Partition::from_labels(labels, k));
            return;
        }
        for (int c = 0; c <= std::min(used, k - 1); ++c) {
            labels[i] = c;
            self(self, i + 1, std::max(used, c + 1));
        }
    };
    rec(rec, 0, 0);
    return out;
}

// Every labeling of n points with any number of clusters, as restricted
// growth strings.
inline std::vector<std::vector<int>> all_labelings(std::size_t n) {
    std::vector<std::vector<int>> out;
    std::vector<int> labels(n, 0);
    const auto rec = [&](auto&& self, std::size_t i, int used) -> void {
        if (i == n) {
            out.push_back(labels);
            return;
        }
        for (int c = 0; c <= used; ++c) {
            labels[i] = c;
            self(self, i + 1, std::max(used, c + 1));
        }
    };
    rec(rec, 0, 0);
    return out;
}

class TempDir {
public:
    TempDir() {
        static std::mt19937_64 rng(std::random_device{}());
        path_ = std::filesystem::temp_directory_path() / ("cvopt-test-" + std::to_string(rng()));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;
    const std::filesystem::path& path() const { return path_; }
    std::filesystem::path operator/(const std::string& s) const { return path_ / s; }

private:
    std::filesystem::path path_;
};

inline cvopt::Dataset x4() { return cvopt::Dataset::from_rows({{0.0}, {1.0}, {10.0}, {11.0}}); }

}  // namespace testing_support
