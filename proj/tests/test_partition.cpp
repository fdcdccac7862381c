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


#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "support.hpp"

using namespace cvopt;

TEST(FromLabels, Examples) {
    EXPECT_EQ(Partition::from_labels({0, 0, 1, 1}, 2).sizes(), (std::vector<std::size_t>{2, 2}));
    EXPECT_EQ(Partition::from_labels({0, 1, 2, 1}, 3).sizes(), (std::vector<std::size_t>{1, 2, 1}));
    EXPECT_THROW(Partition::from_labels({0, 0, 0, 0}, 2), NotSurjectiveError);
    EXPECT_THROW(Partition::from_labels({0, 2, 1}, 2), RangeError);
    EXPECT_THROW(Partition::from_labels({0, -1, 1}, 2), RangeError);
    EXPECT_THROW(Partition::from_labels({0, 0}, 1), ParameterError);
}

TEST(Canonicalize, RenumbersByFirstOccurrence) {
    const auto p = canonicalize(Partition::from_labels({1, 1, 0, 1}, 2));
    EXPECT_EQ(p.labels(), (std::vector<int>{0, 0, 1, 0}));
    EXPECT_EQ(canonicalize(p), p);
}

TEST(Canonicalize, InvariantUnderAllPermutations) {
    std::mt19937_64 rng(5);
    for (int k = 2; k <= 4; ++k) {
        for (int trial = 0; trial < 20; ++trial) {
            const auto p = cvopt::random_partition(9, k, rng());
            const auto c = canonicalize(p);
            std::vector<int> perm(static_cast<std::size_t>(k));
            std::iota(perm.begin(), perm.end(), 0);
            do {
                std::vector<int> relabelled(p.n());
                for (std::size_t i = 0; i < p.n(); ++i) relabelled[i] = perm[static_cast<std::size_t>(p[i])];
                EXPECT_EQ(canonicalize(Partition::from_labels(relabelled, k)), c);
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    }
}

TEST(EnumerateMoves, Counts) {
    EXPECT_EQ(enumerate_moves(Partition::from_labels({0, 0, 1, 1}, 2)).size(), 4u);
    const auto locked = enumerate_moves(Partition::from_labels({0, 1, 1, 1}, 2));
    EXPECT_EQ(locked.size(), 3u);
    for (const auto& m : locked) EXPECT_NE(m.point, 0u);
    EXPECT_EQ(enumerate_moves(Partition::from_labels({0, 1, 1, 2, 2}, 3)).size(), 8u);
}

TEST(EnumerateMoves, OrderAndValidity) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 200; ++trial) {
        const int k = 2 + static_cast<int>(rng() % 4);
        const std::size_t n = static_cast<std::size_t>(k) + rng() % 10;
        const auto p = cvopt::random_partition(n, k, rng());
        const auto moves = enumerate_moves(p);
        std::size_t expected = 0;
        for (std::size_t i = 0; i < n; ++i) expected += p.size_of(p[i]) >= 2 ? static_cast<std::size_t>(k - 1) : 0;
        EXPECT_EQ(moves.size(), expected);
        EXPECT_LE(moves.size(), n * static_cast<std::size_t>(k - 1));
        for (std::size_t j = 1; j < moves.size(); ++j)
            EXPECT_TRUE(std::pair(moves[j - 1].point, moves[j - 1].to) < std::pair(moves[j].point, moves[j].to));
        for (const auto& m : moves) {
            const auto q = apply_move(p, m);
            EXPECT_EQ(Partition::from_labels(q.labels(), k), q);
            EXPECT_EQ(apply_move(q, m.reversed()), p);
        }
    }
}

TEST(ApplyMove, ExamplesAndErrors) {
    const auto p = Partition::from_labels({0, 0, 1, 1}, 2);
    const Move m{1, 0, 1};
    const auto q = apply_move(p, m);
    EXPECT_EQ(q.labels(), (std::vector<int>{0, 1, 1, 1}));
    EXPECT_EQ(q.sizes(), (std::vector<std::size_t>{1, 3}));
    EXPECT_EQ(apply_move(q, m.reversed()), p);
    EXPECT_THROW(apply_move(q, Move{0, 0, 1}), ContractViolation);  // would empty cluster 0
    EXPECT_THROW(apply_move(p, Move{0, 1, 0}), ContractViolation);  // wrong source
    EXPECT_THROW(apply_move(p, Move{0, 0, 0}), ContractViolation);
    EXPECT_THROW(apply_move(p, Move{9, 0, 1}), ContractViolation);
}

TEST(Gini, Examples) {
    EXPECT_DOUBLE_EQ(cluster_size_gini(std::vector<std::size_t>{2, 2}), 0.0);
    EXPECT_DOUBLE_EQ(cluster_size_gini(std::vector<std::size_t>{1, 3}), 0.5);
    EXPECT_DOUBLE_EQ(cluster_size_gini(std::vector<std::size_t>{1, 1, 8}), 0.7);
    EXPECT_THROW(cluster_size_gini(std::vector<std::size_t>{4}), ParameterError);
}

TEST(Gini, MatchesPairwiseDefinitionAndExtremes) {
    // every composition of n <= 10 into k positive parts
    for (std::size_t n = 2; n <= 10; ++n)
        for (std::size_t k = 2; k <= n; ++k) {
            double best = -1.0;
            std::vector<std::size_t> s(k, 1);
            const auto rec = [&](auto&& self, std::size_t i, std::size_t left) -> void {
                if (i + 1 == k) {
                    s[i] = left;
                    double num = 0;
                    for (std::size_t a = 0; a < k; ++a)
                        for (std::size_t b = a + 1; b < k; ++b)
                            num += std::abs(static_cast<double>(s[a]) - static_cast<double>(s[b]));
                    const double g = cluster_size_gini(s);
                    EXPECT_NEAR(g, num / (static_cast<double>(k - 1) * static_cast<double>(n)), 1e-12);
                    EXPECT_EQ(g == 0.0, std::all_of(s.begin(), s.end(), [&](auto v) { return v == s[0]; }));
                    best = std::max(best, g);
                    return;
                }
                for (std::size_t v = 1; v + (k - i - 1) <= left; ++v) {
                    s[i] = v;
                    self(self, i + 1, left - v);
                }
            };
            rec(rec, 0, n);
            // one cluster of n-k+1 points plus singletons is the most unequal
            EXPECT_NEAR(best, static_cast<double>(n - k) / static_cast<double>(n), 1e-12);
            EXPECT_LT(best, 1.0);
        }
}
