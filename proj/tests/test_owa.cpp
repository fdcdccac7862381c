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

#include <numeric>

#include "frozen_values.hpp"
#include "support.hpp"

using namespace cvopt;

TEST(OwaSpec, ParseAndPrint) {
    for (const char* s : {"Min", "Max", "Mean", "Const", "SMin:5", "SMax:12"})
        EXPECT_EQ(OwaSpec::parse(s).str(), s);
    EXPECT_THROW(OwaSpec::parse("SMin:0"), ParameterError);
    EXPECT_THROW(OwaSpec::parse("SMin:"), ParseError);
    EXPECT_THROW(OwaSpec::parse("Median"), ParseError);
}

TEST(OwaWeights, Examples) {
    EXPECT_EQ(owa_weights(OwaSpec::mean(), 4), (std::vector<double>{0.25, 0.25, 0.25, 0.25}));
    EXPECT_EQ(owa_weights(OwaSpec::min(), 3), (std::vector<double>{0, 0, 1}));
    EXPECT_EQ(owa_weights(OwaSpec::max(), 3), (std::vector<double>{1, 0, 0}));
    EXPECT_THROW(owa_weights(OwaSpec::min(), 0), ParameterError);
}

TEST(OwaWeights, SmoothMinimumFrozen) {
    const auto w = owa_weights(OwaSpec::smin(5), 100);
    for (std::size_t i = 0; i < 85; ++i) EXPECT_EQ(w[i], 0.0);
    ASSERT_EQ(frozen::smin5_z100_tail.size(), 15u);
    for (std::size_t i = 0; i < 15; ++i) EXPECT_NEAR(w[85 + i], frozen::smin5_z100_tail[i], 1e-15);
    for (std::size_t i = 86; i < 100; ++i) EXPECT_LT(w[i - 1], w[i]);  // peak at position z
    EXPECT_NEAR(std::accumulate(w.begin(), w.end(), 0.0), 1.0, 1e-15);
}

TEST(OwaWeights, TruncatedSupportIsRenormalised) {
    const auto w = owa_weights(OwaSpec::smin(5), 7);
    for (std::size_t i = 0; i < 7; ++i) EXPECT_NEAR(w[i], frozen::smin5_z7[i], 1e-15);
}

TEST(OwaWeights, SmoothMaximumMirrorsMinimum) {
    for (std::size_t z : {1u, 4u, 15u, 16u, 40u}) {
        const auto a = owa_weights(OwaSpec::smin(5), z);
        const auto b = owa_weights(OwaSpec::smax(5), z);
        for (std::size_t i = 0; i < z; ++i) EXPECT_EQ(a[i], b[z - 1 - i]);
    }
}

TEST(Aggregate, Examples) {
    EXPECT_EQ(*aggregate(OwaSpec::min(), std::vector<double>{3, 1, 2}), 1.0);
    EXPECT_EQ(*aggregate(OwaSpec::max(), std::vector<double>{3, 1, 2}), 3.0);
    EXPECT_EQ(*aggregate(OwaSpec::constant(), std::vector<double>{}), 1.0);
    EXPECT_FALSE(aggregate(OwaSpec::min(), std::vector<double>{}).has_value());
    for (int delta : {1, 2, 5, 9})
        for (std::size_t z : {1u, 3u, 50u}) {
            const std::vector<double> c(z, 0.1);
            EXPECT_EQ(*aggregate(OwaSpec::smin(delta), c), 0.1);
            EXPECT_EQ(*aggregate(OwaSpec::smax(delta), c), 0.1);
        }
}

TEST(Aggregate, EqualsWeightedSumOfSortedValues) {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> u(0.0, 10.0);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t z = 1 + rng() % 60;
        std::vector<double> v(z);
        for (auto& x : v) x = u(rng);
        auto sorted = v;
        std::sort(sorted.rbegin(), sorted.rend());
        for (const auto& spec : {OwaSpec::mean(), OwaSpec::smin(1 + static_cast<int>(rng() % 6)),
                                 OwaSpec::smax(1 + static_cast<int>(rng() % 6))}) {
            const auto w = owa_weights(spec, z);
            const double dot = std::inner_product(w.begin(), w.end(), sorted.begin(), 0.0);
            EXPECT_NEAR(*aggregate(spec, v), dot, 1e-12 * 10.0);
        }
    }
}

TEST(Aggregate, PermutationInvariantMonotoneAndMirrored) {
    std::mt19937_64 rng(78);
    std::normal_distribution<double> g(0.0, 3.0);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t z = 1 + rng() % 40;
        std::vector<double> v(z);
        for (auto& x : v) x = g(rng);
        const auto spec = std::vector{OwaSpec::min(), OwaSpec::max(), OwaSpec::mean(), OwaSpec::smin(3),
                                      OwaSpec::smax(3)}[rng() % 5];
        const double base = *aggregate(spec, v);
        auto shuffled = v;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        EXPECT_NEAR(*aggregate(spec, shuffled), base, 1e-12 * (1 + std::abs(base)));
        auto bumped = v;
        bumped[rng() % z] += std::abs(g(rng));
        EXPECT_GE(*aggregate(spec, bumped), base - 1e-12 * (1 + std::abs(base)));
        if (spec.kind == OwaKind::SMin) {
            std::vector<double> neg(v);
            for (auto& x : neg) x = -x;
            EXPECT_NEAR(*aggregate(OwaSpec::smax(3), neg), -base, 1e-12 * (1 + std::abs(base)));
        }
    }
}

TEST(OwaWeights, SumToOneForLargeInputs) {
    for (std::size_t z : {1u, 2u, 10u, 1000u, 1000000u})
        for (const auto& spec : {OwaSpec::mean(), OwaSpec::min(), OwaSpec::max(), OwaSpec::smin(5), OwaSpec::smax(50)}) {
            const auto w = owa_weights(spec, z);
            EXPECT_NEAR(static_cast<double>(std::accumulate(w.begin(), w.end(), 0.0L)), 1.0, 1e-12);
            EXPECT_TRUE(std::all_of(w.begin(), w.end(), [](double x) { return x >= 0.0; }));
        }
}
