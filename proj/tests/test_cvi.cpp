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

#include "frozen_values.hpp"
#include "support.hpp"

using namespace cvopt;
using testing_support::rel_close;

namespace {

Partition from(std::vector<int> labels) { return Partition::from_labels(std::move(labels)); }

void check_table(const Dataset& ds, const std::vector<int>& labels,
                 const std::vector<std::pair<const char*, double>>& table) {
    const auto geo = std::make_shared<const Geometry>(ds);
    const auto p = from(labels);
    for (const auto& [name, expected] : table) {
        SCOPED_TRACE(name);
        const auto spec = CviSpec::parse(name);
        EXPECT_PRED3(rel_close, evaluate(spec, *geo, p), expected, 1e-12);
        EXPECT_PRED3(rel_close, evaluate(spec, ds, p), expected, 1e-12);
        const auto ev = make_evaluator(spec, geo, p);
        EXPECT_PRED3(rel_close, ev->value(), expected, 1e-12);
        const auto moves = enumerate_moves(p);
        if (moves.empty()) continue;
        ev->commit(moves.front());
        ev->commit(moves.front().reversed());
        EXPECT_PRED3(rel_close, ev->value(), expected, 1e-12);
    }
}

}  // namespace

TEST(FrozenTables, TwoPairsOnALine) { check_table(testing_support::x4(), {0, 0, 1, 1}, frozen::X4_M2); }
TEST(FrozenTables, ThreeGroupsM3) { check_table(Dataset::from_rows(frozen::Y), frozen::CY, frozen::Y_M3); }
TEST(FrozenTables, MixedGroupsM2) { check_table(Dataset::from_rows(frozen::Y), frozen::CY2, frozen::Y2_M2); }
TEST(FrozenTables, CompleteNeighbourhood) { check_table(Dataset::from_rows(frozen::Y), frozen::CY, frozen::Y_M9); }

TEST(Indices, TwoPairsOnALine) {
    const auto ds = testing_support::x4();
    const auto good = from({0, 0, 1, 1});
    EXPECT_DOUBLE_EQ(calinski_harabasz(ds, good), 200.0);
    EXPECT_DOUBLE_EQ(ball_hall(ds, good), -0.5);
    EXPECT_DOUBLE_EQ(davies_bouldin(ds, good), -0.1);
    EXPECT_DOUBLE_EQ(silhouette(ds, good), 359.0 / 399.0);
    EXPECT_DOUBLE_EQ(gdunn(ds, good, 1, 1), 9.0);
    EXPECT_DOUBLE_EQ(calinski_harabasz(ds, from({0, 1, 0, 1})), 0.02);
    EXPECT_LT(calinski_harabasz(ds, from({0, 1, 0, 1})), calinski_harabasz(ds, good));
}

TEST(Indices, SingletonConventions) {
    const auto ds = testing_support::x4();
    const auto single = from({0, 1, 1, 1});
    EXPECT_EQ(davies_bouldin(ds, single), -kInf);
    EXPECT_EQ(silhouette_widths(ds, single)[0], 0.0);
    EXPECT_EQ(silhouette_w(ds, from({0, 1, 2, 3})), -kInf);
    EXPECT_EQ(gdunn(ds, from({0, 1, 2, 3}), 1, 1), kInf);
    EXPECT_EQ(calinski_harabasz(ds, from({0, 1, 2, 3})), kInf);
}

TEST(Indices, NearNeighbourExamples) {
    const auto ds = testing_support::x4();
    const auto good = from({0, 0, 1, 1});
    EXPECT_EQ(wcnn(ds, good, 1), 1.0);
    EXPECT_EQ(wcnn(ds, good, 2), -kInf);
    EXPECT_EQ(wcnn(ds, from({0, 1, 0, 1}), 1), 0.0);
    // no cross-cluster edges with M = 1
    EXPECT_EQ(dunn_nn(ds, good, 1, OwaSpec::min(), OwaSpec::max()), kInf);
    // every point alone: no within edges
    EXPECT_EQ(dunn_nn(ds, from({0, 1, 2, 3}), 2, OwaSpec::min(), OwaSpec::max()), -kInf);
    EXPECT_EQ(dunn_nn(ds, from({0, 1, 2, 3}), 2, OwaSpec::min(), OwaSpec::constant()), 1.0);
    // coincident points: zero within-cluster length
    const auto dup = Dataset::from_rows({{0}, {0}, {5}, {5}});
    EXPECT_EQ(dunn_nn(dup, good, 2, OwaSpec::min(), OwaSpec::max()), kInf);
}

TEST(Indices, CompleteNeighbourhoodDunnMatchesClassicalDunn) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 6 + rng() % 30;
        const auto ds = testing_support::random_dataset(n, 1 + rng() % 3, rng);
        const auto p = testing_support::random_partition(n, 2 + static_cast<int>(rng() % 3), rng);
        EXPECT_PRED3(rel_close, dunn_nn(ds, p, n - 1, OwaSpec::min(), OwaSpec::max()), gdunn(ds, p, 1, 1), 1e-12);
    }
}

TEST(Indices, InvariantUnderRigidMotion) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> angle(0.0, 6.28);
    auto specs = standard_indices();
    for (auto& s : specs) s = s.with_M(s.M == 25 ? 6 : 3);
    for (int trial = 0; trial < 5; ++trial) {
        const std::size_t n = 30;
        const auto ds = testing_support::blobs(n, 2, 3, 0.8, rng);
        const double a = angle(rng), tx = 10.0 * angle(rng), ty = -angle(rng);
        std::vector<std::vector<double>> rows(n);
        for (std::size_t i = 0; i < n; ++i)
            rows[i] = {std::cos(a) * ds(i, 0) - std::sin(a) * ds(i, 1) + tx,
                       std::sin(a) * ds(i, 0) + std::cos(a) * ds(i, 1) + ty};
        const auto moved = Dataset::from_rows(rows);
        const auto p = testing_support::random_partition(n, 3, rng);
        for (const auto& s : specs) {
            SCOPED_TRACE(s.name());
            EXPECT_PRED3(rel_close, evaluate(s, moved, p), evaluate(s, ds, p), 1e-8);
        }
    }
}

TEST(Indices, LabelPermutationInvariant) {
    std::mt19937_64 rng(6);
    auto specs = standard_indices();
    for (auto& s : specs) s = s.with_M(s.M == 25 ? 5 : 2);
    const auto ds = testing_support::blobs(24, 2, 3, 1.0, rng);
    const auto p = testing_support::random_partition(24, 3, rng);
    std::vector<int> relabelled(p.labels());
    for (int& c : relabelled) c = (c + 1) % 3;
    const auto q = from(relabelled);
    for (const auto& s : specs) EXPECT_PRED3(rel_close, evaluate(s, ds, q), evaluate(s, ds, p), 1e-12);
}

TEST(Indices, SizeMismatchRejected) {
    EXPECT_THROW(evaluate(CviSpec::simple(CviFamily::BallHall), testing_support::x4(), from({0, 1, 0})),
                 ContractViolation);
}

TEST(CviSpec, NamesRoundTrip) {
    const auto all = standard_indices();
    EXPECT_EQ(all.size(), 52u);
    std::set<std::string> names;
    for (const auto& s : all) {
        EXPECT_EQ(CviSpec::parse(s.name()), s);
        names.insert(s.name());
    }
    EXPECT_EQ(names.size(), 52u);
    EXPECT_EQ(std::count_if(all.begin(), all.end(), [](const CviSpec& s) { return s.family == CviFamily::DuNN; }), 30);
    EXPECT_EQ(CviSpec::parse("Cali\xc5\x84skiHarabasz").name(), "CalinskiHarabasz");
}

TEST(CviSpec, ParseErrors) {
    for (const char* bad : {"", "Dunn", "GDunn_d6_D1", "GDunn_d1_D4", "GDunn_d1D1", "DuNN_5_Min", "DuNN_x_Min_Max",
                            "WCNN_", "WCNN_0", "DuNN_5_Const_Max", "DuNN_0_Min_Max"})
        EXPECT_THROW(CviSpec::parse(bad), Error) << bad;
    EXPECT_EQ(CviSpec::parse("WCNN_5").with_M(7).name(), "WCNN_7");
    EXPECT_EQ(CviSpec::parse("BallHall").with_M(7).name(), "BallHall");
}
