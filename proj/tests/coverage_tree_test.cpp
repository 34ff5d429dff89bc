#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "flatdepth/coverage_tree.hpp"
#include "test_util.hpp"

using namespace flatdepth;
using flatdepth::testing::Rng;

namespace {

// Antipode-closed boundaries from k random directions.
std::vector<CircleVector> random_boundaries(Rng& rng, std::size_t k) {
    std::vector<CircleVector> dirs;
    for (std::size_t i = 0; i < k; ++i) {
        const auto v = rng.circle(20);
        dirs.push_back(v);
        dirs.push_back(v.antipode());
    }
    sort_unique_circular(dirs);
    return dirs;
}

std::vector<int> naive_coverage(std::size_t m, const std::vector<std::pair<std::size_t, std::size_t>>& arcs) {
    std::vector<int> cov(m, 0);
    for (auto [from, to] : arcs) {
        for (std::size_t j = from; j != to; j = (j + 1) % m) {
            ++cov[j];
        }
    }
    return cov;
}

} // namespace

TEST(CoverageTree, EmptyCircle) {
    CoverageSegmentTree tree({});
    EXPECT_EQ(tree.leaf_count(), 1u);
    EXPECT_EQ(tree.min_coverage(), 0);
    EXPECT_EQ(tree.leaf_midpoint(0), CircleVector(1, 0));
}

TEST(CoverageTree, TwoLeaves) {
    CoverageSegmentTree tree({CircleVector(1, 0), CircleVector(-1, 0)});
    ASSERT_EQ(tree.leaf_count(), 2u);
    EXPECT_EQ(tree.leaf_midpoint(0), CircleVector(0, 1));
    EXPECT_EQ(tree.leaf_midpoint(1), CircleVector(0, -1));
    tree.insert_arc(0, 1);
    EXPECT_EQ(tree.min_coverage(), 0);
    EXPECT_EQ(tree.argmin_leaf(), 1u);
    tree.insert_arc(1, 0);
    EXPECT_EQ(tree.min_coverage(), 1);
    EXPECT_EQ(tree.argmin_leaf(), 0u);
    tree.delete_arc(0, 1);
    EXPECT_EQ(tree.leaf_coverage(), (std::vector<int>{0, 1}));
}

TEST(CoverageTree, WrappingArcSplits) {
    std::vector<CircleVector> dirs = {CircleVector(1, 0), CircleVector(0, 1), CircleVector(-1, 0),
                                      CircleVector(0, -1)};
    CoverageSegmentTree tree(dirs);
    tree.insert_arc(3, 1);
    EXPECT_EQ(tree.leaf_coverage(), (std::vector<int>{1, 0, 0, 1}));
    EXPECT_TRUE(tree.check_invariant());
}

TEST(CoverageTree, RejectsUnsortedBoundaries) {
    EXPECT_THROW(CoverageSegmentTree({CircleVector(-1, 0), CircleVector(1, 0)}), std::invalid_argument);
    EXPECT_THROW(CoverageSegmentTree({CircleVector(1, 0), CircleVector(2, 0)}), std::invalid_argument);
}

TEST(CoverageTree, DeletingAbsentArcThrows) {
    CoverageSegmentTree tree({CircleVector(1, 0), CircleVector(-1, 0)});
    EXPECT_THROW(tree.delete_arc(0, 1), std::logic_error);
    tree.insert_arc(0, 1);
    EXPECT_THROW(tree.delete_arc(1, 0), std::logic_error);
    EXPECT_NO_THROW(tree.delete_arc(0, 1));
}

TEST(CoverageTree, MatchesNaiveCoverage) {
    Rng rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        const auto dirs = random_boundaries(rng, static_cast<std::size_t>(rng.uniform(1, 12)));
        const std::size_t m = dirs.size();
        CoverageSegmentTree tree(dirs);
        std::vector<std::pair<std::size_t, std::size_t>> stored;
        for (int op = 0; op < 60; ++op) {
            if (!stored.empty() && rng.uniform(0, 2) == 0) {
                const auto k = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(stored.size()) - 1));
                tree.delete_arc(stored[k].first, stored[k].second);
                stored.erase(stored.begin() + static_cast<long>(k));
            } else {
                const auto from = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(m) - 1));
                auto to = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(m) - 1));
                if (to == from) {
                    to = (from + 1) % m;
                }
                tree.insert_arc(from, to);
                stored.emplace_back(from, to);
            }
            const auto cov = naive_coverage(m, stored);
            ASSERT_EQ(tree.leaf_coverage(), cov);
            const int lo = *std::min_element(cov.begin(), cov.end());
            ASSERT_EQ(tree.min_coverage(), lo);
            ASSERT_EQ(tree.argmin_leaf(), static_cast<std::size_t>(std::find(cov.begin(), cov.end(), lo) - cov.begin()));
            ASSERT_TRUE(tree.check_invariant());
        }
    }
}

TEST(CoverageTree, InsertDeleteInverse) {
    Rng rng(22);
    for (int trial = 0; trial < 100; ++trial) {
        const auto dirs = random_boundaries(rng, 8);
        const std::size_t m = dirs.size();
        CoverageSegmentTree tree(dirs);
        std::vector<int> before_cover, before_min;
        for (std::size_t i = 1; i < tree.node_slots(); ++i) {
            before_cover.push_back(tree.cover_count(i));
            before_min.push_back(tree.min_below(i));
        }
        std::vector<std::pair<std::size_t, std::size_t>> arcs;
        for (int k = 0; k < 10; ++k) {
            const auto from = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(m) - 1));
            arcs.emplace_back(from, (from + 1 + static_cast<std::size_t>(rng.uniform(0, static_cast<long>(m) - 2))) % m);
            tree.insert_arc(arcs.back().first, arcs.back().second);
        }
        std::shuffle(arcs.begin(), arcs.end(), rng.engine());
        for (auto [f, t] : arcs) {
            tree.delete_arc(f, t);
        }
        for (std::size_t i = 1; i < tree.node_slots(); ++i) {
            EXPECT_EQ(tree.cover_count(i), before_cover[i - 1]);
            EXPECT_EQ(tree.min_below(i), before_min[i - 1]);
        }
    }
}

TEST(CoverageTree, LeafMidpointsAreInterior) {
    Rng rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        const auto dirs = random_boundaries(rng, 6);
        CoverageSegmentTree tree(dirs);
        for (std::size_t j = 0; j < tree.leaf_count(); ++j) {
            const auto mid = tree.leaf_midpoint(j);
            const auto& a = dirs[j];
            const auto& b = dirs[(j + 1) % dirs.size()];
            // Strictly inside the ccw arc a -> b, which is under a half-turn.
            EXPECT_GT(cross_sign(a, mid), 0);
            EXPECT_GT(cross_sign(mid, b), 0);
        }
    }
}
