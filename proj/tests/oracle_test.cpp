#include <gtest/gtest.h>

#include <algorithm>

#include "flatdepth/oracle.hpp"
#include "test_util.hpp"

using namespace flatdepth;
using flatdepth::testing::Rng;
using oracle::Point2;

namespace {

Point2 pt(long x, long y) { return {Rat(x), Rat(y)}; }

Point2 pt(Rat x, Rat y) { return {std::move(x), std::move(y)}; }

// Closed-halfplane depth by trying every direction through q and a data point.
std::size_t tukey_by_directions(const std::vector<Point2>& pts, const Point2& q) {
    std::vector<CircleVector> dirs;
    for (const auto& p : pts) {
        const Rat dx = p[0] - q[0], dy = p[1] - q[1];
        if (!dx.is_zero() || !dy.is_zero()) {
            const CircleVector v(dx, dy);
            dirs.push_back(v.rotated90());
            dirs.push_back(v.rotated90().antipode());
        }
    }
    sort_unique_circular(dirs);
    std::size_t best = pts.size();
    // A minimizing closed halfplane has a normal at a cell midpoint or on a
    // boundary; check both.
    auto cand = oracle::cell_midpoints(dirs);
    cand.insert(cand.end(), dirs.begin(), dirs.end());
    for (const auto& n : cand) {
        std::size_t c = 0;
        for (const auto& p : pts) {
            const Rat s = Rat(n.alpha()) * (p[0] - q[0]) + Rat(n.beta()) * (p[1] - q[1]);
            c += s.sign() >= 0 ? 1 : 0;
        }
        best = std::min(best, c);
    }
    return best;
}

} // namespace

TEST(CellMidpoints, Examples) {
    EXPECT_EQ(oracle::cell_midpoints({}), (std::vector<CircleVector>{CircleVector(1, 0)}));
    const auto m = oracle::cell_midpoints({CircleVector(1, 0), CircleVector(-1, 0)});
    EXPECT_EQ(m, (std::vector<CircleVector>{CircleVector(0, 1), CircleVector(0, -1)}));
}

TEST(Tukey2Primal, Examples) {
    const std::vector<Point2> square = {pt(0, 0), pt(2, 0), pt(0, 2), pt(2, 2)};
    EXPECT_EQ(oracle::tukey2_primal(square, pt(1, 1)), 2u);
    const std::vector<Point2> tri = {pt(0, 0), pt(1, 0), pt(0, 1)};
    EXPECT_EQ(oracle::tukey2_primal(tri, pt(Rat(BigInt(1), BigInt(3)), Rat(BigInt(1), BigInt(3)))), 1u);
    EXPECT_EQ(oracle::tukey2_primal(tri, pt(5, 5)), 0u);
    // A data point at q is in every closed halfplane.
    EXPECT_EQ(oracle::tukey2_primal({pt(3, 4)}, pt(3, 4)), 1u);
    EXPECT_EQ(oracle::tukey2_primal({}, pt(0, 0)), 0u);
    EXPECT_THROW(oracle::tukey2_primal(tri, {Rat(1)}), std::invalid_argument);
}

TEST(Tukey2Primal, AgreesWithDirectionScan) {
    Rng rng(41);
    for (int trial = 0; trial < 300; ++trial) {
        auto pts = rng.points(static_cast<std::size_t>(rng.uniform(1, 20)), 2, trial % 2 ? 3 : 30);
        const Point2 q = trial % 5 == 0 ? pts[0] : rng.vec(2, 5);
        ASSERT_EQ(oracle::tukey2_primal(pts, q), tukey_by_directions(pts, q));
    }
}

TEST(DoubleWedge, ClosedVersusStrict) {
    // g1: x > 0, g2: y > 0. (1,-1) is strictly inside, (0,5) on g1.
    const ArrangementFunctional g1({Rat(1), Rat(0), Rat(0)});
    const ArrangementFunctional g2({Rat(0), Rat(1), Rat(0)});
    const std::vector<std::vector<Rat>> pts = {pt(1, -1), pt(-1, 1), pt(1, 1), pt(0, 5), pt(0, 0)};
    EXPECT_EQ(oracle::double_wedge_count(pts, g1, g2, oracle::WedgeMode::strict), 2u);
    EXPECT_EQ(oracle::double_wedge_count(pts, g1, g2, oracle::WedgeMode::closed), 4u);
}

TEST(SegmentCrossings, Basic) {
    const std::vector<ArrangementFunctional> hs = {ArrangementFunctional({Rat(1), Rat(0), Rat(0)}),
                                                   ArrangementFunctional({Rat(0), Rat(1), Rat(0)})};
    const HomogeneousPoint a({Rat(1), Rat(1), Rat(1)});
    const HomogeneousPoint b({Rat(-1), Rat(0), Rat(1)});
    EXPECT_EQ(oracle::segment_crossings(hs, a, b, oracle::WedgeMode::strict), 1u);
    EXPECT_EQ(oracle::segment_crossings(hs, a, b, oracle::WedgeMode::closed), 2u);
}

TEST(BruteForce, LowerBoundsEveryEvaluation) {
    Rng rng(42);
    for (int trial = 0; trial < 100; ++trial) {
        const auto f1 = flatdepth::testing::random_line(rng, 3, 6);
        const auto f2 = flatdepth::testing::random_line(rng, 3, 6);
        auto built = build_instance(flatdepth::testing::random_functionals(rng, 10, 3, 6), f1, f2);
        auto* inst = std::get_if<CoveringInstance>(&built);
        if (!inst) {
            continue;
        }
        const auto r = oracle::brute_force_min(*inst);
        EXPECT_EQ(r.solver, "brute-force");
        EXPECT_EQ(strict_crossing_count(*inst, *r.witness.c1, *r.witness.c2), r.strict_min);
        for (int k = 0; k < 20; ++k) {
            EXPECT_LE(r.strict_min, strict_crossing_count(*inst, rng.circle(9), rng.circle(9)));
        }
    }
}

TEST(BruteForce, PermutationInvariant) {
    Rng rng(43);
    for (int trial = 0; trial < 60; ++trial) {
        const auto f1 = flatdepth::testing::random_line(rng, 3, 6);
        const auto f2 = flatdepth::testing::random_line(rng, 3, 6);
        auto hs = flatdepth::testing::random_functionals(rng, 9, 3, 6);
        auto built = build_instance(hs, f1, f2);
        auto* inst = std::get_if<CoveringInstance>(&built);
        if (!inst) {
            continue;
        }
        const auto r = oracle::brute_force_min(*inst);
        EXPECT_LE(r.strict_min, r.n_active);
        std::shuffle(hs.begin(), hs.end(), rng.engine());
        auto shuffled = build_instance(hs, f1, f2);
        EXPECT_EQ(oracle::brute_force_min(std::get<CoveringInstance>(shuffled)).distance, r.distance);
    }
}

TEST(CandidateLines, CountAndSeparation) {
    const std::vector<Point2> two = {pt(0, 0), pt(1, 1)};
    EXPECT_EQ(oracle::candidate_lines_2d(two).size(), 5u);
    EXPECT_THROW(oracle::candidate_lines_2d({pt(1, 1), pt(1, 1)}), std::invalid_argument);
    EXPECT_THROW(oracle::candidate_lines_2d({pt(1, 1)}), std::invalid_argument);
    EXPECT_EQ(oracle::candidate_lines_2d({pt(0, 0), pt(0, 0), pt(0, 3)}).size(), 5u);

    Rng rng(43);
    for (int trial = 0; trial < 50; ++trial) {
        const auto pts = rng.points(8, 2, 10);
        std::vector<Point2> distinct;
        for (const auto& p : pts) {
            if (std::find(distinct.begin(), distinct.end(), p) == distinct.end()) {
                distinct.push_back(p);
            }
        }
        if (distinct.size() < 2) {
            continue;
        }
        const auto lines = oracle::candidate_lines_2d(pts);
        EXPECT_EQ(lines.size(), 5 * distinct.size() * (distinct.size() - 1) / 2);
        for (const auto& l : lines) {
            EXPECT_NE(l.p, l.q);
        }
    }
}
