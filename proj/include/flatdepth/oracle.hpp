#pragma once

// Brute-force ground truth. Nothing here goes through the sweep or the
// segment tree.

#include <cstddef>
#include <vector>

#include "flatdepth/instance.hpp"

namespace flatdepth::oracle {

// One interior point per open arc of a sorted, deduplicated, antipode-closed
// boundary list; {(1, 0)} when empty.
std::vector<CircleVector> cell_midpoints(const std::vector<CircleVector>& boundaries);

// Every open cell of one factor: arc midpoints of a circle, or {+-1} for S^0.
std::vector<CircleVector> factor_cells(const CoveringInstance& inst, std::size_t factor);

// Evaluates strict_crossing_count at every pair of open cells. O(n^3).
DepthResult brute_force_min(const CoveringInstance& inst);

using Point2 = std::vector<Rat>;

// Closed-halfplane Tukey depth of q computed in the primal plane.
std::size_t tukey2_primal(const std::vector<Point2>& points, const Point2& q);

enum class WedgeMode { closed, strict };

// Points in the double wedge bounded by g1 and g2, each point p tested via
// sign(g_i . (p, 1)). Strict: opposite nonzero signs; closed: strict or on
// either boundary.
std::size_t double_wedge_count(const std::vector<std::vector<Rat>>& points, const ArrangementFunctional& g1,
                               const ArrangementFunctional& g2, WedgeMode mode);

// Same count for raw functionals evaluated at two homogeneous points.
std::size_t segment_crossings(const std::vector<ArrangementFunctional>& hyperplanes, const HomogeneousPoint& u1,
                              const HomogeneousPoint& u2, WedgeMode mode);

// A line through two distinct points.
struct Line2 {
    Point2 p;
    Point2 q;
};

// Lines through every pair of distinct points plus four nearby copies each:
// shifted to either side and tilted both ways about the pair's midpoint. The
// shift is smaller than a quarter of every nonzero residual, so no copy
// jumps over a data point. Throws std::invalid_argument with fewer than two
// distinct points.
std::vector<Line2> candidate_lines_2d(const std::vector<Point2>& points);

} // namespace flatdepth::oracle
