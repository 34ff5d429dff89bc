#pragma once

#include <cstddef>
#include <vector>

#include "flatdepth/instance.hpp"

namespace flatdepth {

// Sorted distinct zeros of the active restrictions on one circle factor, and
// for each active functional the indices of its positive open semicircle's
// endpoints (counterclockwise from pos_start to pos_end).
struct FactorBoundaries {
    std::vector<CircleVector> dirs;
    std::vector<std::size_t> pos_start;
    std::vector<std::size_t> pos_end;
};

FactorBoundaries factor_boundaries(const CoveringInstance& inst, std::size_t factor);

// Gap g of a sorted boundary list is the open arc from dirs[g] to dirs[g+1].
struct SweepOptions {
    bool reverse = false;
    // Gap the sweep starts in; defaults to the last gap, which holds the cut.
    std::size_t start_gap = static_cast<std::size_t>(-1);
    // Recompute the whole tree after every event and throw std::logic_error
    // on disagreement. O(n) per event.
    bool check_invariants = false;
};

// Minimum coverage on S^1 x S^1: sweeps the first circle, keeping the arcs on
// the second circle in a CoverageSegmentTree. O(n log n) tree operations.
DepthResult solve_torus(const CoveringInstance& inst, const SweepOptions& opts = {});

// S^0 x S^1 in either factor order: one walk around the circle.
DepthResult solve_circle(const CoveringInstance& inst);

// S^0 x S^0: the two segment classes (u1, u2) and (u1, -u2).
DepthResult solve_point_pair(const CoveringInstance& inst);

// Picks the solver from the factor dimensions.
DepthResult solve(const CoveringInstance& inst);

} // namespace flatdepth
