#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "flatdepth/circle.hpp"

namespace flatdepth {

// Segment tree over the open elementary arcs of a circle cut by a sorted,
// antipode-closed set of boundary directions w_0 < ... < w_{m-1}.
//
// Leaf j is the open arc from w_j to w_{j+1} (indices mod m); the circle is
// cut inside leaf m-1, so every stored arc maps to at most two leaf ranges.
// With no boundaries there is a single leaf, the whole circle.
//
// The tree is a perfect binary heap: node 1 is the root, leaf j is node
// P + j for P the smallest power of two >= leaf_count(). Each node keeps
// cover_count, the number of stored arcs whose canonical decomposition uses
// the node, and min_below = cover_count + min over the children, the fewest
// stored arcs over any leaf of the subtree. Padding leaves past leaf_count()
// hold a large sentinel min_below. The root's min_below is the minimum
// coverage over the circle.
class CoverageSegmentTree {
public:
    explicit CoverageSegmentTree(std::vector<CircleVector> boundaries);

    std::size_t leaf_count() const { return leaves_; }
    const std::vector<CircleVector>& boundaries() const { return boundaries_; }

    // Arcs are named by boundary indices: the open counterclockwise arc from
    // w_from to w_to, covering leaves from, from+1, ..., to-1 (mod m).
    void insert_arc(std::size_t from, std::size_t to) { update_arc(from, to, +1); }
    // Throws std::logic_error, leaving the tree unchanged, when the arc is
    // not stored: always if some cover count would go negative, and by an
    // exact multiset check in debug builds.
    void delete_arc(std::size_t from, std::size_t to) { update_arc(from, to, -1); }

    int min_coverage() const { return nodes_[1].min_below; }
    // Leftmost leaf attaining min_coverage().
    std::size_t argmin_leaf() const;
    CircleVector leaf_midpoint(std::size_t leaf) const;

    // Total node count, nodes are 1-based heap indices.
    std::size_t node_slots() const { return nodes_.size(); }
    int cover_count(std::size_t node) const { return nodes_[node].cover; }
    int min_below(std::size_t node) const { return nodes_[node].min_below; }

    // Coverage of every leaf by summing cover_count along root paths.
    std::vector<int> leaf_coverage() const;
    // Recomputes min_below everywhere from cover_count and compares.
    bool check_invariant() const;

private:
    void update_arc(std::size_t from, std::size_t to, int delta);
    // Adds delta on leaves l..r; returns false if some cover count went negative.
    bool update(std::size_t l, std::size_t r, int delta);
    bool update_ranges(std::size_t from, std::size_t to, int delta);
    void pull(std::size_t node);
    int leaf_floor(std::size_t node) const;

    std::vector<CircleVector> boundaries_;
    std::size_t leaves_;
    std::size_t first_leaf_;
    struct Node {
        int cover = 0;
        int min_below = 0;
    };
    std::vector<Node> nodes_;
    // Debug builds only: multiplicity of each stored arc, keyed by from * m + to.
    std::unordered_map<std::uint64_t, int> stored_;
};

} // namespace flatdepth
