#include "flatdepth/coverage_tree.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace flatdepth {

namespace {

constexpr int kPadding = 1 << 29;

} // namespace

CoverageSegmentTree::CoverageSegmentTree(std::vector<CircleVector> boundaries)
    : boundaries_(std::move(boundaries)), leaves_(std::max<std::size_t>(boundaries_.size(), 1)) {
    for (std::size_t i = 1; i < boundaries_.size(); ++i) {
        if (circular_compare(boundaries_[i - 1], boundaries_[i]) >= 0) {
            throw std::invalid_argument("tree boundaries must be strictly circularly sorted");
        }
    }
    first_leaf_ = 1;
    while (first_leaf_ < leaves_) {
        first_leaf_ <<= 1;
    }
    nodes_.assign(2 * first_leaf_, Node{});
    for (std::size_t j = leaves_; j < first_leaf_; ++j) {
        nodes_[first_leaf_ + j].min_below = kPadding;
    }
    for (std::size_t node = first_leaf_ - 1; node >= 1; --node) {
        pull(node);
    }
}

int CoverageSegmentTree::leaf_floor(std::size_t node) const {
    return node - first_leaf_ < leaves_ ? 0 : kPadding;
}

void CoverageSegmentTree::pull(std::size_t node) {
    nodes_[node].min_below = nodes_[node].cover + std::min(nodes_[2 * node].min_below, nodes_[2 * node + 1].min_below);
}

void CoverageSegmentTree::update_arc(std::size_t from, std::size_t to, int delta) {
    const std::size_t m = boundaries_.size();
    if (from >= m || to >= m || from == to) {
        throw std::invalid_argument("arc endpoints must be two distinct boundary indices");
    }
#ifndef NDEBUG
    const std::uint64_t key = static_cast<std::uint64_t>(from) * m + to;
    auto& stored = stored_[key];
    if (delta < 0 && stored == 0) {
        stored_.erase(key);
        throw std::logic_error("deleting an arc that is not stored");
    }
    stored += delta;
    if (stored == 0) {
        stored_.erase(key);
    }
#endif
    if (!update_ranges(from, to, delta)) {
        update_ranges(from, to, -delta);
        throw std::logic_error("deleting an arc that is not stored");
    }
    assert(check_invariant());
}

bool CoverageSegmentTree::update_ranges(std::size_t from, std::size_t to, int delta) {
    const std::size_t m = boundaries_.size();
    if (from < to) {
        return update(from, to - 1, delta);
    }
    bool ok = update(from, m - 1, delta);
    if (to > 0) {
        ok = update(0, to - 1, delta) && ok;
    }
    return ok;
}

bool CoverageSegmentTree::update(std::size_t l, std::size_t r, int delta) {
    bool ok = true;
    auto apply = [&](std::size_t node) {
        nodes_[node].cover += delta;
        nodes_[node].min_below += delta;
        ok = ok && nodes_[node].cover >= 0;
    };
    const std::size_t left_leaf = first_leaf_ + l;
    const std::size_t right_leaf = first_leaf_ + r;
    for (std::size_t lo = left_leaf, hi = right_leaf + 1; lo < hi; lo >>= 1, hi >>= 1) {
        if (lo & 1) {
            apply(lo++);
        }
        if (hi & 1) {
            apply(--hi);
        }
    }
    // Every canonical node hangs off one of the two boundary leaf paths.
    for (std::size_t node = left_leaf >> 1; node >= 1; node >>= 1) {
        pull(node);
    }
    for (std::size_t node = right_leaf >> 1; node >= 1; node >>= 1) {
        pull(node);
    }
    return ok;
}

std::size_t CoverageSegmentTree::argmin_leaf() const {
    std::size_t node = 1;
    while (node < first_leaf_) {
        node = nodes_[2 * node].min_below <= nodes_[2 * node + 1].min_below ? 2 * node : 2 * node + 1;
    }
    return node - first_leaf_;
}

CircleVector CoverageSegmentTree::leaf_midpoint(std::size_t leaf) const {
    if (boundaries_.empty()) {
        return CircleVector(1, 0);
    }
    const std::size_t m = boundaries_.size();
    return arc_midpoint(boundaries_[leaf], boundaries_[(leaf + 1) % m]);
}

std::vector<int> CoverageSegmentTree::leaf_coverage() const {
    std::vector<int> out(leaves_, 0);
    for (std::size_t j = 0; j < leaves_; ++j) {
        for (std::size_t node = first_leaf_ + j; node >= 1; node >>= 1) {
            out[j] += nodes_[node].cover;
        }
    }
    return out;
}

bool CoverageSegmentTree::check_invariant() const {
    bool ok = true;
    for (std::size_t node = 1; node < nodes_.size(); ++node) {
        const Node& here = nodes_[node];
        const int below = node < first_leaf_ ? std::min(nodes_[2 * node].min_below, nodes_[2 * node + 1].min_below)
                                             : leaf_floor(node);
        ok = ok && here.cover >= 0 && here.min_below == here.cover + below;
        ok = ok && (node < first_leaf_ + leaves_ || here.cover == 0);
    }
    const auto cov = leaf_coverage();
    return ok && nodes_[1].min_below == *std::min_element(cov.begin(), cov.end());
}

} // namespace flatdepth
