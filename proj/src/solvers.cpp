#include "flatdepth/solvers.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "flatdepth/coverage_tree.hpp"

namespace flatdepth {

namespace {

// Boundary record with machine-word coordinates, for sorting without
// touching GMP limbs.
struct SmallDir {
    std::int64_t a;
    std::int64_t b;
    std::size_t rec;
};

bool upper(const SmallDir& u) { return u.b > 0 || (u.b == 0 && u.a > 0); }

bool small_less(const SmallDir& u, const SmallDir& v) {
    const bool uu = upper(u), vu = upper(v);
    if (uu != vu) {
        return uu;
    }
    return static_cast<__int128>(u.a) * v.b > static_cast<__int128>(v.a) * u.b;
}

bool fits_small(const BigInt& x) { return mpz_sizeinbase(x.get_mpz_t(), 2) < 63; }

} // namespace

FactorBoundaries factor_boundaries(const CoveringInstance& inst, std::size_t factor) {
    const auto& active = inst.active();
    const std::size_t n = active.size();
    // Record 2i is the start of functional i's positive arc, 2i+1 its end.
    // Both are (b, -a) and (-b, a) for the coprime restriction (a, b).
    std::vector<std::size_t> order(2 * n);
    // fresh[k]: sorted record k is a new ray rather than a repeat of k - 1.
    std::vector<char> fresh(2 * n, 1);
    const bool all_small = std::all_of(active.begin(), active.end(), [&](const RestrictedFunctional& h) {
        return fits_small(h.factor[factor].int_a) && fits_small(h.factor[factor].int_b);
    });
    auto record = [&](std::size_t rec) {
        const auto& r = active[rec / 2].factor[factor];
        return rec % 2 == 0 ? positive_arc_start(r.int_a, r.int_b) : positive_arc_end(r.int_a, r.int_b);
    };
    if (all_small) {
        std::vector<SmallDir> keys(2 * n);
        for (std::size_t i = 0; i < n; ++i) {
            const auto& r = active[i].factor[factor];
            const std::int64_t a = r.int_a.get_si(), b = r.int_b.get_si();
            keys[2 * i] = {b, -a, 2 * i};
            keys[2 * i + 1] = {-b, a, 2 * i + 1};
        }
        std::sort(keys.begin(), keys.end(), small_less);
        for (std::size_t i = 0; i < keys.size(); ++i) {
            order[i] = keys[i].rec;
            // Coprime pairs: equal rays have equal coordinates.
            fresh[i] = i == 0 || keys[i].a != keys[i - 1].a || keys[i].b != keys[i - 1].b;
        }
    } else {
        std::vector<CircleVector> raw;
        raw.reserve(2 * n);
        for (std::size_t rec = 0; rec < 2 * n; ++rec) {
            raw.push_back(record(rec));
        }
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(),
                  [&](std::size_t x, std::size_t y) { return circular_compare(raw[x], raw[y]) < 0; });
        for (std::size_t i = 1; i < order.size(); ++i) {
            fresh[i] = !(raw[order[i]] == raw[order[i - 1]]);
        }
    }

    FactorBoundaries out;
    out.pos_start.resize(n);
    out.pos_end.resize(n);
    for (std::size_t k = 0; k < order.size(); ++k) {
        const std::size_t rec = order[k];
        if (fresh[k]) {
            out.dirs.push_back(record(rec));
        }
        const std::size_t idx = out.dirs.size() - 1;
        (rec % 2 == 0 ? out.pos_start : out.pos_end)[rec / 2] = idx;
    }
    return out;
}

namespace {

void require_circle(const CoveringInstance& inst, std::size_t f, const char* who) {
    if (inst.factor(f).hdim() != 2) {
        throw std::invalid_argument(std::string(who) + ": factor " + std::to_string(f + 1) + " is not a line");
    }
}

} // namespace

DepthResult solve_torus(const CoveringInstance& inst, const SweepOptions& opts) {
    require_circle(inst, 0, "solve_torus");
    require_circle(inst, 1, "solve_torus");
    const auto& active = inst.active();
    const std::size_t n = active.size();
    if (n == 0) {
        return make_result(inst, 0, CircleVector(1, 0), CircleVector(1, 0), "torus");
    }

    const FactorBoundaries sweep = factor_boundaries(inst, 0);
    const FactorBoundaries cross = factor_boundaries(inst, 1);
    const std::size_t p = sweep.dirs.size();

    // events[i] lists the functionals whose first-factor zero is dirs[i].
    std::vector<std::size_t> event_offset(p + 1, 0);
    for (std::size_t h = 0; h < n; ++h) {
        ++event_offset[sweep.pos_start[h] + 1];
        ++event_offset[sweep.pos_end[h] + 1];
    }
    std::partial_sum(event_offset.begin(), event_offset.end(), event_offset.begin());
    std::vector<std::size_t> events(2 * n);
    {
        auto fill = event_offset;
        for (std::size_t h = 0; h < n; ++h) {
            events[fill[sweep.pos_start[h]]++] = h;
            events[fill[sweep.pos_end[h]]++] = h;
        }
    }

    auto gap_midpoint = [&](std::size_t g) { return arc_midpoint(sweep.dirs[g], sweep.dirs[(g + 1) % p]); };

    std::size_t gap = opts.start_gap < p ? opts.start_gap : p - 1;
    const CircleVector start = gap_midpoint(gap);

    // side[h] is the sign of h at the current first-factor point; the arc of
    // second-factor points crossing h is where h has the opposite sign.
    std::vector<int> side(n);
    CoverageSegmentTree tree(cross.dirs);
    auto arc_of = [&](std::size_t h) {
        return side[h] > 0 ? std::pair{cross.pos_end[h], cross.pos_start[h]}
                           : std::pair{cross.pos_start[h], cross.pos_end[h]};
    };
    for (std::size_t h = 0; h < n; ++h) {
        side[h] = active[h].sign_at(0, start);
        const auto [from, to] = arc_of(h);
        tree.insert_arc(from, to);
    }

    int best = tree.min_coverage();
    std::size_t best_gap = gap;
    std::size_t best_leaf = tree.argmin_leaf();

    for (std::size_t step = 0; step + 1 < p; ++step) {
        // Crossing dirs[e] moves to the neighbouring gap.
        const std::size_t e = opts.reverse ? gap : (gap + 1) % p;
        gap = opts.reverse ? (gap + p - 1) % p : e;
        for (std::size_t k = event_offset[e]; k < event_offset[e + 1]; ++k) {
            const std::size_t h = events[k];
            const auto [from, to] = arc_of(h);
            tree.delete_arc(from, to);
            side[h] = -side[h];
            const auto [nfrom, nto] = arc_of(h);
            tree.insert_arc(nfrom, nto);
        }
        if (opts.check_invariants && !tree.check_invariant()) {
            throw std::logic_error("coverage tree invariant violated");
        }
        if (tree.min_coverage() < best) {
            best = tree.min_coverage();
            best_gap = gap;
            best_leaf = tree.argmin_leaf();
        }
    }

    return make_result(inst, static_cast<std::size_t>(best), gap_midpoint(best_gap), tree.leaf_midpoint(best_leaf),
                       "torus");
}

DepthResult solve_circle(const CoveringInstance& inst) {
    const std::size_t fixed = inst.factor(0).hdim() == 1 ? 0 : 1;
    const std::size_t circle = 1 - fixed;
    if (inst.factor(fixed).hdim() != 1) {
        throw std::invalid_argument("solve_circle: neither factor is a point");
    }
    require_circle(inst, circle, "solve_circle");

    const CircleVector here(1, 0);
    auto finish = [&](std::size_t strict, const CircleVector& on_circle) {
        return fixed == 0 ? make_result(inst, strict, here, on_circle, "circle")
                          : make_result(inst, strict, on_circle, here, "circle");
    };
    const auto& active = inst.active();
    if (active.empty()) {
        return finish(0, CircleVector(1, 0));
    }

    const FactorBoundaries b = factor_boundaries(inst, circle);
    const std::size_t m = b.dirs.size();
    std::vector<long> diff(m + 1, 0);
    auto add = [&](std::size_t from, std::size_t to) {
        if (from < to) {
            ++diff[from];
            --diff[to];
        } else {
            ++diff[from];
            --diff[m];
            ++diff[0];
            --diff[to];
        }
    };
    for (std::size_t h = 0; h < active.size(); ++h) {
        if (active[h].sign_at(fixed, here) > 0) {
            add(b.pos_end[h], b.pos_start[h]);
        } else {
            add(b.pos_start[h], b.pos_end[h]);
        }
    }
    long run = 0;
    long best = -1;
    std::size_t best_leaf = 0;
    for (std::size_t leaf = 0; leaf < m; ++leaf) {
        run += diff[leaf];
        if (best < 0 || run < best) {
            best = run;
            best_leaf = leaf;
        }
    }
    return finish(static_cast<std::size_t>(best), arc_midpoint(b.dirs[best_leaf], b.dirs[(best_leaf + 1) % m]));
}

DepthResult solve_point_pair(const CoveringInstance& inst) {
    if (inst.factor(0).hdim() != 1 || inst.factor(1).hdim() != 1) {
        throw std::invalid_argument("solve_point_pair: both factors must be points");
    }
    const CircleVector plus(1, 0);
    const CircleVector minus(-1, 0);
    const std::size_t same = strict_crossing_count(inst, plus, plus);
    const std::size_t flipped = strict_crossing_count(inst, plus, minus);
    return same <= flipped ? make_result(inst, same, plus, plus, "point-pair")
                           : make_result(inst, flipped, plus, minus, "point-pair");
}

DepthResult solve(const CoveringInstance& inst) {
    const std::size_t h1 = inst.factor(0).hdim();
    const std::size_t h2 = inst.factor(1).hdim();
    if (h1 == 2 && h2 == 2) {
        return solve_torus(inst);
    }
    if (h1 == 1 && h2 == 1) {
        return solve_point_pair(inst);
    }
    return solve_circle(inst);
}

} // namespace flatdepth
