#include "flatdepth/oracle.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <stdexcept>

#include "flatdepth/dual.hpp"

namespace flatdepth::oracle {

std::vector<CircleVector> cell_midpoints(const std::vector<CircleVector>& boundaries) {
    if (boundaries.empty()) {
        return {CircleVector(1, 0)};
    }
    std::vector<CircleVector> out;
    out.reserve(boundaries.size());
    for (std::size_t i = 0; i < boundaries.size(); ++i) {
        out.push_back(arc_midpoint(boundaries[i], boundaries[(i + 1) % boundaries.size()]));
    }
    return out;
}

std::vector<CircleVector> factor_cells(const CoveringInstance& inst, std::size_t factor) {
    if (inst.factor(factor).hdim() == 1) {
        return {CircleVector(1, 0), CircleVector(-1, 0)};
    }
    std::vector<CircleVector> zeros;
    for (const auto& h : inst.active()) {
        const auto& r = h.factor[factor];
        const CircleVector z(-r.int_b, r.int_a);
        zeros.push_back(z);
        zeros.push_back(z.antipode());
    }
    sort_unique_circular(zeros);
    return cell_midpoints(zeros);
}

DepthResult brute_force_min(const CoveringInstance& inst) {
    const auto cells1 = factor_cells(inst, 0);
    const auto cells2 = factor_cells(inst, 1);
    std::size_t best = std::numeric_limits<std::size_t>::max();
    std::size_t bi = 0;
    std::size_t bj = 0;
    for (std::size_t i = 0; i < cells1.size(); ++i) {
        for (std::size_t j = 0; j < cells2.size(); ++j) {
            const std::size_t c = strict_crossing_count(inst, cells1[i], cells2[j]);
            if (c < best) {
                best = c;
                bi = i;
                bj = j;
            }
        }
    }
    return make_result(inst, best, cells1[bi], cells2[bj], "brute-force");
}

std::size_t tukey2_primal(const std::vector<Point2>& points, const Point2& q) {
    if (q.size() != 2) {
        throw std::invalid_argument("tukey2_primal: query must be a point of R^2");
    }
    std::size_t coincident = 0;
    std::vector<Point2> offsets;
    for (const auto& p : points) {
        if (p.size() != 2) {
            throw std::invalid_argument("tukey2_primal: data points must be in R^2");
        }
        if (p == q) {
            ++coincident;
        } else {
            offsets.push_back({p[0] - q[0], p[1] - q[1]});
        }
    }
    // Candidate inward normals n: sign(n . (p - q)) changes only where n is
    // perpendicular to some offset, so one normal per open arc suffices.
    std::vector<CircleVector> perpendiculars;
    for (const auto& d : offsets) {
        const CircleVector perp(-d[1], d[0]);
        perpendiculars.push_back(perp);
        perpendiculars.push_back(perp.antipode());
    }
    sort_unique_circular(perpendiculars);
    std::size_t best = offsets.size();
    for (const auto& n : cell_midpoints(perpendiculars)) {
        const Rat nx(n.alpha());
        const Rat ny(n.beta());
        std::size_t inside = 0;
        for (const auto& d : offsets) {
            if ((nx * d[0] + ny * d[1]).sign() > 0) {
                ++inside;
            }
        }
        best = std::min(best, inside);
    }
    return best + coincident;
}

namespace {

bool in_wedge(int s1, int s2, WedgeMode mode) {
    if (s1 * s2 < 0) {
        return true;
    }
    return mode == WedgeMode::closed && (s1 == 0 || s2 == 0);
}

} // namespace

std::size_t double_wedge_count(const std::vector<std::vector<Rat>>& points, const ArrangementFunctional& g1,
                               const ArrangementFunctional& g2, WedgeMode mode) {
    std::size_t count = 0;
    for (const auto& p : points) {
        const HomogeneousPoint lifted = lift_affine(p);
        if (in_wedge(sign_of(g1, lifted), sign_of(g2, lifted), mode)) {
            ++count;
        }
    }
    return count;
}

std::size_t segment_crossings(const std::vector<ArrangementFunctional>& hyperplanes, const HomogeneousPoint& u1,
                              const HomogeneousPoint& u2, WedgeMode mode) {
    std::size_t count = 0;
    for (const auto& h : hyperplanes) {
        if (in_wedge(sign_of(h, u1), sign_of(h, u2), mode)) {
            ++count;
        }
    }
    return count;
}

namespace {

// Line through p, q parametrized along coordinate t with value coordinate v:
// v = p_v + slope * (x_t - p_t). Requires p_t != q_t.
struct Graph {
    std::size_t t;
    std::size_t v;
    Rat slope;
    const Point2& p;

    Rat residual(const Point2& r) const { return r[v] - (p[v] + slope * (r[t] - p[t])); }
};

Point2 moved(const Point2& p, std::size_t axis, const Rat& by) {
    Point2 out = p;
    out[axis] += by;
    return out;
}

} // namespace

std::vector<Line2> candidate_lines_2d(const std::vector<Point2>& points) {
    for (const auto& p : points) {
        if (p.size() != 2) {
            throw std::invalid_argument("candidate_lines_2d: points must be in R^2");
        }
    }
    std::vector<Point2> distinct;
    for (const auto& p : points) {
        if (std::find(distinct.begin(), distinct.end(), p) == distinct.end()) {
            distinct.push_back(p);
        }
    }
    std::vector<Line2> out;
    for (std::size_t i = 0; i < distinct.size(); ++i) {
        for (std::size_t j = i + 1; j < distinct.size(); ++j) {
            const Point2& p = distinct[i];
            const Point2& q = distinct[j];
            const bool vertical = p[0] == q[0];
            const std::size_t t = vertical ? 1 : 0;
            const std::size_t v = vertical ? 0 : 1;
            const Rat span = q[t] - p[t];
            const Graph g{t, v, (q[v] - p[v]) / span, p};
            const Rat mid = (p[t] + q[t]) / Rat(2);

            // Shifting both points by d along v moves every residual by d;
            // tilting by (-d, +d) moves residual r by d * 2 (r_t - mid) / span.
            std::optional<Rat> delta;
            for (const auto& r : points) {
                const Rat res = abs(g.residual(r));
                if (res.is_zero()) {
                    continue;
                }
                const Rat lever = Rat(1) + abs(Rat(2) * (r[t] - mid) / span);
                const Rat bound = res / (Rat(4) * lever);
                if (!delta || bound < *delta) {
                    delta = bound;
                }
            }
            const Rat d = delta.value_or(Rat(1));

            out.push_back({p, q});
            out.push_back({moved(p, v, d), moved(q, v, d)});
            out.push_back({moved(p, v, -d), moved(q, v, -d)});
            out.push_back({moved(p, v, -d), moved(q, v, d)});
            out.push_back({moved(p, v, d), moved(q, v, -d)});
        }
    }
    if (out.empty()) {
        throw std::invalid_argument("candidate_lines_2d: need at least two distinct points");
    }
    return out;
}

} // namespace flatdepth::oracle
