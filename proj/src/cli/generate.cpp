#include "flatdepth/cli/generate.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "flatdepth/dual.hpp"

namespace flatdepth::cli {

std::int64_t InstanceRng::uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    if (range == 0) {
        return static_cast<std::int64_t>(engine_());
    }
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t x = engine_();
    while (x >= limit) {
        x = engine_();
    }
    return lo + static_cast<std::int64_t>(x % range);
}

RatVector InstanceRng::integer_vector(std::size_t d, std::int64_t bound) {
    RatVector v;
    v.reserve(d);
    for (std::size_t i = 0; i < d; ++i) {
        v.emplace_back(static_cast<long>(uniform(-bound, bound)));
    }
    return v;
}

namespace {

RatVector distinct_from(InstanceRng& rng, const RatVector& p, std::int64_t bound) {
    RatVector q = rng.integer_vector(p.size(), bound);
    while (q == p) {
        q = rng.integer_vector(p.size(), bound);
    }
    return q;
}

// p + t (q - p) for a small integer t.
RatVector on_line(InstanceRng& rng, const RatVector& p, const RatVector& q) {
    const Rat t(static_cast<long>(rng.uniform(-3, 3)));
    RatVector r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        r[i] = p[i] + t * (q[i] - p[i]);
    }
    return r;
}

std::vector<RatVector> random_points(InstanceRng& rng, std::size_t n, std::size_t d, std::int64_t bound) {
    std::vector<RatVector> pts;
    for (std::size_t i = 0; i < n; ++i) {
        pts.push_back(rng.integer_vector(d, bound));
    }
    return pts;
}

// Replaces about a third of the points by copies of other points and about a
// third by points on the line through p, q.
void degrade(InstanceRng& rng, std::vector<RatVector>& pts, const RatVector& p, const RatVector& q) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto roll = rng.uniform(0, 2);
        if (roll == 0 && i > 0) {
            pts[i] = pts[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(i) - 1))];
        } else if (roll == 1) {
            pts[i] = on_line(rng, p, q);
        }
    }
}

// A hyperplane through p and q with a random normal.
AffineHyperplane containing(InstanceRng& rng, const RatVector& p, const RatVector& q, std::int64_t bound) {
    RatVector v(p.size());
    std::size_t pivot = p.size();
    for (std::size_t i = 0; i < p.size(); ++i) {
        v[i] = q[i] - p[i];
        if (pivot == p.size() && !v[i].is_zero()) {
            pivot = i;
        }
    }
    for (;;) {
        RatVector a = rng.integer_vector(p.size(), bound);
        Rat rest(0);
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i != pivot) {
                rest += a[i] * v[i];
            }
        }
        a[pivot] = -rest / v[pivot];
        if (std::any_of(a.begin(), a.end(), [](const Rat& x) { return !x.is_zero(); })) {
            return {a, dot(a, p)};
        }
    }
}

} // namespace

InstanceFile generate(const GenOptions& opts) {
    if (opts.dim < 1) {
        throw InputError("--dim", "dimension must be positive");
    }
    if (opts.coord_bound < 1) {
        throw InputError("--coord-bound", "bound must be positive");
    }
    const QueryKind kind = opts.kind.value_or(opts.dim == 3   ? QueryKind::depth_line3
                                              : opts.dim == 2 ? QueryKind::depth_line2
                                                              : QueryKind::crossdist);
    if ((kind == QueryKind::depth_line3 && opts.dim != 3) ||
        ((kind == QueryKind::depth_line2 || kind == QueryKind::tukey2) && opts.dim != 2)) {
        throw InputError("--dim", std::string(kind_name(kind)) + " needs a different dimension");
    }
    InstanceRng rng(opts.seed);
    const std::size_t d = opts.dim;
    const std::int64_t bound = opts.coord_bound;

    InstanceFile inst;
    inst.dimension = d;
    Query query;
    query.kind = kind;
    switch (kind) {
    case QueryKind::depth_line3:
    case QueryKind::depth_line2: {
        auto pts = random_points(rng, opts.n, d, bound);
        const RatVector p = rng.integer_vector(d, bound);
        const RatVector q = distinct_from(rng, p, bound);
        if (opts.degenerate) {
            degrade(rng, pts, p, q);
        }
        inst.points = std::move(pts);
        query.flat = AffineFlatSpec::through(p, q);
        break;
    }
    case QueryKind::tukey2: {
        auto pts = random_points(rng, opts.n, d, bound);
        RatVector q = rng.integer_vector(d, bound);
        if (opts.degenerate && !pts.empty()) {
            q = pts[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(pts.size()) - 1))];
            degrade(rng, pts, q, distinct_from(rng, q, bound));
        }
        inst.points = std::move(pts);
        query.point = q;
        break;
    }
    case QueryKind::crossdist: {
        const RatVector a1 = rng.integer_vector(d, bound);
        const RatVector a2 = distinct_from(rng, a1, bound);
        const RatVector b1 = rng.integer_vector(d, bound);
        const RatVector b2 = distinct_from(rng, b1, bound);
        std::vector<AffineHyperplane> hs;
        for (std::size_t i = 0; i < opts.n; ++i) {
            const auto roll = opts.degenerate ? rng.uniform(0, 3) : 3;
            if (roll == 0) {
                hs.push_back(containing(rng, a1, a2, bound));
            } else if (roll == 1 && !hs.empty()) {
                hs.push_back(hs[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(hs.size()) - 1))]);
            } else {
                RatVector a = rng.integer_vector(d, bound);
                while (std::all_of(a.begin(), a.end(), [](const Rat& x) { return x.is_zero(); })) {
                    a = rng.integer_vector(d, bound);
                }
                hs.push_back({a, Rat(static_cast<long>(rng.uniform(-bound, bound)))});
            }
        }
        inst.hyperplanes = std::move(hs);
        query.flat_a = AffineFlatSpec::through(a1, a2);
        query.flat_b = AffineFlatSpec::through(b1, b2);
        break;
    }
    }
    inst.query = std::move(query);
    return inst;
}

std::size_t degeneracy_count(const InstanceFile& inst) {
    std::size_t issues = 0;
    if (inst.points) {
        std::set<std::vector<std::string>> seen;
        for (const auto& p : *inst.points) {
            std::vector<std::string> key;
            for (const auto& x : p) {
                key.push_back(x.str());
            }
            if (!seen.insert(key).second) {
                ++issues;
            }
        }
    }
    if (!inst.query) {
        return issues;
    }
    const Query& q = *inst.query;
    const std::size_t d = inst.dimension;
    if (inst.points && q.flat) {
        const ProjectiveFlat f = q.flat->lift(d);
        for (const auto& p : *inst.points) {
            issues += f.contains(lift_affine(p)) ? 1 : 0;
        }
    }
    if (inst.points && q.point) {
        for (const auto& p : *inst.points) {
            issues += p == *q.point ? 1 : 0;
        }
    }
    if (inst.hyperplanes && q.flat_a && q.flat_b) {
        const ProjectiveFlat fa = q.flat_a->lift(d);
        const ProjectiveFlat fb = q.flat_b->lift(d);
        for (const auto& h : *inst.hyperplanes) {
            const auto g = functional_of_affine_hyperplane(h.a, h.b);
            for (const ProjectiveFlat* f : {&fa, &fb}) {
                const bool inside = std::all_of(f->basis().begin(), f->basis().end(),
                                                [&](const HomogeneousPoint& b) { return sign_of(g, b) == 0; });
                issues += inside ? 1 : 0;
            }
        }
    }
    return issues;
}

} // namespace flatdepth::cli
