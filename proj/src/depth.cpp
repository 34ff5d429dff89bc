#include "flatdepth/depth.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "flatdepth/dual.hpp"
#include "flatdepth/solvers.hpp"

namespace flatdepth {

AffineFlatSpec AffineFlatSpec::point(RatVector p) { return {{std::move(p)}, std::nullopt, {}}; }

AffineFlatSpec AffineFlatSpec::through(RatVector p, RatVector q) {
    return {{std::move(p), std::move(q)}, std::nullopt, {}};
}

AffineFlatSpec AffineFlatSpec::point_direction(RatVector p, RatVector v) {
    return {{std::move(p)}, std::move(v), {}};
}

AffineFlatSpec AffineFlatSpec::raw(std::vector<RatVector> basis) { return {{}, std::nullopt, std::move(basis)}; }

namespace {

void check_arity(const RatVector& v, std::size_t n, const char* what) {
    if (v.size() != n) {
        throw std::invalid_argument(std::string(what) + " has " + std::to_string(v.size()) +
                                    " coordinates, expected " + std::to_string(n));
    }
}

} // namespace

ProjectiveFlat AffineFlatSpec::lift(std::size_t d) const {
    std::vector<HomogeneousPoint> basis;
    if (!homogeneous.empty()) {
        if (!points.empty() || direction) {
            throw std::invalid_argument("flat spec mixes homogeneous and affine data");
        }
        for (const auto& v : homogeneous) {
            check_arity(v, d + 1, "homogeneous flat vector");
            basis.emplace_back(v);
        }
    } else {
        for (const auto& p : points) {
            check_arity(p, d, "flat point");
            basis.push_back(lift_affine(p));
        }
        if (direction) {
            check_arity(*direction, d, "flat direction");
            basis.push_back(lift_direction(*direction));
        }
    }
    if (basis.empty()) {
        throw std::invalid_argument("flat spec is empty");
    }
    if (basis.size() > 2) {
        throw UnsupportedFlat("flat specs may name at most two points: only points and lines are supported");
    }
    if (basis.size() == 2 && same_projective_point(basis[0], basis[1])) {
        throw std::invalid_argument("flat spec has coincident defining points");
    }
    return ProjectiveFlat(std::move(basis));
}

ArrangementFunctional PrimalHyperplane::functional() const {
    RatVector c = coeffs;
    c.push_back(-rhs);
    return ArrangementFunctional(std::move(c));
}

PrimalWitness witness_to_primal(const HomogeneousPoint& u1, const HomogeneousPoint& u2) {
    auto polar = [](const HomogeneousPoint& u) {
        const auto& c = u.coords();
        PrimalHyperplane h{RatVector(c.begin(), c.end() - 1), -c.back(), false};
        h.at_infinity = std::all_of(h.coeffs.begin(), h.coeffs.end(), [](const Rat& x) { return x.is_zero(); });
        return h;
    };
    return PrimalWitness{polar(u1), polar(u2), 0};
}

std::vector<ArrangementFunctional> point_functionals(const std::vector<RatVector>& points, std::size_t d) {
    std::vector<ArrangementFunctional> out;
    out.reserve(points.size());
    for (const auto& p : points) {
        check_arity(p, d, "data point");
        out.push_back(dual_of_point(p));
    }
    return out;
}

DepthResult crossing_distance(const std::vector<ArrangementFunctional>& functionals, const ProjectiveFlat& f1,
                              const ProjectiveFlat& f2) {
    auto built = build_instance(functionals, f1, f2);
    if (const auto* meet = std::get_if<IntersectingFlats>(&built)) {
        return intersecting_result(*meet);
    }
    return solve(std::get<CoveringInstance>(built));
}

DepthResult crossing_distance(const std::vector<AffineHyperplane>& hyperplanes, const AffineFlatSpec& a,
                              const AffineFlatSpec& b) {
    std::size_t d = 0;
    if (!hyperplanes.empty()) {
        d = hyperplanes.front().a.size();
    } else if (!a.points.empty()) {
        d = a.points.front().size();
    } else if (!a.homogeneous.empty()) {
        d = a.homogeneous.front().size() - 1;
    }
    if (d == 0) {
        throw std::invalid_argument("cannot infer the ambient dimension");
    }
    std::vector<ArrangementFunctional> functionals;
    for (std::size_t i = 0; i < hyperplanes.size(); ++i) {
        check_arity(hyperplanes[i].a, d, "hyperplane normal");
        functionals.push_back(functional_of_affine_hyperplane(hyperplanes[i].a, hyperplanes[i].b));
    }
    return crossing_distance(functionals, a.lift(d), b.lift(d));
}

namespace {

ProjectiveFlat require_line(const AffineFlatSpec& line, std::size_t d) {
    ProjectiveFlat f = line.lift(d);
    if (f.hdim() != 2) {
        throw std::invalid_argument("query flat must be a line");
    }
    if (std::all_of(f.basis().begin(), f.basis().end(), [](const HomogeneousPoint& b) { return b.at_infinity(); })) {
        throw std::invalid_argument("query line lies at infinity");
    }
    return f;
}

DepthReport depth_query(const std::vector<RatVector>& points, std::size_t d, const DepthFlats& flats) {
    DepthReport report{crossing_distance(point_functionals(points, d), flats.f1, flats.f2), {}};
    report.primal = witness_to_primal(report.result.witness.u1, report.result.witness.u2);
    report.primal.count = report.result.strict_min;
    return report;
}

} // namespace

DepthFlats line3_flats(const AffineFlatSpec& line) {
    const ProjectiveFlat l = require_line(line, 3);
    return {dual_flat_of_line(l.basis()[0], l.basis()[1]), vertical_infinity_flat(3, 1)};
}

DepthFlats line2_flats(const AffineFlatSpec& line) {
    const ProjectiveFlat l = require_line(line, 2);
    return {dual_flat_of_line(l.basis()[0], l.basis()[1]), vertical_infinity_flat(2, 1)};
}

DepthFlats tukey2_flats(const RatVector& q) {
    check_arity(q, 2, "query point");
    return {orthogonal_complement(ProjectiveFlat({lift_affine(q)})), vertical_infinity_flat(2, 0)};
}

DepthReport regression_depth_line3(const std::vector<RatVector>& points, const AffineFlatSpec& line) {
    return depth_query(points, 3, line3_flats(line));
}

DepthReport regression_depth_line2(const std::vector<RatVector>& points, const AffineFlatSpec& line) {
    return depth_query(points, 2, line2_flats(line));
}

DepthReport tukey_depth2(const std::vector<RatVector>& points, const RatVector& q) {
    return depth_query(points, 2, tukey2_flats(q));
}

} // namespace flatdepth
