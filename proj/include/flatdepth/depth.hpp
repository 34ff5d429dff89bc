#pragma once

// Public queries: crossing distance between two flats of an explicit
// hyperplane arrangement, regression depth of a line in R^3 or R^2, and Tukey
// depth of a point in R^2.
//
// Distances use closed semantics: a data point on the boundary of a double
// wedge lies in it. `distance` is the headline value; the count over open
// cells alone is `strict_min`, and the difference is `incident_count`, the
// hyperplanes (data points) containing one of the query flats.

#include <cstddef>
#include <optional>
#include <vector>

#include "flatdepth/instance.hpp"
#include "flatdepth/projective.hpp"

namespace flatdepth {

// A point (one entry in `points`), a line through two distinct points, a
// line through a point with a direction, or raw homogeneous basis vectors
// (which may lie at infinity).
struct AffineFlatSpec {
    std::vector<RatVector> points;
    std::optional<RatVector> direction;
    std::vector<RatVector> homogeneous;

    static AffineFlatSpec point(RatVector p);
    static AffineFlatSpec through(RatVector p, RatVector q);
    static AffineFlatSpec point_direction(RatVector p, RatVector v);
    static AffineFlatSpec raw(std::vector<RatVector> basis);

    // Throws std::invalid_argument on arity mismatch or coincident defining
    // points, UnsupportedFlat when the flat is not a point or a line.
    ProjectiveFlat lift(std::size_t d) const;
};

// {x : a . x = b}
struct AffineHyperplane {
    RatVector a;
    Rat b;
};

// Primal hyperplane given by (coeffs, rhs): coeffs . x = rhs. When coeffs is
// zero the hyperplane is the one at infinity.
struct PrimalHyperplane {
    RatVector coeffs;
    Rat rhs;
    bool at_infinity = false;

    ArrangementFunctional functional() const;
};

struct PrimalWitness {
    PrimalHyperplane first;   // contains the query flat
    PrimalHyperplane second;  // vertical, or the hyperplane at infinity
    std::size_t count = 0;    // data points strictly inside the double wedge
};

struct DepthReport {
    DepthResult result;
    PrimalWitness primal;
};

DepthResult crossing_distance(const std::vector<AffineHyperplane>& hyperplanes, const AffineFlatSpec& a,
                              const AffineFlatSpec& b);
// Same query with flats and functionals already in homogeneous form.
DepthResult crossing_distance(const std::vector<ArrangementFunctional>& functionals, const ProjectiveFlat& f1,
                              const ProjectiveFlat& f2);

DepthReport regression_depth_line3(const std::vector<RatVector>& points, const AffineFlatSpec& line);
DepthReport regression_depth_line2(const std::vector<RatVector>& points, const AffineFlatSpec& line);
DepthReport tukey_depth2(const std::vector<RatVector>& points, const RatVector& q);

// Polar hyperplanes of the two witness points: u -> {x : u[0..d) . x + u[d] = 0}.
PrimalWitness witness_to_primal(const HomogeneousPoint& u1, const HomogeneousPoint& u2);

// The two flats a depth query reduces to. Exposed so callers can rebuild or
// verify an instance.
struct DepthFlats {
    ProjectiveFlat f1;
    ProjectiveFlat f2;
};
DepthFlats line3_flats(const AffineFlatSpec& line);
DepthFlats line2_flats(const AffineFlatSpec& line);
DepthFlats tukey2_flats(const RatVector& q);

std::vector<ArrangementFunctional> point_functionals(const std::vector<RatVector>& points, std::size_t d);

} // namespace flatdepth
