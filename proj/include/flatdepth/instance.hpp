#pragma once

// Reduction of a crossing-distance query between two flats of projective
// dimension <= 1 to a minimum-coverage problem on a product of spheres.
//
// A factor of hdim 2 is parametrized by (alpha, beta) -> alpha*b1 + beta*b2
// and its unit circle is S^1. A factor of hdim 1 is S^0 = {+b1, -b1}, written
// as the circle vectors (1, 0) and (-1, 0) with a restricted form (A, 0), so
// both cases share the sign test sign(A*alpha + B*beta).
//
// The segment between u1 and u2 crosses hyperplane h iff the restricted signs
// at u1 and u2 are strictly opposite.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "flatdepth/circle.hpp"
#include "flatdepth/projective.hpp"

namespace flatdepth {

// Thrown for flats outside projective dimension 0 or 1.
class UnsupportedFlat : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct FactorRestriction {
    Rat a;   // h(b1)
    Rat b;   // h(b2), zero for a 1-dimensional factor
    bool identically_zero = false;
    // Coprime positive rescaling of (a, b); unset when identically zero.
    BigInt int_a;
    BigInt int_b;
};

struct RestrictedFunctional {
    std::size_t index = 0;  // position in the caller's hyperplane list
    ArrangementFunctional original;
    std::array<FactorRestriction, 2> factor;

    int sign_at(std::size_t f, const CircleVector& u) const {
        return restricted_sign(factor[f].int_a, factor[f].int_b, u);
    }
};

class CoveringInstance {
public:
    CoveringInstance(ProjectiveFlat f1, ProjectiveFlat f2, std::vector<RestrictedFunctional> active,
                     std::vector<RestrictedFunctional> incident);

    std::size_t dimension() const { return factors_[0].dimension(); }
    const ProjectiveFlat& factor(std::size_t i) const { return factors_[i]; }
    const std::vector<RestrictedFunctional>& active() const { return active_; }
    const std::vector<RestrictedFunctional>& incident() const { return incident_; }
    std::size_t incident_count() const { return incident_.size(); }
    std::size_t n_total() const { return active_.size() + incident_.size(); }

    // Homogeneous point of factor i named by parameter coordinates.
    HomogeneousPoint embed(std::size_t i, const CircleVector& u) const;

private:
    std::array<ProjectiveFlat, 2> factors_;
    std::vector<RestrictedFunctional> active_;
    std::vector<RestrictedFunctional> incident_;
};

// Returned instead of an instance when the flats share a point; the crossing
// distance is then zero.
struct IntersectingFlats {
    HomogeneousPoint common;
};

// Throws UnsupportedFlat when a factor has hdim outside {1, 2} and
// std::invalid_argument on dimension mismatches.
std::variant<CoveringInstance, IntersectingFlats> build_instance(
    const std::vector<ArrangementFunctional>& functionals, const ProjectiveFlat& f1, const ProjectiveFlat& f2);

// Restricts one functional to one factor basis.
FactorRestriction restrict_to(const ArrangementFunctional& h, const ProjectiveFlat& f);

// #{active h : sign(h, u1) * sign(h, u2) = -1}. For a 1-dimensional factor the
// point must be (+-1, 0).
std::size_t strict_crossing_count(const CoveringInstance& inst, const CircleVector& u1, const CircleVector& u2);

struct Witness {
    // Parameter coordinates; unset for intersecting flats.
    std::optional<CircleVector> c1;
    std::optional<CircleVector> c2;
    HomogeneousPoint u1;
    HomogeneousPoint u2;
    bool degenerate = false;  // flats intersect, u1 == u2 is a common point
};

struct DepthResult {
    std::size_t distance = 0;  // strict_min + incident_count (closed semantics)
    std::size_t strict_min = 0;
    std::size_t incident_count = 0;
    std::size_t n_active = 0;
    std::string solver;
    Witness witness;
};

DepthResult intersecting_result(const IntersectingFlats& meet);

// Fills distance/incident/witness fields from a strict minimum found at (c1, c2).
DepthResult make_result(const CoveringInstance& inst, std::size_t strict_min, const CircleVector& c1,
                        const CircleVector& c2, std::string solver);

} // namespace flatdepth
