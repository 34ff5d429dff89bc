#pragma once

// Homogeneous coordinates, linear functionals and linear subspaces of
// Q^{d+1}, with exact elimination.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "flatdepth/rational.hpp"

namespace flatdepth {

using RatVector = std::vector<Rat>;

// A nonzero (d+1)-vector. Two values denote the same projective point iff
// they are proportional; equality (==) is exact coordinate equality.
class HomogeneousPoint {
public:
    explicit HomogeneousPoint(RatVector coords);

    const RatVector& coords() const { return coords_; }
    std::size_t size() const { return coords_.size(); }
    // Ambient affine dimension d.
    std::size_t dimension() const { return coords_.size() - 1; }
    const Rat& operator[](std::size_t i) const { return coords_[i]; }

    // Coprime integer coordinates, first nonzero coordinate positive.
    HomogeneousPoint canonical() const;
    // Coprime integer coordinates obtained by a positive scaling only.
    HomogeneousPoint primitive() const;
    HomogeneousPoint negated() const;
    bool at_infinity() const { return coords_.back().is_zero(); }

    friend bool operator==(const HomogeneousPoint&, const HomogeneousPoint&) = default;

private:
    RatVector coords_;
};

bool same_projective_point(const HomogeneousPoint& a, const HomogeneousPoint& b);

// One arrangement hyperplane as a linear form on homogeneous space.
class ArrangementFunctional {
public:
    explicit ArrangementFunctional(RatVector coeffs);

    const RatVector& coeffs() const { return coeffs_; }
    std::size_t size() const { return coeffs_.size(); }
    ArrangementFunctional negated() const;

    friend bool operator==(const ArrangementFunctional&, const ArrangementFunctional&) = default;

private:
    RatVector coeffs_;
};

// Embeds an affine point as (p, 1).
HomogeneousPoint lift_affine(std::span<const Rat> p);
// Embeds an affine direction as (v, 0); v must be nonzero.
HomogeneousPoint lift_direction(std::span<const Rat> v);

// Exact dot product; throws std::invalid_argument on dimension mismatch.
Rat evaluate(const ArrangementFunctional& h, const HomogeneousPoint& u);
int sign_of(const ArrangementFunctional& h, const HomogeneousPoint& u);
Rat dot(std::span<const Rat> a, std::span<const Rat> b);

// A linear subspace given by a linearly independent rational basis.
// hdim is the number of basis vectors; the projective dimension is hdim - 1.
class ProjectiveFlat {
public:
    // Throws std::invalid_argument if the basis is empty, ragged or dependent.
    explicit ProjectiveFlat(std::vector<HomogeneousPoint> basis);

    const std::vector<HomogeneousPoint>& basis() const { return basis_; }
    std::size_t hdim() const { return basis_.size(); }
    std::size_t ambient_size() const { return basis_.front().size(); }
    std::size_t dimension() const { return ambient_size() - 1; }

    // Exact membership of a vector in the span.
    bool contains(const RatVector& v) const;
    bool contains(const HomogeneousPoint& v) const { return contains(v.coords()); }
    // Linear combination sum_i c[i] * basis[i]; c.size() must equal hdim.
    RatVector combine(std::span<const Rat> c) const;

private:
    std::vector<HomogeneousPoint> basis_;
};

// Equality as subspaces (mutual containment).
bool same_span(const ProjectiveFlat& a, const ProjectiveFlat& b);

ProjectiveFlat orthogonal_complement(const ProjectiveFlat& f);

bool flats_intersect(const ProjectiveFlat& a, const ProjectiveFlat& b);

// A nonzero vector lying in both subspaces, if any.
std::optional<HomogeneousPoint> common_vector(const ProjectiveFlat& a, const ProjectiveFlat& b);

namespace linalg {

std::size_t rank(std::vector<RatVector> rows);

// Basis of {x : row . x = 0 for every row}, one vector per free column of
// the reduced row echelon form.
std::vector<RatVector> nullspace(std::vector<RatVector> rows, std::size_t ncols);

// Positive rescaling of a nonzero rational vector to coprime integers.
std::vector<BigInt> primitive_integers(std::span<const Rat> v);

} // namespace linalg

} // namespace flatdepth
