#pragma once

// Point/hyperplane polarity on homogeneous coordinates: the point u is dual
// to the hyperplane {x : <u, x> = 0}.

#include <cstddef>
#include <span>

#include "flatdepth/projective.hpp"

namespace flatdepth {

// (p, 1): the polar hyperplane of the lifted data point.
ArrangementFunctional dual_of_point(std::span<const Rat> p);

// {x : a . x = b} as (a, -b). Throws std::invalid_argument when a is zero.
ArrangementFunctional functional_of_affine_hyperplane(std::span<const Rat> a, const Rat& b);

// Flat whose points are dual to the regression failures for k-flats in R^d:
// span{(e_1,0), ..., (e_k,0), (0,...,0,1)}. Responses are the last d-k
// coordinates. Requires 0 <= k <= d-1.
ProjectiveFlat vertical_infinity_flat(std::size_t d, std::size_t k);

// Orthogonal complement of the span of two projectively distinct points.
ProjectiveFlat dual_flat_of_line(const HomogeneousPoint& a, const HomogeneousPoint& b);

} // namespace flatdepth
