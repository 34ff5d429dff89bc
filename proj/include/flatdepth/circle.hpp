#pragma once

// Points of the unit circle of a 2-dimensional subspace, in parameter
// coordinates (alpha, beta) relative to a fixed basis (b1, b2). A point is a
// ray: positive multiples denote the same point, the antipode is (-a, -b).
// Angular order is decided with integer cross products, no trigonometry.

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "flatdepth/rational.hpp"

namespace flatdepth {

class CircleVector {
public:
    // Throws std::invalid_argument for the zero vector. Stored in canonical
    // form: coprime integers, same ray.
    CircleVector(BigInt alpha, BigInt beta);
    CircleVector(const Rat& alpha, const Rat& beta);
    CircleVector(long alpha, long beta) : CircleVector(BigInt(alpha), BigInt(beta)) {}

    const BigInt& alpha() const { return alpha_; }
    const BigInt& beta() const { return beta_; }

    CircleVector antipode() const { return CircleVector(-alpha_, -beta_); }
    // Quarter turn counterclockwise.
    CircleVector rotated90() const { return CircleVector(-beta_, alpha_); }
    // Same point of the projective line for v and -v (beta > 0, or beta = 0
    // and alpha > 0).
    CircleVector projective_key() const;

    // Upper half: beta > 0, or beta = 0 and alpha > 0.
    bool upper_half() const { return sgn(beta_) > 0 || (sgn(beta_) == 0 && sgn(alpha_) > 0); }

    std::string str() const;

    friend bool operator==(const CircleVector&, const CircleVector&) = default;

private:
    BigInt alpha_;
    BigInt beta_;
};

// sign(u.alpha * v.beta - v.alpha * u.beta)
int cross_sign(const CircleVector& u, const CircleVector& v);

// Counterclockwise order starting at (1, 0): strict total order on rays.
std::strong_ordering circular_compare(const CircleVector& u, const CircleVector& v);

struct CircularLess {
    bool operator()(const CircleVector& u, const CircleVector& v) const {
        return circular_compare(u, v) < 0;
    }
};

// A point strictly inside the counterclockwise open arc from `from` to `to`
// (from != to). Vector sum when the arc is shorter than a half-turn, a quarter
// turn of `from` when it is exactly a half-turn, the negated sum otherwise.
CircleVector arc_midpoint(const CircleVector& from, const CircleVector& to);

// sign(a * alpha + b * beta) for integer restricted coefficients.
int restricted_sign(const BigInt& a, const BigInt& b, const CircleVector& u);

// The two zeros of a*alpha + b*beta on the circle: (b, -a) starts the
// positive open semicircle and (-b, a) ends it (counterclockwise).
CircleVector positive_arc_start(const BigInt& a, const BigInt& b);
CircleVector positive_arc_end(const BigInt& a, const BigInt& b);

// Sorts and removes duplicates (equal rays).
void sort_unique_circular(std::vector<CircleVector>& v);

} // namespace flatdepth
