#include "flatdepth/circle.hpp"

#include <algorithm>
#include <stdexcept>

namespace flatdepth {

CircleVector::CircleVector(BigInt alpha, BigInt beta) : alpha_(std::move(alpha)), beta_(std::move(beta)) {
    if (alpha_ == 0 && beta_ == 0) {
        throw std::invalid_argument("circle vector must be nonzero");
    }
    BigInt g;
    mpz_gcd(g.get_mpz_t(), alpha_.get_mpz_t(), beta_.get_mpz_t());
    if (g != 1) {
        alpha_ /= g;
        beta_ /= g;
    }
}

namespace {

BigInt clear_to(const Rat& r, const BigInt& l) { return r.numerator() * (l / r.denominator()); }

BigInt lcm_of(const Rat& a, const Rat& b) {
    BigInt l;
    mpz_lcm(l.get_mpz_t(), a.raw().get_den_mpz_t(), b.raw().get_den_mpz_t());
    return l;
}

} // namespace

CircleVector::CircleVector(const Rat& alpha, const Rat& beta)
    : CircleVector(clear_to(alpha, lcm_of(alpha, beta)), clear_to(beta, lcm_of(alpha, beta))) {}

CircleVector CircleVector::projective_key() const { return upper_half() ? *this : antipode(); }

std::string CircleVector::str() const { return "(" + alpha_.get_str() + ", " + beta_.get_str() + ")"; }

namespace {

// Products of two such values fit in 128 bits.
bool small(const BigInt& x) { return mpz_sizeinbase(x.get_mpz_t(), 2) < 63; }

int sign_of_difference(const BigInt& p, const BigInt& q, const BigInt& r, const BigInt& s) {
    if (small(p) && small(q) && small(r) && small(s)) {
        const __int128 lhs = static_cast<__int128>(p.get_si()) * q.get_si();
        const __int128 rhs = static_cast<__int128>(r.get_si()) * s.get_si();
        return (lhs > rhs) - (lhs < rhs);
    }
    const int c = cmp(p * q, r * s);
    return (c > 0) - (c < 0);
}

} // namespace

int cross_sign(const CircleVector& u, const CircleVector& v) {
    return sign_of_difference(u.alpha(), v.beta(), v.alpha(), u.beta());
}

std::strong_ordering circular_compare(const CircleVector& u, const CircleVector& v) {
    const bool uu = u.upper_half();
    const bool vu = v.upper_half();
    if (uu != vu) {
        return uu ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    // Within a half-open half-turn the cross product decides; it is zero only
    // for the same ray since antipodes fall in different halves.
    const int c = cross_sign(u, v);
    return c > 0 ? std::strong_ordering::less
         : c < 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
}

CircleVector arc_midpoint(const CircleVector& from, const CircleVector& to) {
    if (from == to) {
        throw std::invalid_argument("arc endpoints coincide");
    }
    const int c = cross_sign(from, to);
    if (c > 0) {
        return CircleVector(from.alpha() + to.alpha(), from.beta() + to.beta());
    }
    if (c == 0) {
        return from.rotated90();
    }
    return CircleVector(-(from.alpha() + to.alpha()), -(from.beta() + to.beta()));
}

int restricted_sign(const BigInt& a, const BigInt& b, const CircleVector& u) {
    return sign_of_difference(a, u.alpha(), -b, u.beta());
}

CircleVector positive_arc_start(const BigInt& a, const BigInt& b) { return CircleVector(b, -a); }
CircleVector positive_arc_end(const BigInt& a, const BigInt& b) { return CircleVector(-b, a); }

void sort_unique_circular(std::vector<CircleVector>& v) {
    std::sort(v.begin(), v.end(), CircularLess{});
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

} // namespace flatdepth
