#pragma once

// Exact rational numbers over arbitrary-precision integers.
//
// Values are always kept in canonical form: gcd(|num|, den) = 1, den >= 1,
// zero is 0/1. No operation rounds.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace flatdepth {

using BigInt = mpz_class;

class Rat {
public:
    Rat() = default;
    Rat(long v) : value_(v) {}
    Rat(int v) : value_(static_cast<long>(v)) {}
    Rat(const BigInt& v) : value_(v) {}
    // Throws std::domain_error when den == 0.
    Rat(const BigInt& num, const BigInt& den);

    // Accepts "n", "-n", "n/d" with optional sign on either part.
    static Rat parse(std::string_view text);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }
    int sign() const { return sgn(value_); }
    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    // "n" for integers, otherwise "n/d".
    std::string str() const;

    Rat operator-() const { return Rat(mpq_class(-value_)); }
    Rat& operator+=(const Rat& o) { value_ += o.value_; return *this; }
    Rat& operator-=(const Rat& o) { value_ -= o.value_; return *this; }
    Rat& operator*=(const Rat& o) { value_ *= o.value_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    const mpq_class& raw() const { return value_; }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r);

private:
    explicit Rat(mpq_class v) : value_(std::move(v)) {}
    mpq_class value_;
};

Rat abs(const Rat& r);

// Parses a decimal big integer; throws std::invalid_argument on junk.
BigInt parse_bigint(std::string_view text);

} // namespace flatdepth
