#include "flatdepth/rational.hpp"

#include <cctype>
#include <ostream>

namespace flatdepth {

Rat::Rat(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) {
        throw std::domain_error("division by zero");
    }
    value_ /= o.value_;
    return *this;
}

BigInt parse_bigint(std::string_view text) {
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
        digits.remove_prefix(1);
    }
    if (digits.empty()) {
        throw std::invalid_argument("empty integer in '" + std::string(text) + "'");
    }
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw std::invalid_argument("malformed integer '" + std::string(text) + "'");
        }
    }
    std::string s(text);
    if (s.front() == '+') {
        s.erase(0, 1);
    }
    return BigInt(s, 10);
}

Rat Rat::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rat(parse_bigint(text));
    }
    const BigInt num = parse_bigint(text.substr(0, slash));
    const BigInt den = parse_bigint(text.substr(slash + 1));
    if (den == 0) {
        throw std::domain_error("rational '" + std::string(text) + "' has zero denominator");
    }
    return Rat(num, den);
}

std::string Rat::str() const {
    if (is_integer()) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

} // namespace flatdepth
