#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace oaiso {

// All design-derived quantities are integer multiples of 1/N, so exact
// rational arithmetic on 64-bit integers never overflows at the scales this
// library supports.
using Rational = boost::rational<std::int64_t>;

inline double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

/// Canonical string form "p/q": reduced fraction, positive denominator.
inline std::string to_string(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Accepts "p/q" or a bare integer "p".
inline Rational parse_rational(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(s));
        const std::int64_t num = std::stoll(s.substr(0, slash));
        const std::int64_t den = std::stoll(s.substr(slash + 1));
        return Rational(num, den);
    } catch (const boost::bad_rational&) {
        throw std::invalid_argument("parse_rational: zero denominator in '" + s + "'");
    } catch (const std::exception&) {
        throw std::invalid_argument("parse_rational: malformed rational '" + s + "'");
    }
}

}  // namespace oaiso
