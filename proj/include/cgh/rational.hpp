#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace cgh {

using Rational = boost::rational<std::int64_t>;

inline Rational rational(std::uint64_t v) { return Rational(static_cast<std::int64_t>(v)); }

inline std::string to_string(const Rational& q) {
    if (q.denominator() == 1) return std::to_string(q.numerator());
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

inline double to_double(const Rational& q) { return boost::rational_cast<double>(q); }

/// Smallest multiple of 1/denominator that is >= x (x >= 0, non-NaN).
inline Rational round_up(double x, std::int64_t denominator = 1'000'000'000) {
    const double scaled = std::nextafter(x * static_cast<double>(denominator), INFINITY);
    return Rational(static_cast<std::int64_t>(std::ceil(scaled)), denominator);
}

}  // namespace cgh
