#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>

#include "cgh/core.hpp"
#include "cgh/rational.hpp"

namespace cgh {

/// Upper bounds on ex(n, P_k^r) and ex_cyc(n, P_k^r), each as an exact
/// multiple of C(n, r-1). Irrational bounds carry a double for display and a
/// rational rounded up (denominator 1e9) for comparisons.
struct BoundValues {
    std::size_t n = 0, r = 0, k = 0;
    Rational binom;    // C(n, r-1)
    Rational trivial;  // (k-1) C(n, r-1)
    Rational thm2;     // (k-1)/2 C(n, r-1) for even r; (k + floor((k-1)/r))/2 C(n, r-1) for odd r
    Rational conj1;    // (k-1)/r C(n, r-1)
    std::optional<Rational> thm3;  // r = 2: (k-1) n / 2
    std::optional<Rational> thm4;  // even r, convex zigzags: (k-1)(r-1)/r C(n, r-1)
    Rational link;                 // k^2/(2r) C(n, r-1), valid when r >= k-1
    bool link_applies = false;
    std::optional<double> odd_improvement;  // odd r, large n: (sqrt a + sqrt b)^2 / r C(n, r-1)
    std::optional<Rational> odd_improvement_upper;
    std::optional<double> odd_improvement_coefficient;  // (sqrt a + sqrt b)^2 / r
};

inline BoundValues bound_values(std::size_t n, std::size_t r, std::size_t k) {
    if (r < 2 || n < r) throw std::invalid_argument("bounds need n >= r >= 2");
    if (k == 0) throw std::invalid_argument("bounds need k >= 1");
    BoundValues b;
    b.n = n;
    b.r = r;
    b.k = k;
    b.binom = rational(binomial(n, r - 1));
    const auto km1 = static_cast<std::int64_t>(k - 1);
    const auto rr = static_cast<std::int64_t>(r);
    b.trivial = Rational(km1) * b.binom;
    if (r % 2 == 0) {
        b.thm2 = Rational(km1, 2) * b.binom;
        b.thm4 = Rational(km1 * (rr - 1), rr) * b.binom;
    } else {
        b.thm2 = Rational(static_cast<std::int64_t>(k) + km1 / rr, 2) * b.binom;
        const double a = static_cast<double>(km1 / rr);
        const double bb = static_cast<double>((rr - 1) * (km1 - km1 / rr)) / 2.0;
        const double coeff = std::pow(std::sqrt(a) + std::sqrt(bb), 2) / static_cast<double>(r);
        b.odd_improvement_coefficient = coeff;
        b.odd_improvement = coeff * to_double(b.binom);
        b.odd_improvement_upper = round_up(coeff) * b.binom;
    }
    if (r == 2) b.thm3 = Rational(km1 * static_cast<std::int64_t>(n), 2);
    b.conj1 = Rational(km1, rr) * b.binom;
    b.link = Rational(static_cast<std::int64_t>(k * k), 2 * rr) * b.binom;
    b.link_applies = r + 1 >= k;
    return b;
}

}  // namespace cgh
