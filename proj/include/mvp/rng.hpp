#pragma once

#include <cstdint>
#include <random>

#include "mvp/rational.hpp"

namespace mvp {

// Deterministic draws. std::uniform_int_distribution is implementation
// defined, so reduction is done by hand to keep outputs stable across
// standard libraries.
inline std::int64_t rand_below(std::mt19937_64& eng, std::uint64_t n) {
    return static_cast<std::int64_t>(eng() % n);
}

inline std::int64_t rand_range(std::mt19937_64& eng, std::int64_t lo, std::int64_t hi) {
    return lo + rand_below(eng, static_cast<std::uint64_t>(hi - lo + 1));
}

// Numerator in [-100, 100], denominator in [1, 20].
inline Rational random_rational(std::mt19937_64& eng) {
    long num = rand_range(eng, -100, 100);
    long den = rand_range(eng, 1, 20);
    return Rational(num, den);
}

// Like random_rational but never zero; used where a vanishing coefficient
// would silently drop a term.
inline Rational random_nonzero_rational(std::mt19937_64& eng) {
    Rational r = random_rational(eng);
    return r.is_zero() ? Rational(7, 1) : r;
}

}  // namespace mvp
