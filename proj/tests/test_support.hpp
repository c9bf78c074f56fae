#pragma once

// Deterministic random generators shared by the test suites.

#include <charone/polygon.hpp>
#include <charone/staircase.hpp>

#include <random>

namespace charone::testing {

inline std::mt19937_64 make_rng(std::uint64_t seed = 0x5eed5eedULL) {
    return std::mt19937_64(seed);
}

inline Int rand_int(std::mt19937_64& rng, long lo, long hi) {
    return Int(std::uniform_int_distribution<long>(lo, hi)(rng));
}

// random staircase with up to max_corners generating points, coords in [lo, hi]
inline Staircase rand_staircase(std::mt19937_64& rng, int max_corners = 8, long lo = -20,
                                long hi = 20, bool allow_zero = true) {
    std::uniform_int_distribution<int> n_dist(allow_zero ? 0 : 1, max_corners);
    const int n = n_dist(rng);
    std::vector<Corner> pts;
    pts.reserve(n);
    for (int i = 0; i < n; ++i) pts.push_back({rand_int(rng, lo, hi), rand_int(rng, lo, hi)});
    return Staircase::from_points(std::move(pts));
}

inline NewtonPolygon rand_polygon(std::mt19937_64& rng, int max_corners = 8, long lo = -20,
                                  long hi = 20, bool allow_zero = true) {
    std::uniform_int_distribution<int> n_dist(allow_zero ? 0 : 1, max_corners);
    const int n = n_dist(rng);
    std::vector<Corner> pts;
    pts.reserve(n);
    for (int i = 0; i < n; ++i) pts.push_back({rand_int(rng, lo, hi), rand_int(rng, lo, hi)});
    return NewtonPolygon::from_points(std::move(pts));
}

inline Rational rand_rational(std::mt19937_64& rng, long num_lo, long num_hi, long den_hi) {
    const Int num = rand_int(rng, num_lo, num_hi);
    const Int den = rand_int(rng, 1, den_hi);
    return Rational(num, den);
}

// random positive quadratic irrational a + b sqrt(d)
inline Slope rand_quadratic_slope(std::mt19937_64& rng) {
    static const long ds[] = {2, 3, 5, 6, 7, 10, 11, 13};
    const Int d(ds[std::uniform_int_distribution<int>(0, 7)(rng)]);
    const Rational b = rand_rational(rng, 1, 6, 6);
    const Rational a = rand_rational(rng, 0, 6, 6);
    return Slope::quadratic(a, b, d);
}

}  // namespace charone::testing
