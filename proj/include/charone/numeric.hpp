#pragma once

// Exact arithmetic foundations shared by every charone module: unbounded
// integers and rationals (boost.multiprecision, header-only backends) and a
// handful of integer helpers used by the lattice and number-theory code.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace charone {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign(const Int& x) { return x.sign(); }
inline int sign(const Rational& x) { return x.sign(); }

// Floor division for possibly negative operands; b > 0.
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

// Ceiling of a/b; b > 0.
inline Int ceil_div(const Int& a, const Int& b) { return -floor_div(-a, b); }

inline Int floor_rat(const Rational& x) { return floor_div(numerator(x), denominator(x)); }
inline Int ceil_rat(const Rational& x) { return ceil_div(numerator(x), denominator(x)); }

// Largest s with s*s <= n (n >= 0).
inline Int isqrt(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt: negative argument");
    return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const Int& n) {
    if (n < 0) return false;
    Int s = isqrt(n);
    return s * s == n;
}

// d = square * squarefree; returns {sqrt(square), squarefree}. Trial division,
// intended for the small radicands of quadratic slopes.
inline std::pair<Int, Int> squarefree_split(Int d) {
    if (d <= 0) throw std::domain_error("squarefree_split: argument must be positive");
    Int outer = 1;
    for (Int p = 2; p * p <= d; ++p) {
        while (d % (p * p) == 0) {
            d /= p * p;
            outer *= p;
        }
    }
    return {outer, d};
}

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull}) {
        if (n % p == 0) return n == p;
    }
    // deterministic Miller-Rabin for 64-bit
    auto mulmod = [](std::uint64_t a, std::uint64_t b, std::uint64_t m) {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
    };
    auto powmod = [&](std::uint64_t a, std::uint64_t e, std::uint64_t m) {
        std::uint64_t r = 1;
        for (; e; e >>= 1, a = mulmod(a, a, m))
            if (e & 1) r = mulmod(r, a, m);
        return r;
    };
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a % n, d, n);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

inline std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
    std::vector<std::uint64_t> out;
    std::vector<bool> sieve(bound + 1, true);
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (!sieve[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= bound; j += i) sieve[j] = false;
    }
    return out;
}

// p-adic valuation v_p(x) of a nonzero rational.
inline Int padic_valuation(const Int& p, const Rational& x) {
    if (x == 0) throw std::domain_error("padic_valuation: zero argument");
    Int v = 0;
    Int n = numerator(x), d = denominator(x);
    while (n % p == 0) { n /= p; ++v; }
    while (d % p == 0) { d /= p; --v; }
    return v;
}

inline std::string to_string(const Int& x) { return x.str(); }
inline std::string to_string(const Rational& x) {
    return numerator(x).str() + "/" + denominator(x).str();
}

}  // namespace charone
