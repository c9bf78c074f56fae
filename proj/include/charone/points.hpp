#pragma once

// Points of the topos as rank-one ordered subgroups H_a of Q, labeled by
// supernatural numbers: an exponent for every prime, held as a finite
// explicit map plus a default of 0 or infinity for the unlisted primes. The
// subgroup is H_a = {x in Q | v_p(x) + a_p >= 0 for all p}. A distinguished
// base point stands for the trivial subgroup {0}.

#include "numeric.hpp"
#include "tropical.hpp"

#include <map>
#include <ostream>
#include <vector>

namespace charone {

struct PrimeExponent {
    bool infinite = false;
    Int value = 0;  // meaningful when !infinite; >= 0

    static PrimeExponent inf() { return {true, 0}; }
    static PrimeExponent finite(Int v) { return {false, std::move(v)}; }

    friend bool operator==(const PrimeExponent&, const PrimeExponent&) = default;
};

class Supernatural {
public:
    enum class Default { zero, infinity };

    // all exponents equal to the default
    static Supernatural uniform(Default d) {
        Supernatural s;
        s.default_ = d;
        return s;
    }

    // the integers Z: every exponent 0
    static Supernatural integers() { return uniform(Default::zero); }

    // the extra point of the extended topos, the subgroup {0}
    static Supernatural base_point() {
        Supernatural s;
        s.base_ = true;
        return s;
    }

    Supernatural with_exponent(const Int& p, PrimeExponent e) const {
        if (base_) throw std::domain_error("Supernatural: base point has no exponents");
        if (p <= 0 || p > Int(std::uint64_t(-1)) || !is_prime_u64(p.convert_to<std::uint64_t>()))
            throw std::domain_error("Supernatural: " + p.str() + " is not prime");
        if (!e.infinite && e.value < 0)
            throw std::domain_error("Supernatural: exponents are nonnegative");
        Supernatural s = *this;
        if (e == default_exponent())
            s.explicit_.erase(p);
        else
            s.explicit_[p] = std::move(e);
        return s;
    }

    bool is_base_point() const { return base_; }
    Default default_kind() const { return default_; }
    const std::map<Int, PrimeExponent>& explicit_map() const { return explicit_; }

    PrimeExponent default_exponent() const {
        return default_ == Default::infinity ? PrimeExponent::inf() : PrimeExponent::finite(0);
    }

    PrimeExponent exponent(const Int& p) const {
        if (base_) throw std::domain_error("Supernatural: base point has no exponents");
        auto it = explicit_.find(p);
        return it == explicit_.end() ? default_exponent() : it->second;
    }

    friend bool operator==(const Supernatural&, const Supernatural&) = default;

    friend std::ostream& operator<<(std::ostream& os, const Supernatural& s) {
        if (s.base_) return os << "base";
        bool first = true;
        for (const auto& [p, e] : s.explicit_) {
            os << (first ? "" : "*") << p.str() << "^";
            if (e.infinite) os << "inf";
            else os << e.value.str();
            first = false;
        }
        if (first) os << "1";
        if (s.default_ == Default::infinity) os << " (default inf)";
        return os;
    }

private:
    bool base_ = false;
    Default default_ = Default::zero;
    std::map<Int, PrimeExponent> explicit_;  // never stores the default
};

// x in H_a, i.e. v_p(x) + a_p >= 0 for every prime p. Only primes dividing
// the denominator of x can violate this, so the check factors the denominator.
inline bool subgroup_contains(const Supernatural& a, const Rational& x) {
    if (a.is_base_point())
        throw std::domain_error("subgroup_contains: base point is the group {0}");
    if (x == 0) return true;
    Int den = denominator(x);
    for (Int p = 2; p * p <= den;) {
        if (den % p == 0) {
            Int v = 0;
            while (den % p == 0) { den /= p; ++v; }
            const PrimeExponent e = a.exponent(p);
            if (!e.infinite && e.value < v) return false;
        }
        ++p;
    }
    if (den > 1) {
        const PrimeExponent e = a.exponent(den);
        if (!e.infinite && e.value < 1) return false;
    }
    return true;
}

struct SimplePart {
    Int prime;
    Int alpha;  // power of the prime in the denominator, >= 1
    Int numer;  // 0 < numer < prime^alpha, coprime to prime
};

struct PartialFractions {
    Int integer_part;
    std::vector<SimplePart> parts;
};

// Decomposition x = n + sum n_p / p^alpha over the primes dividing the
// denominator, with 0 < n_p < p^alpha and gcd(n_p, p) = 1.
inline PartialFractions partial_fractions(const Rational& x) {
    PartialFractions out;
    Int den = denominator(x);
    std::vector<std::pair<Int, Int>> fact;  // (p, alpha)
    for (Int p = 2; p * p <= den;) {
        if (den % p == 0) {
            Int alpha = 0;
            while (den % p == 0) { den /= p; ++alpha; }
            fact.emplace_back(p, alpha);
        }
        ++p;
    }
    if (den > 1) fact.emplace_back(den, 1);

    Rational rest = x;
    for (const auto& [p, alpha] : fact) {
        Int pa = 1;
        for (Int i = 0; i < alpha; ++i) pa *= p;
        // n_p = numerator * (D / p^alpha)^{-1} mod p^alpha, mapped into (0, p^alpha)
        const Int cod = denominator(x) / pa;
        Int inv, tmp;
        // extended gcd: inv * cod == 1 (mod pa)
        {
            Int r0 = pa, r1 = cod % pa, s0 = 0, s1 = 1;
            while (r1 != 0) {
                Int q = r0 / r1;
                tmp = r0 - q * r1; r0 = r1; r1 = tmp;
                tmp = s0 - q * s1; s0 = s1; s1 = tmp;
            }
            inv = s0 % pa;
            if (inv < 0) inv += pa;
        }
        Int np = (numerator(x) % pa) * inv % pa;
        np %= pa;
        if (np < 0) np += pa;
        out.parts.push_back({p, alpha, np});
        rest -= Rational(np, pa);
    }
    if (denominator(rest) != 1)
        throw std::logic_error("partial_fractions: residue is not an integer");
    out.integer_part = numerator(rest);
    return out;
}

// Isomorphism of points: H_b = q H_a for some positive rational q, i.e. the
// exponent functions share the default and the set of infinite primes, and
// (automatically, both explicit maps being finite) differ at finitely many
// primes by finite amounts.
inline bool points_isomorphic(const Supernatural& a, const Supernatural& b) {
    if (a.is_base_point() || b.is_base_point())
        return a.is_base_point() && b.is_base_point();
    if (a.default_kind() != b.default_kind()) return false;
    auto infinite_set = [](const Supernatural& s) {
        std::vector<Int> v;
        for (const auto& [p, e] : s.explicit_map())
            if (e.infinite) v.push_back(p);
        return v;  // sorted by map order
    };
    auto finite_override_set = [](const Supernatural& s) {
        std::vector<Int> v;
        for (const auto& [p, e] : s.explicit_map())
            if (!e.infinite) v.push_back(p);
        return v;
    };
    if (a.default_kind() == Supernatural::Default::zero)
        return infinite_set(a) == infinite_set(b);
    // default infinity: the infinite sets are the complements of the primes
    // overridden to a finite exponent
    return finite_override_set(a) == finite_override_set(b);
}

// An element of the stalk semifield H_max at the point a.
class RankOneElem {
public:
    RankOneElem(Rational value, Supernatural owner)
        : value_(std::move(value)), owner_(std::move(owner)) {
        if (!subgroup_contains(owner_, value_))
            throw std::domain_error("RankOneElem: value is not in the subgroup");
    }

    const Rational& value() const { return value_; }
    const Supernatural& owner() const { return owner_; }

    friend bool operator==(const RankOneElem&, const RankOneElem&) = default;

private:
    Rational value_;
    Supernatural owner_;
};

enum class StalkOp { max, plus };

// The stalk operations of H_max = (H, max, +); closure holds because H is a group.
inline RankOneElem stalk_ops(const Supernatural& a, StalkOp op, const RankOneElem& x,
                             const RankOneElem& y) {
    if (!(x.owner() == a) || !(y.owner() == a))
        throw std::domain_error("stalk_ops: operands belong to a different point");
    if (op == StalkOp::max) return {std::max(x.value(), y.value()), a};
    return {x.value() + y.value(), a};
}

struct GenericPoint {};
inline constexpr GenericPoint GENERIC{};

// The point map of the geometric morphism from the arithmetic spectrum: a
// prime p goes to the supernatural p^inf (the group of fractions with
// denominator a power of p), the generic point to the base point.
inline Supernatural theta_image(const Int& p) {
    return Supernatural::integers().with_exponent(p, PrimeExponent::inf());
}
inline Supernatural theta_image(GenericPoint) { return Supernatural::base_point(); }

// Global sections: the elements of Z_min invariant under every Frobenius,
// i.e. the copy of B = {q^0, q^inf}.
inline bool global_sections_check(const ZminElem& x) {
    return x.is_zero() || x.exponent() == 0;
}

}  // namespace charone
