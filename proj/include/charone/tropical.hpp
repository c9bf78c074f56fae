#pragma once

// The base characteristic-one semirings: the Boolean semifield B = {0,1},
// the tropical integers Z_min (written multiplicatively as powers q^n, with
// q^inf the semiring zero), and the tropical reals R_max used for floating
// evaluation. Addition in Z_min is min of exponents, multiplication adds
// exponents, and Fr_k multiplies exponents by k.

#include "numeric.hpp"

#include <compare>
#include <optional>
#include <ostream>

namespace charone {

// An element q^n of Z_min, n in Z union {+inf}. The infinite exponent is an
// explicit tagged state, never a sentinel value.
class ZminElem {
public:
    ZminElem() : inf_(true) {}  // default-constructed element is the zero q^inf
    explicit ZminElem(Int exponent) : inf_(false), exp_(std::move(exponent)) {}

    static ZminElem zero() { return ZminElem(); }
    static ZminElem one() { return ZminElem(Int(0)); }

    bool is_zero() const { return inf_; }
    bool is_finite() const { return !inf_; }

    // Exponent of a finite element; throws on q^inf.
    const Int& exponent() const {
        if (inf_) throw std::domain_error("ZminElem: exponent of q^inf");
        return exp_;
    }

    friend bool operator==(const ZminElem& a, const ZminElem& b) {
        if (a.inf_ != b.inf_) return false;
        return a.inf_ || a.exp_ == b.exp_;
    }

    friend std::ostream& operator<<(std::ostream& os, const ZminElem& x) {
        if (x.inf_) return os << "q^inf";
        return os << "q^" << x.exp_.str();
    }

private:
    bool inf_;
    Int exp_;
};

inline ZminElem zmin_add(const ZminElem& x, const ZminElem& y) {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    return ZminElem(std::min(x.exponent(), y.exponent()));
}

inline ZminElem zmin_mul(const ZminElem& x, const ZminElem& y) {
    if (x.is_zero() || y.is_zero()) return ZminElem::zero();
    return ZminElem(x.exponent() + y.exponent());
}

// Fr_k(q^n) = q^{kn}, k >= 1. A semiring endomorphism fixing B = {q^0, q^inf}.
inline ZminElem zmin_frobenius(const ZminElem& x, const Int& k) {
    if (k < 1) throw std::domain_error("zmin_frobenius: k must be >= 1");
    if (x.is_zero()) return x;
    return ZminElem(k * x.exponent());
}

// View of the isomorphism Z_min -> Z_max, n -> -n. Z_max is not a second
// type; callers needing max-plus notation negate through these.
inline ZminElem zmax_of_zmin(const ZminElem& x) {
    return x.is_zero() ? x : ZminElem(-x.exponent());
}

// The Boolean semifield B = {0, 1}: 1+1 = 1. Fixed points of every Fr_k.
struct BoolSemifield {
    bool value = false;

    friend bool operator==(BoolSemifield, BoolSemifield) = default;
};

inline BoolSemifield bool_add(BoolSemifield a, BoolSemifield b) { return {a.value || b.value}; }
inline BoolSemifield bool_mul(BoolSemifield a, BoolSemifield b) { return {a.value && b.value}; }

// Tropical reals ([0, inf), max, *), floating representation. Used only for
// evaluation and reporting, never inside exact decision procedures.
struct RmaxElem {
    double value = 0.0;

    friend bool operator==(RmaxElem, RmaxElem) = default;
};

inline RmaxElem rmax_add(RmaxElem a, RmaxElem b) { return {std::max(a.value, b.value)}; }
inline RmaxElem rmax_mul(RmaxElem a, RmaxElem b) { return {a.value * b.value}; }
inline RmaxElem rmax_frobenius(RmaxElem a, double u) {
    if (!(u > 0)) throw std::domain_error("rmax_frobenius: u must be positive");
    return {std::pow(a.value, u)};
}

}  // namespace charone
