#pragma once

// Frobenius correspondences as reduced correspondences (R(lambda), l, r):
// the semiring R(lambda) of powers q^alpha with alpha in N + lambda N is
// represented by its two generator exponents, never by enumeration. The
// composition law multiplies slopes; when two irrational slopes multiply to
// a rational the result picks up the tangential deformation Id_eps, whose
// generator exponents live in the germ semiring (exponents alpha + beta*eps
// ordered lexicographically, eps -> 0+).

#include "slope.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <set>
#include <vector>

namespace charone {

struct not_recoverable : std::runtime_error {
    explicit not_recoverable(const std::string& what) : std::runtime_error(what) {}
};

// Formal exponent i*lambda + j (a third coefficient of lambda' appears only
// transiently inside composition proofs and is not stored). Comparisons are
// delegated to the slope.
struct ExponentVec {
    Int i;  // coefficient of lambda
    Int j;  // coefficient of 1

    friend bool operator==(const ExponentVec&, const ExponentVec&) = default;
    friend ExponentVec operator+(const ExponentVec& x, const ExponentVec& y) {
        return {x.i + y.i, x.j + y.j};
    }
    friend std::ostream& operator<<(std::ostream& os, const ExponentVec& e) {
        return os << e.i.str() << "*lambda+" << e.j.str();
    }
};

// sign of (x - y) evaluated under lambda
inline int exponent_compare(const ExponentVec& x, const ExponentVec& y, const Slope& lambda) {
    return lambda.compare(x.i, x.j, y.i, y.j);
}

// Psi(lambda) = (R(lambda), l, r) with l(q) = q^lambda and r(q) = q.
class ReducedCorrespondence {
public:
    explicit ReducedCorrespondence(Slope lambda)
        : slope_(std::move(lambda)), ell_{1, 0}, r_{0, 1} {}

    const Slope& slope() const { return slope_; }
    const ExponentVec& ell_generator() const { return ell_; }
    const ExponentVec& r_generator() const { return r_; }

    // exponent of l(q^n) q^alpha = q^{alpha + n lambda}
    ExponentVec apply_ell(const Int& n, const ExponentVec& alpha) const {
        return ExponentVec{alpha.i + n, alpha.j};
    }
    // exponent of r(q^n) q^alpha = q^{alpha + n}
    ExponentVec apply_r(const Int& n, const ExponentVec& alpha) const {
        return ExponentVec{alpha.i, alpha.j + n};
    }

    // l and r coincide as semiring maps exactly for the identity correspondence
    bool ell_equals_r() const { return exponent_compare(ell_, r_, slope_) == 0; }

private:
    Slope slope_;
    ExponentVec ell_, r_;
};

inline ReducedCorrespondence make_correspondence(Slope lambda) {
    return ReducedCorrespondence(std::move(lambda));
}

// Exponent alpha + beta*eps of a germ at eps = 0+. Addition is the
// lexicographic min, multiplication adds componentwise; exact for the
// linear-exponent germs produced by composition.
struct GermExponent {
    Rational value;
    Rational eps_slope;

    friend bool operator==(const GermExponent&, const GermExponent&) = default;
    friend std::ostream& operator<<(std::ostream& os, const GermExponent& g) {
        return os << to_string(g.value) << "+" << to_string(g.eps_slope) << "*eps";
    }
};

inline GermExponent germ_add(const GermExponent& x, const GermExponent& y) {
    if (x.value != y.value) return x.value < y.value ? x : y;
    return x.eps_slope <= y.eps_slope ? x : y;
}

inline GermExponent germ_mul(const GermExponent& x, const GermExponent& y) {
    return {x.value + y.value, x.eps_slope + y.eps_slope};
}

// In a characteristic-one semifield the additive span of Z^0, ..., Z^n
// collapses: a sum over S of Z^k equals Z^{min S} + Z^{max S}.
inline std::pair<Int, Int> span_reduce(const std::set<Int>& s) {
    if (s.empty()) throw std::domain_error("span_reduce: empty set");
    return {*s.begin(), *s.rbegin()};
}

// Finite presentation of the range of mu o Fr_{n,m}: generated by X = q^n and
// Y = q^m subject to X^m = Y^n, the addition coming from the total order.
struct Presentation {
    Int n, m;  // X = q^n, Y = q^m; relation X^m = Y^n

    friend bool operator==(const Presentation&, const Presentation&) = default;
};

inline Presentation presentation(Int n, Int m) {
    if (n < 1 || m < 1) throw std::domain_error("presentation: n, m must be >= 1");
    return {std::move(n), std::move(m)};
}

// Recover {n, m} as the two indecomposable elements of the multiplicative
// monoid {n a + m b | a, b >= 0}, by brute-force decomposition search. Fails
// for n = 1 or m = 1, where only one indecomposable exists.
inline std::pair<Int, Int> recover_pair(const Presentation& p) {
    const long long n = p.n.convert_to<long long>();
    const long long m = p.m.convert_to<long long>();
    if (n == 1 || m == 1)
        throw not_recoverable("recover_pair: presentations with a unit generator are ambiguous");
    const long long bound = n * m;
    std::vector<char> member(static_cast<std::size_t>(bound) + 1, 0);
    for (long long a = 0; a * n <= bound; ++a)
        for (long long b = 0; a * n + b * m <= bound; ++b) member[a * n + b * m] = 1;
    std::vector<long long> indec;
    for (long long s = 1; s <= bound; ++s) {
        if (!member[s]) continue;
        bool decomposable = false;
        for (long long t = 1; t < s && !decomposable; ++t)
            if (member[t] && member[s - t]) decomposable = true;
        if (!decomposable) indec.push_back(s);
    }
    if (indec.size() != 2)
        throw not_recoverable("recover_pair: expected exactly two indecomposables, found "
                              + std::to_string(indec.size()));
    return {Int(indec[0]), Int(indec[1])};
}

// Result of composing two Frobenius correspondences. The generator l(q) has
// germ exponent lambda*(1 + eps) in the deformed cases and plain lambda
// otherwise; r(q) always has exponent 1 with no eps component.
class ComposedCorrespondence {
public:
    enum class Kind { psi, id_eps_psi, id_eps };

    ComposedCorrespondence(Kind kind, Slope slope) : kind_(kind), slope_(std::move(slope)) {}

    Kind kind() const { return kind_; }
    const Slope& slope() const { return slope_; }

    bool deformed() const { return kind_ != Kind::psi; }

    // eps coefficient of the l(q) exponent; nonzero exactly in deformed cases,
    // where the product slope is rational.
    Rational ell_eps_slope() const {
        return deformed() ? slope_.rational_value() : Rational(0);
    }
    Rational r_eps_slope() const { return Rational(0); }

    // evaluation at eps = 0 forgets the deformation
    ReducedCorrespondence at_eps_zero() const { return ReducedCorrespondence(slope_); }

    // a plain composite is again a Frobenius correspondence
    ReducedCorrespondence as_psi() const {
        if (deformed())
            throw std::domain_error("ComposedCorrespondence: deformed result is not a plain correspondence");
        return ReducedCorrespondence(slope_);
    }

private:
    Kind kind_;
    Slope slope_;
};

// Composition law: Psi(lambda) o Psi(lambda') is Psi(lambda lambda') when the
// product is irrational or both factors are rational; two irrational factors
// with rational product yield Id_eps o Psi(lambda lambda'), degenerating to
// Id_eps itself when the product is 1. Factors whose product cannot be
// classified exactly (continued-fraction slopes) are refused.
inline ComposedCorrespondence compose(const ReducedCorrespondence& lhs,
                                      const ReducedCorrespondence& rhs) {
    const Slope product = lhs.slope() * rhs.slope();  // throws unsupported_slope_product for cf
    const bool both_rational = lhs.slope().is_rational() && rhs.slope().is_rational();
    if (!product.is_rational() || both_rational)
        return {ComposedCorrespondence::Kind::psi, product};
    if (product.rational_value() == 1)
        return {ComposedCorrespondence::Kind::id_eps, product};
    return {ComposedCorrespondence::Kind::id_eps_psi, product};
}

struct DedekindBracket {
    Rational lower, upper;  // lower < lambda <= upper
};

// Dedekind cut recovery from the comparisons X^a vs Y^b: over all fractions
// b/a with denominator a <= depth, the greatest below lambda and the least
// at-or-above it.
inline DedekindBracket dedekind_cut(const ReducedCorrespondence& corr, const Int& depth) {
    if (depth < 1) throw std::domain_error("dedekind_cut: depth must be >= 1");
    const Slope& lambda = corr.slope();
    std::optional<Rational> lower, upper;
    for (Int a = 1; a <= depth; ++a) {
        const Int f = lambda.floor_times(a);
        if (lambda.compare_to_rational(Rational(f, a)) == 0) {
            // exact hit: X^a = Y^f
            if (!upper || Rational(f, a) < *upper) upper = Rational(f, a);
            if (f >= 1 && (!lower || Rational(f - 1, a) > *lower)) lower = Rational(f - 1, a);
        } else {
            if (!lower || Rational(f, a) > *lower) lower = Rational(f, a);
            if (!upper || Rational(f + 1, a) < *upper) upper = Rational(f + 1, a);
        }
    }
    return {*lower, *upper};
}

// Continued-fraction variant: the bracket spanned by the first `levels`
// convergents of the slope (plus, for rational slopes that terminate early,
// the Stern-Brocot parent on the far side). Width shrinks like the product
// of consecutive convergent denominators.
inline DedekindBracket dedekind_cut_cf(const ReducedCorrespondence& corr, std::size_t levels) {
    if (levels < 1) throw std::domain_error("dedekind_cut_cf: levels must be >= 1");
    const Slope& lambda = corr.slope();
    std::vector<Rational> cand = lambda.convergents(levels);
    if (cand.size() >= 2 && cand.size() < levels) {
        // rational slope, fully expanded: add the parent mediant-neighbor
        const Rational& last = cand.back();
        const Rational& prev = cand[cand.size() - 2];
        cand.emplace_back(numerator(last) - numerator(prev),
                          denominator(last) - denominator(prev));
    }
    std::optional<Rational> lower, upper;
    for (const Rational& c : cand) {
        const int cmp = lambda.compare_to_rational(c);  // sign(lambda - c)
        if (cmp > 0) {
            if (!lower || c > *lower) lower = c;
        } else {
            if (!upper || c < *upper) upper = c;
        }
    }
    if (!lower) {
        const Rational& u = *upper;
        lower = u - Rational(1, denominator(u));
    }
    if (!upper) {
        const Rational& l = *lower;
        upper = l + Rational(1, denominator(l));
    }
    return {*lower, *upper};
}

}  // namespace charone
