#pragma once

// The unreduced tensor square: hereditary subsets of Z x Z ("staircases"),
// each held in canonical form as the minimal antichain of corner points,
// sorted with first coordinates strictly increasing and second coordinates
// strictly decreasing. The empty corner list is the semiring zero. Addition
// is union, multiplication is Minkowski sum of corner sets, and the
// bi-Frobenius Fr_{n,m} scales the two coordinates independently.

#include "slope.hpp"
#include "tropical.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <vector>

namespace charone {

struct Corner {
    Int a, b;

    friend bool operator==(const Corner&, const Corner&) = default;
    friend Corner operator+(const Corner& x, const Corner& y) { return {x.a + y.a, x.b + y.b}; }
    friend std::ostream& operator<<(std::ostream& os, const Corner& c) {
        return os << "(" << c.a.str() << "," << c.b.str() << ")";
    }
};

class Staircase {
public:
    Staircase() = default;  // zero (empty set)

    static Staircase zero() { return {}; }
    static Staircase unit() { return simple(0, 0); }

    // the simple tensor q^a (x) q^b
    static Staircase simple(Int a, Int b) {
        Staircase s;
        s.corners_.push_back({std::move(a), std::move(b)});
        return s;
    }

    static Staircase from_points(std::vector<Corner> points) {
        Staircase s;
        s.corners_ = canonical_antichain(std::move(points));
        return s;
    }

    bool is_zero() const { return corners_.empty(); }
    const std::vector<Corner>& corners() const { return corners_; }

    bool in_positive_quadrant() const {
        for (const auto& c : corners_)
            if (c.a < 0 || c.b < 0) return false;
        return true;
    }

    // lattice membership in the represented hereditary set
    bool contains(const Corner& p) const {
        for (const auto& c : corners_)
            if (c.a <= p.a && c.b <= p.b) return true;
        return false;
    }

    friend bool operator==(const Staircase&, const Staircase&) = default;

    friend std::ostream& operator<<(std::ostream& os, const Staircase& s) {
        os << "{";
        for (std::size_t i = 0; i < s.corners_.size(); ++i) os << (i ? " " : "") << s.corners_[i];
        return os << "}";
    }

    // Minimal antichain: sort by (a, b), then keep points whose b strictly
    // undercuts everything already kept.
    static std::vector<Corner> canonical_antichain(std::vector<Corner> pts) {
        std::sort(pts.begin(), pts.end(), [](const Corner& x, const Corner& y) {
            return x.a != y.a ? x.a < y.a : x.b < y.b;
        });
        std::vector<Corner> out;
        for (auto& p : pts) {
            if (!out.empty() && out.back().b <= p.b) continue;  // dominated (covers equal points)
            out.push_back(std::move(p));
        }
        return out;
    }

private:
    std::vector<Corner> corners_;
};

inline Staircase canonicalize(std::vector<Corner> points) {
    return Staircase::from_points(std::move(points));
}

// E + F := E union F
inline Staircase sq_add(const Staircase& x, const Staircase& y) {
    std::vector<Corner> pts = x.corners();
    pts.insert(pts.end(), y.corners().begin(), y.corners().end());
    return Staircase::from_points(std::move(pts));
}

// E * F := {e + f}, all pairwise corner sums, re-canonicalized
inline Staircase sq_mul(const Staircase& x, const Staircase& y) {
    if (x.is_zero() || y.is_zero()) return Staircase::zero();
    std::vector<Corner> pts;
    pts.reserve(x.corners().size() * y.corners().size());
    for (const auto& e : x.corners())
        for (const auto& f : y.corners()) pts.push_back(e + f);
    return Staircase::from_points(std::move(pts));
}

inline Staircase sq_pow(const Staircase& x, unsigned n) {
    Staircase acc = Staircase::unit();
    for (unsigned i = 0; i < n; ++i) acc = sq_mul(acc, x);
    return acc;
}

// Fr_{n,m}: (a, b) -> (n a, m b)
inline Staircase sq_frobenius(const Staircase& x, const Int& n, const Int& m) {
    if (n < 1 || m < 1) throw std::domain_error("sq_frobenius: n, m must be >= 1");
    std::vector<Corner> pts;
    pts.reserve(x.corners().size());
    for (const auto& c : x.corners()) pts.push_back({n * c.a, m * c.b});
    return Staircase::from_points(std::move(pts));
}

// mu: the diagonal semiring homomorphism to Z_min, q^a (x) q^b -> q^{a+b}
inline ZminElem sq_mu(const Staircase& x) {
    if (x.is_zero()) return ZminElem::zero();
    Int best = x.corners()[0].a + x.corners()[0].b;
    for (const auto& c : x.corners()) best = std::min(best, Int(c.a + c.b));
    return ZminElem(best);
}

// Result of minimizing the linear form L_lambda(a, b) = lambda*a + b over the
// corners. The corner is the formal value; for rational slopes the exact
// rational value is also available.
struct EvalResult {
    Corner argmin;
    std::optional<Rational> rational_value;
};

// The evaluation F(lambda, q): value is inf over corners of lambda*a + b. For
// rational slopes ties on the value are broken toward the smallest first
// coordinate; for irrational slopes the minimizer is unique.
inline EvalResult sq_evaluate(const Staircase& x, const Slope& lambda) {
    if (x.is_zero()) throw std::domain_error("sq_evaluate: zero staircase");
    const auto& cs = x.corners();
    std::size_t best = 0;
    for (std::size_t i = 1; i < cs.size(); ++i) {
        // corners are sorted by ascending a, so keeping the incumbent on a
        // tie realizes the smallest-abscissa rule
        if (lambda.compare(cs[i].a, cs[i].b, cs[best].a, cs[best].b) < 0) best = i;
    }
    EvalResult res{cs[best], std::nullopt};
    if (lambda.is_rational())
        res.rational_value = lambda.rational_value() * Rational(cs[best].a) + Rational(cs[best].b);
    return res;
}

// Congruence under F(lambda, q): equality of the minimal values.
inline bool sq_congruent(const Staircase& x, const Staircase& y, const Slope& lambda) {
    if (x.is_zero() || y.is_zero()) return x.is_zero() == y.is_zero();
    const Corner cx = sq_evaluate(x, lambda).argmin;
    const Corner cy = sq_evaluate(y, lambda).argmin;
    return lambda.compare(cx.a, cx.b, cy.a, cy.b) == 0;
}

// the two corner embeddings of Z_min^+
inline Staircase iota1(Int n) { return Staircase::simple(std::move(n), 0); }
inline Staircase iota2(Int n) { return Staircase::simple(0, std::move(n)); }

}  // namespace charone
