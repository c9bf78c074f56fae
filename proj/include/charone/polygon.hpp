#pragma once

// The reduced square: Newton polygons, i.e. convex staircases C = conv(P) + Q
// (Q the positive quadrant) with integer extreme points, held as the strictly
// convex chain of extremes (first coordinates strictly increasing, second
// strictly decreasing, edge slopes strictly increasing). Addition is the
// convex hull of the union, multiplication the Minkowski sum; the semiring is
// multiplicatively cancellative and is the quotient of the staircase semiring
// by the reduction gamma (convex hull), with sigma(a, b) supplying the
// cancellation witnesses.
//
// All geometry uses exact integer orientation predicates; no floating point.

#include "staircase.hpp"

#include <algorithm>
#include <ostream>
#include <vector>

namespace charone {

struct hull_mismatch : std::runtime_error {
    explicit hull_mismatch(const std::string& what) : std::runtime_error(what) {}
};

// cross product of (q - p) with (r - q); > 0 means the chain turns left at q,
// i.e. q is a genuine extreme of the lower-left boundary
inline Int orientation(const Corner& p, const Corner& q, const Corner& r) {
    return (q.a - p.a) * (r.b - q.b) - (q.b - p.b) * (r.a - q.a);
}

class NewtonPolygon {
public:
    NewtonPolygon() = default;  // zero (empty set)

    static NewtonPolygon zero() { return {}; }
    static NewtonPolygon unit() { return from_points({{0, 0}}); }

    // extreme points of conv(points) + Q
    static NewtonPolygon from_points(std::vector<Corner> points) {
        NewtonPolygon p;
        auto chain = Staircase::canonical_antichain(std::move(points));
        // monotone chain over the antichain; collinear middles are dropped
        std::vector<Corner> hull;
        for (auto& c : chain) {
            while (hull.size() >= 2 && orientation(hull[hull.size() - 2], hull.back(), c) <= 0)
                hull.pop_back();
            hull.push_back(std::move(c));
        }
        p.extremes_ = std::move(hull);
        return p;
    }

    // trusted constructor for chains already in canonical convex position
    static NewtonPolygon from_convex_chain(std::vector<Corner> chain) {
        NewtonPolygon p;
        p.extremes_ = std::move(chain);
        return p;
    }

    bool is_zero() const { return extremes_.empty(); }
    const std::vector<Corner>& extremes() const { return extremes_; }

    // lattice membership in the region conv(extremes) + Q
    bool contains(const Corner& p) const {
        if (extremes_.empty()) return false;
        if (p.a < extremes_.front().a || p.b < extremes_.back().b) return false;
        // find the boundary piece under p's abscissa
        std::size_t i = 0;
        while (i + 1 < extremes_.size() && extremes_[i + 1].a <= p.a) ++i;
        if (i + 1 == extremes_.size()) return p.b >= extremes_[i].b;
        // segment from extremes_[i] to extremes_[i+1]: p on or above it
        return orientation(extremes_[i], extremes_[i + 1], p) >= 0;
    }

    friend bool operator==(const NewtonPolygon&, const NewtonPolygon&) = default;

    friend std::ostream& operator<<(std::ostream& os, const NewtonPolygon& p) {
        os << "conv{";
        for (std::size_t i = 0; i < p.extremes_.size(); ++i) os << (i ? " " : "") << p.extremes_[i];
        return os << "}";
    }

private:
    std::vector<Corner> extremes_;
};

// the reduction homomorphism: convex hull of a staircase
inline NewtonPolygon gamma(const Staircase& e) {
    return NewtonPolygon::from_points(e.corners());
}

inline NewtonPolygon poly_add(const NewtonPolygon& x, const NewtonPolygon& y) {
    std::vector<Corner> pts = x.extremes();
    pts.insert(pts.end(), y.extremes().begin(), y.extremes().end());
    return NewtonPolygon::from_points(std::move(pts));
}

// Minkowski sum by merging the two edge chains in slope order. Both chains
// have edge slopes strictly increasing, so a single merge pass yields the
// strictly convex result; equal-slope edges coalesce.
inline NewtonPolygon poly_mul(const NewtonPolygon& x, const NewtonPolygon& y) {
    if (x.is_zero() || y.is_zero()) return NewtonPolygon::zero();
    const auto& ex = x.extremes();
    const auto& ey = y.extremes();
    std::vector<Corner> out;
    out.push_back(ex.front() + ey.front());
    std::size_t i = 0, j = 0;
    auto edge = [](const std::vector<Corner>& v, std::size_t k) {
        return Corner{v[k + 1].a - v[k].a, v[k + 1].b - v[k].b};
    };
    while (i + 1 < ex.size() || j + 1 < ey.size()) {
        Corner step;
        if (i + 1 == ex.size()) {
            step = edge(ey, j++);
        } else if (j + 1 == ey.size()) {
            step = edge(ex, i++);
        } else {
            const Corner u = edge(ex, i), v = edge(ey, j);
            const Int cross = u.a * v.b - u.b * v.a;
            if (cross > 0) { step = u; ++i; }
            else if (cross < 0) { step = v; ++j; }
            else { step = u + v; ++i; ++j; }
        }
        out.push_back(out.back() + step);
    }
    // the merged chain is strictly convex and sorted by construction
    return NewtonPolygon::from_convex_chain(std::move(out));
}

inline NewtonPolygon poly_pow(const NewtonPolygon& x, unsigned n) {
    NewtonPolygon acc = NewtonPolygon::unit();
    for (unsigned k = 0; k < n; ++k) acc = poly_mul(acc, x);
    return acc;
}

// sigma(a, b): the staircase discretization of the segment from (a, 0) to
// (0, b), with points (a - j, ceil(b j / a)) for 0 <= j <= a.
inline Staircase sigma(const Int& a, const Int& b) {
    if (a < 1 || b < 1) throw std::domain_error("sigma: a, b must be >= 1");
    std::vector<Corner> pts;
    for (Int j = 0; j <= a; ++j) pts.push_back({a - j, ceil_div(b * j, a)});
    return Staircase::from_points(std::move(pts));
}

// equality in the reduced square
inline bool reduced_equal(const Staircase& x, const Staircase& y) {
    return gamma(x) == gamma(y);
}

// An element of the reduced square carried together with an unreduced
// representative: equality and hashing-style questions go through the hull,
// arithmetic updates both levels (the hull directly, the representative
// through the staircase operations).
class ReducedClass {
public:
    explicit ReducedClass(Staircase representative)
        : rep_(std::move(representative)), hull_(gamma(rep_)) {}

    const Staircase& representative() const { return rep_; }
    const NewtonPolygon& hull() const { return hull_; }

    friend bool operator==(const ReducedClass& x, const ReducedClass& y) {
        return x.hull_ == y.hull_;
    }

    friend ReducedClass reduced_add(const ReducedClass& x, const ReducedClass& y) {
        ReducedClass r(sq_add(x.rep_, y.rep_));
        r.hull_ = poly_add(x.hull_, y.hull_);
        return r;
    }

    friend ReducedClass reduced_mul(const ReducedClass& x, const ReducedClass& y) {
        ReducedClass r(sq_mul(x.rep_, y.rep_));
        r.hull_ = poly_mul(x.hull_, y.hull_);
        return r;
    }

private:
    Staircase rep_;
    NewtonPolygon hull_;
};

// For staircases with a common convex hull, a nonzero c with x c = y c,
// built as the product of the sigma witnesses of consecutive hull edges.
// Translation-invariant, so corners anywhere in Z x Z are accepted.
inline Staircase cancellation_witness(const Staircase& x, const Staircase& y) {
    if (x.is_zero() || y.is_zero())
        throw std::domain_error("cancellation_witness: zero staircase");
    const NewtonPolygon hx = gamma(x);
    if (hx != gamma(y))
        throw hull_mismatch("cancellation_witness: staircases have different hulls");
    const auto& e = hx.extremes();
    Staircase c = Staircase::unit();
    for (std::size_t i = 0; i + 1 < e.size(); ++i)
        c = sq_mul(c, sigma(e[i + 1].a - e[i].a, e[i].b - e[i + 1].b));
    return c;
}

}  // namespace charone
