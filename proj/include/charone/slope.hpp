#pragma once

// Exact representation of a positive real slope lambda, supporting the sign
// test sign(lambda*u + v) for integer u, v without floating point. Three
// carriers:
//
//   rational    lambda = n/m in lowest terms
//   quadratic   lambda = a + b*sqrt(d), a, b rational, d > 1 squarefree
//   cf          a finite continued-fraction prefix [a0; a1, ..., ak]; the
//               slope is only known to lie in the interval of reals sharing
//               that prefix, so a comparison is answered only when every
//               slope in the interval agrees on it, and otherwise fails
//               loudly with depth_exceeded.
//
// The cf interval has the last convergent p_k/q_k and the mediant
// (p_k+p_{k-1})/(q_k+q_{k-1}) as endpoints; a linear form lambda*u + v is
// monotone in lambda, so strict sign agreement at both endpoints decides it.
// Comparisons with |u| < q_k are always decidable (best-approximation
// property of convergents).

#include "numeric.hpp"

#include <cmath>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <variant>
#include <vector>

namespace charone {

struct depth_exceeded : std::runtime_error {
    explicit depth_exceeded(const std::string& what) : std::runtime_error(what) {}
};

struct unsupported_slope_product : std::runtime_error {
    explicit unsupported_slope_product(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

// sign of x + y*sqrt(d), x and y rational, d > 1 and squarefree.
inline int sign_quadratic(const Rational& x, const Rational& y, const Int& d) {
    const int sx = sign(x), sy = sign(y);
    if (sy == 0) return sx;
    if (sx == 0) return sy;
    if (sx == sy) return sx;
    // opposite signs: compare x^2 against y^2 d
    const int cmp = sign(Rational(x * x) - Rational(y * y) * d);
    return cmp == 0 ? 0 : cmp * sx;
}

}  // namespace detail

class Slope {
public:
    struct RationalRep {
        Rational value;  // > 0
    };
    struct QuadraticRep {
        Rational a, b;  // value = a + b*sqrt(d), b != 0
        Int d;          // squarefree, > 1
    };
    struct CFRep {
        std::vector<Int> terms;       // [a0; a1, ..., ak], a0 >= 0, a_i >= 1 for i > 0
        Int p_prev, q_prev;           // convergent k-1
        Int p_last, q_last;           // convergent k
    };

    static Slope rational(Rational v) {
        if (v <= 0) throw std::domain_error("Slope: value must be positive");
        return Slope(RationalRep{std::move(v)});
    }
    static Slope rational(Int num, Int den) { return rational(Rational(std::move(num), std::move(den))); }

    // a + b*sqrt(d); d need not be squarefree (the square part is absorbed
    // into b), and b = 0 or d collapsing to 1 degrades to a rational slope.
    static Slope quadratic(Rational a, Rational b, Int d) {
        if (d <= 0) throw std::domain_error("Slope: radicand must be positive");
        auto [outer, core] = squarefree_split(d);
        b *= outer;
        if (b == 0) return rational(std::move(a));
        if (core == 1) return rational(a + b);
        if (detail::sign_quadratic(a, b, core) <= 0)
            throw std::domain_error("Slope: value must be positive");
        return Slope(QuadraticRep{std::move(a), std::move(b), std::move(core)});
    }

    static Slope sqrt_of(Int d) { return quadratic(Rational(0), Rational(1), std::move(d)); }

    static Slope continued_fraction(std::vector<Int> terms) {
        if (terms.empty()) throw std::domain_error("Slope: empty continued fraction");
        if (terms[0] < 0) throw std::domain_error("Slope: cf must describe a positive value");
        for (std::size_t i = 1; i < terms.size(); ++i)
            if (terms[i] < 1) throw std::domain_error("Slope: cf terms after the first must be >= 1");
        CFRep rep;
        rep.terms = std::move(terms);
        Int pp = 1, qp = 0, p = rep.terms[0], q = 1;
        for (std::size_t i = 1; i < rep.terms.size(); ++i) {
            Int np = rep.terms[i] * p + pp, nq = rep.terms[i] * q + qp;
            pp = p; qp = q; p = np; q = nq;
        }
        rep.p_prev = pp; rep.q_prev = qp; rep.p_last = p; rep.q_last = q;
        if (p == 0) throw std::domain_error("Slope: cf must describe a positive value");
        return Slope(std::move(rep));
    }

    bool is_rational() const { return std::holds_alternative<RationalRep>(rep_); }
    bool is_quadratic() const { return std::holds_alternative<QuadraticRep>(rep_); }
    bool is_cf() const { return std::holds_alternative<CFRep>(rep_); }

    const Rational& rational_value() const {
        if (!is_rational()) throw std::domain_error("Slope: not rational");
        return std::get<RationalRep>(rep_).value;
    }
    const QuadraticRep& quadratic_rep() const { return std::get<QuadraticRep>(rep_); }
    const CFRep& cf_rep() const { return std::get<CFRep>(rep_); }

    // sign(lambda*u + v), exact. Throws depth_exceeded for a cf slope whose
    // prefix does not pin the answer down.
    int sign_linear(const Int& u, const Int& v) const {
        if (const auto* r = std::get_if<RationalRep>(&rep_))
            return sign(Int(u * numerator(r->value) + v * denominator(r->value)));
        if (const auto* qd = std::get_if<QuadraticRep>(&rep_))
            return detail::sign_quadratic(qd->a * u + v, qd->b * u, qd->d);
        const auto& cf = std::get<CFRep>(rep_);
        const int s1 = sign(Int(u * cf.p_last + v * cf.q_last));
        const int s2 = sign(Int(u * (cf.p_last + cf.p_prev) + v * (cf.q_last + cf.q_prev)));
        if (s1 == 0 && s2 == 0) return 0;  // u = v = 0
        if (s1 == s2) return s1;
        throw depth_exceeded("Slope: continued-fraction depth insufficient to decide sign("
                             + u.str() + "*lambda + " + v.str() + ")");
    }

    // sign(lambda*(i-i2) + (j-j2)): the exact predicate ordering two formal
    // values lambda*i + j.
    int compare(const Int& i, const Int& j, const Int& i2, const Int& j2) const {
        return sign_linear(i - i2, j - j2);
    }

    // sign(lambda - r)
    int compare_to_rational(const Rational& r) const {
        return sign_linear(denominator(r), -numerator(r));
    }

    // Comparisons sign(lambda*u + v) with |u| below this bound never throw.
    Int decidable_abscissa_bound() const {
        if (const auto* cf = std::get_if<CFRep>(&rep_)) return cf->q_last;
        throw std::domain_error("Slope: decidable_abscissa_bound is cf-specific");
    }

    // floor(lambda * a) for a >= 1, exact.
    Int floor_times(const Int& a) const {
        if (a < 1) throw std::domain_error("Slope: floor_times needs a >= 1");
        if (const auto* r = std::get_if<RationalRep>(&rep_))
            return floor_rat(r->value * a);
        if (is_quadratic()) {
            Int n = Int(static_cast<long long>(std::floor(to_double() * a.convert_to<double>())));
            // exact adjustment around the floating guess
            while (sign_linear(a, -(n + 1)) >= 0) ++n;   // lambda*a >= n+1
            while (sign_linear(a, -n) < 0) --n;          // lambda*a < n
            return n;
        }
        const auto& cf = std::get<CFRep>(rep_);
        Int f1 = floor_div(a * cf.p_last, cf.q_last);
        Int f2 = floor_div(a * (cf.p_last + cf.p_prev), cf.q_last + cf.q_prev);
        if (f1 == f2) return f1;
        throw depth_exceeded("Slope: continued-fraction depth insufficient for floor(lambda*"
                             + a.str() + ")");
    }

    // Convergents p_1/q_1, ..., available exactly for rational and cf slopes;
    // for quadratic slopes they are generated from the expansion on demand.
    std::vector<Rational> convergents(std::size_t count) const;

    double to_double() const {
        if (const auto* r = std::get_if<RationalRep>(&rep_))
            return r->value.convert_to<double>();
        if (const auto* qd = std::get_if<QuadraticRep>(&rep_))
            return qd->a.convert_to<double>()
                 + qd->b.convert_to<double>() * std::sqrt(qd->d.convert_to<double>());
        const auto& cf = std::get<CFRep>(rep_);
        return Rational(cf.p_last, cf.q_last).convert_to<double>();
    }

    // Exact product when representable in this carrier family; cf factors are
    // refused because the rationality of the product cannot be classified.
    friend Slope operator*(const Slope& x, const Slope& y) {
        if (x.is_cf() || y.is_cf())
            throw unsupported_slope_product("Slope: cannot classify a product involving a cf slope");
        if (x.is_rational() && y.is_rational())
            return rational(x.rational_value() * y.rational_value());
        if (x.is_rational() || y.is_rational()) {
            const Rational& r = x.is_rational() ? x.rational_value() : y.rational_value();
            const auto& qd = x.is_rational() ? y.quadratic_rep() : x.quadratic_rep();
            return quadratic(qd.a * r, qd.b * r, qd.d);
        }
        const auto& p = x.quadratic_rep();
        const auto& q = y.quadratic_rep();
        if (p.d == q.d)
            return make_quadratic_or_rational(p.a * q.a + p.b * q.b * p.d, p.a * q.b + p.b * q.a, p.d);
        if (p.a == 0 && q.a == 0) {
            auto [outer, core] = squarefree_split(p.d * q.d);
            return make_quadratic_or_rational(Rational(0), p.b * q.b * outer, core);
        }
        throw unsupported_slope_product(
            "Slope: product of quadratics over distinct radicands is not quadratic");
    }

    friend bool operator==(const Slope& x, const Slope& y) {
        if (x.rep_.index() != y.rep_.index()) {
            // a rational and a quadratic may still agree only if degenerate,
            // which construction rules out; cf slopes are identities only
            // structurally.
            return false;
        }
        if (x.is_rational()) return x.rational_value() == y.rational_value();
        if (x.is_quadratic()) {
            const auto& p = x.quadratic_rep();
            const auto& q = y.quadratic_rep();
            return p.a == q.a && p.b == q.b && p.d == q.d;
        }
        return x.cf_rep().terms == y.cf_rep().terms;
    }

    friend std::ostream& operator<<(std::ostream& os, const Slope& s) {
        if (s.is_rational()) return os << to_string(s.rational_value());
        if (s.is_quadratic()) {
            const auto& q = s.quadratic_rep();
            return os << to_string(q.a) << " + " << to_string(q.b) << "*sqrt(" << q.d.str() << ")";
        }
        os << "[";
        const auto& t = s.cf_rep().terms;
        for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i].str();
        return os << "]";
    }

private:
    explicit Slope(std::variant<RationalRep, QuadraticRep, CFRep> rep) : rep_(std::move(rep)) {}

    static Slope make_quadratic_or_rational(Rational a, Rational b, Int d) {
        if (b == 0) return rational(std::move(a));
        return quadratic(std::move(a), std::move(b), std::move(d));
    }

    std::variant<RationalRep, QuadraticRep, CFRep> rep_;
};

inline std::vector<Rational> Slope::convergents(std::size_t count) const {
    std::vector<Rational> out;
    Int pp = 1, qp = 0, p, q;
    auto push_term = [&](const Int& t) {
        if (out.empty()) { p = t; q = 1; }
        else { Int np = t * p + pp, nq = t * q + qp; pp = p; qp = q; p = np; q = nq; }
        out.emplace_back(p, q);
    };
    if (is_cf()) {
        const auto& t = cf_rep().terms;
        for (std::size_t i = 0; i < t.size() && out.size() < count; ++i) push_term(t[i]);
        return out;
    }
    if (is_rational()) {
        Int n = numerator(rational_value()), d = denominator(rational_value());
        while (out.size() < count && d != 0) {
            Int t = floor_div(n, d);
            push_term(t);
            Int r = n - t * d;
            n = d; d = r;
        }
        return out;
    }
    // quadratic: peel terms with exact floors of the tail
    // tail_0 = lambda; tail_{k+1} = 1/(tail_k - a_k)
    Rational A = quadratic_rep().a, B = quadratic_rep().b;
    const Int D = quadratic_rep().d;
    while (out.size() < count) {
        // floor(A + B sqrt D) via floating guess + exact check
        double guess = A.convert_to<double>() + B.convert_to<double>() * std::sqrt(D.convert_to<double>());
        Int t(static_cast<long long>(std::floor(guess)));
        while (detail::sign_quadratic(A - (t + 1), B, D) >= 0) ++t;
        while (detail::sign_quadratic(A - t, B, D) < 0) --t;
        push_term(t);
        // tail = 1/((A - t) + B sqrt D) = ((A-t) - B sqrt D) / ((A-t)^2 - B^2 D)
        Rational x = A - t;
        Rational denom = x * x - B * B * D;
        if (denom == 0) break;  // terminated: value was rational after all
        A = x / denom;
        B = -B / denom;
    }
    return out;
}

}  // namespace charone
