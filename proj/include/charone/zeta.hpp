#pragma once

// Desk-scale numerical verification of the counting side of the arithmetic
// site: the counting distribution N(u) = u + 1 - d/du sum_rho u^{rho+1}/(rho+1)
// paired against test functions, the archimedean distribution kappa, the
// prime-power sums, and the Hasse-Weil / Soule limit formulas.
//
// N(u) is handled strictly as a distribution: only pairings <N, g> are ever
// computed (by parts, boundary terms vanishing on compact support); no
// pointwise values near the prime powers are exposed. All zeros are assumed
// simple, true for every known zero.

#include "numeric.hpp"
#include "quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <functional>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace charone {

// c = (log pi + gamma)/2, the regularization constant of the kappa distribution
inline double kappa_constant() {
    return 0.5 * (std::log(std::numbers::pi) + std::numbers::egamma);
}

// A smooth test function with compact support [lo, hi] inside (1, inf),
// evaluable together with its first derivative.
class TestFunction {
public:
    // exp(-(log(u/u0))^2 / (2 w^2)) restricted to u0 * e^{+-cut*w}, clamped
    // above 1; the truncation discontinuity is below e^{-cut^2/2}.
    static TestFunction log_gaussian_bump(double u0, double w, double cut = 8.0) {
        if (!(u0 > 1.0) || !(w > 0.0)) throw std::domain_error("TestFunction: need u0 > 1, w > 0");
        TestFunction f;
        f.lo_ = std::max(u0 * std::exp(-cut * w), 1.0 + 1e-9);
        f.hi_ = u0 * std::exp(cut * w);
        f.eval_ = [u0, w](double u) {
            const double x = std::log(u / u0) / w;
            return std::exp(-0.5 * x * x);
        };
        f.deriv_ = [u0, w](double u) {
            const double x = std::log(u / u0) / w;
            return std::exp(-0.5 * x * x) * (-x / (w * u));
        };
        return f;
    }

    static TestFunction from_callables(std::function<double(double)> value,
                                       std::function<double(double)> derivative, double lo,
                                       double hi, double value_at_one = 0.0) {
        if (!(lo >= 1.0) || !(hi > lo)) throw std::domain_error("TestFunction: support must lie in [1, inf)");
        TestFunction f;
        f.lo_ = lo;
        f.hi_ = hi;
        f.eval_ = std::move(value);
        f.deriv_ = std::move(derivative);
        f.at_one_ = value_at_one;
        return f;
    }

    double lo() const { return lo_; }
    double hi() const { return hi_; }
    double value_at_one() const { return at_one_; }

    double operator()(double u) const { return (u <= lo_ || u >= hi_) ? 0.0 : eval_(u); }
    double derivative(double u) const { return (u <= lo_ || u >= hi_) ? 0.0 : deriv_(u); }

private:
    double lo_ = 0, hi_ = 0, at_one_ = 0.0;
    std::function<double(double)> eval_, deriv_;
};

// Imaginary parts of nontrivial zeros, loaded from a plain text file (one
// ordinate per line, '#' comments). Validated on load against the
// Riemann-von Mangoldt count (T/2pi) log(T/2pi) - T/2pi to within +-2.
class ZeroTable {
public:
    static ZeroTable from_ordinates(std::vector<double> ordinates) {
        ZeroTable t;
        t.ordinates_ = std::move(ordinates);
        t.validate();
        return t;
    }

    static ZeroTable load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("ZeroTable: cannot open " + path);
        std::vector<double> ord;
        std::string line;
        while (std::getline(in, line)) {
            const auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            std::istringstream ss(line);
            double v;
            if (ss >> v) ord.push_back(v);
        }
        return from_ordinates(std::move(ord));
    }

    const std::vector<double>& ordinates() const { return ordinates_; }
    std::size_t size() const { return ordinates_.size(); }

private:
    void validate() const {
        double prev = 14.0;
        for (std::size_t k = 0; k < ordinates_.size(); ++k) {
            const double t = ordinates_[k];
            if (!(t > prev))
                throw std::runtime_error("ZeroTable: ordinates must be increasing and > 14");
            prev = t;
            const double x = t / (2 * std::numbers::pi);
            const double expected = x * std::log(x) - x;
            if (std::abs(expected - double(k + 1)) > 2.0)
                throw std::runtime_error("ZeroTable: ordinate " + std::to_string(k + 1) +
                                         " fails the zero-counting sanity bound");
        }
    }

    std::vector<double> ordinates_;
};

struct PairingResult {
    double value = 0.0;
    double quad_error = 0.0;
};

// <kappa, f> = int_1^inf (u^2 f(u) - f(1))/(u^2 - 1) d*u + c f(1). For the
// compactly supported bumps f(1) = 0 and the integral loses the subtraction;
// the general form keeps it, with the analytic tail beyond the support.
inline PairingResult archimedean_pairing(const TestFunction& f) {
    const double f1 = f.value_at_one();
    if (f1 == 0.0) {
        auto r = integrate_dstar([&](double u) { return u * u * f(u) / (u * u - 1.0); },
                                 f.lo(), f.hi());
        return {r.value, r.error};
    }
    auto r = integrate_dstar([&](double u) { return (u * u * f(u) - f1) / (u * u - 1.0); },
                             1.0, f.hi());
    const double h = f.hi();
    const double tail = -0.5 * f1 * std::log(h * h / (h * h - 1.0));
    return {r.value + tail + kappa_constant() * f1, r.error};
}

// sum over primes p <= p_max and m >= 1 of log p * g(p^m); exact truncation
// because the support is compact, provided p_max covers it.
inline PairingResult prime_pairing(const TestFunction& g, std::uint64_t p_max) {
    if (double(p_max) < g.hi())
        throw std::domain_error("prime_pairing: prime bound " + std::to_string(p_max) +
                                " does not cover the support (hi = " + std::to_string(g.hi()) + ")");
    double acc = 0.0;
    for (std::uint64_t p : primes_up_to(p_max)) {
        const double logp = std::log(double(p));
        double pm = double(p);
        while (pm < g.hi()) {
            acc += logp * g(pm);
            pm *= double(p);
        }
    }
    return {acc, 0.0};
}

struct ZeroSideResult {
    double value = 0.0;
    double quad_error = 0.0;
    double imag_residue = 0.0;  // of the conjugate-paired zero sum
};

// <N, g> = int (u+1) g(u) d*u + sum_{k<=K} [I(rho_k) + I(conj rho_k)] with
// I(rho) = (1/(rho+1)) int u^{rho+1} (g(u)/u)' du, after one integration by
// parts (boundary terms vanish on the compact support).
inline ZeroSideResult zero_side_pairing(const TestFunction& g, const ZeroTable& zeros,
                                        std::size_t K) {
    if (K > zeros.size())
        throw std::domain_error("zero_side_pairing: requested more zeros than the table holds");
    ZeroSideResult out;
    auto main = integrate_dstar([&](double u) { return (u + 1.0) * g(u); }, g.lo(), g.hi());
    out.quad_error += main.error;

    // d/du (g(u)/u), in u coordinates
    auto dgu = [&](double u) { return (g.derivative(u) * u - g(u)) / (u * u); };

    std::complex<double> zsum = 0.0;
    for (std::size_t k = 0; k < K; ++k) {
        const double gam = zeros.ordinates()[k];
        // I(rho) integrand in d*u form: u^{3/2 + i gam} (g/u)'(u) * u
        auto re = integrate_dstar(
            [&](double u) {
                return u * std::sqrt(u) * std::cos(gam * std::log(u)) * dgu(u) * u;
            },
            g.lo(), g.hi());
        auto im = integrate_dstar(
            [&](double u) {
                return u * std::sqrt(u) * std::sin(gam * std::log(u)) * dgu(u) * u;
            },
            g.lo(), g.hi());
        out.quad_error += re.error + im.error;
        const std::complex<double> I{re.value, im.value};
        const std::complex<double> rho1{1.5, gam};
        zsum += I / rho1 + std::conj(I) / std::conj(rho1);
    }
    out.imag_residue = std::abs(zsum.imag());
    out.value = main.value + zsum.real();
    return out;
}

struct CountingConfig {
    std::size_t zero_count = 100;
    std::uint64_t prime_bound = 50;
    double u_max = 1e6;       // truncation guard for the support
    double quad_tol = 1e-10;  // advisory; the integrators report their own errors

    void validate() const {
        if (zero_count == 0 || prime_bound < 2 || !(u_max > 1))
            throw std::domain_error("CountingConfig: invalid configuration");
    }
};

struct ExplicitFormulaReport {
    double zero_side = 0.0;
    double prime_side = 0.0;
    double arch_side = 0.0;
    double discrepancy = 0.0;           // |zero - (prime + arch)|
    double relative_discrepancy = 0.0;  // against |zero side|
    double quad_error = 0.0;
    double imag_residue = 0.0;
    std::size_t zeros_used = 0;
    bool zeros_assumed_simple = true;
};

inline ExplicitFormulaReport explicit_formula_check(const TestFunction& g, const ZeroTable& zeros,
                                                    const CountingConfig& cfg) {
    cfg.validate();
    if (g.hi() > cfg.u_max)
        throw std::domain_error("explicit_formula_check: support exceeds the truncation bound");
    ExplicitFormulaReport rep;
    auto zs = zero_side_pairing(g, zeros, cfg.zero_count);
    auto ps = prime_pairing(g, cfg.prime_bound);
    auto as = archimedean_pairing(g);
    rep.zero_side = zs.value;
    rep.prime_side = ps.value;
    rep.arch_side = as.value;
    rep.discrepancy = std::abs(zs.value - (ps.value + as.value));
    rep.relative_discrepancy =
        rep.zero_side != 0.0 ? rep.discrepancy / std::abs(rep.zero_side) : rep.discrepancy;
    rep.quad_error = zs.quad_error + ps.quad_error + as.quad_error;
    rep.imag_residue = zs.imag_residue;
    rep.zeros_used = cfg.zero_count;
    return rep;
}

// A counting function N(u); polynomial coefficients (N(u) = sum c_k u^k)
// unlock analytic tails in the integral transforms.
struct CountingFunction {
    std::function<double(double)> eval;
    std::optional<std::vector<double>> poly;  // c_0, c_1, ...

    static CountingFunction polynomial(std::vector<double> coeffs) {
        CountingFunction n;
        auto c = coeffs;
        n.eval = [c](double u) {
            double acc = 0.0, p = 1.0;
            for (double ck : c) { acc += ck * p; p *= u; }
            return acc;
        };
        n.poly = std::move(coeffs);
        return n;
    }

    double growth_degree() const {
        if (!poly) return std::numeric_limits<double>::infinity();
        for (std::size_t k = poly->size(); k-- > 0;)
            if ((*poly)[k] != 0.0) return double(k);
        return 0.0;
    }
};

struct SeriesResult {
    double value = 0.0;
    double tail_bound = 0.0;
    std::size_t terms = 0;
};

namespace detail {

// sum_{r >= 1} term(r), truncated when the geometric tail estimate drops
// below tol; growth of successive terms signals divergence.
template <typename Term>
SeriesResult sum_series(Term&& term, double tol, const char* who) {
    SeriesResult out;
    double prev = 0.0;
    int growing = 0;
    for (std::size_t r = 1; r <= 2'000'000; ++r) {
        const double t = term(r);
        out.value += t;
        out.terms = r;
        const double at = std::abs(t);
        if (r > 1) {
            if (at > std::abs(prev)) {
                if (++growing > 24) throw std::domain_error(std::string(who) + ": series diverges");
            } else {
                growing = 0;
            }
            const double ratio = std::abs(prev) > 0 ? std::min(at / std::abs(prev), 0.999999) : 0.0;
            out.tail_bound = at * ratio / (1.0 - ratio);
            if (r > 8 && out.tail_bound < tol && at < tol) return out;
        }
        prev = t;
    }
    throw std::domain_error(std::string(who) + ": series did not converge within the term budget");
}

}  // namespace detail

// Z(q, T) = exp(sum_{r>=1} N(q^r) T^r / r), q > 1 (finite-field convention)
inline SeriesResult hasse_weil_Z(double q, double T, const CountingFunction& N,
                                 double tol = 1e-14) {
    if (!(q > 1)) throw std::domain_error("hasse_weil_Z: q must exceed 1");
    auto s = detail::sum_series(
        [&](std::size_t r) { return N.eval(std::pow(q, double(r))) * std::pow(T, double(r)) / double(r); },
        tol, "hasse_weil_Z");
    // exp maps an additive tail bound to a relative one
    return {std::exp(s.value), std::abs(std::exp(s.value)) * s.tail_bound, s.terms};
}

// F(q, s) = -d/ds sum_{r>=1} N(q^r) q^{-rs}/r = sum_{r>=1} N(q^r) q^{-rs} log q,
// the Soule expression whose q -> 1 limit is int_1^inf N(u) u^{-s} d*u.
inline SeriesResult soule_F(double q, double s, const CountingFunction& N, double tol = 1e-14) {
    if (!(q > 1)) throw std::domain_error("soule_F: q must exceed 1");
    if (s <= N.growth_degree())
        throw std::domain_error("soule_F: s must exceed the growth degree of N");
    const double logq = std::log(q);
    return detail::sum_series(
        [&](std::size_t r) { return N.eval(std::pow(q, double(r))) * std::pow(q, -double(r) * s) * logq; },
        tol, "soule_F");
}

// int_1^inf N(u) u^{-s} d*u, i.e. -d/ds log zeta_N(s): numeric head on
// [1, U] plus the analytic tail when N is polynomial.
inline PairingResult zeta_log_derivative(const CountingFunction& N, double s,
                                         double split = 20.0) {
    if (!N.poly)
        throw std::domain_error("zeta_log_derivative: analytic tail needs a polynomial N");
    if (s <= N.growth_degree())
        throw std::domain_error("zeta_log_derivative: s must exceed the growth degree of N");
    auto head = integrate_dstar([&](double u) { return N.eval(u) * std::pow(u, -s); }, 1.0, split);
    double tail = 0.0;
    const auto& c = *N.poly;
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0.0) continue;
        // int_U^inf u^k u^{-s} d*u = U^{k-s} / (s-k)
        tail += c[k] * std::pow(split, double(k) - s) / (s - double(k));
    }
    return {head.value + tail, head.error};
}

}  // namespace charone
