#pragma once

// Adaptive Gauss-Kronrod integration in logarithmic coordinates: every
// integral in the zeta module is of the form  int X(u) d*u  with d*u = du/u
// over a sub-interval of [1, inf), and the integrands are smooth bumps (or
// oscillations) in log u, so the substitution t = log u is made once here.

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <stdexcept>

namespace charone {

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;  // estimate reported by the integrator
};

// int_{lo}^{hi} X(u) d*u, computed as int X(e^t) dt on [log lo, log hi]
template <typename F>
QuadratureResult integrate_dstar(F&& integrand_u, double lo, double hi,
                                 unsigned max_depth = 15, double tol = 1e-10) {
    if (!(lo > 0) || !(hi >= lo)) throw std::domain_error("integrate_dstar: bad interval");
    if (hi == lo) return {0.0, 0.0};
    QuadratureResult r;
    r.value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        [&](double t) { return integrand_u(std::exp(t)); }, std::log(lo), std::log(hi),
        max_depth, tol, &r.error);
    return r;
}

// plain du integral, same machinery, for test oracles and tails
template <typename F>
QuadratureResult integrate_du(F&& integrand_u, double lo, double hi,
                              unsigned max_depth = 15, double tol = 1e-10) {
    return integrate_dstar([&](double u) { return integrand_u(u) * u; }, lo, hi, max_depth, tol);
}

}  // namespace charone
