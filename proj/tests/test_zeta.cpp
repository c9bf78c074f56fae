#include <charone/zeta.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

using namespace charone;

namespace {

const std::string zeros_path = std::string(CHARONE_DATA_DIR) + "/zeros.txt";

// independent oracle: composite Simpson on a fixed fine grid, in plain u
template <typename F>
double simpson(F&& f, double lo, double hi, int panels = 20000) {
    const double h = (hi - lo) / panels;
    double acc = f(lo) + f(hi);
    for (int i = 1; i < panels; ++i) acc += f(lo + i * h) * (i % 2 ? 4.0 : 2.0);
    return acc * h / 3.0;
}

}  // namespace

TEST_CASE("test function bumps") {
    const auto g = TestFunction::log_gaussian_bump(3.0, 0.2);
    CHECK(g(3.0) == 1.0);
    CHECK(g(1.0) == 0.0);
    CHECK(g(100.0) == 0.0);
    CHECK(g.lo() > 1.0);
    // derivative is consistent with a finite difference
    const double fd = (g(2.5 + 1e-6) - g(2.5 - 1e-6)) / 2e-6;
    CHECK(std::abs(g.derivative(2.5) - fd) < 1e-5);
    CHECK_THROWS_AS(TestFunction::log_gaussian_bump(0.5, 0.2), std::domain_error);
}

TEST_CASE("zero table loads and validates") {
    const ZeroTable t = ZeroTable::load(zeros_path);
    REQUIRE(t.size() == 100);
    CHECK(std::abs(t.ordinates()[0] - 14.134725) < 1e-5);
    CHECK(std::abs(t.ordinates()[99] - 236.524230) < 1e-5);
    // decreasing or out-of-range ordinates are rejected
    CHECK_THROWS_AS(ZeroTable::from_ordinates({14.13, 13.0}), std::runtime_error);
    CHECK_THROWS_AS(ZeroTable::from_ordinates({200.0}), std::runtime_error);
}

TEST_CASE("quadrature error estimates are trustworthy under refinement") {
    const auto g = TestFunction::log_gaussian_bump(3.0, 0.2);
    auto integrand = [&](double u) { return (u + 1.0) * g(u); };
    const auto coarse = integrate_dstar(integrand, g.lo(), g.hi(), 8);
    const auto fine = integrate_dstar(integrand, g.lo(), g.hi(), 12);
    CHECK(std::abs(coarse.value - fine.value) <= std::max(coarse.error, 1e-14));
    const auto finer = integrate_dstar(integrand, g.lo(), g.hi(), 15);
    CHECK(std::abs(fine.value - finer.value) <= std::max(fine.error, 1e-14));
}

TEST_CASE("archimedean pairing against an independent quadrature") {
    // narrow bump supported well inside [2, 3], cut where the tail is ~1e-8
    const auto f = TestFunction::log_gaussian_bump(2.5, 0.028, 6.0);
    REQUIRE(f.lo() > 2.0);
    REQUIRE(f.hi() < 3.0);
    const auto got = archimedean_pairing(f);
    const double oracle = simpson([&](double u) { return u * f(u) / (u * u - 1.0); }, 2.0, 3.0);
    CHECK(std::abs(got.value - oracle) < 1e-8);
}

TEST_CASE("kappa constant enters through f(1)") {
    const double c = kappa_constant();
    CHECK(std::abs(c - 0.5 * (1.1447298858494002 + 0.5772156649015329)) < 1e-12);
    CHECK(std::abs(c - 0.8609727753754733) < 1e-12);
    // tabulated plateau with f(1) = 1: the pairing is the regularized
    // integral plus the analytic tail plus c
    auto flat = [](double) { return 1.0; };
    auto dflat = [](double) { return 0.0; };
    for (double delta : {0.5, 0.2, 0.1}) {
        const auto f = TestFunction::from_callables(flat, dflat, 1.0, 1.0 + delta, 1.0);
        const auto got = archimedean_pairing(f);
        const double h = 1.0 + delta;
        const double expected_tail = -0.5 * std::log(h * h / (h * h - 1.0));
        // for f == 1 the subtracted integrand is exactly 1/u: integral log h
        const double regularized = std::log(h);
        CHECK(std::abs(got.value - (regularized + expected_tail + c)) < 1e-6);
    }
}

TEST_CASE("prime pairing picks out prime powers") {
    const auto g2 = TestFunction::log_gaussian_bump(2.0, 0.1, 2.2);  // support ~ (1.6, 2.5)
    const auto r2 = prime_pairing(g2, 50);
    CHECK(std::abs(r2.value - std::log(2.0) * g2(2.0)) < 1e-12);

    const auto g6 = TestFunction::log_gaussian_bump(6.0, 0.02, 4.0);  // support ~ (5.54, 6.5)
    CHECK(prime_pairing(g6, 50).value == 0.0);  // 6 is not a prime power

    const auto g9 = TestFunction::log_gaussian_bump(9.0, 0.02, 2.6);  // support ~ (8.55, 9.47)
    const auto r9 = prime_pairing(g9, 50);
    CHECK(std::abs(r9.value - std::log(3.0) * g9(9.0)) < 1e-12);

    CHECK_THROWS_AS(prime_pairing(TestFunction::log_gaussian_bump(100.0, 0.1), 50),
                    std::domain_error);
}

TEST_CASE("the zero test function annihilates every pairing") {
    auto zero_fn = [](double) { return 0.0; };
    const auto f = TestFunction::from_callables(zero_fn, zero_fn, 2.0, 3.0, 0.0);
    const ZeroTable zeros = ZeroTable::load(zeros_path);
    CHECK(archimedean_pairing(f).value == 0.0);
    CHECK(prime_pairing(f, 50).value == 0.0);
    CHECK(zero_side_pairing(f, zeros, 10).value == 0.0);
    CountingConfig cfg;
    cfg.zero_count = 10;
    cfg.prime_bound = 50;
    const auto rep = explicit_formula_check(f, zeros, cfg);
    CHECK(rep.zero_side == 0.0);
    CHECK(rep.prime_side == 0.0);
    CHECK(rep.arch_side == 0.0);
    CHECK(rep.discrepancy == 0.0);
}

TEST_CASE("zero side pairing basics") {
    const ZeroTable zeros = ZeroTable::load(zeros_path);
    const auto g = TestFunction::log_gaussian_bump(3.0, 0.2);
    // K = 0 keeps only the (u+1) term
    const auto k0 = zero_side_pairing(g, zeros, 0);
    const double main_oracle =
        simpson([&](double u) { return (u + 1.0) * g(u) / u; }, g.lo(), g.hi());
    CHECK(std::abs(k0.value - main_oracle) < 1e-7);
    CHECK(k0.imag_residue < 1e-12);
    const auto k100 = zero_side_pairing(g, zeros, 100);
    CHECK(k100.imag_residue < 1e-12);
    CHECK(std::abs(k100.value - k0.value) < 0.1);  // zero corrections are small here
    CHECK_THROWS_AS(zero_side_pairing(g, zeros, 101), std::domain_error);
}

TEST_CASE("explicit formula balances at desk scale") {
    const ZeroTable zeros = ZeroTable::load(zeros_path);
    const auto g = TestFunction::log_gaussian_bump(3.0, 0.2);
    CountingConfig cfg;
    cfg.zero_count = 100;
    cfg.prime_bound = 50;
    const auto rep = explicit_formula_check(g, zeros, cfg);
    CHECK(rep.relative_discrepancy < 5e-2);
    CHECK(rep.relative_discrepancy < 1e-5);  // the residual is in fact far smaller
    CHECK(rep.imag_residue < 1e-12);

    // a bump centered at 2: the prime side is dominated by log 2
    const auto g2 = TestFunction::log_gaussian_bump(2.0, 0.1, 3.3);
    CountingConfig cfg2;
    cfg2.zero_count = 100;
    cfg2.prime_bound = 11;
    const auto rep2 = explicit_formula_check(g2, zeros, cfg2);
    CHECK(rep2.discrepancy < 5e-2);
    CHECK(std::abs(rep2.prime_side - std::log(2.0)) < 0.1);
}

TEST_CASE("discrepancy does not grow along the zero ladder") {
    const ZeroTable zeros = ZeroTable::load(zeros_path);
    const auto g = TestFunction::log_gaussian_bump(3.0, 0.2);
    std::vector<double> disc;
    for (std::size_t K : {25, 40, 55, 70, 100}) {
        CountingConfig cfg;
        cfg.zero_count = K;
        cfg.prime_bound = 50;
        disc.push_back(explicit_formula_check(g, zeros, cfg).discrepancy);
    }
    for (std::size_t i = 1; i < disc.size(); ++i) CHECK(disc[i] <= disc[i - 1] * 1.10 + 1e-15);
}

TEST_CASE("hasse-weil series") {
    const auto proj_line = CountingFunction::polynomial({1.0, 1.0});  // N(u) = u + 1
    const double q = 1.5, T = 0.4;
    const auto z = hasse_weil_Z(q, T, proj_line);
    CHECK(std::abs(z.value - 1.0 / ((1.0 - T) * (1.0 - q * T))) < 1e-10);
    const auto zero_N = hasse_weil_Z(2.0, 0.3, CountingFunction::polynomial({0.0}));
    CHECK(zero_N.value == 1.0);
    const auto const_N = hasse_weil_Z(2.0, 0.3, CountingFunction::polynomial({1.0}));
    CHECK(std::abs(const_N.value - 1.0 / (1.0 - 0.3)) < 1e-12);
    // divergent geometry is detected
    CHECK_THROWS_AS(hasse_weil_Z(2.0, 1.1, proj_line), std::domain_error);
}

TEST_CASE("soule F and its limit") {
    const auto affine = CountingFunction::polynomial({0.0, 1.0});  // N(u) = u
    // closed form log q * q^{1-s} / (1 - q^{1-s})
    const double q = 1.001, s = 2.0;
    const double closed = std::log(q) * std::pow(q, 1.0 - s) / (1.0 - std::pow(q, 1.0 - s));
    const auto got = soule_F(q, s, affine);
    CHECK(std::abs(got.value - closed) < 1e-9);
    CHECK(std::abs(got.value - 1.0) < 1e-3);  // near the limit 1/(s-1)
    // s = 3: the limit is 1/2
    double prev = 1e9;
    for (double qq : {1.1, 1.01, 1.001}) {
        const double err = std::abs(soule_F(qq, 3.0, affine).value - 0.5);
        CHECK(err < prev);
        prev = err;
    }
    CHECK(prev < 1e-3);
    CHECK(soule_F(1.5, 2.0, CountingFunction::polynomial({0.0})).value == 0.0);
    CHECK_THROWS_AS(soule_F(1.01, 1.0, affine), std::domain_error);
}

TEST_CASE("soule F approaches the mellin integral monotonically") {
    for (const auto& N : {CountingFunction::polynomial({0.0, 1.0}),
                          CountingFunction::polynomial({1.0, 1.0})}) {
        for (double s : {2.0, 3.0}) {
            const double target = zeta_log_derivative(N, s).value;
            double prev = 1e18;
            for (double q : {1.1, 1.01, 1.001}) {
                const double gap = std::abs(soule_F(q, s, N).value - target);
                CHECK(gap < prev);
                prev = gap;
            }
        }
    }
}

TEST_CASE("zeta log derivative for the projective line") {
    const auto N = CountingFunction::polynomial({1.0, 1.0});
    for (double s : {2.0, 3.0, 5.0}) {
        const double expected = 1.0 / (s - 1.0) + 1.0 / s;
        CHECK(std::abs(zeta_log_derivative(N, s).value - expected) < 1e-6);
    }
    const auto affine = CountingFunction::polynomial({0.0, 1.0});
    CHECK(std::abs(zeta_log_derivative(affine, 2.0).value - 1.0) < 1e-9);
    CHECK(zeta_log_derivative(CountingFunction::polynomial({0.0}), 2.0).value == 0.0);
    CHECK_THROWS_AS(zeta_log_derivative(affine, 1.0), std::domain_error);
}
