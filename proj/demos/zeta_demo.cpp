// Desk-scale run of the counting-distribution checks: the explicit-formula
// balance for a bump test function and the q -> 1 limit of the Soule
// expression for the projective line.

#include <charone/zeta.hpp>

#include <iostream>

int main(int argc, char** argv) {
    using namespace charone;
    const std::string zeros = argc > 1 ? argv[1] : "../data/zeros.txt";

    const ZeroTable table = ZeroTable::load(zeros);
    const auto g = TestFunction::log_gaussian_bump(3.0, 0.2);
    CountingConfig cfg;
    cfg.zero_count = 100;
    cfg.prime_bound = 50;
    const auto rep = explicit_formula_check(g, table, cfg);
    std::cout << "zero side        = " << rep.zero_side << "\n"
              << "prime side       = " << rep.prime_side << "\n"
              << "archimedean side = " << rep.arch_side << "\n"
              << "discrepancy      = " << rep.discrepancy << " (relative "
              << rep.relative_discrepancy << ")\n\n";

    const auto proj_line = CountingFunction::polynomial({1.0, 1.0});
    std::cout << "projective line, -d/ds log zeta at s = 2: "
              << zeta_log_derivative(proj_line, 2.0).value << " (expect 1.5)\n";
    for (double q : {1.1, 1.01, 1.001})
        std::cout << "soule F(q=" << q << ", s=2) for N(u)=u: "
                  << soule_F(q, 2.0, CountingFunction::polynomial({0.0, 1.0})).value
                  << " (limit 1)\n";
    return 0;
}
