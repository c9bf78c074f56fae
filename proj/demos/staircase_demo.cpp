// Walk through the staircase semiring: the failure of cancellation in the
// unreduced square, the Newton-polygon reduction that repairs it, and the
// sigma witnesses. Writes an SVG of the sigma(6,4) identity next to the
// binary.

#include <charone/polygon.hpp>
#include <charone/staircase.hpp>
#include <charone/svg.hpp>

#include <fstream>
#include <iostream>

using namespace charone;

int main() {
    // (q (x) 1 + 1 (x) q)^2 keeps the mixed term, its "binomial" cousin does not
    const Staircase seg = sq_add(iota1(1), iota2(1));
    const Staircase a = sq_pow(seg, 2);
    const Staircase b = Staircase::from_points({{2, 0}, {0, 2}});
    std::cout << "a        = " << a << "\n";
    std::cout << "b        = " << b << "\n";
    std::cout << "a == b   : " << (a == b ? "yes" : "no") << "\n";
    std::cout << "a*c == b*c with c = " << seg << " : "
              << (sq_mul(a, seg) == sq_mul(b, seg) ? "yes" : "no") << "\n";

    // the reduction identifies them
    std::cout << "gamma(a) = " << gamma(a) << "\n";
    std::cout << "gamma(b) = " << gamma(b) << "\n";
    std::cout << "reduced equal: " << (reduced_equal(a, b) ? "yes" : "no") << "\n";

    // the universal witness construction
    const Staircase c = cancellation_witness(a, b);
    std::cout << "witness  = " << c << " (sigma(2,2))\n";

    // evaluation against exact slopes
    const auto at_sqrt2 = sq_evaluate(a, Slope::sqrt_of(2));
    std::cout << "argmin of sqrt(2)*x + y over a: " << at_sqrt2.argmin << "\n";

    // the sigma(6,4) identity, drawn
    const Staircase s64 = sigma(6, 4);
    const Staircase doubled = sq_mul(sq_add(iota1(6), iota2(4)), s64);
    std::cout << "sigma(6,4) doubled equals sigma(12,8): "
              << (doubled == sigma(12, 8) ? "yes" : "no") << "\n";
    const NewtonPolygon hull = gamma(s64);
    std::ofstream("sigma64.svg") << render_svg(s64, &hull);
    std::cout << "wrote sigma64.svg\n";
    return 0;
}
