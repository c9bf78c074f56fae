// charone: exact tropical algebra of the tensor-square staircase semiring,
// its Newton-polygon reduction, Frobenius correspondences, point queries, and
// the desk-scale zeta checks. See README.md for the full command surface.

#include <charone/correspondence.hpp>
#include <charone/expr.hpp>
#include <charone/json_io.hpp>
#include <charone/points.hpp>
#include <charone/polygon.hpp>
#include <charone/staircase.hpp>
#include <charone/svg.hpp>
#include <charone/zeta.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace charone;

constexpr int exit_user_error = 2;
constexpr int exit_tolerance_failure = 3;

Slope parse_slope_arg(const std::string& text) {
    if (!text.empty() && text.front() == '{') return slope_from_json(json::parse(text));
    if (text.rfind("sqrt", 0) == 0) return Slope::sqrt_of(Int(text.substr(4)));
    if (text.rfind("cf:", 0) == 0) {
        std::vector<Int> terms;
        std::stringstream ss(text.substr(3));
        std::string item;
        while (std::getline(ss, item, ',')) terms.emplace_back(item);
        return Slope::continued_fraction(std::move(terms));
    }
    if (text.rfind("quad:", 0) == 0) {
        std::stringstream ss(text.substr(5));
        std::string a, b, c, d;
        if (!std::getline(ss, a, ',') || !std::getline(ss, b, ',') || !std::getline(ss, c, ',') ||
            !std::getline(ss, d, ','))
            throw std::invalid_argument("quad slope needs quad:a,b,c,d");
        return Slope::quadratic(Rational(Int(a), Int(c)), Rational(Int(b), Int(c)), Int(d));
    }
    std::string body = text.rfind("rational:", 0) == 0 ? text.substr(9) : text;
    const auto slash = body.find('/');
    if (slash == std::string::npos) return Slope::rational(Int(body), 1);
    return Slope::rational(Int(body.substr(0, slash)), Int(body.substr(slash + 1)));
}

Rational parse_rational_arg(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(Int(text));
    return Rational(Int(text.substr(0, slash)), Int(text.substr(slash + 1)));
}

Supernatural parse_supernatural_arg(const std::string& text) {
    if (!text.empty() && text.front() == '{') return supernatural_from_json(json::parse(text));
    if (text == "base") return Supernatural::base_point();
    Supernatural s = Supernatural::integers();
    if (text == "1") return s;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, '*')) {
        const auto caret = part.find('^');
        if (caret == std::string::npos)
            throw std::invalid_argument("supernatural parts look like p^e or p^inf");
        const Int p(part.substr(0, caret));
        const std::string e = part.substr(caret + 1);
        s = s.with_exponent(p, e == "inf" ? PrimeExponent::inf() : PrimeExponent::finite(Int(e)));
    }
    return s;
}

// an operand is either a path to a JSON file or an inline expression/JSON
Staircase load_staircase_arg(const std::string& text) {
    if (std::filesystem::exists(text)) {
        std::ifstream in(text);
        json j;
        in >> j;
        return staircase_from_json(j);
    }
    if (!text.empty() && text.front() == '{') return staircase_from_json(json::parse(text));
    Value v = eval(*parse(text));
    if (auto* s = std::get_if<Staircase>(&v)) return *s;
    throw std::invalid_argument("operand does not evaluate to a staircase");
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

std::string value_to_text(const Value& v, bool as_json) {
    if (const auto* s = std::get_if<Staircase>(&v))
        return as_json ? to_json(*s).dump() : (std::ostringstream() << *s).str();
    if (const auto* p = std::get_if<NewtonPolygon>(&v))
        return as_json ? to_json(*p).dump() : (std::ostringstream() << *p).str();
    const auto& z = std::get<ZminElem>(v);
    return as_json ? to_json(z).dump() : (std::ostringstream() << z).str();
}

void emit_value_svg(const Value& v, const std::string& path) {
    if (const auto* s = std::get_if<Staircase>(&v)) {
        write_file(path, render_svg(*s));
        return;
    }
    if (const auto* p = std::get_if<NewtonPolygon>(&v)) {
        write_file(path, render_svg(*p));
        return;
    }
    throw std::invalid_argument("--svg applies to staircase or polygon results");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact algebra of characteristic-one semirings, staircases, "
                 "Newton polygons, Frobenius correspondences, and zeta checks"};
    app.require_subcommand(1);

    // ---- eval ----
    std::string eval_expr, eval_svg;
    bool eval_json = false;
    auto* cmd_eval = app.add_subcommand("eval", "evaluate a staircase expression");
    cmd_eval->add_option("expr", eval_expr, "expression, e.g. \"(q^1(x)q^0+q^0(x)q^1)^2\"")->required();
    cmd_eval->add_flag("--json", eval_json, "machine-readable output");
    cmd_eval->add_option("--svg", eval_svg, "write an SVG figure to this path");

    // ---- reduce ----
    std::string red_expr, red_svg;
    bool red_json = false;
    auto* cmd_reduce = app.add_subcommand("reduce", "evaluate and reduce to the Newton polygon");
    cmd_reduce->add_option("expr", red_expr, "staircase expression")->required();
    cmd_reduce->add_flag("--json", red_json, "machine-readable output");
    cmd_reduce->add_option("--svg", red_svg, "write an SVG figure (staircase + hull) to this path");

    // ---- congruent ----
    std::string cg_lhs, cg_rhs, cg_slope;
    bool cg_json = false;
    auto* cmd_congruent =
        app.add_subcommand("congruent", "test congruence of two staircases under a slope");
    cmd_congruent->add_option("lhs", cg_lhs, "staircase (JSON file, inline JSON, or expression)")->required();
    cmd_congruent->add_option("rhs", cg_rhs, "staircase (JSON file, inline JSON, or expression)")->required();
    cmd_congruent->add_option("--slope", cg_slope,
                              "slope: N/M, sqrtD, quad:a,b,c,d, cf:a0,a1,..., or JSON")
        ->required();
    cmd_congruent->add_flag("--json", cg_json, "machine-readable output");

    // ---- compose ----
    std::string co_lhs, co_rhs;
    bool co_json = false;
    auto* cmd_compose = app.add_subcommand("compose", "compose two Frobenius correspondences");
    cmd_compose->add_option("--lhs", co_lhs, "slope of the left correspondence")->required();
    cmd_compose->add_option("--rhs", co_rhs, "slope of the right correspondence")->required();
    cmd_compose->add_flag("--json", co_json, "machine-readable output");

    // ---- points ----
    auto* cmd_points = app.add_subcommand("points", "point queries");
    std::string pi_a, pi_b;
    auto* cmd_iso = cmd_points->add_subcommand("iso", "are two points isomorphic?");
    cmd_iso->add_option("a", pi_a, "supernatural (JSON, or 2^inf*3^1, 1, base)")->required();
    cmd_iso->add_option("b", pi_b, "supernatural")->required();
    std::string pm_a, pm_q;
    auto* cmd_member = cmd_points->add_subcommand("member", "does a rational lie in the subgroup?");
    cmd_member->add_option("a", pm_a, "supernatural")->required();
    cmd_member->add_option("q", pm_q, "rational n/m")->required();
    cmd_points->require_subcommand(1);

    // ---- zeta ----
    auto* cmd_zeta = app.add_subcommand("zeta", "numerical zeta checks");
    double z_u0 = 3.0, z_width = 0.2, z_tol = 5e-2;
    std::string z_zeros;
    std::size_t z_K = 100;
    std::uint64_t z_pmax = 50;
    bool z_json = false, z_assert = false;
    auto* cmd_check = cmd_zeta->add_subcommand("check", "explicit-formula consistency check");
    cmd_check->add_option("--u0", z_u0, "bump center (> 1)");
    cmd_check->add_option("--width", z_width, "bump width in log u");
    cmd_check->add_option("--zeros", z_zeros, "zeros file (one ordinate per line)")->required();
    cmd_check->add_option("-K,--zero-count", z_K, "number of zeros to use");
    cmd_check->add_option("--pmax", z_pmax, "prime enumeration bound");
    cmd_check->add_flag("--json", z_json, "machine-readable report");
    cmd_check->add_flag("--assert", z_assert, "exit 3 when the relative discrepancy exceeds --tol");
    cmd_check->add_option("--tol", z_tol, "tolerance for --assert");
    cmd_zeta->require_subcommand(1);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_eval->parsed()) {
            Value v = eval(*parse(eval_expr));
            std::cout << value_to_text(v, eval_json) << "\n";
            if (!eval_svg.empty()) emit_value_svg(v, eval_svg);
            return 0;
        }
        if (cmd_reduce->parsed()) {
            Value v = eval(*parse(red_expr));
            const auto* s = std::get_if<Staircase>(&v);
            if (!s) throw std::invalid_argument("reduce expects a staircase expression");
            NewtonPolygon hull = gamma(*s);
            std::cout << value_to_text(Value(hull), red_json) << "\n";
            if (!red_svg.empty()) write_file(red_svg, render_svg(*s, &hull));
            return 0;
        }
        if (cmd_congruent->parsed()) {
            const Staircase a = load_staircase_arg(cg_lhs);
            const Staircase b = load_staircase_arg(cg_rhs);
            const bool eq = sq_congruent(a, b, parse_slope_arg(cg_slope));
            std::cout << (cg_json ? (eq ? "{\"congruent\":true}" : "{\"congruent\":false}")
                                  : (eq ? "true" : "false"))
                      << "\n";
            return 0;
        }
        if (cmd_compose->parsed()) {
            const auto result = compose(make_correspondence(parse_slope_arg(co_lhs)),
                                        make_correspondence(parse_slope_arg(co_rhs)));
            if (co_json) {
                std::cout << to_json(result).dump() << "\n";
            } else {
                const json j = to_json(result);
                std::cout << j.at("result").get<std::string>() << " slope="
                          << (j.at("slope").is_string() ? j.at("slope").get<std::string>()
                                                        : j.at("slope").dump())
                          << " eps_slope=" << j.at("eps_slope").get<std::string>() << "\n";
            }
            return 0;
        }
        if (cmd_iso->parsed()) {
            const bool iso =
                points_isomorphic(parse_supernatural_arg(pi_a), parse_supernatural_arg(pi_b));
            std::cout << (iso ? "true" : "false") << "\n";
            return 0;
        }
        if (cmd_member->parsed()) {
            const bool in = subgroup_contains(parse_supernatural_arg(pm_a), parse_rational_arg(pm_q));
            std::cout << (in ? "true" : "false") << "\n";
            return 0;
        }
        if (cmd_check->parsed()) {
            const TestFunction g = TestFunction::log_gaussian_bump(z_u0, z_width);
            const ZeroTable zeros = ZeroTable::load(z_zeros);
            CountingConfig cfg;
            cfg.zero_count = std::min<std::size_t>(z_K, zeros.size());
            cfg.prime_bound = z_pmax;
            const auto rep = explicit_formula_check(g, zeros, cfg);
            if (z_json) {
                json j{{"zero_side", rep.zero_side},
                       {"prime_side", rep.prime_side},
                       {"arch_side", rep.arch_side},
                       {"discrepancy", rep.discrepancy},
                       {"relative_discrepancy", rep.relative_discrepancy},
                       {"quad_error", rep.quad_error},
                       {"imag_residue", rep.imag_residue},
                       {"zeros_used", rep.zeros_used},
                       {"zeros_assumed_simple", rep.zeros_assumed_simple}};
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "zero side        = " << rep.zero_side << "\n"
                          << "prime side       = " << rep.prime_side << "\n"
                          << "archimedean side = " << rep.arch_side << "\n"
                          << "discrepancy      = " << rep.discrepancy
                          << "  (relative " << rep.relative_discrepancy << ")\n"
                          << "quadrature error = " << rep.quad_error << "\n"
                          << "zeros used       = " << rep.zeros_used << " (assumed simple)\n";
            }
            if (z_assert && !(rep.relative_discrepancy < z_tol)) return exit_tolerance_failure;
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_user_error;
    }
    return exit_user_error;
}
