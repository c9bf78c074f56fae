#include <charone/expr.hpp>
#include <charone/json_io.hpp>
#include <charone/svg.hpp>

#include <catch2/catch_amalgamated.hpp>

#include "mini_schema.hpp"
#include "test_support.hpp"

#include <fstream>

using namespace charone;
using charone::testing::load_schema;
using charone::testing::make_rng;
using charone::testing::validates;

namespace {
Staircase st(std::initializer_list<std::pair<long, long>> pts) {
    std::vector<Corner> cs;
    for (const auto& [a, b] : pts) cs.push_back({Int(a), Int(b)});
    return Staircase::from_points(std::move(cs));
}
}  // namespace

TEST_CASE("expression evaluation on documented inputs") {
    const Value square = eval(*parse("(q^1(x)q^0 + q^0(x)q^1)^2"));
    CHECK(std::get<Staircase>(square) == st({{2, 0}, {1, 1}, {0, 2}}));

    const Value m = eval(*parse("mu(fr(2,3, q^1(x)q^1))"));
    CHECK(std::get<ZminElem>(m) == ZminElem(5));

    const Value sig = eval(*parse("sigma(2,1)"));
    CHECK(std::get<Staircase>(sig) == sigma(2, 1));

    const Value red = eval(*parse("gamma((q^1(x)q^0 + q^0(x)q^1)^2)"));
    CHECK(std::get<NewtonPolygon>(red) == NewtonPolygon::from_points({{0, 2}, {2, 0}}));

    // negative exponents are fine
    const Value neg = eval(*parse("q^-2(x)q^3 * q^1(x)q^-1"));
    CHECK(std::get<Staircase>(neg) == st({{-1, 2}}));
}

TEST_CASE("parse errors carry byte offsets") {
    try {
        parse("sigma(2,");
        FAIL("expected a parse error");
    } catch (const parse_error& e) {
        CHECK(e.offset == 8);
    }
    CHECK_THROWS_AS(parse("q^1(x)"), parse_error);
    CHECK_THROWS_AS(parse("(q^1(x)q^0"), parse_error);
    CHECK_THROWS_AS(parse("q^1(x)q^0 +"), parse_error);
    CHECK_THROWS_AS(parse("bogus"), parse_error);
    CHECK_THROWS_AS(parse("q^1(x)q^0 q^0(x)q^1"), parse_error);
}

TEST_CASE("type errors in evaluation") {
    CHECK_THROWS_AS(eval(*parse("mu(q^1(x)q^0) + q^0(x)q^1")), eval_error);
    CHECK_THROWS_AS(eval(*parse("fr(2,3, mu(q^1(x)q^0))")), eval_error);
    CHECK_THROWS_AS(eval(*parse("gamma(q^1(x)q^0) * q^0(x)q^1")), eval_error);
}

namespace {
std::unique_ptr<Expr> random_expr(std::mt19937_64& rng, int depth) {
    auto rint = [&](long lo, long hi) {
        return Int(std::uniform_int_distribution<long>(lo, hi)(rng));
    };
    if (depth <= 0 || rng() % 4 == 0) {
        if (rng() % 5 == 0) return Expr::sigma_node(rint(1, 9), rint(1, 9));
        return Expr::tensor(rint(-9, 9), rint(-9, 9));
    }
    switch (rng() % 6) {
        case 0: return Expr::binary(Expr::Kind::add, random_expr(rng, depth - 1),
                                    random_expr(rng, depth - 1));
        case 1: return Expr::binary(Expr::Kind::mul, random_expr(rng, depth - 1),
                                    random_expr(rng, depth - 1));
        case 2: return Expr::power(random_expr(rng, depth - 1), rint(0, 3));
        case 3: return Expr::fr_node(rint(1, 5), rint(1, 5), random_expr(rng, depth - 1));
        case 4: return Expr::unary(Expr::Kind::mu, random_expr(rng, depth - 1));
        default: return Expr::unary(Expr::Kind::gamma, random_expr(rng, depth - 1));
    }
}
}  // namespace

TEST_CASE("parse after print is the identity on random trees") {
    auto rng = make_rng(515151);
    for (int iter = 0; iter < 1000; ++iter) {
        const auto e = random_expr(rng, 4);
        const std::string text = print_expr(*e);
        const auto back = parse(text);
        INFO(text);
        CHECK(back->equals(*e));
    }
}

TEST_CASE("staircase json round trip and schema") {
    const auto schema = load_schema("staircase.schema.json");
    const Staircase e = st({{0, 2}, {1, 1}, {2, 0}});
    const json j = to_json(e);
    CHECK(validates(j, schema));
    CHECK(j.dump() == R"({"corners":[[0,2],[1,1],[2,0]]})");
    CHECK(staircase_from_json(j) == e);
    CHECK(staircase_from_json(json::parse(R"({"corners":[]})")).is_zero());
    CHECK(validates(to_json(Staircase::zero()), schema));
    // huge coordinates take the string form and survive
    const Staircase big = Staircase::simple(Int("123456789012345678901234567890"), Int(-1));
    CHECK(validates(to_json(big), schema));
    CHECK(staircase_from_json(to_json(big)) == big);
}

TEST_CASE("zmin json matches the wire format") {
    CHECK(to_json(ZminElem(3)).dump() == R"({"exp":3})");
    CHECK(to_json(ZminElem::zero()).dump() == R"({"exp":"inf"})");
    CHECK(zmin_from_json(json::parse(R"({"exp":"inf"})")) == ZminElem::zero());
    CHECK(zmin_from_json(json::parse(R"({"exp":-4})")) == ZminElem(-4));
}

TEST_CASE("polygon json round trip and schema") {
    const auto schema = load_schema("polygon.schema.json");
    const NewtonPolygon p = NewtonPolygon::from_points({{0, 2}, {2, 0}});
    CHECK(validates(to_json(p), schema));
    CHECK(polygon_from_json(to_json(p)) == p);
}

TEST_CASE("slope json round trip and schema") {
    const auto schema = load_schema("slope.schema.json");
    for (const Slope& s : {Slope::rational(7, 5), Slope::sqrt_of(2),
                           Slope::quadratic(Rational(1, 2), Rational(3, 2), 5),
                           Slope::continued_fraction({1, 2, 2, 2})}) {
        const json j = to_json(s);
        CHECK(validates(j, schema));
        CHECK(slope_from_json(j) == s);
    }
    // mixed denominators reduce through the common c
    const Slope mixed = Slope::quadratic(Rational(1, 3), Rational(1, 2), 7);
    const json j = to_json(mixed);
    CHECK(j["c"] == 6);
    CHECK(slope_from_json(j) == mixed);
}

TEST_CASE("supernatural json round trip and schema") {
    const auto schema = load_schema("supernatural.schema.json");
    const Supernatural a =
        theta_image(2).with_exponent(3, PrimeExponent::finite(1));
    const json j = to_json(a);
    CHECK(validates(j, schema));
    CHECK(j["explicit"]["2"] == "inf");
    CHECK(j["explicit"]["3"] == 1);
    CHECK(j["default"] == 0);
    CHECK(supernatural_from_json(j) == a);
    const json base = to_json(Supernatural::base_point());
    CHECK(validates(base, schema));
    CHECK(supernatural_from_json(base).is_base_point());
    const Supernatural inf_dflt = Supernatural::uniform(Supernatural::Default::infinity)
                                      .with_exponent(5, PrimeExponent::finite(0));
    CHECK(validates(to_json(inf_dflt), schema));
    CHECK(supernatural_from_json(to_json(inf_dflt)) == inf_dflt);
}

TEST_CASE("compose result json and schema") {
    const auto schema = load_schema("compose_result.schema.json");
    const auto plain = compose(make_correspondence(Slope::rational(2, 1)),
                               make_correspondence(Slope::rational(3, 1)));
    const json j1 = to_json(plain);
    CHECK(validates(j1, schema));
    CHECK(j1["result"] == "psi");
    CHECK(j1["slope"] == "6/1");
    const auto deformed = compose(make_correspondence(Slope::sqrt_of(2)),
                                  make_correspondence(Slope::sqrt_of(8)));
    const json j2 = to_json(deformed);
    CHECK(validates(j2, schema));
    CHECK(j2["result"] == "id-eps-psi");
    CHECK(j2["slope"] == "4/1");
    CHECK(j2["eps_slope"] == "4/1");
    const auto irr = compose(make_correspondence(Slope::sqrt_of(2)),
                             make_correspondence(Slope::sqrt_of(3)));
    CHECK(validates(to_json(irr), schema));
}

TEST_CASE("svg output is structurally sound") {
    const Staircase e = st({{0, 2}, {1, 1}, {2, 0}});
    const std::string svg = render_svg(e);
    CHECK(svg.find("<svg") == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg.find("<path") != std::string::npos);
    CHECK(svg.find(">a<") != std::string::npos);
    CHECK(svg.find(">b<") != std::string::npos);
    const NewtonPolygon h = gamma(e);
    const std::string overlay = render_svg(e, &h);
    CHECK(overlay.find("polyline") != std::string::npos);
}
