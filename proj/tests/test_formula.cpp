#include "bsa/formula.hpp"
#include "doctest.h"

using namespace bsa;

TEST_CASE("parse basic formulas") {
    auto f = parse_formula("vars x; x > 0");
    CHECK(f.vars.size() == 1);
    CHECK(f.pos.size() == 1);
    CHECK(f.pos[0] == Poly::var("x"));

    auto g = parse_formula("vars x; x^2 + 1 > 0");
    CHECK(g.pos[0] == Poly::var("x") * Poly::var("x") + Poly(1));

    auto h = parse_formula("vars x,y; x*y = 1/2, 1 - x^2 - y^2 > 0");
    CHECK(h.eqs.size() == 1);
    CHECK(h.pos.size() == 1);
    CHECK(h.eqs[0] == (Poly::var("x") * Poly::var("y") - Poly(Rational(1, 2))).monic());
}

TEST_CASE("sugar desugars per the sign conventions") {
    auto f = parse_formula("vars x; x < 0");  // -x > 0
    CHECK(f.pos.size() == 1);
    CHECK(f.pos[0] == -Poly::var("x"));
    auto g = parse_formula("vars x; x >= 1");
    CHECK(g.geq.size() == 1);
    CHECK(g.geq[0] == Poly::var("x") - Poly(1));
    CHECK(!g.is_basic());
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_formula("vars x; x >"), ParseError);
    CHECK_THROWS_AS(parse_formula("vars x; y > 0"), ParseError);
    CHECK_THROWS_AS(parse_formula("vars x; 1.5*x > 0"), ParseError);
    CHECK_THROWS_AS(parse_formula("x > 0"), ParseError);
    try {
        parse_formula("vars x;\n x + > 0");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
}

TEST_CASE("print/parse round trip is stable") {
    std::vector<std::string> cases = {
        "vars x; x > 0",
        "vars x, y; x*y - 1/2 = 0, -x^2 - y^2 + 1 > 0",
        "vars x; x != 0, x - 1 > 0, x + 1 >= 0",
        "vars x, y; 2*x - 3*y = 0",
        "vars ; 0 = 0",
    };
    for (auto& s : cases) {
        auto f = parse_formula(s);
        auto g = parse_formula(f.str());
        CHECK(f == g);
        CHECK(f.str() == g.str());
    }
}

TEST_CASE("equations normalize, inequalities keep their sign") {
    auto f = parse_formula("vars x; 2*x - 4 = 0");
    CHECK(f.eqs[0] == Poly::var("x") - Poly(2));
    auto g = parse_formula("vars x; 2*x > 0");
    auto h = parse_formula("vars x; x > 0");
    CHECK(g == h);
    auto neg = parse_formula("vars x; -x > 0");
    CHECK(!(neg == h));
}

TEST_CASE("product formula") {
    auto a = parse_formula("vars x; x > 0");
    auto b = parse_formula("vars y; y > 0");
    auto ab = product_formula(a, b);
    CHECK(ab.vars.size() == 2);
    CHECK(ab.pos.size() == 2);

    auto unit = parse_formula("vars ; 0 = 0");
    CHECK(product_formula(unit, a) == a);

    CHECK_THROWS_AS(product_formula(a, a), ValidationError);
    auto aa = product_formula(a, a, true);
    CHECK(aa.vars.size() == 2);
    CHECK(var_name(aa.vars[1]) == "x'");
    CHECK(aa.pos.size() == 2);
}

TEST_CASE("product is associative on disjoint formulas") {
    auto a = parse_formula("vars x; x > 0");
    auto b = parse_formula("vars y; y - 1 != 0");
    auto c = parse_formula("vars z; z^2 = 2");
    CHECK(product_formula(product_formula(a, b), c) ==
          product_formula(a, product_formula(b, c)));
}
