#include "bsa/chi.hpp"
#include "bsa/classexpr.hpp"
#include "doctest.h"

using namespace bsa;

namespace {
ClassExpr L() { return ClassExpr::lpower(1); }
ClassExpr one() { return ClassExpr::one(); }
}

TEST_CASE("class arithmetic on L-polynomials") {
    // (L-1)*(L-1) = L^2 - 2L + 1
    ClassExpr lm1 = L() - one();
    ClassExpr sq = lm1 * lm1;
    ClassExpr expect = ClassExpr::lpower(2) - L().scaled(Dyadic(2)) + one();
    CHECK(sq == expect);
    // 1/4*(3L-1) + 1/4*(L+1) = L
    ClassExpr a = (L().scaled(Dyadic(3)) - one()).scaled(Dyadic(1, 2));
    ClassExpr b = (L() + one()).scaled(Dyadic(1, 2));
    CHECK(a + b == L());
    CHECK((L() * ClassExpr::lpower(-1)) == one());
}

TEST_CASE("point class product") {
    auto a = descriptor_of_formula(parse_formula("vars x; x = 0"));
    auto b = descriptor_of_formula(parse_formula("vars y; y = 0"));
    REQUIRE(a.desc.has_value());
    ClassExpr prod = ClassExpr::from_atom(a) * ClassExpr::from_atom(b);
    auto ab = descriptor_of_formula(parse_formula("vars x, y; x = 0, y = 0"));
    CHECK(prod == ClassExpr::from_atom(ab));
    // and [x=0, y=0] is the point: both coordinates pinned, 2 blocks of 1 eq
    CHECK(ab.desc->nbase == 2);
}

TEST_CASE("descriptors strip free directions into powers of L") {
    auto a = descriptor_of_formula(parse_formula("vars x, y; x = 0"));
    CHECK(a.lpow == 1);
    REQUIRE(a.desc.has_value());
    CHECK(a.desc->nbase == 1);
    auto full = descriptor_of_formula(parse_formula("vars x, y; 0 = 0"));
    CHECK(full.lpow == 2);
    CHECK(!full.desc.has_value());
}

TEST_CASE("constant constraints") {
    // 1 = 0 is empty as a scheme
    auto z = descriptor_of_formula(parse_formula("vars x; 1 = 0"));
    CHECK(z.zero);
    // 0 != 0 likewise; 2 != 0 is vacuous
    auto z2 = descriptor_of_formula(parse_formula("vars x; x = 0, 2 != 0"));
    CHECK(!z2.zero);
    CHECK(z2.desc->neqs.empty());
    // x^2+1 = 0 is NOT rewritten to zero symbolically
    auto nz = descriptor_of_formula(parse_formula("vars x; x^2 + 1 = 0"));
    CHECK(!nz.zero);
    REQUIRE(nz.desc.has_value());
}

TEST_CASE("cover detection identifies double covers from plain equations") {
    // z appears only in z^2 = 1 - x^2 - y^2: a cover over the xy block
    auto a = descriptor_of_formula(
        parse_formula("vars x, y, z; x*y = 1/4, z^2 = 1 - x^2 - y^2"));
    REQUIRE(a.desc.has_value());
    CHECK(a.desc->ncover == 1);
    CHECK(a.desc->eqs.size() == 1);
    // written differently but canonically equal
    auto b = descriptor_of_formula(
        parse_formula("vars u, v, w; 2*w^2 = 2 - 2*u^2 - 2*v^2, u*v = 1/4"));
    CHECK(*a.desc == *b.desc);
}

TEST_CASE("negation involution identifies odd covers") {
    // [Y^2 = x] vs [Y^2 = -x]: identified via x -> -x
    auto p = descriptor_of_formula(parse_formula("vars x, y; y^2 = x"));
    auto m = descriptor_of_formula(parse_formula("vars x, y; y^2 = -x"));
    REQUIRE(p.desc.has_value());
    CHECK(*p.desc == *m.desc);
    // but [Y^2 = x^2+1] vs [Y^2 = -x^2-1] stay distinct
    auto pp = descriptor_of_formula(parse_formula("vars x, y; y^2 = x^2 + 1"));
    auto mm = descriptor_of_formula(parse_formula("vars x, y; y^2 = -x^2 - 1"));
    CHECK(!(*pp.desc == *mm.desc));
}

TEST_CASE("descriptor block order is canonical") {
    auto a = descriptor_of_formula(parse_formula("vars x, y; x = 0, y^2 = 2"));
    auto b = descriptor_of_formula(parse_formula("vars y, x; y^2 = 2, x = 0"));
    CHECK(*a.desc == *b.desc);
}

TEST_CASE("rendering is deterministic") {
    ClassExpr e = (L() - one()).scaled(Dyadic(1, 1));
    CHECK(e.str() == "1/2*L - 1/2");
    CHECK(ClassExpr().str() == "0");
    CHECK((ClassExpr::lpower(-2).scaled(Dyadic(3))).str() == "3*L^-2");
}
