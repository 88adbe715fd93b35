#include "bsa/realroot.hpp"
#include "doctest.h"

using namespace bsa;

namespace {
Poly X() { return Poly::var("x"); }
}

TEST_CASE("sturm isolation basics") {
    VarId vx = intern_var("x");
    Poly x = X();
    // x^2 - 1: roots +-1
    auto r = sturm_isolate(x * x - Poly(1), vx);
    REQUIRE(r.size() == 2);
    // x^2 + 1: none
    CHECK(sturm_isolate(x * x + Poly(1), vx).empty());
    // x^3 - x: -1, 0, 1
    auto r3 = sturm_isolate(x * x * x - x, vx);
    REQUIRE(r3.size() == 3);
    // intervals disjoint and ordered; sign change of p at endpoints
    UPoly p = upoly_from(x * x * x - x, vx);
    for (size_t i = 0; i < r3.size(); ++i) {
        if (r3[i].exact) continue;
        CHECK(sgn(ueval(p, r3[i].lo)) * sgn(ueval(p, r3[i].hi)) < 0);
        if (i > 0) CHECK(r3[i - 1].hi <= r3[i].lo);
    }
    CHECK_THROWS(sturm_isolate(Poly(), vx));
}

TEST_CASE("sturm count matches sign-change prediction at infinity") {
    VarId vx = intern_var("x");
    Poly x = X();
    std::vector<Poly> cases = {
        x * x - Poly(2),
        (x - Poly(1)) * (x - Poly(1)) * (x + Poly(3)),
        x * x * x * x - Poly(1),
        x * x * x + x + Poly(1),
    };
    for (auto& p : cases) {
        UPoly u = upoly_from(p, vx);
        CHECK(static_cast<int>(sturm_isolate(p, vx).size()) == count_real_roots(u));
    }
}

TEST_CASE("multiple roots isolated once") {
    VarId vx = intern_var("x");
    Poly x = X();
    Poly p = (x - Poly(1)) * (x - Poly(1)) * (x + Poly(2));
    auto r = sturm_isolate(p, vx);
    CHECK(r.size() == 2);
}

TEST_CASE("sturm query computes signs at roots") {
    VarId vx = intern_var("x");
    Poly x = X();
    UPoly p = upoly_from(x * x - Poly(2), vx);  // roots +-sqrt(2)
    auto roots = sturm_isolate(x * x - Poly(2), vx);
    REQUIRE(roots.size() == 2);
    UPoly q = upoly_from(x - Poly(1), vx);  // sign of root - 1
    CHECK(sign_at_root(p, roots[0], q) == -1);  // -sqrt2 - 1 < 0
    CHECK(sign_at_root(p, roots[1], q) == 1);   // sqrt2 - 1 > 0
    UPoly z = upoly_from(x * x - Poly(2), vx);
    CHECK(sign_at_root(p, roots[0], z) == 0);
    // refinement shrinks the interval
    IsolatedRoot r = roots[1];
    for (int i = 0; i < 8; ++i) refine_root(p, r);
    if (!r.exact) CHECK(r.hi - r.lo <= (roots[1].hi - roots[1].lo) / 128);
}
