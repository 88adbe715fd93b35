#include <random>

#include "bsa/chi.hpp"
#include "doctest.h"

using namespace bsa;

namespace {
ClassExpr L() { return ClassExpr::lpower(1); }
ClassExpr one() { return ClassExpr::one(); }

// random basic formula within the documented fragment
BasicFormula random_formula(std::mt19937_64& rng, int maxvars, int maxineq, int maxdeg) {
    std::uniform_int_distribution<int> nv(1, maxvars), ni(0, maxineq), coeff(-3, 3);
    BasicFormula f;
    int n = nv(rng);
    for (int i = 0; i < n; ++i) f.vars.push_back(intern_var("v" + std::to_string(i)));
    auto rand_poly = [&]() {
        Poly p;
        int terms = std::uniform_int_distribution<int>(1, 3)(rng);
        for (int t = 0; t < terms; ++t) {
            Mono m;
            int budget = maxdeg;
            for (VarId v : f.vars) {
                int e = std::uniform_int_distribution<int>(0, budget)(rng);
                budget -= e;
                if (e) m.emplace_back(v, e);
            }
            std::sort(m.begin(), m.end());
            p += Poly::term(Rational(coeff(rng)), m);
        }
        return p;
    };
    int r = ni(rng);
    for (int i = 0; i < r; ++i) {
        Poly p = rand_poly();
        if (!p.is_zero()) f.pos.push_back(p);
    }
    if (std::uniform_int_distribution<int>(0, 1)(rng)) {
        Poly p = rand_poly();
        if (!p.is_zero()) f.eqs.push_back(p);
    }
    if (std::uniform_int_distribution<int>(0, 1)(rng)) {
        Poly p = rand_poly();
        if (!p.is_zero()) f.neqs.push_back(p);
    }
    f.canonicalize();
    return f;
}
}  // namespace

TEST_CASE("chi of the half line") {
    // chi([x>0]) = 1/4([Y^2=x] - [Y^2=-x]) + 1/2 [x != 0]; the cover terms are
    // identified under negation, so the result is 1/2 [x != 0] symbolically
    auto f = parse_formula("vars x; x > 0");
    ClassExpr c = chi_inductive(f);
    auto neq = descriptor_of_formula(parse_formula("vars x; x != 0"));
    CHECK(c == ClassExpr::from_atom(neq, Dyadic(1, 1)));
    // after neq-elimination: 1/2 L - 1/2 [x=0]
    ClassExpr e = eliminate_neq(c);
    auto pt = descriptor_of_formula(parse_formula("vars x; x = 0"));
    CHECK(e == L().scaled(Dyadic(1, 1)) - ClassExpr::from_atom(pt, Dyadic(1, 1)));
}

TEST_CASE("closed form equals inductive on the paper examples") {
    for (auto s : {"vars x; x > 0", "vars x; x^2 + 1 > 0", "vars x; x > 0, x + 1 > 0",
                   "vars x1, x2; x1 > 0, x2 > 0", "vars x; x^2 + 1 > 0, -x^2 - 1 > 0"}) {
        auto f = parse_formula(s);
        CHECK(eliminate_neq(chi_closed_form(f)) == eliminate_neq(chi_inductive(f)));
    }
}

TEST_CASE("closed form equals inductive chi on random formulas") {
    std::mt19937_64 rng(0x5eed0001);
    int checked = 0;
    for (int it = 0; it < 120; ++it) {
        BasicFormula f = random_formula(rng, 2, 3, 3);
        ClassExpr a = eliminate_neq(chi_closed_form(f));
        ClassExpr b = eliminate_neq(chi_inductive(f));
        if (!(a == b)) {
            CAPTURE(f.str());
            CHECK(a == b);
        }
        ++checked;
    }
    CHECK(checked == 120);
}

TEST_CASE("semialgebraic additivity") {
    // chi([A, R != 0]) = chi([A, R>0]) + chi([A, -R>0])
    std::mt19937_64 rng(0x5eed0002);
    for (int it = 0; it < 40; ++it) {
        BasicFormula f = random_formula(rng, 2, 2, 3);
        if (f.pos.empty()) continue;
        Poly r = f.pos.back();
        BasicFormula base = f;
        base.pos.pop_back();
        BasicFormula fneq = base, fpos = base, fneg = base;
        fneq.neqs.push_back(r);
        fneq.canonicalize();
        fpos.pos.push_back(r);
        fpos.canonicalize();
        fneg.pos.push_back(-r);
        fneg.canonicalize();
        CHECK(chi_closed_form(fneq) == chi_closed_form(fpos) + chi_closed_form(fneg));
    }
}

TEST_CASE("algebraic additivity") {
    // chi([A]) = chi([A, S=0]) + chi([A, S != 0]); the relation is realized by
    // inequation elimination, so both sides are normalized through it
    std::mt19937_64 rng(0x5eed0003);
    for (int it = 0; it < 40; ++it) {
        BasicFormula f = random_formula(rng, 2, 2, 2);
        Poly s = Poly::var(f.vars[0]) - Poly(it % 3);
        BasicFormula feq = f, fneq = f;
        feq.eqs.push_back(s);
        feq.canonicalize();
        fneq.neqs.push_back(s);
        fneq.canonicalize();
        CHECK(eliminate_neq(chi_closed_form(f)) ==
              eliminate_neq(chi_closed_form(feq) + chi_closed_form(fneq)));
    }
}

TEST_CASE("multiplicativity over disjoint variables") {
    auto a = parse_formula("vars x; x > 0");
    auto b = parse_formula("vars y; y > 0");
    CHECK(chi_closed_form(product_formula(a, b)) == chi_closed_form(a) * chi_closed_form(b));
    std::mt19937_64 rng(0x5eed0004);
    for (int it = 0; it < 25; ++it) {
        BasicFormula f = random_formula(rng, 1, 2, 2);
        BasicFormula g = random_formula(rng, 1, 2, 2);
        auto fg = product_formula(f, g, true);
        CHECK(chi_closed_form(fg) == chi_closed_form(f) * chi_closed_form(g));
    }
}

TEST_CASE("coefficient bound 2^(r+i)") {
    std::mt19937_64 rng(0x5eed0005);
    for (int it = 0; it < 30; ++it) {
        BasicFormula f = random_formula(rng, 2, 3, 2);
        unsigned r = static_cast<unsigned>(f.pos.size());
        ClassExpr c = chi_closed_form(f);
        for (auto& [atom, k] : c.terms()) CHECK(k.exp2() <= 2 * r);
    }
}

TEST_CASE("odd symmetry gives half the inequation class") {
    // R odd: chi([R>0]) = 1/2 [R != 0]
    for (auto s : {"vars x; x > 0", "vars x, y; x^3 + x*y^2 > 0", "vars x; x^3 > 0",
                   "vars x, y, z; x*y*z > 0"}) {
        auto f = parse_formula(s);
        REQUIRE(f.pos.size() == 1);
        BasicFormula fneq;
        fneq.vars = f.vars;
        fneq.neqs = {f.pos[0]};
        fneq.canonicalize();
        CHECK(chi_closed_form(f) == chi_closed_form(fneq).scaled(Dyadic(1, 1)));
    }
}

TEST_CASE("geq expansion") {
    auto f = parse_formula("vars x; x >= 0");
    auto gt = parse_formula("vars x; x > 0");
    auto eq = parse_formula("vars x; x = 0");
    CHECK(chi_formula(f) == chi_formula(gt) + chi_formula(eq));
    auto unit = parse_formula("vars ; 0 >= 0");
    CHECK(chi_formula(unit) == ClassExpr::one());
}
