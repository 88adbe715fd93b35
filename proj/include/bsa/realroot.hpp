#ifndef BSA_REALROOT_HPP
#define BSA_REALROOT_HPP

#include <vector>

#include "bsa/poly.hpp"

namespace bsa {

/// Dense univariate polynomial over Q, index = degree.
using UPoly = std::vector<Rational>;

UPoly upoly_from(const Poly& p, VarId v);
UPoly uderiv(const UPoly& p);
Rational ueval(const UPoly& p, const Rational& x);
int udeg(const UPoly& p);  // -1 for zero
UPoly umul(const UPoly& a, const UPoly& b);
UPoly urem(const UPoly& a, const UPoly& b);
UPoly ugcd(UPoly a, UPoly b);          // monic
UPoly usquarefree(const UPoly& p);     // monic squarefree part

/// Signed remainder sequence of (f, g): S0=f, S1=g, S_{k+1} = -rem(S_{k-1},S_k).
std::vector<UPoly> signed_rem_seq(const UPoly& f, const UPoly& g);

/// Sign variations of the sequence evaluated at x (zeros skipped).
int variations_at(const std::vector<UPoly>& seq, const Rational& x);
/// Variations at -inf / +inf via leading coefficients.
int variations_at_inf(const std::vector<UPoly>& seq, int dir);

/// Number of distinct real roots of p in (a, b]; p need not be squarefree.
int count_roots(const UPoly& p, const Rational& a, const Rational& b);
int count_real_roots(const UPoly& p);

/// Sturm query: sum of sign(q(x)) over distinct real roots x of p in (a,b);
/// requires p(a) != 0 and p(b) != 0.
int sturm_query(const UPoly& p, const UPoly& q, const Rational& a, const Rational& b);

/// All roots within (-B, B) for the Cauchy-style bound B.
Rational root_bound(const UPoly& p);

/// One isolated real root of a squarefree defining polynomial. When exact,
/// lo == hi == value; otherwise p(lo) and p(hi) are nonzero with opposite signs.
struct IsolatedRoot {
    Rational lo, hi;
    bool exact = false;
    Rational value;  // meaningful when exact
};

/// Disjoint isolating intervals, one per distinct real root, sorted increasing.
/// Rejects the zero polynomial. `p` must be univariate in `v`.
std::vector<IsolatedRoot> sturm_isolate(const Poly& p, VarId v);
std::vector<IsolatedRoot> sturm_isolate(const UPoly& p);

/// Sign of q at the root described by r (with defining polynomial p).
int sign_at_root(const UPoly& defpoly, const IsolatedRoot& r, const UPoly& q);

/// Shrink the isolating interval by bisection (no-op on exact roots).
void refine_root(const UPoly& defpoly, IsolatedRoot& r);

}  // namespace bsa

#endif
