#ifndef BSA_ALGPOINT_HPP
#define BSA_ALGPOINT_HPP

#include <vector>

#include "bsa/poly.hpp"

namespace bsa {

/// One coordinate of a triangular sample point: either an exact rational or
/// the unique real root of `defpoly` (a polynomial over the earlier
/// coordinates and this one) inside the open interval (lo, hi), whose
/// endpoints are non-roots.
struct AlgCoord {
    bool exact = true;
    Rational value;
    Poly defpoly;
    Rational lo, hi;

    static AlgCoord rational(const Rational& v) {
        AlgCoord c;
        c.exact = true;
        c.value = v;
        c.lo = c.hi = v;
        return c;
    }
    static AlgCoord root(const Poly& def, const Rational& lo, const Rational& hi) {
        AlgCoord c;
        c.exact = false;
        c.defpoly = def;
        c.lo = lo;
        c.hi = hi;
        return c;
    }
};

/// Sample point over an ordered variable list; coords assign a prefix of the
/// order. Coordinates are exact rationals or roots of polynomials over the
/// preceding coordinates, so every sign query reduces to rational arithmetic
/// through nested Sturm queries.
struct SamplePoint {
    std::vector<VarId> order;
    std::vector<AlgCoord> coords;

    size_t size() const { return coords.size(); }
    int dim_contribution() const;  // number of non-exact or sector coords: see cad
};

/// Exact sign of p at the sample (p over the assigned variables only).
int sign_at(const Poly& p, const SamplePoint& pt);
int sign_at(const Poly& p, const SamplePoint& pt, size_t ncoords);

/// One bisection step on coordinate i (collapses to exact when the midpoint
/// hits the root).
void refine_coord(SamplePoint& pt, size_t i);

/// p specialized at the sample, viewed in v: drops the coefficients of high
/// powers of v that vanish there. Returns the pruned polynomial and its true
/// degree in v (-1 when p vanishes identically over the sample).
std::pair<Poly, int> prune_at(const Poly& p, VarId v, const SamplePoint& prefix);

/// Distinct real roots of the specialized f in (a,b) (non-root endpoints) or
/// over all of R. f is pruned internally.
int count_roots_at(const Poly& f, VarId v, const SamplePoint& prefix, const Rational& a,
                   const Rational& b);
int count_roots_at(const Poly& f, VarId v, const SamplePoint& prefix);

/// Sturm query: sum of sign(g) over the distinct real roots of the
/// specialized f in (a,b). With an isolating interval this is the sign of g
/// at that root (0 included).
int sturm_query_at(const Poly& f, const Poly& g, VarId v, const SamplePoint& prefix,
                   const Rational& a, const Rational& b);

/// A distinct root of one or more level polynomials over a common prefix.
struct VRoot {
    Poly defpoly;  // pruned defining polynomial (one of the owners)
    Rational lo, hi;
    std::vector<int> vanishing;  // level-poly indices vanishing at this root
};

struct StackRoots {
    std::vector<VRoot> roots;    // increasing, pairwise disjoint intervals
    std::vector<int> nullified;  // polys vanishing identically over the prefix
};

/// Isolates and merges the real roots of the given polynomials in v over the
/// prefix sample. Handles nullified polynomials and root coincidences across
/// different polynomials exactly (via specialized subresultants).
StackRoots isolate_stack_roots(const std::vector<Poly>& level_polys, VarId v,
                               const SamplePoint& prefix);

/// Refine a VRoot's interval by one bisection step.
void refine_vroot(VRoot& r, VarId v, const SamplePoint& prefix);

}  // namespace bsa

#endif
