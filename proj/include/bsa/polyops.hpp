#ifndef BSA_POLYOPS_HPP
#define BSA_POLYOPS_HPP

#include <optional>
#include <vector>

#include "bsa/poly.hpp"

namespace bsa {

/// Exact quotient f/g; throws std::domain_error when g does not divide f.
Poly divide_exact(const Poly& f, const Poly& g);
std::optional<Poly> try_divide(const Poly& f, const Poly& g);

/// Pseudo-remainder of a by b w.r.t. v: lc_v(b)^(da-db+1) * a reduced mod b.
Poly pseudo_rem(const Poly& a, const Poly& b, VarId v);

/// Positive rational c with f/c integral, primitive, i.e. the rational content.
Rational rational_content(const Poly& f);

/// Polynomial content of f w.r.t. v (gcd of the coefficients of powers of v).
Poly content_in(const Poly& f, VarId v);
Poly primitive_part_in(const Poly& f, VarId v);

/// Multivariate gcd over Q, monic-normalized (leading grlex coefficient 1).
Poly gcd_poly(const Poly& f, const Poly& g);

/// f with all repeated factors collapsed (f / gcd(f, all partials)), monic.
Poly squarefree_part(const Poly& f);

/// Classical resultant of f and g w.r.t. v, computed as the Sylvester
/// determinant by fraction-free elimination. Both inputs must depend on v.
Poly resultant(const Poly& f, const Poly& g, VarId v);

/// Principal subresultant coefficients psc_j(f,g) w.r.t. v for
/// j = 0..min(deg f, deg g)-1 (psc_0 is the resultant).
std::vector<Poly> psc_chain(const Poly& f, const Poly& g, VarId v);

/// The j-th subresultant polynomial S_j(f,g) w.r.t. v.
Poly subresultant(const Poly& f, const Poly& g, VarId v, int j);

/// Determinant of a square polynomial matrix (Bareiss fraction-free).
Poly poly_det(std::vector<std::vector<Poly>> m);

/// Exact polynomial square root if f is a perfect square.
std::optional<Poly> poly_sqrt(const Poly& f);

}  // namespace bsa

#endif
