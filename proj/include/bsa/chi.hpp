#ifndef BSA_CHI_HPP
#define BSA_CHI_HPP

#include "bsa/classexpr.hpp"
#include "bsa/formula.hpp"

namespace bsa {

/// The realization chi: inequalities are eliminated one at a time through the
/// signed double-cover average
///   chi([A, R>0]) = 1/4 (chi([A, Y^2=R]) - chi([A, Y^2=-R])) + 1/2 chi([A, R!=0]).
/// The formula must be basic (no >= sugar).
ClassExpr chi_inductive(const BasicFormula& f);

/// The same class as a single signed sum over 3^r inequality-free atoms: for
/// each subset I of the r inequalities and sign vector eps on I, the atom
/// carries covers Y_j^2 = eps_j R_j (j in I) and inequations R_k != 0 (k not
/// in I), with coefficient (prod eps) / 2^(r+|I|).
ClassExpr chi_closed_form(const BasicFormula& f);

/// Expands non-strict inequalities by the convention
/// [A, R>=0] = [A, R>0] + [A, R=0], then measures via the closed form.
ClassExpr chi_formula(const BasicFormula& f);

/// Expansion of a >=-formula into basic formulas (used by chi_formula and the
/// realization layer).
std::vector<BasicFormula> expand_geq(const BasicFormula& f);

/// Replaces every atom by its inequation-free expansion via
/// [A, Q != 0] = [A] - [A, Q = 0], fully distributed.
ClassExpr eliminate_neq(const ClassExpr& c);

}  // namespace bsa

#endif
