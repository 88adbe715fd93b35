#ifndef BSA_FORMULA_HPP
#define BSA_FORMULA_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "bsa/poly.hpp"

namespace bsa {

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, int line, int col)
        : std::runtime_error(msg + " at " + std::to_string(line) + ":" + std::to_string(col)),
          line(line),
          col(col) {}
    int line, col;
};

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A conjunction of polynomial constraints over a declared variable list:
/// eqs P = 0, neqs Q != 0, pos R > 0, and geq R >= 0 kept as sugar (it has no
/// class of its own; measuring expands it into > and =).
///
/// Canonical form: equations and inequations are scaled monic; strict
/// inequalities are scaled by a positive rational only (R > 0 and -R > 0 are
/// different formulas); duplicates removed; lists sorted. A formula is
/// identified by its constraints, not by its solution set.
struct BasicFormula {
    std::vector<VarId> vars;  // declared order
    std::vector<Poly> eqs;
    std::vector<Poly> neqs;
    std::vector<Poly> pos;
    std::vector<Poly> geq;

    bool is_basic() const { return geq.empty(); }
    size_t nvars() const { return vars.size(); }
    size_t constraint_count() const {
        return eqs.size() + neqs.size() + pos.size() + geq.size();
    }
    std::vector<Poly> all_polys() const;

    void canonicalize();

    bool operator==(const BasicFormula& o) const;

    /// Canonical text in the input grammar.
    std::string str() const;
};

/// Conjunction over the union of variables; requires disjoint variable sets
/// unless `rename` is set, in which case clashing variables of `b` get fresh
/// primed names.
BasicFormula product_formula(const BasicFormula& a, const BasicFormula& b, bool rename = false);

BasicFormula parse_formula(const std::string& text);

/// Parses a polynomial expression over the given variables (used by table and
/// resolution files).
Poly parse_poly_expr(const std::string& text, const std::vector<VarId>& vars);

}  // namespace bsa

#endif
