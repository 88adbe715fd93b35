#ifndef BSA_CLASSEXPR_HPP
#define BSA_CLASSEXPR_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bsa/dyadic.hpp"
#include "bsa/formula.hpp"
#include "bsa/poly.hpp"

namespace bsa {

/// Canonical base/cover variable ids: base variables are renamed positionally
/// to x1, x2, ... and cover variables to y1, y2, ... These names are interned
/// first so their relative order is stable.
VarId canon_base_var(int i);   // 1-based
VarId canon_cover_var(int i);  // 1-based

/// A Zariski-constructible descriptor: equations and inequations over base
/// variables, plus cover equations y_k^2 = S_k introduced while eliminating
/// inequalities. Instances are always in canonical form:
///   - vacuous constant constraints dropped, unconstrained variables stripped
///     (reported as a power of L by make_canonical),
///   - variables renamed positionally, independent blocks sorted,
///   - per block the sign-involution x -> -x is applied when it yields a
///     smaller form (two descriptors isomorphic under global negation are
///     identified; in particular [y^2=R] = [y^2=-R] for odd R).
struct VarietyDescriptor {
    int nbase = 0;
    int ncover = 0;
    std::vector<Poly> eqs;    // over canonical base vars
    std::vector<Poly> neqs;   // over canonical base vars
    std::vector<Poly> covers; // covers[k-1] = S_k, i.e. y_k^2 = S_k

    bool operator==(const VarietyDescriptor& o) const;
    static int compare(const VarietyDescriptor& a, const VarietyDescriptor& b);
    bool operator<(const VarietyDescriptor& o) const { return compare(*this, o) < 0; }

    bool has_neqs() const { return !neqs.empty(); }
    size_t total_vars() const { return nbase + ncover; }

    /// The descriptor as a formula over its canonical variables (covers
    /// rendered as plain equations).
    BasicFormula to_formula() const;

    std::string str() const;
};

/// Canonicalization result: c * L^lpow * [desc], or a pure power of L when
/// desc is absent, or the zero class.
struct CanonicalAtom {
    bool zero = false;
    long lpow = 0;
    std::optional<VarietyDescriptor> desc;
};

/// Builds the canonical atom from raw parts. `base_vars` lists the ambient
/// variables in order; `covers` holds (cover var, S) pairs; polynomials may
/// use both base and cover variables of earlier entries only in S... (cover
/// polynomials range over base variables).
CanonicalAtom make_canonical(const std::vector<VarId>& base_vars, std::vector<Poly> eqs,
                             std::vector<Poly> neqs, std::vector<std::pair<VarId, Poly>> covers);

/// Formula with eqs/neqs only -> canonical atom.
CanonicalAtom descriptor_of_formula(const BasicFormula& f);

struct Atom {
    std::optional<VarietyDescriptor> desc;
    long lpow = 0;

    bool operator==(const Atom& o) const;
    bool operator<(const Atom& o) const;
    std::string str() const;
};

/// Z[1/2]-linear combination of atoms; the ring product concatenates variable
/// blocks of descriptors and adds L-exponents.
class ClassExpr {
public:
    ClassExpr() = default;
    static ClassExpr zero() { return ClassExpr(); }
    static ClassExpr one() { return lpower(0); }
    static ClassExpr lpower(long k);
    static ClassExpr from_atom(const CanonicalAtom& a, const Dyadic& c = Dyadic(1));
    static ClassExpr from_descriptor(const VarietyDescriptor& d);

    const std::map<Atom, Dyadic>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    ClassExpr operator-() const;
    ClassExpr operator+(const ClassExpr& o) const;
    ClassExpr operator-(const ClassExpr& o) const;
    ClassExpr operator*(const ClassExpr& o) const;
    ClassExpr& operator+=(const ClassExpr& o) { *this = *this + o; return *this; }
    ClassExpr& operator-=(const ClassExpr& o) { *this = *this - o; return *this; }
    ClassExpr& operator*=(const ClassExpr& o) { *this = *this * o; return *this; }
    ClassExpr scaled(const Dyadic& c) const;
    ClassExpr mul_lpow(long k) const;

    bool operator==(const ClassExpr& o) const { return terms_ == o.terms_; }
    bool operator!=(const ClassExpr& o) const { return !(*this == o); }

    void add_term(const Atom& a, const Dyadic& c);

    /// True when every atom is a pure power of L.
    bool is_l_polynomial() const;

    std::string str() const;

private:
    std::map<Atom, Dyadic> terms_;
};

/// Product of two descriptors: concatenated variable blocks (the ring product
/// of disjoint formulas), recanonicalized.
ClassExpr descriptor_product(const VarietyDescriptor& a, const VarietyDescriptor& b);

}  // namespace bsa

#endif
