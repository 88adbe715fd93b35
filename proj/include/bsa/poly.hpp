#ifndef BSA_POLY_HPP
#define BSA_POLY_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bsa/dyadic.hpp"

namespace bsa {

/// Variable identifiers are interned strings; the intern index fixes the
/// global variable order for the session.
using VarId = int;

VarId intern_var(const std::string& name);
const std::string& var_name(VarId v);

/// Sparse monomial: (var, exponent) pairs, sorted by var, exponents > 0.
using Mono = std::vector<std::pair<VarId, int>>;

int mono_degree(const Mono& m);
int mono_degree_in(const Mono& m, VarId v);
Mono mono_mul(const Mono& a, const Mono& b);

/// Graded-lexicographic, higher terms first (so map.begin() is the leading term).
struct MonoGrlexDesc {
    bool operator()(const Mono& a, const Mono& b) const;
};

/// Exact sparse multivariate polynomial over Q. Immutable in spirit: all
/// operations return new values; no zero coefficients are stored.
class Poly {
public:
    using TermMap = std::map<Mono, Rational, MonoGrlexDesc>;

    Poly() = default;
    explicit Poly(const Rational& c);
    explicit Poly(long c);
    static Poly var(VarId v, int exp = 1);
    static Poly var(const std::string& name, int exp = 1);
    static Poly term(const Rational& c, const Mono& m);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term value; the polynomial must be constant.
    Rational constant_value() const;

    const TermMap& terms() const { return terms_; }
    int total_degree() const;  // -1 for the zero polynomial
    int degree_in(VarId v) const;
    std::vector<VarId> vars() const;
    bool uses_var(VarId v) const;
    size_t term_count() const { return terms_.size(); }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
    Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }
    Poly operator*(const Rational& c) const;
    Poly pow(int n) const;

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }
    /// Total order compatible with canonical form (term-by-term grlex, then coefficients).
    static int compare(const Poly& a, const Poly& b);
    bool operator<(const Poly& o) const { return compare(*this, o) < 0; }

    /// Leading coefficient / monomial w.r.t. the global grlex order.
    const Rational& leading_coeff() const;
    const Mono& leading_mono() const;

    Poly substitute(VarId v, const Poly& repl) const;
    Poly eval_partial(VarId v, const Rational& val) const;
    Rational eval(const std::map<VarId, Rational>& point) const;
    Poly derivative(VarId v) const;
    Poly rename(const std::map<VarId, VarId>& repl) const;
    /// x -> -x for every variable in the set.
    Poly negate_vars(const std::set<VarId>& vs) const;

    bool is_homogeneous() const;  // zero polynomial counts as homogeneous
    /// If the polynomial is c * m for a single monomial m, returns (c, m).
    std::optional<std::pair<Rational, Mono>> as_monomial() const;

    /// Coefficients as polynomials in the remaining variables, dense in v
    /// (index = power of v, size = degree_in(v)+1). Zero polynomial -> {}.
    std::vector<Poly> coeffs_in(VarId v) const;
    static Poly from_coeffs_in(VarId v, const std::vector<Poly>& cs);

    /// Dense rational coefficient list for a univariate polynomial in v.
    std::vector<Rational> univariate_coeffs(VarId v) const;

    /// Divides out the rational content, making the leading coefficient 1.
    Poly monic() const;
    /// Multiplies by 1/|content|, preserving sign of the leading coefficient.
    Poly positive_scaled() const;

    std::string str() const;

private:
    void strip_zeros();
    TermMap terms_;
};

Poly operator*(const Rational& c, const Poly& p);

}  // namespace bsa

#endif
