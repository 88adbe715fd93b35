#ifndef BSA_VIRTUALPOLY_HPP
#define BSA_VIRTUALPOLY_HPP

#include <map>
#include <string>

#include "bsa/dyadic.hpp"

namespace bsa {

/// Laurent polynomial in u with coefficients in Z[1/2]. Images of single
/// algebraic descriptors have integer coefficients and no negative powers;
/// dyadic weights and L-localization enter through chi and the zeta layer.
class VirtualPoly {
public:
    VirtualPoly() = default;
    explicit VirtualPoly(const Dyadic& c) { set(0, c); }
    explicit VirtualPoly(long c) { set(0, Dyadic(c)); }
    static VirtualPoly upow(int k, const Dyadic& c = Dyadic(1));

    const std::map<int, Dyadic>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const;  // highest power; 0 for the zero polynomial
    Dyadic coeff(int k) const;

    VirtualPoly operator-() const;
    VirtualPoly operator+(const VirtualPoly& o) const;
    VirtualPoly operator-(const VirtualPoly& o) const;
    VirtualPoly operator*(const VirtualPoly& o) const;
    VirtualPoly& operator+=(const VirtualPoly& o) { *this = *this + o; return *this; }
    VirtualPoly& operator-=(const VirtualPoly& o) { *this = *this - o; return *this; }
    VirtualPoly& operator*=(const VirtualPoly& o) { *this = *this * o; return *this; }
    VirtualPoly scaled(const Dyadic& c) const;

    bool operator==(const VirtualPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const VirtualPoly& o) const { return !(*this == o); }

    /// Exact evaluation at an integer (u = -1 gives the Euler characteristic
    /// with compact supports).
    Rational eval(long x) const;

    bool integer_coeffs() const;

    std::string str() const;

private:
    void set(int k, const Dyadic& c);
    std::map<int, Dyadic> coeffs_;
};

}  // namespace bsa

#endif
