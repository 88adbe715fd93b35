#include "bsa/virtualpoly.hpp"

#include <sstream>

namespace bsa {

VirtualPoly VirtualPoly::upow(int k, const Dyadic& c) {
    VirtualPoly p;
    p.set(k, c);
    return p;
}

void VirtualPoly::set(int k, const Dyadic& c) {
    if (c.is_zero())
        coeffs_.erase(k);
    else
        coeffs_[k] = c;
}

int VirtualPoly::degree() const {
    if (coeffs_.empty()) return 0;
    return coeffs_.rbegin()->first;
}

Dyadic VirtualPoly::coeff(int k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? Dyadic(0) : it->second;
}

VirtualPoly VirtualPoly::operator-() const {
    VirtualPoly p;
    for (auto& [k, c] : coeffs_) p.coeffs_.emplace(k, -c);
    return p;
}

VirtualPoly VirtualPoly::operator+(const VirtualPoly& o) const {
    VirtualPoly p = *this;
    for (auto& [k, c] : o.coeffs_) p.set(k, p.coeff(k) + c);
    return p;
}

VirtualPoly VirtualPoly::operator-(const VirtualPoly& o) const { return *this + (-o); }

VirtualPoly VirtualPoly::operator*(const VirtualPoly& o) const {
    VirtualPoly p;
    for (auto& [k1, c1] : coeffs_)
        for (auto& [k2, c2] : o.coeffs_) p.set(k1 + k2, p.coeff(k1 + k2) + c1 * c2);
    return p;
}

VirtualPoly VirtualPoly::scaled(const Dyadic& c) const {
    VirtualPoly p;
    if (c.is_zero()) return p;
    for (auto& [k, k2] : coeffs_) p.coeffs_.emplace(k, k2 * c);
    return p;
}

Rational VirtualPoly::eval(long x) const {
    Rational sum(0);
    for (auto& [k, c] : coeffs_) {
        Rational t = c.to_rational();
        if (k >= 0) {
            for (int i = 0; i < k; ++i) t *= x;
        } else {
            if (x == 0) throw std::domain_error("eval of Laurent polynomial at 0");
            for (int i = 0; i < -k; ++i) t /= x;
        }
        sum += t;
    }
    return sum;
}

bool VirtualPoly::integer_coeffs() const {
    for (auto& [k, c] : coeffs_)
        if (!c.is_integer()) return false;
    return true;
}

std::string VirtualPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        auto [k, c] = *it;
        Dyadic a = c;
        if (first) {
            if (a.sign() < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        first = false;
        std::string us = k == 0 ? "" : (k == 1 ? "u" : "u^" + std::to_string(k));
        if (us.empty())
            os << a.str();
        else if (a == Dyadic(1))
            os << us;
        else
            os << a.str() << "*" << us;
    }
    return os.str();
}

}  // namespace bsa
