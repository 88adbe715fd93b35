#include "bsa/dyadic.hpp"

namespace bsa {

void Dyadic::normalize() {
    if (num_ == 0) {
        exp2_ = 0;
        return;
    }
    while (exp2_ > 0 && mpz_even_p(num_.get_mpz_t())) {
        num_ >>= 1;
        --exp2_;
    }
}

std::optional<Dyadic> Dyadic::from_rational(const Rational& q) {
    Integer den = q.get_den();
    unsigned k = 0;
    while (mpz_even_p(den.get_mpz_t())) {
        den >>= 1;
        ++k;
    }
    if (den != 1) return std::nullopt;
    return Dyadic(q.get_num(), k);
}

Rational Dyadic::to_rational() const {
    Integer den = 1;
    den <<= exp2_;
    Rational q(num_, den);
    q.canonicalize();
    return q;
}

Dyadic Dyadic::operator+(const Dyadic& o) const {
    unsigned k = std::max(exp2_, o.exp2_);
    Integer a = num_ << (k - exp2_);
    Integer b = o.num_ << (k - o.exp2_);
    return Dyadic(a + b, k);
}

Dyadic Dyadic::operator*(const Dyadic& o) const {
    return Dyadic(num_ * o.num_, exp2_ + o.exp2_);
}

std::string Dyadic::str() const {
    if (exp2_ == 0) return num_.get_str();
    Integer den = 1;
    den <<= exp2_;
    return num_.get_str() + "/" + den.get_str();
}

}  // namespace bsa
