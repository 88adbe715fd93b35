#ifndef BSA_DYADIC_HPP
#define BSA_DYADIC_HPP

#include <gmpxx.h>
#include <optional>
#include <stdexcept>
#include <string>

namespace bsa {

using Rational = mpq_class;
using Integer = mpz_class;

/// Element of Z[1/2], stored as num / 2^exp2 with num odd (or zero) whenever
/// exp2 > 0. Kept as a separate type from Rational so that class coefficients
/// are dyadic by construction; converting a general rational is a checked,
/// explicit step.
class Dyadic {
public:
    Dyadic() : num_(0), exp2_(0) {}
    Dyadic(long n) : num_(n), exp2_(0) {}
    Dyadic(Integer n) : num_(std::move(n)), exp2_(0) {}
    Dyadic(Integer n, unsigned k) : num_(std::move(n)), exp2_(k) { normalize(); }

    static Dyadic half_power(unsigned k) { return Dyadic(1, k); }  // 2^-k

    /// Exact conversion; fails unless the denominator is a power of two.
    static std::optional<Dyadic> from_rational(const Rational& q);

    const Integer& num() const { return num_; }
    unsigned exp2() const { return exp2_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return exp2_ == 0; }
    int sign() const { return sgn(num_); }

    Rational to_rational() const;

    Dyadic operator-() const { return Dyadic(-num_, exp2_); }
    Dyadic operator+(const Dyadic& o) const;
    Dyadic operator-(const Dyadic& o) const { return *this + (-o); }
    Dyadic operator*(const Dyadic& o) const;
    Dyadic& operator+=(const Dyadic& o) { *this = *this + o; return *this; }
    Dyadic& operator-=(const Dyadic& o) { *this = *this - o; return *this; }
    Dyadic& operator*=(const Dyadic& o) { *this = *this * o; return *this; }

    bool operator==(const Dyadic& o) const { return num_ == o.num_ && exp2_ == o.exp2_; }
    bool operator!=(const Dyadic& o) const { return !(*this == o); }

    /// Rendered as "a" when integral, else "a/2^k" in plain fraction form.
    std::string str() const;

private:
    void normalize();
    Integer num_;
    unsigned exp2_;
};

}  // namespace bsa

#endif
