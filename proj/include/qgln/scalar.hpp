#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "qgln/errors.hpp"

namespace qgln {

// Exact rational number. Always kept in canonical form: positive
// denominator, gcd(|num|, den) = 1. Equality is structural equality of the
// canonical form. All identity checks in this project reduce to exact
// equality of Scalars.
class Scalar {
  public:
    Scalar() : v_(0) {}
    Scalar(long n) : v_(n) {} // NOLINT: implicit on purpose, 2*x etc.
    Scalar(long num, long den) {
        if (den == 0) throw DivisionByZero();
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Scalar(const mpq_class& v) : v_(v) {}

    bool is_zero() const { return mpq_sgn(v_.get_mpq_t()) == 0; }
    bool is_one() const { return v_ == 1; }
    int sgn() const { return mpq_sgn(v_.get_mpq_t()); }

    Scalar inv() const {
        if (is_zero()) throw DivisionByZero();
        return Scalar(mpq_class(1) / v_);
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) { return Scalar(mpq_class(a.v_ + b.v_)); }
    friend Scalar operator-(const Scalar& a, const Scalar& b) { return Scalar(mpq_class(a.v_ - b.v_)); }
    friend Scalar operator*(const Scalar& a, const Scalar& b) { return Scalar(mpq_class(a.v_ * b.v_)); }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        if (b.is_zero()) throw DivisionByZero();
        return Scalar(mpq_class(a.v_ / b.v_));
    }
    Scalar operator-() const { return Scalar(mpq_class(-v_)); }

    Scalar& operator+=(const Scalar& o) { v_ += o.v_; return *this; }
    Scalar& operator-=(const Scalar& o) { v_ -= o.v_; return *this; }
    Scalar& operator*=(const Scalar& o) { v_ *= o.v_; return *this; }
    Scalar& operator/=(const Scalar& o) {
        if (o.is_zero()) throw DivisionByZero();
        v_ /= o.v_;
        return *this;
    }

    // s += a*b without an extra canonicalization pass on the product
    void add_mul(const Scalar& a, const Scalar& b) { v_ += a.v_ * b.v_; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    std::string num_str() const { return v_.get_num().get_str(); }
    std::string den_str() const { return v_.get_den().get_str(); }
    std::string str() const { return v_.get_den() == 1 ? num_str() : num_str() + "/" + den_str(); }

  private:
    mpq_class v_;
};

inline Scalar pow_int(const Scalar& base, int e) {
    if (e < 0) return pow_int(base.inv(), -e);
    Scalar r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

} // namespace qgln
