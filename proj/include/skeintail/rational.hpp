#pragma once

#include <optional>
#include <string>
#include <utility>

#include "skeintail/laurent.hpp"

namespace skein {

// Element of the fraction field of Z[v, v^-1]. Canonical form: numerator and
// denominator coprime, denominator starting at v^0 with positive leading
// coefficient. Equal functions therefore have equal representations.
class RationalFn {
 public:
  RationalFn() : den_(LaurentPoly::constant(1)) {}
  RationalFn(LaurentPoly num)  // NOLINT(google-explicit-constructor)
      : num_(std::move(num)), den_(LaurentPoly::constant(1)) {
    normalize();
  }
  RationalFn(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error(ErrorKind::DivisionByZero, "zero denominator");
    normalize();
  }

  const LaurentPoly& numerator() const noexcept { return num_; }
  const LaurentPoly& denominator() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }

  // True when the value lies in Z[v, v^-1].
  bool is_laurent() const noexcept { return den_ == LaurentPoly::constant(1); }

  std::optional<LaurentPoly> to_laurent() const {
    if (!is_laurent()) return std::nullopt;
    return num_;
  }

  RationalFn inverse() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of 0");
    return RationalFn(den_, num_);
  }

  RationalFn operator-() const {
    RationalFn r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend RationalFn operator+(const RationalFn& a, const RationalFn& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RationalFn(a.num_ + b.num_, a.den_);
    return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFn operator-(const RationalFn& a, const RationalFn& b) { return a + (-b); }

  friend RationalFn operator*(const RationalFn& a, const RationalFn& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_laurent() && b.is_laurent()) return RationalFn(a.num_ * b.num_);
    return RationalFn(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFn operator/(const RationalFn& a, const RationalFn& b) { return a * b.inverse(); }

  RationalFn& operator+=(const RationalFn& b) { return *this = *this + b; }
  RationalFn& operator-=(const RationalFn& b) { return *this = *this - b; }
  RationalFn& operator*=(const RationalFn& b) { return *this = *this * b; }

  friend bool operator==(const RationalFn& a, const RationalFn& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_q_string() const {
    if (is_laurent()) return num_.to_q_string();
    return "(" + num_.to_q_string() + ")/(" + den_.to_q_string() + ")";
  }

 private:
  void normalize() {
    if (num_.is_zero()) {
      den_ = LaurentPoly::constant(1);
      return;
    }
    if (!den_.is_unit_monomial()) {
      const LaurentPoly g = gcd(num_, den_);
      if (!g.is_unit_monomial()) {
        num_ = *exact_quotient(num_, g);
        den_ = *exact_quotient(den_, g);
      }
    }
    const int shift = den_.min_exponent();
    num_ = num_.shifted(-shift);
    den_ = den_.shifted(-shift);
    if (den_.leading_coefficient() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
  }

  LaurentPoly num_;
  LaurentPoly den_;
};

}  // namespace skein
