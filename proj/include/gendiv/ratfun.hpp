#pragma once

#include <string>

#include "gendiv/poly.hpp"

namespace gendiv {

/// Rational function num/den in lowest terms with monic denominator.
/// Zero is represented as 0/1.
class RatFun {
 public:
  RatFun() : num_(), den_(Rat(1)) {}
  RatFun(const Rat& c) : num_(c), den_(Rat(1)) {}
  RatFun(long c) : num_(Rat(c)), den_(Rat(1)) {}
  RatFun(const Poly& p) : num_(p), den_(Rat(1)) {}
  RatFun(const Poly& num, const Poly& den);

  static RatFun t_power(long e);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_poly() const { return den_.is_one(); }
  /// Numerator as a polynomial; throws when the denominator is non-trivial.
  const Poly& as_poly() const;

  /// deg num - deg den; the degree of f as a Laurent-type function at
  /// infinity.  Rejects zero.
  long laurent_degree() const;
  /// Vanishing order at infinity in the coordinate s = 1/t.
  long order_at_infinity() const { return -laurent_degree(); }
  /// Valuation at t = a (negative at a pole).  Rejects zero.
  long order_at(const Rat& a) const;

  Rat eval(const Rat& x) const;

  RatFun operator-() const { return RatFun::raw(-num_, den_); }
  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b);
  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

  RatFun inverse() const;
  /// Same function up to a nonzero constant, with monic numerator.
  RatFun monic_part() const;

  std::string str(const std::string& var = "t") const;

 private:
  static RatFun raw(Poly num, Poly den);  // assumes reduced, den monic
  Poly num_, den_;
};

}  // namespace gendiv
