#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gendiv/rational.hpp"

namespace gendiv {

/// Dense univariate polynomial over the rationals, coefficients stored in
/// ascending degree with no trailing zeros.  The zero polynomial has an empty
/// coefficient vector and degree -1.
class Poly {
 public:
  Poly() = default;
  Poly(const Rat& c) { if (!c.is_zero()) coeffs_.push_back(c); }
  Poly(long c) : Poly(Rat(c)) {}
  explicit Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Poly t() { return monomial(1, Rat(1)); }
  static Poly monomial(long deg, const Rat& c);
  /// (t - a)
  static Poly linear_at(const Rat& a);

  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
  bool is_monic() const { return !is_zero() && coeffs_.back().is_one(); }
  Rat coeff(long i) const {
    return (i >= 0 && i < static_cast<long>(coeffs_.size())) ? coeffs_[i] : Rat(0);
  }
  Rat leading() const { return is_zero() ? Rat(0) : coeffs_.back(); }
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rat& c, const Poly& p);
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
  Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
  Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

  Poly monic() const;
  Rat eval(const Rat& x) const;
  Poly derivative() const;
  Poly pow(long e) const;

  /// First `count` Taylor coefficients of the expansion at x = a, i.e. the
  /// coefficients of (t-a)^0 .. (t-a)^{count-1}.
  std::vector<Rat> taylor_coeffs(const Rat& a, long count) const;

  /// Multiplicity of the root a (0 when p(a) != 0); the zero polynomial is
  /// rejected.
  long root_multiplicity(const Rat& a) const;

  std::string str(const std::string& var = "t") const;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }
  std::vector<Rat> coeffs_;
};

/// Quotient and remainder of a by b (b nonzero): a = q*b + r, deg r < deg b.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Exact quotient; throws if b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);
bool divides(const Poly& b, const Poly& a);
/// Monic gcd; gcd(0,0) = 0.
Poly gcd(const Poly& a, const Poly& b);
Poly lcm(const Poly& a, const Poly& b);

}  // namespace gendiv
