#include "gendiv/ratfun.hpp"

#include <sstream>

#include "gendiv/error.hpp"

namespace gendiv {

RatFun::RatFun(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw ValidationError("rational function with zero denominator");
  if (num.is_zero()) {
    num_ = Poly();
    den_ = Poly(Rat(1));
    return;
  }
  Poly g = gcd(num, den);
  Poly n = exact_div(num, g);
  Poly d = exact_div(den, g);
  Rat lead = d.leading();
  num_ = lead.inverse() * n;
  den_ = d.monic();
}

RatFun RatFun::raw(Poly num, Poly den) {
  RatFun f;
  f.num_ = std::move(num);
  f.den_ = std::move(den);
  return f;
}

RatFun RatFun::t_power(long e) {
  if (e >= 0) return RatFun(Poly::monomial(e, Rat(1)));
  return RatFun(Poly(Rat(1)), Poly::monomial(-e, Rat(1)));
}

const Poly& RatFun::as_poly() const {
  if (!is_poly()) throw ValidationError("rational function is not a polynomial: " + str());
  return num_;
}

long RatFun::laurent_degree() const {
  if (is_zero()) throw ValidationError("laurent degree of zero");
  return num_.degree() - den_.degree();
}

long RatFun::order_at(const Rat& a) const {
  if (is_zero()) throw ValidationError("order of zero function");
  return num_.root_multiplicity(a) - den_.root_multiplicity(a);
}

Rat RatFun::eval(const Rat& x) const {
  Rat d = den_.eval(x);
  if (d.is_zero()) throw ValidationError("evaluation at a pole");
  return num_.eval(x) / d;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator*(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
  if (b.is_zero()) throw ValidationError("division by zero function");
  return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}

RatFun RatFun::inverse() const {
  if (is_zero()) throw ValidationError("inverse of zero function");
  return RatFun(den_, num_);
}

RatFun RatFun::monic_part() const {
  if (is_zero()) return *this;
  return raw(num_.monic(), den_);
}

std::string RatFun::str(const std::string& var) const {
  if (is_poly()) return num_.str(var);
  // Prefer Laurent notation c*t^-k when the denominator is a power of t.
  bool den_is_t_power = true;
  for (long i = 0; i < den_.degree(); ++i)
    if (!den_.coeff(i).is_zero()) { den_is_t_power = false; break; }
  std::ostringstream os;
  if (den_is_t_power && num_.degree() == 0) {
    Rat c = num_.coeff(0);
    if (!c.is_one()) os << c.str() << "*";
    os << var << "^-" << den_.degree();
    return os.str();
  }
  os << "(" << num_.str(var) << ")/(" << den_.str(var) << ")";
  return os.str();
}

}  // namespace gendiv
