#include "gendiv/poly.hpp"

#include <sstream>

#include "gendiv/error.hpp"

namespace gendiv {

Poly Poly::monomial(long deg, const Rat& c) {
  if (c.is_zero()) return Poly();
  std::vector<Rat> v(static_cast<std::size_t>(deg) + 1, Rat(0));
  v.back() = c;
  return Poly(std::move(v));
}

Poly Poly::linear_at(const Rat& a) {
  return Poly(std::vector<Rat>{-a, Rat(1)});
}

Poly Poly::operator-() const {
  std::vector<Rat> v(coeffs_);
  for (auto& c : v) c = -c;
  return Poly(std::move(v));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rat> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<Rat> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] -= b.coeffs_[i];
  return Poly(std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rat> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(v));
}

Poly operator*(const Rat& c, const Poly& p) {
  if (c.is_zero()) return Poly();
  std::vector<Rat> v(p.coeffs_);
  for (auto& x : v) x *= c;
  return Poly(std::move(v));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return leading().inverse() * *this;
}

Rat Poly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly();
  std::vector<Rat> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = Rat(static_cast<long>(i)) * coeffs_[i];
  return Poly(std::move(v));
}

Poly Poly::pow(long e) const {
  if (e < 0) throw ValidationError("negative polynomial power");
  Poly acc(Rat(1));
  Poly base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

std::vector<Rat> Poly::taylor_coeffs(const Rat& a, long count) const {
  // Repeated synthetic division by (t - a).
  std::vector<Rat> out;
  out.reserve(static_cast<std::size_t>(count));
  std::vector<Rat> work(coeffs_);
  for (long k = 0; k < count; ++k) {
    if (work.empty()) {
      out.emplace_back(0);
      continue;
    }
    Rat rem(0);
    for (auto it = work.rbegin(); it != work.rend(); ++it) {
      Rat tmp = *it;
      *it = rem;
      rem = rem * a + tmp;
    }
    out.push_back(rem);
    work.pop_back();  // slots now hold the quotient, one degree lower
  }
  return out;
}

long Poly::root_multiplicity(const Rat& a) const {
  if (is_zero()) throw ValidationError("root multiplicity of the zero polynomial");
  Poly lin = Poly::linear_at(a);
  Poly cur = *this;
  long mult = 0;
  while (cur.eval(a).is_zero()) {
    cur = exact_div(cur, lin);
    ++mult;
  }
  return mult;
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = degree(); i >= 0; --i) {
    Rat c = coeff(i);
    if (c.is_zero()) continue;
    if (!first) os << (c.sign() > 0 ? " + " : " - ");
    else if (c.sign() < 0) os << "-";
    Rat ac = c.abs();
    if (i == 0 || !ac.is_one()) os << ac.str();
    if (i > 0) {
      if (!ac.is_one()) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw ValidationError("polynomial division by zero");
  std::vector<Rat> rem(a.coeffs());
  long db = b.degree();
  Rat lead_inv = b.leading().inverse();
  long dq = a.degree() - db;
  if (dq < 0) return {Poly(), a};
  std::vector<Rat> quot(static_cast<std::size_t>(dq) + 1, Rat(0));
  for (long i = a.degree(); i >= db; --i) {
    Rat c = rem[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    Rat q = c * lead_inv;
    quot[static_cast<std::size_t>(i - db)] = q;
    for (long j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(i - db + j)] -= q * b.coeff(j);
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw ValidationError("inexact polynomial division");
  return q;
}

bool divides(const Poly& b, const Poly& a) {
  if (b.is_zero()) return a.is_zero();
  return divmod(a, b).second.is_zero();
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = y;
    y = r;
  }
  return x.monic();
}

Poly lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  return exact_div(a * b, gcd(a, b)).monic();
}

}  // namespace gendiv
