#include <doctest.h>

#include "gendiv/poly.hpp"
#include "gendiv/ratfun.hpp"

using namespace gendiv;

namespace {
Poly parse_simple(std::initializer_list<long> ascending) {
  std::vector<Rat> c;
  for (long x : ascending) c.emplace_back(x);
  return Poly(std::move(c));
}
}  // namespace

TEST_CASE("polynomial ring basics") {
  Poly t = Poly::t();
  Poly p = t * t + Poly(Rat(2)) * t + Poly(Rat(1));  // (t+1)^2
  CHECK(p.degree() == 2);
  CHECK(p.eval(Rat(3)) == Rat(16));
  CHECK(p == (t + Poly(Rat(1))) * (t + Poly(Rat(1))));
  CHECK(p.derivative() == Rat(2) * (t + Poly(Rat(1))));
}

TEST_CASE("divmod and gcd") {
  Poly t = Poly::t();
  Poly a = t.pow(3) - Poly(Rat(1));           // (t-1)(t^2+t+1)
  Poly b = t.pow(2) - Poly(Rat(1));           // (t-1)(t+1)
  auto [q, r] = divmod(a, b);
  CHECK(q == t);
  CHECK(r == t - Poly(Rat(1)));
  CHECK(gcd(a, b) == t - Poly(Rat(1)));
  CHECK(lcm(a, b) == exact_div(a * b, t - Poly(Rat(1))));
  CHECK(divides(t - Poly(Rat(1)), a));
  CHECK(!divides(t + Poly(Rat(2)), a));
  CHECK_THROWS_AS(exact_div(a, t + Poly(Rat(2))), ValidationError);
}

TEST_CASE("taylor coefficients at a point") {
  // p = (t-2)^2 * (t+1) = t^3 - 3t^2 + 4 ; Taylor at 2: 0 + 0*(t-2) + 3*(t-2)^2 + ...
  Poly p = Poly::linear_at(Rat(2)).pow(2) * (Poly::t() + Poly(Rat(1)));
  auto c = p.taylor_coeffs(Rat(2), 4);
  CHECK(c[0] == Rat(0));
  CHECK(c[1] == Rat(0));
  CHECK(c[2] == Rat(3));
  CHECK(c[3] == Rat(1));
  CHECK(p.root_multiplicity(Rat(2)) == 2);
  CHECK(p.root_multiplicity(Rat(5)) == 0);
}

TEST_CASE("rational function normalization") {
  Poly t = Poly::t();
  RatFun f(t.pow(2) - Poly(Rat(1)), Rat(2) * (t - Poly(Rat(1))));
  CHECK(f.is_poly());
  CHECK(f.as_poly() == Rat(1, 2) * (t + Poly(Rat(1))));
  RatFun g = RatFun::t_power(-3);
  CHECK(g.laurent_degree() == -3);
  CHECK(g.order_at_infinity() == 3);
  CHECK(g.order_at(Rat(0)) == -3);
  CHECK((f * g * g.inverse()) == f);
  CHECK(RatFun(parse_simple({0, 0, 2})).monic_part() == RatFun(parse_simple({0, 0, 1})));
}

TEST_CASE("laurent degree is additive") {
  RatFun f(Poly::t().pow(2) + Poly(Rat(1)), Poly::linear_at(Rat(1)));
  RatFun g(Poly(Rat(3)), Poly::t().pow(4));
  CHECK((f * g).laurent_degree() == f.laurent_degree() + g.laurent_degree());
}
