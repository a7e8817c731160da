#include <doctest.h>

#include "gendiv/error.hpp"
#include "gendiv/expr.hpp"

using namespace gendiv;

namespace {

Curve the_345() {
  static Curve c = curve_from_semigroup({3, 4, 5});
  return c;
}

GDivisor evalg(const Curve& c, const std::string& s) {
  return std::get<GDivisor>(eval_div_expr(c, parse_div_expr(s)));
}

OmegaDivisor evalw(const Curve& c, const std::string& s) {
  return std::get<OmegaDivisor>(eval_div_expr(c, parse_div_expr(s)));
}

}  // namespace

TEST_CASE("rational function literals") {
  CHECK(parse_rational_function("t^3") == RatFun::t_power(3));
  CHECK(parse_rational_function("1/t^3") == RatFun::t_power(-3));
  CHECK(parse_rational_function("t^-2") == RatFun::t_power(-2));
  CHECK(parse_rational_function("(t-1)*(t+1)") ==
        RatFun(Poly::linear_at(Rat(1)) * Poly::linear_at(Rat(-1))));
  CHECK(parse_rational_function("(t-1)/(t-2)") ==
        RatFun(Poly::linear_at(Rat(1)), Poly::linear_at(Rat(2))));
  CHECK(parse_rational_function("3/2") == RatFun(Rat(3, 2)));
  CHECK(parse_rational_function(" - t + t ") == RatFun());
  CHECK_THROWS_AS(parse_rational_function("2t"), ParseError);     // no implicit product
  CHECK_THROWS_AS(parse_rational_function("t^(2)"), ParseError);  // integer exponents only
  CHECK_THROWS_AS(parse_rational_function("x"), ParseError);
}

TEST_CASE("divisor expressions evaluate to the library objects") {
  Curve c = the_345();
  CHECK(evalg(c, "S(0)") == point_divisor(c, Point::singular(0)));
  CHECK(evalg(c, "P(2)") == point_divisor(c, Point::smooth(Rat(2))));
  CHECK(evalg(c, "P(-1/2)") == point_divisor(c, Point::smooth(Rat(-1, 2))));
  CHECK(evalg(c, "INF") == point_divisor(c, Point::infinity()));
  CHECK(evalg(c, "div(1)") == zero_divisor(c));
  CHECK(evalg(c, "S(0)+INF") ==
        dsum(point_divisor(c, Point::singular(0)), point_divisor(c, Point::infinity())));
  CHECK(evalg(c, "-S(0)") == dminus(point_divisor(c, Point::singular(0))));
  CHECK(evalg(c, "div((t-2)/(t-3))") ==
        principal_divisor(c, RatFun(Poly::linear_at(Rat(2)), Poly::linear_at(Rat(3)))));
  CHECK(degree(evalg(c, "S(0)+P(2)+P(3)")) == 3);
}

TEST_CASE("omega expressions") {
  Curve c = the_345();
  CHECK(parse_div_expr("Kw").kind() == DivKind::Omega);
  CHECK(parse_div_expr("K").kind() == DivKind::Generalized);
  CHECK(evalw(c, "Kw") == canonical_omega_divisor(c));
  CHECK(evalw(c, "W(0)") == omega_point_divisor(c, Point::singular(0)));
  Vec cov = Vec::Constant(2, Rat(0));
  cov(0) = Rat(1);
  cov(1) = Rat(-2);
  CHECK(evalw(c, "W(0, 1, -2)") == omega_point_divisor(c, Point::singular(0), cov));
  CHECK(evalw(c, "wdiv(P(2))") ==
        mixed_sum(point_divisor(c, Point::smooth(Rat(2))), zero_omega_divisor(c)));
  CHECK(evalw(c, "P(2)+W(0)") ==
        mixed_sum(point_divisor(c, Point::smooth(Rat(2))),
                  omega_point_divisor(c, Point::singular(0))));
  // Negating an omega-divisor produces a generalized divisor.
  CHECK(parse_div_expr("-Kw").kind() == DivKind::Generalized);
  CHECK(evalg(c, "-Kw") == negation(canonical_omega_divisor(c)));
}

TEST_CASE("type errors are caught at parse time") {
  CHECK_THROWS_AS(parse_div_expr("Kw + W(0)"), ParseError);
  CHECK_THROWS_AS(parse_div_expr("wdiv(Kw)"), ParseError);
  CHECK_THROWS_AS(parse_div_expr("Q(1)"), ParseError);
  CHECK_THROWS_AS(parse_div_expr("P(2"), ParseError);
  CHECK_THROWS_AS(parse_div_expr("P(2) extra"), ParseError);
  CHECK_THROWS_AS(parse_div_expr("div(0)"), ParseError);
  CHECK_THROWS_AS(parse_div_expr("W(1/2)"), ParseError);  // cluster index must be integral
}

TEST_CASE("mixed sums associate through the grammar") {
  Curve c = the_345();
  OmegaDivisor a = evalw(c, "P(2)+wdiv(P(3))");
  OmegaDivisor b = evalw(c, "P(3)+wdiv(P(2))");
  CHECK(a == b);
  // The canonical-divisor symbol needs a reflexive dualizing sheaf.
  CHECK_THROWS_AS(eval_div_expr(c, parse_div_expr("K")), ValidationError);
  Curve cusp = curve_from_clusters({cusp_cluster(Rat(0))});
  CHECK(evalg(cusp, "K") == canonical_divisor(cusp));
}
