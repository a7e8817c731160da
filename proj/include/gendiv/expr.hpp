#pragma once

#include <memory>
#include <variant>

#include "gendiv/divisor.hpp"

namespace gendiv {

/// Rational-function literal over t: +, -, *, /, ^ and parentheses, with no
/// implicit multiplication.
RatFun parse_rational_function(const std::string& text);

enum class DivKind { Generalized, Omega };

/// Parsed divisor expression.  Grammar:
///   P(a) | INF | S(i) | W(i, c0, c1, ...) | div(f) | K | Kw
///   e1 + e2 | -e | wdiv(e) | (e)
/// Type checking happens at parse time; in particular the sum of two
/// omega-divisors is rejected before any curve is involved.
class DivExpr {
 public:
  DivKind kind() const;
  const std::string& text() const;

  struct Node;

 private:
  friend DivExpr parse_div_expr(const std::string& text);
  friend std::variant<GDivisor, OmegaDivisor> eval_div_expr(const Curve& c, const DivExpr& e);
  std::shared_ptr<const Node> root_;
  std::string text_;
};

DivExpr parse_div_expr(const std::string& text);
std::variant<GDivisor, OmegaDivisor> eval_div_expr(const Curve& c, const DivExpr& e);

}  // namespace gendiv
