#include "gendiv/expr.hpp"

#include <cctype>

#include "gendiv/error.hpp"

namespace gendiv {

namespace {

struct Lexer {
  std::string s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) { ++pos; return true; }
    return false;
  }
  void expect(char c, const std::string& where) {
    if (!accept(c))
      throw ParseError(std::string("expected '") + c + "' " + where + " at position " +
                       std::to_string(pos) + " in '" + s + "'");
  }
  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) ++pos;
    return s.substr(start, pos - start);
  }
  Rat rational() {
    skip_ws();
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    // Only treat '/' as part of the literal when digits follow; otherwise it
    // is the division operator of the surrounding grammar.
    if (pos + 1 < s.size() && s[pos] == '/' &&
        std::isdigit(static_cast<unsigned char>(s[pos + 1]))) {
      ++pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    if (pos == start) throw ParseError("expected a rational number at position " +
                                       std::to_string(pos) + " in '" + s + "'");
    return Rat::parse(s.substr(start, pos - start));
  }
  long integer() {
    Rat r = rational();
    if (!r.is_integer()) throw ParseError("expected an integer in '" + s + "'");
    return static_cast<long>(r.numerator().get_si());
  }
};

// --- rational function literals ------------------------------------------

RatFun rf_expr(Lexer& lx);

RatFun rf_base(Lexer& lx) {
  if (lx.accept('(')) {
    RatFun e = rf_expr(lx);
    lx.expect(')', "to close a group");
    return e;
  }
  if (lx.peek() == 't') {
    ++lx.pos;
    return RatFun(Poly::t());
  }
  char c = lx.peek();
  if (std::isdigit(static_cast<unsigned char>(c))) return RatFun(lx.rational());
  throw ParseError("unexpected character '" + std::string(1, c) + "' in function literal '" +
                   lx.s + "'");
}

RatFun rf_factor(Lexer& lx) {
  if (lx.accept('-')) return -rf_factor(lx);
  RatFun base = rf_base(lx);
  if (lx.accept('^')) {
    lx.skip_ws();
    bool neg = lx.accept('-');
    long e = lx.integer();
    if (neg) e = -e;
    if (base.is_zero() && e <= 0) throw ParseError("zero cannot be raised to a nonpositive power");
    RatFun out(Rat(1));
    RatFun b = e >= 0 ? base : base.inverse();
    for (long i = 0; i < (e >= 0 ? e : -e); ++i) out = out * b;
    return out;
  }
  return base;
}

RatFun rf_term(Lexer& lx) {
  RatFun acc = rf_factor(lx);
  while (true) {
    if (lx.accept('*')) acc = acc * rf_factor(lx);
    else if (lx.accept('/')) acc = acc / rf_factor(lx);
    else return acc;
  }
}

RatFun rf_expr(Lexer& lx) {
  RatFun acc = rf_term(lx);
  while (true) {
    if (lx.accept('+')) acc = acc + rf_term(lx);
    else if (lx.accept('-')) acc = acc - rf_term(lx);
    else return acc;
  }
}

}  // namespace

RatFun parse_rational_function(const std::string& text) {
  Lexer lx{text};
  RatFun f = rf_expr(lx);
  if (!lx.eof())
    throw ParseError("trailing input at position " + std::to_string(lx.pos) + " in '" + text + "'");
  return f;
}

// --- divisor expressions ---------------------------------------------------

struct DivExpr::Node {
  enum class Op { SmoothPoint, Infinity, SingularPoint, OmegaPoint, Div, Sum, Minus, WDiv, K, Kw };
  Op op;
  DivKind kind;
  Rat coord;                  // SmoothPoint
  long cluster = 0;           // SingularPoint, OmegaPoint
  std::vector<Rat> covector;  // OmegaPoint (empty: the full fiber)
  RatFun fn;                  // Div
  std::shared_ptr<const Node> a, b;
};

namespace {

using Node = DivExpr::Node;
using NodePtr = std::shared_ptr<const Node>;

NodePtr parse_sum(Lexer& lx);

NodePtr parse_primary(Lexer& lx) {
  if (lx.accept('-')) {
    NodePtr inner = parse_primary(lx);
    auto n = std::make_shared<Node>();
    n->op = Node::Op::Minus;
    // Minus of a generalized divisor stays generalized; negating an
    // omega-divisor lands back among generalized divisors.
    n->kind = DivKind::Generalized;
    n->a = inner;
    return n;
  }
  if (lx.accept('(')) {
    NodePtr inner = parse_sum(lx);
    lx.expect(')', "to close a group");
    return inner;
  }
  std::string id = lx.ident();
  auto n = std::make_shared<Node>();
  if (id == "P") {
    lx.expect('(', "after P");
    n->op = Node::Op::SmoothPoint;
    n->kind = DivKind::Generalized;
    n->coord = lx.rational();
    lx.expect(')', "after the coordinate");
  } else if (id == "INF") {
    n->op = Node::Op::Infinity;
    n->kind = DivKind::Generalized;
  } else if (id == "S") {
    lx.expect('(', "after S");
    n->op = Node::Op::SingularPoint;
    n->kind = DivKind::Generalized;
    n->cluster = lx.integer();
    lx.expect(')', "after the cluster index");
  } else if (id == "W") {
    lx.expect('(', "after W");
    n->op = Node::Op::OmegaPoint;
    n->kind = DivKind::Omega;
    n->cluster = lx.integer();
    while (lx.accept(',')) n->covector.push_back(lx.rational());
    lx.expect(')', "after the covector");
  } else if (id == "div") {
    lx.expect('(', "after div");
    // The function literal runs to the matching parenthesis.
    long depth = 1;
    std::size_t start = lx.pos;
    while (lx.pos < lx.s.size() && depth > 0) {
      if (lx.s[lx.pos] == '(') ++depth;
      if (lx.s[lx.pos] == ')') --depth;
      if (depth > 0) ++lx.pos;
    }
    if (depth != 0) throw ParseError("unterminated div(...) in '" + lx.s + "'");
    n->op = Node::Op::Div;
    n->kind = DivKind::Generalized;
    n->fn = parse_rational_function(lx.s.substr(start, lx.pos - start));
    lx.expect(')', "after the function");
    if (n->fn.is_zero()) throw ParseError("div of the zero function");
  } else if (id == "wdiv") {
    lx.expect('(', "after wdiv");
    NodePtr inner = parse_sum(lx);
    lx.expect(')', "after wdiv argument");
    if (inner->kind != DivKind::Generalized)
      throw ParseError("wdiv lifts a generalized divisor; its argument is already omega");
    n->op = Node::Op::WDiv;
    n->kind = DivKind::Omega;
    n->a = inner;
  } else if (id == "K") {
    n->op = Node::Op::K;
    n->kind = DivKind::Generalized;
  } else if (id == "Kw") {
    n->op = Node::Op::Kw;
    n->kind = DivKind::Omega;
  } else {
    throw ParseError("unknown symbol '" + id + "' at position " + std::to_string(lx.pos) +
                     " in '" + lx.s + "'");
  }
  return n;
}

NodePtr parse_sum(Lexer& lx) {
  NodePtr acc = parse_primary(lx);
  while (lx.accept('+')) {
    NodePtr rhs = parse_primary(lx);
    if (acc->kind == DivKind::Omega && rhs->kind == DivKind::Omega)
      throw ParseError("the sum of two omega-divisors is not defined");
    auto n = std::make_shared<Node>();
    n->op = Node::Op::Sum;
    n->kind = (acc->kind == DivKind::Omega || rhs->kind == DivKind::Omega)
                  ? DivKind::Omega
                  : DivKind::Generalized;
    n->a = acc;
    n->b = rhs;
    acc = n;
  }
  return acc;
}

std::variant<GDivisor, OmegaDivisor> eval_node(const Curve& c, const NodePtr& n) {
  switch (n->op) {
    case Node::Op::SmoothPoint:
      return point_divisor(c, Point::smooth(n->coord));
    case Node::Op::Infinity:
      return point_divisor(c, Point::infinity());
    case Node::Op::SingularPoint:
      return point_divisor(c, Point::singular(n->cluster));
    case Node::Op::OmegaPoint: {
      if (n->covector.empty())
        return omega_point_divisor(c, Point::singular(n->cluster));
      Vec cov = Vec::Constant(static_cast<long>(n->covector.size()), Rat(0));
      for (std::size_t i = 0; i < n->covector.size(); ++i) cov(static_cast<long>(i)) = n->covector[i];
      return omega_point_divisor(c, Point::singular(n->cluster), cov);
    }
    case Node::Op::Div:
      return principal_divisor(c, n->fn);
    case Node::Op::K:
      return canonical_divisor(c);
    case Node::Op::Kw:
      return canonical_omega_divisor(c);
    case Node::Op::WDiv: {
      auto inner = eval_node(c, n->a);
      return mixed_sum(std::get<GDivisor>(inner), zero_omega_divisor(c));
    }
    case Node::Op::Minus: {
      auto inner = eval_node(c, n->a);
      if (std::holds_alternative<GDivisor>(inner)) return dminus(std::get<GDivisor>(inner));
      return negation(std::get<OmegaDivisor>(inner));
    }
    case Node::Op::Sum: {
      auto lhs = eval_node(c, n->a);
      auto rhs = eval_node(c, n->b);
      bool lw = std::holds_alternative<OmegaDivisor>(lhs);
      bool rw = std::holds_alternative<OmegaDivisor>(rhs);
      if (!lw && !rw) return dsum(std::get<GDivisor>(lhs), std::get<GDivisor>(rhs));
      if (lw && rw) throw UnsupportedError("the sum of two omega-divisors is not defined");
      if (lw) return mixed_sum(std::get<GDivisor>(rhs), std::get<OmegaDivisor>(lhs));
      return mixed_sum(std::get<GDivisor>(lhs), std::get<OmegaDivisor>(rhs));
    }
  }
  throw Error("internal: unreachable");
}

}  // namespace

DivKind DivExpr::kind() const { return root_->kind; }
const std::string& DivExpr::text() const { return text_; }

DivExpr parse_div_expr(const std::string& text) {
  Lexer lx{text};
  NodePtr root = parse_sum(lx);
  if (!lx.eof())
    throw ParseError("trailing input at position " + std::to_string(lx.pos) + " in '" + text + "'");
  DivExpr e;
  e.root_ = root;
  e.text_ = text;
  return e;
}

std::variant<GDivisor, OmegaDivisor> eval_div_expr(const Curve& c, const DivExpr& e) {
  return eval_node(c, e.root_);
}

}  // namespace gendiv
