#include "gendiv/sheaf.hpp"

#include "gendiv/error.hpp"

namespace gendiv {

Sheaf structure_sheaf(const Curve& c) {
  return Sheaf{FracModule::structure(c), 0};
}

Sheaf pushforward_line_bundle(const Curve& c, long n) {
  return Sheaf{FracModule::polynomial_ring(c), -n};
}

std::vector<RatFun> sections(const Sheaf& s) {
  const long dF = s.curve().conductor().degree();
  const long bound = -s.inf_order - s.m1.hull().laurent_degree();
  std::vector<RatFun> out;
  auto polys = s.m1.body_polys();
  for (const auto& p : polys)
    if (p.degree() <= bound) out.push_back(s.m1.hull() * RatFun(p));
  for (long j = 0; j + dF <= bound; ++j)
    out.push_back(s.m1.hull() * RatFun(s.curve().conductor() * Poly::monomial(j, Rat(1))));
  return out;
}

long h0(const Sheaf& s) {
  const long dF = s.curve().conductor().degree();
  const long bound = -s.inf_order - s.m1.hull().laurent_degree();
  long count = 0;
  for (const auto& p : s.m1.body_polys())
    if (p.degree() <= bound) ++count;
  if (bound - dF >= 0) count += bound - dF + 1;
  return count;
}

long degree(const Sheaf& s) {
  FracModule o1 = FracModule::structure(s.curve());
  FracModule common = intersect(s.m1, o1);
  long above = length_between(s.m1, common);
  long below = length_between(o1, common);
  return (above - below) - s.inf_order;
}

long chi(const Sheaf& s) {
  return degree(s) + 1 - s.curve().genus();
}

long h1(const Sheaf& s) {
  long v = h0(s) - chi(s);
  if (v < 0) throw Error("internal: negative h^1");
  return v;
}

Sheaf sheaf_hom(const Sheaf& a, const Sheaf& b) {
  if (!a.curve().same_curve(b.curve()))
    throw ValidationError("Hom of sheaves across different curves");
  return Sheaf{colon(b.m1, a.m1), b.inf_order - a.inf_order};
}

Sheaf sheaf_mul(const Sheaf& a, const Sheaf& b) {
  if (!a.curve().same_curve(b.curve()))
    throw ValidationError("product of sheaves across different curves");
  return Sheaf{mprod(a.m1, b.m1), a.inf_order + b.inf_order};
}

Sheaf sheaf_scale(const Sheaf& s, const RatFun& f) {
  if (f.is_zero()) throw ValidationError("scaling a sheaf by zero");
  return Sheaf{scale(s.m1, f), s.inf_order + f.order_at_infinity()};
}

bool sheaf_contains(const Sheaf& a, const Sheaf& b) {
  if (!a.curve().same_curve(b.curve()))
    throw ValidationError("comparing sheaves across different curves");
  return b.m1.contains_module(a.m1) && a.inf_order >= b.inf_order;
}

std::optional<RatFun> is_isomorphic(const Sheaf& a, const Sheaf& b) {
  if (!a.curve().same_curve(b.curve()))
    throw ValidationError("comparing sheaves across different curves");
  if (degree(a) != degree(b)) return std::nullopt;
  Sheaf hom = sheaf_hom(b, a);
  auto secs = sections(hom);
  if (secs.empty()) return std::nullopt;
  for (const auto& f : secs) {
    if (sheaf_scale(b, f) == a) return f;
  }
  // A nonzero hom between equal-degree rank-1 torsion-free sheaves is an
  // isomorphism, so the first section should already have worked.
  throw Error("internal: isomorphism witness failed verification");
}

}  // namespace gendiv
