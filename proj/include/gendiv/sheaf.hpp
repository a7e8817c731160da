#pragma once

#include <optional>

#include "gendiv/fracmod.hpp"

namespace gendiv {

/// Rank-1 torsion-free sheaf as glued two-chart data: the fractional module
/// on the singular chart plus the vanishing order at infinity (the chart-2
/// stalk there is s^k * Q[s] in the trivialization; every other chart-2
/// stalk is forced by the gluing t*s = 1).
struct Sheaf {
  FracModule m1;
  long inf_order = 0;

  const Curve& curve() const { return m1.curve(); }
  friend bool operator==(const Sheaf& a, const Sheaf& b) {
    return a.inf_order == b.inf_order && a.m1 == b.m1;
  }
  friend bool operator!=(const Sheaf& a, const Sheaf& b) { return !(a == b); }
};

Sheaf structure_sheaf(const Curve& c);
/// Direct image of O(n) under the normalization P^1 -> X.
Sheaf pushforward_line_bundle(const Curve& c, long n);

/// Global sections as elements of the function field: members of the chart-1
/// module whose Laurent degree is at most -inf_order.
std::vector<RatFun> sections(const Sheaf& s);
long h0(const Sheaf& s);

/// chi(s) - chi(O), computed from local colengths on chart 1 and the twist
/// at infinity.
long degree(const Sheaf& s);
long chi(const Sheaf& s);
long h1(const Sheaf& s);

/// Hom(a, b) as a sheaf: the colon module (b.m1 : a.m1) with the twist
/// difference at infinity.
Sheaf sheaf_hom(const Sheaf& a, const Sheaf& b);

/// Subsheaf generated by products of local sections of a and b.
Sheaf sheaf_mul(const Sheaf& a, const Sheaf& b);

/// Multiplication by a nonzero rational function; an isomorphic subsheaf.
Sheaf sheaf_scale(const Sheaf& s, const RatFun& f);

/// a is a subsheaf of b.
bool sheaf_contains(const Sheaf& a, const Sheaf& b);

/// A rational function f with f * b = a (as subsheaves), when the sheaves
/// are abstractly isomorphic.  Any nonzero homomorphism between rank-1
/// torsion-free sheaves of equal degree is an isomorphism; the witness is
/// verified by direct module equality before it is returned.
std::optional<RatFun> is_isomorphic(const Sheaf& a, const Sheaf& b);

}  // namespace gendiv
