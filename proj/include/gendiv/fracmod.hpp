#pragma once

#include <vector>

#include "gendiv/curve.hpp"

namespace gendiv {

/// Nonzero finitely generated O1-submodule M of the rational function field,
/// in canonical form
///
///     M = hull * ( span(body) + F * Q[t] )
///
/// where F is the curve's conductor polynomial, hull is the minimal principal
/// fractional Q[t]-ideal containing M (stored as a monic/monic rational
/// function), and body is the canonical echelon basis of the image of M in
/// hull/(F*hull), written in cofactor coordinates: column j holds the
/// coefficient of t^j of an element's cofactor against hull.
///
/// Two FracModules are equal as subsets of the function field iff their
/// stored forms are identical.
class FracModule {
 public:
  FracModule() = default;

  static FracModule from_generators(const Curve& c, const std::vector<RatFun>& gens);
  static FracModule structure(const Curve& c);        // O1 itself
  static FracModule polynomial_ring(const Curve& c);  // Q[t] as an O1-module
  static FracModule principal(const Curve& c, const RatFun& f);
  static FracModule maximal_ideal(const Curve& c, long cluster);

  const Curve& curve() const { return curve_; }
  const RatFun& hull() const { return hull_; }
  const Mat& body() const { return body_; }
  long body_dim() const { return body_.rows(); }
  /// Lifts of the body rows to polynomials of degree < deg F.
  std::vector<Poly> body_polys() const;

  bool contains(const RatFun& f) const;
  bool contains_module(const FracModule& other) const;

  /// hull * body lifts plus hull * F * t^j for j < deg F; generates M as an
  /// O1-module.
  std::vector<RatFun> canonical_generators() const;
  /// Greedily pruned generating set, for display.
  std::vector<RatFun> minimal_generators() const;

  friend bool operator==(const FracModule& a, const FracModule& b);
  friend bool operator!=(const FracModule& a, const FracModule& b) { return !(a == b); }

  // Canonicalizes hull * (span + tail * Q[t]).  Used by every operation; the
  // input must already be an O1-module (this is checked at jet level).
  static FracModule make(const Curve& c, const RatFun& hull,
                         const std::vector<Poly>& span_polys, const Poly& tail);

 private:
  Curve curve_;
  RatFun hull_;
  Mat body_;
};

FracModule msum(const FracModule& a, const FracModule& b);
FracModule mprod(const FracModule& a, const FracModule& b);
/// (a : b) = { f in the function field : f * b inside a }
FracModule colon(const FracModule& a, const FracModule& b);
FracModule intersect(const FracModule& a, const FracModule& b);
/// Multiplication by a nonzero rational function.
FracModule scale(const FracModule& a, const RatFun& f);

/// dim(a/b) as a rational vector space; requires b inside a.
long length_between(const FracModule& a, const FracModule& b);
/// Minimal number of local generators at a cluster: dim a/(m_p * a).
long fiber_dim(const FracModule& a, long cluster);
/// a * (O1 : a) = O1, cross-checked against fiber dimensions.
bool is_invertible(const FracModule& a);

/// Finite quotient a/b of two modules with b inside a, presented through a
/// deterministic basis of representatives.
struct ModQuotient {
  RatFun hull;                   // hull of a
  Poly modulus;                  // conductor * (hull_b / hull_a)
  std::vector<Poly> rep_cofactors;  // cofactors against hull whose classes form a basis
  std::vector<RatFun> reps;      // the same elements of a
};
ModQuotient mod_quotient(const FracModule& a, const FracModule& b);

/// Preimage in a of the subspace of a/b spanned by the rows of `combos`
/// (coordinates in the mod_quotient representative basis).
FracModule preimage_module(const FracModule& a, const FracModule& b, const Mat& combos);

namespace detail {
/// The canonicalization core, usable while a CurveData is still being built.
std::pair<RatFun, Mat> canonical_module_parts(const CurveData& core, const RatFun& hull,
                                              const std::vector<Poly>& span_polys,
                                              const Poly& tail);
/// Generator of the sum of the principal fractional ideals f_i * Q[t].
RatFun frac_gcd(const std::vector<RatFun>& fs);
}  // namespace detail

}  // namespace gendiv
