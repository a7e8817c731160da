#include <doctest.h>

#include "gendiv/dualizing.hpp"
#include "gendiv/error.hpp"

using namespace gendiv;

namespace {

RatFun tp(long e) { return RatFun::t_power(e); }

Curve the_345() {
  static Curve c = curve_from_semigroup({3, 4, 5});
  return c;
}

}  // namespace

TEST_CASE("residues of rational functions") {
  Poly t = Poly::t();
  CHECK(residue(RatFun(Poly(Rat(1)), Poly::linear_at(Rat(1))), Rat(1)) == Rat(1));
  CHECK(residue(tp(-2), Rat(0)) == Rat(0));
  CHECK(residue(tp(-1), Rat(0)) == Rat(1));
  // t/((t-1)(t+1)) has residue 1/2 at both poles (partial fractions).
  RatFun f(t, Poly::linear_at(Rat(1)) * Poly::linear_at(Rat(-1)));
  CHECK(residue(f, Rat(1)) == Rat(1, 2));
  CHECK(residue(f, Rat(-1)) == Rat(1, 2));
  CHECK(residue(f, Rat(5)) == Rat(0));
  // A higher-order pole: (3t^2 + 1)/t^3 at 0 picks out the t^-1 part.
  RatFun g(Rat(3) * t * t + Poly(Rat(1)), Poly::monomial(3, Rat(1)));
  CHECK(residue(g, Rat(0)) == Rat(3));
  // Residues add over products with regular functions.
  CHECK(residue(f * RatFun(t), Rat(1)) == Rat(1, 2));
}

TEST_CASE("dualizing sheaf of the (3,4,5) curve") {
  Curve c = the_345();
  Sheaf om = omega_sheaf(c);
  // Generated by dt/t^3 and dt/t^2 over the chart ring.
  CHECK(om.m1 == FracModule::from_generators(c, {tp(-3), tp(-2)}));
  CHECK(om.inf_order == 2);
  CHECK(degree(om) == 2);
  CHECK(h0(om) == 2);
  CHECK(h1(om) == 1);
  CHECK(fiber_dim(om.m1, 0) == 2);
  auto gens = om.m1.minimal_generators();
  REQUIRE(gens.size() == 2);
  CHECK(gens[0] == tp(-3));
  CHECK(gens[1] == tp(-2));
}

TEST_CASE("dualizing sheaf of a smooth curve") {
  Curve c = curve_from_semigroup({1});
  Sheaf om = omega_sheaf(c);
  CHECK(om.m1 == FracModule::structure(c));
  CHECK(om.inf_order == 2);
  CHECK(degree(om) == -2);
  CHECK(h0(om) == 0);
}

TEST_CASE("dualizing sheaf of the cusp curve") {
  Curve c = curve_from_clusters({cusp_cluster(Rat(0))});
  Sheaf om = omega_sheaf(c);
  CHECK(om.m1 == FracModule::principal(c, tp(-2)));
  CHECK(degree(om) == 0);
  CHECK(h0(om) == 1);
  CHECK(is_gorenstein(c));
}

TEST_CASE("omega degree and sections on every bundled shape") {
  std::vector<Curve> curves = {
      the_345(), curve_from_clusters({node_cluster(Rat(1), Rat(-1))}),
      curve_from_clusters({tacnode_cluster(Rat(1), Rat(-1))}),
      curve_from_clusters({node_cluster(Rat(1), Rat(-1)), node_cluster(Rat(2), Rat(-2))}),
      curve_from_semigroup({2, 5}), curve_from_semigroup({2, 3})};
  for (const auto& c : curves) {
    Sheaf om = omega_sheaf(c);
    CHECK(degree(om) == 2 * c.genus() - 2);
    CHECK(h0(om) == c.genus());
    CHECK(h1(om) == 1);
  }
}

TEST_CASE("gorenstein detection") {
  CHECK(!is_gorenstein(the_345()));
  CHECK(is_gorenstein(curve_from_clusters({node_cluster(Rat(1), Rat(-1))})));
  CHECK(is_gorenstein(curve_from_clusters({cusp_cluster(Rat(0))})));
  CHECK(is_gorenstein(curve_from_clusters({tacnode_cluster(Rat(1), Rat(-1))})));
  CHECK(is_gorenstein(curve_from_semigroup({2, 5})));
  CHECK(is_gorenstein_at(curve_from_clusters({cusp_cluster(Rat(0))}), 0));
  CHECK(!is_gorenstein_at(the_345(), 0));
}

TEST_CASE("symmetric semigroups are the Gorenstein ones") {
  // Oracle: gaps mirror non-gaps under x -> 2g-1-x.
  auto symmetric = [](const std::vector<long>& gens) {
    auto gaps = semigroup_gaps(gens);
    long g = static_cast<long>(gaps.size());
    if (g == 0) return true;
    auto is_gap = [&](long x) {
      if (x < 0) return false;
      for (long v : gaps)
        if (v == x) return true;
      return false;
    };
    for (long x = 0; x <= 2 * g - 1; ++x)
      if (is_gap(x) == is_gap(2 * g - 1 - x)) return false;
    return true;
  };
  CHECK(symmetric({2, 5}));
  CHECK(symmetric({2, 3}));
  CHECK(!symmetric({3, 4, 5}));
  CHECK(is_gorenstein(curve_from_semigroup({2, 5})) == symmetric({2, 5}));
  CHECK(is_gorenstein(curve_from_semigroup({3, 4, 5})) == symmetric({3, 4, 5}));
  CHECK(is_gorenstein(curve_from_semigroup({3, 5, 7})) == symmetric({3, 5, 7}));
  CHECK(is_gorenstein(curve_from_semigroup({4, 5, 6, 7})) == symmetric({4, 5, 6, 7}));
}

TEST_CASE("the omega dual chain on the (3,4,5) curve") {
  Curve c = the_345();
  OmegaBidualReport rep = omega_bidual_report(c);
  CHECK(rep.dual.m1 == FracModule::from_generators(c, {tp(6), tp(7), tp(8)}));
  CHECK(rep.dual.inf_order == -2);
  CHECK(rep.bidual.m1 == FracModule::from_generators(c, {tp(-3), tp(-2), tp(-1)}));
  CHECK(rep.bidual.inf_order == 2);
  CHECK(!rep.reflexive);
  // dt/t lies in the bidual but not in omega.
  CHECK(rep.bidual.m1.contains(tp(-1)));
  CHECK(!omega_sheaf(c).m1.contains(tp(-1)));
  // The dual needs three generators.
  CHECK(rep.dual.m1.minimal_generators().size() == 3);
}

TEST_CASE("reflexive dual chain on a Gorenstein curve") {
  Curve c = curve_from_clusters({cusp_cluster(Rat(0))});
  CHECK(omega_bidual_report(c).reflexive);
}

TEST_CASE("residue conditions of the (3,4,5) cluster") {
  Curve c = the_345();
  Mat m = residue_conditions(c, 0);
  // One jet-basis element (the constant) and the functional picks the t^2
  // coefficient of w in h = w/t^3.
  REQUIRE(m.rows() == 1);
  REQUIRE(m.cols() == 3);
  CHECK(m(0, 0) == Rat(0));
  CHECK(m(0, 1) == Rat(0));
  CHECK(m(0, 2) == Rat(1));
}
