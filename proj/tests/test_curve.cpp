#include <doctest.h>

#include "gendiv/curve.hpp"
#include "gendiv/error.hpp"

using namespace gendiv;

TEST_CASE("semigroup curves and their genus") {
  CHECK(curve_from_semigroup({3, 4, 5}).genus() == 2);
  CHECK(curve_from_semigroup({1}).genus() == 0);
  CHECK(curve_from_semigroup({2, 3}).genus() == 1);  // gap set {1}
  CHECK(curve_from_semigroup({2, 5}).genus() == 2);  // gap set {1, 3}
  CHECK_THROWS_AS(curve_from_semigroup({2, 4}), ValidationError);
  CHECK_THROWS_AS(curve_from_semigroup({}), ValidationError);
}

TEST_CASE("semigroup gaps") {
  CHECK(semigroup_gaps({3, 4, 5}) == std::vector<long>{1, 2});
  CHECK(semigroup_gaps({2, 5}) == std::vector<long>{1, 3});
  CHECK(semigroup_gaps({1}).empty());
}

TEST_CASE("preset clusters") {
  Curve node = curve_from_clusters({node_cluster(Rat(1), Rat(-1))});
  CHECK(node.genus() == 1);
  Curve cusp = curve_from_clusters({cusp_cluster(Rat(0))});
  CHECK(cusp.genus() == 1);
  // cusp(0) has chart ring Q[t^2, t^3]: degree-2 window basis is {1} and the
  // conductor is t^2.
  CHECK(cusp.conductor() == Poly::monomial(2, Rat(1)));
  REQUIRE(cusp.data().o1_basis.size() == 1);
  CHECK(cusp.data().o1_basis[0] == Poly(Rat(1)));
  Curve tac = curve_from_clusters({tacnode_cluster(Rat(1), Rat(-1))});
  CHECK(tac.genus() == 2);
}

TEST_CASE("singularity invariants") {
  Curve node = curve_from_clusters({node_cluster(Rat(1), Rat(-1))});
  auto inv = singularity_invariants(node, 0);
  CHECK(inv.delta == 1);
  CHECK(inv.branches == 2);
  CHECK(inv.toric_rank == 1);
  CHECK(inv.unipotent_dim == 0);

  Curve cusp = curve_from_clusters({cusp_cluster(Rat(2))});
  inv = singularity_invariants(cusp, 0);
  CHECK(inv.delta == 1);
  CHECK(inv.branches == 1);
  CHECK(inv.toric_rank == 0);
  CHECK(inv.unipotent_dim == 1);

  Curve tac = curve_from_clusters({tacnode_cluster(Rat(1), Rat(-1))});
  inv = singularity_invariants(tac, 0);
  CHECK(inv.delta == 2);
  CHECK(inv.branches == 2);
  CHECK(inv.toric_rank == 1);
  CHECK(inv.unipotent_dim == 1);
}

TEST_CASE("genus is the sum of the deltas and grows by one per node") {
  Curve two = curve_from_clusters({node_cluster(Rat(1), Rat(-1)), node_cluster(Rat(2), Rat(-2))});
  CHECK(two.genus() == 2);
  Curve three = curve_from_clusters({cusp_cluster(Rat(0)), node_cluster(Rat(1), Rat(-1)),
                                     tacnode_cluster(Rat(2), Rat(3))});
  CHECK(three.genus() == 1 + 1 + 2);
  long total = 0;
  for (long i = 0; i < 3; ++i) total += singularity_invariants(three, i).delta;
  CHECK(total == three.genus());
}

TEST_CASE("invalid cluster data is rejected") {
  CHECK_THROWS_AS(node_cluster(Rat(1), Rat(1)), ValidationError);
  // Shared branch coordinate across clusters.
  CHECK_THROWS_AS(curve_from_clusters({node_cluster(Rat(0), Rat(1)), cusp_cluster(Rat(0))}),
                  ValidationError);
  // Constant function violating a condition: f(0) = 0 kills 1.
  Cluster c;
  c.branches = {Rat(0)};
  c.jet_orders = {1};
  c.conditions = Mat(1, 1);
  c.conditions(0, 0) = Rat(1);
  CHECK_THROWS_WITH_AS(curve_from_clusters({c}), doctest::Contains("not a subalgebra"),
                       ValidationError);
  // Conditions closed under 1 but not under products: kill the t^2
  // coefficient only; t stays, t*t escapes.
  Cluster d;
  d.branches = {Rat(0)};
  d.jet_orders = {3};
  d.conditions = Mat(1, 3);
  d.conditions.setConstant(Rat(0));
  d.conditions(0, 2) = Rat(1);
  CHECK_THROWS_WITH_AS(curve_from_clusters({d}), doctest::Contains("not a subalgebra"),
                       ValidationError);
}

TEST_CASE("point validation") {
  Curve c = curve_from_clusters({node_cluster(Rat(1), Rat(-1))});
  CHECK_NOTHROW(validate_point(c, Point::smooth(Rat(2))));
  CHECK_NOTHROW(validate_point(c, Point::infinity()));
  CHECK_NOTHROW(validate_point(c, Point::singular(0)));
  CHECK_THROWS_AS(validate_point(c, Point::smooth(Rat(1))), ValidationError);
  CHECK_THROWS_AS(validate_point(c, Point::singular(3)), ValidationError);
}

TEST_CASE("custom cluster matching the cusp preset") {
  // f'(a) = 0 written as an explicit condition matrix.
  Cluster c;
  c.branches = {Rat(0)};
  c.jet_orders = {2};
  c.conditions = Mat(1, 2);
  c.conditions(0, 0) = Rat(0);
  c.conditions(0, 1) = Rat(1);
  Curve custom = curve_from_clusters({c});
  Curve preset = curve_from_clusters({cusp_cluster(Rat(0))});
  CHECK(custom.genus() == preset.genus());
  CHECK(custom.conductor() == preset.conductor());
  CHECK(custom.data().o1_body == preset.data().o1_body);
}
