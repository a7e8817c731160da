#include <doctest.h>

#include "gendiv/error.hpp"
#include "gendiv/moduli.hpp"

using namespace gendiv;

namespace {

Curve the_345() {
  static Curve c = curve_from_semigroup({3, 4, 5});
  return c;
}

}  // namespace

TEST_CASE("abel fibers are complete linear systems") {
  Curve c = the_345();
  // A single smooth point moves in no linear system on a positive-genus
  // curve.
  Curve cusp = curve_from_clusters({cusp_cluster(Rat(0))});
  AbelFiber f0 = abel_fiber(point_divisor(cusp, Point::smooth(Rat(1))));
  CHECK(f0.fiber_dim == 0);
  CHECK(f0.cls.h0 == 1);

  GDivisor d = dsum(point_divisor(c, Point::singular(0)), point_divisor(c, Point::infinity()));
  AbelFiber f1 = abel_fiber(d);
  CHECK(f1.fiber_dim == 1);
  CHECK(f1.cls.degree == 3);  // deg L(p0+p1) = 3 with the infinity twist
  CHECK(is_isomorphic(f1.cls.representative, pushforward_line_bundle(c, 1)).has_value());
  CHECK(f1.cls.non_free_clusters == std::vector<long>{0});

  OmegaDivisor kw = canonical_omega_divisor(c);
  AbelFiber f2 = abel_fiber(kw);
  CHECK(f2.fiber_dim == 1);
  CHECK(f2.cls.representative == omega_sheaf(c));

  // Fiber data is constant on linear-equivalence classes.
  GDivisor e = dsum(point_divisor(c, Point::singular(0)), point_divisor(c, Point::smooth(Rat(2))));
  REQUIRE(lin_equiv(d, e).has_value());
  AbelFiber f3 = abel_fiber(e);
  CHECK(f3.fiber_dim == f1.fiber_dim);
  CHECK(f3.cls.degree == f1.cls.degree);
  CHECK(f3.cls.h0 == f1.cls.h0);
  CHECK(is_isomorphic(f3.cls.representative, f1.cls.representative).has_value());
}

TEST_CASE("theta multiplicity on nodal curves") {
  Curve node = curve_from_clusters({node_cluster(Rat(1), Rat(-1))});
  SheafClass o = make_sheaf_class(structure_sheaf(node));
  CHECK(o.degree == 0);  // g - 1 = 0
  CHECK(o.h0 == 1);
  CHECK(o.non_free_clusters.empty());
  CHECK(theta_multiplicity(node, o) == 1);

  // Invertible classes specialize to the Riemann singularity formula.
  CHECK(theta_multiplicity_formula(0, o.h0) == o.h0);

  // The closed formula instance from the genus-4 discussion.
  CHECK(theta_multiplicity_formula(1, 2) == 4);

  // The two-node genus-2 pushforward: h0 = 1 and not free at either node,
  // so the formula value is 4.  Its degree is g, not g-1, so the strict
  // pointwise check refuses it.
  Curve two = curve_from_clusters({node_cluster(Rat(1), Rat(-1)), node_cluster(Rat(2), Rat(-2))});
  SheafClass push = make_sheaf_class(pushforward_line_bundle(two, 0));
  CHECK(push.h0 == 1);
  CHECK(push.non_free_clusters == std::vector<long>{0, 1});
  CHECK(theta_multiplicity_formula(
            static_cast<long>(push.non_free_clusters.size()), push.h0) == 4);
  CHECK(push.degree == two.genus());
  CHECK_THROWS_AS(theta_multiplicity(two, push), ValidationError);

  // Non-nodal curves are refused outright.
  Curve cusp = curve_from_clusters({cusp_cluster(Rat(0))});
  CHECK_THROWS_AS(theta_multiplicity(cusp, make_sheaf_class(structure_sheaf(cusp))),
                  UnsupportedError);
  // Classes off theta are refused.
  SheafClass off = make_sheaf_class(Sheaf{FracModule::maximal_ideal(node, 0), 1});
  CHECK(off.h0 == 0);
  CHECK_THROWS_AS(theta_multiplicity(node, off), ValidationError);
}

TEST_CASE("degree-2 classification on the (3,4,5) curve") {
  Degree2Report rep = classify_degree2_example(the_345(), 2024, 6);
  CHECK(rep.pass);
  CHECK(rep.samples >= 20);
  // The movers are the class members: the sampled S(0)+P(a) rows plus the
  // non-reduced member W(t^4, t^5), which the grid hits twice.
  CHECK(rep.movers == 6 + 2);
  for (const auto& row : rep.rows) {
    CHECK((row.dim == 0 || row.dim == 1));
    CHECK(row.in_distinguished_class == (row.dim == 1));
  }
  // Other curves are rejected.
  CHECK_THROWS_AS(classify_degree2_example(curve_from_semigroup({2, 5}), 1, 2),
                  ValidationError);
}

TEST_CASE("jacobian kernel report") {
  Curve mixed = curve_from_clusters({node_cluster(Rat(1), Rat(-1)), cusp_cluster(Rat(0)),
                                     tacnode_cluster(Rat(2), Rat(3))});
  KernelReport rep = jacobian_kernel_report(mixed);
  REQUIRE(rep.clusters.size() == 3);
  CHECK(rep.clusters[0].toric_rank == 1);
  CHECK(rep.clusters[0].unipotent_dim == 0);
  CHECK(rep.clusters[1].toric_rank == 0);
  CHECK(rep.clusters[1].unipotent_dim == 1);
  CHECK(rep.clusters[2].toric_rank == 1);
  CHECK(rep.clusters[2].unipotent_dim == 1);
  CHECK(rep.total_delta == mixed.genus());
  CHECK(rep.total_toric == 2);
  CHECK(rep.total_unipotent == 2);
}
