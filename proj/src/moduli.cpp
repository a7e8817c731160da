#include "gendiv/moduli.hpp"

#include <set>
#include <sstream>

#include "gendiv/error.hpp"

namespace gendiv {

SheafClass make_sheaf_class(const Sheaf& s) {
  SheafClass cls;
  cls.representative = s;
  cls.degree = degree(s);
  cls.h0 = h0(s);
  for (long i = 0; i < static_cast<long>(s.curve().clusters().size()); ++i)
    if (fiber_dim(s.m1, i) > 1) cls.non_free_clusters.push_back(i);
  return cls;
}

AbelFiber abel_fiber(const GDivisor& d) {
  AbelFiber out;
  out.cls = make_sheaf_class(dual_sheaf(d));
  out.fiber_dim = linear_system(d).dim;
  if (out.fiber_dim != out.cls.h0 - 1)
    throw Error("internal: Abel fiber dimension disagrees with the linear system");
  return out;
}

AbelFiber abel_fiber(const OmegaDivisor& d) {
  AbelFiber out;
  out.cls = make_sheaf_class(dual_sheaf(d));
  out.fiber_dim = linear_system(d).dim;
  if (out.fiber_dim != out.cls.h0 - 1)
    throw Error("internal: Abel fiber dimension disagrees with the linear system");
  return out;
}

long theta_multiplicity_formula(long nonfree_nodes, long h0) {
  if (nonfree_nodes < 0 || h0 <= 0) throw ValidationError("bad theta formula arguments");
  long mult = h0;
  for (long i = 0; i < nonfree_nodes; ++i) mult *= 2;
  return mult;
}

long theta_multiplicity(const Curve& c, const SheafClass& cls) {
  for (long i = 0; i < static_cast<long>(c.clusters().size()); ++i) {
    ClusterInvariants inv = singularity_invariants(c, i);
    if (inv.branches != 2 || inv.delta != 1)
      throw UnsupportedError("theta multiplicity needs a curve whose singularities are all nodes");
  }
  if (cls.h0 <= 0)
    throw ValidationError("the class has no sections, so it does not lie on theta");
  if (cls.degree != c.genus() - 1)
    throw ValidationError("theta lives in degree g-1; the class has degree " +
                          std::to_string(cls.degree));
  return theta_multiplicity_formula(static_cast<long>(cls.non_free_clusters.size()), cls.h0);
}

namespace {

void expect(Degree2Report& rep, bool ok) {
  if (!ok) rep.pass = false;
}

}  // namespace

Degree2Report classify_degree2_example(const Curve& c, std::uint64_t seed, long smooth_pairs) {
  // Structural check: a single unibranch cluster at t = 0 with chart ring
  // Q + t^3 Q[t], the semigroup <3,4,5>.
  bool shape = c.clusters().size() == 1 && c.clusters()[0].branches.size() == 1 &&
               c.clusters()[0].branches[0] == Rat(0) && c.genus() == 2 &&
               c.conductor() == Poly::monomial(3, Rat(1)) && c.data().o1_basis.size() == 1 &&
               c.data().o1_basis[0] == Poly(Rat(1));
  if (!shape)
    throw ValidationError("the degree-2 classification needs the semigroup-(3,4,5) curve");

  Degree2Report rep;
  rep.pass = true;
  Sampler rng(seed);
  GDivisor reference = dsum(point_divisor(c, Point::singular(0)),
                            point_divisor(c, Point::infinity()));
  expect(rep, linear_system(reference).dim == 1);
  Sheaf nu_o = pushforward_line_bundle(c, 0);

  auto add_row = [&](const std::string& label, const GDivisor& d, bool expect_mover,
                     bool expect_cartier) {
    Degree2Row row;
    row.label = label;
    row.dim = linear_system(d).dim;
    row.in_distinguished_class = lin_equiv(d, reference).has_value();
    row.cartier = is_cartier(d);
    expect(rep, degree(d) == 2 && is_effective(d));
    expect(rep, row.cartier == expect_cartier);
    expect(rep, row.dim == (expect_mover ? 1 : 0));
    expect(rep, row.in_distinguished_class == expect_mover);
    if (!expect_mover && !row.cartier) {
      // Non-Cartier divisors outside the class all share the pushforward
      // dual sheaf.
      auto w = is_isomorphic(dual_sheaf(d), nu_o);
      expect(rep, w.has_value());
    }
    if (row.dim >= 1) ++rep.movers;
    ++rep.samples;
    rep.rows.push_back(row);
  };

  // Two distinct smooth points: Cartier, and no Cartier divisor of degree 2
  // moves.
  for (long i = 0; i < smooth_pairs; ++i) {
    Rat a = rng.coord(c), b = rng.coord(c);
    while (b == a) b = rng.coord(c);
    GDivisor d = dsum(point_divisor(c, Point::smooth(a)), point_divisor(c, Point::smooth(b)));
    add_row("P(" + a.str() + ")+P(" + b.str() + ")", d, false, true);
  }

  // Singular point plus a smooth point: the moving class.
  for (long i = 0; i < smooth_pairs; ++i) {
    Rat a = rng.coord(c);
    GDivisor d = dsum(point_divisor(c, Point::singular(0)), point_divisor(c, Point::smooth(a)));
    add_row("S(0)+P(" + a.str() + ")", d, true, false);
  }

  // Non-reduced divisors supported at the singularity: ideals W + m^2 for a
  // 2-dimensional W inside span(t^3, t^4, t^5), enumerated over a small
  // integer grid in canonical fiber coordinates (t^5, t^4, t^3).
  FracModule m = FracModule::maximal_ideal(c, 0);
  FracModule m2 = mprod(m, m);
  auto sample_w = [&](const Mat& combos, const std::string& label) {
    FracModule e = preimage_module(m, m2, combos);
    GDivisor d{Sheaf{e, 0}};
    bool is_d0 = (e == scale(m, RatFun(Poly::t())));  // ideal (t^4, t^5, t^6)
    add_row(label, d, is_d0, false);
  };
  for (long a = -2; a <= 2; ++a) {
    for (long b = -2; b <= 2; ++b) {
      Mat combos(2, 3);
      combos.setConstant(Rat(0));
      combos(0, 0) = Rat(1); combos(0, 2) = Rat(b);  // t^5 + b t^3
      combos(1, 1) = Rat(1); combos(1, 2) = Rat(a);  // t^4 + a t^3
      std::ostringstream lab;
      lab << "W(t^4+" << a << "t^3, t^5+" << b << "t^3)";
      sample_w(combos, lab.str());
    }
  }
  for (long a = -2; a <= 2; ++a) {
    Mat combos(2, 3);
    combos.setConstant(Rat(0));
    combos(0, 0) = Rat(1); combos(0, 1) = Rat(a);  // t^5 + a t^4
    combos(1, 2) = Rat(1);                         // t^3
    std::ostringstream lab;
    lab << "W(t^3, t^5+" << a << "t^4)";
    sample_w(combos, lab.str());
  }
  {
    Mat combos(2, 3);
    combos.setConstant(Rat(0));
    combos(0, 0) = Rat(1);  // t^5
    combos(1, 1) = Rat(1);  // t^4
    sample_w(combos, "W(t^4, t^5)");
  }
  return rep;
}

KernelReport jacobian_kernel_report(const Curve& c) {
  KernelReport rep;
  for (long i = 0; i < static_cast<long>(c.clusters().size()); ++i) {
    ClusterInvariants inv = singularity_invariants(c, i);
    rep.clusters.push_back(inv);
    rep.total_delta += inv.delta;
    rep.total_toric += inv.toric_rank;
    rep.total_unipotent += inv.unipotent_dim;
  }
  if (rep.total_delta != c.genus())
    throw Error("internal: kernel dimension differs from the genus");
  return rep;
}

}  // namespace gendiv
