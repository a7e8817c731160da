#include "gendiv/divisor.hpp"

#include <set>
#include <sstream>

#include "gendiv/error.hpp"

namespace gendiv {

GDivisor zero_divisor(const Curve& c) { return GDivisor{structure_sheaf(c)}; }

OmegaDivisor zero_omega_divisor(const Curve& c) { return OmegaDivisor{omega_sheaf(c)}; }

GDivisor point_divisor(const Curve& c, const Point& p) {
  validate_point(c, p);
  switch (p.kind) {
    case Point::Kind::Smooth: {
      // Functions regular on the chart that vanish at the point.  Note that
      // (t-a)*O1 is a different subsheaf: t-a itself need not lie in O1.
      FracModule lin = scale(FracModule::polynomial_ring(c), RatFun(Poly::linear_at(p.coord)));
      return GDivisor{Sheaf{intersect(FracModule::structure(c), lin), 0}};
    }
    case Point::Kind::Infinity:
      return GDivisor{Sheaf{FracModule::structure(c), 1}};
    case Point::Kind::Singular:
      return GDivisor{Sheaf{FracModule::maximal_ideal(c, p.cluster), 0}};
  }
  throw Error("internal: unreachable");
}

GDivisor principal_divisor(const Curve& c, const RatFun& f) {
  if (f.is_zero()) throw ValidationError("div(f) needs a nonzero function");
  return GDivisor{Sheaf{FracModule::principal(c, f), f.order_at_infinity()}};
}

std::vector<RatFun> omega_fiber_basis(const Curve& c, const Point& p) {
  validate_point(c, p);
  if (p.kind == Point::Kind::Infinity)
    throw ValidationError("fiber coordinates are only exposed at finite points");
  Sheaf om = omega_sheaf(c);
  FracModule mp = point_divisor(c, p).ideal.m1;
  return mod_quotient(om.m1, mprod(mp, om.m1)).reps;
}

OmegaDivisor omega_point_divisor(const Curve& c, const Point& p,
                                 const std::optional<Vec>& covector) {
  validate_point(c, p);
  GDivisor ip = point_divisor(c, p);
  Sheaf om = omega_sheaf(c);
  if (!covector.has_value())
    return OmegaDivisor{sheaf_mul(ip.ideal, om)};
  if (p.kind == Point::Kind::Infinity)
    throw ValidationError("fiber coordinates are only exposed at finite points");

  bool nonzero = false;
  for (long i = 0; i < covector->rows(); ++i)
    if (!(*covector)(i).is_zero()) nonzero = true;
  if (!nonzero) throw ValidationError("zero covector does not select a quotient");

  FracModule sub = mprod(ip.ideal.m1, om.m1);
  ModQuotient q = mod_quotient(om.m1, sub);
  if (covector->rows() != static_cast<long>(q.reps.size()))
    throw ValidationError("covector length does not match the omega-fiber dimension");
  Mat lam(1, covector->rows());
  for (long i = 0; i < covector->rows(); ++i) lam(0, i) = (*covector)(i);
  Mat combos = kernel(lam);
  return OmegaDivisor{Sheaf{preimage_module(om.m1, sub, combos), om.inf_order}};
}

long degree(const GDivisor& d) { return -degree(d.ideal); }

long degree(const OmegaDivisor& d) {
  return (2 * d.ideal.curve().genus() - 2) - degree(d.ideal);
}

bool is_effective(const GDivisor& d) {
  return sheaf_contains(d.ideal, structure_sheaf(d.ideal.curve()));
}

bool is_effective(const OmegaDivisor& d) {
  return sheaf_contains(d.ideal, omega_sheaf(d.ideal.curve()));
}

bool is_cartier(const GDivisor& d) { return is_invertible(d.ideal.m1); }
bool is_cartier(const OmegaDivisor& d) { return is_invertible(d.ideal.m1); }

GDivisor dsum(const GDivisor& a, const GDivisor& b) {
  return GDivisor{sheaf_mul(a.ideal, b.ideal)};
}

GDivisor dminus(const GDivisor& a) {
  return GDivisor{sheaf_hom(a.ideal, structure_sheaf(a.ideal.curve()))};
}

OmegaDivisor mixed_sum(const GDivisor& a, const OmegaDivisor& b) {
  return OmegaDivisor{sheaf_mul(a.ideal, b.ideal)};
}

OmegaDivisor negation(const GDivisor& a) {
  return OmegaDivisor{sheaf_hom(a.ideal, omega_sheaf(a.ideal.curve()))};
}

GDivisor negation(const OmegaDivisor& a) {
  return GDivisor{sheaf_hom(a.ideal, omega_sheaf(a.ideal.curve()))};
}

Sheaf dual_sheaf(const GDivisor& d) {
  return sheaf_hom(d.ideal, structure_sheaf(d.ideal.curve()));
}

Sheaf dual_sheaf(const OmegaDivisor& d) {
  return sheaf_hom(d.ideal, omega_sheaf(d.ideal.curve()));
}

std::optional<RatFun> lin_equiv(const GDivisor& a, const GDivisor& b) {
  return is_isomorphic(a.ideal, b.ideal);
}

std::optional<RatFun> lin_equiv(const OmegaDivisor& a, const OmegaDivisor& b) {
  return is_isomorphic(a.ideal, b.ideal);
}

LinearSystem linear_system(const GDivisor& d) {
  Sheaf l = dual_sheaf(d);
  LinearSystem sys;
  sys.basis = sections(l);
  sys.dim = static_cast<long>(sys.basis.size()) - 1;
  return sys;
}

LinearSystem linear_system(const OmegaDivisor& d) {
  Sheaf m = dual_sheaf(d);
  LinearSystem sys;
  sys.basis = sections(m);
  sys.dim = static_cast<long>(sys.basis.size()) - 1;
  return sys;
}

namespace {

RatFun section_from_coeffs(const LinearSystem& sys, const Vec& coeffs) {
  if (coeffs.rows() != static_cast<long>(sys.basis.size()))
    throw ValidationError("coefficient vector does not match the section basis");
  RatFun f;
  for (long i = 0; i < coeffs.rows(); ++i)
    f = f + RatFun(coeffs(i)) * sys.basis[static_cast<std::size_t>(i)];
  if (f.is_zero()) throw ValidationError("zero coefficient vector selects no member");
  return f;
}

}  // namespace

GDivisor member(const GDivisor& d, const Vec& coeffs) {
  RatFun f = section_from_coeffs(linear_system(d), coeffs);
  GDivisor m{sheaf_scale(d.ideal, f)};
  if (!is_effective(m)) throw Error("internal: linear-system member is not effective");
  return m;
}

OmegaDivisor member(const OmegaDivisor& d, const Vec& coeffs) {
  RatFun f = section_from_coeffs(linear_system(d), coeffs);
  OmegaDivisor m{sheaf_scale(d.ideal, f)};
  if (!is_effective(m)) throw Error("internal: linear-system member is not effective");
  return m;
}

GDivisor canonical_divisor(const Curve& c) {
  if (!c.data().omega_reflexive)
    throw ValidationError(
        "the dualizing sheaf is not reflexive: this curve does not admit a canonical divisor");
  // L(K) = omega and deg K = 2g-2 were verified when the curve was built.
  return GDivisor{omega_bidual_report(c).dual};
}

OmegaDivisor canonical_omega_divisor(const Curve& c) {
  Sheaf om = omega_sheaf(c);
  OmegaDivisor k{Sheaf{colon(om.m1, om.m1), 0}};
  if (!(dual_sheaf(k) == om))
    throw Error("internal: M(K_omega) differs from the dualizing sheaf");
  if (degree(k) != 2 * c.genus() - 2)
    throw Error("internal: canonical omega-divisor degree is not 2g-2");
  return k;
}

GDivisor adjoint(const GDivisor& d) {
  const Curve& c = d.ideal.curve();
  GDivisor adj = dsum(canonical_divisor(c), dminus(d));
  if (c.data().gorenstein && degree(adj) != 2 * c.genus() - 2 - degree(d))
    throw Error("internal: adjoint degree is not 2g-2-deg");
  return adj;
}

OmegaDivisor adjoint_omega(const OmegaDivisor& d) {
  OmegaDivisor adj{dual_sheaf(d)};
  if (degree(adj) != 2 * d.ideal.curve().genus() - 2 - degree(d))
    throw Error("internal: omega-adjoint degree is not 2g-2-deg");
  return adj;
}

RRReport riemann_roch_check(const GDivisor& d) {
  const Curve& c = d.ideal.curve();
  if (!is_gorenstein(c))
    throw ValidationError(
        "the generalized-divisor Riemann-Roch form needs a Gorenstein curve; "
        "use omega-divisors instead");
  RRReport r;
  r.dim_d = linear_system(d).dim;
  r.dim_adj = linear_system(adjoint(d)).dim;
  r.deg = degree(d);
  r.lhs = r.dim_d - r.dim_adj;
  r.rhs = r.deg + 1 - c.genus();
  r.pass = (r.lhs == r.rhs);
  return r;
}

RRReport riemann_roch_check(const OmegaDivisor& d) {
  RRReport r;
  r.dim_d = linear_system(d).dim;
  r.dim_adj = linear_system(adjoint_omega(d)).dim;
  r.deg = degree(d);
  r.lhs = r.dim_d - r.dim_adj;
  r.rhs = r.deg + 1 - d.ideal.curve().genus();
  r.pass = (r.lhs == r.rhs);
  return r;
}

long Sampler::next(long lo, long hi) {
  if (hi < lo) throw ValidationError("empty sampling range");
  return lo + static_cast<long>(eng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Rat Sampler::coord(const Curve& c) {
  long box = 9;
  for (int attempt = 0;; ++attempt) {
    Rat v(next(-box, box));
    if (!c.data().is_branch(v)) return v;
    if (attempt % 16 == 15) box *= 2;
  }
}

namespace {

std::string point_label(const Rat& a) { return "P(" + a.str() + ")"; }

}  // namespace

GDivisor random_effective_divisor(const Curve& c, long d, Sampler& rng,
                                  const SampleOptions& opts, std::string* label) {
  if (d < 0) throw ValidationError("effective divisors have nonnegative degree");
  GDivisor out = zero_divisor(c);
  std::ostringstream desc;
  long remaining = d;
  // Non-Cartier summands go first so every later addition is by a Cartier
  // point and degrees stay additive.
  if (opts.include_singular && !c.clusters().empty() && remaining > 0 && rng.next(0, 1) == 1) {
    long idx = rng.next(0, static_cast<long>(c.clusters().size()) - 1);
    out = dsum(out, point_divisor(c, Point::singular(idx)));
    desc << "S(" << idx << ")";
    --remaining;
  }
  if (opts.include_infinity && remaining > 0 && rng.next(0, 2) == 0) {
    out = dsum(out, point_divisor(c, Point::infinity()));
    desc << (desc.str().empty() ? "" : "+") << "INF";
    --remaining;
  }
  std::set<Rat> used;
  while (remaining > 0) {
    Rat a = rng.coord(c);
    if (!used.insert(a).second) continue;
    out = dsum(out, point_divisor(c, Point::smooth(a)));
    desc << (desc.str().empty() ? "" : "+") << point_label(a);
    --remaining;
  }
  if (d == 0) desc << "0";
  if (degree(out) != d) throw Error("internal: sampled divisor has wrong degree");
  if (label) *label = desc.str();
  return out;
}

OmegaDivisor random_effective_omega_divisor(const Curve& c, long d, Sampler& rng,
                                            const SampleOptions& opts, std::string* label) {
  if (d < 0) throw ValidationError("effective omega-divisors have nonnegative degree");
  // Singular support enters only through omega-quotients with a known
  // degree; the generalized part stays Cartier so degrees add.
  OmegaDivisor acc = zero_omega_divisor(c);
  long remaining = d;
  std::ostringstream desc;
  if (opts.include_singular && !c.clusters().empty() && remaining > 0 && rng.next(0, 1) == 1) {
    long idx = rng.next(0, static_cast<long>(c.clusters().size()) - 1);
    long fdim = fiber_dim(omega_sheaf(c).m1, idx);
    if (fdim <= remaining && rng.next(0, 1) == 1) {
      // The whole fiber at the cluster: I_p * omega has degree fdim.
      acc = omega_point_divisor(c, Point::singular(idx));
      remaining -= fdim;
      desc << "Wfull(" << idx << ")";
    } else {
      Vec cov = Vec::Constant(fdim, Rat(0));
      bool nonzero = false;
      while (!nonzero) {
        for (long i = 0; i < fdim; ++i) {
          cov(i) = Rat(rng.next(-3, 3));
          if (!cov(i).is_zero()) nonzero = true;
        }
      }
      acc = omega_point_divisor(c, Point::singular(idx), cov);
      remaining -= 1;
      desc << "W(" << idx << ")";
    }
  }
  SampleOptions cartier_only = opts;
  cartier_only.include_singular = false;
  std::string sub;
  GDivisor g = random_effective_divisor(c, remaining, rng, cartier_only, &sub);
  OmegaDivisor out = mixed_sum(g, acc);
  if (degree(out) != d) throw Error("internal: sampled omega-divisor has wrong degree");
  if (label) *label = sub + (desc.str().empty() ? "+0w" : "+" + desc.str());
  return out;
}

GDivisor random_divisor_of_degree(const Curve& c, long deg, Sampler& rng,
                                  const SampleOptions& opts, std::string* label) {
  long n_neg = rng.next(0, 2) + std::max(0L, -deg);
  long n_pos = deg + n_neg;
  std::string sub;
  GDivisor out = random_effective_divisor(c, n_pos, rng, opts, &sub);
  std::ostringstream desc;
  desc << sub;
  std::set<Rat> used;
  for (long i = 0; i < n_neg; ++i) {
    Rat a = rng.coord(c);
    if (!used.insert(a).second) { --i; continue; }
    out = dsum(out, dminus(point_divisor(c, Point::smooth(a))));
    desc << "-" << point_label(a);
  }
  if (degree(out) != deg) throw Error("internal: sampled divisor has wrong degree");
  if (label) *label = desc.str();
  return out;
}

GeneralPositionReport general_position_dim_check(const Curve& c, long d, long trials,
                                                 std::uint64_t seed, bool omega_form,
                                                 const SampleOptions& opts) {
  if (d < 0) throw ValidationError("degree must be nonnegative");
  Sampler rng(seed);
  GeneralPositionReport rep;
  rep.degree = d;
  rep.expected = d - c.genus();
  rep.trials = trials;
  rep.all_expected = true;
  for (long i = 0; i < trials; ++i) {
    std::string lab;
    long dim;
    if (omega_form) {
      OmegaDivisor dv = random_effective_omega_divisor(c, d, rng, opts, &lab);
      dim = linear_system(dv).dim;
    } else {
      GDivisor dv = random_effective_divisor(c, d, rng, opts, &lab);
      dim = linear_system(dv).dim;
    }
    ++rep.dim_histogram[dim];
    if (dim != rep.expected) {
      rep.all_expected = false;
      rep.offenders.push_back(GeneralPositionRow{lab, dim});
    }
  }
  return rep;
}

}  // namespace gendiv
