#include "gendiv/dualizing.hpp"

#include "gendiv/error.hpp"

namespace gendiv {

Rat residue(const RatFun& f, const Rat& a) {
  if (f.is_zero()) return Rat(0);
  long e = f.den().root_multiplicity(a);
  if (e == 0) return Rat(0);
  Poly lin = Poly::linear_at(a);
  Poly d1 = f.den();
  for (long i = 0; i < e; ++i) d1 = exact_div(d1, lin);
  // Residue = coefficient of (t-a)^{e-1} in the power series num/d1 at a.
  auto num_s = f.num().taylor_coeffs(a, e);
  auto den_s = d1.taylor_coeffs(a, e);
  std::vector<Rat> inv(static_cast<std::size_t>(e));
  Rat d0inv = den_s[0].inverse();
  inv[0] = d0inv;
  for (long k = 1; k < e; ++k) {
    Rat acc(0);
    for (long i = 1; i <= k; ++i) acc += den_s[static_cast<std::size_t>(i)] * inv[static_cast<std::size_t>(k - i)];
    inv[static_cast<std::size_t>(k)] = -acc * d0inv;
  }
  Rat res(0);
  for (long i = 0; i < e; ++i)
    res += num_s[static_cast<std::size_t>(i)] * inv[static_cast<std::size_t>(e - 1 - i)];
  return res;
}

namespace {

// Rows over the w-monomial coordinates (deg w < deg D) of the functionals
// w -> sum_{branches of cl} Res_{a_j}(g * w / D), one row per g.
Mat cluster_residue_rows(const Cluster& cl, const std::vector<Poly>& jet_basis, const Poly& D) {
  const long w = D.degree();
  Mat rows(static_cast<long>(jet_basis.size()), w);
  rows.setConstant(Rat(0));
  for (std::size_t i = 0; i < jet_basis.size(); ++i) {
    for (long l = 0; l < w; ++l) {
      Rat acc(0);
      RatFun h(jet_basis[i] * Poly::monomial(l, Rat(1)), D);
      for (const auto& a : cl.branches) acc += residue(h, a);
      rows(static_cast<long>(i), l) = acc;
    }
  }
  return rows;
}

// Canonical parts of the module of forms with pole bound D at the branches
// that kill every residue condition drawn from `jet_basis`.
std::pair<RatFun, Mat> solve_forms(const CurveData& core, const Poly& D,
                                   const std::vector<Poly>& jet_basis) {
  const long w = D.degree();
  if (w == 0)
    return detail::canonical_module_parts(core, RatFun(Rat(1)), {}, Poly(Rat(1)));
  long total_rows = static_cast<long>(core.clusters.size() * jet_basis.size());
  Mat cond(total_rows, w);
  cond.setConstant(Rat(0));
  long r0 = 0;
  for (const auto& cl : core.clusters) {
    Mat rows = cluster_residue_rows(cl, jet_basis, D);
    cond.block(r0, 0, rows.rows(), w) = rows;
    r0 += rows.rows();
  }
  Mat ker = kernel(cond);
  std::vector<Poly> span_polys;
  for (long i = 0; i < ker.rows(); ++i) {
    std::vector<Rat> coeffs(static_cast<std::size_t>(w));
    for (long j = 0; j < w; ++j) coeffs[static_cast<std::size_t>(j)] = ker(i, j);
    span_polys.emplace_back(std::move(coeffs));
  }
  return detail::canonical_module_parts(core, RatFun(Poly(Rat(1)), D), span_polys, D);
}

}  // namespace

namespace detail {

void attach_dualizing_module(CurveData& core) {
  const Poly& F = core.conductor;
  auto [hull, body] = solve_forms(core, F, core.o1_basis);
  core.omega_hull = hull;
  core.omega_body = std::move(body);

  // Widened pole window: one extra order at every branch.  The jet basis
  // must then include the conductor multiples t^m * F up to the branch
  // count, whose residues no longer vanish automatically.
  Poly C(Rat(1));
  long branch_count = 0;
  for (const auto& cl : core.clusters)
    for (const auto& a : cl.branches) { C *= Poly::linear_at(a); ++branch_count; }
  if (branch_count > 0) {
    std::vector<Poly> jets = core.o1_basis;
    for (long m = 0; m < branch_count; ++m) jets.push_back(F * Poly::monomial(m, Rat(1)));
    auto [whull, wbody] = solve_forms(core, F * C, jets);
    if (!(whull == core.omega_hull) || wbody.rows() != core.omega_body.rows() ||
        wbody != core.omega_body)
      throw Error("internal: dualizing module changed under a wider pole window");
  }

  // Degree and section checks through the public sheaf interface, on a
  // non-owning handle of the data being built.
  Curve tmp(std::shared_ptr<const CurveData>(&core, [](const CurveData*) {}));
  Sheaf om = omega_sheaf(tmp);
  if (degree(om) != 2 * core.genus - 2)
    throw Error("internal: dualizing sheaf degree is not 2g-2");
  if (h0(om) != core.genus)
    throw Error("internal: dualizing sheaf has h^0 != g");

  // Dual chain and Gorenstein flags, cached for the lifetime of the curve.
  Sheaf o = structure_sheaf(tmp);
  Sheaf dual = sheaf_hom(om, o);
  Sheaf bidual = sheaf_hom(dual, o);
  core.omega_dual_hull = dual.m1.hull();
  core.omega_dual_body = dual.m1.body();
  core.omega_bidual_hull = bidual.m1.hull();
  core.omega_bidual_body = bidual.m1.body();
  core.omega_reflexive = (bidual == om);
  bool invertible = is_invertible(om.m1);
  bool all_free = true;
  for (long i = 0; i < static_cast<long>(core.clusters.size()); ++i) {
    bool free_here = (fiber_dim(om.m1, i) == 1);
    core.gorenstein_at.push_back(free_here);
    all_free = all_free && free_here;
  }
  if (invertible != all_free)
    throw Error("internal: Gorenstein criteria disagree");
  core.gorenstein = invertible;
  if (core.omega_reflexive) {
    // The canonical divisor exists: its dual must be omega and its degree
    // 2g-2.
    if (!(sheaf_hom(dual, o) == om))
      throw Error("internal: L(K) differs from the dualizing sheaf");
    if (core.gorenstein && degree(dual) != -(2 * core.genus - 2))
      throw Error("internal: canonical divisor degree is not 2g-2");
  }
}

}  // namespace detail

Sheaf omega_sheaf(const Curve& c) {
  // The canonical parts were computed at curve build.
  std::vector<Poly> span_polys;
  const Mat& body = c.data().omega_body;
  for (long i = 0; i < body.rows(); ++i) {
    std::vector<Rat> coeffs(static_cast<std::size_t>(body.cols()));
    for (long j = 0; j < body.cols(); ++j) coeffs[static_cast<std::size_t>(j)] = body(i, j);
    span_polys.emplace_back(std::move(coeffs));
  }
  return Sheaf{FracModule::make(c, c.data().omega_hull, span_polys, c.conductor()), 2};
}

Mat residue_conditions(const Curve& c, long cluster) {
  if (cluster < 0 || cluster >= static_cast<long>(c.clusters().size()))
    throw ValidationError("invalid cluster index");
  return cluster_residue_rows(c.clusters()[static_cast<std::size_t>(cluster)],
                              c.data().o1_basis, c.conductor());
}

bool is_gorenstein(const Curve& c) { return c.data().gorenstein; }

bool is_gorenstein_at(const Curve& c, long cluster) {
  if (cluster < 0 || cluster >= static_cast<long>(c.data().gorenstein_at.size()))
    throw ValidationError("invalid cluster index");
  return c.data().gorenstein_at[static_cast<std::size_t>(cluster)];
}

namespace {

FracModule module_from_parts(const Curve& c, const RatFun& hull, const Mat& body) {
  std::vector<Poly> span_polys;
  for (long i = 0; i < body.rows(); ++i) {
    std::vector<Rat> coeffs(static_cast<std::size_t>(body.cols()));
    for (long j = 0; j < body.cols(); ++j) coeffs[static_cast<std::size_t>(j)] = body(i, j);
    span_polys.emplace_back(std::move(coeffs));
  }
  return FracModule::make(c, hull, span_polys, c.conductor());
}

}  // namespace

OmegaBidualReport omega_bidual_report(const Curve& c) {
  Sheaf dual{module_from_parts(c, c.data().omega_dual_hull, c.data().omega_dual_body), -2};
  Sheaf bidual{module_from_parts(c, c.data().omega_bidual_hull, c.data().omega_bidual_body), 2};
  return OmegaBidualReport{dual, bidual, c.data().omega_reflexive};
}

}  // namespace gendiv
