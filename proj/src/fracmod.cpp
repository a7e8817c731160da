#include "gendiv/fracmod.hpp"

#include <algorithm>

#include "gendiv/error.hpp"

namespace gendiv {

namespace detail {

RatFun frac_gcd(const std::vector<RatFun>& fs) {
  Poly den(Rat(1));
  for (const auto& f : fs)
    if (!f.is_zero()) den = lcm(den, f.den());
  Poly num;
  for (const auto& f : fs) {
    if (f.is_zero()) continue;
    num = gcd(num, f.num() * exact_div(den, f.den()));
  }
  if (num.is_zero()) throw ValidationError("zero module has no hull");
  return RatFun(num, den).monic_part();
}

namespace {

RowVec poly_to_row(const Poly& p, long width) {
  RowVec v = RowVec::Constant(width, Rat(0));
  if (p.degree() >= width) throw Error("internal: cofactor exceeds window");
  for (long i = 0; i <= p.degree(); ++i) v(i) = p.coeff(i);
  return v;
}

Poly row_to_poly(const Mat& rows, long i) {
  std::vector<Rat> c(static_cast<std::size_t>(rows.cols()));
  for (long j = 0; j < rows.cols(); ++j) c[static_cast<std::size_t>(j)] = rows(i, j);
  return Poly(std::move(c));
}

}  // namespace

std::pair<RatFun, Mat> canonical_module_parts(const CurveData& core, const RatFun& hull,
                                              const std::vector<Poly>& span_polys,
                                              const Poly& tail) {
  if (hull.is_zero()) throw ValidationError("zero hull");
  if (tail.is_zero()) throw ValidationError("zero tail");
  const Poly& F = core.conductor;
  const long dF = F.degree();

  // Shrink the hull to the principal ideal generated by the whole module.
  Poly g = tail;
  for (const auto& p : span_polys)
    if (!p.is_zero()) g = gcd(g, p);
  RatFun hull2 = (hull * RatFun(g)).monic_part();
  Poly tail2 = exact_div(tail, g).monic();

  std::vector<RowVec> rows;
  for (const auto& p : span_polys) {
    if (p.is_zero()) continue;
    rows.push_back(poly_to_row(divmod(exact_div(p, g), F).second, dF));
  }
  for (long j = 0; j < dF; ++j)
    rows.push_back(poly_to_row(divmod(tail2 * Poly::monomial(j, Rat(1)), F).second, dF));
  Mat body = span(Window{0, dF - 1}, rows).basis;

  // Minimality of the hull: the stored cofactors and F must be coprime.
  Poly check = F;
  for (long i = 0; i < body.rows(); ++i) check = gcd(check, row_to_poly(body, i));
  if (dF > 0 && check.degree() != 0)
    throw Error("internal: canonical form lost hull minimality");

  // O1-stability at jet level: v*m stays inside for every basis element v of
  // O1 below the conductor and every body row m.  The conductor tail is
  // stable automatically.
  for (const auto& v : core.o1_basis) {
    for (long i = 0; i < body.rows(); ++i) {
      Poly prod = divmod(v * row_to_poly(body, i), F).second;
      RowVec residual = reduce_against(body, poly_to_row(prod, dF));
      for (long cidx = 0; cidx < residual.cols(); ++cidx)
        if (!residual(cidx).is_zero())
          throw Error("internal: module is not stable under the chart ring");
    }
  }

  return {hull2, std::move(body)};
}

}  // namespace detail

FracModule FracModule::make(const Curve& c, const RatFun& hull,
                            const std::vector<Poly>& span_polys, const Poly& tail) {
  auto [h, b] = detail::canonical_module_parts(c.data(), hull, span_polys, tail);
  FracModule m;
  m.curve_ = c;
  m.hull_ = h;
  m.body_ = std::move(b);
  return m;
}

FracModule FracModule::from_generators(const Curve& c, const std::vector<RatFun>& gens) {
  bool all_zero = true;
  for (const auto& g : gens)
    if (!g.is_zero()) all_zero = false;
  if (gens.empty() || all_zero)
    throw ValidationError("a fractional module needs at least one nonzero generator");

  RatFun hull = detail::frac_gcd(gens);
  std::vector<Poly> span_polys;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    Poly cof = (g / hull).as_poly();
    for (const auto& v : c.data().o1_basis) span_polys.push_back(v * cof);
  }
  return make(c, hull, span_polys, c.conductor());
}

FracModule FracModule::structure(const Curve& c) {
  return make(c, RatFun(Rat(1)), c.data().o1_basis, c.conductor());
}

FracModule FracModule::polynomial_ring(const Curve& c) {
  std::vector<Poly> monos;
  for (long j = 0; j < c.conductor().degree(); ++j) monos.push_back(Poly::monomial(j, Rat(1)));
  return make(c, RatFun(Rat(1)), monos, Poly(Rat(1)));
}

FracModule FracModule::principal(const Curve& c, const RatFun& f) {
  if (f.is_zero()) throw ValidationError("principal module of the zero function");
  return scale(structure(c), f);
}

FracModule FracModule::maximal_ideal(const Curve& c, long cluster) {
  if (cluster < 0 || cluster >= static_cast<long>(c.clusters().size()))
    throw ValidationError("invalid cluster index");
  const Cluster& cl = c.clusters()[static_cast<std::size_t>(cluster)];
  const auto& basis = c.data().o1_basis;
  // Combinations of the O1 basis vanishing at every branch of the cluster;
  // the conductor tail vanishes there already.
  Mat evals(static_cast<long>(cl.branches.size()), static_cast<long>(basis.size()));
  for (std::size_t j = 0; j < cl.branches.size(); ++j)
    for (std::size_t i = 0; i < basis.size(); ++i)
      evals(static_cast<long>(j), static_cast<long>(i)) = basis[i].eval(cl.branches[j]);
  Mat ker = kernel(evals);
  std::vector<Poly> span_polys;
  for (long i = 0; i < ker.rows(); ++i) {
    Poly p;
    for (long j = 0; j < ker.cols(); ++j)
      p += ker(i, j) * basis[static_cast<std::size_t>(j)];
    span_polys.push_back(p);
  }
  return make(c, RatFun(Rat(1)), span_polys, c.conductor());
}

std::vector<Poly> FracModule::body_polys() const {
  std::vector<Poly> out;
  for (long i = 0; i < body_.rows(); ++i) {
    std::vector<Rat> c(static_cast<std::size_t>(body_.cols()));
    for (long j = 0; j < body_.cols(); ++j) c[static_cast<std::size_t>(j)] = body_(i, j);
    out.emplace_back(std::move(c));
  }
  return out;
}

bool FracModule::contains(const RatFun& f) const {
  if (f.is_zero()) return true;
  RatFun u = f / hull_;
  if (!u.is_poly()) return false;
  const Poly& F = curve_.conductor();
  const long dF = F.degree();
  if (dF == 0) return true;
  Poly w = divmod(u.as_poly(), F).second;
  RowVec v = RowVec::Constant(dF, Rat(0));
  for (long i = 0; i <= w.degree(); ++i) v(i) = w.coeff(i);
  RowVec residual = reduce_against(body_, v);
  for (long cidx = 0; cidx < residual.cols(); ++cidx)
    if (!residual(cidx).is_zero()) return false;
  return true;
}

bool FracModule::contains_module(const FracModule& other) const {
  for (const auto& g : other.canonical_generators())
    if (!contains(g)) return false;
  return true;
}

std::vector<RatFun> FracModule::canonical_generators() const {
  std::vector<RatFun> out;
  for (const auto& p : body_polys()) out.push_back(hull_ * RatFun(p));
  const Poly& F = curve_.conductor();
  for (long j = 0; j < F.degree(); ++j)
    out.push_back(hull_ * RatFun(F * Poly::monomial(j, Rat(1))));
  if (out.empty()) out.push_back(hull_);  // smooth chart: the hull generates
  return out;
}

std::vector<RatFun> FracModule::minimal_generators() const {
  std::vector<RatFun> gens = canonical_generators();
  std::stable_sort(gens.begin(), gens.end(), [](const RatFun& a, const RatFun& b) {
    return a.laurent_degree() > b.laurent_degree();
  });
  for (std::size_t i = 0; i < gens.size() && gens.size() > 1;) {
    std::vector<RatFun> rest;
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (j != i) rest.push_back(gens[j]);
    if (from_generators(curve_, rest) == *this) {
      gens = std::move(rest);
    } else {
      ++i;
    }
  }
  std::reverse(gens.begin(), gens.end());  // ascending laurent degree
  return gens;
}

bool operator==(const FracModule& a, const FracModule& b) {
  if (!a.curve_.same_curve(b.curve_))
    throw ValidationError("modules live on different curves");
  return a.hull_ == b.hull_ && a.body_.rows() == b.body_.rows() && a.body_ == b.body_;
}

FracModule msum(const FracModule& a, const FracModule& b) {
  if (!a.curve().same_curve(b.curve()))
    throw ValidationError("module sum across different curves");
  const Curve& c = a.curve();
  RatFun g = detail::frac_gcd({a.hull(), b.hull()});
  Poly ca = (a.hull() / g).as_poly();
  Poly cb = (b.hull() / g).as_poly();
  std::vector<Poly> span_polys;
  for (const auto& p : a.body_polys()) span_polys.push_back(ca * p);
  for (const auto& p : b.body_polys()) span_polys.push_back(cb * p);
  return FracModule::make(c, g, span_polys, c.conductor());
}

FracModule mprod(const FracModule& a, const FracModule& b) {
  if (!a.curve().same_curve(b.curve()))
    throw ValidationError("module product across different curves");
  std::vector<RatFun> gens;
  for (const auto& x : a.canonical_generators())
    for (const auto& y : b.canonical_generators()) gens.push_back(x * y);
  return FracModule::from_generators(a.curve(), gens);
}

FracModule colon(const FracModule& a, const FracModule& b) {
  if (!a.curve().same_curve(b.curve()))
    throw ValidationError("module colon across different curves");
  const Curve& c = a.curve();
  const Poly& F = c.conductor();
  const long dF = F.degree();

  // (a : b) is sandwiched between F*(hull_a/hull_b)*Q[t] and
  // hull_a/(F*hull_b)*Q[t]: candidates have cofactor degree < 2 deg F
  // against H = hull_a/(F*hull_b), and the tail F^2 is automatic.
  RatFun H = a.hull() / (RatFun(F) * b.hull());
  if (dF == 0) return FracModule::make(c, H, {}, Poly(Rat(1)));

  std::vector<Poly> bgens = b.body_polys();
  for (long j = 0; j < dF; ++j) bgens.push_back(F * Poly::monomial(j, Rat(1)));

  const long w = 2 * dF;
  Mat cond(static_cast<long>(bgens.size()) * 2 * dF, w);
  cond.setConstant(Rat(0));
  long r0 = 0;
  for (const auto& p : bgens) {
    for (long l = 0; l < w; ++l) {
      // H*t^l times the generator hull_b*p of b equals hull_a*(t^l*p)/F;
      // membership in a needs F | t^l*p and the quotient's class in body_a.
      auto [Q, R] = divmod(Poly::monomial(l, Rat(1)) * p, F);
      for (long i = 0; i <= R.degree(); ++i) cond(r0 + i, l) = R.coeff(i);
      Poly qm = divmod(Q, F).second;
      RowVec qv = RowVec::Constant(dF, Rat(0));
      for (long i = 0; i <= qm.degree(); ++i) qv(i) = qm.coeff(i);
      RowVec residual = reduce_against(a.body(), qv);
      for (long i = 0; i < dF; ++i) cond(r0 + dF + i, l) = residual(i);
    }
    r0 += 2 * dF;
  }
  Mat ker = kernel(cond);
  std::vector<Poly> span_polys;
  for (long i = 0; i < ker.rows(); ++i) {
    std::vector<Rat> coeffs(static_cast<std::size_t>(w));
    for (long j = 0; j < w; ++j) coeffs[static_cast<std::size_t>(j)] = ker(i, j);
    span_polys.emplace_back(std::move(coeffs));
  }
  return FracModule::make(c, H, span_polys, F * F);
}

FracModule intersect(const FracModule& a, const FracModule& b) {
  if (!a.curve().same_curve(b.curve()))
    throw ValidationError("module intersection across different curves");
  const Curve& c = a.curve();
  const Poly& F = c.conductor();
  const long dF = F.degree();
  RatFun g = detail::frac_gcd({a.hull(), b.hull()});
  RatFun L = (a.hull() * b.hull()) / g;  // lcm of the hulls
  if (dF == 0) return FracModule::make(c, L, {}, Poly(Rat(1)));

  Poly la = (L / a.hull()).as_poly();
  Poly lb = (L / b.hull()).as_poly();
  Mat cond(2 * dF, dF);
  cond.setConstant(Rat(0));
  for (long l = 0; l < dF; ++l) {
    Poly pa = divmod(la * Poly::monomial(l, Rat(1)), F).second;
    Poly pb = divmod(lb * Poly::monomial(l, Rat(1)), F).second;
    RowVec va = RowVec::Constant(dF, Rat(0)), vb = RowVec::Constant(dF, Rat(0));
    for (long i = 0; i <= pa.degree(); ++i) va(i) = pa.coeff(i);
    for (long i = 0; i <= pb.degree(); ++i) vb(i) = pb.coeff(i);
    RowVec ra = reduce_against(a.body(), va);
    RowVec rb = reduce_against(b.body(), vb);
    for (long i = 0; i < dF; ++i) {
      cond(i, l) = ra(i);
      cond(dF + i, l) = rb(i);
    }
  }
  Mat ker = kernel(cond);
  std::vector<Poly> span_polys;
  for (long i = 0; i < ker.rows(); ++i) {
    std::vector<Rat> coeffs(static_cast<std::size_t>(dF));
    for (long j = 0; j < dF; ++j) coeffs[static_cast<std::size_t>(j)] = ker(i, j);
    span_polys.emplace_back(std::move(coeffs));
  }
  return FracModule::make(c, L, span_polys, F);
}

FracModule scale(const FracModule& a, const RatFun& f) {
  if (f.is_zero()) throw ValidationError("scaling a module by zero");
  return FracModule::make(a.curve(), a.hull() * f, a.body_polys(), a.curve().conductor());
}

long length_between(const FracModule& a, const FracModule& b) {
  if (!a.curve().same_curve(b.curve()))
    throw ValidationError("length across different curves");
  if (!a.contains_module(b))
    throw ValidationError("length_between requires the second module inside the first");
  const Curve& cv = a.curve();
  const Poly& F = cv.conductor();
  Poly c = (b.hull() / a.hull()).as_poly();  // containment makes this exact
  Poly M = F * c;
  const long dM = M.degree();
  if (dM == 0) return 0;

  auto rows_mod = [&](const std::vector<Poly>& polys) {
    std::vector<RowVec> rows;
    for (const auto& p : polys) {
      Poly r = divmod(p, M).second;
      RowVec v = RowVec::Constant(dM, Rat(0));
      for (long i = 0; i <= r.degree(); ++i) v(i) = r.coeff(i);
      rows.push_back(v);
    }
    return rows;
  };

  // Both quotients are taken against N = F * hull_b * Q[t], which lies
  // inside b by the conductor sandwich.
  std::vector<Poly> apolys = a.body_polys();
  for (long j = 0; j < c.degree(); ++j) apolys.push_back(F * Poly::monomial(j, Rat(1)));
  std::vector<Poly> bpolys;
  for (const auto& p : b.body_polys()) bpolys.push_back(c * p);

  long da = span(Window{0, dM - 1}, rows_mod(apolys)).dim();
  long db = span(Window{0, dM - 1}, rows_mod(bpolys)).dim();
  return da - db;
}

long fiber_dim(const FracModule& a, long cluster) {
  FracModule m = FracModule::maximal_ideal(a.curve(), cluster);
  return length_between(a, mprod(m, a));
}

ModQuotient mod_quotient(const FracModule& a, const FracModule& b) {
  if (!a.contains_module(b))
    throw ValidationError("mod_quotient requires the second module inside the first");
  const Poly& F = a.curve().conductor();
  Poly c = (b.hull() / a.hull()).as_poly();
  Poly M = F * c;
  const long dM = M.degree();

  ModQuotient q;
  q.hull = a.hull();
  q.modulus = M;
  if (dM == 0) return q;

  auto to_row = [&](const Poly& p) {
    Poly r = divmod(p, M).second;
    RowVec v = RowVec::Constant(dM, Rat(0));
    for (long i = 0; i <= r.degree(); ++i) v(i) = r.coeff(i);
    return v;
  };

  std::vector<RowVec> brows;
  for (const auto& p : b.body_polys()) brows.push_back(to_row(c * p));
  Mat reduced = span(Window{0, dM - 1}, brows).basis;

  std::vector<Poly> cands = a.body_polys();
  for (long j = 0; j < c.degree(); ++j) cands.push_back(F * Poly::monomial(j, Rat(1)));
  for (const auto& p : cands) {
    RowVec res = reduce_against(reduced, to_row(p));
    bool zero = true;
    for (long i = 0; i < res.cols(); ++i)
      if (!res(i).is_zero()) { zero = false; break; }
    if (zero) continue;
    q.rep_cofactors.push_back(p);
    q.reps.push_back(a.hull() * RatFun(p));
    Mat next(reduced.rows() + 1, dM);
    next.topRows(reduced.rows()) = reduced;
    next.row(reduced.rows()) = res;
    reduced = rref_rows(std::move(next));
  }
  return q;
}

FracModule preimage_module(const FracModule& a, const FracModule& b, const Mat& combos) {
  ModQuotient q = mod_quotient(a, b);
  if (combos.cols() != static_cast<long>(q.rep_cofactors.size()))
    throw ValidationError("combo width does not match the quotient dimension");
  const Poly& F = a.curve().conductor();
  Poly c = (b.hull() / a.hull()).as_poly();
  std::vector<Poly> span_polys;
  for (const auto& p : b.body_polys()) span_polys.push_back(c * p);
  for (long i = 0; i < combos.rows(); ++i) {
    Poly p;
    for (long j = 0; j < combos.cols(); ++j)
      p += combos(i, j) * q.rep_cofactors[static_cast<std::size_t>(j)];
    span_polys.push_back(p);
  }
  return FracModule::make(a.curve(), a.hull(), span_polys, F * c);
}

bool is_invertible(const FracModule& a) {
  FracModule o1 = FracModule::structure(a.curve());
  bool by_product = (mprod(a, colon(o1, a)) == o1);
  bool by_fibers = true;
  for (long i = 0; i < static_cast<long>(a.curve().clusters().size()); ++i)
    if (fiber_dim(a, i) != 1) { by_fibers = false; break; }
  if (by_product != by_fibers)
    throw Error("internal: invertibility criteria disagree");
  return by_product;
}

}  // namespace gendiv
