#include "gendiv/curve.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "gendiv/dualizing.hpp"
#include "gendiv/error.hpp"

namespace gendiv {

long Cluster::jet_size() const {
  return std::accumulate(jet_orders.begin(), jet_orders.end(), 0L);
}

RowVec Cluster::jet_of(const Poly& p) const {
  RowVec out = RowVec::Constant(jet_size(), Rat(0));
  long off = 0;
  for (std::size_t j = 0; j < branches.size(); ++j) {
    auto coeffs = p.taylor_coeffs(branches[j], jet_orders[j]);
    for (long k = 0; k < jet_orders[j]; ++k) out(off + k) = coeffs[static_cast<std::size_t>(k)];
    off += jet_orders[j];
  }
  return out;
}

Vec Cluster::conditions_on(const Poly& p) const {
  return conditions * jet_of(p).transpose();
}

Poly Cluster::local_conductor() const {
  Poly f(Rat(1));
  for (std::size_t j = 0; j < branches.size(); ++j)
    f *= Poly::linear_at(branches[j]).pow(jet_orders[j]);
  return f;
}

Cluster node_cluster(const Rat& a, const Rat& b) {
  if (a == b) throw ValidationError("node branches must be distinct");
  Cluster c;
  c.branches = {a, b};
  c.jet_orders = {1, 1};
  c.conditions = Mat(1, 2);
  c.conditions(0, 0) = Rat(1);
  c.conditions(0, 1) = Rat(-1);  // f(a) = f(b)
  c.preset = "node";
  return c;
}

Cluster cusp_cluster(const Rat& a) {
  Cluster c;
  c.branches = {a};
  c.jet_orders = {2};
  c.conditions = Mat(1, 2);
  c.conditions(0, 0) = Rat(0);
  c.conditions(0, 1) = Rat(1);  // f'(a) = 0
  c.preset = "cusp";
  return c;
}

Cluster tacnode_cluster(const Rat& a, const Rat& b) {
  if (a == b) throw ValidationError("tacnode branches must be distinct");
  Cluster c;
  c.branches = {a, b};
  c.jet_orders = {2, 2};
  c.conditions = Mat(2, 4);
  c.conditions.setConstant(Rat(0));
  c.conditions(0, 0) = Rat(1);
  c.conditions(0, 2) = Rat(-1);  // f(a) = f(b)
  c.conditions(1, 1) = Rat(1);
  c.conditions(1, 3) = Rat(-1);  // f'(a) = f'(b)
  c.preset = "tacnode";
  return c;
}

std::vector<long> semigroup_gaps(const std::vector<long>& generators) {
  if (generators.empty()) throw ValidationError("empty semigroup generator list");
  long g = 0;
  for (long n : generators) {
    if (n <= 0) throw ValidationError("semigroup generators must be positive");
    g = std::gcd(g, n);
  }
  if (g != 1)
    throw ValidationError("semigroup generators have gcd " + std::to_string(g) +
                          ": the subalgebra has infinite colength");
  long bound = 1;
  for (long n : generators) bound = std::max(bound, n);
  // The Frobenius number of a numerical semigroup is below max(gens)^2.
  bound = bound * bound + 1;
  std::vector<bool> in(static_cast<std::size_t>(bound) + 1, false);
  in[0] = true;
  for (long v = 1; v <= bound; ++v)
    for (long n : generators)
      if (v >= n && in[static_cast<std::size_t>(v - n)]) { in[static_cast<std::size_t>(v)] = true; break; }
  std::vector<long> gaps;
  for (long v = 1; v <= bound; ++v)
    if (!in[static_cast<std::size_t>(v)]) gaps.push_back(v);
  return gaps;
}

Cluster semigroup_cluster(const std::vector<long>& generators) {
  auto gaps = semigroup_gaps(generators);
  if (gaps.empty())
    throw ValidationError("the semigroup is all of N; the point is smooth");
  Cluster c;
  c.branches = {Rat(0)};
  long cond_order = gaps.back() + 1;
  c.jet_orders = {cond_order};
  c.conditions = Mat(static_cast<long>(gaps.size()), cond_order);
  c.conditions.setConstant(Rat(0));
  for (std::size_t i = 0; i < gaps.size(); ++i)
    c.conditions(static_cast<long>(i), gaps[i]) = Rat(1);  // coefficient of t^gap vanishes
  c.preset = "semigroup";
  c.semigroup_gens = generators;
  return c;
}

bool CurveData::is_branch(const Rat& a) const {
  for (const auto& cl : clusters)
    for (const auto& b : cl.branches)
      if (a == b) return true;
  return false;
}

std::vector<Rat> CurveData::all_branches() const {
  std::vector<Rat> out;
  for (const auto& cl : clusters)
    for (const auto& b : cl.branches) out.push_back(b);
  return out;
}

namespace {

// Conditions of every cluster applied to the monomials t^0 .. t^{n-1}.
Mat condition_matrix(const std::vector<Cluster>& clusters, long n) {
  long rows = 0;
  for (const auto& cl : clusters) rows += cl.conditions.rows();
  Mat m(rows, n);
  m.setConstant(Rat(0));
  long r0 = 0;
  for (const auto& cl : clusters) {
    for (long l = 0; l < n; ++l) {
      Vec vals = cl.conditions_on(Poly::monomial(l, Rat(1)));
      for (long i = 0; i < vals.rows(); ++i) m(r0 + i, l) = vals(i);
    }
    r0 += cl.conditions.rows();
  }
  return m;
}

void validate_clusters(const std::vector<Cluster>& clusters) {
  std::set<Rat> seen;
  for (const auto& cl : clusters) {
    if (cl.branches.empty()) throw ValidationError("cluster with no branches");
    if (cl.branches.size() != cl.jet_orders.size())
      throw ValidationError("cluster branch/jet-order size mismatch");
    for (long c : cl.jet_orders)
      if (c < 1) throw ValidationError("conductor orders must be >= 1");
    if (cl.conditions.rows() == 0)
      throw ValidationError("cluster imposes no conditions");
    if (cl.conditions.cols() != cl.jet_size())
      throw ValidationError("condition matrix width does not match jet layout");
    for (const auto& b : cl.branches) {
      if (!seen.insert(b).second)
        throw ValidationError("branch coordinate " + b.str() +
                              " appears in more than one place");
    }
  }
}

std::shared_ptr<const CurveData> build_curve(std::vector<Cluster> clusters,
                                             std::optional<std::vector<long>> semigroup) {
  validate_clusters(clusters);

  auto data = std::make_shared<CurveData>();
  data->clusters = std::move(clusters);
  data->semigroup = std::move(semigroup);

  Poly f(Rat(1));
  for (const auto& cl : data->clusters) f *= cl.local_conductor();
  data->conductor = f;
  const long df = f.degree();

  // O1 below the conductor: common kernel of all conditions on polynomials
  // of degree < deg f.
  Mat cond = condition_matrix(data->clusters, df);
  data->o1_body = kernel(cond);
  data->genus = df - data->o1_body.rows();
  for (long i = 0; i < data->o1_body.rows(); ++i) {
    std::vector<Rat> coeffs(static_cast<std::size_t>(df));
    for (long j = 0; j < df; ++j) coeffs[static_cast<std::size_t>(j)] = data->o1_body(i, j);
    data->o1_basis.emplace_back(std::move(coeffs));
  }

  for (const auto& cl : data->clusters) {
    Vec v = cl.conditions_on(Poly(Rat(1)));
    for (long i = 0; i < v.rows(); ++i)
      if (!v(i).is_zero())
        throw ValidationError("not a subalgebra: the constant 1 violates a condition");
  }

  // Multiplicative closure on the jet level: products of the basis of O1
  // below the conductor must satisfy every condition.  Products with the
  // conductor tail are automatic.
  for (std::size_t i = 0; i < data->o1_basis.size(); ++i) {
    for (std::size_t j = i; j < data->o1_basis.size(); ++j) {
      Poly prod = data->o1_basis[i] * data->o1_basis[j];
      for (const auto& cl : data->clusters) {
        Vec v = cl.conditions_on(prod);
        for (long k = 0; k < v.rows(); ++k)
          if (!v(k).is_zero())
            throw ValidationError("not a subalgebra: conditions are not multiplicatively closed");
      }
    }
  }

  // Per-cluster invariants, computed from each cluster in isolation.
  long delta_total = 0;
  for (const auto& cl : data->clusters) {
    long dloc = cl.local_conductor().degree();
    Mat local = condition_matrix({cl}, dloc);
    ClusterInvariants inv;
    inv.delta = dloc - kernel(local).rows();
    inv.branches = static_cast<long>(cl.branches.size());
    inv.toric_rank = inv.branches - 1;
    inv.unipotent_dim = inv.delta - inv.toric_rank;
    data->invariants.push_back(inv);
    delta_total += inv.delta;
  }
  if (delta_total != data->genus)
    throw ValidationError("cluster conditions are not independent across clusters");

  detail::attach_dualizing_module(*data);

  return data;
}

}  // namespace

Curve curve_from_semigroup(const std::vector<long>& generators) {
  auto gaps = semigroup_gaps(generators);
  if (gaps.empty()) {
    // Full semigroup: the chart ring is all of Q[t] and the curve is smooth.
    auto data = std::make_shared<CurveData>();
    data->conductor = Poly(Rat(1));
    data->genus = 0;
    data->semigroup = generators;
    detail::attach_dualizing_module(*data);
    return Curve(std::move(data));
  }
  return Curve(build_curve({semigroup_cluster(generators)}, generators));
}

Curve curve_from_clusters(const std::vector<Cluster>& clusters) {
  return Curve(build_curve(clusters, std::nullopt));
}

ClusterInvariants singularity_invariants(const Curve& c, long cluster) {
  if (cluster < 0 || cluster >= static_cast<long>(c.data().invariants.size()))
    throw ValidationError("invalid cluster index");
  return c.data().invariants[static_cast<std::size_t>(cluster)];
}

void validate_point(const Curve& c, const Point& p) {
  switch (p.kind) {
    case Point::Kind::Smooth:
      if (c.data().is_branch(p.coord))
        throw ValidationError("coordinate " + p.coord.str() +
                              " is a branch of a singular point; use the cluster instead");
      return;
    case Point::Kind::Infinity:
      return;
    case Point::Kind::Singular:
      if (p.cluster < 0 || p.cluster >= static_cast<long>(c.clusters().size()))
        throw ValidationError("invalid cluster index");
      return;
  }
}

}  // namespace gendiv
