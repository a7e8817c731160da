#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gendiv/linalg.hpp"
#include "gendiv/poly.hpp"
#include "gendiv/ratfun.hpp"

namespace gendiv {

/// One singular point of the curve: a set of branch coordinates on the
/// normalization that get crimped together, cut out by linear conditions on
/// truncated Taylor expansions (jets) at the branches.
///
/// Jet coordinates are laid out branch by branch: branch j contributes the
/// Taylor coefficients of (t - a_j)^0 .. (t - a_j)^{c_j - 1} where c_j is the
/// branch's conductor order.
struct Cluster {
  std::vector<Rat> branches;
  std::vector<long> jet_orders;  // per-branch conductor orders, >= 1
  Mat conditions;                // rows are functionals on the jet coordinates

  // provenance, kept for file round-trips
  std::string preset = "custom";       // node | cusp | tacnode | semigroup | custom
  std::vector<long> semigroup_gens;    // when preset == "semigroup"

  long jet_size() const;
  /// Taylor coefficients of p at every branch, flattened.
  RowVec jet_of(const Poly& p) const;
  /// The condition functionals applied to an arbitrary polynomial.
  Vec conditions_on(const Poly& p) const;
  /// prod (t - a_j)^{c_j}
  Poly local_conductor() const;
};

Cluster node_cluster(const Rat& a, const Rat& b);
Cluster cusp_cluster(const Rat& a);
Cluster tacnode_cluster(const Rat& a, const Rat& b);
Cluster semigroup_cluster(const std::vector<long>& generators);

/// Gap set of the numerical semigroup generated by `generators`.
/// Throws unless gcd(generators) = 1.
std::vector<long> semigroup_gaps(const std::vector<long>& generators);

struct ClusterInvariants {
  long delta = 0;
  long branches = 0;
  long toric_rank = 0;
  long unipotent_dim = 0;
};

/// Immutable internal state of a curve.  The singular affine chart is
/// Spec(O1) for O1 = span(o1_basis) + conductor * Q[t]; the chart at infinity
/// is smooth with coordinate s = 1/t.
struct CurveData {
  std::vector<Cluster> clusters;
  Poly conductor;              // monic; equals 1 on a smooth curve
  Mat o1_body;                 // canonical basis of O1 below the conductor
  std::vector<Poly> o1_basis;  // the same rows as polynomials
  long genus = 0;
  std::vector<ClusterInvariants> invariants;

  // Dualizing module in the dt-trivialization, canonical fractional-module
  // form: omega = omega_hull * (span(omega_body) + conductor * Q[t]),
  // vanishing order 2 at infinity.
  RatFun omega_hull;
  Mat omega_body;

  // The dual chain Hom(omega, O), Hom(Hom(omega, O), O) and the Gorenstein
  // flags, computed once at build.
  RatFun omega_dual_hull;
  Mat omega_dual_body;
  RatFun omega_bidual_hull;
  Mat omega_bidual_body;
  bool omega_reflexive = false;
  bool gorenstein = false;
  std::vector<bool> gorenstein_at;

  std::optional<std::vector<long>> semigroup;  // set when built from a semigroup

  bool is_branch(const Rat& a) const;
  std::vector<Rat> all_branches() const;
};

/// Value handle of an immutable curve; cheap to copy and safe to share.
class Curve {
 public:
  Curve() = default;
  explicit Curve(std::shared_ptr<const CurveData> d) : d_(std::move(d)) {}

  const CurveData& data() const { return *d_; }
  long genus() const { return d_->genus; }
  const Poly& conductor() const { return d_->conductor; }
  const std::vector<Cluster>& clusters() const { return d_->clusters; }
  bool valid() const { return d_ != nullptr; }

  /// Identity comparison; every operation requires its operands to live on
  /// the same curve object.
  bool same_curve(const Curve& o) const { return d_ == o.d_; }

 private:
  std::shared_ptr<const CurveData> d_;
};

Curve curve_from_semigroup(const std::vector<long>& generators);
Curve curve_from_clusters(const std::vector<Cluster>& clusters);

ClusterInvariants singularity_invariants(const Curve& c, long cluster);

/// A closed point of the curve.
struct Point {
  enum class Kind { Smooth, Infinity, Singular };
  Kind kind = Kind::Smooth;
  Rat coord;        // for Kind::Smooth
  long cluster = 0; // for Kind::Singular

  static Point smooth(const Rat& a) { return Point{Kind::Smooth, a, 0}; }
  static Point infinity() { return Point{Kind::Infinity, Rat(0), 0}; }
  static Point singular(long cluster) { return Point{Kind::Singular, Rat(0), cluster}; }
};

/// Checks that the point actually lies on the curve (smooth coordinates must
/// avoid all branch coordinates, cluster indices must be valid).
void validate_point(const Curve& c, const Point& p);

}  // namespace gendiv
