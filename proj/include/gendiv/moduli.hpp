#pragma once

#include "gendiv/divisor.hpp"

namespace gendiv {

/// A point of the compactified Jacobian, held through one representative
/// rank-1 torsion-free sheaf together with its discrete invariants.
struct SheafClass {
  Sheaf representative;
  long degree = 0;
  long h0 = 0;
  std::vector<long> non_free_clusters;
};

SheafClass make_sheaf_class(const Sheaf& s);

/// Abel-map data of a divisor: the class of the associated sheaf L(D)
/// (resp. M(D_omega)) together with the fiber through [D], which is the
/// complete linear system |D|.
struct AbelFiber {
  SheafClass cls;
  long fiber_dim = -1;
};
AbelFiber abel_fiber(const GDivisor& d);
AbelFiber abel_fiber(const OmegaDivisor& d);

/// 2^n * h0.
long theta_multiplicity_formula(long nonfree_nodes, long h0);

/// Multiplicity of the theta divisor at a class on a curve whose clusters
/// are all nodes.  Requires degree g-1 and h0 > 0 (the class must lie on
/// theta).
long theta_multiplicity(const Curve& c, const SheafClass& cls);

struct Degree2Row {
  std::string label;
  long dim = -1;
  bool in_distinguished_class = false;
  bool cartier = false;
};
struct Degree2Report {
  long samples = 0;
  long movers = 0;  // samples with dim >= 1
  bool pass = false;
  std::vector<Degree2Row> rows;
};

/// The genus-2 classification: on the semigroup-(3,4,5) curve the degree-2
/// effective divisors moving in a positive-dimensional linear system form a
/// single linear-equivalence class, and every sampled non-Cartier divisor
/// outside it has dual sheaf isomorphic to the pushforward of O.
Degree2Report classify_degree2_example(const Curve& c, std::uint64_t seed, long smooth_pairs);

struct KernelReport {
  std::vector<ClusterInvariants> clusters;
  long total_delta = 0;
  long total_toric = 0;
  long total_unipotent = 0;
};
/// Per-cluster toric/unipotent decomposition of the kernel of
/// J0(X) -> J0 of the normalization; the total dimension is the genus.
KernelReport jacobian_kernel_report(const Curve& c);

}  // namespace gendiv
