#pragma once

#include "gendiv/sheaf.hpp"

namespace gendiv {

/// Coefficient of (t-a)^{-1} in the exact Laurent expansion of f at a.
Rat residue(const RatFun& f, const Rat& a);

/// The dualizing sheaf in the dt-trivialization: rational functions h such
/// that h*dt has pole order at most the conductor order at every branch and
/// every per-cluster residue condition vanishes; vanishing order 2 at
/// infinity (dt = -s^{-2} ds).
Sheaf omega_sheaf(const Curve& c);

/// Residue-condition functionals of one cluster, as rows over the cofactor
/// coordinates of h = w/F (column l is the functional applied to w = t^l):
/// one row per jet-basis element g of O1, sending w to the sum of
/// Res_{a_j}(g * (w/F) dt) over the cluster's branches.
Mat residue_conditions(const Curve& c, long cluster);

bool is_gorenstein(const Curve& c);
bool is_gorenstein_at(const Curve& c, long cluster);

struct OmegaBidualReport {
  Sheaf dual;     // Hom(omega, O)
  Sheaf bidual;   // Hom(Hom(omega, O), O)
  bool reflexive; // bidual == omega
};
OmegaBidualReport omega_bidual_report(const Curve& c);

namespace detail {
/// Computes and stores the dualizing module on a curve being built, then
/// checks deg = 2g-2, h^0 = g and that widening the pole window adds no
/// solutions.
void attach_dualizing_module(CurveData& core);
}  // namespace detail

}  // namespace gendiv
