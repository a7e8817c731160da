#pragma once

#include <map>
#include <random>
#include <string>

#include "gendiv/dualizing.hpp"

namespace gendiv {

/// Generalized divisor D, stored through the nonzero subsheaf I_D of the
/// sheaf of rational functions.
struct GDivisor {
  Sheaf ideal;
  friend bool operator==(const GDivisor& a, const GDivisor& b) { return a.ideal == b.ideal; }
  friend bool operator!=(const GDivisor& a, const GDivisor& b) { return !(a == b); }
};

/// Generalized omega-divisor, stored through the coefficient module of
/// I_{D_omega} in the dt-trivialization (a rational 1-form f dt is recorded
/// as f; dt = -s^{-2} ds on the chart at infinity, so the stored sheaf of
/// the effective zero divisor is omega itself with inf_order 2).
struct OmegaDivisor {
  Sheaf ideal;
  friend bool operator==(const OmegaDivisor& a, const OmegaDivisor& b) { return a.ideal == b.ideal; }
  friend bool operator!=(const OmegaDivisor& a, const OmegaDivisor& b) { return !(a == b); }
};

GDivisor zero_divisor(const Curve& c);
OmegaDivisor zero_omega_divisor(const Curve& c);
GDivisor point_divisor(const Curve& c, const Point& p);
GDivisor principal_divisor(const Curve& c, const RatFun& f);

/// The omega-divisor I_p * omega, or with a covector the kernel of the
/// selected rank-1 quotient of the omega-fiber at p.  Covector coordinates
/// refer to the canonical fiber basis (see omega_fiber_basis).
OmegaDivisor omega_point_divisor(const Curve& c, const Point& p,
                                 const std::optional<Vec>& covector = std::nullopt);

/// Canonical basis of the fiber omega/(m_p * omega) at a point, as
/// representative 1-forms (dt-trivialized).
std::vector<RatFun> omega_fiber_basis(const Curve& c, const Point& p);

long degree(const GDivisor& d);
long degree(const OmegaDivisor& d);
bool is_effective(const GDivisor& d);
bool is_effective(const OmegaDivisor& d);
bool is_cartier(const GDivisor& d);
bool is_cartier(const OmegaDivisor& d);

GDivisor dsum(const GDivisor& a, const GDivisor& b);
GDivisor dminus(const GDivisor& a);
OmegaDivisor mixed_sum(const GDivisor& a, const OmegaDivisor& b);
OmegaDivisor negation(const GDivisor& a);
GDivisor negation(const OmegaDivisor& a);

/// L(D) = Hom(I_D, O)
Sheaf dual_sheaf(const GDivisor& d);
/// M(D_omega) = Hom(I_{D_omega}, omega)
Sheaf dual_sheaf(const OmegaDivisor& d);

std::optional<RatFun> lin_equiv(const GDivisor& a, const GDivisor& b);
std::optional<RatFun> lin_equiv(const OmegaDivisor& a, const OmegaDivisor& b);

/// Complete linear system |D| presented as (dimension, section basis,
/// member constructor); dim = -1 means empty.
struct LinearSystem {
  long dim = -1;
  std::vector<RatFun> basis;
};
LinearSystem linear_system(const GDivisor& d);
LinearSystem linear_system(const OmegaDivisor& d);

/// Effective member of |D| attached to the section with the given
/// coordinates in the linear_system basis.
GDivisor member(const GDivisor& d, const Vec& coeffs);
OmegaDivisor member(const OmegaDivisor& d, const Vec& coeffs);

/// Canonical divisor K with L(K) = omega; exists iff omega is reflexive.
GDivisor canonical_divisor(const Curve& c);
/// Canonical omega-divisor K_omega with M(K_omega) = omega; always exists.
OmegaDivisor canonical_omega_divisor(const Curve& c);

/// adj D = K + (-D); requires a Gorenstein curve.
GDivisor adjoint(const GDivisor& d);
OmegaDivisor adjoint_omega(const OmegaDivisor& d);

struct RRReport {
  long dim_d = -1;
  long dim_adj = -1;
  long deg = 0;
  long lhs = 0;
  long rhs = 0;
  bool pass = false;
};
RRReport riemann_roch_check(const GDivisor& d);
RRReport riemann_roch_check(const OmegaDivisor& d);

/// Deterministic sampling utilities (uniform ints drawn by modulo so runs
/// are identical across platforms).
struct Sampler {
  explicit Sampler(std::uint64_t seed) : eng(seed) {}
  std::mt19937_64 eng;
  long next(long lo, long hi);  // inclusive bounds
  Rat coord(const Curve& c);    // smooth rational coordinate from the box
};

struct SampleOptions {
  bool include_singular = false;
  bool include_infinity = false;
};

/// Effective divisor that is a sum of `d` distinct points (at most one from
/// each singular cluster, added first so that degrees stay additive).
GDivisor random_effective_divisor(const Curve& c, long d, Sampler& rng,
                                  const SampleOptions& opts, std::string* label = nullptr);
OmegaDivisor random_effective_omega_divisor(const Curve& c, long d, Sampler& rng,
                                            const SampleOptions& opts,
                                            std::string* label = nullptr);
/// Divisor of any degree: effective points minus smooth points.
GDivisor random_divisor_of_degree(const Curve& c, long deg, Sampler& rng,
                                  const SampleOptions& opts, std::string* label = nullptr);

struct GeneralPositionRow {
  std::string divisor;
  long dim = -1;
};
struct GeneralPositionReport {
  long degree = 0;
  long expected = 0;  // d - g
  std::map<long, long> dim_histogram;
  std::vector<GeneralPositionRow> offenders;  // samples with dim != expected
  long trials = 0;
  bool all_expected = false;
};
GeneralPositionReport general_position_dim_check(const Curve& c, long d, long trials,
                                                 std::uint64_t seed, bool omega_form,
                                                 const SampleOptions& opts);

}  // namespace gendiv
