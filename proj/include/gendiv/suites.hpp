#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gendiv/moduli.hpp"

namespace gendiv {

/// The example curves every report runs over.
struct NamedCurve {
  std::string name;
  Curve curve;
};
std::vector<NamedCurve> bundled_curves();

struct SuiteFinding {
  std::string curve;
  std::string what;
};

struct SuiteReport {
  std::string suite;
  long checks = 0;
  std::vector<SuiteFinding> violations;         // must be empty on a correct build
  std::vector<SuiteFinding> expected_failures;  // phenomena the theory predicts
  bool pass() const { return violations.empty(); }
};

/// Sum monoid laws plus the Cartier-conditional laws.
SuiteReport run_monoid_suite(long trials, std::uint64_t seed);
/// Double minus on Gorenstein curves, double omega-negation everywhere, and
/// the expected bidual failures on non-Gorenstein curves.
SuiteReport run_reflexivity_suite(long trials, std::uint64_t seed);
/// Riemann-Roch: generalized form on the Gorenstein curves, omega form on
/// every bundled curve.
SuiteReport run_riemann_roch_suite(long trials, std::uint64_t seed);
/// deg omega = 2g-2, h0(omega) = g, h1(O) = g, and Serre-duality dimension
/// equalities on random sheaves.
SuiteReport run_duality_suite(long trials, std::uint64_t seed);
/// dim|D| = d-g for d >= 2g-1 on Gorenstein curves and for omega-divisors
/// everywhere; exhibits the generalized-divisor counterexample on the
/// semigroup-(3,4,5) curve as an expected failure.
SuiteReport run_general_position_suite(long trials, std::uint64_t seed);

SuiteReport run_suite(const std::string& name, long trials, std::uint64_t seed);

}  // namespace gendiv
