#pragma once

#include <Eigen/Core>

#include <optional>
#include <vector>

#include "gendiv/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<gendiv::Rat> {
  typedef gendiv::Rat Real;
  typedef gendiv::Rat NonInteger;
  typedef gendiv::Rat Nested;
  typedef gendiv::Rat Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 30,
    MulCost = 30
  };
  static inline Real epsilon() { return gendiv::Rat(0); }
  static inline Real dummy_precision() { return gendiv::Rat(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace gendiv {

using Mat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using RowVec = Eigen::Matrix<Rat, 1, Eigen::Dynamic>;

/// Inclusive exponent range [lo, hi] of a Laurent coefficient window.
struct Window {
  long lo = 0;
  long hi = -1;
  long length() const { return hi - lo + 1; }
  bool contains(const Window& o) const { return lo <= o.lo && o.hi <= hi; }
  friend bool operator==(const Window& a, const Window& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
};

Window merge(const Window& a, const Window& b);

/// Reduced row echelon form with the pivot of each row at its *rightmost*
/// nonzero entry (leading term = highest exponent).  Rows are ordered by
/// descending pivot column and zero rows are dropped; the result is the
/// unique canonical basis of the row span.
Mat rref_rows(Mat m);

/// Rows spanning {x : m x = 0}, canonicalized with rref_rows.
Mat kernel(const Mat& m);

/// Residual of v after elimination against the rref rows of basis.
/// Zero iff v lies in the row span.
RowVec reduce_against(const Mat& basis, RowVec v);

/// A linear subspace of a Laurent coefficient window: basis rows are in
/// canonical rref form, column j of the basis holds the coefficient of
/// exponent win.lo + j.
struct Subspace {
  Window win;
  Mat basis;

  long dim() const { return basis.rows(); }
  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.win == b.win && a.basis.rows() == b.basis.rows() &&
           a.basis.cols() == b.basis.cols() && a.basis == b.basis;
  }
};

/// Canonical span of a list of coefficient vectors over a common window.
Subspace span(const Window& win, const std::vector<RowVec>& vectors);
Subspace span_rows(const Window& win, const Mat& rows);

/// Re-index a subspace over a larger window (zero padding).
Subspace embed(const Subspace& s, const Window& win);

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

/// dim a - dim b; requires b to be contained in a.
long quotient_dim(const Subspace& a, const Subspace& b);

bool contains(const Subspace& s, const Window& win, const RowVec& v);
bool contains(const Subspace& outer, const Subspace& inner);

/// Coordinates of v in the basis rows of s, if v lies in s.
std::optional<Vec> solve_membership(const Subspace& s, const Window& win, const RowVec& v);

}  // namespace gendiv
