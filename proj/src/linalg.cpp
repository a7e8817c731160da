#include "gendiv/linalg.hpp"

#include "gendiv/error.hpp"

namespace gendiv {

Window merge(const Window& a, const Window& b) {
  if (a.length() <= 0) return b;
  if (b.length() <= 0) return a;
  return Window{std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

Mat rref_rows(Mat m) {
  const long rows = m.rows(), cols = m.cols();
  long rank = 0;
  for (long col = cols - 1; col >= 0 && rank < rows; --col) {
    long pivot = -1;
    for (long r = rank; r < rows; ++r) {
      if (!m(r, col).is_zero()) { pivot = r; break; }
    }
    if (pivot < 0) continue;
    if (pivot != rank) m.row(pivot).swap(m.row(rank));
    Rat inv = m(rank, col).inverse();
    for (long c = 0; c < cols; ++c) m(rank, c) *= inv;
    for (long r = 0; r < rows; ++r) {
      if (r == rank || m(r, col).is_zero()) continue;
      Rat f = m(r, col);
      for (long c = 0; c < cols; ++c) m(r, c) -= f * m(rank, c);
    }
    ++rank;
  }
  return m.topRows(rank);
}

Mat kernel(const Mat& m) {
  const long cols = m.cols();
  Mat r = rref_rows(m);
  std::vector<long> pivot_of_row(r.rows(), -1);
  std::vector<bool> is_pivot(cols, false);
  for (long i = 0; i < r.rows(); ++i) {
    for (long c = cols - 1; c >= 0; --c) {
      if (!r(i, c).is_zero()) { pivot_of_row[i] = c; is_pivot[c] = true; break; }
    }
  }
  std::vector<long> free_cols;
  for (long c = 0; c < cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Mat out(static_cast<long>(free_cols.size()), cols);
  out.setConstant(Rat(0));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    long f = free_cols[k];
    out(static_cast<long>(k), f) = Rat(1);
    for (long i = 0; i < r.rows(); ++i)
      out(static_cast<long>(k), pivot_of_row[i]) = -r(i, f);
  }
  return rref_rows(std::move(out));
}

RowVec reduce_against(const Mat& basis, RowVec v) {
  const long cols = basis.cols();
  for (long i = 0; i < basis.rows(); ++i) {
    long p = -1;
    for (long c = cols - 1; c >= 0; --c)
      if (!basis(i, c).is_zero()) { p = c; break; }
    if (p < 0) continue;
    Rat coef = v(p);
    if (coef.is_zero()) continue;
    for (long c = 0; c < cols; ++c) v(c) -= coef * basis(i, c);
  }
  return v;
}

Subspace span(const Window& win, const std::vector<RowVec>& vectors) {
  Mat m(static_cast<long>(vectors.size()), win.length());
  m.setConstant(Rat(0));
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].cols() != win.length())
      throw ValidationError("vector length does not match window");
    m.row(static_cast<long>(i)) = vectors[i];
  }
  return Subspace{win, rref_rows(std::move(m))};
}

Subspace span_rows(const Window& win, const Mat& rows) {
  if (rows.rows() > 0 && rows.cols() != win.length())
    throw ValidationError("matrix width does not match window");
  Mat m = rows;
  if (rows.rows() == 0) m.resize(0, win.length());
  return Subspace{win, rref_rows(std::move(m))};
}

Subspace embed(const Subspace& s, const Window& win) {
  if (s.win == win) return s;
  if (!win.contains(s.win))
    throw ValidationError("cannot embed subspace into a smaller window");
  Mat m(s.basis.rows(), win.length());
  m.setConstant(Rat(0));
  m.block(0, s.win.lo - win.lo, s.basis.rows(), s.win.length()) = s.basis;
  return Subspace{win, std::move(m)};  // padding keeps rref form intact
}

Subspace sum(const Subspace& a, const Subspace& b) {
  Window w = merge(a.win, b.win);
  Subspace ea = embed(a, w), eb = embed(b, w);
  Mat m(ea.basis.rows() + eb.basis.rows(), w.length());
  m << ea.basis, eb.basis;
  return Subspace{w, rref_rows(std::move(m))};
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  Window w = merge(a.win, b.win);
  Subspace ea = embed(a, w), eb = embed(b, w);
  const long ra = ea.basis.rows(), rb = eb.basis.rows();
  if (ra == 0 || rb == 0) return Subspace{w, Mat(0, w.length())};
  // x in both spans iff x = c^T A = d^T B; solve A^T c - B^T d = 0.
  Mat stacked(w.length(), ra + rb);
  stacked.leftCols(ra) = ea.basis.transpose();
  stacked.rightCols(rb) = -eb.basis.transpose();
  Mat ker = kernel(stacked);
  Mat rows(ker.rows(), w.length());
  for (long i = 0; i < ker.rows(); ++i)
    rows.row(i) = ker.row(i).leftCols(ra) * ea.basis;
  return Subspace{w, rref_rows(std::move(rows))};
}

long quotient_dim(const Subspace& a, const Subspace& b) {
  if (!contains(a, b))
    throw ValidationError("quotient_dim: second subspace is not contained in the first");
  return a.dim() - b.dim();
}

bool contains(const Subspace& s, const Window& win, const RowVec& v) {
  Window w = merge(s.win, win);
  Subspace es = embed(s, w);
  RowVec ev = RowVec::Constant(w.length(), Rat(0));
  ev.segment(win.lo - w.lo, win.length()) = v;
  RowVec r = reduce_against(es.basis, ev);
  for (long c = 0; c < r.cols(); ++c)
    if (!r(c).is_zero()) return false;
  return true;
}

bool contains(const Subspace& outer, const Subspace& inner) {
  for (long i = 0; i < inner.basis.rows(); ++i)
    if (!contains(outer, inner.win, inner.basis.row(i))) return false;
  return true;
}

std::optional<Vec> solve_membership(const Subspace& s, const Window& win, const RowVec& v) {
  Window w = merge(s.win, win);
  Subspace es = embed(s, w);
  RowVec ev = RowVec::Constant(w.length(), Rat(0));
  ev.segment(win.lo - w.lo, win.length()) = v;
  Vec coords = Vec::Constant(es.basis.rows(), Rat(0));
  const long cols = es.basis.cols();
  for (long i = 0; i < es.basis.rows(); ++i) {
    long p = -1;
    for (long c = cols - 1; c >= 0; --c)
      if (!es.basis(i, c).is_zero()) { p = c; break; }
    Rat coef = ev(p);
    coords(i) = coef;
    if (coef.is_zero()) continue;
    for (long c = 0; c < cols; ++c) ev(c) -= coef * es.basis(i, c);
  }
  for (long c = 0; c < cols; ++c)
    if (!ev(c).is_zero()) return std::nullopt;
  return coords;
}

}  // namespace gendiv
