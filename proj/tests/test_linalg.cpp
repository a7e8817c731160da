#include <doctest.h>

#include <random>

#include "gendiv/linalg.hpp"

using namespace gendiv;

namespace {

RowVec rv(std::initializer_list<long> xs) {
  RowVec v(static_cast<long>(xs.size()));
  long i = 0;
  for (long x : xs) v(i++) = Rat(x);
  return v;
}

Subspace random_subspace(std::mt19937_64& rng, const Window& w, long nvec) {
  std::vector<RowVec> vs;
  for (long i = 0; i < nvec; ++i) {
    RowVec v(w.length());
    for (long c = 0; c < w.length(); ++c)
      v(c) = Rat(static_cast<long>(rng() % 7) - 3);
    vs.push_back(v);
  }
  return span(w, vs);
}

}  // namespace

TEST_CASE("rref canonical form") {
  Window w{0, 1};
  // {(1,0),(1,1)} spans the full plane.
  Subspace s = span(w, {rv({1, 0}), rv({1, 1})});
  CHECK(s.dim() == 2);
  // scaling normalization: {(2,4)} -> {(1/2,1)} with pivot at highest exponent
  Subspace s2 = span(w, {rv({2, 4})});
  CHECK(s2.dim() == 1);
  CHECK(s2.basis(0, 1) == Rat(1));
  CHECK(s2.basis(0, 0) == Rat(1, 2));
}

TEST_CASE("rank of t^3, t^4, t^3+t^4 over window [3,4]") {
  Window w{3, 4};
  Subspace s = span(w, {rv({1, 0}), rv({0, 1}), rv({1, 1})});
  CHECK(s.dim() == 2);
}

TEST_CASE("rref is idempotent and scaling invariant") {
  Window w{-2, 3};
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    Subspace s = random_subspace(rng, w, 4);
    CHECK(span_rows(w, s.basis) == s);
    Mat scaled = s.basis;
    for (long i = 0; i < scaled.rows(); ++i)
      for (long j = 0; j < scaled.cols(); ++j) scaled(i, j) *= Rat(-5, 3);
    CHECK(span_rows(w, scaled) == s);
  }
}

TEST_CASE("sum, intersect, quotient_dim") {
  Window w{0, 2};
  // span{1, t} meet span{t, t^2} = span{t}
  Subspace a = span(w, {rv({1, 0, 0}), rv({0, 1, 0})});
  Subspace b = span(w, {rv({0, 1, 0}), rv({0, 0, 1})});
  Subspace m = intersect(a, b);
  CHECK(m.dim() == 1);
  CHECK(contains(m, w, rv({0, 1, 0})));
  CHECK(quotient_dim(a, m) == 1);
  // quotient_dim(span{1,t,t^2}, span{1}) = 2
  Subspace full = span(w, {rv({1, 0, 0}), rv({0, 1, 0}), rv({0, 0, 1})});
  Subspace one = span(w, {rv({1, 0, 0})});
  CHECK(quotient_dim(full, one) == 2);
  CHECK_THROWS_AS(quotient_dim(one, b), ValidationError);
}

TEST_CASE("intersect(span{1+t, t^2}, span{1, t+t^2}) has dim 1") {
  // Solving c0(1+t) + c1 t^2 = d0 + d1(t + t^2) by hand forces c0 = d0,
  // c0 = d1, c1 = d1, so the intersection is spanned by 1 + t + t^2.
  Window w{0, 2};
  Subspace a = span(w, {rv({1, 1, 0}), rv({0, 0, 1})});
  Subspace b = span(w, {rv({1, 0, 0}), rv({0, 1, 1})});
  Subspace m = intersect(a, b);
  CHECK(m.dim() == 1);
  CHECK(contains(m, w, rv({1, 1, 1})));
}

TEST_CASE("membership and coordinates") {
  Window w{0, 1};
  Subspace s = span(w, {rv({1, 0}), rv({0, 1})});
  auto c = solve_membership(s, w, rv({0, 0}));
  REQUIRE(c.has_value());
  CHECK((*c)(0) == Rat(0));
  CHECK((*c)(1) == Rat(0));
  // t in span{1,t}: coordinates (0,1) in the (1, t) basis order.  Canonical
  // rows are ordered by descending pivot, so basis row 0 is t.
  auto c2 = solve_membership(s, w, rv({0, 1}));
  REQUIRE(c2.has_value());
  Vec coords = *c2;
  RowVec rebuilt = RowVec::Constant(2, Rat(0));
  for (long i = 0; i < s.basis.rows(); ++i)
    for (long j = 0; j < 2; ++j) rebuilt(j) += coords(i) * s.basis(i, j);
  CHECK(rebuilt == rv({0, 1}));
}

TEST_CASE("t + t^3 lies in span{t + t^3, t^4}") {
  Window w{1, 4};
  Subspace s = span(w, {rv({1, 0, 1, 0}), rv({0, 0, 0, 1})});
  CHECK(contains(s, w, rv({1, 0, 1, 0})));
  CHECK(!contains(s, w, rv({1, 0, 0, 0})));
}

TEST_CASE("modular law for dimensions on random subspaces") {
  std::mt19937_64 rng(99);
  Window w{-1, 4};
  for (int trial = 0; trial < 40; ++trial) {
    Subspace a = random_subspace(rng, w, 3);
    Subspace b = random_subspace(rng, w, 3);
    CHECK(sum(a, b).dim() + intersect(a, b).dim() == a.dim() + b.dim());
  }
}

TEST_CASE("window merging pads with zeros") {
  Subspace a = span(Window{0, 1}, std::vector<RowVec>{rv({1, 2})});
  Subspace e = embed(a, Window{-2, 3});
  CHECK(e.dim() == 1);
  CHECK(e.basis(0, 2) == Rat(1, 2));  // canonical form scales the pivot to 1
  CHECK(e.basis(0, 3) == Rat(1));
  CHECK(contains(e, Window{0, 1}, rv({1, 2})));
}
