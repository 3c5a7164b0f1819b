#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "msset/constructions.hpp"
#include "msset/maps.hpp"

#include <functional>

using namespace msset;

namespace {
long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Independent count of jointly nondegenerate pairs of monotone maps
// [r] -> [p], [r] -> [q]: raw enumeration over value sequences.
long long raw_pair_count(int p, int q, int r) {
  std::vector<std::vector<int>> maps_p, maps_q;
  std::function<void(std::vector<int>&, int, int, std::vector<std::vector<int>>&)> gen =
      [&](std::vector<int>& acc, int pos, int top, std::vector<std::vector<int>>& out) {
        if (pos == r + 1) {
          out.push_back(acc);
          return;
        }
        int from = pos == 0 ? 0 : acc[static_cast<size_t>(pos - 1)];
        for (int v = from; v <= top; ++v) {
          acc.push_back(v);
          gen(acc, pos + 1, top, out);
          acc.pop_back();
        }
      };
  std::vector<int> acc;
  gen(acc, 0, p, maps_p);
  gen(acc, 0, q, maps_q);
  long long count = 0;
  for (const auto& x : maps_p)
    for (const auto& y : maps_q) {
      bool joint = true;
      for (int i = 1; i <= r && joint; ++i)
        if (x[static_cast<size_t>(i)] == x[static_cast<size_t>(i - 1)] &&
            y[static_cast<size_t>(i)] == y[static_cast<size_t>(i - 1)])
          joint = false;
      if (joint) ++count;
    }
  return count;
}
}  // namespace

TEST_CASE("standard simplices") {
  const Standard& s2 = standard(2);
  CHECK(s2.ss()->cell_count(0) == 3);
  CHECK(s2.ss()->cell_count(1) == 3);
  CHECK(s2.ss()->cell_count(2) == 1);
  s2.ss()->validate();

  CHECK(standard_ss(-1)->empty());
  CHECK(standard_ss(-1)->top_dim() == -1);

  // map <-> simplex round trip
  MonotoneMap f({0, 0, 2}, 2);
  Simplex s = s2.from_map(f);
  CHECK(s.dim() == 2);
  CHECK(s.degenerate());
  CHECK(s2.to_map(s) == f);
}

TEST_CASE("boundaries and horns") {
  CHECK(boundary_ss(2)->cell_count(0) == 3);
  CHECK(boundary_ss(2)->cell_count(1) == 3);
  CHECK(boundary_ss(2)->cell_count(2) == 0);
  CHECK(boundary_ss(0)->empty());

  auto h = horn_ss(2, 1);
  CHECK(h->cell_count(0) == 3);
  CHECK(h->cell_count(1) == 2);
  CHECK(h->cell_count(2) == 0);
  // the two edges are [0,1] and [1,2]
  CHECK(h->label(CellId{1, 0}) == "[0,1]");
  CHECK(h->label(CellId{1, 1}) == "[1,2]");

  CHECK_THROWS_AS(horn_cells(2, 5), Error);
  CHECK_THROWS_AS(horn_cells(0, 0), Error);
}

TEST_CASE("products count lattice paths") {
  ProductSSet p11(standard_ss(1), standard_ss(1));
  CHECK(p11.ss()->cell_count(2) == 2);
  p11.ss()->validate();

  ProductSSet p32(standard_ss(3), standard_ss(2));
  CHECK(p32.ss()->cell_count(5) == 10);  // C(5,2) shuffles
  p32.ss()->validate();

  for (int p = 0; p <= 4; ++p)
    for (int q = 0; q <= p; ++q) {
      ProductSSet prod(standard_ss(p), standard_ss(q));
      CHECK(prod.ss()->cell_count(p + q) == binom(p + q, p));
      for (int r = 0; r <= p + q; ++r)
        CHECK(prod.ss()->cell_count(r) == raw_pair_count(p, q, r));
    }
}

TEST_CASE("product with a point is the identity") {
  for (int m = 0; m <= 3; ++m) {
    ProductSSet p(standard_ss(0), standard_ss(m));
    CHECK(isomorphic(*p.ss(), *standard_ss(m)));
  }
  ProductSSet e(standard_ss(-1), standard_ss(2));
  CHECK(e.ss()->empty());
}

TEST_CASE("product faces stay consistent under the pair normal form") {
  ProductSSet p(standard_ss(2), standard_ss(1));
  // take the cell ((0,1,2),(0,0,1)) and check d_1 has a degenerate left part
  const Standard& s2 = standard(2);
  const Standard& s1 = standard(1);
  Simplex x = s2.from_map(MonotoneMap({0, 1, 2}, 2));
  Simplex y = s1.from_map(MonotoneMap({0, 0, 1}, 1));
  CellId c = p.cell(x, y);
  const Simplex& f = p.ss()->face(c, 1);
  CHECK(f.dim() == 1);
  auto comps = p.components(f.base);
  CHECK(s2.to_map(comps.left) == MonotoneMap({0, 2}, 2));
  CHECK(s1.to_map(comps.right) == MonotoneMap({0, 1}, 1));
}

TEST_CASE("joins of standard simplices are standard") {
  JoinSSet j(standard_ss(1), standard_ss(3));
  CHECK(isomorphic(*j.ss(), *standard_ss(5)));
  j.ss()->validate();

  JoinSSet jl(standard_ss(-1), standard_ss(2));
  CHECK(isomorphic(*jl.ss(), *standard_ss(2)));
  JoinSSet jr(standard_ss(2), standard_ss(-1));
  CHECK(isomorphic(*jr.ss(), *standard_ss(2)));
  JoinSSet pts(standard_ss(0), standard_ss(0));
  CHECK(isomorphic(*pts.ss(), *standard_ss(1)));
}

TEST_CASE("join of general objects validates") {
  auto h = horn_ss(2, 0);
  JoinSSet j(h, standard_ss(1));
  j.ss()->validate();
  CHECK(j.ss()->top_dim() == 3);
}

TEST_CASE("opposites") {
  auto h20 = horn_ss(2, 0);
  auto h22 = horn_ss(2, 2);
  CHECK(isomorphic(*opposite(h20), *h22));
  CHECK(!isomorphic(*opposite(h20), *horn_ss(2, 1)));

  for (int m = 0; m <= 3; ++m) CHECK(isomorphic(*opposite(standard_ss(m)), *standard_ss(m)));

  // involution, cell for cell
  ProductSSet p(standard_ss(2), standard_ss(1));
  auto op = opposite(p.ss());
  op->validate();
  auto opop = opposite(op);
  CHECK(canonical_signature(*opop) == canonical_signature(*p.ss()));
  // stronger: identical face tables
  for (int d = 1; d <= p.ss()->top_dim(); ++d)
    for (int i = 0; i < p.ss()->cell_count(d); ++i)
      for (int j = 0; j <= d; ++j)
        CHECK(p.ss()->face(CellId{d, i}, j) == opop->face(CellId{d, i}, j));
}

TEST_CASE("opposite of a join swaps the factors") {
  auto j = JoinSSet(standard_ss(1), horn_ss(2, 1));
  auto jswap = JoinSSet(opposite(horn_ss(2, 1)), opposite(standard_ss(1)));
  CHECK(isomorphic(*opposite(j.ss()), *jswap.ss()));
}

TEST_CASE("unions of subcomplexes inside a product") {
  ProductSSet p(standard_ss(1), standard_ss(1));
  // the two triangles generate the whole square
  std::vector<CellId> t0 = {CellId{2, 0}};
  std::vector<CellId> t1 = {CellId{2, 1}};
  CellSet a = face_closure(*p.ss(), t0);
  CellSet b = face_closure(*p.ss(), t1);
  CellSet u = set_union(a, b);
  CHECK(u.count() == p.ss()->total_cells());
  CellSet i = set_intersection(a, b);
  // the diagonal edge plus its endpoints
  CHECK(i.count_dim(1) == 1);
  CHECK(i.count_dim(0) == 2);
}
