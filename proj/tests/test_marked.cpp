#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "msset/marked.hpp"

#include <functional>

using namespace msset;

namespace {
Simplex sx(int m, std::vector<int> values) {
  return standard(m).from_map(MonotoneMap(std::move(values), m));
}
}  // namespace

TEST_CASE("gadget markings from the notation table") {
  // delta_t marks exactly the top cell
  auto dt = gadgets::delta_t(3);
  CHECK(dt.marks().count() == 1);
  CHECK(dt.marked(CellId{3, 0}));
  CHECK(gadgets::delta(3).marks().count() == 0);

  // delta_k(2,1) marks only the top 2-simplex
  auto dk = gadgets::delta_k(2, 1);
  CHECK(dk.marks().count() == 1);
  CHECK(dk.marked(CellId{2, 0}));

  // delta3_eq: 4 triangles, the top, and edges [02],[13]
  auto eq = gadgets::delta3_eq();
  CHECK(eq.marks().count() == 7);
  CHECK(eq.marks().count_dim(1) == 2);
  CHECK(eq.marked(standard(3).cell({0, 2})));
  CHECK(eq.marked(standard(3).cell({1, 3})));
  CHECK(!eq.marked(standard(3).cell({0, 1})));
  CHECK(eq.marks().count_dim(2) == 4);
  CHECK(eq.marks().count_dim(3) == 1);

  // delta3_sharp marks everything positive-dimensional
  auto sharp = gadgets::delta3_sharp();
  CHECK(sharp.marks().count() == 6 + 4 + 1);

  // primes add the neighbouring faces of the top cell
  auto p = gadgets::delta_k_prime(2, 1);
  CHECK(p.marks().count() == 3);  // top, d0, d2
  CHECK(p.marked(standard(2).cell({1, 2})));
  CHECK(p.marked(standard(2).cell({0, 1})));
  auto pp = gadgets::delta_k_double_prime(2, 1);
  CHECK(pp.marks().count() == 4);
  CHECK(pp.marked(standard(2).cell({0, 2})));

  // horn marking restricts the delta_k marking
  auto h = gadgets::horn(3, 1);
  CHECK(h.ss()->cell_count(2) == 3);
  int marked2 = h.marks().count_dim(2);
  CHECK(marked2 == 1);  // only [0,1,2] contains {0,1,2}
}

TEST_CASE("delta_k containment rule across the edge cases") {
  // enumeration oracle: a cell is marked iff its tuple contains {k-1,k,k+1} /\ [m]
  for (int m = 1; m <= 3; ++m)
    for (int k = 0; k <= m; ++k) {
      auto g = gadgets::delta_k(m, k);
      const Standard& S = standard(m);
      for (int d = 1; d <= m; ++d)
        for (int i = 0; i < S.ss()->cell_count(d); ++i) {
          const auto& t = S.verts(CellId{d, i});
          bool want = true;
          for (int v = k - 1; v <= k + 1; ++v)
            if (v >= 0 && v <= m &&
                !std::binary_search(t.begin(), t.end(), v))
              want = false;
          CHECK(g.marked(CellId{d, i}) == want);
        }
    }
}

TEST_CASE("join marking rule") {
  // delta_three via joins equals the direct construction
  auto jj = join_marked(gadgets::delta(0), gadgets::delta3_eq());
  auto direct = gadgets::delta_three(0, -1, gadgets::Variant::Eq);
  CHECK(marked_isomorphic(jj.as_marked(), direct));

  auto jj2 = join_marked(join_marked(gadgets::delta(1), gadgets::delta3_sharp()).as_marked(),
                         gadgets::delta(0));
  auto direct2 = gadgets::delta_three(1, 0, gadgets::Variant::Sharp);
  CHECK(marked_isomorphic(jj2.as_marked(), direct2));

  // join with the empty object changes nothing
  auto je = join_marked(gadgets::delta(-1), gadgets::delta3_eq());
  CHECK(marked_isomorphic(je.as_marked(), gadgets::delta3_eq()));

  // point * delta_t(1): the two simplices containing the marked edge are marked
  auto jt = join_marked(gadgets::delta(0), gadgets::delta_t(1));
  CHECK(jt.marks.count() == 2);
}

TEST_CASE("mediator and crushed cylinder on the motivating simplices") {
  auto X = gadgets::delta_t(2);
  auto Y = gadgets::delta(1);

  CHECK(is_mediator(sx(2, {1, 1, 2}), sx(1, {0, 1, 1})));
  CHECK(!is_mediator(sx(2, {0, 1, 2}), sx(1, {0, 1, 1})));
  CHECK(!is_mediator(sx(2, {0, 1}), sx(1, {0, 1})));  // r = 1 has no interior position

  CHECK(is_crushed_cylinder(sx(2, {0, 1, 2, 2}), sx(1, {0, 0, 0, 1}), X, Y));
  CHECK(!is_crushed_cylinder(sx(2, {0, 1, 2}), sx(1, {0, 0, 1}), X, Y));
  // degenerate lid counts as marked
  CHECK(is_crushed_cylinder(sx(2, {0, 1, 1, 1}), sx(1, {0, 0, 0, 1}), gadgets::delta(2), Y));
}

TEST_CASE("cleaving partitions on the motivating simplices") {
  auto X = gadgets::delta_t(2);
  auto Y = gadgets::delta(1);
  Simplex x = sx(2, {0, 1, 2});

  Simplex y_diag = sx(1, {0, 1, 1});
  CHECK(cleaves(0, 2, x, y_diag, X, Y));
  CHECK(cleaves(1, 1, x, y_diag, X, Y));
  CHECK(cleaves(2, 0, x, y_diag, X, Y));

  Simplex y_late = sx(1, {0, 0, 1});
  CHECK(cleaves(0, 2, x, y_late, X, Y));
  CHECK(!cleaves(1, 1, x, y_late, X, Y));
  CHECK(cleaves(2, 0, x, y_late, X, Y));
}

TEST_CASE("the four worked-example simplices under pretensor and tensor") {
  auto X = gadgets::delta_t(2);
  auto Y = gadgets::delta(1);
  auto P = std::make_shared<const ProductSSet>(X.ss(), Y.ss());
  CellSet pre = pretensor_marks(*P, X, Y);
  CellSet ten = tensor_marks(*P, X, Y);

  CellId mediator = P->cell(sx(2, {1, 1, 2}), sx(1, {0, 1, 1}));
  CellId crushed = P->cell(sx(2, {0, 1, 2, 2}), sx(1, {0, 0, 0, 1}));
  CellId cleaved = P->cell(sx(2, {0, 1, 2}), sx(1, {0, 1, 1}));
  CellId unmarked = P->cell(sx(2, {0, 1, 2}), sx(1, {0, 0, 1}));

  CHECK(pre.contains(mediator));
  CHECK(ten.contains(mediator));
  CHECK(pre.contains(crushed));
  CHECK(ten.contains(crushed));
  CHECK(!pre.contains(cleaved));
  CHECK(ten.contains(cleaved));
  CHECK(!pre.contains(unmarked));
  CHECK(!ten.contains(unmarked));

  CHECK(pre.subset_of(ten));
}

TEST_CASE("pretensor marking matches a literal brute-force evaluation") {
  // literal rule: (x, y) is marked if some (r-1)-pair (x', y') exhibits a
  // mediator, or some partition with an explicitly enumerated lid works
  auto X = gadgets::delta_t(1);
  auto Y = gadgets::delta(1);
  auto P = std::make_shared<const ProductSSet>(X.ss(), Y.ss());
  CellSet pre = pretensor_marks(*P, X, Y);

  int count = 0;
  for (int d = 1; d <= P->ss()->top_dim(); ++d)
    for (int i = 0; i < P->ss()->cell_count(d); ++i) {
      auto c = P->components(CellId{d, i});
      MonotoneMap xm = standard(1).to_map(c.left);
      MonotoneMap ym = standard(1).to_map(c.right);
      bool marked = false;
      // mediator: search for witnesses x', y' over all (d-1)-simplices
      for (int k = 1; k < d && !marked; ++k) {
        auto sk1 = MonotoneMap::codegeneracy(d - 1, k - 1);
        auto sk = MonotoneMap::codegeneracy(d - 1, k);
        for (const auto& xp : standard_ss(1)->simplices(d - 1))
          for (const auto& yp : standard_ss(1)->simplices(d - 1)) {
            if (compose(standard(1).to_map(xp), sk1) == xm &&
                compose(standard(1).to_map(yp), sk) == ym)
              marked = true;
          }
      }
      // crushed cylinder: enumerate lids
      for (int p = 0; p <= d && !marked; ++p) {
        auto [pi1, pi2] = degeneracy_partition(p, d - p);
        for (const auto& xp : standard_ss(1)->simplices(p))
          for (const auto& yp : standard_ss(1)->simplices(d - p)) {
            if (compose(standard(1).to_map(xp), pi1) == xm &&
                compose(standard(1).to_map(yp), pi2) == ym &&
                (X.marked(xp) || Y.marked(yp)))
              marked = true;
          }
      }
      if (marked) {
        ++count;
        CHECK(pre.contains(CellId{d, i}));
      } else {
        CHECK(!pre.contains(CellId{d, i}));
      }
    }
  CHECK(count == pre.count());
}

TEST_CASE("tensor and pretensor unit laws") {
  std::vector<MarkedSSet> objects = {gadgets::delta_t(2), gadgets::delta3_eq(),
                                     gadgets::delta_k(2, 1), gadgets::horn(2, 0)};
  for (const auto& X : objects) {
    auto tp = tensor(gadgets::delta(0), X);
    CHECK(marked_isomorphic(tp.as_marked(), X));
    auto tp2 = tensor(X, gadgets::delta(0));
    CHECK(marked_isomorphic(tp2.as_marked(), X));
    auto pp = pretensor(gadgets::delta(0), X);
    CHECK(marked_isomorphic(pp.as_marked(), X));
    auto pp2 = pretensor(X, gadgets::delta(0));
    CHECK(marked_isomorphic(pp2.as_marked(), X));
  }
  // empty factors give the empty object
  auto te = tensor(gadgets::delta(-1), gadgets::delta3_eq());
  CHECK(te.prod->ss()->empty());
}

TEST_CASE("marked opposites of the gadget table") {
  CHECK(marked_isomorphic(opposite_marked(gadgets::horn(2, 0)), gadgets::horn(2, 2)));
  CHECK(marked_isomorphic(opposite_marked(gadgets::delta_k_prime(2, 1)),
                          gadgets::delta_k_prime(2, 1)));
  CHECK(marked_isomorphic(opposite_marked(gadgets::delta_k_prime(3, 1)),
                          gadgets::delta_k_prime(3, 2)));
  for (int p = 1; p <= 3; ++p)
    CHECK(marked_isomorphic(opposite_marked(gadgets::delta_t(p)), gadgets::delta_t(p)));
  // eq and sharp are self-dual
  CHECK(marked_isomorphic(opposite_marked(gadgets::delta3_eq()), gadgets::delta3_eq()));
}

TEST_CASE("marked maps validate marking preservation") {
  auto dk = gadgets::delta_k(2, 1);
  auto plain = gadgets::delta(2);
  SSetMap id = SSetMap::identity(standard_ss(2));
  MarkedMap ok{plain, dk, id};
  CHECK(ok.preserves_marking());
  CHECK(ok.entire());
  MarkedMap bad{dk, plain, id};
  CHECK(!bad.preserves_marking());
  CHECK_THROWS_AS(bad.require_valid(), Error);
}
