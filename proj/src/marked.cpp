#include "msset/marked.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace msset {

MarkedSSet::MarkedSSet(SSetPtr ss) : ss_(std::move(ss)), marks_(*ss_) {}

MarkedSSet::MarkedSSet(SSetPtr ss, CellSet marks) : ss_(std::move(ss)), marks_(std::move(marks)) {
  for (CellId c : marks_.items()) {
    detail::require(ss_->has_cell(c), "marking references unknown cell " + c.str());
    detail::require(c.dim >= 1, "marking on the 0-dimensional cell " + c.str());
  }
}

bool MarkedMap::preserves_marking() const {
  for (CellId c : dom.marks().items())
    if (!cod.marked(map.apply(dom.ss()->simplex(c)))) return false;
  return true;
}

void MarkedMap::require_valid() const {
  map.require_commutes();
  for (CellId c : dom.marks().items())
    detail::require(cod.marked(map.apply(dom.ss()->simplex(c))),
                    "map does not preserve the marking of " + c.str());
}

bool MarkedMap::entire() const {
  if (dom.ss().get() != cod.ss().get()) return false;
  for (int d = 0; d <= dom.ss()->top_dim(); ++d)
    for (int i = 0; i < dom.ss()->cell_count(d); ++i) {
      const Simplex& img = map.image(CellId{d, i});
      if (img.degenerate() || img.base != CellId{d, i}) return false;
    }
  return true;
}

std::vector<SSetMap> enumerate_marked_maps(const MarkedSSet& A, const MarkedSSet& X) {
  std::vector<SSetMap> out;
  for (SSetMap& f : enumerate_maps(A.ss(), X.ss())) {
    MarkedMap m{A, X, f};
    if (m.preserves_marking()) out.push_back(std::move(f));
  }
  return out;
}

bool marked_isomorphic(const MarkedSSet& X, const MarkedSSet& Y) {
  if (X.ss()->top_dim() != Y.ss()->top_dim()) return false;
  for (int d = 0; d <= X.ss()->top_dim(); ++d) {
    if (X.ss()->cell_count(d) != Y.ss()->cell_count(d)) return false;
    if (X.marks().count_dim(d) != Y.marks().count_dim(d)) return false;
  }
  return canonical_signature(*X.ss(), &X.marks()) == canonical_signature(*Y.ss(), &Y.marks());
}

namespace gadgets {

namespace {
bool contains_all(const std::vector<int>& tuple, const std::vector<int>& req) {
  return std::includes(tuple.begin(), tuple.end(), req.begin(), req.end());
}

std::vector<int> delta_k_required(int m, int k) {
  std::vector<int> req;
  for (int v = k - 1; v <= k + 1; ++v)
    if (v >= 0 && v <= m) req.push_back(v);
  return req;
}

CellSet delta_k_marks(int m, int k) {
  const Standard& S = standard(m);
  CellSet marks(*S.ss());
  std::vector<int> req = delta_k_required(m, k);
  for (int d = 1; d <= m; ++d)
    for (int i = 0; i < S.ss()->cell_count(d); ++i)
      if (contains_all(S.verts(CellId{d, i}), req)) marks.insert(CellId{d, i});
  return marks;
}

void mark_top_face(CellSet& marks, int m, int omit) {
  if (omit < 0 || omit > m || m - 1 < 1) return;
  const Standard& S = standard(m);
  std::vector<int> t;
  for (int v = 0; v <= m; ++v)
    if (v != omit) t.push_back(v);
  marks.insert(S.cell(t));
}
}  // namespace

MarkedSSet delta(int m) { return MarkedSSet(standard_ss(m)); }

MarkedSSet delta_t(int m) {
  detail::require(m >= 1, "delta_t needs m >= 1");
  MarkedSSet out(standard_ss(m));
  CellSet marks = out.marks();
  marks.insert(CellId{m, 0});
  return out.with_marks(std::move(marks));
}

MarkedSSet boundary(int m) {
  detail::require(m >= 0, "boundary needs m >= 0");
  static std::map<int, SSetPtr> cache;
  auto it = cache.find(m);
  if (it == cache.end()) it = cache.emplace(m, boundary_ss(m)).first;
  return MarkedSSet(it->second);
}

MarkedSSet delta_k(int m, int k) {
  detail::require(m >= 0 && k >= 0 && k <= m, "delta_k needs 0 <= k <= m");
  return MarkedSSet(standard_ss(m), delta_k_marks(m, k));
}

MarkedSSet delta_k_prime(int m, int k) {
  detail::require(m >= 0 && k >= 0 && k <= m, "delta_k_prime needs 0 <= k <= m");
  CellSet marks = delta_k_marks(m, k);
  mark_top_face(marks, m, k - 1);
  mark_top_face(marks, m, k + 1);
  return MarkedSSet(standard_ss(m), std::move(marks));
}

MarkedSSet delta_k_double_prime(int m, int k) {
  detail::require(m >= 0 && k >= 0 && k <= m, "delta_k_double_prime needs 0 <= k <= m");
  CellSet marks = delta_k_marks(m, k);
  mark_top_face(marks, m, k - 1);
  mark_top_face(marks, m, k + 1);
  mark_top_face(marks, m, k);
  return MarkedSSet(standard_ss(m), std::move(marks));
}

namespace {
struct HornData {
  Extracted ex;
  CellSet marks;
};
const HornData& horn_data(int m, int k) {
  static std::map<std::pair<int, int>, HornData> cache;
  auto key = std::make_pair(m, k);
  auto it = cache.find(key);
  if (it == cache.end()) {
    HornData d;
    d.ex = extract(*standard_ss(m), horn_cells(m, k));
    CellSet ambient_marks = delta_k_marks(m, k);
    d.marks = CellSet(*d.ex.ss);
    for (int dim = 1; dim <= d.ex.ss->top_dim(); ++dim)
      for (int i = 0; i < d.ex.ss->cell_count(dim); ++i)
        if (ambient_marks.contains(d.ex.to_ambient(CellId{dim, i})))
          d.marks.insert(CellId{dim, i});
    it = cache.emplace(key, std::move(d)).first;
  }
  return it->second;
}
}  // namespace

MarkedSSet horn(int m, int k) {
  const HornData& d = horn_data(m, k);
  return MarkedSSet(d.ex.ss, d.marks);
}

MarkedSSet delta3_eq() { return delta_three(-1, -1, Variant::Eq); }
MarkedSSet delta3_sharp() { return delta_three(-1, -1, Variant::Sharp); }

MarkedSSet delta_three(int lp, int l, Variant v) {
  detail::require(lp >= -1 && l >= -1, "delta_three needs lp, l >= -1");
  int n = lp + l + 5;
  const Standard& S = standard(n);
  CellSet marks(*S.ss());
  for (int d = 1; d <= n; ++d)
    for (int i = 0; i < S.ss()->cell_count(d); ++i) {
      const auto& t = S.verts(CellId{d, i});
      std::vector<int> mid;
      for (int x : t)
        if (x >= lp + 1 && x <= lp + 4) mid.push_back(x - (lp + 1));
      bool marked = false;
      if (v == Variant::Sharp) {
        marked = mid.size() >= 2;
      } else {
        marked = mid.size() >= 3 || (mid == std::vector<int>{0, 2}) ||
                 (mid == std::vector<int>{1, 3});
      }
      if (marked) marks.insert(CellId{d, i});
    }
  return MarkedSSet(S.ss(), std::move(marks));
}

}  // namespace gadgets

MarkedJoin join_marked(const MarkedSSet& X, const MarkedSSet& Y) {
  auto jn = std::make_shared<const JoinSSet>(X.ss(), Y.ss());
  CellSet marks(*jn->ss());
  for (int d = 1; d <= jn->ss()->top_dim(); ++d)
    for (int i = 0; i < jn->ss()->cell_count(d); ++i) {
      const auto& p = jn->parts(CellId{d, i});
      bool m = (p.left && X.marked(*p.left)) || (p.right && Y.marked(*p.right));
      if (m) marks.insert(CellId{d, i});
    }
  return MarkedJoin{std::move(jn), std::move(marks)};
}

bool is_mediator(const Simplex& x, const Simplex& y) {
  detail::require(x.dim() == y.dim(), "mediator test needs equal dimensions");
  int r = x.dim();
  for (int k = 1; k < r; ++k)
    if (x.epi(k - 1) == x.epi(k) && y.epi(k) == y.epi(k + 1)) return true;
  return false;
}

bool is_crushed_cylinder(const Simplex& x, const Simplex& y, const MarkedSSet& X,
                         const MarkedSSet& Y) {
  detail::require(x.dim() == y.dim(), "crushed cylinder test needs equal dimensions");
  int r = x.dim();
  for (int p = 0; p <= r; ++p) {
    bool x_collapsed = true;
    for (int i = p + 1; i <= r && x_collapsed; ++i)
      if (x.epi(i) != x.epi(p)) x_collapsed = false;
    if (!x_collapsed) continue;
    bool y_collapsed = true;
    for (int i = 0; i < p && y_collapsed; ++i)
      if (y.epi(i) != y.epi(p)) y_collapsed = false;
    if (!y_collapsed) continue;
    auto [a1, a2] = face_partition(p, r - p);
    if (X.marked(X.ss()->act(x, a1)) || Y.marked(Y.ss()->act(y, a2))) return true;
  }
  return false;
}

bool cleaves(int p, int q, const Simplex& x, const Simplex& y, const MarkedSSet& X,
             const MarkedSSet& Y) {
  detail::require(x.dim() == y.dim() && p >= 0 && q >= 0 && p + q == x.dim(),
                  "cleaving test: bad partition");
  auto [a1, a2] = face_partition(p, q);
  return X.marked(X.ss()->act(x, a1)) || Y.marked(Y.ss()->act(y, a2));
}

CellSet pretensor_marks(const ProductSSet& P, const MarkedSSet& X, const MarkedSSet& Y) {
  detail::require(P.left().get() == X.ss().get() && P.right().get() == Y.ss().get(),
                  "pretensor marks: product factors do not match the marked objects");
  CellSet marks(*P.ss());
  for (int d = 1; d <= P.ss()->top_dim(); ++d)
    for (int i = 0; i < P.ss()->cell_count(d); ++i) {
      const auto& c = P.components(CellId{d, i});
      if (is_mediator(c.left, c.right) || is_crushed_cylinder(c.left, c.right, X, Y))
        marks.insert(CellId{d, i});
    }
  return marks;
}

CellSet tensor_marks(const ProductSSet& P, const MarkedSSet& X, const MarkedSSet& Y) {
  detail::require(P.left().get() == X.ss().get() && P.right().get() == Y.ss().get(),
                  "tensor marks: product factors do not match the marked objects");
  CellSet marks(*P.ss());
  for (int d = 1; d <= P.ss()->top_dim(); ++d)
    for (int i = 0; i < P.ss()->cell_count(d); ++i) {
      const auto& c = P.components(CellId{d, i});
      bool all = true;
      for (int p = 0; p <= d && all; ++p)
        if (!cleaves(p, d - p, c.left, c.right, X, Y)) all = false;
      if (all) marks.insert(CellId{d, i});
    }
  return marks;
}

MarkedProduct pretensor(const MarkedSSet& X, const MarkedSSet& Y) {
  auto P = std::make_shared<const ProductSSet>(X.ss(), Y.ss());
  CellSet marks = pretensor_marks(*P, X, Y);
  return MarkedProduct{std::move(P), std::move(marks)};
}

MarkedProduct tensor(const MarkedSSet& X, const MarkedSSet& Y) {
  auto P = std::make_shared<const ProductSSet>(X.ss(), Y.ss());
  CellSet marks = tensor_marks(*P, X, Y);
  return MarkedProduct{std::move(P), std::move(marks)};
}

MarkedSSet opposite_marked(const MarkedSSet& X) {
  return MarkedSSet(opposite(X.ss()), X.marks());
}

bool second_projection_surjective(const ProductSSet& P, CellId c) {
  return P.components(c).right.base.dim == P.right()->top_dim();
}

}  // namespace msset
