#include "msset/constructions.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace msset {

namespace {
std::string tuple_label(const std::vector<int>& verts) {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < verts.size(); ++i) {
    if (i) os << ',';
    os << verts[i];
  }
  os << ']';
  return os.str();
}

void combinations(int m, int r, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> t(static_cast<size_t>(r + 1));
  std::function<void(int, int)> rec = [&](int pos, int from) {
    if (pos == r + 1) {
      f(t);
      return;
    }
    for (int v = from; v <= m - (r - pos); ++v) {
      t[static_cast<size_t>(pos)] = v;
      rec(pos + 1, v + 1);
    }
  };
  if (r >= 0 && r <= m) rec(0, 0);
}
}  // namespace

Standard::Standard(int m) : m_(m) {
  detail::require(m >= -1, "standard simplex dimension below -1");
  SSetBuilder b;
  verts_.resize(static_cast<size_t>(std::max(m + 1, 0)));
  for (int r = 0; r <= m; ++r)
    combinations(m, r, [&](const std::vector<int>& t) {
      CellId c = b.add_cell(r, tuple_label(t));
      verts_[static_cast<size_t>(r)].push_back(t);
      index_.emplace(t, c);
    });
  for (int r = 1; r <= m; ++r)
    for (int i = 0; i < static_cast<int>(verts_[static_cast<size_t>(r)].size()); ++i) {
      const auto& t = verts_[static_cast<size_t>(r)][static_cast<size_t>(i)];
      for (int j = 0; j <= r; ++j) {
        std::vector<int> ft = t;
        ft.erase(ft.begin() + j);
        b.set_face(CellId{r, i}, j, Simplex{index_.at(ft), MonotoneMap::identity(r - 1)});
      }
    }
  ss_ = b.build();
}

CellId Standard::cell(const std::vector<int>& verts) const {
  auto it = index_.find(verts);
  detail::require(it != index_.end(), "standard simplex: no such vertex tuple");
  return it->second;
}

const std::vector<int>& Standard::verts(CellId c) const {
  detail::require(ss_->has_cell(c), "standard simplex: unknown cell");
  return verts_[static_cast<size_t>(c.dim)][static_cast<size_t>(c.idx)];
}

Simplex Standard::from_map(const MonotoneMap& f) const {
  detail::require(f.codomain_dim() == m_, "from_map: wrong codomain");
  detail::require(f.domain_dim() >= 0, "from_map: empty simplex is not a cell");
  EzFactors ez = ez_factorize(f);
  return Simplex{cell(ez.mono.values()), ez.epi};
}

MonotoneMap Standard::to_map(const Simplex& s) const {
  const auto& t = verts(s.base);
  return compose(MonotoneMap(t, m_), s.epi);
}

const Standard& standard(int m) {
  static std::map<int, Standard> cache;
  auto it = cache.find(m);
  if (it == cache.end()) it = cache.emplace(m, Standard(m)).first;
  return it->second;
}

SSetPtr standard_ss(int m) { return standard(m).ss(); }

CellSet boundary_cells(int m) {
  const Standard& S = standard(m);
  CellSet out(*S.ss());
  for (int r = 0; r < m; ++r)
    for (int i = 0; i < S.ss()->cell_count(r); ++i) out.insert(CellId{r, i});
  return out;
}

CellSet horn_cells(int m, int k) {
  detail::require(m >= 1 && k >= 0 && k <= m,
                  "horn parameters need m >= 1 and 0 <= k <= m (got m=" + std::to_string(m) +
                      ", k=" + std::to_string(k) + ")");
  const Standard& S = standard(m);
  CellSet out(*S.ss());
  for (int r = 0; r < m; ++r)
    for (int i = 0; i < S.ss()->cell_count(r); ++i) {
      const auto& t = S.verts(CellId{r, i});
      // keep cells missing at least one vertex other than k
      bool ok = false;
      size_t pos = 0;
      for (int v = 0; v <= m && !ok; ++v) {
        if (pos < t.size() && t[pos] == v) {
          ++pos;
        } else if (v != k) {
          ok = true;
        }
      }
      if (ok) out.insert(CellId{r, i});
    }
  return out;
}

SSetPtr boundary_ss(int m) {
  if (m < 0) return standard_ss(-1);
  return extract(*standard_ss(m), boundary_cells(m)).ss;
}

SSetPtr horn_ss(int m, int k) { return extract(*standard_ss(m), horn_cells(m, k)).ss; }

namespace {
std::vector<int> common_repeats(const MonotoneMap& a, const MonotoneMap& b) {
  std::vector<int> out;
  for (int i = 1; i <= a.domain_dim(); ++i)
    if (a(i) == a(i - 1) && b(i) == b(i - 1)) out.push_back(i);
  return out;
}
}  // namespace

size_t ProductSSet::PairHash::operator()(const std::pair<Simplex, Simplex>& p) const {
  size_t h = 0xcbf29ce484222325ull;
  auto mix = [&h](size_t v) { h = (h ^ v) * 0x100000001b3ull; };
  mix(static_cast<size_t>(p.first.base.dim));
  mix(static_cast<size_t>(p.first.base.idx));
  for (int v : p.first.epi.values()) mix(static_cast<size_t>(v));
  mix(static_cast<size_t>(p.second.base.dim));
  mix(static_cast<size_t>(p.second.base.idx));
  for (int v : p.second.epi.values()) mix(static_cast<size_t>(v));
  return h;
}

ProductSSet::ProductSSet(SSetPtr left, SSetPtr right)
    : left_(std::move(left)), right_(std::move(right)) {
  SSetBuilder b;
  int top = left_->empty() || right_->empty() ? -1 : left_->top_dim() + right_->top_dim();
  // labels are for human-sized objects; skip them on big products
  bool with_labels =
      static_cast<long long>(left_->total_cells()) * right_->total_cells() <= 4096;
  comp_.resize(static_cast<size_t>(top + 1));
  for (int r = 0; r <= top; ++r) {
    auto ls = left_->simplices(r);
    auto rs = right_->simplices(r);
    for (const auto& x : ls)
      for (const auto& y : rs) {
        if (!common_repeats(x.epi, y.epi).empty()) continue;
        CellId c = b.add_cell(
            r, with_labels ? "(" + left_->describe(x) + "," + right_->describe(y) + ")" : "");
        comp_[static_cast<size_t>(r)].push_back(Components{x, y});
        index_.emplace(std::make_pair(x, y), c);
      }
  }
  for (int r = 1; r <= top; ++r)
    for (int i = 0; i < static_cast<int>(comp_[static_cast<size_t>(r)].size()); ++i) {
      const Components& p = comp_[static_cast<size_t>(r)][static_cast<size_t>(i)];
      for (int j = 0; j <= r; ++j) {
        MonotoneMap d = MonotoneMap::coface(r, j);
        b.set_face(CellId{r, i}, j, pair_simplex(left_->act(p.left, d), right_->act(p.right, d)));
      }
    }
  ss_ = b.build();
}

const ProductSSet::Components& ProductSSet::components(CellId c) const {
  detail::require(ss_->has_cell(c), "product: unknown cell");
  return comp_[static_cast<size_t>(c.dim)][static_cast<size_t>(c.idx)];
}

CellId ProductSSet::cell(const Simplex& l, const Simplex& r) const {
  auto it = index_.find(std::make_pair(l, r));
  detail::require(it != index_.end(), "product: pair is not a nondegenerate cell");
  return it->second;
}

Simplex ProductSSet::pair_simplex(const Simplex& l, const Simplex& r) const {
  detail::require(l.dim() == r.dim(), "product: component dimensions differ");
  std::vector<int> rep = common_repeats(l.epi, r.epi);
  if (rep.empty()) return Simplex{cell(l, r), MonotoneMap::identity(l.dim())};
  int n = l.dim();
  // joint epi collapsing the common repeat positions, and its minimal section
  std::vector<int> ev, section;
  int removed = 0;
  size_t pos = 0;
  for (int i = 0; i <= n; ++i) {
    if (pos < rep.size() && rep[pos] == i) {
      ++removed;
      ++pos;
    } else {
      section.push_back(i);
    }
    ev.push_back(i - removed);
  }
  MonotoneMap eps(std::move(ev), n - static_cast<int>(rep.size()));
  MonotoneMap kappa(std::move(section), n);
  Simplex lb = left_->act(l, kappa);
  Simplex rb = right_->act(r, kappa);
  return Simplex{cell(lb, rb), eps};
}

JoinSSet::JoinSSet(SSetPtr left, SSetPtr right) : left_(std::move(left)), right_(std::move(right)) {
  SSetBuilder b;
  int top = left_->top_dim() + right_->top_dim() + 1;
  parts_.resize(static_cast<size_t>(std::max(top + 1, 0)));
  auto add = [&](std::optional<CellId> l, std::optional<CellId> r) {
    int dim = (l ? l->dim : -1) + (r ? r->dim : -1) + 1;
    std::string lab = (l ? left_->label(*l) : std::string("*")) + "|" +
                      (r ? right_->label(*r) : std::string("*"));
    CellId c = b.add_cell(dim, lab);
    parts_[static_cast<size_t>(dim)].push_back(Parts{l, r});
    index_.emplace(std::make_pair(l.value_or(CellId{}), r.value_or(CellId{})), c);
  };
  // dimension-major order: enumerate by total dimension
  for (int dim = 0; dim <= top; ++dim) {
    for (int dl = -1; dl <= dim; ++dl) {
      int dr = dim - dl - 1;
      if (dl > left_->top_dim() || dr > right_->top_dim()) continue;
      if (dl == -1) {
        for (int j = 0; j < right_->cell_count(dr); ++j) add(std::nullopt, CellId{dr, j});
      } else if (dr == -1) {
        for (int i = 0; i < left_->cell_count(dl); ++i) add(CellId{dl, i}, std::nullopt);
      } else {
        for (int i = 0; i < left_->cell_count(dl); ++i)
          for (int j = 0; j < right_->cell_count(dr); ++j) add(CellId{dl, i}, CellId{dr, j});
      }
    }
  }
  // faces
  for (int dim = 1; dim <= top; ++dim)
    for (int i = 0; i < static_cast<int>(parts_[static_cast<size_t>(dim)].size()); ++i) {
      const Parts& p = parts_[static_cast<size_t>(dim)][static_cast<size_t>(i)];
      int dl = p.left ? p.left->dim : -1;
      for (int j = 0; j <= dim; ++j) {
        Simplex f{CellId{}, MonotoneMap::empty_to(-1)};
        if (j <= dl) {
          // face in the left part
          if (dl == 0) {
            // dropping the only left vertex
            f = Simplex{cell(std::nullopt, p.right), MonotoneMap::identity(dim - 1)};
          } else {
            const Simplex& lf = left_->face(*p.left, j);
            CellId base = cell(lf.base, p.right);
            MonotoneMap epi = p.right ? join_map(lf.epi, MonotoneMap::identity(p.right->dim))
                                      : lf.epi;
            f = Simplex{base, std::move(epi)};
          }
        } else {
          int jr = j - dl - 1;
          int dr = p.right ? p.right->dim : -1;
          detail::require(dr >= 0, "join face index out of range");
          if (dr == 0) {
            CellId base = cell(p.left, std::nullopt);
            f = Simplex{base, MonotoneMap::identity(dim - 1)};
          } else {
            const Simplex& rf = right_->face(*p.right, jr);
            CellId base = cell(p.left, rf.base);
            MonotoneMap epi = p.left ? join_map(MonotoneMap::identity(p.left->dim), rf.epi)
                                     : rf.epi;
            f = Simplex{base, std::move(epi)};
          }
        }
        b.set_face(CellId{dim, i}, j, std::move(f));
      }
    }
  ss_ = b.build();
}

const JoinSSet::Parts& JoinSSet::parts(CellId c) const {
  detail::require(ss_->has_cell(c), "join: unknown cell");
  return parts_[static_cast<size_t>(c.dim)][static_cast<size_t>(c.idx)];
}

CellId JoinSSet::cell(std::optional<CellId> l, std::optional<CellId> r) const {
  auto it = index_.find(std::make_pair(l.value_or(CellId{}), r.value_or(CellId{})));
  detail::require(it != index_.end(), "join: no such part pair");
  return it->second;
}

SSetPtr opposite(const SSetPtr& X) {
  SSetBuilder b;
  for (int d = 0; d <= X->top_dim(); ++d)
    for (int i = 0; i < X->cell_count(d); ++i) b.add_cell(d, X->label(CellId{d, i}));
  for (int d = 1; d <= X->top_dim(); ++d)
    for (int i = 0; i < X->cell_count(d); ++i)
      for (int j = 0; j <= d; ++j) {
        const Simplex& f = X->face(CellId{d, i}, d - j);
        b.set_face(CellId{d, i}, j, Simplex{f.base, reverse_map(f.epi)});
      }
  return b.build();
}

}  // namespace msset
