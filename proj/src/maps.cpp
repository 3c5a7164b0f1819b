#include "msset/maps.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace msset {

SSetMap::SSetMap(SSetPtr dom, SSetPtr cod) : dom_(std::move(dom)), cod_(std::move(cod)) {
  images_.resize(static_cast<size_t>(dom_->top_dim() + 1));
  for (int d = 0; d <= dom_->top_dim(); ++d)
    images_[static_cast<size_t>(d)].assign(static_cast<size_t>(dom_->cell_count(d)),
                                           Simplex{CellId{}, MonotoneMap::empty_to(-1)});
}

void SSetMap::set(CellId c, Simplex image) {
  detail::require(dom_->has_cell(c), "map assignment to unknown cell");
  detail::require(image.dim() == c.dim, "map assignment must preserve dimension");
  detail::require(cod_->has_cell(image.base), "map assignment into unknown cell");
  images_[static_cast<size_t>(c.dim)][static_cast<size_t>(c.idx)] = std::move(image);
}

const Simplex& SSetMap::image(CellId c) const {
  detail::require(dom_->has_cell(c), "image of unknown cell");
  return images_[static_cast<size_t>(c.dim)][static_cast<size_t>(c.idx)];
}

Simplex SSetMap::apply(const Simplex& s) const {
  const Simplex& img = image(s.base);
  return Simplex{img.base, compose(img.epi, s.epi)};
}

bool SSetMap::commutes() const {
  for (int d = 1; d <= dom_->top_dim(); ++d)
    for (int i = 0; i < dom_->cell_count(d); ++i) {
      CellId c{d, i};
      for (int j = 0; j <= d; ++j) {
        if (apply(dom_->face(c, j)) != cod_->act(image(c), MonotoneMap::coface(d, j)))
          return false;
      }
    }
  return true;
}

void SSetMap::require_commutes() const {
  detail::require(commutes(), "assignment does not commute with the face operators");
}

bool SSetMap::is_inclusion() const {
  std::set<CellId> seen;
  for (int d = 0; d <= dom_->top_dim(); ++d)
    for (int i = 0; i < dom_->cell_count(d); ++i) {
      const Simplex& img = image(CellId{d, i});
      if (img.degenerate()) return false;
      if (!seen.insert(img.base).second) return false;
    }
  return true;
}

CellSet SSetMap::image_cells() const {
  CellSet out(*cod_);
  for (int d = 0; d <= dom_->top_dim(); ++d)
    for (int i = 0; i < dom_->cell_count(d); ++i) out.insert(image(CellId{d, i}).base);
  return out;
}

SSetMap SSetMap::identity(SSetPtr X) {
  SSetMap f(X, X);
  for (int d = 0; d <= X->top_dim(); ++d)
    for (int i = 0; i < X->cell_count(d); ++i) f.set(CellId{d, i}, X->simplex(CellId{d, i}));
  return f;
}

SSetMap SSetMap::inclusion(const Extracted& sub, SSetPtr ambient) {
  SSetMap f(sub.ss, std::move(ambient));
  for (int d = 0; d <= sub.ss->top_dim(); ++d)
    for (int i = 0; i < sub.ss->cell_count(d); ++i) {
      CellId c{d, i};
      f.set(c, Simplex{sub.to_ambient(c), MonotoneMap::identity(d)});
    }
  return f;
}

SSetMap compose(const SSetMap& g, const SSetMap& f) {
  detail::require(f.cod().get() == g.dom().get(), "map composition domain mismatch");
  SSetMap out(f.dom(), g.cod());
  for (int d = 0; d <= f.dom()->top_dim(); ++d)
    for (int i = 0; i < f.dom()->cell_count(d); ++i)
      out.set(CellId{d, i}, g.apply(f.image(CellId{d, i})));
  return out;
}

namespace {

struct Enumerator {
  SSetPtr A, X;
  std::vector<CellId> order;
  std::vector<std::vector<std::vector<Simplex>>> candidates;  // per dim: simplices of X

  explicit Enumerator(SSetPtr a, SSetPtr x) : A(std::move(a)), X(std::move(x)) {
    order = A->cells();
    candidates.resize(static_cast<size_t>(A->top_dim() + 1));
    for (int d = 0; d <= A->top_dim(); ++d)
      if (A->cell_count(d) > 0) candidates[static_cast<size_t>(d)].push_back(X->simplices(d));
  }

  const std::vector<Simplex>& cands(int dim) const {
    return candidates[static_cast<size_t>(dim)].front();
  }

  bool faces_ok(const SSetMap& f, CellId c, const Simplex& img) const {
    for (int j = 0; j <= c.dim && c.dim >= 1; ++j) {
      const Simplex& fc = A->face(c, j);
      if (f.apply(fc) != X->act(img, MonotoneMap::coface(c.dim, j))) return false;
    }
    return true;
  }
};

}  // namespace

std::vector<SSetMap> enumerate_maps(SSetPtr A, SSetPtr X) {
  std::vector<SSetMap> out;
  if (A->empty()) {
    out.emplace_back(A, X);
    return out;
  }
  if (X->empty()) return out;  // no maps from a nonempty object into the empty one
  Enumerator e(A, X);
  SSetMap f(A, X);
  std::function<void(size_t)> rec = [&](size_t pos) {
    if (pos == e.order.size()) {
      out.push_back(f);
      return;
    }
    CellId c = e.order[pos];
    for (const Simplex& img : e.cands(c.dim)) {
      if (!e.faces_ok(f, c, img)) continue;
      f.set(c, img);
      rec(pos + 1);
    }
  };
  rec(0);
  return out;
}

long long naive_candidate_count(const FinSSet& A, const FinSSet& X, long long cap) {
  long long total = 1;
  for (int d = 0; d <= A.top_dim(); ++d) {
    if (A.cell_count(d) == 0) continue;
    long long per = static_cast<long long>(X.simplices(d).size());
    for (int i = 0; i < A.cell_count(d); ++i) {
      if (per == 0) return 0;
      if (total > cap / per) return cap + 1;
      total *= per;
    }
  }
  return total;
}

std::vector<SSetMap> enumerate_maps_naive(SSetPtr A, SSetPtr X, long long cap) {
  std::vector<SSetMap> out;
  if (A->empty()) {
    out.emplace_back(A, X);
    return out;
  }
  if (X->empty()) return out;
  long long n = naive_candidate_count(*A, *X, cap);
  detail::require(n <= cap, "naive enumeration exceeds the candidate cap");
  Enumerator e(A, X);
  SSetMap f(A, X);
  std::function<void(size_t)> rec = [&](size_t pos) {
    if (pos == e.order.size()) {
      if (f.commutes()) out.push_back(f);
      return;
    }
    CellId c = e.order[pos];
    for (const Simplex& img : e.cands(c.dim)) {
      f.set(c, img);
      rec(pos + 1);
    }
  };
  rec(0);
  return out;
}

namespace {

struct Refiner {
  const FinSSet& X;
  const CellSet* marks;
  std::vector<std::vector<int>> color;  // [dim][idx]
  int ncolors = 0;

  explicit Refiner(const FinSSet& x, const CellSet* m) : X(x), marks(m) {
    color.resize(static_cast<size_t>(X.top_dim() + 1));
    // seed colors by sorted key so the numbering is isomorphism-invariant
    std::map<std::pair<int, bool>, int> init;
    for (int d = 0; d <= X.top_dim(); ++d)
      for (int i = 0; i < X.cell_count(d); ++i)
        init.emplace(std::make_pair(d, marks != nullptr && marks->contains(CellId{d, i})), 0);
    int next = 0;
    for (auto& [key, col] : init) col = next++;
    for (int d = 0; d <= X.top_dim(); ++d) {
      color[static_cast<size_t>(d)].resize(static_cast<size_t>(X.cell_count(d)));
      for (int i = 0; i < X.cell_count(d); ++i)
        color[static_cast<size_t>(d)][static_cast<size_t>(i)] =
            init.at(std::make_pair(d, marks != nullptr && marks->contains(CellId{d, i})));
    }
    ncolors = next;
    refine();
  }

  int at(CellId c) const { return color[static_cast<size_t>(c.dim)][static_cast<size_t>(c.idx)]; }

  void refine() {
    while (true) {
      // key: current color + outgoing face colors/words + incoming incidence
      std::map<CellId, std::vector<std::pair<int, int>>> incoming;
      for (int d = 1; d <= X.top_dim(); ++d)
        for (int i = 0; i < X.cell_count(d); ++i)
          for (int j = 0; j <= d; ++j)
            incoming[X.face(CellId{d, i}, j).base].push_back({at(CellId{d, i}), j});
      std::map<std::vector<int>, int> keymap;
      std::vector<std::vector<int>> newcolor(color.size());
      std::vector<std::pair<std::vector<int>, CellId>> keys;
      for (int d = 0; d <= X.top_dim(); ++d) {
        newcolor[static_cast<size_t>(d)].resize(static_cast<size_t>(X.cell_count(d)));
        for (int i = 0; i < X.cell_count(d); ++i) {
          CellId c{d, i};
          std::vector<int> key{at(c)};
          if (d >= 1)
            for (int j = 0; j <= d; ++j) {
              const Simplex& f = X.face(c, j);
              key.push_back(at(f.base));
              key.push_back(-1);
              for (int v : f.epi.values()) key.push_back(v);
            }
          key.push_back(-2);
          auto inc = incoming[c];
          std::sort(inc.begin(), inc.end());
          for (auto& [pc, pj] : inc) {
            key.push_back(pc);
            key.push_back(pj);
          }
          keys.push_back({std::move(key), c});
        }
      }
      std::sort(keys.begin(), keys.end());
      int next = 0;
      const std::vector<int>* prev = nullptr;
      for (auto& [key, c] : keys) {
        if (prev == nullptr || key != *prev) {
          prev = &key;
          ++next;
        }
        newcolor[static_cast<size_t>(c.dim)][static_cast<size_t>(c.idx)] = next - 1;
      }
      if (next == ncolors) {
        color = std::move(newcolor);
        return;
      }
      ncolors = next;
      color = std::move(newcolor);
    }
  }

  // Smallest color class with more than one member, or empty.
  std::vector<CellId> first_tied_class() const {
    std::map<int, std::vector<CellId>> classes;
    for (int d = 0; d <= X.top_dim(); ++d)
      for (int i = 0; i < X.cell_count(d); ++i) classes[at(CellId{d, i})].push_back(CellId{d, i});
    for (auto& [col, cells] : classes)
      if (cells.size() > 1) return cells;
    return {};
  }

  std::string emit() const {
    // canonical order: cells sorted by color (all singletons at this point)
    std::map<int, CellId> by_color;
    for (int d = 0; d <= X.top_dim(); ++d)
      for (int i = 0; i < X.cell_count(d); ++i) by_color[at(CellId{d, i})] = CellId{d, i};
    std::vector<std::vector<CellId>> order(color.size());  // per dim, canonical order
    std::vector<std::vector<int>> rank(color.size());
    for (size_t d = 0; d < color.size(); ++d)
      rank[d].resize(color[d].size());
    for (auto& [col, c] : by_color) {
      rank[static_cast<size_t>(c.dim)][static_cast<size_t>(c.idx)] =
          static_cast<int>(order[static_cast<size_t>(c.dim)].size());
      order[static_cast<size_t>(c.dim)].push_back(c);
    }
    std::ostringstream os;
    for (int d = 0; d <= X.top_dim(); ++d) {
      os << 'D' << X.cell_count(d) << ';';
      for (CellId c : order[static_cast<size_t>(d)]) {
        os << (marks != nullptr && marks->contains(c) ? 'M' : 'u');
        if (d >= 1)
          for (int j = 0; j <= d; ++j) {
            const Simplex& f = X.face(c, j);
            os << rank[static_cast<size_t>(f.base.dim)][static_cast<size_t>(f.base.idx)] << '.';
            for (int v : f.epi.values()) os << v << ',';
            os << '/';
          }
        os << '|';
      }
    }
    return os.str();
  }
};

std::string canon_search(Refiner r) {
  auto tied = r.first_tied_class();
  if (tied.empty()) return r.emit();
  std::string best;
  for (CellId pick : tied) {
    Refiner r2 = r;
    // individualize: give pick a fresh color below all others, then re-refine
    for (auto& row : r2.color)
      for (auto& c : row) c += 1;
    r2.color[static_cast<size_t>(pick.dim)][static_cast<size_t>(pick.idx)] = 0;
    r2.ncolors += 1;
    r2.refine();
    std::string s = canon_search(std::move(r2));
    if (best.empty() || s < best) best = s;
  }
  return best;
}

}  // namespace

std::string canonical_signature(const FinSSet& X, const CellSet* marks) {
  return canon_search(Refiner(X, marks));
}

bool isomorphic(const FinSSet& X, const FinSSet& Y) {
  if (X.top_dim() != Y.top_dim()) return false;
  for (int d = 0; d <= X.top_dim(); ++d)
    if (X.cell_count(d) != Y.cell_count(d)) return false;
  return canonical_signature(X) == canonical_signature(Y);
}

}  // namespace msset
