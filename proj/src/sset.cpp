#include "msset/sset.hpp"

#include <algorithm>
#include <functional>

namespace msset {

int FinSSet::total_cells() const {
  int n = 0;
  for (int c : counts_) n += c;
  return n;
}

const Simplex& FinSSet::face(CellId c, int i) const {
  detail::require(has_cell(c) && c.dim >= 1, "face of unknown or 0-dimensional cell");
  detail::require(i >= 0 && i <= c.dim, "face index out of range");
  return faces_[static_cast<size_t>(c.dim)][static_cast<size_t>(c.idx)][static_cast<size_t>(i)];
}

const std::string& FinSSet::label(CellId c) const {
  detail::require(has_cell(c), "label of unknown cell");
  return labels_[static_cast<size_t>(c.dim)][static_cast<size_t>(c.idx)];
}

Simplex FinSSet::normalize(CellId base, const MonotoneMap& f) const {
  detail::require(f.codomain_dim() == base.dim, "normalize: map does not land in the base");
  EzFactors ez = ez_factorize(f);
  if (ez.mono.is_identity()) return Simplex{base, std::move(ez.epi)};
  // Peel the largest missing value of the injection through the stored face.
  int j = base.dim;
  {
    const auto& vals = ez.mono.values();
    size_t pos = vals.size();
    for (; j >= 0; --j) {
      if (pos > 0 && vals[pos - 1] == j) {
        --pos;
        continue;
      }
      break;
    }
  }
  const Simplex& fj = face(base, j);
  // mono = delta^j o mono', with mono' the same image reindexed below j.
  std::vector<int> mv;
  mv.reserve(ez.mono.values().size());
  for (int v : ez.mono.values()) mv.push_back(v < j ? v : v - 1);
  MonotoneMap mono_prime(std::move(mv), base.dim - 1);
  Simplex inner = normalize(fj.base, compose(fj.epi, mono_prime));
  return Simplex{inner.base, compose(inner.epi, ez.epi)};
}

Simplex FinSSet::act(const Simplex& s, const MonotoneMap& alpha) const {
  detail::require(alpha.codomain_dim() == s.dim(), "act: map does not land in the simplex");
  return normalize(s.base, compose(s.epi, alpha));
}

std::vector<CellId> FinSSet::cells() const {
  std::vector<CellId> out;
  for (int d = 0; d <= top_dim(); ++d)
    for (int i = 0; i < cell_count(d); ++i) out.push_back(CellId{d, i});
  return out;
}

namespace {
void epis_onto(int r, int k, std::vector<MonotoneMap>& out) {
  // All weakly increasing surjections [r] ->> [k], in lexicographic order.
  if (r < 0 || k < 0 || k > r) return;
  std::vector<int> v(static_cast<size_t>(r + 1));
  std::function<void(int)> rec = [&](int pos) {
    if (pos == r + 1) {
      out.emplace_back(v, k);
      return;
    }
    int prev = v[static_cast<size_t>(pos - 1)];
    if (prev + (r - pos) >= k) {  // staying still allows reaching k
      v[static_cast<size_t>(pos)] = prev;
      rec(pos + 1);
    }
    if (prev + 1 <= k) {
      v[static_cast<size_t>(pos)] = prev + 1;
      rec(pos + 1);
    }
  };
  v[0] = 0;
  if (r == 0) {
    out.emplace_back(v, k);
    return;
  }
  rec(1);
}
}  // namespace

std::vector<Simplex> FinSSet::simplices(int r) const {
  std::vector<Simplex> out;
  for (int k = 0; k <= std::min(r, top_dim()); ++k) {
    std::vector<MonotoneMap> epis;
    epis_onto(r, k, epis);
    for (int i = 0; i < cell_count(k); ++i)
      for (const auto& e : epis) out.push_back(Simplex{CellId{k, i}, e});
  }
  std::sort(out.begin(), out.end());
  return out;
}

void FinSSet::validate() const {
  for (int d = 1; d <= top_dim(); ++d) {
    for (int c = 0; c < cell_count(d); ++c) {
      CellId id{d, c};
      detail::require(static_cast<int>(faces_[static_cast<size_t>(d)][static_cast<size_t>(c)].size()) ==
                          d + 1,
                      "cell " + id.str() + " has wrong face count");
      for (int i = 0; i <= d; ++i) {
        const Simplex& f = face(id, i);
        detail::require(f.dim() == d - 1, "face dimension mismatch at " + id.str());
        detail::require(has_cell(f.base), "face of " + id.str() + " references unknown cell");
        detail::require(f.epi.is_surjective(), "face of " + id.str() + " not in normal form");
      }
      if (d >= 2) {
        for (int j = 1; j <= d; ++j)
          for (int i = 0; i < j; ++i) {
            Simplex a = act(face(id, j), MonotoneMap::coface(d - 1, i));
            Simplex b = act(face(id, i), MonotoneMap::coface(d - 1, j - 1));
            detail::require(a == b, "simplicial identity d_i d_j fails at " + id.str() +
                                        " (i=" + std::to_string(i) + ", j=" + std::to_string(j) +
                                        ")");
          }
      }
    }
  }
}

std::string FinSSet::describe(const Simplex& s) const {
  std::string out = label(s.base).empty() ? s.base.str() : label(s.base);
  auto word = epi_to_word(s.epi);
  if (!word.empty()) {
    out += " s[";
    for (size_t i = 0; i < word.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(word[i]);
    }
    out += ']';
  }
  return out;
}

CellId SSetBuilder::add_cell(int dim, std::string label) {
  detail::require(dim >= 0, "cells have dimension >= 0");
  auto d = static_cast<size_t>(dim);
  if (s_.counts_.size() <= d) {
    s_.counts_.resize(d + 1, 0);
    s_.faces_.resize(d + 1);
    s_.labels_.resize(d + 1);
  }
  CellId id{dim, s_.counts_[d]++};
  s_.faces_[d].emplace_back(dim >= 1 ? static_cast<size_t>(dim + 1) : 0,
                            Simplex{CellId{}, MonotoneMap::empty_to(-1)});
  s_.labels_[d].push_back(std::move(label));
  return id;
}

void SSetBuilder::set_face(CellId c, int i, Simplex f) {
  detail::require(s_.has_cell(c) && c.dim >= 1 && i >= 0 && i <= c.dim,
                  "set_face: bad cell or index");
  detail::require(f.dim() == c.dim - 1, "set_face: face has wrong dimension");
  s_.faces_[static_cast<size_t>(c.dim)][static_cast<size_t>(c.idx)][static_cast<size_t>(i)] =
      std::move(f);
}

SSetPtr SSetBuilder::build() {
  s_.validate();
  return std::make_shared<FinSSet>(std::move(s_));
}

CellSet::CellSet(const FinSSet& ambient) {
  bits_.resize(static_cast<size_t>(ambient.top_dim() + 1));
  for (int d = 0; d <= ambient.top_dim(); ++d)
    bits_[static_cast<size_t>(d)].assign(static_cast<size_t>(ambient.cell_count(d)), 0);
}

void CellSet::ensure(int dim, int idx) {
  if (static_cast<int>(bits_.size()) <= dim) bits_.resize(static_cast<size_t>(dim + 1));
  auto& row = bits_[static_cast<size_t>(dim)];
  if (static_cast<int>(row.size()) <= idx) row.resize(static_cast<size_t>(idx + 1), 0);
}

bool CellSet::contains(CellId c) const {
  if (c.dim < 0 || c.dim >= static_cast<int>(bits_.size())) return false;
  const auto& row = bits_[static_cast<size_t>(c.dim)];
  return c.idx >= 0 && c.idx < static_cast<int>(row.size()) && row[static_cast<size_t>(c.idx)];
}

void CellSet::insert(CellId c) {
  ensure(c.dim, c.idx);
  bits_[static_cast<size_t>(c.dim)][static_cast<size_t>(c.idx)] = 1;
}

void CellSet::erase(CellId c) {
  if (contains(c)) bits_[static_cast<size_t>(c.dim)][static_cast<size_t>(c.idx)] = 0;
}

int CellSet::count() const {
  int n = 0;
  for (const auto& row : bits_)
    for (char b : row) n += b;
  return n;
}

int CellSet::count_dim(int dim) const {
  if (dim < 0 || dim >= static_cast<int>(bits_.size())) return 0;
  int n = 0;
  for (char b : bits_[static_cast<size_t>(dim)]) n += b;
  return n;
}

std::vector<CellId> CellSet::items() const {
  std::vector<CellId> out;
  for (int d = 0; d < static_cast<int>(bits_.size()); ++d)
    for (int i = 0; i < static_cast<int>(bits_[static_cast<size_t>(d)].size()); ++i)
      if (bits_[static_cast<size_t>(d)][static_cast<size_t>(i)]) out.push_back(CellId{d, i});
  return out;
}

std::vector<CellId> CellSet::items_dim(int dim) const {
  std::vector<CellId> out;
  if (dim < 0 || dim >= static_cast<int>(bits_.size())) return out;
  for (int i = 0; i < static_cast<int>(bits_[static_cast<size_t>(dim)].size()); ++i)
    if (bits_[static_cast<size_t>(dim)][static_cast<size_t>(i)]) out.push_back(CellId{dim, i});
  return out;
}

CellSet& CellSet::operator|=(const CellSet& o) {
  for (auto c : o.items()) insert(c);
  return *this;
}

CellSet& CellSet::operator&=(const CellSet& o) {
  for (auto c : items())
    if (!o.contains(c)) erase(c);
  return *this;
}

bool CellSet::operator==(const CellSet& o) const { return items() == o.items(); }

bool CellSet::subset_of(const CellSet& o) const {
  for (auto c : items())
    if (!o.contains(c)) return false;
  return true;
}

CellSet CellSet::minus(const CellSet& o) const {
  CellSet out = *this;
  for (auto c : o.items()) out.erase(c);
  return out;
}

CellSet set_union(CellSet a, const CellSet& b) {
  a |= b;
  return a;
}

CellSet set_intersection(CellSet a, const CellSet& b) {
  a &= b;
  return a;
}

CellSet face_closure(const FinSSet& X, std::span<const CellId> seeds) {
  CellSet out(X);
  std::vector<CellId> stack;
  for (CellId c : seeds) {
    detail::require(X.has_cell(c), "face closure: seed " + c.str() + " is not a cell");
    if (!out.contains(c)) {
      out.insert(c);
      stack.push_back(c);
    }
  }
  while (!stack.empty()) {
    CellId c = stack.back();
    stack.pop_back();
    for (int i = 0; i <= c.dim && c.dim >= 1; ++i) {
      CellId b = X.face(c, i).base;
      if (!out.contains(b)) {
        out.insert(b);
        stack.push_back(b);
      }
    }
  }
  return out;
}

bool is_face_closed(const FinSSet& X, const CellSet& cells) {
  for (auto c : cells.items())
    if (c.dim >= 1)
      for (int i = 0; i <= c.dim; ++i)
        if (!cells.contains(X.face(c, i).base)) return false;
  return true;
}

CellId Extracted::to_sub(CellId c) const {
  if (c.dim < 0 || c.dim >= static_cast<int>(sub_idx.size())) return CellId{};
  int i = sub_idx[static_cast<size_t>(c.dim)][static_cast<size_t>(c.idx)];
  return i < 0 ? CellId{} : CellId{c.dim, i};
}

CellId Extracted::to_ambient(CellId c) const {
  return CellId{c.dim, amb_idx[static_cast<size_t>(c.dim)][static_cast<size_t>(c.idx)]};
}

Extracted extract(const FinSSet& X, const CellSet& cells) {
  detail::require(is_face_closed(X, cells), "extract: cell set is not face-closed");
  Extracted out;
  out.sub_idx.resize(static_cast<size_t>(X.top_dim() + 1));
  out.amb_idx.resize(static_cast<size_t>(X.top_dim() + 1));
  SSetBuilder b;
  for (int d = 0; d <= X.top_dim(); ++d) {
    out.sub_idx[static_cast<size_t>(d)].assign(static_cast<size_t>(X.cell_count(d)), -1);
    for (int i = 0; i < X.cell_count(d); ++i)
      if (cells.contains(CellId{d, i})) {
        CellId nc = b.add_cell(d, X.label(CellId{d, i}));
        out.sub_idx[static_cast<size_t>(d)][static_cast<size_t>(i)] = nc.idx;
        out.amb_idx[static_cast<size_t>(d)].push_back(i);
      }
  }
  for (int d = 1; d <= X.top_dim(); ++d)
    for (int i = 0; i < X.cell_count(d); ++i)
      if (cells.contains(CellId{d, i})) {
        CellId sub{d, out.sub_idx[static_cast<size_t>(d)][static_cast<size_t>(i)]};
        for (int j = 0; j <= d; ++j) {
          const Simplex& f = X.face(CellId{d, i}, j);
          b.set_face(sub, j, Simplex{out.to_sub(f.base), f.epi});
        }
      }
  out.ss = b.build();
  return out;
}

}  // namespace msset
