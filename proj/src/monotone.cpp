#include "msset/monotone.hpp"

#include <algorithm>
#include <sstream>

namespace msset {

MonotoneMap::MonotoneMap(std::vector<int> values, int codomain_dim)
    : values_(std::move(values)), codomain_dim_(codomain_dim) {
  detail::require(codomain_dim_ >= -1, "monotone map: codomain dimension below -1");
  if (codomain_dim_ == -1)
    detail::require(values_.empty(), "monotone map: nonempty map into the empty ordinal");
  int prev = 0;
  for (size_t i = 0; i < values_.size(); ++i) {
    int v = values_[i];
    detail::require(v >= 0 && v <= codomain_dim_,
                    "monotone map: value " + std::to_string(v) + " outside [0," +
                        std::to_string(codomain_dim_) + "]");
    detail::require(i == 0 || v >= prev, "monotone map: values not weakly increasing");
    prev = v;
  }
}

MonotoneMap MonotoneMap::identity(int n) {
  std::vector<int> v(static_cast<size_t>(n + 1));
  for (int i = 0; i <= n; ++i) v[static_cast<size_t>(i)] = i;
  return MonotoneMap(std::move(v), n);
}

MonotoneMap MonotoneMap::empty_to(int n) { return MonotoneMap({}, n); }

MonotoneMap MonotoneMap::constant(int r, int v, int n) {
  detail::require(r >= 0, "constant map needs nonempty domain");
  return MonotoneMap(std::vector<int>(static_cast<size_t>(r + 1), v), n);
}

MonotoneMap MonotoneMap::coface(int n, int i) {
  detail::require(n >= 0 && i >= 0 && i <= n,
                  "coface index " + std::to_string(i) + " out of range for [" +
                      std::to_string(n) + "]");
  std::vector<int> v;
  v.reserve(static_cast<size_t>(n));
  for (int j = 0; j <= n; ++j)
    if (j != i) v.push_back(j);
  return MonotoneMap(std::move(v), n);
}

MonotoneMap MonotoneMap::codegeneracy(int n, int i) {
  detail::require(n >= 0 && i >= 0 && i <= n,
                  "codegeneracy index " + std::to_string(i) + " out of range for [" +
                      std::to_string(n) + "]");
  std::vector<int> v;
  v.reserve(static_cast<size_t>(n + 2));
  for (int j = 0; j <= n; ++j) {
    v.push_back(j);
    if (j == i) v.push_back(j);
  }
  return MonotoneMap(std::move(v), n);
}

bool MonotoneMap::is_identity() const {
  if (domain_dim() != codomain_dim_) return false;
  for (int i = 0; i <= domain_dim(); ++i)
    if (values_[static_cast<size_t>(i)] != i) return false;
  return true;
}

bool MonotoneMap::is_injective() const {
  for (size_t i = 1; i < values_.size(); ++i)
    if (values_[i] == values_[i - 1]) return false;
  return true;
}

bool MonotoneMap::is_surjective() const {
  if (codomain_dim_ == -1) return values_.empty();
  if (values_.empty()) return false;
  if (values_.front() != 0 || values_.back() != codomain_dim_) return false;
  for (size_t i = 1; i < values_.size(); ++i)
    if (values_[i] - values_[i - 1] > 1) return false;
  return true;
}

bool MonotoneMap::hits(int v) const {
  return std::binary_search(values_.begin(), values_.end(), v);
}

int MonotoneMap::last_position_of(int v) const {
  auto it = std::upper_bound(values_.begin(), values_.end(), v);
  if (it == values_.begin() || *(it - 1) != v) return -1;
  return static_cast<int>(it - values_.begin()) - 1;
}

int MonotoneMap::last_repeat() const {
  for (int i = domain_dim(); i >= 1; --i)
    if (values_[static_cast<size_t>(i)] == values_[static_cast<size_t>(i - 1)]) return i;
  return 0;
}

std::strong_ordering MonotoneMap::operator<=>(const MonotoneMap& o) const {
  if (auto c = codomain_dim_ <=> o.codomain_dim_; c != 0) return c;
  if (auto c = values_.size() <=> o.values_.size(); c != 0) return c;
  for (size_t i = 0; i < values_.size(); ++i)
    if (auto c = values_[i] <=> o.values_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::string MonotoneMap::str() const {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < values_.size(); ++i) {
    if (i) os << ' ';
    os << values_[i];
  }
  os << "] : " << domain_dim() << " -> " << codomain_dim_;
  return os.str();
}

MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f) {
  detail::require(f.codomain_dim() == g.domain_dim(),
                  "compose: codomain [" + std::to_string(f.codomain_dim()) +
                      "] of inner map differs from domain [" +
                      std::to_string(g.domain_dim()) + "] of outer map");
  std::vector<int> v;
  v.reserve(f.values().size());
  for (int x : f.values()) v.push_back(g(x));
  return MonotoneMap(std::move(v), g.codomain_dim());
}

MonotoneMap generator(int n, int i, GeneratorKind kind) {
  return kind == GeneratorKind::Face ? MonotoneMap::coface(n, i)
                                     : MonotoneMap::codegeneracy(n, i);
}

std::pair<MonotoneMap, MonotoneMap> degeneracy_partition(int p, int q) {
  detail::require(p >= 0 && q >= 0, "degeneracy partition needs p,q >= 0");
  std::vector<int> a, b;
  for (int i = 0; i <= p + q; ++i) {
    a.push_back(std::min(i, p));
    b.push_back(std::max(i - p, 0));
  }
  return {MonotoneMap(std::move(a), p), MonotoneMap(std::move(b), q)};
}

std::pair<MonotoneMap, MonotoneMap> face_partition(int p, int q) {
  detail::require(p >= 0 && q >= 0, "face partition needs p,q >= 0");
  std::vector<int> a, b;
  for (int i = 0; i <= p; ++i) a.push_back(i);
  for (int i = 0; i <= q; ++i) b.push_back(p + i);
  return {MonotoneMap(std::move(a), p + q), MonotoneMap(std::move(b), p + q)};
}

EzFactors ez_factorize(const MonotoneMap& f) {
  std::vector<int> image;
  std::vector<int> epi;
  epi.reserve(f.values().size());
  for (int v : f.values()) {
    if (image.empty() || image.back() != v) image.push_back(v);
    epi.push_back(static_cast<int>(image.size()) - 1);
  }
  int k = static_cast<int>(image.size()) - 1;
  return {MonotoneMap(std::move(epi), k), MonotoneMap(std::move(image), f.codomain_dim())};
}

std::vector<int> epi_to_word(const MonotoneMap& epi) {
  detail::require(epi.is_surjective(), "degeneracy word of a non-surjective map");
  std::vector<int> word;
  std::vector<int> v = epi.values();
  for (int i = static_cast<int>(v.size()) - 1; i >= 1; --i) {
    if (v[static_cast<size_t>(i)] == v[static_cast<size_t>(i - 1)]) {
      word.push_back(i - 1);
      v.erase(v.begin() + i);
    }
  }
  // Peeling from the right yields strictly decreasing indices already.
  return word;
}

MonotoneMap word_to_epi(const std::vector<int>& word, int base_dim) {
  std::vector<int> v;
  for (int i = 0; i <= base_dim; ++i) v.push_back(i);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    int a = *it;
    detail::require(a >= 0 && a < static_cast<int>(v.size()),
                    "degeneracy word index out of range");
    v.insert(v.begin() + a + 1, v[static_cast<size_t>(a)]);
  }
  return MonotoneMap(std::move(v), base_dim);
}

MonotoneMap reverse_map(const MonotoneMap& f) {
  int r = f.domain_dim(), n = f.codomain_dim();
  std::vector<int> v;
  v.reserve(f.values().size());
  for (int i = r; i >= 0; --i) v.push_back(n - f(i));
  return MonotoneMap(std::move(v), n);
}

MonotoneMap join_map(const MonotoneMap& f, const MonotoneMap& g) {
  int n = f.codomain_dim(), m = g.codomain_dim();
  std::vector<int> v;
  v.reserve(f.values().size() + g.values().size());
  for (int x : f.values()) v.push_back(x);
  for (int x : g.values()) v.push_back(n + 1 + x);
  return MonotoneMap(std::move(v), n + m + 1);
}

}  // namespace msset
