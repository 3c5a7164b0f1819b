#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace msset {

/// Error type for all precondition and validation failures in the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

namespace detail {
inline void require(bool cond, const std::string& msg) {
  if (!cond) throw Error(msg);
}
}  // namespace detail

/// An order-preserving map [r] -> [n] between finite ordinals.
///
/// The domain dimension r may be -1, encoding the unique map out of the
/// empty ordinal.  Values are stored explicitly, so equality is value
/// equality and composition is pointwise.  Immutable after construction.
class MonotoneMap {
public:
  MonotoneMap(std::vector<int> values, int codomain_dim);

  static MonotoneMap identity(int n);
  static MonotoneMap empty_to(int n);             // [-1] -> [n]
  static MonotoneMap constant(int r, int v, int n);
  static MonotoneMap coface(int n, int i);        // delta^i : [n-1] -> [n], skips i
  static MonotoneMap codegeneracy(int n, int i);  // sigma^i : [n+1] -> [n], repeats i

  int domain_dim() const { return static_cast<int>(values_.size()) - 1; }
  int codomain_dim() const { return codomain_dim_; }
  int operator()(int i) const { return values_.at(static_cast<size_t>(i)); }
  const std::vector<int>& values() const { return values_; }

  bool is_identity() const;
  bool is_injective() const;   // strictly increasing
  bool is_surjective() const;  // hits every value of [codomain_dim]
  bool hits(int v) const;
  /// Largest i with f(i) == v, or -1 when v is not hit.
  int last_position_of(int v) const;
  /// Largest 1 <= i <= r with f(i-1) == f(i), or 0 when f is injective.
  int last_repeat() const;

  bool operator==(const MonotoneMap& o) const {
    return codomain_dim_ == o.codomain_dim_ && values_ == o.values_;
  }
  std::strong_ordering operator<=>(const MonotoneMap& o) const;

  /// Textual form "[v0 v1 ... vr] : r -> n".
  std::string str() const;

private:
  std::vector<int> values_;
  int codomain_dim_;
};

/// Pointwise composition g(f(-)).  Requires codomain of f == domain of g.
MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f);

enum class GeneratorKind { Face, Degeneracy };

/// The coface delta^i (kind Face) or codegeneracy sigma^i (kind Degeneracy).
MonotoneMap generator(int n, int i, GeneratorKind kind);

/// Degeneracy partition operators Pi1 : [p+q] -> [p], Pi2 : [p+q] -> [q]
/// with Pi1(i) = min(i, p) and Pi2(i) = max(i - p, 0).
std::pair<MonotoneMap, MonotoneMap> degeneracy_partition(int p, int q);

/// Face partition operators amalg1 : [p] -> [p+q], i -> i, and
/// amalg2 : [q] -> [p+q], i -> p + i.
std::pair<MonotoneMap, MonotoneMap> face_partition(int p, int q);

struct EzFactors {
  MonotoneMap epi;   // surjection onto the image
  MonotoneMap mono;  // strictly increasing inclusion of the image
};

/// Unique surjection-injection factorization f = mono o epi.
EzFactors ez_factorize(const MonotoneMap& f);

/// Normal-form degeneracy word of a surjection: the strictly decreasing
/// sequence (a_1 > ... > a_t) with epi = sigma^{a_t} o ... o sigma^{a_1}.
std::vector<int> epi_to_word(const MonotoneMap& epi);

/// Inverse of epi_to_word; base_dim is the codomain dimension.
MonotoneMap word_to_epi(const std::vector<int>& word, int base_dim);

/// Reversal along both ordinals: rev(f)(i) = n - f(r - i).
MonotoneMap reverse_map(const MonotoneMap& f);

/// Join of maps: [a] -> [n] and [b] -> [m] glued to [a+b+1] -> [n+m+1].
MonotoneMap join_map(const MonotoneMap& f, const MonotoneMap& g);

}  // namespace msset
