#pragma once

#include <compare>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "msset/monotone.hpp"

namespace msset {

/// Identifier of a nondegenerate cell: dimension plus index within it.
struct CellId {
  int dim = -1;
  int idx = -1;
  bool valid() const { return dim >= 0; }
  auto operator<=>(const CellId&) const = default;
  std::string str() const { return "d" + std::to_string(dim) + "." + std::to_string(idx); }
};

/// A simplex in Eilenberg-Zilber normal form: nondegenerate base composed
/// with a surjective reindexing.  The simplex is degenerate exactly when
/// the surjection is not the identity.
struct Simplex {
  CellId base;
  MonotoneMap epi;  // [dim] ->> [base.dim]

  int dim() const { return epi.domain_dim(); }
  bool degenerate() const { return !epi.is_identity(); }
  bool operator==(const Simplex& o) const { return base == o.base && epi == o.epi; }
  std::strong_ordering operator<=>(const Simplex& o) const {
    if (auto c = base <=> o.base; c != 0) return c;
    return epi <=> o.epi;
  }
};

class FinSSet;
using SSetPtr = std::shared_ptr<const FinSSet>;

/// A finite simplicial set presented by nondegenerate cells with face data
/// in EZ normal form.  Immutable once built; shared freely.
class FinSSet {
public:
  int top_dim() const { return static_cast<int>(counts_.size()) - 1; }
  int cell_count(int dim) const {
    return (dim >= 0 && dim <= top_dim()) ? counts_[static_cast<size_t>(dim)] : 0;
  }
  int total_cells() const;
  bool empty() const { return counts_.empty(); }
  bool has_cell(CellId c) const { return c.dim >= 0 && c.idx >= 0 && c.idx < cell_count(c.dim); }

  /// The i-th face of a nondegenerate cell, 0 <= i <= dim(c), dim(c) >= 1.
  const Simplex& face(CellId c, int i) const;
  const std::string& label(CellId c) const;

  Simplex simplex(CellId c) const { return Simplex{c, MonotoneMap::identity(c.dim)}; }

  /// Right action s . alpha = s o alpha, renormalized.
  Simplex act(const Simplex& s, const MonotoneMap& alpha) const;
  /// Normal form of base o f for an arbitrary monotone f into [base.dim].
  Simplex normalize(CellId base, const MonotoneMap& f) const;

  /// All cells in dimension-major, index-minor order.
  std::vector<CellId> cells() const;
  /// All r-simplices (degenerate included), in deterministic order.
  std::vector<Simplex> simplices(int r) const;

  /// Checks the simplicial identities d_i d_j = d_{j-1} d_i (i < j) on every
  /// cell, plus well-formedness of all stored face data.  Throws on failure.
  void validate() const;

  std::string describe(const Simplex& s) const;

private:
  friend class SSetBuilder;
  std::vector<int> counts_;
  std::vector<std::vector<std::vector<Simplex>>> faces_;  // [dim][idx][i], dim >= 1
  std::vector<std::vector<std::string>> labels_;          // [dim][idx]
};

/// Incremental constructor for FinSSet.  Cells must be added low dimension
/// first; faces may reference only existing cells.
class SSetBuilder {
public:
  CellId add_cell(int dim, std::string label = "");
  void set_face(CellId c, int i, Simplex f);
  /// Finalizes, validates and returns the object.
  SSetPtr build();

private:
  FinSSet s_;
};

/// A subset of the cells of a fixed simplicial set, stored per dimension.
/// Used both for subcomplexes (when face-closed) and for markings.
class CellSet {
public:
  CellSet() = default;
  explicit CellSet(const FinSSet& ambient);

  bool contains(CellId c) const;
  void insert(CellId c);
  void erase(CellId c);
  int count() const;
  int count_dim(int dim) const;
  bool empty() const { return count() == 0; }

  std::vector<CellId> items() const;           // deterministic order
  std::vector<CellId> items_dim(int dim) const;

  CellSet& operator|=(const CellSet& o);
  CellSet& operator&=(const CellSet& o);
  bool operator==(const CellSet& o) const;
  /// True when every member of this set lies in o.
  bool subset_of(const CellSet& o) const;
  CellSet minus(const CellSet& o) const;

private:
  std::vector<std::vector<char>> bits_;
  void ensure(int dim, int idx);
};

CellSet set_union(CellSet a, const CellSet& b);
CellSet set_intersection(CellSet a, const CellSet& b);

/// Smallest face-closed cell set containing the seeds.
CellSet face_closure(const FinSSet& X, std::span<const CellId> seeds);
bool is_face_closed(const FinSSet& X, const CellSet& cells);

/// A face-closed subset extracted as a standalone simplicial set, together
/// with the cell correspondence in both directions.
struct Extracted {
  SSetPtr ss;
  std::vector<std::vector<int>> sub_idx;  // ambient [dim][idx] -> sub idx or -1
  std::vector<std::vector<int>> amb_idx;  // sub [dim][idx] -> ambient idx

  CellId to_sub(CellId ambient_cell) const;
  CellId to_ambient(CellId sub_cell) const;
};
Extracted extract(const FinSSet& X, const CellSet& cells);

}  // namespace msset
