#pragma once

#include <map>
#include <optional>
#include <unordered_map>

#include "msset/sset.hpp"

namespace msset {

/// The standard simplex with vertex-tuple bookkeeping: the r-cells are the
/// strictly increasing (r+1)-tuples in [0..m], in lexicographic order, and
/// an r-simplex is the same thing as a monotone map [r] -> [m].
class Standard {
public:
  explicit Standard(int m);

  int m() const { return m_; }
  const SSetPtr& ss() const { return ss_; }

  CellId cell(const std::vector<int>& verts) const;
  const std::vector<int>& verts(CellId c) const;

  /// Simplex of a monotone map [r] -> [m], and back.
  Simplex from_map(const MonotoneMap& f) const;
  MonotoneMap to_map(const Simplex& s) const;

private:
  int m_;
  SSetPtr ss_;
  std::vector<std::vector<std::vector<int>>> verts_;  // [dim][idx] -> tuple
  std::map<std::vector<int>, CellId> index_;
};

const Standard& standard(int m);  // cached; m >= -1 (m == -1 gives the empty set)

SSetPtr standard_ss(int m);
SSetPtr boundary_ss(int m);
SSetPtr horn_ss(int m, int k);

/// Cell sets of the boundary and horn inside standard(m).
CellSet boundary_cells(int m);
CellSet horn_cells(int m, int k);

/// Finite product, presented on nondegenerate component pairs.
class ProductSSet {
public:
  ProductSSet(SSetPtr left, SSetPtr right);

  const SSetPtr& ss() const { return ss_; }
  const SSetPtr& left() const { return left_; }
  const SSetPtr& right() const { return right_; }

  struct Components {
    Simplex left, right;
  };
  const Components& components(CellId c) const;
  /// Cell of a jointly nondegenerate pair of equal-dimensional simplices.
  CellId cell(const Simplex& l, const Simplex& r) const;
  /// Normal form of an arbitrary pair: joint EZ collapse of the common
  /// degeneracy positions.
  Simplex pair_simplex(const Simplex& l, const Simplex& r) const;

private:
  struct PairHash {
    size_t operator()(const std::pair<Simplex, Simplex>& p) const;
  };
  SSetPtr ss_, left_, right_;
  std::vector<std::vector<Components>> comp_;
  std::unordered_map<std::pair<Simplex, Simplex>, CellId, PairHash> index_;
};

/// Finite join: nondegenerate cells are pairs of nondegenerate cells of the
/// factors, either of which may be absent.
class JoinSSet {
public:
  JoinSSet(SSetPtr left, SSetPtr right);

  const SSetPtr& ss() const { return ss_; }
  const SSetPtr& left() const { return left_; }
  const SSetPtr& right() const { return right_; }

  struct Parts {
    std::optional<CellId> left, right;  // at least one present
  };
  const Parts& parts(CellId c) const;
  CellId cell(std::optional<CellId> l, std::optional<CellId> r) const;

private:
  SSetPtr ss_, left_, right_;
  std::vector<std::vector<Parts>> parts_;
  std::map<std::pair<CellId, CellId>, CellId> index_;  // CellId{} for absent
};

/// Opposite simplicial set.  Cells keep their identifiers; the i-th face of
/// a cell in the opposite is the (r-i)-th face in the original.
SSetPtr opposite(const SSetPtr& X);

}  // namespace msset
