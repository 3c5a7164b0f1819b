#pragma once

#include "msset/constructions.hpp"
#include "msset/maps.hpp"

namespace msset {

/// A simplicial set with marking.  Degenerate simplices are implicitly
/// marked and never stored; the stored set contains only nondegenerate
/// cells of positive dimension.
class MarkedSSet {
public:
  explicit MarkedSSet(SSetPtr ss);
  MarkedSSet(SSetPtr ss, CellSet marks);

  const SSetPtr& ss() const { return ss_; }
  const CellSet& marks() const { return marks_; }

  bool marked(CellId c) const { return marks_.contains(c); }
  /// Degenerate simplices are marked, 0-simplices are not.
  bool marked(const Simplex& s) const {
    if (s.dim() == 0) return false;
    return s.degenerate() || marks_.contains(s.base);
  }

  MarkedSSet with_marks(CellSet marks) const { return MarkedSSet(ss_, std::move(marks)); }

private:
  SSetPtr ss_;
  CellSet marks_;
};

/// A map of simplicial sets with marking.
struct MarkedMap {
  MarkedSSet dom, cod;
  SSetMap map;

  bool preserves_marking() const;
  /// Commutation plus marking preservation; throws with the offending cell.
  void require_valid() const;
  /// Identity on the underlying simplicial set (same object, cell for cell).
  bool entire() const;
};

/// All marking-preserving maps dom -> X, in deterministic order.
std::vector<SSetMap> enumerate_marked_maps(const MarkedSSet& A, const MarkedSSet& X);

bool marked_isomorphic(const MarkedSSet& X, const MarkedSSet& Y);

// ---------------------------------------------------------------------------
// Marked gadgets on standard simplices.  All constructors are cached, so
// repeated calls share the underlying simplicial sets.

namespace gadgets {

MarkedSSet delta(int m);            // m >= -1; nothing nondegenerate marked
MarkedSSet delta_t(int m);          // m >= 1; top cell marked
MarkedSSet boundary(int m);         // m >= 0
MarkedSSet delta_k(int m, int k);   // marks cells containing {k-1,k,k+1} /\ [m]
MarkedSSet delta_k_prime(int m, int k);
MarkedSSet delta_k_double_prime(int m, int k);
MarkedSSet horn(int m, int k);      // k-horn with the delta_k marking restricted
MarkedSSet delta3_eq();
MarkedSSet delta3_sharp();

enum class Variant { Eq, Sharp };
/// The join of a standard lp-simplex, the 3-simplex with the eq or sharp
/// marking, and a standard l-simplex, presented on standard(lp + l + 5).
MarkedSSet delta_three(int lp, int l, Variant v);

}  // namespace gadgets

// ---------------------------------------------------------------------------
// Join, pretensor and tensor.

struct MarkedJoin {
  std::shared_ptr<const JoinSSet> join;
  CellSet marks;
  MarkedSSet as_marked() const { return MarkedSSet(join->ss(), marks); }
};

/// Join of marked objects: a join simplex is marked when either part is
/// marked in its factor (absent parts count as unmarked).
MarkedJoin join_marked(const MarkedSSet& X, const MarkedSSet& Y);

/// True when there is 0 < k < r with x degenerate at position k and
/// y degenerate at position k+1 (the mediator rule).
bool is_mediator(const Simplex& x, const Simplex& y);

/// True when some partition p+q = r writes x as a cylinder collapsed on the
/// back q positions and y as one collapsed on the front p positions, with a
/// marked lid on either side.
bool is_crushed_cylinder(const Simplex& x, const Simplex& y, const MarkedSSet& X,
                         const MarkedSSet& Y);

/// The partition (p, q) cleaves (x, y) when the front p-face of x is marked
/// in X or the back q-face of y is marked in Y.
bool cleaves(int p, int q, const Simplex& x, const Simplex& y, const MarkedSSet& X,
             const MarkedSSet& Y);

struct MarkedProduct {
  std::shared_ptr<const ProductSSet> prod;
  CellSet marks;
  MarkedSSet as_marked() const { return MarkedSSet(prod->ss(), marks); }
};

/// Markings over an existing product presentation.  The factors of P must
/// be the underlying objects of X and Y.
CellSet pretensor_marks(const ProductSSet& P, const MarkedSSet& X, const MarkedSSet& Y);
CellSet tensor_marks(const ProductSSet& P, const MarkedSSet& X, const MarkedSSet& Y);

MarkedProduct pretensor(const MarkedSSet& X, const MarkedSSet& Y);
MarkedProduct tensor(const MarkedSSet& X, const MarkedSSet& Y);

/// Opposite with the marking transported along the cell bijection.
MarkedSSet opposite_marked(const MarkedSSet& X);

/// Cells of P whose second projection is surjective onto the right factor's
/// top dimension -- the complement of the boundary part in the second slot.
bool second_projection_surjective(const ProductSSet& P, CellId c);

}  // namespace msset
