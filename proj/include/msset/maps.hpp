#pragma once

#include "msset/sset.hpp"

namespace msset {

/// A simplicial map, given by its values on nondegenerate cells of the
/// domain and extended to all simplices along the degeneracy words.
class SSetMap {
public:
  SSetMap(SSetPtr dom, SSetPtr cod);

  const SSetPtr& dom() const { return dom_; }
  const SSetPtr& cod() const { return cod_; }

  void set(CellId c, Simplex image);
  const Simplex& image(CellId c) const;
  Simplex apply(const Simplex& s) const;

  /// True when every face operator commutes with the assignment.
  bool commutes() const;
  void require_commutes() const;

  /// True when distinct cells have distinct nondegenerate images, i.e. the
  /// map embeds the domain as a subcomplex.
  bool is_inclusion() const;
  /// Image cells, as a subset of the codomain (only valid for inclusions).
  CellSet image_cells() const;

  bool operator==(const SSetMap& o) const { return images_ == o.images_; }
  std::strong_ordering operator<=>(const SSetMap& o) const { return images_ <=> o.images_; }

  static SSetMap identity(SSetPtr X);
  /// Inclusion of an extracted subcomplex back into the ambient object.
  static SSetMap inclusion(const Extracted& sub, SSetPtr ambient);

private:
  SSetPtr dom_, cod_;
  std::vector<std::vector<Simplex>> images_;  // [dim][idx]
};

SSetMap compose(const SSetMap& g, const SSetMap& f);

/// All simplicial maps A -> X, by dimension-increasing backtracking pruned
/// on face compatibility.  Deterministic lexicographic order.
std::vector<SSetMap> enumerate_maps(SSetPtr A, SSetPtr X);

/// Unpruned reference enumeration: every raw assignment of cells to
/// same-dimensional simplices, filtered by the commutation check at the end.
/// Throws when the raw assignment count exceeds the cap.
std::vector<SSetMap> enumerate_maps_naive(SSetPtr A, SSetPtr X, long long cap = 2000000);

/// Number of raw (unpruned) candidate assignments, saturating at the cap.
long long naive_candidate_count(const FinSSet& A, const FinSSet& X, long long cap);

/// Canonical signature of a simplicial set with an optional marking, by
/// iterative fingerprint refinement plus exhaustive tie-breaking.  Two
/// objects have equal signatures exactly when they are isomorphic (as
/// marked objects when markings are supplied).
std::string canonical_signature(const FinSSet& X, const CellSet* marks = nullptr);

bool isomorphic(const FinSSet& X, const FinSSet& Y);

}  // namespace msset
