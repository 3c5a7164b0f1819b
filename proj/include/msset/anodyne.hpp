#pragma once

#include <optional>

#include "msset/marked.hpp"

namespace msset {

/// One of the elementary anodyne extensions, realized as a concrete
/// inclusion of marked objects.
struct AnodyneGen {
  enum class Kind { Horn, Thinness, Saturation, Triviality };
  Kind kind;
  int m = 0, k = 0, ell = 0, ell2 = -1, p = 0;
  MarkedSSet domain, codomain;
  SSetMap inclusion;  // domain.ss() -> codomain.ss()

  bool entire() const { return kind != Kind::Horn; }
  std::string name() const;
  MarkedMap as_map() const { return MarkedMap{domain, codomain, inclusion}; }
};

AnodyneGen horn_extension(int m, int k);       // horn(m,k) -> delta_k(m,k), m >= 1
AnodyneGen thinness_extension(int m, int k);   // prime -> double prime, m >= 2
AnodyneGen saturation_extension(int ell);      // left: eq -> sharp on delta_three(ell, -1)
AnodyneGen saturation_extension2(int lp, int ell);  // two-sided variant
AnodyneGen triviality_extension(int p);        // delta(p) -> delta_t(p), p >= 1

enum class CofibrationKind { Boundary, Marking };
MarkedMap cofibration_generator(CofibrationKind kind, int m);

// ---------------------------------------------------------------------------
// Lifting

struct LiftResult {
  bool ok = true;
  int maps_checked = 0;
  /// A non-extendable map, described cell by cell, when ok is false.
  std::string counterexample;
};

/// Right lifting property of X against an inclusion of marked objects:
/// every marked map from the domain extends along it.
LiftResult has_rlp(const MarkedMap& inc, const MarkedSSet& X);

/// Reference implementation: enumerate all marked maps out of the codomain
/// and compare restriction sets.  Throws past the candidate cap.
LiftResult has_rlp_naive(const MarkedMap& inc, const MarkedSSet& X, long long cap = 2000000);

struct LiftCheck {
  std::string generator;
  bool ok;
  int maps_checked;
  std::string counterexample;
};

struct LiftingVerdict {
  std::string kind;  // which definition was checked
  bool pass = true;
  std::vector<LiftCheck> checked;
  std::vector<std::pair<std::string, int>> bounds;

  void record(const AnodyneGen& g, const LiftResult& r);
};

/// Complicial-set check, truncated at generator dimension D.
LiftingVerdict is_complicial(const MarkedSSet& X, int D);
/// Saturated complicial check: horn/thinness up to D, saturations up to L.
LiftingVerdict is_saturated(const MarkedSSet& X, int D, int L);
/// Saturated N-trivial check: adds triviality extensions for N < p <= D
/// (saturations are bounded by D as well).
LiftingVerdict is_n_complicial(const MarkedSSet& X, int N, int D);

// ---------------------------------------------------------------------------
// Leibniz squares and entire pushouts

/// A marked subobject of a fixed ambient object: a face-closed cell set
/// together with the marks it carries.
struct MarkedSub {
  CellSet cells, marks;
};

/// The subobject picture of an inclusion of marked objects.
MarkedSub subobject(const MarkedMap& inc);

enum class TensorKind { Pretensor, Tensor };

/// The square induced by two subobject inclusions under a tensor-style
/// product: the union piece inside the full product of the targets.
struct LeibnizSquare {
  std::shared_ptr<const ProductSSet> prod;
  CellSet cod_marks;
  CellSet dom_cells, dom_marks;

  bool dom_marks_included = false;  // dom_marks is a subset of cod_marks
  bool entire() const;              // dom_cells covers every cell
  bool isomorphism() const;
};

LeibnizSquare leibniz(TensorKind kind, const MarkedMap& f, const MarkedMap& g);

/// Entire pushout: add to X the image marks of an entire generator along an
/// attaching map of its domain.  The underlying object never changes.
MarkedSSet attach_marks(const MarkedSSet& X, const AnodyneGen& gen, const MarkedMap& attach);

}  // namespace msset
