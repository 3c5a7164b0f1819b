#pragma once

#include <array>
#include <memory>
#include <optional>

#include "msset/anodyne.hpp"

namespace msset {

/// Largest 1 <= h <= r at which the map repeats a value, or absent when it
/// is injective.
std::optional<int> degeneracy_index(const MonotoneMap& second_projection);

/// Comparison of the cleaving marking of the eq/sharp tensors against the
/// degeneracy-index criterion (second projection degenerate at h, and the
/// front h-face of the first projection marked in the join gadget).
struct RemarkReport {
  int ell, m;
  bool ok = true;
  int cells_checked = 0;
  std::vector<std::string> mismatches;
};
RemarkReport remark_characterization(int ell, int m);

/// One cell marked in the sharp tensor but not in the base union, with its
/// decoration: degeneracy index h, the split of the front face into a part
/// in the left join factor and an edge of the middle 3-simplex, and the
/// stage predicate that claims it.
struct ExtraMark {
  CellId cell;
  int r = 0, h = 0, stage = 0;
  std::vector<int> sigma_prime;       // front-face vertices <= ell
  std::array<int, 2> sigma_dprime{};  // middle-block edge, 0-based
  int z = -1, w = -1;                 // insertion indices used by stages 3-6
};

struct FiltrationAttachment {
  std::string generator;
  int r = 0, z = -1;
  std::vector<int> b;                           // stage-2 height sequence
  std::vector<std::pair<int, int>> vertices;    // the attaching map on vertices
  CellId target;                                // cell marked by this attachment (stages 3-6)
};

struct StageRecord {
  int stage = 0;
  std::string anodyne;  // "induction", "saturation", "thinness", or "none"
  int marks_before = 0;
  std::vector<CellId> added;
  std::vector<FiltrationAttachment> attachments;
  bool verified = true;
  bool entire = true;
  bool inside_target = true;  // marks stay inside the sharp tensor
  std::string failure;
};

struct FiltrationCertificate {
  int ell = 0, m = 0;
  bool passed = false;
  std::string failure;
  int s0_marks = 0, target_marks = 0;
  std::vector<ExtraMark> classifier;
  std::vector<StageRecord> stages;
  bool final_equal = false;
  bool added_partition_ok = false;  // stage additions partition the classifier output
  bool coverage_ok = false;         // after stage i, every mark classified <= i is present
  bool purity_ok = false;           // stages 1,3,4,5,6 add only their own class
  std::vector<CellId> stage2_ahead;  // extras marked by stage 2 ahead of their class
  std::vector<std::shared_ptr<FiltrationCertificate>> sub;  // stage-1 induction runs
};

/// The base object: union of the sharp tensor against the boundary and the
/// eq tensor against the whole simplex, inside the sharp tensor.
MarkedProduct build_S0(int ell, int m);

std::vector<ExtraMark> classify_extra_marks(int ell, int m);

FiltrationCertificate run_filtration(int ell, int m);

struct TrivialityCertificate {
  int p = 0, m = 0, n = 0;
  bool passed = false;
  std::string failure;
  bool low_dims_agree = false;  // marked cells below dimension p coincide
  std::vector<CellId> attached;
  bool final_equal = false;
};

/// Certifies that triviality attachments close the gap between the
/// boundary Leibniz piece and the full tensor against a marked top cell.
TrivialityCertificate triviality_filtration(int p, int m, int n);

}  // namespace msset
