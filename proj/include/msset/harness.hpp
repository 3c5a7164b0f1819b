#pragma once

#include "msset/anodyne.hpp"

namespace msset {

/// A named marked object in the verification corpus.
struct CorpusObject {
  std::string name;
  MarkedSSet obj;
};

struct CorpusOptions {
  int max_m = 3;       // standard-simplex gadgets up to this dimension
  int max_ell = 1;     // saturation gadgets up to this left length
  int cell_budget = 60;  // derived joins/products are kept under this size
  bool derived = true;   // include pairwise joins/products of the seeds
};

/// Gadgets in the default ranges plus pairwise joins and products within
/// the cell budget.  Every object is validated on construction.
std::vector<CorpusObject> default_corpus(const CorpusOptions& opt = {});

struct CaseResult {
  std::string name;
  bool ok = true;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  bool pass = true;
  int cases = 0;
  std::vector<CaseResult> failures;
  std::vector<CaseResult> notes;  // informative results (e.g. found witnesses)

  void record(const std::string& name, bool ok, const std::string& detail = "");
};

/// Marking inclusion of the pretensor into the tensor, with identical
/// underlying objects, on every corpus pair.
SuiteReport suite_equivalent_tensors(const std::vector<CorpusObject>& corpus);

/// Duality: the opposite exchanges tensor factors, the opposite is an
/// involution, and the gadget dualities (horn, thinness, triviality).
SuiteReport suite_op_duality(const std::vector<CorpusObject>& corpus);

/// The pretensor preserves unions of subobjects in each variable.
SuiteReport suite_colimit_preservation(const std::vector<CorpusObject>& corpus);

/// Tensor associativity and unitality on corpus triples within the budget;
/// also searches for (and records) a pretensor associativity counterexample.
SuiteReport suite_monoidal(const std::vector<CorpusObject>& corpus);

std::vector<SuiteReport> run_all_suites(const std::vector<CorpusObject>& corpus);

}  // namespace msset
