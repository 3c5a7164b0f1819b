#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "msset/filtration.hpp"

#include <map>

using namespace msset;

namespace {
std::map<int, int> stage_histogram(const std::vector<ExtraMark>& classifier) {
  std::map<int, int> h;
  for (const auto& e : classifier) h[e.stage]++;
  return h;
}
std::map<int, size_t> added_histogram(const FiltrationCertificate& cert) {
  std::map<int, size_t> h;
  for (const auto& st : cert.stages) h[st.stage] = st.added.size();
  return h;
}
}  // namespace

TEST_CASE("degeneracy index") {
  auto [p1, p2] = degeneracy_partition(2, 1);
  (void)p1;
  CHECK(degeneracy_index(p2) == 2);  // last repeat of the vertical projection

  CHECK(!degeneracy_index(MonotoneMap({0, 1, 2}, 2)).has_value());
  // constant second projection: the index is the dimension itself
  for (int r = 1; r <= 4; ++r)
    CHECK(degeneracy_index(MonotoneMap::constant(r, 0, 0)) == r);
}

TEST_CASE("extra-mark classification at the smallest size") {
  auto extras = classify_extra_marks(-1, 0);
  REQUIRE(extras.size() == 4);
  const Standard& s3 = standard(3);
  std::map<CellId, const ExtraMark*> by_cell;
  for (const auto& e : extras) by_cell[e.cell] = &e;

  ProductSSet P(standard_ss(3), standard_ss(0));
  auto cell_of_edge = [&](int a, int b) {
    Simplex left{s3.cell({a, b}), MonotoneMap::identity(1)};
    Simplex right{CellId{0, 0}, MonotoneMap({0, 0}, 0)};
    return P.cell(left, right);
  };

  struct Expect {
    int a, b, stage;
  };
  for (Expect e : {Expect{0, 3, 2}, Expect{2, 3, 2}, Expect{1, 2, 3}, Expect{0, 1, 4}}) {
    auto it = by_cell.find(cell_of_edge(e.a, e.b));
    REQUIRE(it != by_cell.end());
    CHECK(it->second->stage == e.stage);
    CHECK(it->second->h == 1);
    CHECK(it->second->sigma_prime.empty());
    CHECK(it->second->sigma_dprime == std::array<int, 2>{e.a, e.b});
  }
}

TEST_CASE("every extra mark has a surjective second projection and an allowed edge") {
  for (int ell = -1; ell <= 0; ++ell)
    for (int m = 0; m <= 2; ++m) {
      auto extras = classify_extra_marks(ell, m);
      for (const auto& e : extras) {
        CHECK(e.h >= 1);
        bool allowed = e.sigma_dprime == std::array<int, 2>{0, 1} ||
                       e.sigma_dprime == std::array<int, 2>{0, 3} ||
                       e.sigma_dprime == std::array<int, 2>{1, 2} ||
                       e.sigma_dprime == std::array<int, 2>{2, 3};
        CHECK(allowed);
        CHECK(e.stage >= 1);
        CHECK(e.stage <= 6);
      }
    }
}

TEST_CASE("base object of the filtration") {
  // at m = 0 the base marking is exactly the eq tensor, here the eq gadget
  MarkedProduct s0 = build_S0(-1, 0);
  CHECK(s0.marks.count() == 7);
  CHECK(s0.prod->ss()->total_cells() == standard_ss(3)->total_cells());

  MarkedProduct s1 = build_S0(-1, 1);
  MarkedSSet G = gadgets::delta_three(-1, -1, gadgets::Variant::Sharp);
  MarkedSSet Y = gadgets::delta(1);
  auto full = tensor(G, Y);
  CHECK(s1.marks.subset_of(full.marks));
}

TEST_CASE("remark characterization on the desk-scale grid") {
  for (int ell = -1; ell <= 1; ++ell)
    for (int m = 0; m <= 2; ++m) {
      if (ell == 1 && m == 2) continue;  // covered by the acceptance suite
      RemarkReport r = remark_characterization(ell, m);
      CHECK(r.ok);
      CHECK(r.cells_checked > 0);
      CHECK(r.mismatches.empty());
    }
}

TEST_CASE("filtration certificate at (-1,0)") {
  FiltrationCertificate cert = run_filtration(-1, 0);
  CHECK(cert.passed);
  CHECK(cert.classifier.size() == 4);
  CHECK(cert.s0_marks == 7);
  CHECK(cert.target_marks == 11);
  auto addh = added_histogram(cert);
  CHECK(addh[1] == 0);
  CHECK(addh[2] == 4);  // the single saturation attachment marks all four edges
  CHECK(addh[3] == 0);
  CHECK(addh[4] == 0);
  CHECK(cert.stage2_ahead.size() == 2);
  CHECK(cert.final_equal);
  CHECK(cert.added_partition_ok);
  CHECK(cert.coverage_ok);
  CHECK(cert.purity_ok);

  // the one stage-2 attachment is the identity path at height zero
  REQUIRE(cert.stages[1].attachments.size() == 1);
  const auto& att = cert.stages[1].attachments[0];
  CHECK(att.r == 3);
  CHECK(att.b.empty());
  CHECK(att.vertices ==
        std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {2, 0}, {3, 0}});
}

TEST_CASE("filtration certificate at (-1,1)") {
  FiltrationCertificate cert = run_filtration(-1, 1);
  CHECK(cert.passed);
  CHECK(cert.classifier.size() == 7);
  auto clh = stage_histogram(cert.classifier);
  CHECK(clh[2] == 2);
  CHECK(clh[3] == 2);
  CHECK(clh[4] == 3);
  auto addh = added_histogram(cert);
  CHECK(addh[2] == 4);
  CHECK(addh[3] == 1);
  CHECK(addh[4] == 2);
  CHECK(cert.stage2_ahead.size() == 2);

  // the single stage-3 attachment inserts the vertex (3,1) after position 2
  REQUIRE(cert.stages[2].attachments.size() == 1);
  const auto& att = cert.stages[2].attachments[0];
  CHECK(att.z == 2);
  CHECK(att.vertices ==
        std::vector<std::pair<int, int>>{{1, 0}, {2, 0}, {2, 1}, {3, 1}});
  CHECK(att.generator == "thinness(3,3)");
}

TEST_CASE("filtration passes across the default grid") {
  for (int ell = -1; ell <= 0; ++ell)
    for (int m = 0; m <= 2; ++m) {
      FiltrationCertificate cert = run_filtration(ell, m);
      CHECK(cert.passed);
      // stage 1 is trivial exactly when there is no left join factor
      CHECK((ell == -1) == cert.stages[0].added.empty());
    }
}

TEST_CASE("stage 1 reuses the induction certificates") {
  FiltrationCertificate cert = run_filtration(0, 1);
  CHECK(cert.passed);
  REQUIRE(cert.sub.size() == 1);
  CHECK(cert.sub[0]->ell == -1);
  CHECK(cert.sub[0]->m == 1);
  CHECK(cert.sub[0]->passed);
  CHECK(cert.stages[0].added.size() == 7);  // the whole (-1,1) extra set, one face copy
  CHECK(cert.stages[0].attachments.size() == 1);
}

TEST_CASE("stage 6 is exercised at m = 3") {
  FiltrationCertificate cert = run_filtration(-1, 3);
  CHECK(cert.passed);
  auto addh = added_histogram(cert);
  CHECK(addh[5] == 2);
  CHECK(addh[6] == 1);
  // stage-6 targets carry both insertion indices
  bool found = false;
  for (const auto& e : cert.classifier)
    if (e.stage == 6) {
      found = true;
      CHECK(e.z > e.w + 1);
      CHECK(e.w >= e.h);
    }
  CHECK(found);
}

TEST_CASE("triviality filtrations") {
  for (int m = 0; m <= 2; ++m) {
    TrivialityCertificate a = triviality_filtration(1, m, 0);
    CHECK(a.passed);
    CHECK(a.low_dims_agree);
    TrivialityCertificate b = triviality_filtration(2, m, 1);
    CHECK(b.passed);
    CHECK(b.low_dims_agree);
  }
  CHECK(triviality_filtration(1, 1, 0).attached.size() == 1);
  CHECK(triviality_filtration(2, 1, 1).attached.size() == 2);
  // every attachment lands in dimension >= p, above the threshold
  TrivialityCertificate c = triviality_filtration(2, 2, 1);
  for (CellId id : c.attached) CHECK(id.dim >= 2);
  CHECK_THROWS_AS(triviality_filtration(1, 0, 1), Error);
}

TEST_CASE("certificates expose failures instead of lying") {
  // feeding an out-of-range parameter is rejected up front
  CHECK_THROWS_AS(run_filtration(-2, 0), Error);
  CHECK_THROWS_AS(classify_extra_marks(-1, -1), Error);
}
