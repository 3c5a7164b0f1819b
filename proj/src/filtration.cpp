#include "msset/filtration.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace msset {

std::optional<int> degeneracy_index(const MonotoneMap& second_projection) {
  int h = second_projection.last_repeat();
  if (h == 0) return std::nullopt;
  return h;
}

namespace {

struct Ctx {
  int ell, m, n;  // n = ell + 4
  std::shared_ptr<const ProductSSet> P;
  MarkedSSet Geq, Gsh, Dm;
  CellSet T_eq, T_sh, S0;

  Ctx(int ell_, int m_)
      : ell(ell_),
        m(m_),
        n(ell_ + 4),
        P(std::make_shared<const ProductSSet>(standard_ss(ell_ + 4), standard_ss(m_))),
        Geq(gadgets::delta_three(ell_, -1, gadgets::Variant::Eq)),
        Gsh(gadgets::delta_three(ell_, -1, gadgets::Variant::Sharp)),
        Dm(gadgets::delta(m_)) {
    T_eq = tensor_marks(*P, Geq, Dm);
    T_sh = tensor_marks(*P, Gsh, Dm);
    S0 = CellSet(*P->ss());
    for (CellId c : T_sh.items())
      if (!second_projection_surjective(*P, c)) S0.insert(c);
    S0 |= T_eq;
  }

  MonotoneMap pr1(CellId c) const {
    return standard(n).to_map(P->components(c).left);
  }
  MonotoneMap pr2(CellId c) const {
    return standard(m).to_map(P->components(c).right);
  }
};

bool marked_in(const CellSet& marks, const Simplex& s) {
  if (s.dim() == 0) return false;
  return s.degenerate() || marks.contains(s.base);
}

std::string cell_desc(const Ctx& c, CellId id) { return c.P->ss()->label(id); }

std::vector<ExtraMark> classify(const Ctx& c) {
  std::vector<ExtraMark> out;
  for (CellId id : c.T_sh.items()) {
    if (!second_projection_surjective(*c.P, id) || c.T_eq.contains(id)) continue;
    ExtraMark e;
    e.cell = id;
    e.r = id.dim;
    MonotoneMap p1 = c.pr1(id), p2 = c.pr2(id);
    auto h = degeneracy_index(p2);
    detail::require(h.has_value(), "extra mark with injective second projection at " +
                                       cell_desc(c, id));
    e.h = *h;
    // front face of the first projection, split at the left block
    std::vector<int> mid;
    for (int i = 0; i <= e.h; ++i) {
      int v = p1(i);
      if (v <= c.ell)
        e.sigma_prime.push_back(v);
      else
        mid.push_back(v - (c.ell + 1));
    }
    detail::require(mid.size() == 2, "front face of an extra mark is not an edge over the "
                                     "middle block at " + cell_desc(c, id));
    e.sigma_dprime = {mid[0], mid[1]};
    bool allowed = (mid[0] == 0 && mid[1] == 1) || (mid[0] == 0 && mid[1] == 3) ||
                   (mid[0] == 1 && mid[1] == 2) || (mid[0] == 2 && mid[1] == 3);
    detail::require(allowed, "extra mark with middle edge outside the expected set at " +
                                 cell_desc(c, id));
    for (size_t i = 1; i < e.sigma_prime.size(); ++i)
      detail::require(e.sigma_prime[i - 1] < e.sigma_prime[i],
                      "degenerate left part of an extra mark at " + cell_desc(c, id));

    bool face_copy = false;
    for (int v = 0; v <= c.ell && !face_copy; ++v)
      if (!p1.hits(v)) face_copy = true;
    if (face_copy) {
      e.stage = 1;
    } else if (e.sigma_dprime == std::array<int, 2>{0, 3} ||
               e.sigma_dprime == std::array<int, 2>{2, 3}) {
      e.stage = 2;
    } else if (e.sigma_dprime == std::array<int, 2>{1, 2}) {
      e.stage = 3;
      e.z = p1.last_position_of(c.ell + 3);
    } else {
      bool h3 = p1.hits(c.ell + 3), h4 = p1.hits(c.ell + 4);
      if (!(h3 && h4)) {
        e.stage = 4;
        e.z = p1.last_position_of(c.ell + 2);
      } else {
        e.z = p1.last_position_of(c.ell + 3);
        e.w = p1.last_position_of(c.ell + 2);
        e.stage = (e.w == e.z - 1) ? 5 : 6;
      }
    }
    out.push_back(std::move(e));
  }
  return out;
}

struct Runner {
  Ctx c;
  CellSet S;
  FiltrationCertificate cert;

  explicit Runner(int ell, int m) : c(ell, m), S(c.S0) {
    cert.ell = ell;
    cert.m = m;
    cert.s0_marks = c.S0.count();
    cert.target_marks = c.T_sh.count();
    cert.classifier = classify(c);
  }

  Simplex image_simplex(const std::vector<int>& first, const std::vector<int>& second,
                        const std::vector<int>& tuple) const {
    std::vector<int> lv, rv;
    lv.reserve(tuple.size());
    rv.reserve(tuple.size());
    for (int t : tuple) {
      lv.push_back(first[static_cast<size_t>(t)]);
      rv.push_back(second[static_cast<size_t>(t)]);
    }
    Simplex l = standard(c.n).from_map(MonotoneMap(std::move(lv), c.n));
    Simplex r = standard(c.m).from_map(MonotoneMap(std::move(rv), c.m));
    return c.P->pair_simplex(l, r);
  }

  void fail(StageRecord& rec, const std::string& msg) {
    rec.verified = false;
    if (rec.failure.empty()) rec.failure = msg;
    if (cert.failure.empty())
      cert.failure = "stage " + std::to_string(rec.stage) + ": " + msg;
  }

  void commit(StageRecord& rec, const std::vector<CellId>& cells) {
    for (CellId id : cells)
      if (!S.contains(id)) {
        S.insert(id);
        rec.added.push_back(id);
        if (!c.T_sh.contains(id)) rec.inside_target = false;
      }
    std::sort(rec.added.begin(), rec.added.end());
  }

  StageRecord stage1() {
    StageRecord rec;
    rec.stage = 1;
    rec.anodyne = c.ell >= 0 ? "induction" : "none";
    rec.marks_before = S.count();
    if (c.ell == -1) return rec;

    auto subcert = std::make_shared<FiltrationCertificate>(run_filtration(c.ell - 1, c.m));
    cert.sub.push_back(subcert);
    if (!subcert->passed) {
      fail(rec, "induction hypothesis failed at (" + std::to_string(c.ell - 1) + "," +
                    std::to_string(c.m) + ")");
      return rec;
    }

    Ctx sub(c.ell - 1, c.m);
    auto face_image = [&](int i, CellId id) {
      const auto& comp = sub.P->components(id);
      MonotoneMap xf = compose(MonotoneMap::coface(c.n, i), standard(sub.n).to_map(comp.left));
      Simplex l = standard(c.n).from_map(xf);
      return c.P->cell(l, comp.right);
    };

    // verify the attaching maps, then push all marks at once
    for (int i = 0; i <= c.ell; ++i) {
      FiltrationAttachment att;
      att.generator = "face(" + std::to_string(i) + ") of the induction inclusion";
      rec.attachments.push_back(att);
      for (CellId id : sub.S0.items())
        if (!S.contains(face_image(i, id))) {
          fail(rec, "stage-1 attaching map d^" + std::to_string(i) +
                        " fails marking preservation at " + cell_desc(sub, id));
          return rec;
        }
    }
    std::vector<CellId> to_add;
    for (int i = 0; i <= c.ell; ++i)
      for (CellId id : sub.T_sh.items()) to_add.push_back(face_image(i, id));
    commit(rec, to_add);
    return rec;
  }

  StageRecord stage2() {
    StageRecord rec;
    rec.stage = 2;
    rec.anodyne = "saturation";
    rec.marks_before = S.count();

    std::vector<CellId> to_add;
    for (int r = std::max(c.m, c.ell + 4); r <= c.ell + 4 + c.m; ++r) {
      int hmax = c.ell + 4 + c.m - r;
      std::vector<std::vector<int>> bs;
      std::vector<int> acc;
      std::function<void(int)> gen = [&](int pos) {
        if (pos == c.ell + 1) {
          bs.push_back(acc);
          return;
        }
        int from = pos == 0 ? 0 : acc.back();
        for (int v = from; v <= hmax; ++v) {
          acc.push_back(v);
          gen(pos + 1);
          acc.pop_back();
        }
      };
      gen(0);
      int l2 = r - c.ell - 5;
      MarkedSSet g2eq = gadgets::delta_three(c.ell, l2, gadgets::Variant::Eq);
      MarkedSSet g2sh = gadgets::delta_three(c.ell, l2, gadgets::Variant::Sharp);
      for (const auto& b : bs) {
        FiltrationAttachment att;
        att.generator = "saturation(" + std::to_string(c.ell) + "," + std::to_string(l2) + ")";
        att.r = r;
        att.b = b;
        std::vector<int> first, second;
        for (int i = 0; i <= c.ell; ++i) {
          first.push_back(i);
          second.push_back(b[static_cast<size_t>(i)]);
        }
        for (int i = c.ell + 1; i <= c.ell + 4; ++i) {
          first.push_back(i);
          second.push_back(hmax);
        }
        for (int i = c.ell + 5; i <= r; ++i) {
          first.push_back(c.ell + 4);
          second.push_back(c.m - r + i);
        }
        for (int i = 0; i <= r; ++i) att.vertices.emplace_back(first[static_cast<size_t>(i)],
                                                               second[static_cast<size_t>(i)]);
        rec.attachments.push_back(att);

        for (CellId id : g2eq.marks().items()) {
          Simplex img = image_simplex(first, second, standard(r).verts(id));
          if (!marked_in(S, img)) {
            fail(rec, "saturation attachment r=" + std::to_string(r) +
                          " is not marking-preserving at " + standard_ss(r)->label(id));
            return rec;
          }
        }
        for (CellId id : g2sh.marks().items()) {
          Simplex img = image_simplex(first, second, standard(r).verts(id));
          if (!img.degenerate()) to_add.push_back(img.base);
        }
      }
    }
    commit(rec, to_add);
    return rec;
  }

  // Vertex inserted at position z+1 for an extra mark handled by a thinness
  // stage.  The second coordinate duplicates the one at z; the first is the
  // value that keeps the list monotone.
  std::pair<int, int> inserted_vertex(int stage, const ExtraMark& e, const MonotoneMap& p1,
                                      const MonotoneMap& p2) const {
    int second = p2(e.z);
    if (stage == 4 && e.z < e.r && p1(e.z + 1) == c.ell + 3) return {c.ell + 3, second};
    return {c.ell + 4, second};
  }

  StageRecord thinness_stage(int stage_no) {
    StageRecord rec;
    rec.stage = stage_no;
    rec.anodyne = "thinness";
    rec.marks_before = S.count();

    std::map<int, std::vector<const ExtraMark*>> groups;
    for (const ExtraMark& e : cert.classifier)
      if (e.stage == stage_no && !S.contains(e.cell)) groups[stage_no == 5 ? 0 : e.z].push_back(&e);

    for (auto& [key, group] : groups) {
      (void)key;
      std::vector<CellId> to_add;
      for (const ExtraMark* e : group) {
        MonotoneMap p1 = c.pr1(e->cell), p2 = c.pr2(e->cell);
        int r = e->r, z = e->z;
        auto [va, vb] = inserted_vertex(stage_no, *e, p1, p2);
        std::vector<int> first, second;
        for (int i = 0; i <= z; ++i) {
          first.push_back(p1(i));
          second.push_back(p2(i));
        }
        first.push_back(va);
        second.push_back(vb);
        for (int i = z + 1; i <= r; ++i) {
          first.push_back(p1(i));
          second.push_back(p2(i));
        }

        FiltrationAttachment att;
        att.generator = "thinness(" + std::to_string(r + 1) + "," + std::to_string(z + 1) + ")";
        att.r = r;
        att.z = z;
        att.target = e->cell;
        for (size_t i = 0; i < first.size(); ++i) att.vertices.emplace_back(first[i], second[i]);
        rec.attachments.push_back(att);

        MarkedSSet prime = gadgets::delta_k_prime(r + 1, z + 1);
        for (CellId id : prime.marks().items()) {
          Simplex img = image_simplex(first, second, standard(r + 1).verts(id));
          if (!marked_in(S, img)) {
            fail(rec, "thinness attachment for " + cell_desc(c, e->cell) + " (z=" +
                          std::to_string(z) + ") fails marking preservation at " +
                          standard_ss(r + 1)->label(id));
            return rec;
          }
        }
        // the double-prime gadget adds exactly the (z+1)-st face, which is
        // the targeted simplex
        std::vector<int> face_tuple;
        for (int i = 0; i <= r + 1; ++i)
          if (i != z + 1) face_tuple.push_back(i);
        Simplex back = image_simplex(first, second, face_tuple);
        if (back.degenerate() || back.base != e->cell) {
          fail(rec, "thinness attachment does not recover its target at " +
                        cell_desc(c, e->cell));
          return rec;
        }
        to_add.push_back(e->cell);
      }
      commit(rec, to_add);
    }
    return rec;
  }

  void finalize() {
    cert.final_equal = (S == c.T_sh);

    CellSet extras(*c.P->ss());
    std::map<CellId, int> stage_of;
    for (const ExtraMark& e : cert.classifier) {
      extras.insert(e.cell);
      stage_of[e.cell] = e.stage;
    }

    CellSet added_all(*c.P->ss());
    int total_added = 0;
    bool disjoint = true;
    for (const StageRecord& st : cert.stages)
      for (CellId id : st.added) {
        if (added_all.contains(id)) disjoint = false;
        added_all.insert(id);
        ++total_added;
      }
    cert.added_partition_ok = disjoint && added_all == extras &&
                              total_added == extras.count();

    cert.coverage_ok = true;
    CellSet cumulative = c.S0;
    for (const StageRecord& st : cert.stages) {
      for (CellId id : st.added) cumulative.insert(id);
      for (const ExtraMark& e : cert.classifier)
        if (e.stage <= st.stage && !cumulative.contains(e.cell)) cert.coverage_ok = false;
    }

    cert.purity_ok = true;
    for (const StageRecord& st : cert.stages)
      for (CellId id : st.added) {
        auto it = stage_of.find(id);
        if (it == stage_of.end()) {
          cert.purity_ok = false;
          continue;
        }
        if (st.stage == 2) {
          if (it->second != 2) cert.stage2_ahead.push_back(id);
        } else if (it->second != st.stage) {
          cert.purity_ok = false;
        }
      }
    // stage-2 lookahead may only anticipate later stages
    for (CellId id : cert.stage2_ahead)
      if (stage_of[id] < 2) cert.purity_ok = false;

    bool verified = true, inside = true;
    for (const StageRecord& st : cert.stages) {
      verified = verified && st.verified;
      inside = inside && st.inside_target;
    }
    cert.passed = verified && inside && cert.final_equal && cert.added_partition_ok &&
                  cert.coverage_ok && cert.purity_ok;
    if (!cert.passed && cert.failure.empty()) {
      std::ostringstream os;
      os << "final checks failed:";
      if (!cert.final_equal) os << " marks differ from the sharp tensor;";
      if (!cert.added_partition_ok) os << " stage additions do not partition the classifier;";
      if (!cert.coverage_ok) os << " some classified mark is missing after its stage;";
      if (!cert.purity_ok) os << " a stage added a mark outside its class;";
      if (!inside) os << " marks left the sharp tensor;";
      cert.failure = os.str();
    }
  }

  FiltrationCertificate run() {
    cert.stages.push_back(stage1());
    if (cert.stages.back().verified) cert.stages.push_back(stage2());
    for (int s = 3; s <= 6 && cert.stages.back().verified; ++s)
      cert.stages.push_back(thinness_stage(s));
    if (!cert.stages.back().verified) {
      cert.passed = false;
      return std::move(cert);
    }
    finalize();
    return std::move(cert);
  }
};

}  // namespace

MarkedProduct build_S0(int ell, int m) {
  detail::require(ell >= -1 && m >= 0, "build_S0 needs ell >= -1 and m >= 0");
  Ctx c(ell, m);
  return MarkedProduct{c.P, c.S0};
}

std::vector<ExtraMark> classify_extra_marks(int ell, int m) {
  detail::require(ell >= -1 && m >= 0, "classify_extra_marks needs ell >= -1 and m >= 0");
  Ctx c(ell, m);
  return classify(c);
}

FiltrationCertificate run_filtration(int ell, int m) {
  detail::require(ell >= -1 && m >= 0, "run_filtration needs ell >= -1 and m >= 0");
  Runner r(ell, m);
  return r.run();
}

RemarkReport remark_characterization(int ell, int m) {
  detail::require(ell >= -1 && m >= 0, "remark_characterization needs ell >= -1 and m >= 0");
  Ctx c(ell, m);
  RemarkReport out;
  out.ell = ell;
  out.m = m;
  const Standard& left = standard(c.n);
  for (int variant = 0; variant < 2; ++variant) {
    const CellSet& T = variant == 0 ? c.T_eq : c.T_sh;
    const MarkedSSet& G = variant == 0 ? c.Geq : c.Gsh;
    for (int d = 1; d <= c.P->ss()->top_dim(); ++d)
      for (int i = 0; i < c.P->ss()->cell_count(d); ++i) {
        CellId id{d, i};
        ++out.cells_checked;
        bool direct = T.contains(id);
        MonotoneMap p2 = c.pr2(id);
        bool criterion = false;
        if (auto h = degeneracy_index(p2)) {
          auto [a1, a2] = face_partition(*h, d - *h);
          (void)a2;
          MonotoneMap front = compose(c.pr1(id), a1);
          criterion = G.marked(left.from_map(front));
        }
        if (direct != criterion) {
          out.ok = false;
          out.mismatches.push_back(std::string(variant == 0 ? "eq " : "sharp ") +
                                   c.P->ss()->label(id) + ": tensor says " +
                                   (direct ? "marked" : "unmarked") + ", criterion says " +
                                   (criterion ? "marked" : "unmarked"));
        }
      }
  }
  return out;
}

TrivialityCertificate triviality_filtration(int p, int m, int n) {
  detail::require(p >= 1 && m >= 0 && n >= 0, "triviality filtration needs p >= 1, m, n >= 0");
  detail::require(p > n, "triviality filtration needs p > n");
  TrivialityCertificate out;
  out.p = p;
  out.m = m;
  out.n = n;

  ProductSSet P(standard_ss(p), standard_ss(m));
  MarkedSSet Xt = gadgets::delta_t(p), Xp = gadgets::delta(p), Y = gadgets::delta(m);
  CellSet target = tensor_marks(P, Xt, Y);
  CellSet plain = tensor_marks(P, Xp, Y);
  CellSet dom = plain;
  for (CellId c : target.items())
    if (!second_projection_surjective(P, c)) dom.insert(c);

  out.low_dims_agree = true;
  for (int d = 1; d < p; ++d)
    if (target.items_dim(d) != dom.items_dim(d)) out.low_dims_agree = false;
  if (!out.low_dims_agree)
    out.failure = "marked cells below the threshold dimension differ";

  CellSet result = dom;
  bool dims_ok = true;
  for (CellId c : target.items())
    if (!dom.contains(c)) {
      if (c.dim < p || c.dim <= n) dims_ok = false;
      out.attached.push_back(c);
      result.insert(c);
    }
  if (!dims_ok && out.failure.empty())
    out.failure = "an attachment would need an illegal triviality extension";

  out.final_equal = result == target && dom.subset_of(target);
  if (!out.final_equal && out.failure.empty())
    out.failure = "triviality attachments do not reach the target marking";
  out.passed = out.low_dims_agree && dims_ok && out.final_equal;
  return out;
}

}  // namespace msset
