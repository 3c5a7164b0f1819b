#include "msset/anodyne.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace msset {

std::string AnodyneGen::name() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Horn: os << "horn(" << m << "," << k << ")"; break;
    case Kind::Thinness: os << "thinness(" << m << "," << k << ")"; break;
    case Kind::Saturation:
      if (ell2 >= -1 && ell2 != -1)
        os << "saturation(" << ell << "," << ell2 << ")";
      else
        os << "saturation(" << ell << ")";
      break;
    case Kind::Triviality: os << "triviality(" << p << ")"; break;
  }
  return os.str();
}

AnodyneGen horn_extension(int m, int k) {
  detail::require(m >= 1 && k >= 0 && k <= m, "horn extension needs m >= 1, 0 <= k <= m");
  MarkedSSet dom = gadgets::horn(m, k);
  MarkedSSet cod = gadgets::delta_k(m, k);
  Extracted ex = extract(*standard_ss(m), horn_cells(m, k));
  SSetMap inc = SSetMap::inclusion(ex, standard_ss(m));
  // the freshly extracted subcomplex matches the cached horn gadget cell for cell
  SSetMap fixed(dom.ss(), cod.ss());
  for (int d = 0; d <= dom.ss()->top_dim(); ++d)
    for (int i = 0; i < dom.ss()->cell_count(d); ++i) fixed.set(CellId{d, i}, inc.image(CellId{d, i}));
  return AnodyneGen{AnodyneGen::Kind::Horn, m, k, 0, -1, 0, dom, cod, std::move(fixed)};
}

AnodyneGen thinness_extension(int m, int k) {
  detail::require(m >= 2 && k >= 0 && k <= m, "thinness extension needs m >= 2, 0 <= k <= m");
  MarkedSSet dom = gadgets::delta_k_prime(m, k);
  MarkedSSet cod = gadgets::delta_k_double_prime(m, k);
  return AnodyneGen{AnodyneGen::Kind::Thinness, m,   k,
                    0,                          -1,  0,
                    dom,                        cod, SSetMap::identity(standard_ss(m))};
}

AnodyneGen saturation_extension(int ell) {
  detail::require(ell >= -1, "saturation extension needs ell >= -1");
  MarkedSSet dom = gadgets::delta_three(ell, -1, gadgets::Variant::Eq);
  MarkedSSet cod = gadgets::delta_three(ell, -1, gadgets::Variant::Sharp);
  return AnodyneGen{AnodyneGen::Kind::Saturation, 0,   0,
                    ell,                          -1,  0,
                    dom,                          cod, SSetMap::identity(dom.ss())};
}

AnodyneGen saturation_extension2(int lp, int ell) {
  detail::require(lp >= -1 && ell >= -1, "saturation extension needs lp, ell >= -1");
  MarkedSSet dom = gadgets::delta_three(lp, ell, gadgets::Variant::Eq);
  MarkedSSet cod = gadgets::delta_three(lp, ell, gadgets::Variant::Sharp);
  AnodyneGen g{AnodyneGen::Kind::Saturation, 0,   0,
               lp,                           ell, 0,
               dom,                          cod, SSetMap::identity(dom.ss())};
  return g;
}

AnodyneGen triviality_extension(int p) {
  detail::require(p >= 1, "triviality extension needs p >= 1");
  MarkedSSet dom = gadgets::delta(p);
  MarkedSSet cod = gadgets::delta_t(p);
  return AnodyneGen{AnodyneGen::Kind::Triviality, 0,   0,
                    0,                            -1,  p,
                    dom,                          cod, SSetMap::identity(standard_ss(p))};
}

MarkedMap cofibration_generator(CofibrationKind kind, int m) {
  if (kind == CofibrationKind::Boundary) {
    detail::require(m >= 0, "boundary inclusion needs m >= 0");
    MarkedSSet dom = gadgets::boundary(m);
    MarkedSSet cod = gadgets::delta(m);
    Extracted ex = extract(*standard_ss(m), boundary_cells(m));
    SSetMap inc = SSetMap::inclusion(ex, standard_ss(m));
    SSetMap fixed(dom.ss(), cod.ss());
    for (int d = 0; d <= dom.ss()->top_dim(); ++d)
      for (int i = 0; i < dom.ss()->cell_count(d); ++i)
        fixed.set(CellId{d, i}, inc.image(CellId{d, i}));
    return MarkedMap{dom, cod, std::move(fixed)};
  }
  detail::require(m >= 1, "marking inclusion needs m >= 1");
  MarkedSSet dom = gadgets::delta(m);
  MarkedSSet cod = gadgets::delta_t(m);
  return MarkedMap{dom, cod, SSetMap::identity(standard_ss(m))};
}

namespace {

std::string describe_map(const SSetMap& f) {
  std::ostringstream os;
  for (int d = 0; d <= f.dom()->top_dim(); ++d)
    for (int i = 0; i < f.dom()->cell_count(d); ++i) {
      CellId c{d, i};
      os << f.dom()->label(c) << " -> " << f.cod()->describe(f.image(c)) << "; ";
    }
  return os.str();
}

/// Search for a marked extension of f along the inclusion inc.
bool extension_exists(const MarkedMap& inc, const SSetMap& f, const MarkedSSet& X) {
  const SSetPtr& B = inc.cod.ss();
  // forced values on the image cells of the inclusion
  std::vector<std::vector<const Simplex*>> forced(static_cast<size_t>(B->top_dim() + 1));
  for (int d = 0; d <= B->top_dim(); ++d)
    forced[static_cast<size_t>(d)].assign(static_cast<size_t>(B->cell_count(d)), nullptr);
  std::vector<Simplex> forced_store;
  forced_store.reserve(static_cast<size_t>(inc.dom.ss()->total_cells()));
  for (int d = 0; d <= inc.dom.ss()->top_dim(); ++d)
    for (int i = 0; i < inc.dom.ss()->cell_count(d); ++i) {
      const Simplex& img = inc.map.image(CellId{d, i});
      forced_store.push_back(f.image(CellId{d, i}));
      forced[static_cast<size_t>(img.base.dim)][static_cast<size_t>(img.base.idx)] =
          &forced_store.back();
    }

  std::vector<CellId> order = B->cells();
  SSetMap g(B, X.ss());
  std::vector<std::vector<Simplex>> candidates(static_cast<size_t>(B->top_dim() + 1));
  for (int d = 0; d <= B->top_dim(); ++d)
    if (B->cell_count(d) > 0) candidates[static_cast<size_t>(d)] = X.ss()->simplices(d);

  std::function<bool(size_t)> rec = [&](size_t pos) -> bool {
    if (pos == order.size()) return true;
    CellId c = order[pos];
    auto try_one = [&](const Simplex& img) -> bool {
      if (inc.cod.marked(c) && !X.marked(img)) return false;
      for (int j = 0; j <= c.dim && c.dim >= 1; ++j) {
        if (g.apply(B->face(c, j)) != X.ss()->act(img, MonotoneMap::coface(c.dim, j)))
          return false;
      }
      g.set(c, img);
      return rec(pos + 1);
    };
    const Simplex* fc = forced[static_cast<size_t>(c.dim)][static_cast<size_t>(c.idx)];
    if (fc != nullptr) return try_one(*fc);
    for (const Simplex& img : candidates[static_cast<size_t>(c.dim)])
      if (try_one(img)) return true;
    return false;
  };
  return rec(0);
}

}  // namespace

LiftResult has_rlp(const MarkedMap& inc, const MarkedSSet& X) {
  detail::require(inc.map.is_inclusion(), "lifting checks need a subobject inclusion");
  LiftResult out;
  for (const SSetMap& f : enumerate_marked_maps(inc.dom, X)) {
    ++out.maps_checked;
    if (!extension_exists(inc, f, X)) {
      out.ok = false;
      out.counterexample = describe_map(f);
      return out;
    }
  }
  return out;
}

LiftResult has_rlp_naive(const MarkedMap& inc, const MarkedSSet& X, long long cap) {
  detail::require(inc.map.is_inclusion(), "lifting checks need a subobject inclusion");
  long long n = naive_candidate_count(*inc.cod.ss(), *X.ss(), cap);
  detail::require(n <= cap, "naive lifting check exceeds the candidate cap");
  LiftResult out;
  std::set<SSetMap> restrictions;
  for (const SSetMap& g : enumerate_marked_maps(inc.cod, X))
    restrictions.insert(compose(g, inc.map));
  for (const SSetMap& f : enumerate_marked_maps(inc.dom, X)) {
    ++out.maps_checked;
    if (restrictions.find(f) == restrictions.end()) {
      out.ok = false;
      out.counterexample = describe_map(f);
      return out;
    }
  }
  return out;
}

void LiftingVerdict::record(const AnodyneGen& g, const LiftResult& r) {
  checked.push_back(LiftCheck{g.name(), r.ok, r.maps_checked, r.counterexample});
  if (!r.ok) pass = false;
}

LiftingVerdict is_complicial(const MarkedSSet& X, int D) {
  detail::require(D >= 1, "truncation bound must be at least 1");
  LiftingVerdict v;
  v.kind = "complicial";
  v.bounds.emplace_back("dim", D);
  for (int m = 1; m <= D; ++m)
    for (int k = 0; k <= m; ++k) {
      AnodyneGen g = horn_extension(m, k);
      v.record(g, has_rlp(g.as_map(), X));
    }
  for (int m = 2; m <= D; ++m)
    for (int k = 0; k <= m; ++k) {
      AnodyneGen g = thinness_extension(m, k);
      v.record(g, has_rlp(g.as_map(), X));
    }
  return v;
}

LiftingVerdict is_saturated(const MarkedSSet& X, int D, int L) {
  LiftingVerdict v = is_complicial(X, D);
  v.kind = "saturated";
  v.bounds.emplace_back("ell", L);
  for (int ell = -1; ell <= L; ++ell) {
    AnodyneGen g = saturation_extension(ell);
    v.record(g, has_rlp(g.as_map(), X));
  }
  return v;
}

LiftingVerdict is_n_complicial(const MarkedSSet& X, int N, int D) {
  detail::require(N >= 0, "triviality threshold must be >= 0");
  LiftingVerdict v = is_saturated(X, D, D);
  v.kind = "saturated " + std::to_string(N) + "-complicial";
  v.bounds.emplace_back("n", N);
  for (int p = N + 1; p <= D; ++p) {
    AnodyneGen g = triviality_extension(p);
    v.record(g, has_rlp(g.as_map(), X));
  }
  return v;
}

MarkedSub subobject(const MarkedMap& inc) {
  detail::require(inc.map.is_inclusion(), "subobject picture needs an inclusion");
  MarkedSub out{CellSet(*inc.cod.ss()), CellSet(*inc.cod.ss())};
  for (int d = 0; d <= inc.dom.ss()->top_dim(); ++d)
    for (int i = 0; i < inc.dom.ss()->cell_count(d); ++i) {
      CellId c{d, i};
      CellId img = inc.map.image(c).base;
      out.cells.insert(img);
      if (inc.dom.marked(c)) out.marks.insert(img);
    }
  detail::require(is_face_closed(*inc.cod.ss(), out.cells),
                  "subobject picture: image is not face-closed");
  return out;
}

bool LeibnizSquare::entire() const {
  return dom_cells.count() == prod->ss()->total_cells();
}

bool LeibnizSquare::isomorphism() const { return entire() && dom_marks == cod_marks; }

namespace {
CellSet kind_marks(TensorKind kind, const ProductSSet& P, const MarkedSSet& X,
                   const MarkedSSet& Y) {
  return kind == TensorKind::Tensor ? tensor_marks(P, X, Y) : pretensor_marks(P, X, Y);
}
}  // namespace

LeibnizSquare leibniz(TensorKind kind, const MarkedMap& f, const MarkedMap& g) {
  f.require_valid();
  g.require_valid();
  MarkedSub A = subobject(f);  // inside B
  MarkedSub C = subobject(g);  // inside D
  const MarkedSSet& B = f.cod;
  const MarkedSSet& D = g.cod;

  LeibnizSquare out;
  out.prod = std::make_shared<const ProductSSet>(B.ss(), D.ss());
  out.cod_marks = kind_marks(kind, *out.prod, B, D);

  CellSet piece1_marks = kind_marks(kind, *out.prod, B, MarkedSSet(D.ss(), C.marks));
  CellSet piece2_marks = kind_marks(kind, *out.prod, MarkedSSet(B.ss(), A.marks), D);

  out.dom_cells = CellSet(*out.prod->ss());
  out.dom_marks = CellSet(*out.prod->ss());
  for (int d = 0; d <= out.prod->ss()->top_dim(); ++d)
    for (int i = 0; i < out.prod->ss()->cell_count(d); ++i) {
      CellId c{d, i};
      const auto& comp = out.prod->components(c);
      bool in1 = C.cells.contains(comp.right.base);
      bool in2 = A.cells.contains(comp.left.base);
      if (in1 || in2) out.dom_cells.insert(c);
      if ((in1 && piece1_marks.contains(c)) || (in2 && piece2_marks.contains(c)))
        out.dom_marks.insert(c);
    }
  out.dom_marks_included = out.dom_marks.subset_of(out.cod_marks);
  return out;
}

MarkedSSet attach_marks(const MarkedSSet& X, const AnodyneGen& gen, const MarkedMap& attach) {
  detail::require(gen.entire(), "attach_marks needs an entire generator");
  detail::require(attach.dom.ss().get() == gen.domain.ss().get(),
                  "attaching map must start at the generator domain");
  detail::require(attach.cod.ss().get() == X.ss().get(), "attaching map must land in X");
  attach.require_valid();
  CellSet marks = X.marks();
  for (CellId c : gen.codomain.marks().items()) {
    Simplex img = attach.map.apply(gen.codomain.ss()->simplex(c));
    if (!img.degenerate()) marks.insert(img.base);
  }
  return MarkedSSet(X.ss(), std::move(marks));
}

}  // namespace msset
