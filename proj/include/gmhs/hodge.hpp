// Pure and mixed Hodge structures over Q, with the Hodge filtration living
// on the Q(i)-span of H_Q. Morphisms, strictness, graded pieces, kernels
// and cokernels.

#pragma once

#include <gmhs/report.hpp>
#include <gmhs/subspace.hpp>

#include <algorithm>
#include <map>
#include <string>
#include <utility>

namespace gmhs {

/// Increasing filtration W_r of Q^dim stored as a sparse step map. W_r is the
/// step at the largest stored index <= r, and 0 below the lowest index.
/// An empty map stands for W_r = everything for r >= 0, 0 for r < 0.
struct WeightFiltration {
  std::size_t dim = 0;
  std::map<int, QSubspace> steps;

  [[nodiscard]] QSubspace at(int r) const {
    if (steps.empty()) return r >= 0 ? QSubspace::full(dim) : QSubspace::zero(dim);
    auto it = steps.upper_bound(r);
    if (it == steps.begin()) return QSubspace::zero(dim);
    return std::prev(it)->second;
  }
  [[nodiscard]] int lo() const { return steps.empty() ? 0 : steps.begin()->first; }
  [[nodiscard]] int hi() const { return steps.empty() ? 0 : steps.rbegin()->first; }

  [[nodiscard]] ValidationReport validate() const {
    ValidationReport rep;
    const QSubspace* prev = nullptr;
    for (const auto& [r, s] : steps) {
      if (s.ambient_dim() != dim) {
        rep.add("W_" + std::to_string(r) + " ambient dimension", false,
                "expected " + std::to_string(dim) + ", got " + std::to_string(s.ambient_dim()));
        return rep;
      }
      if (prev && !s.contains(*prev))
        rep.add("W increasing at " + std::to_string(r), false, "W_{r-1} not contained in W_r");
      prev = &s;
    }
    rep.add("W exhaustive", at(hi()).is_full(), "largest step must be the whole space");
    return rep;
  }

  friend bool operator==(const WeightFiltration&, const WeightFiltration&) = default;
};

/// Decreasing filtration F^p of Q(i)^dim. F^p is the step at the largest
/// stored index <= p, everything below the lowest index and 0 above the
/// highest. An empty map stands for F^0 = everything, F^1 = 0.
struct HodgeFiltration {
  std::size_t dim = 0;
  std::map<int, CSubspace> steps;

  [[nodiscard]] CSubspace at(int p) const {
    if (steps.empty()) return p <= 0 ? CSubspace::full(dim) : CSubspace::zero(dim);
    if (p < steps.begin()->first) return CSubspace::full(dim);
    if (p > steps.rbegin()->first) return CSubspace::zero(dim);
    return std::prev(steps.upper_bound(p))->second;
  }
  [[nodiscard]] int lo() const { return steps.empty() ? 0 : steps.begin()->first; }
  [[nodiscard]] int hi() const { return steps.empty() ? 0 : steps.rbegin()->first; }

  [[nodiscard]] ValidationReport validate() const {
    ValidationReport rep;
    const CSubspace* prev = nullptr;
    for (const auto& [p, s] : steps) {
      if (s.ambient_dim() != dim) {
        rep.add("F^" + std::to_string(p) + " ambient dimension", false,
                "expected " + std::to_string(dim) + ", got " + std::to_string(s.ambient_dim()));
        return rep;
      }
      if (prev && !prev->contains(s))
        rep.add("F decreasing at " + std::to_string(p), false, "F^p not contained in F^{p-1}");
      prev = &s;
    }
    return rep;
  }

  friend bool operator==(const HodgeFiltration&, const HodgeFiltration&) = default;
};

/// Pure Hodge structure of weight k given by its Hodge filtration.
struct PureHS {
  std::size_t dim = 0;
  int weight = 0;
  HodgeFiltration F;
};

/// Mixed Hodge structure. Gr^W_r must be pure of weight base_weight + r.
struct MHSObject {
  std::size_t dim = 0;
  int base_weight = 0;
  WeightFiltration W;
  HodgeFiltration F;

  friend bool operator==(const MHSObject&, const MHSObject&) = default;
};

struct MHSMorphism {
  MHSObject source;
  MHSObject target;
  QMatrix matrix;  // target.dim x source.dim
};

namespace detail {

inline std::pair<int, int> span_range(int a_lo, int a_hi, int b_lo, int b_hi) {
  return {std::min(a_lo, b_lo), std::max(a_hi, b_hi)};
}

}  // namespace detail

/// Checks H = F^p (+) conj F^{k-p+1} for every p where this is not automatic.
inline ValidationReport check_pure(const PureHS& h) {
  ValidationReport rep;
  rep.merge(h.F.validate());
  if (!rep.ok()) return rep;
  const int k = h.weight;
  const int lo = std::min(h.F.lo(), k - h.F.hi() + 1) - 1;
  const int hi = std::max(h.F.hi(), k - h.F.lo() + 1) + 1;
  for (int p = lo; p <= hi; ++p) {
    const CSubspace a = h.F.at(p);
    const CSubspace b = conj_subspace(h.F.at(k - p + 1));
    const bool trivial_meet = intersect(a, b).is_zero();
    const bool spans = sum(a, b).is_full();
    if (!trivial_meet || !spans) {
      rep.add("purity at p=" + std::to_string(p), false,
              "dim F^p = " + std::to_string(a.dim()) + ", dim conj F^{k-p+1} = " +
                  std::to_string(b.dim()) + (trivial_meet ? "" : ", nonzero intersection") +
                  (spans ? "" : ", sum is not the whole space"));
    }
  }
  if (rep.ok()) rep.add("pure of weight " + std::to_string(k), true);
  return rep;
}

/// H^{p,k-p} = F^p cap conj F^{k-p}.
inline CSubspace hodge_piece(const PureHS& h, int p) {
  if (!check_pure(h).ok()) throw InputError("hodge_piece: not a pure Hodge structure");
  return intersect(h.F.at(p), conj_subspace(h.F.at(h.weight - p)));
}

/// Sub-object spanned by the rows of `sub`, with W and F induced by intersection.
/// Returns the object on Q^{dim sub} and the inclusion matrix (columns = basis of sub).
inline std::pair<MHSObject, QMatrix> induced_sub(const MHSObject& m, const QSubspace& sub) {
  const std::size_t d = sub.dim();
  const QMatrix incl = sub.basis().transpose();
  const CMatrix incl_c = to_complex(incl);
  const CSubspace sub_c = complexify(sub);
  MHSObject out;
  out.dim = d;
  out.base_weight = m.base_weight;
  out.W.dim = d;
  out.F.dim = d;
  for (int r = m.W.lo(); r <= m.W.hi(); ++r) {
    std::vector<QVec> coords;
    for (const auto& v : intersect(m.W.at(r), sub).vectors()) coords.push_back(*solve(incl, v));
    out.W.steps[r] = QSubspace::span(coords, d);
  }
  for (int p = m.F.lo(); p <= m.F.hi(); ++p) {
    std::vector<CVec> coords;
    for (const auto& v : intersect(m.F.at(p), sub_c).vectors()) coords.push_back(*solve(incl_c, v));
    out.F.steps[p] = CSubspace::span(coords, d);
  }
  return {out, incl};
}

/// Projection Q^n -> Q^n / sub in the coordinates of the canonical coset representatives.
inline QMatrix quotient_projection(const QSubspace& sub) {
  const std::size_t n = sub.ambient_dim();
  const auto reps = quotient_basis(QSubspace::full(n), sub);
  std::vector<QVec> cols = reps;
  for (const auto& v : sub.vectors()) cols.push_back(v);
  const QMatrix basis = QMatrix::from_cols(cols, n);
  QMatrix proj(reps.size(), n);
  for (std::size_t i = 0; i < n; ++i) {
    const QVec c = *solve(basis, unit_vec<Rat>(n, i));
    for (std::size_t k = 0; k < reps.size(); ++k) proj(k, i) = c[k];
  }
  return proj;
}

/// Quotient object by `sub`, with W and F induced by image. Returns the object
/// and the projection matrix.
inline std::pair<MHSObject, QMatrix> induced_quotient(const MHSObject& m, const QSubspace& sub) {
  const QMatrix proj = quotient_projection(sub);
  const CMatrix proj_c = to_complex(proj);
  const std::size_t d = proj.rows();
  MHSObject out;
  out.dim = d;
  out.base_weight = m.base_weight;
  out.W.dim = d;
  out.F.dim = d;
  for (int r = m.W.lo(); r <= m.W.hi(); ++r) out.W.steps[r] = apply(proj, m.W.at(r));
  for (int p = m.F.lo(); p <= m.F.hi(); ++p) out.F.steps[p] = apply(proj_c, m.F.at(p));
  return {out, proj};
}

/// Gr^W_r with the induced Hodge filtration; pure of weight base_weight + r when m is valid.
inline PureHS gr_weight(const MHSObject& m, int r) {
  const QSubspace upper = m.W.at(r);
  const QSubspace lower = m.W.at(r - 1);
  const auto reps = quotient_basis(upper, lower);
  const std::size_t d = reps.size();
  std::vector<CVec> cols;
  for (const auto& v : reps) cols.push_back(to_complex(v));
  for (const auto& v : lower.vectors()) cols.push_back(to_complex(v));
  const CMatrix basis = CMatrix::from_cols(cols, m.dim);
  const CSubspace upper_c = complexify(upper);
  PureHS out;
  out.dim = d;
  out.weight = m.base_weight + r;
  out.F.dim = d;
  for (int p = m.F.lo(); p <= m.F.hi(); ++p) {
    std::vector<CVec> coords;
    for (const auto& v : intersect(m.F.at(p), upper_c).vectors()) {
      CVec c = *solve(basis, v);
      c.resize(d);
      coords.push_back(std::move(c));
    }
    out.F.steps[p] = CSubspace::span(coords, d);
  }
  return out;
}

inline ValidationReport check_mhs(const MHSObject& m) {
  ValidationReport rep;
  if (m.W.dim != m.dim || m.F.dim != m.dim) {
    rep.add("filtration dimensions", false, "W/F dimension differs from object dimension");
    return rep;
  }
  rep.merge(m.W.validate());
  rep.merge(m.F.validate());
  if (!rep.ok()) return rep;
  for (int r = m.W.lo(); r <= m.W.hi(); ++r)
    rep.merge(check_pure(gr_weight(m, r)), "Gr^W_" + std::to_string(r));
  return rep;
}

/// Compatibility of the matrix with W (index by index) and with F.
inline ValidationReport check_morphism(const MHSMorphism& f) {
  ValidationReport rep;
  if (f.matrix.rows() != f.target.dim || f.matrix.cols() != f.source.dim) {
    rep.add("morphism shape", false,
            "matrix " + f.matrix.shape() + " for " + std::to_string(f.source.dim) + " -> " +
                std::to_string(f.target.dim));
    return rep;
  }
  const auto [wlo, whi] = detail::span_range(f.source.W.lo(), f.source.W.hi(), f.target.W.lo(), f.target.W.hi());
  for (int r = wlo; r <= whi; ++r)
    if (!f.target.W.at(r).contains(apply(f.matrix, f.source.W.at(r))))
      rep.add("preserves W_" + std::to_string(r), false);
  const CMatrix mc = to_complex(f.matrix);
  const auto [flo, fhi] = detail::span_range(f.source.F.lo(), f.source.F.hi(), f.target.F.lo(), f.target.F.hi());
  for (int p = flo; p <= fhi; ++p)
    if (!f.target.F.at(p).contains(apply(mc, f.source.F.at(p))))
      rep.add("preserves F^" + std::to_string(p), false);
  if (rep.ok()) rep.add("filtered morphism", true);
  return rep;
}

/// f(source) cap W_r(target) = f(W_r source) and likewise for F on complexifications.
inline bool is_strict(const MHSMorphism& f) {
  const QSubspace im = image(f.matrix);
  const auto [wlo, whi] = detail::span_range(f.source.W.lo(), f.source.W.hi(), f.target.W.lo(), f.target.W.hi());
  for (int r = wlo - 1; r <= whi; ++r)
    if (intersect(im, f.target.W.at(r)) != apply(f.matrix, f.source.W.at(r))) return false;
  const CMatrix mc = to_complex(f.matrix);
  const CSubspace im_c = image(mc);
  const auto [flo, fhi] = detail::span_range(f.source.F.lo(), f.source.F.hi(), f.target.F.lo(), f.target.F.hi());
  for (int p = flo; p <= fhi + 1; ++p)
    if (intersect(im_c, f.target.F.at(p)) != apply(mc, f.source.F.at(p))) return false;
  return true;
}

namespace detail {
inline void require_equal_base(const MHSMorphism& f, const char* what) {
  if (f.source.base_weight != f.target.base_weight)
    throw InputError(std::string(what) + ": base_weight mismatch (" + std::to_string(f.source.base_weight) +
                     " vs " + std::to_string(f.target.base_weight) + ")");
}
}  // namespace detail

/// Kernel object and its inclusion into the source.
inline std::pair<MHSObject, MHSMorphism> kernel_mhs(const MHSMorphism& f) {
  detail::require_equal_base(f, "kernel_mhs");
  auto [obj, incl] = induced_sub(f.source, kernel(f.matrix));
  return {obj, MHSMorphism{obj, f.source, incl}};
}

/// Cokernel object and the projection from the target.
inline std::pair<MHSObject, MHSMorphism> cokernel_mhs(const MHSMorphism& f) {
  detail::require_equal_base(f, "cokernel_mhs");
  auto [obj, proj] = induced_quotient(f.target, image(f.matrix));
  return {obj, MHSMorphism{f.target, obj, proj}};
}

/// Coimage -> image is an isomorphism of mixed Hodge structures: the induced
/// matrix is invertible and carries every W_r and F^p onto the corresponding step.
inline ValidationReport check_image_coimage(const MHSMorphism& f) {
  ValidationReport rep;
  const auto [ker, ker_incl] = kernel_mhs(f);
  const auto [coim, coim_proj] = induced_quotient(f.source, kernel(f.matrix));
  const auto [im, im_incl] = induced_sub(f.target, image(f.matrix));
  rep.add("dim image = dim source - dim kernel", im.dim + ker.dim == f.source.dim);
  // Induced map: coimage coordinates -> image coordinates.
  const auto reps = quotient_basis(QSubspace::full(f.source.dim), kernel(f.matrix));
  QMatrix induced(im.dim, coim.dim);
  for (std::size_t k = 0; k < reps.size(); ++k) {
    const QVec c = *solve(im_incl, f.matrix * reps[k]);
    for (std::size_t i = 0; i < im.dim; ++i) induced(i, k) = c[i];
  }
  const auto inv = inverse(induced);
  rep.add("induced map invertible", inv.has_value());
  if (!inv) return rep;
  const int wlo = std::min(coim.W.lo(), im.W.lo()), whi = std::max(coim.W.hi(), im.W.hi());
  for (int r = wlo; r <= whi; ++r)
    rep.add("W_" + std::to_string(r) + " matches", apply(induced, coim.W.at(r)) == im.W.at(r));
  const CMatrix ic = to_complex(induced);
  const int flo = std::min(coim.F.lo(), im.F.lo()), fhi = std::max(coim.F.hi(), im.F.hi());
  for (int p = flo; p <= fhi; ++p)
    rep.add("F^" + std::to_string(p) + " matches", apply(ic, coim.F.at(p)) == im.F.at(p));
  return rep;
}

/// The trivial structure Q(0) placed so that its weight is 0: W_{-base_weight} = everything.
inline MHSObject trivial_mhs(int base_weight = 0, std::size_t dim = 1) {
  MHSObject m;
  m.dim = dim;
  m.base_weight = base_weight;
  m.W.dim = dim;
  m.W.steps[-base_weight] = QSubspace::full(dim);
  m.F.dim = dim;
  m.F.steps[0] = CSubspace::full(dim);
  return m;
}

inline MHSObject direct_sum_mhs(const MHSObject& a, const MHSObject& b) {
  if (a.base_weight != b.base_weight) throw InputError("direct sum: base_weight mismatch");
  MHSObject m;
  m.dim = a.dim + b.dim;
  m.base_weight = a.base_weight;
  m.W.dim = m.dim;
  m.F.dim = m.dim;
  const QMatrix ia = vstack(QMatrix::identity(a.dim), QMatrix::zero(b.dim, a.dim));
  const QMatrix ib = vstack(QMatrix::zero(a.dim, b.dim), QMatrix::identity(b.dim));
  const int wlo = std::min(a.W.lo(), b.W.lo()), whi = std::max(a.W.hi(), b.W.hi());
  for (int r = wlo; r <= whi; ++r) m.W.steps[r] = sum(apply(ia, a.W.at(r)), apply(ib, b.W.at(r)));
  const CMatrix ca = to_complex(ia), cb = to_complex(ib);
  const int flo = std::min(a.F.lo(), b.F.lo()), fhi = std::max(a.F.hi(), b.F.hi());
  for (int p = flo; p <= fhi; ++p) m.F.steps[p] = sum(apply(ca, a.F.at(p)), apply(cb, b.F.at(p)));
  return m;
}

inline MHSMorphism identity_morphism(const MHSObject& m) {
  return {m, m, QMatrix::identity(m.dim)};
}

inline MHSMorphism compose(const MHSMorphism& g, const MHSMorphism& f) {
  return {f.source, g.target, g.matrix * f.matrix};
}

}  // namespace gmhs
