// Generalized mixed Hodge structures: mixed Hodge structures decorated with
// involution families indexed by the labels of a site descriptor.

#pragma once

#include <gmhs/hodge.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace gmhs {

enum class LabelKind { z, w };

/// Labels standing in for subschemes V of U (z-labels) and V' of D (w-labels).
struct SiteDescriptor {
  std::set<std::string> u_labels;
  std::set<std::string> d_labels;

  [[nodiscard]] std::optional<LabelKind> kind(const std::string& label) const {
    if (u_labels.count(label)) return LabelKind::z;
    if (d_labels.count(label)) return LabelKind::w;
    return std::nullopt;
  }
  [[nodiscard]] bool has(const std::string& label) const { return kind(label).has_value(); }
  [[nodiscard]] std::vector<std::string> all_labels() const {
    std::vector<std::string> out(u_labels.begin(), u_labels.end());
    out.insert(out.end(), d_labels.begin(), d_labels.end());
    return out;
  }
  [[nodiscard]] ValidationReport validate() const {
    ValidationReport rep;
    for (const auto& l : u_labels)
      if (d_labels.count(l)) rep.add("site labels disjoint", false, "label " + l + " is both a z- and a w-label");
    return rep;
  }

  friend bool operator==(const SiteDescriptor&, const SiteDescriptor&) = default;
};

enum class PairCase { ZZ, ZW, WZ, WW };

inline const char* to_string(PairCase c) {
  switch (c) {
    case PairCase::ZZ: return "ZZ";
    case PairCase::ZW: return "ZW";
    case PairCase::WZ: return "WZ";
    case PairCase::WW: return "WW";
  }
  return "?";
}

inline PairCase pair_case(LabelKind x, LabelKind y) {
  if (x == LabelKind::z) return y == LabelKind::z ? PairCase::ZZ : PairCase::ZW;
  return y == LabelKind::z ? PairCase::WZ : PairCase::WW;
}

/// One intertwining requirement f o x = y o f, x a label of the source site,
/// y a label of the target site.
struct Pairing {
  std::string x;
  std::string y;
  PairCase kind = PairCase::ZZ;
  friend bool operator==(const Pairing&, const Pairing&) = default;
  friend auto operator<=>(const Pairing& a, const Pairing& b) {
    return std::tie(a.x, a.y, a.kind) <=> std::tie(b.x, b.y, b.kind);
  }
};

struct LabelCorrespondence {
  std::vector<Pairing> pairings;
  friend bool operator==(const LabelCorrespondence&, const LabelCorrespondence&) = default;
};

/// Every label shared by both sites (with the same kind) paired with itself.
inline LabelCorrespondence identity_correspondence(const SiteDescriptor& a, const SiteDescriptor& b) {
  LabelCorrespondence c;
  for (const auto& l : a.u_labels)
    if (b.u_labels.count(l)) c.pairings.push_back({l, l, PairCase::ZZ});
  for (const auto& l : a.d_labels)
    if (b.d_labels.count(l)) c.pairings.push_back({l, l, PairCase::WW});
  std::sort(c.pairings.begin(), c.pairings.end());
  return c;
}

/// Label-wise composite: (x, z) whenever (x, y) is in `first` and (y, z) in `second`.
inline LabelCorrespondence compose(const LabelCorrespondence& second, const LabelCorrespondence& first) {
  std::set<Pairing> out;
  for (const auto& a : first.pairings)
    for (const auto& b : second.pairings)
      if (a.y == b.x) {
        const LabelKind kx = (a.kind == PairCase::ZZ || a.kind == PairCase::ZW) ? LabelKind::z : LabelKind::w;
        const LabelKind kz = (b.kind == PairCase::ZZ || b.kind == PairCase::WZ) ? LabelKind::z : LabelKind::w;
        out.insert({a.x, b.y, pair_case(kx, kz)});
      }
  return {std::vector<Pairing>(out.begin(), out.end())};
}

/// Union of pairings, sorted and deduplicated.
inline LabelCorrespondence merge(const LabelCorrespondence& a, const LabelCorrespondence& b) {
  std::set<Pairing> out(a.pairings.begin(), a.pairings.end());
  out.insert(b.pairings.begin(), b.pairings.end());
  return {std::vector<Pairing>(out.begin(), out.end())};
}

struct GMHSObject {
  MHSObject mhs;
  SiteDescriptor site;
  std::map<std::string, CMatrix> z_ops;  // keyed by u_labels; unlisted labels act as the identity
  std::map<std::string, CMatrix> w_ops;  // keyed by d_labels

  [[nodiscard]] std::size_t dim() const { return mhs.dim; }

  /// Operator attached to a label (identity when not listed).
  [[nodiscard]] CMatrix op(const std::string& label) const {
    const auto k = site.kind(label);
    if (!k) throw InputError("unknown label " + label);
    const auto& ops = *k == LabelKind::z ? z_ops : w_ops;
    const auto it = ops.find(label);
    return it == ops.end() ? CMatrix::identity(dim()) : it->second;
  }

  friend bool operator==(const GMHSObject&, const GMHSObject&) = default;
};

struct GMHSMorphism {
  GMHSObject source;
  GMHSObject target;
  QMatrix matrix;  // target.dim() x source.dim()
  LabelCorrespondence corr;

  [[nodiscard]] MHSMorphism mhs() const { return {source.mhs, target.mhs, matrix}; }
};

inline ValidationReport check_gmhs(const GMHSObject& o) {
  ValidationReport rep;
  rep.merge(check_mhs(o.mhs));
  rep.merge(o.site.validate());
  const std::size_t n = o.dim();
  const CMatrix id = CMatrix::identity(n);
  auto shape_ok = [&](const std::string& label, const CMatrix& m) {
    if (m.rows() == n && m.cols() == n) return true;
    rep.add("operator " + label + " shape", false, m.shape() + " on a " + std::to_string(n) + "-dim object");
    return false;
  };
  for (const auto& [label, z] : o.z_ops) {
    if (!o.site.u_labels.count(label)) {
      rep.add("z-operator label " + label, false, "not a z-label of the site");
      continue;
    }
    if (!shape_ok(label, z)) continue;
    rep.add("z_" + label + " squares to identity", z * z == id);
  }
  for (const auto& [label, w] : o.w_ops) {
    if (!o.site.d_labels.count(label)) {
      rep.add("w-operator label " + label, false, "not a w-label of the site");
      continue;
    }
    if (!shape_ok(label, w)) continue;
    rep.add("w_" + label + " invertible", inverse(w).has_value());
    const CMatrix w2 = w * w - id;
    for (int r = o.mhs.W.lo(); r <= o.mhs.W.hi(); ++r) {
      const CSubspace step = complexify(o.mhs.W.at(r));
      if (!step.contains(apply(w, step))) {
        rep.add("w_" + label + " preserves W_" + std::to_string(r), false, "Gr action undefined");
        continue;
      }
      const CSubspace below = complexify(o.mhs.W.at(r - 1));
      if (!below.contains(apply(w2, step)))
        rep.add("w_" + label + " Gr^W_" + std::to_string(r) + " action is an involution", false);
    }
  }
  return rep;
}

/// Validity as a morphism of generalized mixed Hodge structures. Throws
/// InputError when a pairing references a label unknown to its site or has an
/// inconsistent case tag.
inline ValidationReport check_gmhs_morphism(const GMHSMorphism& m) {
  ValidationReport rep = check_morphism(m.mhs());
  if (!rep.ok()) return rep;
  const CMatrix f = to_complex(m.matrix);
  for (const auto& p : m.corr.pairings) {
    const auto kx = m.source.site.kind(p.x);
    const auto ky = m.target.site.kind(p.y);
    if (!kx) throw InputError("pairing references unknown source label " + p.x);
    if (!ky) throw InputError("pairing references unknown target label " + p.y);
    if (pair_case(*kx, *ky) != p.kind)
      throw InputError("pairing (" + p.x + ", " + p.y + ") has case tag " + to_string(p.kind) +
                       " inconsistent with the label kinds");
    rep.add("f o " + p.x + " = " + p.y + " o f", f * m.source.op(p.x) == m.target.op(p.y) * f);
  }
  return rep;
}

inline bool is_gmhs_morphism(const GMHSMorphism& m) { return check_gmhs_morphism(m).ok(); }

inline const MHSObject& forgetful(const GMHSObject& o) { return o.mhs; }
inline MHSMorphism forgetful(const GMHSMorphism& m) { return m.mhs(); }

/// One-dimensional object with trivial Hodge structure; every label in M acts by -1,
/// every other label by +1.
inline GMHSObject make_QM(const SiteDescriptor& site, const std::set<std::string>& M, int base_weight = 0) {
  for (const auto& l : M)
    if (!site.has(l)) throw InputError("make_QM: unknown label " + l);
  GMHSObject q;
  q.mhs = trivial_mhs(base_weight);
  q.site = site;
  for (const auto& l : site.u_labels) q.z_ops[l] = CMatrix{{GaussRat(M.count(l) ? -1 : 1)}};
  for (const auto& l : site.d_labels) q.w_ops[l] = CMatrix{{GaussRat(M.count(l) ? -1 : 1)}};
  return q;
}

inline GMHSObject direct_sum(const GMHSObject& a, const GMHSObject& b) {
  if (!(a.site == b.site)) throw InputError("direct_sum: site mismatch");
  GMHSObject s;
  s.mhs = direct_sum_mhs(a.mhs, b.mhs);
  s.site = a.site;
  for (const auto& l : a.site.u_labels)
    if (a.z_ops.count(l) || b.z_ops.count(l)) s.z_ops[l] = block_diag(a.op(l), b.op(l));
  for (const auto& l : a.site.d_labels)
    if (a.w_ops.count(l) || b.w_ops.count(l)) s.w_ops[l] = block_diag(a.op(l), b.op(l));
  return s;
}

inline GMHSMorphism identity_morphism(const GMHSObject& o) {
  return {o, o, QMatrix::identity(o.dim()), identity_correspondence(o.site, o.site)};
}

inline GMHSMorphism compose(const GMHSMorphism& g, const GMHSMorphism& f) {
  return {f.source, g.target, g.matrix * f.matrix, compose(g.corr, f.corr)};
}

namespace detail {

/// Restricts every explicit operator of `o` to the sub-space spanned by the
/// columns of `incl`; throws when some operator does not preserve it.
inline void restrict_ops(const GMHSObject& o, const QMatrix& incl, GMHSObject& out, const char* what) {
  const CMatrix ic = to_complex(incl);
  auto restrict_one = [&](const std::string& label, const CMatrix& op) {
    CMatrix r(incl.cols(), incl.cols());
    for (std::size_t k = 0; k < incl.cols(); ++k) {
      const auto c = solve(ic, op * ic.col(k));
      if (!c) throw InputError(std::string(what) + ": operator " + label + " does not preserve the sub-object");
      for (std::size_t i = 0; i < incl.cols(); ++i) r(i, k) = (*c)[i];
    }
    return r;
  };
  for (const auto& [l, z] : o.z_ops) out.z_ops[l] = restrict_one(l, z);
  for (const auto& [l, w] : o.w_ops) out.w_ops[l] = restrict_one(l, w);
}

/// Induces every explicit operator of `o` on the quotient with the given
/// projection; throws when some operator does not preserve the kernel of the projection.
inline void induce_ops(const GMHSObject& o, const QSubspace& killed, const QMatrix& proj, GMHSObject& out,
                       const char* what) {
  const CSubspace killed_c = complexify(killed);
  const CMatrix pc = to_complex(proj);
  const auto reps = quotient_basis(QSubspace::full(o.dim()), killed);
  auto induce_one = [&](const std::string& label, const CMatrix& op) {
    if (!killed_c.contains(apply(op, killed_c)))
      throw InputError(std::string(what) + ": operator " + label + " does not preserve the image");
    CMatrix r(proj.rows(), proj.rows());
    for (std::size_t k = 0; k < reps.size(); ++k) {
      const CVec c = pc * (op * to_complex(reps[k]));
      for (std::size_t i = 0; i < proj.rows(); ++i) r(i, k) = c[i];
    }
    return r;
  };
  for (const auto& [l, z] : o.z_ops) out.z_ops[l] = induce_one(l, z);
  for (const auto& [l, w] : o.w_ops) out.w_ops[l] = induce_one(l, w);
}

}  // namespace detail

/// Kernel object with restricted operators, and its inclusion (identity correspondence).
/// Every source operator must preserve ker f.
inline std::pair<GMHSObject, GMHSMorphism> kernel_gmhs(const GMHSMorphism& m) {
  const auto [kobj, incl] = kernel_mhs(m.mhs());
  GMHSObject k;
  k.mhs = kobj;
  k.site = m.source.site;
  detail::restrict_ops(m.source, incl.matrix, k, "kernel_gmhs");
  return {k, GMHSMorphism{k, m.source, incl.matrix, identity_correspondence(k.site, m.source.site)}};
}

/// Cokernel object with induced operators, and the projection (identity correspondence).
/// Every target operator must preserve im f.
inline std::pair<GMHSObject, GMHSMorphism> cokernel_gmhs(const GMHSMorphism& m) {
  const auto [cobj, proj] = cokernel_mhs(m.mhs());
  GMHSObject c;
  c.mhs = cobj;
  c.site = m.target.site;
  detail::induce_ops(m.target, image(m.matrix), proj.matrix, c, "cokernel_gmhs");
  return {c, GMHSMorphism{m.target, c, proj.matrix, identity_correspondence(m.target.site, c.site)}};
}

}  // namespace gmhs
