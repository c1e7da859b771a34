// Extension machinery: Ext^0 decompositions, the Ext^1 quotient model,
// Yoneda n-extensions, exactness and roof (Yoneda equivalence) certificates.

#pragma once

#include <gmhs/morphism_space.hpp>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace gmhs {

// ---------------------------------------------------------------------------
// Ext^0: eigen-decomposition of Hom classes under the z-family.

struct EigenComponent {
  std::map<std::string, int> signs;  // z-label -> +1 / -1
  CVec vector;

  /// Labels acting by -1: the M with this component in Ext^0(Q_M, h).
  [[nodiscard]] std::set<std::string> labels() const {
    std::set<std::string> m;
    for (const auto& [l, s] : signs)
      if (s < 0) m.insert(l);
    return m;
  }
};

/// Splits the class of 1 -> cls in Hom(Q, forgetful(h)) into simultaneous
/// eigencomponents of the (pairwise commuting) z-operators of h.
inline std::vector<EigenComponent> eigen_decompose(const GMHSObject& h, const QVec& cls) {
  if (cls.size() != h.dim()) throw InputError("eigen_decompose: class has the wrong dimension");
  const std::vector<std::string> labels(h.site.u_labels.begin(), h.site.u_labels.end());
  for (std::size_t a = 0; a < labels.size(); ++a)
    for (std::size_t b = a + 1; b < labels.size(); ++b) {
      const CMatrix za = h.op(labels[a]), zb = h.op(labels[b]);
      if (!(za * zb == zb * za))
        throw InputError("eigen_decompose: z_" + labels[a] + " and z_" + labels[b] + " do not commute");
    }
  const MHSObject unit = trivial_mhs(h.mhs.base_weight);
  if (!check_morphism({unit, h.mhs, QMatrix::from_cols({cls}, h.dim())}).ok())
    throw InputError("eigen_decompose: class is not a morphism of mixed Hodge structures from Q(0)");

  std::vector<EigenComponent> parts{{{}, to_complex(cls)}};
  const GaussRat half(Rat(1, 2));
  for (const auto& l : labels) {
    const CMatrix z = h.op(l);
    std::vector<EigenComponent> next;
    for (const auto& part : parts) {
      const CVec zv = z * part.vector;
      for (int sign : {+1, -1}) {
        CVec v(part.vector.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = half * (part.vector[i] + GaussRat(sign) * zv[i]);
        if (is_zero_vec(v)) continue;
        EigenComponent c = part;
        c.signs[l] = sign;
        c.vector = std::move(v);
        next.push_back(std::move(c));
      }
    }
    parts = std::move(next);
  }
  return parts;
}

// ---------------------------------------------------------------------------
// Ext^1 in MHS via H_C / (F^0 + H_Q).

struct Ext1Result {
  std::size_t dimension = 0;
  std::vector<CVec> representatives;  // coset representatives, a Q-basis of the quotient
};

/// Q-dimension of H_{Q(i)} / (F^0 + H_Q), viewing H_{Q(i)} as Q^{2n} with
/// coordinates (Re x_1..Re x_n, Im x_1..Im x_n). Requires all weights < 0.
inline Ext1Result ext1_dimension(const MHSObject& h) {
  for (int r = h.W.lo(); r <= h.W.hi(); ++r)
    if (h.base_weight + r >= 0 && h.W.at(r).dim() > h.W.at(r - 1).dim())
      throw InputError("ext1_dimension: weight " + std::to_string(h.base_weight + r) +
                       " occurs; all weights must be negative");
  const std::size_t n = h.dim;
  std::vector<QVec> gens;
  for (const auto& v : h.F.at(0).vectors()) {
    QVec a(2 * n), b(2 * n);
    for (std::size_t k = 0; k < n; ++k) {
      a[k] = v[k].re();
      a[n + k] = v[k].im();
      b[k] = -v[k].im();  // i*v
      b[n + k] = v[k].re();
    }
    gens.push_back(std::move(a));
    gens.push_back(std::move(b));
  }
  for (std::size_t k = 0; k < n; ++k) gens.push_back(unit_vec<Rat>(2 * n, k));
  const QSubspace lattice = QSubspace::span(gens, 2 * n);
  Ext1Result out;
  out.dimension = 2 * n - lattice.dim();
  for (const auto& r : quotient_basis(QSubspace::full(2 * n), lattice)) {
    CVec c(n);
    for (std::size_t k = 0; k < n; ++k) c[k] = GaussRat(r[k], r[n + k]);
    out.representatives.push_back(std::move(c));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Yoneda extensions.

/// 0 -> N = objects[0] -> R_n -> ... -> R_1 -> M = objects.back() -> 0;
/// maps[k] goes from objects[k] to objects[k+1].
struct YonedaExt {
  std::vector<GMHSObject> objects;
  std::vector<GMHSMorphism> maps;

  [[nodiscard]] std::size_t length() const { return objects.size() < 2 ? 0 : objects.size() - 2; }
  [[nodiscard]] const GMHSObject& head() const { return objects.front(); }
  [[nodiscard]] const GMHSObject& tail() const { return objects.back(); }
};

namespace detail {

inline ValidationReport morphism_report(const GMHSMorphism& m) {
  try {
    return check_gmhs_morphism(m);
  } catch (const InputError& e) {
    ValidationReport r;
    r.add("correspondence", false, e.what());
    return r;
  }
}

}  // namespace detail

inline ValidationReport check_exact(const YonedaExt& e) {
  ValidationReport rep;
  if (e.objects.size() < 2 || e.maps.size() + 1 != e.objects.size()) {
    rep.add("sequence shape", false,
            std::to_string(e.objects.size()) + " objects, " + std::to_string(e.maps.size()) + " maps");
    return rep;
  }
  for (std::size_t k = 0; k < e.maps.size(); ++k) {
    const auto& m = e.maps[k];
    if (!(m.source == e.objects[k]) || !(m.target == e.objects[k + 1])) {
      rep.add("map " + std::to_string(k) + " endpoints", false, "source/target differ from the listed objects");
      return rep;
    }
  }
  for (std::size_t k = 0; k < e.objects.size(); ++k)
    rep.merge(check_gmhs(e.objects[k]), "object " + std::to_string(k));
  rep.add("injective at N", kernel(e.maps.front().matrix).is_zero());
  for (std::size_t k = 1; k < e.maps.size(); ++k)
    rep.add("exact at position " + std::to_string(k), image(e.maps[k - 1].matrix) == kernel(e.maps[k].matrix));
  rep.add("surjective onto M", image(e.maps.back().matrix).is_full());
  for (std::size_t k = 0; k < e.maps.size(); ++k)
    rep.merge(detail::morphism_report(e.maps[k]), "map " + std::to_string(k));
  return rep;
}

/// 0 -> N -id-> N -0-> M -id-> M -> 0.
inline YonedaExt split_2ext(const GMHSObject& n, const GMHSObject& m) {
  YonedaExt e;
  e.objects = {n, n, m, m};
  e.maps = {identity_morphism(n),
            GMHSMorphism{n, m, QMatrix::zero(m.dim(), n.dim()), identity_correspondence(n.site, m.site)},
            identity_morphism(m)};
  return e;
}

/// Yoneda composite through the shared object e1.tail() == e2.head().
inline YonedaExt splice(const YonedaExt& e1, const YonedaExt& e2) {
  if (e1.objects.size() < 2 || e2.objects.size() < 2 || !(e1.tail() == e2.head()))
    throw InputError("splice: tail of the first extension differs from the head of the second");
  YonedaExt out;
  out.objects.assign(e1.objects.begin(), e1.objects.end() - 1);
  out.objects.insert(out.objects.end(), e2.objects.begin() + 1, e2.objects.end());
  out.maps.assign(e1.maps.begin(), e1.maps.end() - 1);
  out.maps.push_back(compose(e2.maps.front(), e1.maps.back()));
  out.maps.insert(out.maps.end(), e2.maps.begin() + 1, e2.maps.end());
  const auto rep = check_exact(out);
  if (!rep.ok()) throw InputError("splice: result is not exact: " + rep.failures().front().name);
  return out;
}

/// Pull-back of the surjection B -> A along h_v: Q_M -> A:
/// 0 -> ker(surj) -> B x_A Q_M -> Q_M -> 0.
inline YonedaExt pullback_extension(const GMHSMorphism& surj, const GMHSMorphism& h_v,
                                    const std::optional<LabelCorrespondence>& inclusion_corr = std::nullopt,
                                    const std::optional<LabelCorrespondence>& projection_corr = std::nullopt) {
  if (!image(surj.matrix).is_full()) throw InputError("pullback_extension: map is not surjective");
  if (!(surj.target == h_v.target)) throw InputError("pullback_extension: maps have different targets");
  const GMHSObject& b = surj.source;
  const GMHSObject& qm = h_v.source;
  const GMHSObject d = direct_sum(b, qm);
  const QMatrix phi = hstack(surj.matrix, -h_v.matrix);
  LabelCorrespondence common;
  for (const auto& p : surj.corr.pairings)
    if (std::find(h_v.corr.pairings.begin(), h_v.corr.pairings.end(), p) != h_v.corr.pairings.end())
      common.pairings.push_back(p);
  const auto [fiber, fiber_incl] = kernel_gmhs(GMHSMorphism{d, surj.target, phi, common});
  const auto [ker, ker_incl] = kernel_gmhs(surj);

  // ker -> fiber: b |-> (b, 0) in fiber coordinates.
  const QMatrix into_d = vstack(ker_incl.matrix, QMatrix::zero(qm.dim(), ker.dim()));
  QMatrix a(fiber.dim(), ker.dim());
  for (std::size_t k = 0; k < ker.dim(); ++k) {
    const QVec c = *solve(fiber_incl.matrix, into_d.col(k));
    for (std::size_t i = 0; i < fiber.dim(); ++i) a(i, k) = c[i];
  }
  QMatrix proj(qm.dim(), fiber.dim());
  for (std::size_t i = 0; i < qm.dim(); ++i)
    for (std::size_t k = 0; k < fiber.dim(); ++k) proj(i, k) = fiber_incl.matrix(b.dim() + i, k);

  YonedaExt e;
  e.objects = {ker, fiber, qm};
  e.maps = {GMHSMorphism{ker, fiber, a, inclusion_corr.value_or(identity_correspondence(ker.site, fiber.site))},
            GMHSMorphism{fiber, qm, proj, projection_corr.value_or(identity_correspondence(fiber.site, qm.site))}};
  const auto rep = check_exact(e);
  if (!rep.ok()) throw InputError("pullback_extension: result is not exact: " + rep.failures().front().name);
  return e;
}

// ---------------------------------------------------------------------------
// Roofs: E <- E'' -> E' with identities at both ends.

struct Roof {
  YonedaExt middle;
  std::vector<GMHSMorphism> up;    // up[k]: middle.objects[k] -> e.objects[k]
  std::vector<GMHSMorphism> down;  // down[k]: middle.objects[k] -> e_prime.objects[k]
};

namespace detail {

inline void require_roof_shape(const YonedaExt& e, const YonedaExt& ep) {
  if (e.objects.size() != ep.objects.size() || e.objects.size() < 3)
    throw InputError("roof: extensions have different lengths");
  if (!(e.head() == ep.head()) || !(e.tail() == ep.tail()))
    throw InputError("roof: extensions have different endpoints");
}

/// Correspondence required of the middle map at position k: every pairing used
/// by E or E' at that position.
inline LabelCorrespondence middle_correspondence(const YonedaExt& e, const YonedaExt& ep, std::size_t k) {
  return merge(e.maps[k].corr, ep.maps[k].corr);
}

inline ValidationReport ladder_report(const YonedaExt& mid, const YonedaExt& target,
                                      const std::vector<GMHSMorphism>& ladder, const std::string& side) {
  ValidationReport rep;
  const std::size_t n = mid.objects.size();
  if (ladder.size() != n) {
    rep.add(side + " ladder size", false);
    return rep;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const auto& m = ladder[k];
    const std::string where = side + " map " + std::to_string(k);
    if (!(m.source == mid.objects[k]) || !(m.target == target.objects[k])) {
      rep.add(where + " endpoints", false);
      continue;
    }
    if (k == 0 || k + 1 == n) rep.add(where + " is the identity", m.matrix == QMatrix::identity(m.source.dim()));
    GMHSMorphism required = m;
    required.corr = merge(m.corr, identity_correspondence(m.source.site, m.target.site));
    rep.merge(morphism_report(required), where);
  }
  if (!rep.ok()) return rep;
  for (std::size_t k = 0; k + 1 < n; ++k)
    rep.add(side + " square " + std::to_string(k) + " commutes",
            target.maps[k].matrix * ladder[k].matrix == ladder[k + 1].matrix * mid.maps[k].matrix);
  return rep;
}

}  // namespace detail

inline ValidationReport check_roof_report(const YonedaExt& e, const YonedaExt& ep, const Roof& roof) {
  detail::require_roof_shape(e, ep);
  ValidationReport rep;
  const YonedaExt& mid = roof.middle;
  if (mid.objects.size() != e.objects.size() || mid.maps.size() != e.maps.size()) {
    rep.add("middle sequence length", false);
    return rep;
  }
  rep.add("middle has endpoint N", mid.head() == e.head());
  rep.add("middle has endpoint M", mid.tail() == e.tail());
  YonedaExt required = mid;
  for (std::size_t k = 0; k < required.maps.size(); ++k)
    required.maps[k].corr = merge(mid.maps[k].corr, detail::middle_correspondence(e, ep, k));
  rep.merge(check_exact(required), "middle");
  if (!rep.ok()) return rep;
  rep.merge(detail::ladder_report(mid, e, roof.up, "up"));
  rep.merge(detail::ladder_report(mid, ep, roof.down, "down"));
  return rep;
}

/// C(E) = C(E') witnessed by the roof.
inline bool check_roof(const YonedaExt& e, const YonedaExt& ep, const Roof& roof) {
  return check_roof_report(e, ep, roof).ok();
}

inline Roof identity_roof(const YonedaExt& e) {
  Roof r{e, {}, {}};
  for (const auto& o : e.objects) {
    r.up.push_back(identity_morphism(o));
    r.down.push_back(identity_morphism(o));
  }
  return r;
}

/// For a fixed middle sequence, the ladder conditions are linear in the ladder
/// maps. Solves them exactly; returns a roof passing check_roof, or nullopt.
inline std::optional<Roof> solve_roof(const YonedaExt& e, const YonedaExt& ep, const YonedaExt& middle) {
  detail::require_roof_shape(e, ep);
  if (middle.objects.size() != e.objects.size()) return std::nullopt;
  if (!(middle.head() == e.head()) || !(middle.tail() == e.tail())) return std::nullopt;
  const std::size_t n = middle.objects.size();

  LinearSystem sys;
  auto add_ladder = [&](const YonedaExt& target) {
    std::vector<std::size_t> ids(n);
    for (std::size_t k = 1; k + 1 < n; ++k) {
      ids[k] = sys.add_unknown(target.objects[k].dim(), middle.objects[k].dim());
      constrain_mhs_morphism(sys, ids[k], middle.objects[k].mhs, target.objects[k].mhs);
      constrain_intertwining(sys, ids[k], middle.objects[k], target.objects[k],
                             identity_correspondence(middle.objects[k].site, target.objects[k].site));
    }
    for (std::size_t k = 0; k + 1 < n; ++k) {
      const CMatrix a = to_complex(target.maps[k].matrix);
      const CMatrix b = to_complex(middle.maps[k].matrix);
      const bool lo_fixed = k == 0, hi_fixed = k + 2 == n;
      std::vector<LinearSystem::Term> terms;
      CMatrix rhs(a.rows(), b.cols());
      if (lo_fixed) rhs -= a;
      else terms.push_back({ids[k], a, CMatrix::identity(b.cols())});
      if (hi_fixed) rhs += b;
      else terms.push_back({ids[k + 1], -CMatrix::identity(a.rows()), b});
      if (terms.empty()) {
        if (!rhs.is_zero()) return std::optional<std::vector<std::size_t>>{};
        continue;
      }
      sys.add_equation(terms, rhs);
    }
    return std::optional<std::vector<std::size_t>>{ids};
  };
  const auto up_ids = add_ladder(e);
  const auto down_ids = add_ladder(ep);
  if (!up_ids || !down_ids) return std::nullopt;
  const auto sol = sys.particular_solution();
  if (!sol) return std::nullopt;

  Roof roof{middle, {}, {}};
  auto build = [&](const YonedaExt& target, const std::vector<std::size_t>& ids, std::vector<GMHSMorphism>& out) {
    for (std::size_t k = 0; k < n; ++k) {
      const bool fixed = k == 0 || k + 1 == n;
      out.push_back(GMHSMorphism{middle.objects[k], target.objects[k],
                                 fixed ? QMatrix::identity(middle.objects[k].dim()) : (*sol)[ids[k]],
                                 identity_correspondence(middle.objects[k].site, target.objects[k].site)});
    }
  };
  build(e, *up_ids, roof.up);
  build(ep, *down_ids, roof.down);
  if (!check_roof(e, ep, roof)) return std::nullopt;
  return roof;
}

}  // namespace gmhs
