// The length-2 extension 0 -> S -> T -> V -> Q_M -> 0 with z-parameters
// c(D_1), c(D_2): fixtures, a roof refuter, the obstruction certificate and
// the classifier.

#pragma once

#include <gmhs/ext.hpp>

#include <optional>
#include <string>
#include <vector>

namespace gmhs {

struct Example33Params {
  Rat c1;
  Rat c2;
  friend bool operator==(const Example33Params&, const Example33Params&) = default;
};

namespace ex33 {

inline const std::vector<std::string>& z_labels() {
  static const std::vector<std::string> l{"zD1", "zD2"};
  return l;
}
inline const std::vector<std::string>& w_labels() {
  static const std::vector<std::string> l{"wD1", "wD2"};
  return l;
}

inline SiteDescriptor site() { return {{"zD1", "zD2"}, {"wD1", "wD2"}}; }

inline const Rat& parameter(const Example33Params& p, const std::string& z_label) {
  return z_label == "zD1" ? p.c1 : p.c2;
}

/// Pure of weight -1 on Q^2, F^0 = span{(1, i)}.
inline GMHSObject object_S() {
  GMHSObject s;
  s.site = site();
  s.mhs.dim = 2;
  s.mhs.base_weight = -1;
  s.mhs.W = {2, {{0, QSubspace::full(2)}}};
  s.mhs.F = {2, {{0, CSubspace::span({{GaussRat(1), GaussRat::i()}}, 2)}}};
  return s;
}

/// Basis (e, s1, s2); W_0 = span{s1, s2} of weight -1, Gr_1 of weight 0.
inline GMHSObject object_T() {
  GMHSObject t;
  t.site = site();
  t.mhs.dim = 3;
  t.mhs.base_weight = -1;
  t.mhs.W = {3, {{0, QSubspace::span({{Rat(0), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(1)}}, 3)},
                 {1, QSubspace::full(3)}}};
  t.mhs.F = {3, {{0, CSubspace::span({{GaussRat(1), GaussRat(0), GaussRat(0)},
                                      {GaussRat(0), GaussRat(1), GaussRat::i()}}, 3)}}};
  const CMatrix w{{GaussRat(1), GaussRat(0), GaussRat(0)},
                  {GaussRat(-1), GaussRat(1), GaussRat(0)},
                  {GaussRat(0), GaussRat(0), GaussRat(1)}};
  for (const auto& l : w_labels()) t.w_ops[l] = w;
  return t;
}

/// Basis (alpha, beta), pure of weight 0; z_{D_i}(alpha) = alpha, z_{D_i}(beta) = c_i alpha - beta.
inline GMHSObject object_V(const Example33Params& p) {
  GMHSObject v;
  v.site = site();
  v.mhs.dim = 2;
  v.mhs.base_weight = -1;
  v.mhs.W = {2, {{1, QSubspace::full(2)}}};
  v.mhs.F = {2, {}};
  for (const auto& l : z_labels())
    v.z_ops[l] = CMatrix{{GaussRat(1), GaussRat(parameter(p, l))}, {GaussRat(0), GaussRat(-1)}};
  return v;
}

inline GMHSObject object_QM() { return make_QM(site(), {"zD1", "zD2"}, -1); }

inline LabelCorrespondence corr_i() { return identity_correspondence(site(), site()); }

inline LabelCorrespondence corr_j() {
  LabelCorrespondence c = identity_correspondence(site(), site());
  c.pairings.push_back({"wD1", "zD1", PairCase::WZ});
  c.pairings.push_back({"wD2", "zD2", PairCase::WZ});
  return merge(c, {});
}

inline LabelCorrespondence corr_k() { return identity_correspondence(site(), site()); }

inline QMatrix matrix_i() { return {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}}; }
inline QMatrix matrix_j() { return {{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(0), Rat(0)}}; }
inline QMatrix matrix_k() { return {{Rat(0), Rat(1)}}; }

}  // namespace ex33

/// E: 0 -> S -i-> T -j-> V -k-> Q_M -> 0.
inline YonedaExt build_example33(const Example33Params& p) {
  const GMHSObject s = ex33::object_S(), t = ex33::object_T(), v = ex33::object_V(p), q = ex33::object_QM();
  return {{s, t, v, q},
          {{s, t, ex33::matrix_i(), ex33::corr_i()},
           {t, v, ex33::matrix_j(), ex33::corr_j()},
           {v, q, ex33::matrix_k(), ex33::corr_k()}}};
}

/// E': 0 -> S -> S -> Q_M -> Q_M -> 0.
inline YonedaExt build_example33_split() { return split_2ext(ex33::object_S(), ex33::object_QM()); }

// ---------------------------------------------------------------------------
// Refuting a candidate roof.

struct TraceLine {
  std::string equation;
  std::string label;  // empty when the equation is label-independent
  bool holds = true;
  std::string value;
};

struct Refutation {
  bool refuted = false;
  std::string violated;  // name of the first violated equation
  std::string label;
  std::vector<TraceLine> trace;
};

namespace detail {

class RefuteRun {
 public:
  Refutation out;

  /// Records an equation; returns false once it fails.
  bool record(const std::string& eq, bool holds, const std::string& value = {}, const std::string& label = {}) {
    out.trace.push_back({eq, label, holds, value});
    if (!holds && !out.refuted) {
      out.refuted = true;
      out.violated = eq;
      out.label = label;
    }
    return holds;
  }
};

inline bool shapes_fit(const YonedaExt& e, const YonedaExt& ep, const Roof& r) {
  const auto& m = r.middle;
  if (m.objects.size() != 4 || m.maps.size() != 3 || r.up.size() != 4 || r.down.size() != 4) return false;
  for (std::size_t k = 0; k < 3; ++k)
    if (m.maps[k].matrix.rows() != m.objects[k + 1].dim() || m.maps[k].matrix.cols() != m.objects[k].dim())
      return false;
  for (std::size_t k = 0; k < 4; ++k) {
    if (r.up[k].matrix.rows() != e.objects[k].dim() || r.up[k].matrix.cols() != m.objects[k].dim()) return false;
    if (r.down[k].matrix.rows() != ep.objects[k].dim() || r.down[k].matrix.cols() != m.objects[k].dim())
      return false;
  }
  return true;
}

}  // namespace detail

/// Runs the obstruction chain on a candidate roof over (E, E') for the given
/// parameters, using E's matrices and the roof's own maps and operators.
/// Reports the first violated equation; refuted = false means the roof is valid.
inline Refutation refute_roof(const Example33Params& params, const Roof& roof) {
  const YonedaExt e = build_example33(params);
  const YonedaExt ep = build_example33_split();
  detail::RefuteRun run;

  if (!run.record("roof shape", detail::shapes_fit(e, ep, roof))) return run.out;
  const auto& mid = roof.middle;
  if (!run.record("roof shape", mid.head() == e.head() && mid.tail() == e.tail(), "endpoints S and Q_M"))
    return run.out;
  for (std::size_t k : {0u, 3u})
    if (!run.record("roof shape",
                    roof.up[k].matrix == QMatrix::identity(mid.objects[k].dim()) &&
                        roof.down[k].matrix == QMatrix::identity(mid.objects[k].dim()),
                    "identity ladder maps at S and Q_M"))
      return run.out;

  {
    YonedaExt required = mid;
    for (std::size_t k = 0; k < 3; ++k) required.maps[k].corr = merge(mid.maps[k].corr, merge(e.maps[k].corr, ep.maps[k].corr));
    const auto rep = check_exact(required);
    if (!run.record("E″ exact", rep.ok(), rep.ok() ? "" : rep.failures().front().name)) return run.out;
  }

  const QMatrix& ipp = mid.maps[0].matrix;  // i″: S -> T′
  const QMatrix& h = mid.maps[1].matrix;    // T′ -> V′
  const QMatrix& hp = mid.maps[2].matrix;   // V′ -> Q_M
  const QMatrix& f = roof.up[1].matrix;
  const QMatrix& g = roof.up[2].matrix;
  const QMatrix& fp = roof.down[1].matrix;
  const QMatrix& gp = roof.down[2].matrix;
  const QMatrix& i = e.maps[0].matrix;
  const QMatrix& j = e.maps[1].matrix;
  const QMatrix& k = e.maps[2].matrix;

  if (!run.record("f∘i″ = i", f * ipp == i)) return run.out;
  if (!run.record("j∘f = g∘h", j * f == g * h)) return run.out;
  if (!run.record("k∘g = h′", k * g == hp)) return run.out;
  if (!run.record("f′∘i″ = id_S", fp * ipp == QMatrix::identity(2))) return run.out;
  if (!run.record("g′∘h = 0", (gp * h).is_zero())) return run.out;
  if (!run.record("g′ = h′", gp == hp)) return run.out;

  const GMHSObject& tp = mid.objects[1];
  const GMHSObject& vp = mid.objects[2];
  const QSubspace tpp = kernel(fp);  // T″
  const std::size_t n = tpp.dim();
  if (!run.record("T′ = S ⊕ T″", n + 2 == tp.dim() && intersect(image(ipp), tpp).is_zero(),
                  "dim T′ = " + std::to_string(tp.dim()) + ", dim T″ = " + std::to_string(n)))
    return run.out;

  // Basis c_1..c_n of T″ as columns, and f|T″ = [p t u].
  const QMatrix c = tpp.basis().transpose();
  const QMatrix fc = f * c;
  QVec pv(n), tv(n);
  for (std::size_t a = 0; a < n; ++a) {
    pv[a] = fc(0, a);
    tv[a] = fc(1, a);
  }
  run.record("f|T″ = [p t u]", true, format(fc.transpose()));

  const int neg = -1 - tp.mhs.base_weight;  // index of absolute weight -1
  bool weights_ok = true;
  for (const auto& x : intersect(tpp, tp.mhs.W.at(neg)).vectors()) weights_ok = weights_ok && (f * x)[0].is_zero();
  if (!run.record("p_j = 0 on W₋₁T″", weights_ok)) return run.out;

  const CMatrix cc = to_complex(c);
  const CSubspace tpp_c = complexify(tpp);
  std::vector<CMatrix> rprime;  // row-convention matrices of x_{D_i} on T″
  for (const auto& l : ex33::w_labels()) {
    const CMatrix x = tp.op(l);
    if (!run.record("f′∘x_{D_i} = f′", to_complex(fp) * x == to_complex(fp), "", l)) return run.out;
    CMatrix r(n, n);
    for (std::size_t a = 0; a < n; ++a) {
      const CVec coords = *tpp_c.coordinates(x * cc.col(a));
      for (std::size_t b = 0; b < n; ++b) r(a, b) = coords[b];
    }
    run.record("R′_i", true, format(r), l);
    rprime.push_back(std::move(r));
  }

  const CMatrix id_n = CMatrix::identity(n);
  const CVec pc = to_complex(pv), tc = to_complex(tv);
  for (std::size_t li = 0; li < rprime.size(); ++li) {
    const auto& l = ex33::w_labels()[li];
    const CMatrix rm = rprime[li] - id_n;
    if (!run.record("(R′_i − E)p⃗ = 0", is_zero_vec(rm * pc), format(pv), l)) return run.out;
    CVec lhs = rm * tc;
    bool ok = true;
    for (std::size_t a = 0; a < n; ++a) ok = ok && lhs[a] == -pc[a];
    if (!run.record("(R′_i − E)t⃗ = −p⃗", ok, format(tv), l)) return run.out;
  }
  for (std::size_t li = 0; li < rprime.size(); ++li) {
    const auto& l = ex33::w_labels()[li];
    const CMatrix prod = (rprime[li] + id_n) * (rprime[li] - id_n);
    if (!run.record("(R′_i+E)(R′_i−E) = 0", prod.is_zero(), format(prod), l)) return run.out;
  }
  if (!run.record("p⃗ = 0", is_zero_vec(pv), format(pv))) return run.out;

  // V′ = <v> ⊕ h(T″), d_j = h(c_j).
  const QMatrix d = h * c;
  const QSubspace dspan = image(d);
  if (!run.record("V′ = ⟨v⟩ ⊕ h(T″)", dspan.dim() == n && vp.dim() == n + 1,
                  "dim V′ = " + std::to_string(vp.dim())))
    return run.out;
  const QVec v = quotient_basis(QSubspace::full(vp.dim()), dspan).front();
  const QVec gv = g * v;
  const Rat& p = gv[0];
  const Rat& q = gv[1];
  run.record("g(v) = pα + qβ", true, "p = " + p.str() + ", q = " + q.str());
  if (!run.record("q ≠ 0", !q.is_zero())) return run.out;
  const QMatrix gd = g * d;
  bool gd_ok = true;
  for (std::size_t a = 0; a < n; ++a) gd_ok = gd_ok && gd(0, a) == pv[a] && gd(1, a).is_zero();
  if (!run.record("g(d_j) = p_j·α", gd_ok)) return run.out;

  QMatrix basis(vp.dim(), n + 1);
  for (std::size_t r = 0; r < vp.dim(); ++r) {
    basis(r, 0) = v[r];
    for (std::size_t a = 0; a < n; ++a) basis(r, a + 1) = d(r, a);
  }
  const CMatrix basis_c = to_complex(basis);
  for (const auto& l : ex33::z_labels()) {
    const CVec yv = vp.op(l) * to_complex(v);
    const CVec a = *solve(basis_c, yv);
    const Rat& cl = ex33::parameter(params, l);
    if (!run.record("a₀ = −1", a[0] == GaussRat(-1), "a₀ = " + a[0].str(), l)) return run.out;
    if (!run.record("q·c(D_i) = −2p", q * cl == Rat(-2) * p,
                    q.str() + "·" + cl.str() + " vs " + (Rat(-2) * p).str(), l))
      return run.out;
  }

  const auto rep = check_roof_report(e, ep, roof);
  run.record("roof valid", rep.ok(), rep.ok() ? "" : rep.failures().front().name);
  return run.out;
}

// ---------------------------------------------------------------------------
// Obstruction certificate.

struct CertificateStep {
  std::string equation;
  std::string label;
  std::string instantiation;
  bool verified = false;
  friend bool operator==(const CertificateStep&, const CertificateStep&) = default;
};

struct ObstructionCertificate {
  Example33Params params;
  std::vector<CertificateStep> steps;
  std::size_t candidates_refuted = 0;  // middles for which the ladder system has no solution
  friend bool operator==(const ObstructionCertificate&, const ObstructionCertificate&) = default;
};

/// The equation chain instantiated on the fixture matrices. Each step carries
/// the exact fixture computation it rests on.
inline std::vector<CertificateStep> obstruction_chain(const Example33Params& params) {
  const YonedaExt e = build_example33(params);
  const GMHSObject& s = e.objects[0];
  const GMHSObject& t = e.objects[1];
  const GMHSObject& v = e.objects[2];
  const QMatrix& j = e.maps[1].matrix;
  const QMatrix& k = e.maps[2].matrix;
  std::vector<CertificateStep> steps;

  bool s_trivial = true;
  for (const auto& l : ex33::w_labels()) s_trivial = s_trivial && s.op(l) == CMatrix::identity(2);
  steps.push_back({"T′ = S ⊕ T″", "",
                   "f′∘i″ = id_S splits T′ = i″(S) ⊕ ker f′; w_{D_i} = id on S, so T″ = ker f′ is x_{D_i}-stable",
                   s_trivial});

  for (const auto& l : ex33::w_labels()) {
    const CMatrix wm = t.op(l) - CMatrix::identity(3);
    const bool e_row = wm(0, 0).is_zero() && wm(0, 1).is_zero() && wm(0, 2).is_zero();
    steps.push_back({"(R′_i − E)p⃗ = 0", l,
                     "w_{D_i} − E = " + format(wm) + " has zero e-row, so the e-coordinates of f∘x_{D_i} = w_{D_i}∘f on T″ read R′_i p⃗ = p⃗",
                     e_row});
  }
  for (const auto& l : ex33::w_labels()) {
    const CMatrix wm = t.op(l) - CMatrix::identity(3);
    const bool s_row = wm(1, 0) == GaussRat(-1) && wm(1, 1).is_zero() && wm(1, 2).is_zero();
    steps.push_back({"(R′_i − E)t⃗ = −p⃗", l, "s₁-row of w_{D_i} − E is (−1,0,0)", s_row});
  }
  const auto& jc = e.maps[1].corr.pairings;
  for (const auto& l : ex33::w_labels()) {
    const std::string z = "z" + l.substr(1);
    const bool paired = std::find(jc.begin(), jc.end(), Pairing{l, z, PairCase::WZ}) != jc.end();
    steps.push_back({"(R′_i+E)(R′_i−E) = 0", l,
                     "h intertwines x_{D_i} with the involution y_{D_i} (pairing " + l + " → " + z +
                         ") and is injective on T″, so x_{D_i}² = id on T″",
                     paired});
  }
  const bool j_shape = j.col(0) == QVec{Rat(1), Rat(0)} && is_zero_vec(j.col(1)) && is_zero_vec(j.col(2));
  steps.push_back({"p⃗ = 0", "",
                   "2p⃗ = (R′_i+E)p⃗ − (R′_i−E)p⃗ = −(R′_i+E)(R′_i−E)t⃗ = 0; hence g(d_j) = j(f(c_j)) = p_j·α = 0 since j = " +
                       format(j),
                   j_shape});
  const bool k_beta = k(0, 0).is_zero() && k(0, 1) == Rat(1);
  for (const auto& l : ex33::z_labels()) {
    const CMatrix z = v.op(l);
    const Rat& cl = ex33::parameter(params, l);
    const bool z_ok = z.col(0) == CVec{GaussRat(1), GaussRat(0)} && z.col(1) == CVec{GaussRat(cl), GaussRat(-1)};
    steps.push_back({"a₀ = −1", l,
                     "z_{D_i}(pα + qβ) = (p + q·" + cl.str() + ")α − qβ = g(y_{D_i} v) = a₀(pα + qβ), q = h′(v) ≠ 0 since k = " +
                         format(k),
                     z_ok && k_beta});
    steps.push_back({"q·c(D_i) = −2p", l, "q·" + cl.str() + " = −2p", z_ok});
  }
  const Rat det = Rat(2) * (params.c1 - params.c2);
  steps.push_back({"c(D_i) = −2p/q", "",
                   "c(D₁) = −2p/q = c(D₂), but c(D₁) = " + params.c1.str() + ", c(D₂) = " + params.c2.str() +
                       "; det [[" + params.c1.str() + ",2],[" + params.c2.str() + ",2]] = " + det.str() +
                       " forces q = 0",
                   !det.is_zero()});
  return steps;
}

inline ObstructionCertificate build_certificate(const Example33Params& params) {
  return {params, obstruction_chain(params), 0};
}

/// Recomputes every step from the fixture and compares.
inline bool check_certificate(const ObstructionCertificate& cert) {
  const auto expected = obstruction_chain(cert.params);
  if (expected.size() != cert.steps.size()) return false;
  for (std::size_t a = 0; a < expected.size(); ++a) {
    const auto& x = expected[a];
    const auto& y = cert.steps[a];
    if (x.equation != y.equation || x.label != y.label || x.instantiation != y.instantiation || !x.verified ||
        !y.verified)
      return false;
  }
  return true;
}

inline std::string render_certificate(const ObstructionCertificate& cert) {
  std::string s = "obstruction certificate: c(D1) = " + cert.params.c1.str() + ", c(D2) = " + cert.params.c2.str() + "\n";
  const YonedaExt e = build_example33(cert.params);
  s += "  w_{D_i} on T (columns e, s1, s2) = " + format(e.objects[1].op("wD1")) + "\n";
  for (const auto& l : ex33::z_labels()) s += "  z_" + l.substr(1) + " on V (columns α, β) = " + format(e.objects[2].op(l)) + "\n";
  std::size_t n = 1;
  for (const auto& st : cert.steps) {
    s += std::to_string(n++) + ". " + st.equation;
    if (!st.label.empty()) s += " [" + st.label + "]";
    s += ": " + st.instantiation + (st.verified ? "" : " (NOT VERIFIED)") + "\n";
  }
  s += "no roof among " + std::to_string(cert.candidates_refuted) + " candidate middle sequences\n";
  return s;
}

inline std::string render_refutation(const Refutation& r) {
  std::string s;
  for (const auto& t : r.trace) {
    s += (t.holds ? "  ok    " : "  FAIL  ") + t.equation;
    if (!t.label.empty()) s += " [" + t.label + "]";
    if (!t.value.empty()) s += ": " + t.value;
    s += "\n";
  }
  s += r.refuted ? "refuted at " + r.violated + (r.label.empty() ? "" : " [" + r.label + "]") + "\n"
                 : "not refuted\n";
  return s;
}

// ---------------------------------------------------------------------------
// Classification.

enum class Verdict { Trivial, NonTrivial, Unknown };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Trivial: return "Trivial";
    case Verdict::NonTrivial: return "NonTrivial";
    case Verdict::Unknown: return "Unknown";
  }
  return "?";
}

struct Classification {
  Verdict verdict = Verdict::Unknown;
  std::optional<Roof> witness;
  std::optional<ObstructionCertificate> certificate;
  std::size_t candidates = 0;
};

namespace detail {

/// Inserts 0 -> P -id-> P -> 0 at the two interior positions of a length-2 extension.
inline YonedaExt pad_middle(const YonedaExt& m, const GMHSObject& pad) {
  YonedaExt out = m;
  const std::size_t d = pad.dim();
  out.objects[1] = direct_sum(m.objects[1], pad);
  out.objects[2] = direct_sum(m.objects[2], pad);
  out.maps[0] = {out.objects[0], out.objects[1], vstack(m.maps[0].matrix, QMatrix::zero(d, m.objects[0].dim())),
                 m.maps[0].corr};
  out.maps[1] = {out.objects[1], out.objects[2], block_diag(m.maps[1].matrix, QMatrix::identity(d)), m.maps[1].corr};
  out.maps[2] = {out.objects[2], out.objects[3], hstack(m.maps[2].matrix, QMatrix::zero(m.objects[3].dim(), d)),
                 m.maps[2].corr};
  return out;
}

}  // namespace detail

/// Candidate middle sequences in search order: E' and E, each padded by up to
/// `bound` contractible one-dimensional pieces, keeping dims <= dims(E) + bound.
/// Every candidate is an exact GMHS sequence under the merged correspondences.
inline std::vector<YonedaExt> roof_candidates(const Example33Params& params, std::size_t bound) {
  const YonedaExt e = build_example33(params);
  const YonedaExt ep = build_example33_split();
  std::vector<GMHSObject> pads;
  for (const auto& m : std::vector<std::set<std::string>>{{}, {"zD1"}, {"zD2"}, {"zD1", "zD2"}}) {
    // w_{D_i} matches z_{D_i} so the identity block respects the w -> z pairing of the middle map.
    GMHSObject pad = make_QM(ex33::site(), m, -1);
    for (const auto& l : ex33::w_labels()) pad.w_ops[l] = pad.op("z" + l.substr(1));
    pads.push_back(std::move(pad));
  }

  auto fits = [&](const YonedaExt& c) {
    for (std::size_t k = 0; k < 4; ++k)
      if (c.objects[k].dim() > e.objects[k].dim() + bound) return false;
    return true;
  };
  std::vector<YonedaExt> out;
  for (const auto& base : {ep, e}) {
    YonedaExt b = base;
    for (std::size_t k = 0; k < 3; ++k) b.maps[k].corr = merge(base.maps[k].corr, merge(e.maps[k].corr, ep.maps[k].corr));
    // Multisets of pads of size 0..bound, in lexicographic order of pad indices.
    std::vector<std::vector<std::size_t>> layer{{}};
    for (std::size_t size = 0; size <= bound; ++size) {
      std::vector<std::vector<std::size_t>> next;
      for (const auto& combo : layer) {
        YonedaExt c = b;
        for (std::size_t idx : combo) c = detail::pad_middle(c, pads[idx]);
        if (fits(c)) out.push_back(std::move(c));
        for (std::size_t idx = combo.empty() ? 0 : combo.back(); idx < pads.size(); ++idx) {
          auto longer = combo;
          longer.push_back(idx);
          next.push_back(std::move(longer));
        }
      }
      layer = std::move(next);
    }
  }
  return out;
}

inline Classification classify_example33(const Example33Params& params, std::size_t search_bound = 2) {
  const YonedaExt e = build_example33(params);
  const YonedaExt ep = build_example33_split();
  Classification result;
  const auto candidates = roof_candidates(params, search_bound);
  result.candidates = candidates.size();
  for (const auto& c : candidates)
    if (auto roof = solve_roof(e, ep, c)) {
      result.verdict = Verdict::Trivial;
      result.witness = std::move(roof);
      return result;
    }
  if (!(params.c1 == params.c2)) {
    ObstructionCertificate cert = build_certificate(params);
    cert.candidates_refuted = candidates.size();
    if (check_certificate(cert)) {
      result.verdict = Verdict::NonTrivial;
      result.certificate = std::move(cert);
    }
  }
  return result;
}

}  // namespace gmhs
