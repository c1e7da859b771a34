// Hand-built roofs over (E, E') for c(D1) = 1, c(D2) = 2, each paired with the
// equation refute_roof is expected to name.

#pragma once

#include <gmhs/example33.hpp>

#include <string>
#include <vector>

namespace gmhs::testing {

inline const Example33Params kDistinctParams{Rat(1), Rat(2)};

struct CandidateRoof {
  std::string name;
  Roof roof;
  std::string violated;
  std::string label;
};

inline CMatrix diag_c(const std::vector<int>& d) {
  CMatrix m(d.size(), d.size());
  for (std::size_t a = 0; a < d.size(); ++a) m(a, a) = GaussRat(d[a]);
  return m;
}

/// Ladder maps given as matrices; every ladder map pairs labels identically.
inline Roof ladder(const YonedaExt& mid, const std::vector<QMatrix>& up, const std::vector<QMatrix>& down) {
  const YonedaExt e = build_example33(kDistinctParams), ep = build_example33_split();
  const auto id = identity_correspondence(ex33::site(), ex33::site());
  Roof r{mid, {}, {}};
  for (std::size_t k = 0; k < 4; ++k) {
    r.up.push_back({mid.objects[k], e.objects[k], up[k], id});
    r.down.push_back({mid.objects[k], ep.objects[k], down[k], id});
  }
  return r;
}

/// E with x_{D_i} = diag(sign,1,1) on T and y_{D_i} = diag(sign,-1) on V: the
/// e-line of T becomes a sign-eigenline mapping onto alpha.
inline YonedaExt signed_middle(int sign) {
  YonedaExt m = build_example33(kDistinctParams);
  for (const auto& l : ex33::w_labels()) {
    m.objects[1].w_ops[l] = diag_c({sign, 1, 1});
    m.objects[2].w_ops[l] = diag_c({sign, 1});
  }
  for (const auto& l : ex33::z_labels()) {
    m.objects[1].z_ops[l] = diag_c({sign, 1, 1});
    m.objects[2].z_ops[l] = diag_c({sign, -1});
  }
  m.maps[0].target = m.maps[1].source = m.objects[1];
  m.maps[1].target = m.maps[2].source = m.objects[2];
  return m;
}

inline std::vector<CandidateRoof> hand_built_roofs() {
  const QMatrix i1 = QMatrix::identity(1), i2 = QMatrix::identity(2), i3 = QMatrix::identity(3);
  const QMatrix drop_e{{Rat(0), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(1)}};
  const QMatrix k = ex33::matrix_k();
  const YonedaExt e = build_example33(kDistinctParams), ep = build_example33_split();
  YonedaExt dead = e;
  dead.maps[1].matrix = QMatrix::zero(2, 3);

  std::vector<CandidateRoof> out;
  out.push_back({"E itself, f′ dropping e", ladder(e, {i2, i3, i2, i1}, {i2, drop_e, k, i1}), "f′∘x_{D_i} = f′", "wD1"});
  out.push_back({"E itself, f′ = 0", ladder(e, {i2, i3, i2, i1}, {i2, QMatrix::zero(2, 3), k, i1}), "f′∘i″ = id_S", ""});
  out.push_back({"E′ middle, g(1) = α", ladder(ep, {i2, ex33::matrix_i(), QMatrix{{Rat(1)}, {Rat(0)}}, i1}, {i2, i2, i1, i1}),
                 "k∘g = h′", ""});
  out.push_back({"middle with h = 0", ladder(dead, {i2, i3, i2, i1}, {i2, drop_e, k, i1}), "E″ exact", ""});
  out.push_back({"anti-invariant e-line", ladder(signed_middle(-1), {i2, i3, i2, i1}, {i2, drop_e, k, i1}),
                 "(R′_i − E)p⃗ = 0", "wD1"});
  out.push_back({"invariant e-line", ladder(signed_middle(1), {i2, i3, i2, i1}, {i2, drop_e, k, i1}),
                 "(R′_i − E)t⃗ = −p⃗", "wD1"});
  const auto witness = solve_roof(build_example33({Rat(1), Rat(1)}), ep, ep);
  if (witness) out.push_back({"witness for c(D1) = c(D2) = 1", *witness, "q·c(D_i) = −2p", "zD2"});
  return out;
}

}  // namespace gmhs::testing
