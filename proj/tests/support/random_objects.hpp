// Seeded generators for random exact data: rationals, matrices, pure and mixed
// Hodge structures, and morphisms between them.

#pragma once

#include <gmhs/morphism_space.hpp>

#include <random>
#include <vector>

namespace gmhs::testing {

class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  Rat rat(int range = 3) {
    const int num = integer(-range, range);
    const int den = integer(1, 2);
    return Rat(num, den);
  }
  GaussRat gauss(int range = 3) { return {rat(range), rat(range)}; }

  QMatrix qmatrix(std::size_t r, std::size_t c, int range = 3) {
    QMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rat(range);
    return m;
  }
  CMatrix cmatrix(std::size_t r, std::size_t c) {
    CMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = gauss();
    return m;
  }
  QMatrix invertible(std::size_t n) {
    for (;;) {
      QMatrix m = qmatrix(n, n);
      if (rank(m) == n) return m;
    }
  }
  QSubspace qsubspace(std::size_t n, std::size_t d) {
    for (;;) {
      const QSubspace s = QSubspace::row_space(qmatrix(d, n));
      if (s.dim() == d) return s;
    }
  }

  /// Pure structure of weight k and dimension d, given in its own coordinates.
  /// Odd weight needs even d. Even weight gets an optional (m+1, m-1) + (m-1, m+1) pair.
  HodgeFiltration pure_filtration(int k, std::size_t d) {
    HodgeFiltration f{d, {}};
    if (d == 0) return f;
    const int m = k >= 0 ? k / 2 : -((-k + 1) / 2);  // floor(k / 2)
    if (k % 2 != 0) {
      // H = H^{m+1,m} + H^{m,m+1}: F^{m+1} is a half-dimensional subspace V with V + conj V = H.
      for (;;) {
        const CSubspace v = CSubspace::row_space(cmatrix(d / 2, d));
        if (v.dim() == d / 2 && sum(v, conj_subspace(v)).is_full()) {
          f.steps[m + 1] = v;
          f.steps[m] = CSubspace::full(d);
          return f;
        }
      }
    }
    if (d >= 2 && coin()) {
      // One-dimensional H^{m+1,m-1} spanned by v, its conjugate, and d-2 real (m,m) vectors.
      for (;;) {
        const CVec v = cmatrix(1, d).row(0);
        const QSubspace real_part = qsubspace(d, d - 2);
        std::vector<CVec> rows{v};
        for (const auto& r : real_part.vectors()) rows.push_back(to_complex(r));
        std::vector<CVec> all = rows;
        all.push_back(conj_vec(v));
        if (CSubspace::span(all, d).is_full()) {
          f.steps[m + 1] = CSubspace::span({v}, d);
          f.steps[m] = CSubspace::span(rows, d);
          f.steps[m - 1] = CSubspace::full(d);
          return f;
        }
      }
    }
    f.steps[m] = CSubspace::full(d);
    return f;
  }

  /// Random mixed Hodge structure of dimension <= max_dim with at most
  /// max_steps nonzero graded pieces, in a random rational basis.
  MHSObject mhs(std::size_t max_dim = 6, int max_steps = 3, int base_weight = 0) {
    const int steps = integer(1, max_steps);
    int r = integer(-2, 0);
    std::vector<std::pair<int, std::size_t>> pieces;  // (W-index, dim)
    std::size_t total = 0;
    for (int s = 0; s < steps; ++s) {
      const int k = base_weight + r;
      std::size_t d = static_cast<std::size_t>(integer(1, 2));
      if (k % 2 != 0) d = 2;
      if (total + d > max_dim) break;
      pieces.emplace_back(r, d);
      total += d;
      r += integer(1, 2);
    }
    if (pieces.empty()) pieces.emplace_back(0, base_weight % 2 != 0 ? 2 : 1), total = pieces[0].second;

    // Split object: blocks in increasing weight order.
    MHSObject m;
    m.dim = total;
    m.base_weight = base_weight;
    m.W.dim = m.F.dim = total;
    std::vector<HodgeFiltration> filt;
    for (const auto& [idx, d] : pieces) filt.push_back(pure_filtration(base_weight + idx, d));
    int plo = 0, phi = 0;
    for (const auto& f : filt) {
      plo = std::min(plo, f.lo());
      phi = std::max(phi, f.hi());
    }
    std::size_t offset = 0;
    for (const auto& [idx, d] : pieces) {
      offset += d;
      std::vector<QVec> rows;
      for (std::size_t i = 0; i < offset; ++i) rows.push_back(unit_vec<Rat>(total, i));
      m.W.steps[idx] = QSubspace::span(rows, total);
    }
    for (int p = plo; p <= phi + 1; ++p) {
      std::vector<CVec> rows;
      std::size_t off = 0;
      for (std::size_t b = 0; b < pieces.size(); ++b) {
        for (const auto& v : filt[b].at(p).vectors()) {
          CVec w(total);
          for (std::size_t i = 0; i < v.size(); ++i) w[off + i] = v[i];
          rows.push_back(std::move(w));
        }
        off += pieces[b].second;
      }
      m.F.steps[p] = CSubspace::span(rows, total);
    }
    // Twist F by a W-preserving unipotent map, then change basis.
    QMatrix u = QMatrix::identity(total);
    std::size_t row_off = 0;
    for (std::size_t b = 0; b < pieces.size(); ++b) {
      std::size_t col_off = row_off + pieces[b].second;
      for (std::size_t b2 = b + 1; b2 < pieces.size(); ++b2) {
        for (std::size_t i = 0; i < pieces[b].second; ++i)
          for (std::size_t j = 0; j < pieces[b2].second; ++j) u(row_off + i, col_off + j) = rat();
        col_off += pieces[b2].second;
      }
      row_off += pieces[b].second;
    }
    return change_basis(twist_F(m, u), invertible(total));
  }

  static MHSObject twist_F(MHSObject m, const QMatrix& u) {
    const CMatrix uc = to_complex(u);
    for (auto& [p, s] : m.F.steps) s = apply(uc, s);
    return m;
  }

  /// The same structure expressed after the coordinate change x -> b x.
  static MHSObject change_basis(MHSObject m, const QMatrix& b) {
    for (auto& [r, s] : m.W.steps) s = apply(b, s);
    const CMatrix bc = to_complex(b);
    for (auto& [p, s] : m.F.steps) s = apply(bc, s);
    return m;
  }

  /// Random element of Hom_MHS(a, b) as a combination of a basis.
  QMatrix morphism(const MHSObject& a, const MHSObject& b) {
    QMatrix out(b.dim, a.dim);
    for (const auto& m : hom_mhs(a, b)) out += m * rat();
    return out;
  }

 private:
  std::mt19937 rng_;
};

}  // namespace gmhs::testing
