// Subspaces of F^n kept in canonical (reduced row-echelon) form, so that
// equality of subspaces is equality of representations.

#pragma once

#include <gmhs/matrix.hpp>

#include <string>
#include <vector>

namespace gmhs {

template <ExactField F>
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

  /// Span of the rows of m.
  static Subspace row_space(const Matrix<F>& m) {
    Subspace s(m.cols());
    const auto e = echelon(m);
    s.basis_ = Matrix<F>(e.rank(), m.cols());
    for (std::size_t i = 0; i < e.rank(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) s.basis_(i, j) = e.reduced(i, j);
    return s;
  }
  static Subspace span(const std::vector<Vec<F>>& vectors, std::size_t ambient_dim) {
    return row_space(Matrix<F>::from_rows(vectors, ambient_dim));
  }
  static Subspace zero(std::size_t n) { return Subspace(n); }
  static Subspace full(std::size_t n) { return row_space(Matrix<F>::identity(n)); }

  [[nodiscard]] std::size_t ambient_dim() const { return ambient_; }
  [[nodiscard]] std::size_t dim() const { return basis_.rows(); }
  [[nodiscard]] bool is_zero() const { return dim() == 0; }
  [[nodiscard]] bool is_full() const { return dim() == ambient_; }
  /// Canonical basis: reduced row-echelon rows, no zero rows.
  [[nodiscard]] const Matrix<F>& basis() const { return basis_; }
  [[nodiscard]] std::vector<Vec<F>> vectors() const { return basis_.row_list(); }

  /// Pivot columns of the canonical basis.
  [[nodiscard]] std::vector<std::size_t> pivots() const {
    std::vector<std::size_t> p;
    for (std::size_t i = 0; i < dim(); ++i) {
      std::size_t j = 0;
      while (gmhs::is_zero(basis_(i, j))) ++j;
      p.push_back(j);
    }
    return p;
  }

  [[nodiscard]] bool contains(const Vec<F>& v) const {
    if (v.size() != ambient_) throw InputError("Subspace::contains: dimension mismatch");
    // Reduce v against the canonical basis using the pivots.
    Vec<F> r = v;
    const auto piv = pivots();
    for (std::size_t i = 0; i < dim(); ++i) {
      const F c = r[piv[i]];
      if (gmhs::is_zero(c)) continue;
      for (std::size_t j = 0; j < ambient_; ++j) r[j] -= c * basis_(i, j);
    }
    return is_zero_vec(r);
  }

  [[nodiscard]] bool contains(const Subspace& s) const {
    require_same_ambient(s, "contains");
    for (const auto& v : s.vectors())
      if (!contains(v)) return false;
    return true;
  }

  /// Coordinates of v in the canonical basis; nullopt when v is not in the subspace.
  [[nodiscard]] std::optional<Vec<F>> coordinates(const Vec<F>& v) const {
    return solve(basis_.transpose(), v);
  }

  /// Annihilator rows: a basis of {y : y . b = 0 for every basis row b}, so that
  /// x is in the subspace iff annihilator() * x = 0 (bilinear, no conjugation).
  [[nodiscard]] Matrix<F> annihilator() const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

  void require_same_ambient(const Subspace& o, const char* what) const {
    if (ambient_ != o.ambient_)
      throw InputError(std::string("Subspace ") + what + ": ambient " + std::to_string(ambient_) +
                       " vs " + std::to_string(o.ambient_));
  }

 private:
  std::size_t ambient_ = 0;
  Matrix<F> basis_;
};

using QSubspace = Subspace<Rat>;
using CSubspace = Subspace<GaussRat>;

/// {v : m*v = 0}.
template <ExactField F>
Subspace<F> kernel(const Matrix<F>& m) {
  const auto e = echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec<F>> gens;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec<F> v(m.cols());
    v[free] = F(1);
    for (std::size_t r = 0; r < e.rank(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    gens.push_back(std::move(v));
  }
  return Subspace<F>::span(gens, m.cols());
}

/// Column space of m.
template <ExactField F>
Subspace<F> image(const Matrix<F>& m) {
  return Subspace<F>::row_space(m.transpose());
}

template <ExactField F>
Matrix<F> Subspace<F>::annihilator() const {
  return kernel(basis_).basis();
}

template <ExactField F>
Subspace<F> sum(const Subspace<F>& a, const Subspace<F>& b) {
  a.require_same_ambient(b, "sum");
  return Subspace<F>::row_space(vstack(a.basis(), b.basis()));
}

/// Intersection as the kernel of the stacked annihilator constraints.
template <ExactField F>
Subspace<F> intersect(const Subspace<F>& a, const Subspace<F>& b) {
  a.require_same_ambient(b, "intersect");
  if (a.is_zero() || b.is_zero()) return Subspace<F>::zero(a.ambient_dim());
  return kernel(vstack(a.annihilator(), b.annihilator()));
}

/// m applied to every vector of s.
template <ExactField F>
Subspace<F> apply(const Matrix<F>& m, const Subspace<F>& s) {
  if (m.cols() != s.ambient_dim()) throw InputError("apply: dimension mismatch");
  if (s.is_zero()) return Subspace<F>::zero(m.rows());
  return image(m * s.basis().transpose());
}

/// {x : m*x in s}.
template <ExactField F>
Subspace<F> preimage(const Matrix<F>& m, const Subspace<F>& s) {
  if (m.rows() != s.ambient_dim()) throw InputError("preimage: dimension mismatch");
  return kernel(s.annihilator() * m);
}

/// Coset representatives completing `sub` to `ambient`: the canonical basis
/// vectors of `ambient` sitting at the non-pivot columns of `sub` written in
/// ambient coordinates. Deterministic and depends only on the two subspaces.
template <ExactField F>
std::vector<Vec<F>> quotient_basis(const Subspace<F>& ambient, const Subspace<F>& sub) {
  ambient.require_same_ambient(sub, "quotient_basis");
  if (!ambient.contains(sub)) throw InputError("quotient_basis: sub is not contained in ambient");
  const auto amb_rows = ambient.vectors();
  const Matrix<F> amb_t = ambient.basis().transpose();
  std::vector<Vec<F>> coords;
  for (const auto& v : sub.vectors()) coords.push_back(*solve(amb_t, v));
  const auto c = Subspace<F>::span(coords, ambient.dim());
  std::vector<bool> is_pivot(ambient.dim(), false);
  for (auto p : c.pivots()) is_pivot[p] = true;
  std::vector<Vec<F>> reps;
  for (std::size_t k = 0; k < ambient.dim(); ++k)
    if (!is_pivot[k]) reps.push_back(amb_rows[k]);
  return reps;
}

inline CSubspace complexify(const QSubspace& s) {
  return CSubspace::row_space(to_complex(s.basis()));
}

inline CSubspace conj_subspace(const CSubspace& s) {
  return CSubspace::row_space(conj_matrix(s.basis()));
}

/// Q-points of a Q(i)-subspace: {x in Q^n : x in s}. Computed as the kernel of
/// the real and imaginary parts of the annihilator.
inline QSubspace rational_points(const CSubspace& s) {
  const CMatrix ann = s.annihilator();
  QMatrix stacked(2 * ann.rows(), ann.cols());
  for (std::size_t i = 0; i < ann.rows(); ++i)
    for (std::size_t j = 0; j < ann.cols(); ++j) {
      stacked(2 * i, j) = ann(i, j).re();
      stacked(2 * i + 1, j) = ann(i, j).im();
    }
  return kernel(stacked);
}

}  // namespace gmhs
