// Independent brute-force oracles: Leibniz determinants and ranks by minors.
// Deliberately share no code with the row-reduction routines under test.

#pragma once

#include <gmhs/matrix.hpp>

#include <algorithm>
#include <numeric>
#include <vector>

namespace gmhs::testing {

template <ExactField F>
F leibniz_det(const Matrix<F>& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  F total(0);
  do {
    std::size_t inversions = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (perm[a] > perm[b]) ++inversions;
    F term(inversions % 2 ? -1 : 1);
    for (std::size_t a = 0; a < n && !is_zero(term); ++a) term *= m(a, perm[a]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

template <ExactField F>
Matrix<F> submatrix(const Matrix<F>& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  Matrix<F> s(rows.size(), cols.size());
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = 0; b < cols.size(); ++b) s(a, b) = m(rows[a], cols[b]);
  return s;
}

inline std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> mask(n, false);
  std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::vector<std::size_t> c;
    for (std::size_t i = 0; i < n; ++i)
      if (mask[i]) c.push_back(i);
    out.push_back(std::move(c));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

/// Largest r with a nonzero r x r minor.
template <ExactField F>
std::size_t rank_by_minors(const Matrix<F>& m) {
  for (std::size_t r = std::min(m.rows(), m.cols()); r > 0; --r)
    for (const auto& rows : combinations(m.rows(), r))
      for (const auto& cols : combinations(m.cols(), r))
        if (!is_zero(leibniz_det(submatrix(m, rows, cols)))) return r;
  return 0;
}

/// Rank of a list of row vectors in ambient dimension n.
template <ExactField F>
std::size_t rank_of_rows(const std::vector<Vec<F>>& rows, std::size_t n) {
  return rank_by_minors(Matrix<F>::from_rows(rows, n));
}

}  // namespace gmhs::testing
