// Constructors for z- and w-operators, and the E1/E2 pages of the weight
// spectral sequence of a normal-crossing compactification given as strata data.

#pragma once

#include <gmhs/gmhs.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace gmhs {

/// The involution acting by -1 on `support` and +1 on `complement`. Without an
/// explicit complement the canonical one from quotient_basis is used.
template <ExactField F>
Matrix<F> build_z(std::size_t ambient_dim, const Subspace<F>& support,
                  const std::optional<Subspace<F>>& complement = std::nullopt) {
  if (support.ambient_dim() != ambient_dim) throw InputError("build_z: support has the wrong ambient dimension");
  std::vector<Vec<F>> comp;
  if (complement) {
    if (complement->ambient_dim() != ambient_dim ||
        support.dim() + complement->dim() != ambient_dim || !sum(support, *complement).is_full())
      throw InputError("build_z: complement is not complementary to the support");
    comp = complement->vectors();
  } else {
    comp = quotient_basis(Subspace<F>::full(ambient_dim), support);
  }
  std::vector<Vec<F>> cols = support.vectors();
  cols.insert(cols.end(), comp.begin(), comp.end());
  const Matrix<F> basis = Matrix<F>::from_cols(cols, ambient_dim);
  Matrix<F> diag = Matrix<F>::identity(ambient_dim);
  for (std::size_t k = 0; k < support.dim(); ++k) diag(k, k) = F(-1);
  return basis * diag * *inverse(basis);
}

/// Sorted tuple of divisor-component labels; the empty stratum is X itself.
using Stratum = std::vector<std::string>;

inline std::string to_string(const Stratum& k) {
  std::string s = "{";
  for (std::size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + k[i];
  return s + "}";
}

/// Cohomology of the strata D_K and the Gysin maps between them, as input data.
struct StrataData {
  std::vector<std::string> index_set;                             // sorted labels of the components D_i
  std::map<std::pair<Stratum, int>, std::size_t> cohomology_dims;  // (K, n) -> dim H^n(D_K)
  std::map<std::tuple<Stratum, Stratum, int>, QMatrix> gysin;      // (K, L, n): H^n(D_K) -> H^{n+2}(D_L)

  [[nodiscard]] std::size_t dim(const Stratum& k, int n) const {
    const auto it = cohomology_dims.find({k, n});
    return it == cohomology_dims.end() ? 0 : it->second;
  }

  /// Subsets of the index set with `size` elements, in lexicographic order.
  [[nodiscard]] std::vector<Stratum> strata(int size) const {
    std::vector<Stratum> out;
    if (size < 0 || static_cast<std::size_t>(size) > index_set.size()) return out;
    std::vector<std::size_t> idx(static_cast<std::size_t>(size));
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    const std::size_t n = index_set.size();
    while (true) {
      Stratum k;
      for (auto i : idx) k.push_back(index_set[i]);
      out.push_back(std::move(k));
      std::size_t i = idx.size();
      while (i > 0 && idx[i - 1] == n - idx.size() + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < idx.size(); ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
  }

  [[nodiscard]] ValidationReport validate() const {
    ValidationReport rep;
    for (std::size_t i = 1; i < index_set.size(); ++i)
      if (!(index_set[i - 1] < index_set[i])) rep.add("index set sorted and unique", false);
    auto known = [&](const Stratum& k) {
      for (std::size_t i = 0; i < k.size(); ++i) {
        if (i && !(k[i - 1] < k[i])) return false;
        if (!std::binary_search(index_set.begin(), index_set.end(), k[i])) return false;
      }
      return true;
    };
    for (const auto& [key, d] : cohomology_dims)
      if (!known(key.first)) rep.add("stratum " + to_string(key.first), false, "not a sorted subset of the index set");
    for (const auto& [key, m] : gysin) {
      const auto& [k, l, n] = key;
      if (!known(k) || !known(l)) {
        rep.add("gysin " + to_string(k) + "->" + to_string(l), false, "unknown stratum");
        continue;
      }
      if (l.size() + 1 != k.size() || !std::includes(k.begin(), k.end(), l.begin(), l.end()))
        rep.add("gysin " + to_string(k) + "->" + to_string(l), false, "target must drop exactly one index");
      if (m.rows() != dim(l, n + 2) || m.cols() != dim(k, n))
        rep.add("gysin " + to_string(k) + "->" + to_string(l) + " degree " + std::to_string(n) + " shape", false,
                "matrix " + m.shape() + " vs dims " + std::to_string(dim(l, n + 2)) + "x" +
                    std::to_string(dim(k, n)));
    }
    return rep;
  }

  friend bool operator==(const StrataData&, const StrataData&) = default;
};

/// E1^{p,q} = H^{2p+q}(D^{(-p)}) as a direct sum of blocks, one per stratum.
struct E1Term {
  int p = 0;
  int q = 0;
  std::vector<std::pair<Stratum, std::size_t>> blocks;  // (K, dim H^{2p+q}(D_K)) in lexicographic order

  [[nodiscard]] std::size_t dim() const {
    std::size_t d = 0;
    for (const auto& b : blocks) d += b.second;
    return d;
  }
  [[nodiscard]] std::size_t offset(const Stratum& k) const {
    std::size_t off = 0;
    for (const auto& [s, d] : blocks) {
      if (s == k) return off;
      off += d;
    }
    throw InputError("E1Term: stratum " + to_string(k) + " not present");
  }
};

inline E1Term e1_term(const StrataData& s, int p, int q) {
  E1Term t{p, q, {}};
  if (p > 0) return t;
  for (const auto& k : s.strata(-p)) t.blocks.emplace_back(k, s.dim(k, 2 * p + q));
  return t;
}

/// d1: E1^{p,q} -> E1^{p+1,q}. The block from K = {i_1 < ... < i_m} to
/// L = K \ {i_s} is (-1)^{q+s} times the Gysin map; all other blocks vanish.
inline QMatrix d1_matrix(const StrataData& s, int p, int q) {
  const E1Term src = e1_term(s, p, q);
  const E1Term tgt = e1_term(s, p + 1, q);
  QMatrix d(tgt.dim(), src.dim());
  const int n = 2 * p + q;
  for (const auto& [k, kdim] : src.blocks) {
    if (kdim == 0) continue;
    for (std::size_t pos = 0; pos < k.size(); ++pos) {
      Stratum l = k;
      l.erase(l.begin() + static_cast<std::ptrdiff_t>(pos));
      const std::size_t ldim = s.dim(l, n + 2);
      if (ldim == 0) continue;
      const auto it = s.gysin.find({k, l, n});
      if (it == s.gysin.end())
        throw InputError("missing Gysin block " + to_string(k) + " -> " + to_string(l) + " in degree " +
                         std::to_string(n));
      const QMatrix& g = it->second;
      if (g.rows() != ldim || g.cols() != kdim)
        throw InputError("Gysin block " + to_string(k) + " -> " + to_string(l) + " has shape " + g.shape());
      const int sgn = ((q + static_cast<int>(pos) + 1) % 2 == 0) ? 1 : -1;
      const std::size_t r0 = tgt.offset(l), c0 = src.offset(k);
      for (std::size_t i = 0; i < ldim; ++i)
        for (std::size_t j = 0; j < kdim; ++j) d(r0 + i, c0 + j) = g(i, j) * Rat(sgn);
    }
  }
  return d;
}

/// Rows q that carry data, read off the cohomology dimensions.
inline std::vector<int> occupied_rows(const StrataData& s) {
  std::set<int> qs;
  for (const auto& [key, d] : s.cohomology_dims)
    if (d > 0) qs.insert(key.second + 2 * static_cast<int>(key.first.size()));
  return {qs.begin(), qs.end()};
}

/// d1 o d1 = 0 along row q.
inline ValidationReport validate_complex(const StrataData& s, int q) {
  ValidationReport rep;
  const int top = static_cast<int>(s.index_set.size());
  for (int p = -top; p <= -2; ++p) {
    const std::string where = "(p,q)=(" + std::to_string(p) + "," + std::to_string(q) + ")";
    try {
      const QMatrix dd = d1_matrix(s, p + 1, q) * d1_matrix(s, p, q);
      rep.add("d1 o d1 = 0 at " + where, dd.is_zero());
    } catch (const InputError& e) {
      rep.add("d1 o d1 = 0 at " + where, false, e.what());
    }
  }
  return rep;
}

inline ValidationReport validate_complex(const StrataData& s) {
  ValidationReport rep = s.validate();
  for (int q : occupied_rows(s)) rep.merge(validate_complex(s, q));
  return rep;
}

/// E2^{p,q} = ker d1(p,q) / im d1(p-1,q), both inside E1^{p,q}.
struct E2Term {
  int p = 0;
  int q = 0;
  QSubspace kernel;
  QSubspace image;

  [[nodiscard]] std::size_t dim() const { return kernel.dim() - image.dim(); }
  /// Canonical coset representatives: the basis in which E2 coordinates are expressed.
  [[nodiscard]] std::vector<QVec> basis() const { return quotient_basis(kernel, image); }
};

inline E2Term compute_E2(const StrataData& s, int p, int q) {
  const auto rep = validate_complex(s, q);
  if (!rep.ok()) throw InputError("compute_E2: strata data is not a complex: " + rep.failures().front().name);
  const QMatrix out = d1_matrix(s, p, q);
  const QMatrix in = d1_matrix(s, p - 1, q);
  return {p, q, kernel(out), image(in)};
}

/// Image of psi_{V'} supplied as data: a subspace of E1^{p,q} read modulo im d1.
struct PsiData {
  std::string d_label;
  int p = 0;
  int q = 0;
  QSubspace image;
};

/// Coordinates, in the canonical E2 basis, of ((psi + im) cap ker) / im.
inline QSubspace psi_in_e2(const E2Term& e2, const QSubspace& psi) {
  const auto reps = e2.basis();
  const std::size_t m = reps.size();
  const QSubspace meet = intersect(sum(psi, e2.image), e2.kernel);
  std::vector<QVec> cols = reps;
  for (const auto& v : e2.image.vectors()) cols.push_back(v);
  const QMatrix basis = QMatrix::from_cols(cols, e2.kernel.ambient_dim());
  std::vector<QVec> coords;
  for (const auto& v : meet.vectors()) {
    QVec c = *solve(basis, v);
    c.resize(m);
    coords.push_back(std::move(c));
  }
  return QSubspace::span(coords, m);
}

/// The w-involution on E2^{p,q}: -1 on Im(psi) cap E2, +1 on the complement
/// (given in E2 coordinates, canonical when omitted).
inline QMatrix build_w(const E2Term& e2, const PsiData& psi, const std::optional<QSubspace>& complement = std::nullopt) {
  if (psi.p != e2.p || psi.q != e2.q) throw InputError("build_w: psi data is for a different (p,q)");
  if (psi.image.ambient_dim() != e2.kernel.ambient_dim()) throw InputError("build_w: psi image has the wrong ambient dimension");
  return build_z<Rat>(e2.dim(), psi_in_e2(e2, psi.image), complement);
}

}  // namespace gmhs
