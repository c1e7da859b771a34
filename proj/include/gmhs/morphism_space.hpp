// Linear systems in unknown rational matrices, and the spaces of morphisms
// they describe (Hom in MHS and in GMHS).

#pragma once

#include <gmhs/gmhs.hpp>

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

namespace gmhs {

/// Collects Q(i)-linear matrix equations sum_k L_k X_k R_k = C in unknown
/// rational matrices X_k. Each complex equation contributes its real and
/// imaginary parts as two rational equations.
class LinearSystem {
 public:
  struct Term {
    std::size_t unknown;
    CMatrix left;
    CMatrix right;
  };

  std::size_t add_unknown(std::size_t rows, std::size_t cols) {
    shapes_.emplace_back(rows, cols);
    offsets_.push_back(width_);
    width_ += rows * cols;
    return shapes_.size() - 1;
  }

  [[nodiscard]] std::size_t unknowns() const { return width_; }
  [[nodiscard]] std::size_t equations() const { return rows_.size(); }

  void add_equation(const std::vector<Term>& terms, const CMatrix& rhs) {
    for (const auto& t : terms) {
      const auto [r, c] = shapes_.at(t.unknown);
      if (t.left.cols() != r || t.right.rows() != c || t.left.rows() != rhs.rows() || t.right.cols() != rhs.cols())
        throw InputError("LinearSystem: term shape mismatch");
    }
    for (std::size_t i = 0; i < rhs.rows(); ++i)
      for (std::size_t j = 0; j < rhs.cols(); ++j) {
        CVec row(width_);
        for (const auto& t : terms) {
          const auto [r, c] = shapes_[t.unknown];
          for (std::size_t a = 0; a < r; ++a) {
            if (t.left(i, a).is_zero()) continue;
            for (std::size_t b = 0; b < c; ++b) row[offsets_[t.unknown] + a * c + b] += t.left(i, a) * t.right(b, j);
          }
        }
        push(row, rhs(i, j));
      }
  }

  /// Homogeneous equation sum_k L_k X_k R_k = 0.
  void add_homogeneous(const std::vector<Term>& terms) {
    const auto& t = terms.front();
    add_equation(terms, CMatrix(t.left.rows(), t.right.cols()));
  }

  /// Some solution, or nullopt when the system is inconsistent.
  [[nodiscard]] std::optional<std::vector<QMatrix>> particular_solution() const {
    const auto x = solve(matrix(), rhs_);
    if (!x) return std::nullopt;
    return unpack(*x);
  }

  /// Basis of the solution space of the homogeneous system.
  [[nodiscard]] std::vector<std::vector<QMatrix>> homogeneous_basis() const {
    std::vector<std::vector<QMatrix>> out;
    for (const auto& v : kernel(matrix()).vectors()) out.push_back(unpack(v));
    return out;
  }

  [[nodiscard]] std::vector<QMatrix> unpack(const QVec& x) const {
    std::vector<QMatrix> out;
    for (std::size_t k = 0; k < shapes_.size(); ++k) {
      const auto [r, c] = shapes_[k];
      QMatrix m(r, c);
      for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < c; ++b) m(a, b) = x[offsets_[k] + a * c + b];
      out.push_back(std::move(m));
    }
    return out;
  }

 private:
  void push(const CVec& row, const GaussRat& rhs) {
    QVec re(width_), im(width_);
    bool re_nz = !rhs.re().is_zero(), im_nz = !rhs.im().is_zero();
    for (std::size_t k = 0; k < width_; ++k) {
      re[k] = row[k].re();
      im[k] = row[k].im();
      re_nz = re_nz || !re[k].is_zero();
      im_nz = im_nz || !im[k].is_zero();
    }
    if (re_nz) {
      rows_.push_back(std::move(re));
      rhs_.push_back(rhs.re());
    }
    if (im_nz) {
      rows_.push_back(std::move(im));
      rhs_.push_back(rhs.im());
    }
  }

  // Rows recorded before later unknowns were added are zero-padded.
  [[nodiscard]] QMatrix matrix() const {
    QMatrix m(rows_.size(), width_);
    for (std::size_t i = 0; i < rows_.size(); ++i)
      for (std::size_t j = 0; j < rows_[i].size(); ++j) m(i, j) = rows_[i][j];
    return m;
  }

  std::vector<std::pair<std::size_t, std::size_t>> shapes_;
  std::vector<std::size_t> offsets_;
  std::size_t width_ = 0;
  std::vector<QVec> rows_;
  QVec rhs_;
};

/// Adds the constraints making unknown `x` (target.dim x source.dim) a filtered
/// morphism: W_r -> W_r and F^p -> F^p.
inline void constrain_mhs_morphism(LinearSystem& sys, std::size_t x, const MHSObject& source, const MHSObject& target) {
  const int wlo = std::min(source.W.lo(), target.W.lo()), whi = std::max(source.W.hi(), target.W.hi());
  for (int r = wlo; r <= whi; ++r) {
    const QSubspace s = source.W.at(r);
    const QSubspace t = target.W.at(r);
    if (s.is_zero() || t.is_full()) continue;
    sys.add_homogeneous({{x, to_complex(t.annihilator()), to_complex(s.basis().transpose())}});
  }
  const int flo = std::min(source.F.lo(), target.F.lo()), fhi = std::max(source.F.hi(), target.F.hi());
  for (int p = flo; p <= fhi; ++p) {
    const CSubspace s = source.F.at(p);
    const CSubspace t = target.F.at(p);
    if (s.is_zero() || t.is_full()) continue;
    sys.add_homogeneous({{x, t.annihilator(), s.basis().transpose()}});
  }
}

/// Adds x o source_op = target_op o x for every pairing. Throws on unknown labels.
inline void constrain_intertwining(LinearSystem& sys, std::size_t x, const GMHSObject& source,
                                   const GMHSObject& target, const LabelCorrespondence& corr) {
  const CMatrix is = CMatrix::identity(source.dim());
  const CMatrix it = CMatrix::identity(target.dim());
  for (const auto& p : corr.pairings) {
    if (!source.site.has(p.x)) throw InputError("pairing references unknown source label " + p.x);
    if (!target.site.has(p.y)) throw InputError("pairing references unknown target label " + p.y);
    sys.add_homogeneous({{x, it, source.op(p.x)}, {x, -target.op(p.y), is}});
  }
}

/// Basis of Hom_MHS(a, b).
inline std::vector<QMatrix> hom_mhs(const MHSObject& a, const MHSObject& b) {
  LinearSystem sys;
  const auto x = sys.add_unknown(b.dim, a.dim);
  constrain_mhs_morphism(sys, x, a, b);
  std::vector<QMatrix> out;
  for (auto& sol : sys.homogeneous_basis()) out.push_back(std::move(sol[0]));
  return out;
}

/// Basis of the morphisms a -> b compatible with W, F and every pairing of `corr`.
inline std::vector<QMatrix> hom_group(const GMHSObject& a, const GMHSObject& b, const LabelCorrespondence& corr) {
  LinearSystem sys;
  const auto x = sys.add_unknown(b.dim(), a.dim());
  constrain_mhs_morphism(sys, x, a.mhs, b.mhs);
  constrain_intertwining(sys, x, a, b, corr);
  std::vector<QMatrix> out;
  for (auto& sol : sys.homogeneous_basis()) out.push_back(std::move(sol[0]));
  return out;
}

}  // namespace gmhs
