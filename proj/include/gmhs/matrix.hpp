// Dense exact matrices over Q and Q(i), with row reduction.

#pragma once

#include <gmhs/rational.hpp>

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gmhs {

template <ExactField F>
using Vec = std::vector<F>;

/// Row-major dense matrix. Operators act on column vectors: (A*x)_i = sum_j A(i,j) x_j.
template <ExactField F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<F>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw InputError("Matrix: ragged initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

  /// Builds a matrix whose rows are the given vectors (all of length cols).
  static Matrix from_rows(const std::vector<Vec<F>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw InputError("Matrix::from_rows: length mismatch");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  static Matrix from_cols(const std::vector<Vec<F>>& cols, std::size_t rows) {
    return from_rows(cols, rows).transpose();
  }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  F& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  [[nodiscard]] Vec<F> row(std::size_t i) const {
    return Vec<F>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }
  [[nodiscard]] Vec<F> col(std::size_t j) const {
    Vec<F> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  [[nodiscard]] std::vector<Vec<F>> row_list() const {
    std::vector<Vec<F>> out;
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
  }

  [[nodiscard]] Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  [[nodiscard]] bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const F& x) { return gmhs::is_zero(x); });
  }
  [[nodiscard]] bool is_square() const { return rows_ == cols_; }

  Matrix& operator+=(const Matrix& o) {
    require_same_shape(o, "+");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    require_same_shape(o, "-");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const F& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const F& s) { return a *= s; }
  friend Matrix operator*(const F& s, Matrix a) { return a *= s; }
  friend Matrix operator-(Matrix a) { return a *= F(-1); }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
      throw InputError("Matrix product: " + a.shape() + " * " + b.shape());
    }
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const F& aik = a(i, k);
        if (gmhs::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }
  friend Vec<F> operator*(const Matrix& a, const Vec<F>& x) {
    if (a.cols_ != x.size()) throw InputError("Matrix-vector product: dimension mismatch");
    Vec<F> y(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) y[i] += a(i, j) * x[j];
    return y;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  [[nodiscard]] std::string shape() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
  }

 private:
  void require_same_shape(const Matrix& o, const char* op) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw InputError(std::string("Matrix ") + op + ": " + shape() + " vs " + o.shape());
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> data_;
};

using QMatrix = Matrix<Rat>;
using CMatrix = Matrix<GaussRat>;
using QVec = Vec<Rat>;
using CVec = Vec<GaussRat>;

template <ExactField F>
Vec<F> zero_vec(std::size_t n) {
  return Vec<F>(n);
}

template <ExactField F>
Vec<F> unit_vec(std::size_t n, std::size_t k) {
  Vec<F> v(n);
  v[k] = F(1);
  return v;
}

template <ExactField F>
bool is_zero_vec(const Vec<F>& v) {
  return std::all_of(v.begin(), v.end(), [](const F& x) { return is_zero(x); });
}

/// Result of Gauss-Jordan elimination.
template <ExactField F>
struct Echelon {
  Matrix<F> reduced;               // same shape as the input, zero rows at the bottom
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  [[nodiscard]] std::size_t rank() const { return pivots.size(); }
};

template <ExactField F>
Echelon<F> echelon(Matrix<F> m) {
  Echelon<F> out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && is_zero(m(piv, c))) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(piv, j));
    const F inv = F(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const F factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= factor * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

/// Unique reduced row-echelon form; shape is preserved.
template <ExactField F>
Matrix<F> rref(const Matrix<F>& m) {
  return echelon(m).reduced;
}

template <ExactField F>
std::size_t rank(const Matrix<F>& m) {
  return echelon(m).rank();
}

template <ExactField F>
Matrix<F> vstack(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.cols() != b.cols()) throw InputError("vstack: column mismatch");
  Matrix<F> m(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, j) = b(i, j);
  return m;
}

template <ExactField F>
Matrix<F> hstack(const Matrix<F>& a, const Matrix<F>& b) {
  return vstack(a.transpose(), b.transpose()).transpose();
}

/// Block-diagonal matrix diag(a, b).
template <ExactField F>
Matrix<F> block_diag(const Matrix<F>& a, const Matrix<F>& b) {
  Matrix<F> m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

/// Exact solution of m*x = v, or nullopt when v is not in the column space.
template <ExactField F>
std::optional<Vec<F>> solve(const Matrix<F>& m, const Vec<F>& v) {
  if (v.size() != m.rows()) throw InputError("solve: right-hand side has wrong length");
  Matrix<F> aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = v[i];
  }
  const auto e = echelon(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vec<F> x(m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, m.cols());
  return x;
}

template <ExactField F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m) {
  if (!m.is_square()) return std::nullopt;
  const std::size_t n = m.rows();
  if (n == 0) return Matrix<F>(0, 0);
  const auto e = echelon(hstack(m, Matrix<F>::identity(n)));
  if (e.rank() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix<F> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

/// Row-major text form, e.g. [[1,0],[-1/2,1]].
template <ExactField F>
std::string format(const Matrix<F>& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += i ? ",[" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? "," : "") + m(i, j).str();
    s += "]";
  }
  return s + "]";
}

template <ExactField F>
std::string format(const Vec<F>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + ")";
}

inline CMatrix to_complex(const QMatrix& m) {
  CMatrix c(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) c(i, j) = GaussRat(m(i, j));
  return c;
}

inline CVec to_complex(const QVec& v) {
  CVec c;
  c.reserve(v.size());
  for (const auto& x : v) c.emplace_back(x);
  return c;
}

/// Entrywise complex conjugate.
inline CMatrix conj_matrix(const CMatrix& m) {
  CMatrix c(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) c(i, j) = m(i, j).conj();
  return c;
}

inline CVec conj_vec(const CVec& v) {
  CVec c;
  c.reserve(v.size());
  for (const auto& x : v) c.push_back(x.conj());
  return c;
}

/// Real part when every entry is rational; nullopt otherwise.
inline std::optional<QMatrix> real_matrix(const CMatrix& m) {
  QMatrix q(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_real()) return std::nullopt;
      q(i, j) = m(i, j).re();
    }
  return q;
}

}  // namespace gmhs
