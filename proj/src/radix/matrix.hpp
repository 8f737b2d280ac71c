#pragma once

#include <cassert>
#include <stdexcept>
#include <vector>

#include "radix/complex.hpp"

namespace cgr {

// Dense matrix over a ring T (Radical, Approx, or Cx<...>).  Odd-dimension
// matrices representing weighted objects support signed indexing: row index
// n1 runs -N1..N1 top to bottom, column index n2 runs -N2..N2 left to right.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = T::one();
    return m;
  }

  // (2*N1+1) x (2*N2+1) zero matrix for row weight N1 and column weight N2.
  static Matrix weighted(int N1, int N2) { return Matrix(2 * N1 + 1, 2 * N2 + 1); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int row_weight() const { assert(rows_ % 2 == 1); return (rows_ - 1) / 2; }
  int col_weight() const { assert(cols_ % 2 == 1); return (cols_ - 1) / 2; }

  T& at(int r, int c) {
    assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
    return data_[static_cast<size_t>(r) * cols_ + c];
  }
  const T& at(int r, int c) const {
    assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
    return data_[static_cast<size_t>(r) * cols_ + c];
  }

  // Signed access for odd-dimension matrices.
  T& s(int n1, int n2) { return at(n1 + row_weight(), n2 + col_weight()); }
  const T& s(int n1, int n2) const { return at(n1 + row_weight(), n2 + col_weight()); }

  bool is_zero() const {
    for (const T& v : data_)
      if (!v.is_zero()) return false;
    return true;
  }

  Matrix operator-() const {
    Matrix m(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) m.data_[i] = -data_[i];
    return m;
  }
  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix m(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const T& aik = a.at(i, k);
        if (aik.is_zero()) continue;
        for (int j = 0; j < b.cols_; ++j) {
          const T& bkj = b.at(k, j);
          if (!bkj.is_zero()) m.at(i, j) += aik * bkj;
        }
      }
    return m;
  }

  friend Matrix operator*(const T& c, const Matrix& a) {
    Matrix m(a.rows_, a.cols_);
    for (size_t i = 0; i < a.data_.size(); ++i) m.data_[i] = c * a.data_[i];
    return m;
  }

  Matrix transpose() const {
    Matrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
  }

  bool operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < data_.size(); ++i)
      if (!(data_[i] == o.data_[i])) return false;
    return true;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("matrix shape mismatch");
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

// tr(A^T B), the Frobenius pairing used for canonical-basis projections.
template <class T>
T trace_inner(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("trace_inner shape mismatch");
  T sum{};
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) sum += a.at(i, j) * b.at(i, j);
  return sum;
}

template <class S>
Matrix<Cx<S>> conj_transpose(const Matrix<Cx<S>>& a) {
  Matrix<Cx<S>> m(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m.at(j, i) = a.at(i, j).conj();
  return m;
}

template <class S>
Matrix<Cx<S>> complexify(const Matrix<S>& a) {
  Matrix<Cx<S>> m(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m.at(i, j) = Cx<S>(a.at(i, j));
  return m;
}

// Extracts the real part; throws if any entry has a nonzero imaginary part.
template <class S>
Matrix<S> real_part_checked(const Matrix<Cx<S>>& a, const char* what) {
  Matrix<S> m(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (!a.at(i, j).im.is_zero())
        throw std::logic_error(std::string("imaginary residue in ") + what);
      m.at(i, j) = a.at(i, j).re;
    }
  return m;
}

// Column vector of 2N+1 components indexed -N..N, transforming under the
// weight-N representation.
template <class S>
class Vec {
 public:
  Vec() = default;
  explicit Vec(int weight) : weight_(weight), data_(2 * weight + 1) {}

  int weight() const { return weight_; }
  int dim() const { return static_cast<int>(data_.size()); }

  S& s(int n) { return data_[n + weight_]; }
  const S& s(int n) const { return data_[n + weight_]; }
  S& at(int i) { return data_[i]; }
  const S& at(int i) const { return data_[i]; }

  bool is_zero() const {
    for (const S& v : data_)
      if (!v.is_zero()) return false;
    return true;
  }

  bool operator==(const Vec& o) const { return weight_ == o.weight_ && data_ == o.data_; }

  friend Vec operator*(const Matrix<S>& m, const Vec& v) {
    if (m.cols() != v.dim()) throw std::invalid_argument("matrix/vector shape mismatch");
    Vec out((m.rows() - 1) / 2);
    for (int i = 0; i < m.rows(); ++i) {
      S sum{};
      for (int j = 0; j < m.cols(); ++j) sum += m.at(i, j) * v.at(j);
      out.at(i) = sum;
    }
    return out;
  }

 private:
  int weight_ = 0;
  std::vector<S> data_;
};

// v^T M w
template <class S>
S bilinear(const Vec<S>& v, const Matrix<S>& m, const Vec<S>& w) {
  if (m.rows() != v.dim() || m.cols() != w.dim())
    throw std::invalid_argument("bilinear shape mismatch");
  S sum{};
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) sum += v.at(i) * m.at(i, j) * w.at(j);
  return sum;
}

template <class S>
S dot(const Vec<S>& v, const Vec<S>& w) {
  if (v.dim() != w.dim()) throw std::invalid_argument("dot shape mismatch");
  S sum{};
  for (int i = 0; i < v.dim(); ++i) sum += v.at(i) * w.at(i);
  return sum;
}

}  // namespace cgr
