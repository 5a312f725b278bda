#ifndef SLP_MATRIX_HPP
#define SLP_MATRIX_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "slp/error.hpp"

namespace slp {

// Dense row-major matrix over an exact scalar (mpz_class, mpq_class, or
// uint64_t residues).  Immutable in spirit: algorithms copy before
// eliminating.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const T& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  T* row_ptr(int r) { return data_.data() + static_cast<std::size_t>(r) * cols_; }
  const T* row_ptr(int r) const { return data_.data() + static_cast<std::size_t>(r) * cols_; }

  std::vector<T>& data() { return data_; }
  const std::vector<T>& data() const { return data_; }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using ExactMatrix = Matrix<mpq_class>;  // arbitrary-precision rationals
using IntMatrix = Matrix<mpz_class>;    // arbitrary-precision integers
using ModMatrix = Matrix<std::uint64_t>;

inline IntMatrix to_integer_matrix(const ExactMatrix& m) {
  IntMatrix z(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      const mpq_class& q = m(i, j);
      if (q.get_den() != 1) throw Error("matrix entry is not an integer");
      z(i, j) = q.get_num();
    }
  return z;
}

inline ExactMatrix to_exact_matrix(const IntMatrix& m) {
  ExactMatrix q(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) q(i, j) = mpq_class(m(i, j));
  return q;
}

}  // namespace slp

#endif
