#ifndef QATLAS_LINALG_HPP
#define QATLAS_LINALG_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qatlas/errors.hpp"
#include "qatlas/field.hpp"

namespace qatlas {

/// Dense row-major matrix over a field.
template <class F>
class Matrix {
 public:
  using Element = typename F::Element;

  Matrix(const F& field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

  static Matrix identity(const F& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  static Matrix random(const F& field, std::size_t rows, std::size_t cols, Rng& rng) {
    Matrix m(field, rows, cols);
    for (auto& e : m.data_) e = field.random(rng);
    return m;
  }

  /// Uniformly drawn until invertible.
  static Matrix random_invertible(const F& field, std::size_t n, Rng& rng) {
    for (;;) {
      Matrix m = random(field, n, n, rng);
      if (m.rank() == n) return m;
    }
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Element& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw PreconditionError("matrix product: dimension mismatch");
    Matrix out(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t k = 0; k < cols_; ++k) {
        const Element& a = (*this)(i, k);
        if (field_.is_zero(a)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) = field_.add(out(i, j), field_.mul(a, o(k, j)));
      }
    }
    return out;
  }

  Matrix transpose() const {
    Matrix out(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    }
    return out;
  }

  /// Reduced row echelon form in place; returns pivot columns.
  std::vector<std::size_t> row_reduce() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t p = r;
      while (p < rows_ && field_.is_zero((*this)(p, c))) ++p;
      if (p == rows_) continue;
      if (p != r) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(r, j));
      }
      Element inv = field_.inv((*this)(r, c));
      for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) = field_.mul((*this)(r, j), inv);
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r || field_.is_zero((*this)(i, c))) continue;
        Element f = (*this)(i, c);
        for (std::size_t j = c; j < cols_; ++j) {
          (*this)(i, j) = field_.sub((*this)(i, j), field_.mul(f, (*this)(r, j)));
        }
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  std::size_t rank() const {
    Matrix copy = *this;
    return copy.row_reduce().size();
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = i + 1; j < cols_; ++j) {
        if (!((*this)(i, j) == (*this)(j, i))) return false;
      }
    }
    return true;
  }

  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < rows_; ++i) {
      s += "[";
      for (std::size_t j = 0; j < cols_; ++j) s += (j ? " " : "") + field_.to_string((*this)(i, j));
      s += "]\n";
    }
    return s;
  }

 private:
  F field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> data_;
};

}  // namespace qatlas

#endif
