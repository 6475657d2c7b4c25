#pragma once

#include <cstddef>
#include <vector>

#include "csq/rational.hpp"

namespace csq {

/// Dense row-major matrix of exact rationals.
class ExactMatrix {
 public:
  ExactMatrix() : rows_(0), cols_(0) {}
  ExactMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ExactMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  ExactMatrix transposed() const;

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) {
    return !(a == b);
  }

  // Skips zero terms; products of the banded/triangular matrices used here
  // cost far fewer multiplies than the dense bound.
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);

  friend std::vector<Rational> operator*(const ExactMatrix& a,
                                         const std::vector<Rational>& v);

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

/// Copy of `a` with row i and column j removed.
ExactMatrix minor_matrix(const ExactMatrix& a, std::size_t i, std::size_t j);

}  // namespace csq
