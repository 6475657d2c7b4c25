#include "csq/matrix.hpp"

#include <stdexcept>

namespace csq {

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
  return m;
}

ExactMatrix ExactMatrix::transposed() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      t(j, i) = (*this)(i, j);
    }
  }
  return t;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("shape mismatch");
  ExactMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& bkj = b(k, j);
        if (bkj.is_zero()) continue;
        c(i, j) += aik * bkj;
      }
    }
  }
  return c;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw std::invalid_argument("shape mismatch");
  }
  ExactMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw std::invalid_argument("shape mismatch");
  }
  ExactMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  return c;
}

std::vector<Rational> operator*(const ExactMatrix& a,
                                const std::vector<Rational>& v) {
  if (a.cols_ != v.size()) throw std::invalid_argument("shape mismatch");
  std::vector<Rational> r(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < a.cols_; ++j) {
      const Rational& aij = a(i, j);
      if (aij.is_zero() || v[j].is_zero()) continue;
      r[i] += aij * v[j];
    }
  }
  return r;
}

ExactMatrix minor_matrix(const ExactMatrix& a, std::size_t i, std::size_t j) {
  if (i >= a.rows() || j >= a.cols()) throw std::out_of_range("minor index");
  ExactMatrix m(a.rows() - 1, a.cols() - 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    if (r == i) continue;
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (c == j) continue;
      m(r - (r > i), c - (c > j)) = a(r, c);
    }
  }
  return m;
}

}  // namespace csq
