#include "csq/linsolve.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>

#include "csq/errors.hpp"

namespace csq::linsolve {
namespace {

using Row = std::vector<Rational>;
using Tableau = std::vector<Row>;

Tableau to_rows(const ExactMatrix& a, std::size_t extra_cols) {
  Tableau rows(a.rows(), Row(a.cols() + extra_cols));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      rows[i][j] = a(i, j);
    }
  }
  return rows;
}

// Eliminates column k below row k; pivot row already chosen. Zero
// multipliers are skipped, which keeps banded inputs cheap.
void eliminate_below(Tableau& rows, std::size_t k) {
  const std::size_t width = rows[k].size();
  for (std::size_t r = k + 1; r < rows.size(); ++r) {
    if (rows[r][k].is_zero()) continue;
    Rational factor = rows[r][k] / rows[k][k];
    rows[r][k] = Rational(0);
    for (std::size_t c = k + 1; c < width; ++c) {
      if (rows[k][c].is_zero()) continue;
      rows[r][c] -= factor * rows[k][c];
    }
  }
}

// Returns the pivot row index at or below k, or rows.size() if the column
// is all zero there.
std::size_t find_pivot(const Tableau& rows, std::size_t k) {
  for (std::size_t r = k; r < rows.size(); ++r) {
    if (!rows[r][k].is_zero()) return r;
  }
  return rows.size();
}

}  // namespace

std::vector<Rational> solve(const ExactMatrix& a,
                            const std::vector<Rational>& b) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("matrix not square");
  if (b.size() != n) throw std::invalid_argument("shape mismatch");

  Tableau rows = to_rows(a, 1);
  for (std::size_t i = 0; i < n; ++i) rows[i][n] = b[i];

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = find_pivot(rows, k);
    if (p == n) throw SingularMatrix();
    if (p != k) std::swap(rows[p], rows[k]);
    eliminate_below(rows, k);
  }

  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational acc = rows[i][n];
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rows[i][j].is_zero() || x[j].is_zero()) continue;
      acc -= rows[i][j] * x[j];
    }
    x[i] = acc / rows[i][i];
  }
  return x;
}

Rational determinant(const ExactMatrix& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("matrix not square");
  if (n == 0) return Rational(1);

  Tableau rows = to_rows(a, 0);
  Rational det(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = find_pivot(rows, k);
    if (p == n) return Rational(0);
    if (p != k) {
      std::swap(rows[p], rows[k]);
      det = -det;
    }
    det *= rows[k][k];
    eliminate_below(rows, k);
  }
  return det;
}

ExactMatrix inverse(const ExactMatrix& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("matrix not square");

  Tableau rows = to_rows(a, n);
  for (std::size_t i = 0; i < n; ++i) rows[i][n + i] = Rational(1);

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = find_pivot(rows, k);
    if (p == n) throw SingularMatrix();
    if (p != k) std::swap(rows[p], rows[k]);
    eliminate_below(rows, k);
  }
  // Back substitution over the augmented half, column block at once.
  ExactMatrix inv(n, n);
  for (std::size_t col = 0; col < n; ++col) {
    for (std::size_t i = n; i-- > 0;) {
      Rational acc = rows[i][n + col];
      for (std::size_t j = i + 1; j < n; ++j) {
        const Rational& val = inv(j, col);
        if (rows[i][j].is_zero() || val.is_zero()) continue;
        acc -= rows[i][j] * val;
      }
      inv(i, col) = acc / rows[i][i];
    }
  }
  return inv;
}

}  // namespace csq::linsolve
