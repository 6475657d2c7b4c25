#pragma once

#include <vector>

#include "csq/matrix.hpp"

namespace csq {

/// Exact Gaussian elimination over the rationals. These are the oracles the
/// closed forms are checked against, so they stay deliberately plain: dense
/// storage, first-nonzero pivoting (magnitude is irrelevant in exact
/// arithmetic), zero entries skipped during updates.
namespace linsolve {

/// Solves A x = b exactly. Throws SingularMatrix.
std::vector<Rational> solve(const ExactMatrix& a,
                            const std::vector<Rational>& b);

/// Exact determinant via rational elimination.
Rational determinant(const ExactMatrix& a);

/// Exact inverse via Gauss-Jordan. Throws SingularMatrix.
ExactMatrix inverse(const ExactMatrix& a);

}  // namespace linsolve
}  // namespace csq
