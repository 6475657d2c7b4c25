#pragma once

#include <array>
#include <vector>

#include "csq/errors.hpp"
#include "csq/matrix.hpp"

namespace csq {

/// The square of the N-cycle: vertex set Z_N, edges between vertices whose
/// difference is +-1 or +-2 (mod N). Simple and 4-regular for N >= 5, which
/// is why smaller N is rejected.
class CycleSquare {
 public:
  explicit CycleSquare(long n) : n_(n) {
    if (n < 5) throw UnsupportedN(n);
  }

  long vertex_count() const { return n_; }
  long edge_count() const { return 2 * n_; }

  bool adjacent(long u, long v) const {
    long d = ((u - v) % n_ + n_) % n_;
    return d == 1 || d == 2 || d == n_ - 1 || d == n_ - 2;
  }

  /// v-2, v-1, v+1, v+2 reduced mod N.
  std::array<long, 4> neighbors(long v) const {
    auto wrap = [this](long x) { return ((x % n_) + n_) % n_; };
    return {wrap(v - 2), wrap(v - 1), wrap(v + 1), wrap(v + 2)};
  }

 private:
  long n_;
};

/// Full N x N Laplacian: degree on the diagonal, -1 per edge.
ExactMatrix laplacian(const CycleSquare& g);

/// Laplacian with the row and column of vertex 0 deleted. Internal index i
/// corresponds to vertex i+1.
ExactMatrix reduced_laplacian(const CycleSquare& g);

struct HalvedSystem {
  ExactMatrix matrix;           // symmetric, floor(N/2) square
  std::vector<Rational> rhs;    // all 4s; (4,...,4,2) for even N
};

/// Folds the symmetry h(0,l) = h(0,N-l) into the reduced Laplacian:
/// column j of L' is combined with column N-j (the j = N/2 column stands
/// alone when N is even), and for even N the last row is halved so the
/// result is symmetric. Row/column i corresponds to l = i+1.
HalvedSystem build_halved_system(long n);

/// Laplacian of the multigraph obtained by identifying vertices 0 and l.
/// Parallel edges keep integer multiplicities; the {0,l} edge, if present,
/// becomes a loop and is dropped. Index 0 is the merged vertex; the other
/// vertices follow in increasing label order.
ExactMatrix merged_laplacian(const CycleSquare& g, long l);

}  // namespace csq
