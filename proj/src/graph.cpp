#include "csq/graph.hpp"

namespace csq {

ExactMatrix laplacian(const CycleSquare& g) {
  const long n = g.vertex_count();
  ExactMatrix lap(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (long u = 0; u < n; ++u) {
    lap(u, u) = Rational(4);
    for (long v : g.neighbors(u)) {
      lap(u, v) = Rational(-1);
    }
  }
  return lap;
}

ExactMatrix reduced_laplacian(const CycleSquare& g) {
  const long n = g.vertex_count();
  ExactMatrix lp(static_cast<std::size_t>(n - 1),
                 static_cast<std::size_t>(n - 1));
  for (long u = 1; u < n; ++u) {
    lp(u - 1, u - 1) = Rational(4);
    for (long v : g.neighbors(u)) {
      if (v != 0) lp(u - 1, v - 1) = Rational(-1);
    }
  }
  return lp;
}

HalvedSystem build_halved_system(long n) {
  CycleSquare g(n);
  const ExactMatrix lp = reduced_laplacian(g);
  const long m = n / 2;
  const bool even = (n % 2 == 0);

  ExactMatrix h(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
  for (long i = 1; i <= m; ++i) {
    for (long j = 1; j <= m; ++j) {
      if (even && j == m) {
        h(i - 1, j - 1) = lp(i - 1, j - 1);  // the N/2 column is its own mirror
      } else {
        h(i - 1, j - 1) = lp(i - 1, j - 1) + lp(i - 1, (n - j) - 1);
      }
    }
  }
  std::vector<Rational> rhs(static_cast<std::size_t>(m), Rational(4));
  if (even) {
    for (long j = 0; j < m; ++j) {
      h(m - 1, j) /= Rational(2);
    }
    rhs[static_cast<std::size_t>(m) - 1] = Rational(2);
  }
  return {std::move(h), std::move(rhs)};
}

ExactMatrix merged_laplacian(const CycleSquare& g, long l) {
  const long n = g.vertex_count();
  if (l < 1 || l > n - 1) throw VertexOutOfRange(l, n);

  // Merged vertex gets index 0; vertex w in 1..N-1, w != l, gets w or w-1.
  auto index_of = [l](long w) -> long {
    if (w == 0) return 0;
    return w < l ? w : w - 1;
  };

  const std::size_t size = static_cast<std::size_t>(n - 1);
  std::vector<std::vector<long>> mult(size, std::vector<long>(size, 0));
  for (long u = 0; u < n; ++u) {
    for (long d : {1L, 2L}) {
      long v = (u + d) % n;
      long a = index_of(u == l ? 0 : u);
      long b = index_of(v == l ? 0 : v);
      if (a == b) continue;  // the {0,l} edge becomes a loop; drop it
      mult[a][b] += 1;
      mult[b][a] += 1;
    }
  }

  ExactMatrix lap(size, size);
  for (std::size_t i = 0; i < size; ++i) {
    long degree = 0;
    for (std::size_t j = 0; j < size; ++j) {
      degree += mult[i][j];
      if (mult[i][j] != 0) lap(i, j) = Rational(-mult[i][j]);
    }
    lap(i, i) = Rational(degree);
  }
  return lap;
}

}  // namespace csq
