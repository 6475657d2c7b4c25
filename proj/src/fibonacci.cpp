#include "csq/fibonacci.hpp"

#include <cstdlib>
#include <mutex>
#include <utility>
#include <vector>

namespace csq {
namespace {

// Largest index kept in the memo table. F_4096 has ~856 digits; the whole
// table stays under a few MB. Above this fast doubling takes over.
constexpr long kTableCap = 4096;

std::mutex table_mutex;
std::vector<Integer>& table() {
  static std::vector<Integer> t = {Integer(0), Integer(1)};
  return t;
}

// F_n and F_{n+1} by fast doubling:
//   F_2k   = F_k (2 F_{k+1} - F_k)
//   F_2k+1 = F_k^2 + F_{k+1}^2
std::pair<Integer, Integer> fib_pair(unsigned long n) {
  if (n == 0) return {Integer(0), Integer(1)};
  auto [a, b] = fib_pair(n >> 1);
  Integer c = a * (2 * b - a);
  Integer d = a * a + b * b;
  if (n & 1) return {d, c + d};
  return {c, d};
}

Integer fib_nonneg(unsigned long n) {
  if (n > static_cast<unsigned long>(kTableCap)) return fib_pair(n).first;
  std::lock_guard<std::mutex> lock(table_mutex);
  auto& t = table();
  while (t.size() <= n) {
    t.push_back(t[t.size() - 1] + t[t.size() - 2]);
  }
  return t[n];
}

}  // namespace

Integer fib(long n) {
  if (n >= 0) return fib_nonneg(static_cast<unsigned long>(n));
  unsigned long m = static_cast<unsigned long>(-n);
  Integer v = fib_nonneg(m);
  return (m % 2 == 0) ? Integer(-v) : v;
}

void fib_reserve(long n) {
  unsigned long m = static_cast<unsigned long>(n < 0 ? -n : n);
  if (m > static_cast<unsigned long>(kTableCap)) {
    m = static_cast<unsigned long>(kTableCap);
  }
  fib_nonneg(m);
}

}  // namespace csq
