#include "csq/identities.hpp"

#include <stdexcept>

#include "csq/errors.hpp"
#include "csq/fibonacci.hpp"
#include "csq/rational.hpp"

namespace csq {
namespace {

Integer sign_pow(long e) { return (e % 2 == 0) ? Integer(1) : Integer(-1); }

bool check_cassini(long n) {
  return fib(n + 1) * fib(n - 1) - fib(n) * fib(n) == sign_pow(n);
}

bool check_even_index_recurrence(long n) {
  return fib(2 * n) - 3 * fib(2 * (n - 1)) + fib(2 * (n - 2)) == 0;
}

bool check_odd_index_split(long n) {
  return fib(2 * n + 1) == fib(n + 1) * fib(n + 1) + fib(n) * fib(n);
}

bool check_subtraction(long m, long n) {
  return fib(m - n) ==
         sign_pow(n + 1) * fib(m - 1) * fib(n) + sign_pow(n) * fib(m) * fib(n - 1);
}

bool check_reciprocal_telescope(long n) {
  Rational lhs(Integer(1), fib(2 * n - 1) * fib(2 * n + 1));
  Rational rhs = Rational(fib(2 * n + 2), fib(2 * n + 1)) -
                 Rational(fib(2 * n), fib(2 * n - 1));
  return lhs == rhs;
}

bool check_alternating_sum(long l) {
  Integer sum(0);
  for (long k = 1; k <= l; ++k) {
    sum += sign_pow(l - k) * fib(2 * k - 1);
  }
  return sum == fib(l) * fib(l);
}

bool check_square_decomposition(long l) {
  Rational lhs(fib(l) * fib(l));
  Rational rhs = Rational(fib(2 * l - 1) + fib(2 * l + 1), Integer(5)) +
                 Rational(2 * sign_pow(l - 1), Integer(5));
  return lhs == rhs;
}

}  // namespace

bool identity_check(int id, long n) {
  switch (id) {
    case 1: return check_cassini(n);
    case 2: return check_even_index_recurrence(n);
    case 3: return check_odd_index_split(n);
    case 4:
      throw std::invalid_argument("identity 4 takes two indices (m, n)");
    case 5: return check_reciprocal_telescope(n);
    case 6: return check_alternating_sum(n);
    case 7: return check_square_decomposition(n);
    default: throw UnknownIdentity(id);
  }
}

bool identity_check(int id, long m, long n) {
  if (id == 4) return check_subtraction(m, n);
  if (id >= 1 && id <= 7) {
    throw std::invalid_argument("identity " + std::to_string(id) +
                                " takes a single index");
  }
  throw UnknownIdentity(id);
}

}  // namespace csq
