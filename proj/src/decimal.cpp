#include "csq/decimal.hpp"

#include <stdexcept>

namespace csq {

std::string decimal_string(const Rational& value, int digits) {
  if (digits < 0) throw std::invalid_argument("digits must be >= 0");
  bool negative = value.sign() < 0;
  Integer num = value.num();
  if (negative) num = -num;
  const Integer den = value.den();

  Integer scaled = num * ten_pow(static_cast<unsigned long>(digits));
  Integer q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled.get_mpz_t(),
              den.get_mpz_t());
  Integer twice = 2 * r;
  if (twice > den || (twice == den && !is_even(q))) {
    q += 1;
  }

  std::string body = q.get_str();
  if (static_cast<int>(body.size()) <= digits) {
    body.insert(0, static_cast<size_t>(digits) - body.size() + 1, '0');
  }
  if (digits > 0) {
    body.insert(body.size() - static_cast<size_t>(digits), 1, '.');
    size_t last = body.find_last_not_of('0');
    if (body[last] == '.') last -= 1;
    body.erase(last + 1);
  }
  if (body == "0") negative = false;  // no negative zero
  return negative ? "-" + body : body;
}

int significant_digits(const std::string& decimal) {
  int count = 0;
  bool leading = true;
  for (char c : decimal) {
    if (c < '0' || c > '9') continue;
    if (leading && c == '0') continue;
    leading = false;
    ++count;
  }
  return count == 0 ? 1 : count;  // "0" carries one digit
}

Rational sqrt5_approx(int digits) {
  if (digits < 0) throw std::invalid_argument("digits must be >= 0");
  // Truncated isqrt leaves the value within 1 ulp at `guard` extra digits.
  const unsigned long guard = 10;
  const unsigned long scale = static_cast<unsigned long>(digits) + guard;
  Integer root = isqrt(Integer(5) * ten_pow(2 * scale));
  return Rational(root, ten_pow(scale));
}

}  // namespace csq
