#pragma once

#include <stdexcept>
#include <string>

namespace csq {

// Every closed form in this library assumes N >= 5: below that the squared
// cycle degenerates (parallel edges / loops) and the formulas do not apply.
struct UnsupportedN : std::domain_error {
  explicit UnsupportedN(long n)
      : std::domain_error("N must be >= 5, got " + std::to_string(n)) {}
};

struct VertexOutOfRange : std::out_of_range {
  VertexOutOfRange(long l, long n)
      : std::out_of_range("vertex l=" + std::to_string(l) +
                          " outside 1.." + std::to_string(n - 1)) {}
};

struct IndexOutOfRange : std::out_of_range {
  IndexOutOfRange(long i, long j, long m)
      : std::out_of_range("index (" + std::to_string(i) + "," +
                          std::to_string(j) + ") outside 1.." +
                          std::to_string(m)) {}
};

struct SingularMatrix : std::domain_error {
  SingularMatrix() : std::domain_error("matrix is singular") {}
};

// A Q(sqrt5) value was expected to collapse to a rational but did not;
// raised only when a formula has been transcribed incorrectly.
struct IrrationalResult : std::domain_error {
  explicit IrrationalResult(const std::string& what_part)
      : std::domain_error("sqrt(5) part did not vanish: " + what_part) {}
};

// A count that must be an integer came out fractional; same diagnostic role
// as IrrationalResult.
struct NonIntegerResult : std::domain_error {
  explicit NonIntegerResult(const std::string& value)
      : std::domain_error("expected an integer, got " + value) {}
};

struct ConfigInvalid : std::invalid_argument {
  explicit ConfigInvalid(const std::string& why)
      : std::invalid_argument("invalid configuration: " + why) {}
};

struct UnknownIdentity : std::invalid_argument {
  explicit UnknownIdentity(int id)
      : std::invalid_argument("unknown identity id " + std::to_string(id) +
                              " (valid: 1..7)") {}
};

}  // namespace csq
