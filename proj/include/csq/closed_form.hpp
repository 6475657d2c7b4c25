#pragma once

#include <vector>

#include "csq/rational.hpp"

namespace csq {

/// Closed forms for the average hitting time h_N(0,l) of the simple random
/// walk on the squared N-cycle, plus the intermediate vectors the derivation
/// produces. Everything is exact; l is reduced mod N on entry and l = 0
/// returns 0 without touching the formulas. All functions throw UnsupportedN
/// for N < 5.

/// The single-formula hitting time
///   h_N(0,l) = (2/5) ( l (N-l) + 2N F_l F_{N-l} / F_N ).
Rational hitting_time(long n, long l);

/// The earlier two-case hitting-time formula (separate even/odd N branches
/// with alternating signs and the ratio of (1 +- ((3-sqrt5)/2)^N) terms),
/// evaluated entirely in Q(sqrt5). The sqrt5 component must cancel; if it
/// does not, IrrationalResult is thrown. Agrees with hitting_time everywhere.
Rational chair_hitting_time(long n, long l);

/// z_l = (2/5) ( N-2l+1 + ((N-2l-1) F_{2l-1} + 2N (-1)^{l-1}) / F_{2l+1} )
/// for l < floor(N/2), with a 1/F_N-prefactor form for the last entry.
/// Equals 2 D^{-1} W^{-1} (N-1, N-3, ...) from the factorization.
std::vector<Rational> z_vector(long n);

/// y_l = (2/5) ( N-2l+1 + 2N (-1)^{l-1} F_{N-2l+1} / F_N ).
/// Equals tW^{-1} z; prefix sums give the hitting-time vector.
std::vector<Rational> y_vector(long n);

/// h_N(0,1) via the Fibonacci convolution (2/F_N) sum_{i=0}^{N} F_i F_{N-i}.
Rational hitting_first(long n);

/// (h_N(0,l) - (2/5) l (N-l)) / N; tends to 4/(5 sqrt5) along l = floor(N/2).
Rational normalized_excess(long n, long l);

/// h_N(0,l) / N^2; tends to (2/5) x (1-x) as l/N -> x.
Rational scaled_hitting(long n, long l);

}  // namespace csq
