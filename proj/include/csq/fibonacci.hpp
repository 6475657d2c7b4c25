#pragma once

#include "csq/integer.hpp"

namespace csq {

/// n-th Fibonacci number, any sign of n.
///
/// F_0 = 0, F_1 = 1, F_n = F_{n-1} + F_{n-2}; negative indices follow
/// F_{-n} = (-1)^{n+1} F_n. Values up to a fixed cap are produced by the
/// additive recurrence and memoized in a mutex-guarded table (safe for
/// concurrent callers); larger indices fall back to fast doubling, which
/// yields the same exact integers.
Integer fib(long n);

/// Grows the memo table up to |n| (capped). Sweeps call this once before
/// fanning out so parallel workers hit a warm table.
void fib_reserve(long n);

}  // namespace csq
