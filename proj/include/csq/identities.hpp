#pragma once

namespace csq {

/// Exact check of one of the seven Fibonacci identities the closed forms
/// rest on, evaluated at index n:
///   1: F_{n+1} F_{n-1} - F_n^2 = (-1)^n
///   2: F_{2n} - 3 F_{2(n-1)} + F_{2(n-2)} = 0
///   3: F_{2n+1} = F_{n+1}^2 + F_n^2
///   5: 1/(F_{2n-1} F_{2n+1}) = F_{2n+2}/F_{2n+1} - F_{2n}/F_{2n-1}
///   6: sum_{k=1}^{n} (-1)^{n-k} F_{2k-1} = F_n^2
///   7: F_n^2 = (F_{2n-1} + F_{2n+1})/5 + 2 (-1)^{n-1}/5
/// Identity 4 takes two indices; use the two-index overload.
/// Throws UnknownIdentity for id outside 1..7 and std::invalid_argument
/// when the arity does not match the identity.
bool identity_check(int id, long n);

/// Identity 4: F_{m-n} = (-1)^{n+1} F_{m-1} F_n + (-1)^n F_m F_{n-1}.
bool identity_check(int id, long m, long n);

}  // namespace csq
