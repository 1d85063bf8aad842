#pragma once

#include <cstdint>
#include <map>
#include <vector>

// Exact integer helpers shared by the curve and Jacobian code: 64-bit
// factorization, multiplicative orders, Moebius function.
namespace lamekit::util {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 a, u64 e, u64 m);
u64 gcd(u64 a, u64 b);
u64 lcm(u64 a, u64 b);

/// Deterministic Miller-Rabin for all 64-bit inputs.
bool is_prime(u64 n);

/// Prime factorization (Pollard-Brent below a trial-division prefix).
std::map<u64, int> factor(u64 n);

std::vector<u64> divisors(u64 n);

int mobius(u64 n);

/// Least k > 0 with a^k = 1 mod n; requires gcd(a, n) = 1.
u64 multiplicative_order(u64 a, u64 n);

/// 2^e as an exact 64-bit value; e <= 63.
inline u64 pow2(int e) { return u64{1} << e; }

}  // namespace lamekit::util
