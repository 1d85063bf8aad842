#pragma once

#include <cstdint>

namespace lamekit::lame {

/// Multiplicative, psi(p^r) = p^(2r-2) (p^2 - 1); psi(1) = 1. This is the
/// number of points of exact order n in E[n].
std::uint64_t psi(std::uint64_t n);

/// Multiplicative, eta(p^r) = 2^(p^r) - 2^(p^(r-1)); eta(1) = 1. Agrees with
/// degree_count_true on prime powers only.
std::uint64_t eta_closed_form(int d);

/// #{c in F_{2^d} : element_degree(c) = d} = sum_{e | d} mu(d/e) 2^e.
std::uint64_t degree_count_true(int d);

/// Classes of exact order n: psi(n)/24, except n = 3 where the 8 points
/// form one orbit with stabilizers of order 3.
std::uint64_t class_count_exact(std::uint64_t n);

/// Classes of order dividing n (n odd > 1): (n^2 - 1)/24 when 3 does not
/// divide n, (3m^2 + 5)/8 for n = 3m.
std::uint64_t lame_count_dividing(std::uint64_t n);

/// Same count by summing brute-force classifications over divisors; n <= 13.
std::uint64_t lame_count_dividing_brute(std::uint64_t n, std::uint64_t seed = 0);

}  // namespace lamekit::lame
