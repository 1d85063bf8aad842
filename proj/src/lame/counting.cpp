#include "lamekit/lame/counting.hpp"

#include "lamekit/lame/quotient.hpp"
#include "lamekit/util/intmath.hpp"

namespace lamekit::lame {

std::uint64_t psi(std::uint64_t n) {
  if (n == 0) throw DomainError("psi(0)");
  std::uint64_t r = 1;
  for (auto [p, e] : util::factor(n)) {
    std::uint64_t pp = 1;
    for (int i = 0; i < 2 * e - 2; ++i) pp *= p;
    r *= pp * (p * p - 1);
  }
  return r;
}

std::uint64_t eta_closed_form(int d) {
  if (d < 1 || d > 63) throw DomainError("eta_closed_form needs 1 <= d <= 63");
  std::uint64_t r = 1;
  for (auto [p, e] : util::factor(static_cast<std::uint64_t>(d))) {
    std::uint64_t pr = 1;
    for (int i = 0; i < e; ++i) pr *= p;
    r *= util::pow2(static_cast<int>(pr)) - util::pow2(static_cast<int>(pr / p));
  }
  return r;
}

std::uint64_t degree_count_true(int d) {
  if (d < 1 || d > 63) throw DomainError("degree_count_true needs 1 <= d <= 63");
  __int128 s = 0;
  for (auto e : util::divisors(static_cast<std::uint64_t>(d))) {
    s += util::mobius(static_cast<std::uint64_t>(d) / e) * static_cast<__int128>(util::pow2(static_cast<int>(e)));
  }
  return static_cast<std::uint64_t>(s);
}

std::uint64_t class_count_exact(std::uint64_t n) {
  if (n % 2 == 0 || n < 3) throw DomainError("class counts need odd n > 1");
  if (n == 3) return 1;
  return psi(n) / 24;
}

std::uint64_t lame_count_dividing(std::uint64_t n) {
  if (n % 2 == 0 || n < 3) throw DomainError("lame_count_dividing needs odd n > 1");
  if (n % 3 != 0) return (n * n - 1) / 24;
  const std::uint64_t m = n / 3;
  return (3 * m * m + 5) / 8;
}

std::uint64_t lame_count_dividing_brute(std::uint64_t n, std::uint64_t seed) {
  std::uint64_t total = 0;
  for (auto m : util::divisors(n)) {
    if (m > 1) total += classify_torsion(m, seed).size();
  }
  return total;
}

}  // namespace lamekit::lame
