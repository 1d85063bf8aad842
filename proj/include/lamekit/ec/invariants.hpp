#pragma once

namespace lamekit::ec {

/// Standard long-Weierstrass quantities b2..b8, c4, c6, discriminant.
template <class T>
struct WeierstrassInvariants {
  T b2, b4, b6, b8, c4, c6, disc;
};

/// Generic over any field type T; `lift` maps small integers into T so the
/// same code serves exact rationals and binary fields.
template <class T, class Lift>
WeierstrassInvariants<T> weierstrass_invariants(const T& a1, const T& a2, const T& a3, const T& a4, const T& a6,
                                                Lift lift) {
  WeierstrassInvariants<T> w;
  w.b2 = a1 * a1 + lift(4) * a2;
  w.b4 = lift(2) * a4 + a1 * a3;
  w.b6 = a3 * a3 + lift(4) * a6;
  w.b8 = a1 * a1 * a6 + lift(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  w.c4 = w.b2 * w.b2 - lift(24) * w.b4;
  w.c6 = -(w.b2 * w.b2 * w.b2) + lift(36) * w.b2 * w.b4 - lift(216) * w.b6;
  w.disc = -(w.b2 * w.b2 * w.b8) - lift(8) * w.b4 * w.b4 * w.b4 - lift(27) * w.b6 * w.b6 +
           lift(9) * w.b2 * w.b4 * w.b6;
  return w;
}

}  // namespace lamekit::ec
