#pragma once

#include <bit>
#include <cstdint>

namespace psmono {

// A basis blade of R_n is a subset of the generators {e_1, ..., e_n},
// encoded as a bitset: bit k (0-based) stands for e_{k+1}. The empty set
// is the scalar blade.
using Blade = std::uint32_t;

/// Maximum number of generators supported by the dense representation.
inline constexpr int kMaxGenerators = 12;

inline int blade_grade(Blade b) { return std::popcount(b); }

/// Parity of the transposition count needed to interleave the ascending
/// products e_A e_B into a single ascending product (before contractions).
inline int reorder_parity(Blade a, Blade b) {
  int swaps = 0;
  a >>= 1;
  while (a != 0) {
    swaps += std::popcount(a & b);
    a >>= 1;
  }
  return swaps & 1;
}

struct BladeProduct {
  int sign;     // +1 or -1
  Blade blade;  // symmetric difference A xor B
};

/// e_A e_B = sign * e_{A xor B}. Each shared generator contributes a factor
/// e_i^2 = -1 on top of the reordering sign.
inline BladeProduct blade_product(Blade a, Blade b) {
  const int parity = (reorder_parity(a, b) + std::popcount(a & b)) & 1;
  return {parity ? -1 : 1, a ^ b};
}

// sign(A, B) as a function of A, for fixed B, collapses to the parity of
// popcount(A & S) for a single mask S: generator i of A crosses the
// generators of B below it, so the reordering parity is linear over GF(2)
// in the bits of A, and the contraction parity adds popcount(A & B).
inline Blade right_sign_mask(Blade b) {
  Blade below_odd = 0;
  for (int i = 0; i < kMaxGenerators; ++i) {
    if (std::popcount(b & ((Blade{1} << i) - 1)) & 1) below_odd |= Blade{1} << i;
  }
  return below_odd ^ b;
}

/// Mirror of right_sign_mask: sign(A, B) = parity(B & left_sign_mask(A)).
inline Blade left_sign_mask(Blade a) {
  Blade above_odd = 0;
  for (int i = 0; i < kMaxGenerators; ++i) {
    if (std::popcount(a >> (i + 1)) & 1) above_odd |= Blade{1} << i;
  }
  return above_odd ^ a;
}

/// Clifford conjugation multiplies a grade-k blade by (-1)^{k(k+1)/2}.
inline int conjugation_sign(int grade) {
  return ((grade * (grade + 1) / 2) & 1) ? -1 : 1;
}

/// Reversion multiplies a grade-k blade by (-1)^{k(k-1)/2}.
inline int reversion_sign(int grade) {
  return ((grade * (grade - 1) / 2) & 1) ? -1 : 1;
}

}  // namespace psmono
