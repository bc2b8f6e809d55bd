#pragma once

#include <random>

#include "tiltwall/chern.hpp"

namespace testing_support {

using tiltwall::ChernCharacter;
using tiltwall::ChernTrunc;
using tiltwall::Rat;

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(0x7117a11u);
  return g;
}

inline long uniform(long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng());
}

inline Rat rat(long lo, long hi, long den) { return Rat(uniform(lo * den, hi * den), den); }

/// Arbitrary class in the sheaf lattice: ch2 in ch1^2/2 + Z, ch3 on its coset.
inline ChernCharacter lattice_class(long rmax = 4, long cmax = 4, long dmax = 6, long emax = 8) {
  long r = uniform(-rmax, rmax);
  long c = uniform(-cmax, cmax);
  ChernTrunc t{r, c, Rat(c * c, 2) - Rat(c * c / 2) + Rat(uniform(-dmax, dmax))};
  Rat e = tiltwall::ch3_offset(t) + Rat(uniform(-emax, emax));
  return {t.ch0, t.ch1, t.ch2, e};
}

}  // namespace testing_support
