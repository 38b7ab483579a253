#pragma once
// Deterministic rational samplers for the property suites.  Everything is
// driven by a seeded mt19937_64; identical seeds give identical streams.
// Region samplers mix rejection from the full cube (coverage) with direct
// construction inside a componentwise-safe subregion (guaranteed success).

#include <cstdint>
#include <random>

#include "hmv/splitting.hpp"
#include "hmv/valuation.hpp"

namespace hmv {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  // Uniform-ish rational in [lo, hi]: random denominator <= max_den.
  Rat unit_rational(int max_den = 48);
  Rat rational_in(const Rat& lo, const Rat& hi, bool open_lo = false,
                  bool open_hi = false, int max_den = 48);

  // Arbitrary point of the cube.
  ValuationVector vector(const SplittingPtr& s, Role role);

  // X-point with lambda < p everywhere.
  ValuationVector in_U(const SplittingPtr& s);
  // Y-point canonical at every prime (lambda < p).
  ValuationVector in_V(const SplittingPtr& s);
  // Y-point anti-canonical at every prime (lambda > p).
  ValuationVector in_W(const SplittingPtr& s);
  // X-point with lambda < 1 everywhere (expanding quotient regime).
  ValuationVector expanding(const SplittingPtr& s);
  // X-point with 1 < lambda < p everywhere (reflecting quotient regime).
  ValuationVector reflecting(const SplittingPtr& s);
  // X-point of U whose first prime straddles lambda = 1 (mixed regime:
  // some lambda <= 1 and some lambda >= 1 in that orbit).
  ValuationVector mixed_regime(const SplittingPtr& s);
  // Y-point with at least one too-singular prime.
  ValuationVector too_singular(const SplittingPtr& s);
  // X-point with lambda < p^{1-n} everywhere.
  ValuationVector tower_base(const SplittingPtr& s, int n);

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace hmv
