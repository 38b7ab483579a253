#pragma once
// Exact valuation dynamics.  A point carries one truncated valuation
// nu_beta = min{val, 1} in [0,1] per embedding; every map below is exact
// rational piecewise-linear arithmetic.  Points are tagged by which space
// they live on: X (no level) or Y (Gamma_0(p) level, i.e. a pair (A, H)).
//
// The recurring linear form lambda_beta = nu_beta + p*nu_{sigma^{-1} beta}
// cuts out all regions: the canonical region U (lambda < p everywhere), the
// canonical locus V (Y-points with lambda < p), and the anti-canonical
// locus W (lambda > p on a whole orbit).

#include <cstdint>
#include <optional>
#include <vector>

#include "hmv/cube.hpp"
#include "hmv/rational.hpp"
#include "hmv/splitting.hpp"

namespace hmv {

enum class Role { XPoint, YPoint };

struct ValuationVector {
  ValuationVector(SplittingPtr s, std::vector<Rat> nu, Role role);

  const SplittingPtr& splitting() const { return s_; }
  const std::vector<Rat>& values() const { return nu_; }
  const Rat& at(int index) const { return nu_.at(index); }
  Role role() const { return role_; }
  int g() const { return static_cast<int>(nu_.size()); }

  ValuationVector with_role(Role r) const { return {s_, nu_, r}; }
  bool operator==(const ValuationVector& o) const;
  bool operator!=(const ValuationVector& o) const { return !(*this == o); }

 private:
  SplittingPtr s_;
  std::vector<Rat> nu_;
  Role role_;
};

// Exact value or a closed interval [lo, hi]; degenerate means lo == hi.
struct ValueOrInterval {
  Rat lo, hi;
  bool exact() const { return lo == hi; }
  bool operator==(const ValueOrInterval& o) const {
    return lo == o.lo && hi == o.hi;
  }
};

enum class PrimeClass { Canonical, AntiCanonical, TooSingular };

// lambda_beta = nu_beta + p * nu_{sigma^{-1} beta}.
Rat lambda(const ValuationVector& nu, int beta);
std::vector<Rat> lambda_table(const ValuationVector& nu);

// Class of the level subgroup at one prime (Y-points): Canonical iff
// lambda < p on the whole orbit, AntiCanonical iff lambda > p on the whole
// orbit, TooSingular otherwise (equalities are never strict members).
PrimeClass classify_at_prime(const ValuationVector& nuY, int prime);

// X-points: lambda_beta < p for every beta over the selected primes
// (default: all of them).
bool in_U(const ValuationVector& nuX,
          std::optional<std::uint32_t> t_primes = std::nullopt);

// The involution shadow: componentwise 1 - nu.
ValuationVector w_map(const ValuationVector& nuY);

// Per-beta image valuation under the projection to X, with the two
// undetermined collision cases encoded as intervals: writing q = nu_beta,
// s = nu_{sigma^{-1} beta},
//   q = 0, s != 1  ->  exact 0                  (beta in phi - eta)
//   q != 0, s = 1  ->  exact 0                  (beta in eta - phi)
//   q = 0, s = 1   ->  interval [0, 1]          (beta outside phi and eta)
//   q != 0, s != 1 (beta in phi cap eta):
//     q != 1, s != 0: m = min(q, p(1-s)); exact m unless q = p(1-s),
//                     in which case interval [m, 1]
//     q != 1, s = 0: exact q
//     q = 1, s != 0: exact min(p(1-s), 1)
//     q = 1, s = 0: exact 1
std::vector<ValueOrInterval> pi_fiberwise(const ValuationVector& nuY);

// Exact projection, defined when every prime classifies Canonical or
// AntiCanonical: identity on canonical orbits, min(p(1 - nu o sigma^{-1}), 1)
// on anti-canonical ones.  Throws RegionError(TooSingular) otherwise.
ValuationVector pi_exact(const ValuationVector& nuY);

// The canonical-subgroup section over U: same vector, viewed on Y.  With a
// prime subset, only those orbits are certified (lambda < p there); entries
// are copied globally either way.  Throws RegionError(NotInU) outside U(t).
ValuationVector section_dagger(
    const ValuationVector& nuX,
    std::optional<std::uint32_t> t_primes = std::nullopt);

// Valuation of A/H from the Y-point (A, H): pi_exact(w_map(nu)).  When some
// prime has the quotient regime straddling lambda = 1 (so A/H leaves U and
// the projection is undetermined), throws RegionError(MixedQuotient) with
// witness betas.
ValuationVector quotient_valuation(const ValuationVector& nuY);

// The higher canonical tower: requires lambda < p^{1-n} everywhere; returns
// the n+1 successive quotient valuations [nu(A/H_1), ..., nu(A/H_{n+1})].
// Steps 1..n are in the expanding regime (nu -> p * nu o sigma^{-1}); the
// last step follows whichever regime applies and may throw MixedQuotient.
std::vector<ValuationVector> iterate_canonical(const ValuationVector& nuX,
                                               int n);

enum class ReductionKind { Canonical, AntiCanonical };

// Valuation exponent of the modulus to which the order-i subgroup reduces
// to a Frobenius/Verschiebung kernel: canonical order i gives
// 1 - p^{i-1} * max(nu); anti-canonical (order 1 only) gives 1 - max(nu)/p.
// May be <= 0 (no information).
Rat reduction_precision(const ValuationVector& nuX, int order,
                        ReductionKind kind);

// Face of a Y-point (cube shadow).
FaceCode face_of_point(const ValuationVector& nuY);

}  // namespace hmv
