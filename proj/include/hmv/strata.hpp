#pragma once
// The lattice of admissible pairs (phi, eta) labeling the strata of the
// special fibre at Gamma_0(p)-level: membership, enumeration, dimension,
// closure, images under the projection pi and the Atkin-Lehner involution
// w, type windows, and the restricted per-ideal variant.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hmv/splitting.hpp"

namespace hmv {

// Default cap on materialized enumerations (3^g pairs).
inline constexpr std::uint64_t kDefaultEnumGuard = 2'000'000;

// A pair (phi, eta) with l(phi^c) subseteq eta, I = l(phi) cap eta cached.
struct AdmissiblePair {
  EmbSet phi, eta, I;
  AdmissiblePair(EmbSet phi, EmbSet eta);  // throws if not admissible
  bool operator==(const AdmissiblePair& o) const {
    return phi == o.phi && eta == o.eta;
  }
  bool operator!=(const AdmissiblePair& o) const { return !(*this == o); }
};

bool is_admissible(const EmbSet& phi, const EmbSet& eta);

// All 3^g admissible pairs, lexicographic on (phi bits, eta bits).
std::vector<AdmissiblePair> enumerate_admissible(
    const SplittingPtr& s, std::uint64_t max_results = kDefaultEnumGuard);

inline const EmbSet& critical_indices(const AdmissiblePair& p) { return p.I; }

// dim W_{phi,eta} = 2g - (#phi + #eta), always in [0, g].
int stratum_dim(const AdmissiblePair& p);

// Componentwise double inclusion a.phi >= b.phi, a.eta >= b.eta.
bool pair_geq(const AdmissiblePair& a, const AdmissiblePair& b);

// The strata whose closure contains a point with invariants (phi, eta):
// all admissible (phi - J, eta - K) with l(J) and K inside I and disjoint.
// Exactly 3^{#I} results, sorted lexicographically.
std::vector<AdmissiblePair> closure_pairs_at(const AdmissiblePair& p);

// Number of local branches through a point of the stratum: 2^{#I}.
std::uint64_t component_count_at(const AdmissiblePair& p);

// Type of the image stratum downstairs: tau = phi cap eta.
EmbSet pi_stratum_image(const AdmissiblePair& p);

// w(W_{phi,eta}) = W_{r(eta), l(phi)}; an involution on pairs.
AdmissiblePair w_stratum_image(const AdmissiblePair& p);

// (tau_min, tau_max) = (phi cap eta, (phi sym-diff eta)^c): the types a point
// with these invariants can have downstairs.
std::pair<EmbSet, EmbSet> type_window(const AdmissiblePair& p);

// All types in the window [tau_min, tau_max], ascending.
std::vector<EmbSet> pi_open_image_types(const AdmissiblePair& p);

// If phi cap eta is empty the pair is (B_t, B_t*) for a unique set t of
// primes; returns the prime mask of t, or nullopt.
std::optional<std::uint32_t> is_horizontal(const AdmissiblePair& p);

// Restricted variant: subsets of B_t with B_t - l(phi) subseteq eta.
struct TAdmissiblePair {
  std::uint32_t t_primes;
  EmbSet phi, eta;
};

std::vector<TAdmissiblePair> enumerate_t_admissible(
    const SplittingPtr& s, std::uint32_t t_primes,
    std::uint64_t max_results = kDefaultEnumGuard);

bool is_t_admissible(const SplittingPtr& s, std::uint32_t t_primes,
                     const EmbSet& phi, const EmbSet& eta);

}  // namespace hmv
