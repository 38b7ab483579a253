#include "hmv/strata.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "hmv/errors.hpp"

namespace hmv {

namespace {

std::uint64_t pow3(int g) {
  std::uint64_t r = 1;
  for (int i = 0; i < g; ++i) r *= 3;
  return r;
}

}  // namespace

AdmissiblePair::AdmissiblePair(EmbSet phi_, EmbSet eta_)
    : phi(std::move(phi_)), eta(std::move(eta_)), I(phi.left() & eta) {
  if (!is_admissible(phi, eta))
    throw std::invalid_argument("pair is not admissible: l(phi^c) must lie in eta");
}

bool is_admissible(const EmbSet& phi, const EmbSet& eta) {
  return phi.complement().left().subset_of(eta);
}

std::vector<AdmissiblePair> enumerate_admissible(const SplittingPtr& s,
                                                 std::uint64_t max_results) {
  int g = s->g();
  if (g > 20) throw GuardExceeded("g too large for pair enumeration (max 20)");
  std::uint64_t total = pow3(g);
  if (total > max_results)
    throw GuardExceeded("pair enumeration would exceed the guard (" +
                        std::to_string(total) + " > " +
                        std::to_string(max_results) + ")");
  std::vector<AdmissiblePair> out;
  out.reserve(total);
  std::uint64_t all = s->all_bits();
  // eta is admissible for phi exactly when it contains l(phi^c); the free
  // bits are l(phi).  Walking supersets in increasing order keeps the whole
  // listing lexicographic on (phi bits, eta bits).
  for (std::uint64_t phi = 0; phi <= all; ++phi) {
    EmbSet phiS(s, phi);
    std::uint64_t forced = phiS.complement().left().bits();
    std::uint64_t free = phiS.left().bits();
    std::uint64_t n_eta = 1ull << std::popcount(free);
    for (std::uint64_t t = 0; t < n_eta; ++t) {
      EmbSet etaS(s, forced | deposit_bits(t, free));
      out.emplace_back(phiS, etaS);
    }
  }
  internal_check(out.size() == total, "admissible pair count != 3^g");
  return out;
}

int stratum_dim(const AdmissiblePair& p) {
  int g = p.phi.splitting()->g();
  int d = 2 * g - (p.phi.size() + p.eta.size());
  internal_check(d >= 0 && d <= g, "stratum dimension out of [0, g]");
  return d;
}

bool pair_geq(const AdmissiblePair& a, const AdmissiblePair& b) {
  return b.phi.subset_of(a.phi) && b.eta.subset_of(a.eta);
}

std::vector<AdmissiblePair> closure_pairs_at(const AdmissiblePair& p) {
  // phi' = phi - J with J running over subsets of r(I), eta' = eta - K with
  // K inside I; (phi', eta') stays admissible exactly when l(J) and K are
  // disjoint, giving 3^{#I} strata through the point.
  std::uint64_t rI = p.I.right().bits();
  std::uint64_t Ibits = p.I.bits();
  const SplittingPtr& s = p.phi.splitting();
  std::vector<AdmissiblePair> out;
  std::uint64_t nJ = 1ull << std::popcount(rI);
  std::uint64_t nK = 1ull << std::popcount(Ibits);
  for (std::uint64_t j = 0; j < nJ; ++j) {
    EmbSet J(s, deposit_bits(j, rI));
    EmbSet lJ = J.left();
    for (std::uint64_t k = 0; k < nK; ++k) {
      EmbSet K(s, deposit_bits(k, Ibits));
      if (!lJ.disjoint_from(K)) continue;
      out.emplace_back(p.phi - J, p.eta - K);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const AdmissiblePair& a, const AdmissiblePair& b) {
              if (a.phi.bits() != b.phi.bits()) return a.phi.bits() < b.phi.bits();
              return a.eta.bits() < b.eta.bits();
            });
  internal_check(out.size() == pow3(p.I.size()),
                 "closure pair count != 3^{#I}");
  return out;
}

std::uint64_t component_count_at(const AdmissiblePair& p) {
  return 1ull << p.I.size();
}

EmbSet pi_stratum_image(const AdmissiblePair& p) { return p.phi & p.eta; }

AdmissiblePair w_stratum_image(const AdmissiblePair& p) {
  return AdmissiblePair(p.eta.right(), p.phi.left());
}

std::pair<EmbSet, EmbSet> type_window(const AdmissiblePair& p) {
  EmbSet tau_min = p.phi & p.eta;
  EmbSet sym = (p.phi - p.eta) | (p.eta - p.phi);
  EmbSet tau_max = sym.complement();
  internal_check(tau_min.subset_of(tau_max), "type window collapsed");
  return {tau_min, tau_max};
}

std::vector<EmbSet> pi_open_image_types(const AdmissiblePair& p) {
  auto [lo, hi] = type_window(p);
  std::uint64_t freebits = (hi - lo).bits();
  int nfree = std::popcount(freebits);
  if (nfree > 20) throw GuardExceeded("type window too large to materialize");
  std::vector<EmbSet> out;
  out.reserve(1ull << nfree);
  for (std::uint64_t t = 0; t < (1ull << nfree); ++t)
    out.emplace_back(lo.splitting(), lo.bits() | deposit_bits(t, freebits));
  return out;
}

std::optional<std::uint32_t> is_horizontal(const AdmissiblePair& p) {
  if (!(p.phi & p.eta).empty_set()) return std::nullopt;
  const SplittingPtr& s = p.phi.splitting();
  // With phi cap eta empty, admissibility forces eta = phi^c and phi a
  // union of whole sigma-orbits; anything else is a broken invariant.
  internal_check(p.eta == p.phi.complement(),
                 "horizontal pair: eta != phi^c");
  internal_check(p.phi.shift(1) == p.phi, "horizontal pair: phi not stable");
  std::uint32_t mask = 0;
  for (int i = 0; i < s->prime_count(); ++i) {
    std::uint64_t block = s->orbit_bits(1u << i);
    std::uint64_t inter = p.phi.bits() & block;
    if (inter == block)
      mask |= 1u << i;
    else
      internal_check(inter == 0, "horizontal pair: partial orbit");
  }
  return mask;
}

bool is_t_admissible(const SplittingPtr& s, std::uint32_t t_primes,
                     const EmbSet& phi, const EmbSet& eta) {
  EmbSet block = ideal_block(s, t_primes);
  if (!phi.subset_of(block) || !eta.subset_of(block)) return false;
  return (block - phi.left()).subset_of(eta);
}

std::vector<TAdmissiblePair> enumerate_t_admissible(const SplittingPtr& s,
                                                    std::uint32_t t_primes,
                                                    std::uint64_t max_results) {
  EmbSet block = ideal_block(s, t_primes);
  int f = block.size();
  if (f > 20) throw GuardExceeded("f(t) too large for pair enumeration");
  std::uint64_t total = pow3(f);
  if (total > max_results)
    throw GuardExceeded("restricted enumeration would exceed the guard");
  std::vector<TAdmissiblePair> out;
  out.reserve(total);
  std::uint64_t bb = block.bits();
  for (std::uint64_t c = 0; c < (1ull << f); ++c) {
    EmbSet phi(s, deposit_bits(c, bb));
    // eta must contain B_t - l(phi); the free bits are l(phi) (inside B_t).
    std::uint64_t forced = (block - phi.left()).bits();
    std::uint64_t free = phi.left().bits();
    std::uint64_t n_eta = 1ull << std::popcount(free);
    for (std::uint64_t t = 0; t < n_eta; ++t) {
      EmbSet eta(s, forced | deposit_bits(t, free));
      out.push_back(TAdmissiblePair{t_primes, phi, eta});
    }
  }
  internal_check(out.size() == total, "restricted pair count != 3^{f(t)}");
  return out;
}

}  // namespace hmv
