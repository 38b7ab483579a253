#pragma once
// Combinatorics of the embedding set B attached to a totally real field
// together with the splitting behaviour of a rational prime p: one cyclic
// orbit of length f_i per prime above p, with the Frobenius shift sigma
// rotating each orbit by one step.  Subsets of B are bitmasks over the
// flattened index space, so everything downstream (strata, faces,
// valuation dynamics) is plain word arithmetic.

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hmv {

class PrimeSplitting;
using SplittingPtr = std::shared_ptr<const PrimeSplitting>;

// Immutable description of p together with the residue degrees f_0..f_{k-1}
// of the primes above it.  g = sum f_i <= 64 so subsets fit in a word.
class PrimeSplitting {
 public:
  static SplittingPtr make(long long p, std::vector<int> degrees);

  // Accepts "p=3;f=2,1" (';' or ':' between fields).
  static SplittingPtr parse(std::string_view text);

  long long p() const { return p_; }
  int prime_count() const { return static_cast<int>(degrees_.size()); }
  int degree(int prime) const { return degrees_.at(prime); }
  int offset(int prime) const { return offsets_.at(prime); }
  int g() const { return g_; }

  // Flat index of embedding (prime, slot); slot taken mod f_prime.
  int index_of(int prime, long long slot) const;
  // Inverse: flat index -> (prime, slot).
  std::pair<int, int> address(int index) const;
  // sigma^k acting on one embedding: rotate its orbit by k.
  int sigma(int index, long long k = 1) const;

  // Bitmask of the orbits selected by prime_mask (bit i <-> prime i).
  std::uint64_t orbit_bits(std::uint32_t prime_mask) const;
  std::uint64_t all_bits() const { return orbit_bits(all_primes()); }
  std::uint32_t all_primes() const {
    return (prime_count() == 32) ? ~0u : ((1u << prime_count()) - 1u);
  }
  // Sum of residue degrees over the selected primes.
  int degree_sum(std::uint32_t prime_mask) const;

  bool operator==(const PrimeSplitting& o) const {
    return p_ == o.p_ && degrees_ == o.degrees_;
  }

  std::string to_string() const;  // "p=3;f=2,1"

 private:
  PrimeSplitting(long long p, std::vector<int> degrees);
  long long p_;
  std::vector<int> degrees_;
  std::vector<int> offsets_;
  int g_;
};

// Throws std::invalid_argument unless both operands carry the same
// splitting; every binary operation below funnels through this.
void require_same_splitting(const SplittingPtr& a, const SplittingPtr& b);

// A subset of the embedding set, bound to its splitting.
class EmbSet {
 public:
  EmbSet() = default;
  EmbSet(SplittingPtr s, std::uint64_t bits);

  static EmbSet empty(SplittingPtr s) { return EmbSet(std::move(s), 0); }
  static EmbSet full(SplittingPtr s);
  // From a list of (prime, slot) addresses.
  static EmbSet of(SplittingPtr s,
                   const std::vector<std::pair<int, int>>& elems);

  const SplittingPtr& splitting() const { return s_; }
  std::uint64_t bits() const { return bits_; }
  int size() const;
  bool contains(int index) const { return (bits_ >> index) & 1; }
  bool empty_set() const { return bits_ == 0; }

  // Pointwise sigma^k; k may be negative.  Each orbit rotates
  // independently, so sigma^{f_i} is the identity on orbit i.
  EmbSet shift(long long k) const;
  EmbSet left() const { return shift(-1); }   // l(S) = sigma^{-1} S
  EmbSet right() const { return shift(1); }   // r(S) = sigma S
  EmbSet complement() const;

  EmbSet operator|(const EmbSet& o) const;
  EmbSet operator&(const EmbSet& o) const;
  EmbSet operator-(const EmbSet& o) const;  // set difference
  bool operator==(const EmbSet& o) const;
  bool operator!=(const EmbSet& o) const { return !(*this == o); }
  bool subset_of(const EmbSet& o) const;
  bool disjoint_from(const EmbSet& o) const;

  // Members as sorted (prime, slot) addresses.
  std::vector<std::pair<int, int>> elements() const;
  std::string to_string() const;  // "{(0,0),(1,2)}"

 private:
  SplittingPtr s_;
  std::uint64_t bits_ = 0;
};

// Union of the sigma-orbits for the primes selected by prime_mask.
EmbSet ideal_block(const SplittingPtr& s, std::uint32_t prime_mask);

// Scatter the low popcount(mask) bits of `compact` into the set positions of
// `mask`, lowest position first.  Monotone in `compact`, so walking compact
// = 0,1,2,... enumerates the subsets of mask in increasing numeric order.
std::uint64_t deposit_bits(std::uint64_t compact, std::uint64_t mask);

}  // namespace hmv
