#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hmv/cube.hpp"
#include "hmv/splitting.hpp"
#include "hmv/strata.hpp"
#include "hmv/valuation.hpp"

namespace hmv {

// Base change along an unramified extension of totally real fields, given
// purely combinatorially: every prime cycle of the target covers a declared
// prime cycle of the source with divisible residue degree, and embeddings
// restrict slot-wise, (j, s) -> (cover[j], s mod f_src).
class ExtensionMap {
 public:
  ExtensionMap(SplittingPtr src, SplittingPtr dst, std::vector<int> cover);

  // "p=3;f=1->p=3;f=2,2:cover=0,0"; the cover suffix may be omitted when
  // the source has a single prime (everything covers it)
  static ExtensionMap parse(std::string_view text);

  const SplittingPtr& source() const { return src_; }
  const SplittingPtr& target() const { return dst_; }
  const std::vector<int>& cover() const { return cover_; }

  // restriction of a target embedding to the source field
  int restrict_index(int dst_index) const;

  // whether every source prime is covered by some target prime; covering
  // data with orphan source primes is accepted but the preimage identities
  // for the regions only constrain the covered part
  bool covers_all_sources() const;

  std::string to_string() const;

 private:
  SplittingPtr src_, dst_;
  std::vector<int> cover_;
};

// preimage of S under restriction; commutes with the shifts
EmbSet induce_set(const ExtensionMap& ext, const EmbSet& S);

// pullback of coordinates, b_beta = a_{beta restricted}
ValuationVector delta(const ExtensionMap& ext, const ValuationVector& nu);

// both members induced; admissibility is preserved
AdmissiblePair induce_pair(const ExtensionMap& ext, const AdmissiblePair& pr);

// the unramified Galois action sigma^k: index relabeling on every kind
EmbSet galois_act(long long k, const EmbSet& S);
ValuationVector galois_act(long long k, const ValuationVector& nu);
AdmissiblePair galois_act(long long k, const AdmissiblePair& pr);
FaceCode galois_act(long long k, const FaceCode& face);

}  // namespace hmv
