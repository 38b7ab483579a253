#pragma once

#include <map>
#include <utility>
#include <vector>

#include "hmv/gfq.hpp"
#include "hmv/splitting.hpp"
#include "hmv/strata.hpp"

namespace hmv {

// Linear-algebra model of the p-torsion attached to a type subset tau: one
// 2-dimensional coordinate space D_beta = span(e_beta, f_beta) over GF(q) per
// embedding. The kernel-of-Frobenius line is span(e_beta) everywhere; the
// kernel-of-Verschiebung line is span(e_beta) on tau and span(f_beta) off
// tau, so the marked lines coincide exactly on tau. Fr and Ver shift along
// the sigma-cycles with p-power / p-th-root semilinearity.
struct Vec2 {
  GFq::Elem a = 0;  // coefficient of e_beta
  GFq::Elem b = 0;  // coefficient of f_beta
  bool is_zero() const { return a == 0 && b == 0; }
};

class DieudonneModel {
 public:
  DieudonneModel(SplittingPtr s, EmbSet tau, int m);

  const SplittingPtr& splitting() const { return s_; }
  const EmbSet& tau() const { return tau_; }
  const FieldPtr& field() const { return F_; }
  long long q() const { return F_->q(); }

  // Lines in D_beta are indexed 0..q: index t < q is span(e + t*f) where t
  // encodes a field element, index q is span(f). Kernel of Fr is index 0.
  uint32_t lf_line(int beta) const;
  uint32_t lv_line(int beta) const;
  Vec2 line_rep(uint32_t idx) const;

  Vec2 apply_fr(int beta, Vec2 v) const;   // lands in D_{sigma(beta)}
  Vec2 apply_ver(int beta, Vec2 v) const;  // lands in D_{sigma^{-1}(beta)}

 private:
  SplittingPtr s_;
  EmbSet tau_;
  FieldPtr F_;
};

// one line index per embedding, values in [0, q]
using LineTuple = std::vector<uint32_t>;

// Fr(H_beta) inside H_{sigma(beta)} and Ver(H_beta) inside H_{sigma^{-1}(beta)}
// for every beta, checked by applying the maps to representatives.
bool is_stable(const DieudonneModel& model, const LineTuple& H);

// all stable tuples over GF(q), lexicographic in (H[0], ..., H[g-1]);
// guard bounds the (q+1)^g search space
std::vector<LineTuple> enumerate_stable(const DieudonneModel& model,
                                        long long guard = 10'000'000);

// phi = {beta: H_beta is the kernel-of-Verschiebung line},
// eta = {beta: H_beta is the kernel-of-Frobenius line}
AdmissiblePair invariants_of(const DieudonneModel& model, const LineTuple& H);

// stable-tuple counts keyed by (phi bits, eta bits)
std::map<std::pair<uint64_t, uint64_t>, long long> fibre_census(
    const DieudonneModel& model, long long guard = 10'000'000);

// tau must be all of B; counts keyed by S = {beta: H_beta != lf_line} bits
std::map<uint64_t, long long> spaced_census(const DieudonneModel& model,
                                            long long guard = 10'000'000);

bool is_spaced(const SplittingPtr& s, const EmbSet& S);

// prescribes the kernel-of-Verschiebung line on phi, the kernel-of-Frobenius
// line on eta, and the given free lines (in ascending beta order) elsewhere;
// requires phi∩eta ⊆ tau ⊆ complement of the symmetric difference
LineTuple prescribed_tuple(const DieudonneModel& model,
                           const AdmissiblePair& pair,
                           const std::vector<uint32_t>& free_lines);

}  // namespace hmv
