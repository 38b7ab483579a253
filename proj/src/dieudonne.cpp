#include "hmv/dieudonne.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <thread>

#include "hmv/errors.hpp"

namespace hmv {

DieudonneModel::DieudonneModel(SplittingPtr s, EmbSet tau, int m)
    : s_(std::move(s)), tau_(std::move(tau)) {
  require_same_splitting(s_, tau_.splitting());
  F_ = GFq::make(s_->p(), m);
}

uint32_t DieudonneModel::lf_line(int) const { return 0; }

uint32_t DieudonneModel::lv_line(int beta) const {
  return tau_.contains(beta) ? 0 : static_cast<uint32_t>(q());
}

Vec2 DieudonneModel::line_rep(uint32_t idx) const {
  if (idx < q()) return {1, idx};
  if (idx == q()) return {0, 1};
  throw std::invalid_argument("line index out of range: " +
                              std::to_string(idx));
}

Vec2 DieudonneModel::apply_fr(int beta, Vec2 v) const {
  GFq::Elem bp = F_->frob(v.b);
  if (tau_.contains(s_->sigma(beta))) return {bp, 0};
  return {0, bp};
}

Vec2 DieudonneModel::apply_ver(int beta, Vec2 v) const {
  GFq::Elem coeff = tau_.contains(beta) ? v.b : v.a;
  return {F_->frob_inv(coeff), 0};
}

namespace {

bool parallel(const GFq& F, Vec2 v, Vec2 w) {
  return F.sub(F.mul(v.a, w.b), F.mul(v.b, w.a)) == 0;
}

bool line_absorbs(const DieudonneModel& model, Vec2 img, uint32_t target) {
  return img.is_zero() ||
         parallel(*model.field(), img, model.line_rep(target));
}

// all stable tuples whose first line is fixed to `first`; `scratch` holds
// the tuple under construction
void collect_with_first(const DieudonneModel& model, uint32_t first,
                        std::vector<LineTuple>& out) {
  int g = model.splitting()->g();
  long long q = model.q();
  LineTuple H(static_cast<size_t>(g), 0);
  H[0] = first;
  int pos = g == 1 ? 0 : 1;
  // odometer over positions 1..g-1, last position fastest
  while (true) {
    if (is_stable(model, H)) out.push_back(H);
    if (g == 1) break;
    int k = g - 1;
    while (k >= pos && H[k] == static_cast<uint32_t>(q)) H[k--] = 0;
    if (k < pos) break;
    ++H[k];
  }
}

}  // namespace

bool is_stable(const DieudonneModel& model, const LineTuple& H) {
  const auto& s = model.splitting();
  if (H.size() != static_cast<size_t>(s->g()))
    throw std::invalid_argument("line tuple has wrong length");
  for (int beta = 0; beta < s->g(); ++beta) {
    Vec2 v = model.line_rep(H[beta]);
    if (!line_absorbs(model, model.apply_fr(beta, v), H[s->sigma(beta)]))
      return false;
    if (!line_absorbs(model, model.apply_ver(beta, v), H[s->sigma(beta, -1)]))
      return false;
  }
  return true;
}

std::vector<LineTuple> enumerate_stable(const DieudonneModel& model,
                                        long long guard) {
  int g = model.splitting()->g();
  long long q = model.q();
  long long total = 1;
  for (int i = 0; i < g; ++i) {
    total *= q + 1;
    if (total > guard)
      throw GuardExceeded("search space (q+1)^g = (" + std::to_string(q) +
                          "+1)^" + std::to_string(g) + " exceeds the guard " +
                          std::to_string(guard));
  }

  std::vector<std::vector<LineTuple>> per_first(static_cast<size_t>(q + 1));
  unsigned workers = std::thread::hardware_concurrency();
  if (total >= 250'000 && workers > 1) {
    // partition the search space by the first line; read-only model shared
    unsigned n = std::min<unsigned>(workers, static_cast<unsigned>(q + 1));
    std::vector<std::thread> pool;
    pool.reserve(n);
    for (unsigned w = 0; w < n; ++w)
      pool.emplace_back([&, w] {
        for (long long v = w; v <= q; v += n)
          collect_with_first(model, static_cast<uint32_t>(v), per_first[v]);
      });
    for (auto& t : pool) t.join();
  } else {
    for (long long v = 0; v <= q; ++v)
      collect_with_first(model, static_cast<uint32_t>(v), per_first[v]);
  }

  std::vector<LineTuple> out;
  for (auto& part : per_first)
    out.insert(out.end(), part.begin(), part.end());
  return out;
}

AdmissiblePair invariants_of(const DieudonneModel& model, const LineTuple& H) {
  const auto& s = model.splitting();
  if (H.size() != static_cast<size_t>(s->g()))
    throw std::invalid_argument("line tuple has wrong length");
  uint64_t phi = 0, eta = 0;
  for (int beta = 0; beta < s->g(); ++beta) {
    if (H[beta] > model.q())
      throw std::invalid_argument("line index out of range");
    if (H[beta] == model.lv_line(beta)) phi |= 1ull << beta;
    if (H[beta] == model.lf_line(beta)) eta |= 1ull << beta;
  }
  return {EmbSet(s, phi), EmbSet(s, eta)};
}

std::map<std::pair<uint64_t, uint64_t>, long long> fibre_census(
    const DieudonneModel& model, long long guard) {
  std::map<std::pair<uint64_t, uint64_t>, long long> out;
  for (const auto& H : enumerate_stable(model, guard)) {
    auto pr = invariants_of(model, H);
    ++out[{pr.phi.bits(), pr.eta.bits()}];
  }
  return out;
}

std::map<uint64_t, long long> spaced_census(const DieudonneModel& model,
                                            long long guard) {
  if (model.tau() != EmbSet::full(model.splitting()))
    throw std::invalid_argument(
        "spaced census requires the full type (tau = B)");
  std::map<uint64_t, long long> out;
  for (const auto& H : enumerate_stable(model, guard)) {
    uint64_t S = 0;
    for (size_t beta = 0; beta < H.size(); ++beta)
      if (H[beta] != model.lf_line(static_cast<int>(beta)))
        S |= 1ull << beta;
    ++out[S];
  }
  return out;
}

bool is_spaced(const SplittingPtr& s, const EmbSet& S) {
  require_same_splitting(s, S.splitting());
  return S.disjoint_from(S.right());
}

LineTuple prescribed_tuple(const DieudonneModel& model,
                           const AdmissiblePair& pair,
                           const std::vector<uint32_t>& free_lines) {
  const auto& s = model.splitting();
  require_same_splitting(s, pair.phi.splitting());
  EmbSet meet = pair.phi & pair.eta;
  EmbSet window_max = ((pair.phi | pair.eta) - meet).complement();
  if (!meet.subset_of(model.tau()) || !model.tau().subset_of(window_max))
    throw std::invalid_argument(
        "type is outside the window of the prescribed pair");
  LineTuple H(static_cast<size_t>(s->g()), 0);
  size_t next = 0;
  for (int beta = 0; beta < s->g(); ++beta) {
    if (pair.phi.contains(beta)) {
      H[beta] = model.lv_line(beta);
    } else if (pair.eta.contains(beta)) {
      H[beta] = model.lf_line(beta);
    } else {
      if (next >= free_lines.size())
        throw std::invalid_argument("not enough free lines supplied");
      if (free_lines[next] > model.q())
        throw std::invalid_argument("line index out of range");
      H[beta] = free_lines[next++];
    }
  }
  if (next != free_lines.size())
    throw std::invalid_argument("too many free lines supplied");
  return H;
}

}  // namespace hmv
