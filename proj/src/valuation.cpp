#include "hmv/valuation.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hmv/errors.hpp"

namespace hmv {

namespace {

long long ipow_ll(long long b, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

void require_role(const ValuationVector& v, Role r, const char* what) {
  if (v.role() != r)
    throw std::invalid_argument(std::string(what) + ": wrong point role");
}

std::string beta_name(const SplittingPtr& s, int beta) {
  auto [i, j] = s->address(beta);
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

ValuationVector::ValuationVector(SplittingPtr s, std::vector<Rat> nu, Role role)
    : s_(std::move(s)), nu_(std::move(nu)), role_(role) {
  if (!s_) throw std::invalid_argument("null splitting");
  if (static_cast<int>(nu_.size()) != s_->g())
    throw std::invalid_argument("valuation vector length != g");
  for (const Rat& v : nu_)
    if (v < Rat(0) || v > Rat(1))
      throw std::invalid_argument("valuation entry outside [0,1]");
}

bool ValuationVector::operator==(const ValuationVector& o) const {
  require_same_splitting(s_, o.s_);
  return nu_ == o.nu_ && role_ == o.role_;
}

Rat lambda(const ValuationVector& nu, int beta) {
  const SplittingPtr& s = nu.splitting();
  return nu.at(beta) + Rat(s->p()) * nu.at(s->sigma(beta, -1));
}

std::vector<Rat> lambda_table(const ValuationVector& nu) {
  std::vector<Rat> out;
  out.reserve(nu.g());
  for (int b = 0; b < nu.g(); ++b) out.push_back(lambda(nu, b));
  return out;
}

PrimeClass classify_at_prime(const ValuationVector& nuY, int prime) {
  require_role(nuY, Role::YPoint, "classify_at_prime");
  const SplittingPtr& s = nuY.splitting();
  Rat p(s->p());
  bool all_below = true, all_above = true;
  for (int j = 0; j < s->degree(prime); ++j) {
    Rat l = lambda(nuY, s->index_of(prime, j));
    if (!(l < p)) all_below = false;
    if (!(l > p)) all_above = false;
  }
  if (all_below) return PrimeClass::Canonical;
  if (all_above) return PrimeClass::AntiCanonical;
  return PrimeClass::TooSingular;
}

bool in_U(const ValuationVector& nuX, std::optional<std::uint32_t> t_primes) {
  require_role(nuX, Role::XPoint, "in_U");
  const SplittingPtr& s = nuX.splitting();
  std::uint32_t mask = t_primes.value_or(s->all_primes());
  if (mask & ~s->all_primes())
    throw std::invalid_argument("prime mask selects a nonexistent prime");
  Rat p(s->p());
  for (int i = 0; i < s->prime_count(); ++i) {
    if (!((mask >> i) & 1)) continue;
    for (int j = 0; j < s->degree(i); ++j)
      if (!(lambda(nuX, s->index_of(i, j)) < p)) return false;
  }
  return true;
}

ValuationVector w_map(const ValuationVector& nuY) {
  require_role(nuY, Role::YPoint, "w_map");
  std::vector<Rat> out;
  out.reserve(nuY.g());
  for (const Rat& v : nuY.values()) out.push_back(Rat(1) - v);
  return {nuY.splitting(), std::move(out), Role::YPoint};
}

std::vector<ValueOrInterval> pi_fiberwise(const ValuationVector& nuY) {
  require_role(nuY, Role::YPoint, "pi_fiberwise");
  const SplittingPtr& s = nuY.splitting();
  Rat p(s->p());
  std::vector<ValueOrInterval> out;
  out.reserve(nuY.g());
  for (int b = 0; b < nuY.g(); ++b) {
    Rat q = nuY.at(b);
    Rat sv = nuY.at(s->sigma(b, -1));
    if (q == Rat(0) && sv != Rat(1)) {
      out.push_back({Rat(0), Rat(0)});
    } else if (q != Rat(0) && sv == Rat(1)) {
      // the image point is ordinary in this direction
      out.push_back({Rat(0), Rat(0)});
    } else if (q == Rat(0) && sv == Rat(1)) {
      out.push_back({Rat(0), Rat(1)});
    } else if (q != Rat(1) && sv != Rat(0)) {
      Rat alt = p * (Rat(1) - sv);
      Rat m = std::min(q, alt);
      if (q != alt)
        out.push_back({m, m});
      else
        out.push_back({m, Rat(1)});  // equal-valuation collision
    } else if (q != Rat(1)) {  // sv == 0
      out.push_back({q, q});
    } else if (sv != Rat(0)) {  // q == 1
      Rat v = std::min(p * (Rat(1) - sv), Rat(1));
      out.push_back({v, v});
    } else {  // q == 1, sv == 0
      out.push_back({Rat(1), Rat(1)});
    }
  }
  return out;
}

namespace {

// Find witnesses inside one orbit: a beta with lambda <= p and one with
// lambda >= p (both exist when the prime is too singular).
std::pair<int, int> too_singular_witnesses(const ValuationVector& nuY,
                                           int prime) {
  const SplittingPtr& s = nuY.splitting();
  Rat p(s->p());
  int le = -1, ge = -1;
  for (int j = 0; j < s->degree(prime); ++j) {
    int b = s->index_of(prime, j);
    Rat l = lambda(nuY, b);
    if (le < 0 && l <= p) le = b;
    if (ge < 0 && l >= p) ge = b;
  }
  return {le, ge};
}

}  // namespace

ValuationVector pi_exact(const ValuationVector& nuY) {
  require_role(nuY, Role::YPoint, "pi_exact");
  const SplittingPtr& s = nuY.splitting();
  Rat p(s->p());
  std::vector<Rat> out(nuY.g());
  for (int i = 0; i < s->prime_count(); ++i) {
    PrimeClass cls = classify_at_prime(nuY, i);
    if (cls == PrimeClass::TooSingular) {
      auto [le, ge] = too_singular_witnesses(nuY, i);
      throw RegionError(RegionError::Kind::TooSingular,
                        "image valuation not determined at prime " +
                            std::to_string(i) + ": lambda" +
                            beta_name(s, le) + " <= p and lambda" +
                            beta_name(s, ge) + " >= p; use pi_fiberwise",
                        i, le, ge);
    }
    for (int j = 0; j < s->degree(i); ++j) {
      int b = s->index_of(i, j);
      if (cls == PrimeClass::Canonical)
        out[b] = nuY.at(b);
      else
        out[b] = std::min(p * (Rat(1) - nuY.at(s->sigma(b, -1))), Rat(1));
    }
  }
  return {s, std::move(out), Role::XPoint};
}

ValuationVector section_dagger(const ValuationVector& nuX,
                               std::optional<std::uint32_t> t_primes) {
  require_role(nuX, Role::XPoint, "section_dagger");
  const SplittingPtr& s = nuX.splitting();
  if (!in_U(nuX, t_primes)) {
    Rat p(s->p());
    std::uint32_t mask = t_primes.value_or(s->all_primes());
    for (int i = 0; i < s->prime_count(); ++i) {
      if (!((mask >> i) & 1)) continue;
      for (int j = 0; j < s->degree(i); ++j) {
        int b = s->index_of(i, j);
        if (!(lambda(nuX, b) < p))
          throw RegionError(RegionError::Kind::NotInU,
                            "no canonical subgroup: lambda" + beta_name(s, b) +
                                " = " + format_rational(lambda(nuX, b)) +
                                " >= p at prime " + std::to_string(i),
                            i, b);
      }
    }
    throw InternalError("in_U false without witness");
  }
  ValuationVector out(s, nuX.values(), Role::YPoint);
  std::uint32_t mask = t_primes.value_or(s->all_primes());
  for (int i = 0; i < s->prime_count(); ++i)
    if ((mask >> i) & 1)
      internal_check(classify_at_prime(out, i) == PrimeClass::Canonical,
                     "section image not canonical");
  return out;
}

ValuationVector quotient_valuation(const ValuationVector& nuY) {
  require_role(nuY, Role::YPoint, "quotient_valuation");
  const SplittingPtr& s = nuY.splitting();
  ValuationVector w = w_map(nuY);
  // Detect the mixed regime up front to report witnesses in terms of the
  // input: w is too singular at a prime iff lambda(nuY) straddles 1 there.
  for (int i = 0; i < s->prime_count(); ++i) {
    if (classify_at_prime(w, i) != PrimeClass::TooSingular) continue;
    int le = -1, ge = -1;
    for (int j = 0; j < s->degree(i); ++j) {
      int b = s->index_of(i, j);
      Rat l = lambda(nuY, b);
      if (le < 0 && l <= Rat(1)) le = b;
      if (ge < 0 && l >= Rat(1)) ge = b;
    }
    internal_check(le >= 0 && ge >= 0, "mixed regime without witnesses");
    throw RegionError(RegionError::Kind::MixedQuotient,
                      "quotient leaves the canonical region: lambda" +
                          beta_name(s, le) + " <= 1 and lambda" +
                          beta_name(s, ge) + " >= 1 at prime " +
                          std::to_string(i),
                      i, le, ge);
  }
  return pi_exact(w);
}

std::vector<ValuationVector> iterate_canonical(const ValuationVector& nuX,
                                               int n) {
  require_role(nuX, Role::XPoint, "iterate_canonical");
  if (n < 0) throw std::invalid_argument("tower order must be >= 0");
  const SplittingPtr& s = nuX.splitting();
  // lambda < p^{1-n} everywhere
  Rat bound = n == 0 ? Rat(s->p()) : Rat(1, ipow_ll(s->p(), n - 1));
  for (int b = 0; b < nuX.g(); ++b)
    if (!(lambda(nuX, b) < bound))
      throw RegionError(RegionError::Kind::IterationPrecondition,
                        "tower of order " + std::to_string(n) +
                            " needs lambda < p^{1-n}; lambda" +
                            beta_name(s, b) + " = " +
                            format_rational(lambda(nuX, b)),
                        s->address(b).first, b);
  std::vector<ValuationVector> chain;
  chain.reserve(n + 1);
  ValuationVector cur = nuX;
  for (int i = 1; i <= n + 1; ++i) {
    cur = quotient_valuation(section_dagger(cur));
    chain.push_back(cur);
  }
  return chain;
}

Rat reduction_precision(const ValuationVector& nuX, int order,
                        ReductionKind kind) {
  require_role(nuX, Role::XPoint, "reduction_precision");
  if (order < 1) throw std::invalid_argument("reduction order must be >= 1");
  if (kind == ReductionKind::AntiCanonical && order > 1)
    throw std::invalid_argument(
        "anti-canonical reduction is only defined at order 1");
  if (!in_U(nuX))
    throw RegionError(RegionError::Kind::NotInU,
                      "reduction precision needs a point of U");
  Rat v(0);
  for (const Rat& x : nuX.values()) v = std::max(v, x);
  long long p = nuX.splitting()->p();
  if (kind == ReductionKind::Canonical)
    return Rat(1) - Rat(ipow_ll(p, order - 1)) * v;
  return Rat(1) - v / Rat(p);
}

FaceCode face_of_point(const ValuationVector& nuY) {
  require_role(nuY, Role::YPoint, "face_of_point");
  return face_of_vector(nuY.splitting(), nuY.values());
}

}  // namespace hmv
