#include "hmv/sampling.hpp"

#include <stdexcept>

#include "hmv/errors.hpp"

namespace hmv {

namespace {

long long ipow_ll(long long b, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

Rat Sampler::unit_rational(int max_den) {
  std::uniform_int_distribution<long long> dd(1, max_den);
  long long d = dd(rng_);
  std::uniform_int_distribution<long long> nn(0, d);
  return {nn(rng_), d};
}

Rat Sampler::rational_in(const Rat& lo, const Rat& hi, bool open_lo,
                         bool open_hi, int max_den) {
  if (lo > hi || (lo == hi && (open_lo || open_hi)))
    throw std::invalid_argument("empty sampling interval");
  for (int tries = 0; tries < 256; ++tries) {
    Rat t = unit_rational(max_den);
    Rat v = lo + t * (hi - lo);
    if (open_lo && v == lo) continue;
    if (open_hi && v == hi) continue;
    return v;
  }
  // fall back to the midpoint, which satisfies any open constraint
  return lo + (hi - lo) / Rat(2);
}

ValuationVector Sampler::vector(const SplittingPtr& s, Role role) {
  std::vector<Rat> v;
  v.reserve(s->g());
  for (int i = 0; i < s->g(); ++i) v.push_back(unit_rational());
  return {s, std::move(v), role};
}

namespace {

bool lambda_all_in(const ValuationVector& v, const Rat& lo, const Rat& hi,
                   bool strict_lo, bool strict_hi) {
  for (int b = 0; b < v.g(); ++b) {
    Rat l = lambda(v, b);
    if (strict_lo ? !(l > lo) : !(l >= lo)) return false;
    if (strict_hi ? !(l < hi) : !(l <= hi)) return false;
  }
  return true;
}

}  // namespace

ValuationVector Sampler::in_U(const SplittingPtr& s) {
  Rat p(s->p());
  for (int tries = 0; tries < 64; ++tries) {
    ValuationVector v = vector(s, Role::XPoint);
    if (lambda_all_in(v, Rat(0), p, false, true)) return v;
  }
  // componentwise nu < p/(p+1) forces lambda < p
  std::vector<Rat> v;
  for (int i = 0; i < s->g(); ++i)
    v.push_back(rational_in(Rat(0), Rat(s->p(), s->p() + 1), false, true));
  return {s, std::move(v), Role::XPoint};
}

ValuationVector Sampler::in_V(const SplittingPtr& s) {
  return in_U(s).with_role(Role::YPoint);
}

ValuationVector Sampler::in_W(const SplittingPtr& s) {
  Rat p(s->p());
  for (int tries = 0; tries < 64; ++tries) {
    ValuationVector v = vector(s, Role::YPoint);
    if (lambda_all_in(v, p, p + 1, true, false)) return v;
  }
  // componentwise nu > p/(p+1) forces lambda > p
  std::vector<Rat> v;
  for (int i = 0; i < s->g(); ++i)
    v.push_back(rational_in(Rat(s->p(), s->p() + 1), Rat(1), true, false));
  return {s, std::move(v), Role::YPoint};
}

ValuationVector Sampler::expanding(const SplittingPtr& s) {
  for (int tries = 0; tries < 64; ++tries) {
    ValuationVector v = vector(s, Role::XPoint);
    if (lambda_all_in(v, Rat(0), Rat(1), false, true)) return v;
  }
  std::vector<Rat> v;
  for (int i = 0; i < s->g(); ++i)
    v.push_back(rational_in(Rat(0), Rat(1, s->p() + 1), false, true));
  return {s, std::move(v), Role::XPoint};
}

ValuationVector Sampler::reflecting(const SplittingPtr& s) {
  Rat p(s->p());
  for (int tries = 0; tries < 64; ++tries) {
    ValuationVector v = vector(s, Role::XPoint);
    if (lambda_all_in(v, Rat(1), p, true, true)) return v;
  }
  // componentwise nu in (1/(p+1), p/(p+1)) gives lambda in (1, p)
  std::vector<Rat> v;
  for (int i = 0; i < s->g(); ++i)
    v.push_back(rational_in(Rat(1, s->p() + 1), Rat(s->p(), s->p() + 1), true,
                            true));
  return {s, std::move(v), Role::XPoint};
}

ValuationVector Sampler::mixed_regime(const SplittingPtr& s) {
  long long p = s->p();
  std::vector<Rat> v(s->g(), Rat(0));
  if (s->degree(0) == 1) {
    // a single-slot orbit straddles lambda = 1 only on the exact point
    // (1+p) nu = 1
    v[s->index_of(0, 0)] = Rat(1, p + 1);
  } else {
    // slots 0,1 get (a, b) with a + p b < 1 < p a + b, both lambdas < p
    Rat b = rational_in(Rat(0), Rat(1, 2 * p), false, true);
    Rat lo = (Rat(1) - b) / Rat(p);
    Rat hi = Rat(1) - Rat(p) * b;
    Rat a = rational_in(lo, hi, true, true);
    v[s->index_of(0, 0)] = a;
    v[s->index_of(0, 1)] = b;
  }
  // other primes: small entries, comfortably inside U
  for (int i = 1; i < s->prime_count(); ++i)
    for (int j = 0; j < s->degree(i); ++j)
      v[s->index_of(i, j)] =
          rational_in(Rat(0), Rat(p, p + 1), false, true);
  ValuationVector out(s, std::move(v), Role::XPoint);
  internal_check(hmv::in_U(out), "mixed-regime sample escaped U");
  return out;
}

ValuationVector Sampler::too_singular(const SplittingPtr& s) {
  long long p = s->p();
  auto has_too_singular = [&](const ValuationVector& y) {
    for (int i = 0; i < s->prime_count(); ++i)
      if (classify_at_prime(y, i) == PrimeClass::TooSingular) return true;
    return false;
  };
  for (int tries = 0; tries < 64; ++tries) {
    ValuationVector y = vector(s, Role::YPoint);
    if (has_too_singular(y)) return y;
  }
  // construct one at the first prime
  std::vector<Rat> v;
  v.reserve(s->g());
  for (int i = 0; i < s->g(); ++i) v.push_back(unit_rational());
  if (s->degree(0) == 1) {
    // single slot: lambda = (1+p) nu, too singular only at lambda = p
    v[s->index_of(0, 0)] = Rat(p, p + 1);
  } else {
    // (1, t, 1, 1, ...) on the orbit with t < (p-1)/p: the lambda at slot 1
    // is >= p while the next one is 1 + p t < p
    for (int j = 0; j < s->degree(0); ++j) v[s->index_of(0, j)] = Rat(1);
    v[s->index_of(0, 1)] = rational_in(Rat(0), Rat(p - 1, p), false, true);
  }
  ValuationVector out(s, std::move(v), Role::YPoint);
  internal_check(has_too_singular(out), "constructed point not too singular");
  return out;
}

ValuationVector Sampler::tower_base(const SplittingPtr& s, int n) {
  long long p = s->p();
  // componentwise nu < 1 / ((p+1) p^{n-1}) forces lambda < p^{1-n}
  Rat cap = n == 0 ? Rat(p, p + 1) : Rat(1, (p + 1) * ipow_ll(p, n - 1));
  Rat pn(ipow_ll(p, n));
  for (int tries = 0; tries < 256; ++tries) {
    std::vector<Rat> v;
    v.reserve(s->g());
    for (int i = 0; i < s->g(); ++i)
      v.push_back(rational_in(Rat(0), cap, false, true, 48));
    ValuationVector out(s, std::move(v), Role::XPoint);
    // keep the tail step clean: after n expanding steps each lambda is
    // p^n times the original, so reject bases whose final quotient would
    // straddle lambda = 1 inside some orbit
    bool clean = true;
    for (int i = 0; i < s->prime_count() && clean; ++i) {
      bool below = true, above = true;
      for (int j = 0; j < s->degree(i); ++j) {
        Rat l = pn * lambda(out, s->index_of(i, j));
        if (!(l < Rat(1))) below = false;
        if (!(l > Rat(1))) above = false;
      }
      clean = below || above;
    }
    if (clean) return out;
  }
  // tiny entries keep every orbit in the expanding regime throughout
  std::vector<Rat> v;
  v.reserve(s->g());
  for (int i = 0; i < s->g(); ++i)
    v.push_back(rational_in(Rat(0), cap / Rat(2 * p), false, true, 48));
  return {s, std::move(v), Role::XPoint};
}

}  // namespace hmv
