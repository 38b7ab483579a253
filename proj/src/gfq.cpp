#include "hmv/gfq.hpp"

#include <stdexcept>
#include <string>

#include "hmv/errors.hpp"

namespace hmv {

namespace {

bool is_prime_ll(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

using Poly = std::vector<int>;  // coefficients mod p, lowest degree first

Poly decode_poly(long long code, long long p) {
  Poly out;
  while (code > 0) {
    out.push_back(static_cast<int>(code % p));
    code /= p;
  }
  return out;
}

long long encode_poly(const Poly& a, long long p) {
  long long code = 0;
  for (size_t i = a.size(); i-- > 0;) code = code * p + a[i];
  return code;
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// remainder of a modulo the monic polynomial b, in place
void poly_rem(Poly& a, const Poly& b, long long p) {
  while (a.size() >= b.size()) {
    int lead = a.back();
    if (lead != 0) {
      size_t shift = a.size() - b.size();
      for (size_t i = 0; i < b.size(); ++i) {
        long long v = a[shift + i] - static_cast<long long>(lead) * b[i];
        a[shift + i] = static_cast<int>(((v % p) + p) % p);
      }
    }
    a.pop_back();
    trim(a);
    if (a.empty()) return;
  }
}

long long poly_mulmod(long long ca, long long cb, const Poly& mod,
                      long long p) {
  Poly a = decode_poly(ca, p), b = decode_poly(cb, p);
  if (a.empty() || b.empty()) return 0;
  Poly prod(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      prod[i + j] = static_cast<int>(
          (prod[i + j] + static_cast<long long>(a[i]) * b[j]) % p);
  trim(prod);
  poly_rem(prod, mod, p);
  return encode_poly(prod, p);
}

long long poly_powmod(long long base, long long e, const Poly& mod,
                      long long p) {
  long long acc = 1;
  while (e > 0) {
    if (e & 1) acc = poly_mulmod(acc, base, mod, p);
    base = poly_mulmod(base, base, mod, p);
    e >>= 1;
  }
  return acc;
}

bool poly_irreducible(long long code, long long p, int m) {
  Poly cand = decode_poly(code, p);
  for (int d = 1; 2 * d <= m; ++d) {
    long long lo = 1, i = 0;
    while (i < d) lo *= p, ++i;  // p^d
    for (long long t = 0; t < lo; ++t) {
      Poly div = decode_poly(lo + t, p);
      Poly rem = cand;
      poly_rem(rem, div, p);
      if (rem.empty()) return false;
    }
  }
  return true;
}

std::vector<long long> prime_factors(long long n) {
  std::vector<long long> out;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

GFq::GFq(long long p, int m) : p_(p), m_(m) {
  if (!is_prime_ll(p)) throw std::invalid_argument("field characteristic must be prime, got " + std::to_string(p));
  if (m < 1) throw std::invalid_argument("field degree must be >= 1");
  long long q = 1;
  for (int i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxQ)
      throw GuardExceeded("field size " + std::to_string(p) + "^" +
                          std::to_string(m) + " exceeds the cap " +
                          std::to_string(kMaxQ));
  }
  q_ = q;

  // monic irreducible modulus of degree m by trial division
  modulus_ = 0;
  for (long long c = q; c < 2 * q; ++c)
    if (poly_irreducible(c, p, m)) {
      modulus_ = c;
      break;
    }
  internal_check(modulus_ != 0, "no irreducible polynomial found");
  Poly mod = decode_poly(modulus_, p);

  // generator: order q-1 exactly, certified against the prime factors
  auto factors = prime_factors(q - 1);
  gen_ = 0;
  for (long long c = q == 2 ? 1 : 2; c < q; ++c) {
    bool ok = true;
    for (long long ell : factors)
      if (poly_powmod(c, (q - 1) / ell, mod, p) == 1) {
        ok = false;
        break;
      }
    if (ok) {
      gen_ = static_cast<Elem>(c);
      break;
    }
  }
  internal_check(gen_ != 0, "no multiplicative generator found");

  exp_.assign(static_cast<size_t>(q - 1), 0);
  log_.assign(static_cast<size_t>(q), -1);
  long long acc = 1;
  for (long long k = 0; k < q - 1; ++k) {
    internal_check(log_[acc] == -1, "generator order too small");
    exp_[k] = static_cast<Elem>(acc);
    log_[acc] = static_cast<int32_t>(k);
    acc = poly_mulmod(acc, gen_, mod, p);
  }
  internal_check(acc == 1, "generator order mismatch");
}

std::shared_ptr<const GFq> GFq::make(long long p, int m) {
  return std::shared_ptr<const GFq>(new GFq(p, m));
}

GFq::Elem GFq::add(Elem a, Elem b) const {
  internal_check(a < q_ && b < q_, "field element out of range");
  Elem out = 0, scale = 1;
  while (a > 0 || b > 0) {
    Elem digit = (a % p_ + b % p_) % p_;
    out += digit * scale;
    scale *= static_cast<Elem>(p_);
    a /= static_cast<Elem>(p_);
    b /= static_cast<Elem>(p_);
  }
  return out;
}

GFq::Elem GFq::neg(Elem a) const {
  internal_check(a < q_, "field element out of range");
  Elem out = 0, scale = 1;
  while (a > 0) {
    Elem digit = (p_ - a % p_) % p_;
    out += digit * scale;
    scale *= static_cast<Elem>(p_);
    a /= static_cast<Elem>(p_);
  }
  return out;
}

GFq::Elem GFq::mul(Elem a, Elem b) const {
  internal_check(a < q_ && b < q_, "field element out of range");
  if (a == 0 || b == 0) return 0;
  long long k = (static_cast<long long>(log_[a]) + log_[b]) % (q_ - 1);
  return exp_[k];
}

GFq::Elem GFq::inv(Elem a) const {
  internal_check(a < q_, "field element out of range");
  if (a == 0) throw std::invalid_argument("division by zero in GF(q)");
  long long k = (q_ - 1 - log_[a]) % (q_ - 1);
  return exp_[k];
}

GFq::Elem GFq::pow(Elem a, long long e) const {
  internal_check(a < q_, "field element out of range");
  if (a == 0) {
    if (e < 0) throw std::invalid_argument("division by zero in GF(q)");
    return e == 0 ? 1 : 0;
  }
  long long k = (log_[a] % (q_ - 1)) * (e % (q_ - 1)) % (q_ - 1);
  if (k < 0) k += q_ - 1;
  return exp_[k];
}

GFq::Elem GFq::frob(Elem a) const { return pow(a, p_); }

GFq::Elem GFq::frob_inv(Elem a) const {
  long long e = 1;
  for (int i = 0; i + 1 < m_; ++i) e *= p_;
  return pow(a, e);
}

}  // namespace hmv
