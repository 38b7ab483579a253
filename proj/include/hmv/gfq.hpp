#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace hmv {

// Arithmetic in GF(p^m). Elements are encoded as integers in [0, p^m): the
// base-p digits of the code are the coefficients of the polynomial
// representative, lowest degree first. Addition is digit-wise mod p;
// multiplication goes through exp/log tables over a fixed generator of the
// multiplicative group, so the modulus polynomial only matters at build time.
class GFq {
 public:
  using Elem = uint32_t;
  static constexpr long long kMaxQ = 1 << 20;

  static std::shared_ptr<const GFq> make(long long p, int m);

  long long p() const { return p_; }
  int m() const { return m_; }
  long long q() const { return q_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem add(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem pow(Elem a, long long e) const;
  // the p-power automorphism and its inverse x -> x^{p^{m-1}} (p-th root)
  Elem frob(Elem a) const;
  Elem frob_inv(Elem a) const;

  Elem generator() const { return gen_; }
  // encoded monic irreducible modulus polynomial (degree m, code in [q, 2q))
  long long modulus() const { return modulus_; }

 private:
  GFq(long long p, int m);

  long long p_ = 0;
  long long q_ = 0;
  int m_ = 0;
  long long modulus_ = 0;
  Elem gen_ = 0;
  std::vector<Elem> exp_;     // exp_[k] = gen^k for k in [0, q-1)
  std::vector<int32_t> log_;  // log_[exp_[k]] = k; log_[0] = -1
};

using FieldPtr = std::shared_ptr<const GFq>;

}  // namespace hmv
