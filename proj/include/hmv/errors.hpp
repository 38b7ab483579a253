#pragma once
// Error taxonomy shared across modules.  The CLI maps these to exit codes:
// std::invalid_argument -> 2 (bad input), GuardExceeded / RegionError -> 3
// (domain precondition), InternalError -> 4 (broken internal invariant).

#include <stdexcept>
#include <string>

namespace hmv {

struct GuardExceeded : std::runtime_error {
  explicit GuardExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct InternalError : std::logic_error {
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

// A valuation-region precondition failed (point outside the canonical
// region, too-singular prime, mixed quotient regime, ...).  Carries the
// offending prime and up to two witness embedding indices (-1 = unused).
struct RegionError : std::runtime_error {
  enum class Kind {
    NotInU,              // some lambda_beta >= p
    TooSingular,         // prime classifies neither canonical nor anti
    MixedQuotient,       // quotient regime straddles lambda = 1 at a prime
    IterationPrecondition  // lambda bound p^{1-n} violated
  };
  RegionError(Kind kind, std::string what, int prime = -1, int beta_a = -1,
              int beta_b = -1)
      : std::runtime_error(std::move(what)),
        kind(kind),
        prime(prime),
        beta_a(beta_a),
        beta_b(beta_b) {}
  Kind kind;
  int prime;
  int beta_a;
  int beta_b;
};

inline void internal_check(bool ok, const char* what) {
  if (!ok) throw InternalError(what);
}

}  // namespace hmv
