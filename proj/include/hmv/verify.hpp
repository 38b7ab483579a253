#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hmv/rational.hpp"
#include "hmv/splitting.hpp"

namespace hmv {

// Self-check batteries: each suite replays a module's invariants on the
// configured splitting (plus a fixed small sweep where the invariant is
// about families) and reports the first failing witness.
struct VerifyOptions {
  SplittingPtr splitting;  // defaults to p=2;f=2 when null
  int samples = 1000;
  std::uint64_t seed = 1;
  long long oracle_guard = 10'000'000;
  // testing-only negative control: the dynamics suite re-derives the
  // per-prime classification against this threshold instead of p; setting
  // it to anything but p must make the suite fail with a witness
  std::optional<Rat> corrupt_lambda_threshold;
};

struct VerifyItem {
  std::string suite;
  std::string check;
  bool ok = true;
  std::string witness;  // empty when ok
};

struct VerifyReport {
  std::vector<VerifyItem> items;
  bool all_ok() const;
};

// known suites: strata, cube, dynamics, oracle, funct
std::vector<std::string> verify_suite_names();

// runs one suite ("all" or empty = every suite)
VerifyReport run_verify(const VerifyOptions& opts,
                        const std::string& suite = "all");

}  // namespace hmv
