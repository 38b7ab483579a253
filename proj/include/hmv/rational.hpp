#pragma once
// Exact rational arithmetic for valuation vectors.  All normalized
// valuations live in [0,1] with denominators that stay small (products of
// p-powers and p+1 factors), so 64-bit boost::rational is ample; the CLI
// boundary rejects inputs with |num| or den beyond 10^9 to keep every
// internal product far from overflow.

#include <boost/rational.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hmv {

using Rat = boost::rational<long long>;

// Parse "a/b" or "a" (optionally signed).  Throws std::invalid_argument on
// malformed input, zero denominator, or magnitude beyond the CLI guard.
Rat parse_rational(std::string_view s);

// Render without losing exactness: "a/b", or plain "a" when b == 1.
std::string format_rational(const Rat& r);

inline Rat rat(long long n, long long d = 1) { return Rat(n, d); }

}  // namespace hmv
