#pragma once
// The valuation cube [0,1]^B: open faces coded by strings over {0,*,1},
// the dictionary between faces and admissible pairs, and the face-closure
// order.  Face codes are stored as base-3 digit vectors (digit 0 = "0",
// 1 = "*", 2 = "1") indexed by the flat embedding order.

#include <cstdint>
#include <string>
#include <vector>

#include "hmv/rational.hpp"
#include "hmv/splitting.hpp"
#include "hmv/strata.hpp"

namespace hmv {

enum class Trit : std::uint8_t { Zero = 0, Star = 1, One = 2 };

struct FaceCode {
  FaceCode(SplittingPtr s, std::vector<Trit> digits);
  static FaceCode from_string(SplittingPtr s, std::string_view text);  // "0*1"

  const SplittingPtr& splitting() const { return s_; }
  Trit at(int index) const { return digits_.at(index); }
  int g() const { return static_cast<int>(digits_.size()); }

  EmbSet eta() const;    // {beta : a_beta != 0}
  EmbSet stars() const;  // I(a) = {beta : a_beta = *}
  EmbSet phi() const;    // {beta : a_{sigma^{-1} beta} != 1}
  int dim() const;       // number of stars

  bool operator==(const FaceCode& o) const;
  bool operator!=(const FaceCode& o) const { return !(*this == o); }
  std::string to_string() const;  // one char per embedding, e.g. "0*1"

 private:
  SplittingPtr s_;
  std::vector<Trit> digits_;
};

// Componentwise classification 0 / interior / 1; entries must be in [0,1].
FaceCode face_of_vector(const SplittingPtr& s, const std::vector<Rat>& nu);

// The dictionary: mutually inverse bijections between the 3^g faces and the
// 3^g admissible pairs.
AdmissiblePair face_to_pair(const FaceCode& a);
FaceCode pair_to_face(const AdmissiblePair& p);

// True iff the open face of `a` lies in the closed face of `b`: per digit,
// a = * forces b = *, a = 0 forces b != 1, a = 1 forces b != 0.
bool face_in_closure(const FaceCode& a, const FaceCode& b);

// The involution 0 <-> 1 fixing *; the face-level shadow of w.
FaceCode face_complement(const FaceCode& a);

// All 3^g faces by mixed-radix counting (digit at index 0 least significant).
std::vector<FaceCode> enumerate_faces(
    const SplittingPtr& s, std::uint64_t max_results = kDefaultEnumGuard);

}  // namespace hmv
