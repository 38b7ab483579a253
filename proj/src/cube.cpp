#include "hmv/cube.hpp"

#include <stdexcept>

#include "hmv/errors.hpp"

namespace hmv {

FaceCode::FaceCode(SplittingPtr s, std::vector<Trit> digits)
    : s_(std::move(s)), digits_(std::move(digits)) {
  if (!s_) throw std::invalid_argument("null splitting");
  if (static_cast<int>(digits_.size()) != s_->g())
    throw std::invalid_argument("face code length != g");
}

FaceCode FaceCode::from_string(SplittingPtr s, std::string_view text) {
  std::vector<Trit> d;
  d.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '0': d.push_back(Trit::Zero); break;
      case '*': d.push_back(Trit::Star); break;
      case '1': d.push_back(Trit::One); break;
      default: throw std::invalid_argument("face code digits must be 0, *, 1");
    }
  }
  return FaceCode(std::move(s), std::move(d));
}

EmbSet FaceCode::eta() const {
  std::uint64_t bits = 0;
  for (int i = 0; i < g(); ++i)
    if (digits_[i] != Trit::Zero) bits |= 1ull << i;
  return EmbSet(s_, bits);
}

EmbSet FaceCode::stars() const {
  std::uint64_t bits = 0;
  for (int i = 0; i < g(); ++i)
    if (digits_[i] == Trit::Star) bits |= 1ull << i;
  return EmbSet(s_, bits);
}

EmbSet FaceCode::phi() const {
  std::uint64_t bits = 0;
  for (int i = 0; i < g(); ++i)
    if (digits_[s_->sigma(i, -1)] != Trit::One) bits |= 1ull << i;
  return EmbSet(s_, bits);
}

int FaceCode::dim() const {
  int n = 0;
  for (Trit t : digits_)
    if (t == Trit::Star) ++n;
  return n;
}

bool FaceCode::operator==(const FaceCode& o) const {
  require_same_splitting(s_, o.s_);
  return digits_ == o.digits_;
}

std::string FaceCode::to_string() const {
  std::string out;
  out.reserve(digits_.size());
  for (Trit t : digits_)
    out += (t == Trit::Zero ? '0' : t == Trit::Star ? '*' : '1');
  return out;
}

FaceCode face_of_vector(const SplittingPtr& s, const std::vector<Rat>& nu) {
  if (static_cast<int>(nu.size()) != s->g())
    throw std::invalid_argument("vector length != g");
  std::vector<Trit> d;
  d.reserve(nu.size());
  for (const Rat& v : nu) {
    if (v < Rat(0) || v > Rat(1))
      throw std::invalid_argument("valuation entry outside [0,1]");
    d.push_back(v == Rat(0) ? Trit::Zero : v == Rat(1) ? Trit::One : Trit::Star);
  }
  return FaceCode(s, std::move(d));
}

AdmissiblePair face_to_pair(const FaceCode& a) { return {a.phi(), a.eta()}; }

FaceCode pair_to_face(const AdmissiblePair& p) {
  const SplittingPtr& s = p.phi.splitting();
  std::vector<Trit> d(s->g(), Trit::Zero);
  for (int i = 0; i < s->g(); ++i) {
    if (p.I.contains(i))
      d[i] = Trit::Star;
    else if (p.eta.contains(i))
      d[i] = Trit::One;
  }
  FaceCode a(s, std::move(d));
  internal_check(face_to_pair(a) == p, "face/pair dictionary mismatch");
  return a;
}

bool face_in_closure(const FaceCode& a, const FaceCode& b) {
  require_same_splitting(a.splitting(), b.splitting());
  for (int i = 0; i < a.g(); ++i) {
    Trit x = a.at(i), y = b.at(i);
    if (x == Trit::Star && y != Trit::Star) return false;
    if (x == Trit::Zero && y == Trit::One) return false;
    if (x == Trit::One && y == Trit::Zero) return false;
  }
  return true;
}

FaceCode face_complement(const FaceCode& a) {
  std::vector<Trit> d;
  d.reserve(a.g());
  for (int i = 0; i < a.g(); ++i) {
    Trit t = a.at(i);
    d.push_back(t == Trit::Zero ? Trit::One : t == Trit::One ? Trit::Zero : Trit::Star);
  }
  return FaceCode(a.splitting(), std::move(d));
}

std::vector<FaceCode> enumerate_faces(const SplittingPtr& s,
                                      std::uint64_t max_results) {
  int g = s->g();
  if (g > 20) throw GuardExceeded("g too large for face enumeration (max 20)");
  std::uint64_t total = 1;
  for (int i = 0; i < g; ++i) total *= 3;
  if (total > max_results)
    throw GuardExceeded("face enumeration would exceed the guard");
  std::vector<FaceCode> out;
  out.reserve(total);
  std::vector<Trit> d(g, Trit::Zero);
  for (std::uint64_t n = 0;; ++n) {
    out.emplace_back(s, d);
    if (n + 1 == total) break;
    for (int i = 0;; ++i) {  // mixed-radix increment, digit 0 least significant
      if (d[i] != Trit::One) {
        d[i] = static_cast<Trit>(static_cast<int>(d[i]) + 1);
        break;
      }
      d[i] = Trit::Zero;
    }
  }
  return out;
}

}  // namespace hmv
