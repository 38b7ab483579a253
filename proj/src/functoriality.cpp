#include "hmv/functoriality.hpp"

#include <algorithm>
#include <stdexcept>

namespace hmv {

ExtensionMap::ExtensionMap(SplittingPtr src, SplittingPtr dst,
                           std::vector<int> cover)
    : src_(std::move(src)), dst_(std::move(dst)), cover_(std::move(cover)) {
  if (!src_ || !dst_) throw std::invalid_argument("null splitting");
  if (src_->p() != dst_->p())
    throw std::invalid_argument("extension must keep the same prime p");
  if (cover_.size() != static_cast<size_t>(dst_->prime_count()))
    throw std::invalid_argument("cover must assign every target prime");
  for (int j = 0; j < dst_->prime_count(); ++j) {
    int i = cover_[j];
    if (i < 0 || i >= src_->prime_count())
      throw std::invalid_argument("cover index out of range: " +
                                  std::to_string(i));
    if (dst_->degree(j) % src_->degree(i) != 0)
      throw std::invalid_argument(
          "residue degree " + std::to_string(src_->degree(i)) +
          " does not divide " + std::to_string(dst_->degree(j)) +
          " (only unramified shapes are representable)");
  }
}

ExtensionMap ExtensionMap::parse(std::string_view text) {
  auto arrow = text.find("->");
  if (arrow == std::string_view::npos)
    throw std::invalid_argument("extension must look like <src>-><dst>");
  auto src = PrimeSplitting::parse(text.substr(0, arrow));
  std::string_view rest = text.substr(arrow + 2);
  std::vector<int> cover;
  auto mark = rest.rfind(":cover=");
  std::string_view dst_text = rest;
  if (mark != std::string_view::npos) {
    dst_text = rest.substr(0, mark);
    std::string list(rest.substr(mark + 7));
    size_t pos = 0;
    while (pos <= list.size()) {
      auto comma = list.find(',', pos);
      std::string item = list.substr(
          pos, comma == std::string::npos ? std::string::npos : comma - pos);
      try {
        size_t used = 0;
        cover.push_back(std::stoi(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad cover entry: '" + item + "'");
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  auto dst = PrimeSplitting::parse(dst_text);
  if (cover.empty() && mark == std::string_view::npos) {
    if (src->prime_count() != 1)
      throw std::invalid_argument(
          "cover=... is required when the source has several primes");
    cover.assign(static_cast<size_t>(dst->prime_count()), 0);
  }
  return {std::move(src), std::move(dst), std::move(cover)};
}

int ExtensionMap::restrict_index(int dst_index) const {
  auto [j, s] = dst_->address(dst_index);
  return src_->index_of(cover_[j], s);
}

bool ExtensionMap::covers_all_sources() const {
  std::vector<bool> hit(static_cast<size_t>(src_->prime_count()), false);
  for (int i : cover_) hit[i] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

std::string ExtensionMap::to_string() const {
  std::string out = src_->to_string() + "->" + dst_->to_string() + ":cover=";
  for (size_t j = 0; j < cover_.size(); ++j) {
    if (j) out += ',';
    out += std::to_string(cover_[j]);
  }
  return out;
}

EmbSet induce_set(const ExtensionMap& ext, const EmbSet& S) {
  require_same_splitting(ext.source(), S.splitting());
  std::uint64_t bits = 0;
  for (int b = 0; b < ext.target()->g(); ++b)
    if (S.contains(ext.restrict_index(b))) bits |= 1ull << b;
  return {ext.target(), bits};
}

ValuationVector delta(const ExtensionMap& ext, const ValuationVector& nu) {
  require_same_splitting(ext.source(), nu.splitting());
  std::vector<Rat> vals;
  vals.reserve(static_cast<size_t>(ext.target()->g()));
  for (int b = 0; b < ext.target()->g(); ++b)
    vals.push_back(nu.at(ext.restrict_index(b)));
  return {ext.target(), std::move(vals), nu.role()};
}

AdmissiblePair induce_pair(const ExtensionMap& ext, const AdmissiblePair& pr) {
  return {induce_set(ext, pr.phi), induce_set(ext, pr.eta)};
}

EmbSet galois_act(long long k, const EmbSet& S) { return S.shift(k); }

ValuationVector galois_act(long long k, const ValuationVector& nu) {
  const auto& s = nu.splitting();
  std::vector<Rat> vals;
  vals.reserve(static_cast<size_t>(s->g()));
  for (int b = 0; b < s->g(); ++b) vals.push_back(nu.at(s->sigma(b, -k)));
  return {s, std::move(vals), nu.role()};
}

AdmissiblePair galois_act(long long k, const AdmissiblePair& pr) {
  return {pr.phi.shift(k), pr.eta.shift(k)};
}

FaceCode galois_act(long long k, const FaceCode& face) {
  const auto& s = face.splitting();
  std::vector<Trit> digits;
  digits.reserve(static_cast<size_t>(s->g()));
  for (int b = 0; b < s->g(); ++b) digits.push_back(face.at(s->sigma(b, -k)));
  return {s, std::move(digits)};
}

}  // namespace hmv
