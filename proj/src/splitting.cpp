#include "hmv/splitting.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "hmv/rational.hpp"

namespace hmv {

namespace {

long long parse_ll(std::string_view s, const char* what) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument(std::string("bad ") + what + ": '" +
                                std::string(s) + "'");
  return v;
}

bool is_prime_ll(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

Rat parse_rational(std::string_view s) {
  constexpr long long kGuard = 1000000000LL;
  auto slash = s.find('/');
  long long num, den = 1;
  if (slash == std::string_view::npos) {
    num = parse_ll(s, "rational");
  } else {
    num = parse_ll(s.substr(0, slash), "rational numerator");
    den = parse_ll(s.substr(slash + 1), "rational denominator");
  }
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (num > kGuard || num < -kGuard || den > kGuard || den < -kGuard)
    throw std::invalid_argument("rational out of supported range");
  return Rat(num, den);
}

std::string format_rational(const Rat& r) {
  std::string out = std::to_string(r.numerator());
  if (r.denominator() != 1) {
    out += '/';
    out += std::to_string(r.denominator());
  }
  return out;
}

PrimeSplitting::PrimeSplitting(long long p, std::vector<int> degrees)
    : p_(p), degrees_(std::move(degrees)) {
  offsets_.reserve(degrees_.size());
  int acc = 0;
  for (int f : degrees_) {
    offsets_.push_back(acc);
    acc += f;
  }
  g_ = acc;
}

SplittingPtr PrimeSplitting::make(long long p, std::vector<int> degrees) {
  if (!is_prime_ll(p)) throw std::invalid_argument("p must be prime");
  if (degrees.empty()) throw std::invalid_argument("need at least one prime above p");
  long long g = 0;
  for (int f : degrees) {
    if (f < 1) throw std::invalid_argument("residue degrees must be >= 1");
    g += f;
  }
  if (g > 64) throw std::invalid_argument("total degree exceeds 64");
  if (degrees.size() > 32)
    throw std::invalid_argument("more than 32 primes above p unsupported");
  return SplittingPtr(new PrimeSplitting(p, std::move(degrees)));
}

SplittingPtr PrimeSplitting::parse(std::string_view text) {
  // "p=3;f=2,1" with ';' or ':' separating the two fields.
  auto sep = text.find_first_of(";:");
  if (sep == std::string_view::npos)
    throw std::invalid_argument("splitting must look like p=<prime>;f=<d1>,<d2>,...");
  auto pf = text.substr(0, sep);
  auto ff = text.substr(sep + 1);
  if (pf.substr(0, 2) != "p=" || ff.substr(0, 2) != "f=")
    throw std::invalid_argument("splitting must look like p=<prime>;f=<d1>,<d2>,...");
  long long p = parse_ll(pf.substr(2), "prime");
  std::vector<int> degrees;
  std::string_view rest = ff.substr(2);
  while (!rest.empty()) {
    auto comma = rest.find(',');
    auto tok = rest.substr(0, comma);
    degrees.push_back(static_cast<int>(parse_ll(tok, "residue degree")));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  if (degrees.empty()) throw std::invalid_argument("empty residue degree list");
  return make(p, std::move(degrees));
}

int PrimeSplitting::index_of(int prime, long long slot) const {
  if (prime < 0 || prime >= prime_count())
    throw std::invalid_argument("prime index out of range");
  int f = degrees_[prime];
  long long j = ((slot % f) + f) % f;
  return offsets_[prime] + static_cast<int>(j);
}

std::pair<int, int> PrimeSplitting::address(int index) const {
  if (index < 0 || index >= g_) throw std::invalid_argument("embedding index out of range");
  int prime = 0;
  while (prime + 1 < prime_count() && offsets_[prime + 1] <= index) ++prime;
  return {prime, index - offsets_[prime]};
}

int PrimeSplitting::sigma(int index, long long k) const {
  auto [prime, slot] = address(index);
  return index_of(prime, slot + k);
}

std::uint64_t PrimeSplitting::orbit_bits(std::uint32_t prime_mask) const {
  std::uint64_t bits = 0;
  for (int i = 0; i < prime_count(); ++i) {
    if (!((prime_mask >> i) & 1)) continue;
    int f = degrees_[i];
    std::uint64_t block = (f == 64) ? ~0ull : ((1ull << f) - 1ull);
    bits |= block << offsets_[i];
  }
  return bits;
}

int PrimeSplitting::degree_sum(std::uint32_t prime_mask) const {
  int acc = 0;
  for (int i = 0; i < prime_count(); ++i)
    if ((prime_mask >> i) & 1) acc += degrees_[i];
  return acc;
}

std::string PrimeSplitting::to_string() const {
  std::ostringstream os;
  os << "p=" << p_ << ";f=";
  for (size_t i = 0; i < degrees_.size(); ++i) {
    if (i) os << ',';
    os << degrees_[i];
  }
  return os.str();
}

void require_same_splitting(const SplittingPtr& a, const SplittingPtr& b) {
  if (!a || !b) throw std::invalid_argument("unbound embedding set");
  if (a.get() == b.get()) return;
  if (!(*a == *b)) throw std::invalid_argument("mixed prime splittings");
}

EmbSet::EmbSet(SplittingPtr s, std::uint64_t bits) : s_(std::move(s)), bits_(bits) {
  if (!s_) throw std::invalid_argument("null splitting");
  if (bits_ & ~s_->all_bits())
    throw std::invalid_argument("bits outside the embedding set");
}

EmbSet EmbSet::full(SplittingPtr s) {
  std::uint64_t bits = s->all_bits();
  return EmbSet(std::move(s), bits);
}

EmbSet EmbSet::of(SplittingPtr s, const std::vector<std::pair<int, int>>& elems) {
  std::uint64_t bits = 0;
  for (auto [prime, slot] : elems) {
    int f = s->degree(prime);
    if (slot < 0 || slot >= f) throw std::invalid_argument("slot out of range");
    bits |= 1ull << s->index_of(prime, slot);
  }
  return EmbSet(std::move(s), bits);
}

int EmbSet::size() const { return std::popcount(bits_); }

EmbSet EmbSet::shift(long long k) const {
  // Rotate each orbit independently.
  std::uint64_t out = 0;
  for (int i = 0; i < s_->prime_count(); ++i) {
    int f = s_->degree(i);
    int o = s_->offset(i);
    std::uint64_t block = ((f == 64) ? ~0ull : ((1ull << f) - 1ull));
    std::uint64_t piece = (bits_ >> o) & block;
    int kk = static_cast<int>(((k % f) + f) % f);
    if (kk) piece = ((piece << kk) | (piece >> (f - kk))) & block;
    out |= piece << o;
  }
  return EmbSet(s_, out);
}

EmbSet EmbSet::complement() const { return EmbSet(s_, bits_ ^ s_->all_bits()); }

EmbSet EmbSet::operator|(const EmbSet& o) const {
  require_same_splitting(s_, o.s_);
  return EmbSet(s_, bits_ | o.bits_);
}
EmbSet EmbSet::operator&(const EmbSet& o) const {
  require_same_splitting(s_, o.s_);
  return EmbSet(s_, bits_ & o.bits_);
}
EmbSet EmbSet::operator-(const EmbSet& o) const {
  require_same_splitting(s_, o.s_);
  return EmbSet(s_, bits_ & ~o.bits_);
}
bool EmbSet::operator==(const EmbSet& o) const {
  require_same_splitting(s_, o.s_);
  return bits_ == o.bits_;
}
bool EmbSet::subset_of(const EmbSet& o) const {
  require_same_splitting(s_, o.s_);
  return (bits_ & ~o.bits_) == 0;
}
bool EmbSet::disjoint_from(const EmbSet& o) const {
  require_same_splitting(s_, o.s_);
  return (bits_ & o.bits_) == 0;
}

std::vector<std::pair<int, int>> EmbSet::elements() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < s_->g(); ++i)
    if (contains(i)) out.push_back(s_->address(i));
  return out;
}

std::string EmbSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (auto [prime, slot] : elements()) {
    if (!first) os << ',';
    first = false;
    os << '(' << prime << ',' << slot << ')';
  }
  os << '}';
  return os.str();
}

EmbSet ideal_block(const SplittingPtr& s, std::uint32_t prime_mask) {
  if (prime_mask & ~s->all_primes())
    throw std::invalid_argument("prime mask selects a nonexistent prime");
  return EmbSet(s, s->orbit_bits(prime_mask));
}

std::uint64_t deposit_bits(std::uint64_t compact, std::uint64_t mask) {
  std::uint64_t out = 0;
  while (mask) {
    std::uint64_t low = mask & (~mask + 1);
    if (compact & 1) out |= low;
    compact >>= 1;
    mask ^= low;
  }
  return out;
}

}  // namespace hmv
