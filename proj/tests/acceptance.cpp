// End-to-end acceptance gate.  Eleven exact checks, each with a hard wall
// clock cap; one PASS/FAIL line per check and a nonzero exit if any fails.
// Everything is deterministic (fixed seeds), so a failure here reproduces.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "hmv/cube.hpp"
#include "hmv/dieudonne.hpp"
#include "hmv/errors.hpp"
#include "hmv/functoriality.hpp"
#include "hmv/sampling.hpp"
#include "hmv/strata.hpp"
#include "hmv/valuation.hpp"

using namespace hmv;

namespace {

[[noreturn]] void fail(const std::string& msg) {
  throw std::runtime_error(msg);
}

void require(bool ok, const std::string& msg) {
  if (!ok) fail(msg);
}

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::string vec_str(const ValuationVector& v) {
  std::string out = "(";
  for (int i = 0; i < v.g(); ++i) {
    if (i) out += ",";
    out += format_rational(v.at(i));
  }
  return out + ")";
}

// all ordered degree vectors summing to g
void compositions(int g, std::vector<std::vector<int>>& out) {
  for (int gaps = 0; gaps < (1 << (g - 1)); ++gaps) {
    std::vector<int> parts;
    int run = 1;
    for (int i = 0; i < g - 1; ++i) {
      if (gaps & (1 << i)) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    out.push_back(std::move(parts));
  }
}

const std::vector<std::vector<int>> kShapes = {{1}, {2}, {1, 1}, {3}, {2, 1}};
const std::vector<long long> kPrimes = {2, 3, 5};

SplittingPtr single_prime(const SplittingPtr& s, int i) {
  return PrimeSplitting::make(s->p(), {s->degree(i)});
}

ValuationVector restrict_to_prime(const ValuationVector& v, int i, Role role) {
  const auto& s = v.splitting();
  std::vector<Rat> slice(v.values().begin() + s->offset(i),
                         v.values().begin() + s->offset(i) + s->degree(i));
  return {single_prime(s, i), std::move(slice), role};
}

// ---------------------------------------------------------------------------

std::string check_pair_counts() {
  long long splittings = 0, pairs = 0;
  for (int g = 1; g <= 8; ++g) {
    std::vector<std::vector<int>> comps;
    compositions(g, comps);
    for (auto& f : comps) {
      auto s = PrimeSplitting::make(2, f);
      auto all = enumerate_admissible(s);
      if (static_cast<long long>(all.size()) != ipow(3, g))
        fail("count != 3^g for " + s->to_string());
      for (const auto& pr : all) {
        if (!is_admissible(pr.phi, pr.eta))
          fail("inadmissible pair from enumeration at " + s->to_string());
        EmbSet rI = pr.I.right(), rEtaC = pr.eta.complement().right();
        if (!rEtaC.disjoint_from(rI) || pr.phi != (rEtaC | rI))
          fail("phi != r(eta^c) + r(I) at " + s->to_string());
        EmbSet lPhiC = pr.phi.complement().left();
        if (!lPhiC.disjoint_from(pr.I) || pr.eta != (lPhiC | pr.I))
          fail("eta != l(phi^c) + I at " + s->to_string());
      }
      ++splittings;
      pairs += static_cast<long long>(all.size());
    }
  }
  std::ostringstream os;
  os << splittings << " splittings g<=8, " << pairs
     << " pairs, count 3^g + both decompositions";
  return os.str();
}

std::string check_cube_bijection() {
  long long faces = 0, closure_pairs = 0;
  for (int g = 1; g <= 8; ++g) {
    std::vector<std::vector<int>> comps;
    compositions(g, comps);
    for (auto& f : comps) {
      auto s = PrimeSplitting::make(2, f);
      auto all = enumerate_faces(s);
      require(static_cast<long long>(all.size()) == ipow(3, g),
              "face count != 3^g for " + s->to_string());
      for (const auto& a : all) {
        auto pr = face_to_pair(a);
        if (pair_to_face(pr) != a)
          fail("pair_to_face(face_to_pair) != id at " + s->to_string() +
               " face " + a.to_string());
        if (stratum_dim(pr) != s->g() - a.dim())
          fail("stratum_dim != g - #stars at face " + a.to_string());
      }
      faces += static_cast<long long>(all.size());
    }
  }
  for (int g = 1; g <= 5; ++g) {
    std::vector<std::vector<int>> comps;
    compositions(g, comps);
    for (auto& f : comps) {
      auto s = PrimeSplitting::make(2, f);
      auto all = enumerate_faces(s);
      std::vector<AdmissiblePair> prs;
      prs.reserve(all.size());
      for (const auto& a : all) prs.push_back(face_to_pair(a));
      for (size_t i = 0; i < all.size(); ++i)
        for (size_t j = 0; j < all.size(); ++j) {
          if (face_in_closure(all[i], all[j]) != pair_geq(prs[j], prs[i]))
            fail("closure order vs reversed pair order mismatch at " +
                 s->to_string() + " faces " + all[i].to_string() + "," +
                 all[j].to_string());
          ++closure_pairs;
        }
    }
  }
  std::ostringstream os;
  os << faces << " faces g<=8 bijective with dim identity, " << closure_pairs
     << " closure comparisons g<=5 order-reversing";
  return os.str();
}

std::string check_w_involution() {
  Sampler sampler(0x484d5601);
  long long checked = 0;
  for (auto& f : kShapes) {
    auto s = PrimeSplitting::make(3, f);
    for (int k = 0; k < 10'000; ++k) {
      auto nu = sampler.vector(s, Role::YPoint);
      auto wnu = w_map(nu);
      require(w_map(wnu) == nu, "w o w != id at " + vec_str(nu));
      for (int b = 0; b < s->g(); ++b)
        require(nu.at(b) + wnu.at(b) == Rat(1),
                "nu + w(nu) != 1 at " + vec_str(nu));
      auto face = face_of_point(nu), wface = face_of_point(wnu);
      require(wface == face_complement(face),
              "face of w(nu) is not the complemented face at " + vec_str(nu));
      require(face_to_pair(wface) == w_stratum_image(face_to_pair(face)),
              "pair of w(nu) is not the w-image pair at " + vec_str(nu));
      ++checked;
    }
  }
  return std::to_string(checked) + " vectors: involution, sum = 1, face/pair";
}

std::string check_section_identities() {
  Sampler sampler(0x484d5604);
  long long checked = 0;
  for (long long p : kPrimes)
    for (auto& f : kShapes) {
      auto s = PrimeSplitting::make(p, f);
      for (int k = 0; k < 10'000; ++k) {
        auto x = sampler.in_U(s);
        auto back = pi_exact(section_dagger(x));
        require(back == x.with_role(Role::YPoint) || back.values() == x.values(),
                "pi o section != id at " + vec_str(x));
        require(back.values() == x.values(),
                "pi o section changed values at " + vec_str(x));
      }
      for (int k = 0; k < 10'000; ++k) {
        auto y = sampler.in_V(s);
        auto back = section_dagger(pi_exact(y));
        require(back.values() == y.values(),
                "section o pi != id at " + vec_str(y));
      }
      checked += 20'000;
    }
  return std::to_string(checked) + " samples over p in {2,3,5}, 5 shapes";
}

std::string check_hecke_dynamics() {
  Sampler sampler(0x484d5605);
  std::vector<SplittingPtr> fam;
  for (size_t i = 0; i < kShapes.size(); ++i)
    fam.push_back(PrimeSplitting::make(kPrimes[i % kPrimes.size()],
                                       kShapes[i]));
  const int n = 10'000;
  for (int k = 0; k < n; ++k) {  // lambda < 1: nu -> p * nu o sigma^{-1}
    const auto& s = fam[k % fam.size()];
    auto y = section_dagger(sampler.expanding(s));
    auto out = quotient_valuation(y);
    for (int b = 0; b < s->g(); ++b)
      require(out.at(b) == Rat(s->p()) * y.at(s->sigma(b, -1)),
              "expanding quotient != p * nu o sigma^-1 at " + vec_str(y));
  }
  for (int k = 0; k < n; ++k) {  // 1 < lambda < p: nu -> 1 - nu
    const auto& s = fam[k % fam.size()];
    long long p = s->p();
    std::vector<Rat> vals;
    for (int b = 0; b < s->g(); ++b)
      vals.push_back(sampler.rational_in(Rat(1, p + 1), Rat(p, p + 1), true,
                                         true));
    ValuationVector y(s, vals, Role::YPoint);
    auto out = quotient_valuation(y);
    for (int b = 0; b < s->g(); ++b)
      require(out.at(b) == Rat(1) - y.at(b),
              "reflecting quotient != 1 - nu at " + vec_str(y));
  }
  for (int k = 0; k < n; ++k) {  // lambda > p: p * nu(A/H) = nu(A) o sigma
    const auto& s = fam[k % fam.size()];
    long long p = s->p();
    std::vector<Rat> vals;
    for (int b = 0; b < s->g(); ++b)
      vals.push_back(sampler.rational_in(Rat(p, p + 1), Rat(1), true, false));
    ValuationVector y(s, vals, Role::YPoint);
    auto nuA = pi_exact(y);  // anti-canonical everywhere
    auto out = quotient_valuation(y);
    for (int b = 0; b < s->g(); ++b) {
      require(Rat(p) * out.at(b) == nuA.at(s->sigma(b, 1)),
              "contracting quotient != (1/p) nu(A) o sigma at " + vec_str(y));
      require(out.at(b) == Rat(1) - y.at(b),
              "contracting quotient != 1 - nu at " + vec_str(y));
    }
  }
  long long threw = 0, left = 0;
  for (int k = 0; k < n; ++k) {  // straddling lambda = 1: no clean landing
    const auto& s = fam[k % fam.size()];
    auto y = section_dagger(sampler.mixed_regime(s));
    try {
      auto out = quotient_valuation(y);
      require(!in_U(out), "mixed regime landed inside U at " + vec_str(y));
      ++left;
    } catch (const RegionError&) {
      ++threw;
    }
  }
  std::ostringstream os;
  os << n << " samples per regime; mixed: " << threw << " rejected, " << left
     << " landed outside U";
  return os.str();
}

std::string check_too_singular() {
  Sampler sampler(0x484d5606);
  std::vector<SplittingPtr> fam;
  for (size_t i = 0; i < kShapes.size(); ++i)
    fam.push_back(PrimeSplitting::make(kPrimes[(i + 1) % kPrimes.size()],
                                       kShapes[i]));
  for (int k = 0; k < 10'000; ++k) {
    const auto& s = fam[k % fam.size()];
    auto y = sampler.too_singular(s);
    bool has_ts = false;
    for (int i = 0; i < s->prime_count(); ++i)
      has_ts |= classify_at_prime(y, i) == PrimeClass::TooSingular;
    require(has_ts, "sampler produced no too-singular prime");
    auto fib = pi_fiberwise(y);
    std::vector<Rat> lo;
    for (const auto& v : fib) lo.push_back(v.lo);
    require(!in_U(ValuationVector(s, lo, Role::XPoint)),
            "lower endpoints stayed in U at " + vec_str(y));
  }
  return "10000 too-singular points: fiberwise lower endpoints leave U";
}

std::string check_iteration_tower() {
  Sampler sampler(0x484d5607);
  const std::vector<std::vector<int>> shapes = {{1}, {2}, {2, 1}};
  long long towers = 0;
  for (long long p : kPrimes)
    for (int n = 1; n <= 3; ++n)
      for (auto& f : shapes) {
        auto s = PrimeSplitting::make(p, f);
        Rat bound(1, ipow(p, n - 1));  // p^{1-n}
        for (int k = 0; k < 120; ++k) {
          auto x = sampler.tower_base(s, n);
          for (int b = 0; b < s->g(); ++b)
            require(lambda(x, b) < bound,
                    "tower base violates lambda < p^{1-n} at " + vec_str(x));
          auto chain = iterate_canonical(x, n);
          require(static_cast<int>(chain.size()) == n + 1,
                  "chain length != n+1 at " + vec_str(x));
          for (int i = 1; i <= n; ++i)
            for (int b = 0; b < s->g(); ++b)
              require(chain[i - 1].at(b) ==
                          Rat(ipow(p, i)) * x.at(s->sigma(b, -i)),
                      "step " + std::to_string(i) +
                          " != p^i nu o sigma^{-i} at " + vec_str(x));
          Rat mx(0);
          for (int b = 0; b < s->g(); ++b)
            if (x.at(b) > mx) mx = x.at(b);
          for (int i = 1; i <= n; ++i)
            require(reduction_precision(x, i, ReductionKind::Canonical) ==
                        Rat(1) - Rat(ipow(p, i - 1)) * mx,
                    "precision exponent != 1 - p^{i-1} max nu at " +
                        vec_str(x));
          ++towers;
        }
      }
  return std::to_string(towers) +
         " towers, p in {2,3,5}, n <= 3: lengths, steps, precisions";
}

std::string check_boundary() {
  for (long long p : kPrimes)
    for (auto& f : kShapes) {
      auto s = PrimeSplitting::make(p, f);
      Rat star(p, p + 1);
      for (long long d = 1; d <= 24; ++d)
        for (long long a = 0; a <= d; ++a) {
          Rat c(a, d);
          std::vector<Rat> vals(s->g(), c);
          ValuationVector x(s, vals, Role::XPoint);
          require(in_U(x) == (c < star),
                  "constant " + format_rational(c) + " misclassified for " +
                      s->to_string());
          if (c == star)
            for (int b = 0; b < s->g(); ++b)
              require(lambda(x, b) == Rat(p),
                      "lambda != p on the boundary constant for " +
                          s->to_string());
        }
    }
  return "constant vectors on 15 splittings: in U iff c < p/(p+1); lambda = p "
         "at the boundary";
}

std::string check_oracle() {
  const std::vector<std::vector<int>> shapes = {{1},    {2},    {1, 1},
                                                {3},    {2, 1}, {1, 1, 1}};
  long long tuples = 0, constructions = 0;
  for (long long p : {2LL, 3LL})
    for (auto& f : shapes)
      for (int m = 1; m <= 2; ++m) {
        auto s = PrimeSplitting::make(p, f);
        long long q = ipow(p, m);
        auto pairs = enumerate_admissible(s);
        for (std::uint64_t tb = 0; tb < (1ull << s->g()); ++tb) {
          EmbSet tau(s, tb);
          DieudonneModel model(s, tau, m);
          for (const auto& H : enumerate_stable(model)) {
            auto pr = invariants_of(model, H);  // throws if inadmissible
            auto window = type_window(pr);
            require(window.first.subset_of(tau) &&
                        tau.subset_of(window.second),
                    "type outside window at " + s->to_string() + " tau " +
                        tau.to_string());
            ++tuples;
          }
          if (tau == EmbSet::full(s)) {
            auto census = spaced_census(model);
            for (std::uint64_t sb = 0; sb < (1ull << s->g()); ++sb) {
              EmbSet S(s, sb);
              auto it = census.find(sb);
              if (is_spaced(s, S))
                require(it != census.end() &&
                            it->second == ipow(q, S.size()),
                        "spaced census != q^{#S} at " + s->to_string() +
                            " S " + S.to_string());
              else
                require(it == census.end(),
                        "non-spaced subset present at " + s->to_string());
            }
          }
          for (const auto& pr : pairs) {
            auto window = type_window(pr);
            if (!(window.first.subset_of(tau) &&
                  tau.subset_of(window.second)))
              continue;
            int free = s->g() - (pr.phi | pr.eta).size();
            long long combos = ipow(q + 1, free);
            for (long long c = 0; c < combos; ++c) {
              std::vector<uint32_t> lines;
              long long rest = c;
              for (int i = 0; i < free; ++i) {
                lines.push_back(static_cast<uint32_t>(rest % (q + 1)));
                rest /= q + 1;
              }
              auto H = prescribed_tuple(model, pr, lines);
              require(is_stable(model, H),
                      "prescribed tuple unstable at " + s->to_string() +
                          " tau " + tau.to_string());
              ++constructions;
            }
          }
        }
      }
  // censuses over a product of splittings factor through the parts
  for (long long p : {2LL, 3LL})
    for (int m = 1; m <= 2; ++m)
      for (auto& [joint, left, right, shift] :
           std::vector<std::tuple<std::vector<int>, std::vector<int>,
                                  std::vector<int>, int>>{
               {{2, 1}, {2}, {1}, 2}, {{1, 1, 1}, {1, 1}, {1}, 2}}) {
        auto sj = PrimeSplitting::make(p, joint);
        auto sl = PrimeSplitting::make(p, left);
        auto sr = PrimeSplitting::make(p, right);
        for (std::uint64_t tl = 0; tl < (1ull << sl->g()); ++tl)
          for (std::uint64_t tr = 0; tr < (1ull << sr->g()); ++tr) {
            auto cj = fibre_census(
                DieudonneModel(sj, EmbSet(sj, tl | (tr << shift)), m));
            auto cl = fibre_census(DieudonneModel(sl, EmbSet(sl, tl), m));
            auto cr = fibre_census(DieudonneModel(sr, EmbSet(sr, tr), m));
            std::map<std::pair<std::uint64_t, std::uint64_t>, long long>
                expect;
            for (const auto& [ka, va] : cl)
              for (const auto& [kb, vb] : cr)
                expect[{ka.first | (kb.first << shift),
                        ka.second | (kb.second << shift)}] = va * vb;
            require(cj == expect, "product census does not factor for p=" +
                                      std::to_string(p) + " m=" +
                                      std::to_string(m));
          }
      }
  std::ostringstream os;
  os << tuples << " stable tuples in-window, " << constructions
     << " prescribed tuples stable, censuses factor";
  return os.str();
}

std::string check_functoriality() {
  Sampler sampler(0x484d560a);
  const std::vector<std::string> exts = {
      "p=3;f=1->p=3;f=2",
      "p=3;f=1->p=3;f=1,1",
      "p=2;f=1->p=2;f=3",
      "p=2;f=2->p=2;f=2,2:cover=0,0",
      "p=5;f=2,1->p=5;f=2,2,1:cover=0,0,1",
      "p=2;f=1,1->p=2;f=2,3:cover=0,1"};
  for (const auto& text : exts) {
    auto ext = ExtensionMap::parse(text);
    require(ext.covers_all_sources(), "test covering is not surjective");
    for (int k = 0; k < 1'000; ++k) {
      auto nu = k % 3 == 0 ? sampler.in_U(ext.source())
                           : sampler.vector(ext.source(), Role::XPoint);
      require(in_U(delta(ext, nu)) == in_U(nu),
              "preimage of U differs from U at " + text + " nu " +
                  vec_str(nu));
    }
  }
  for (auto& s : {PrimeSplitting::make(3, {3}),
                  PrimeSplitting::make(2, {2, 2})}) {
    for (int k = 0; k < 500; ++k) {
      auto x = sampler.vector(s, Role::XPoint);
      auto y = k % 2 ? sampler.in_V(s) : sampler.in_W(s);
      for (long long j = 1; j <= s->g(); ++j) {
        require(in_U(galois_act(j, x)) == in_U(x),
                "galois action moved U at " + vec_str(x));
        for (int i = 0; i < s->prime_count(); ++i)
          require(classify_at_prime(galois_act(j, y), i) ==
                      classify_at_prime(y, i),
                  "galois action changed a prime class at " + vec_str(y));
        require(galois_act(j, w_map(y)) == w_map(galois_act(j, y)),
                "galois action does not commute with w at " + vec_str(y));
        require(galois_act(j, pi_exact(y)) == pi_exact(galois_act(j, y)),
                "galois action does not commute with pi at " + vec_str(y));
      }
    }
  }
  return "6 coverings x 1000 vectors: preimage of U is U; galois preserves "
         "regions, commutes with w and pi";
}

std::string check_t_restriction() {
  Sampler sampler(0x484d560b);
  const std::vector<std::pair<long long, std::vector<int>>> cfgs = {
      {2, {2, 1}}, {2, {1, 1}}, {3, {1, 1, 1}}, {3, {3, 2}}};
  for (auto& [p, f] : cfgs) {
    auto s = PrimeSplitting::make(p, f);
    for (std::uint32_t mask = 0; mask < (1u << s->prime_count()); ++mask)
      require(static_cast<long long>(enumerate_t_admissible(s, mask).size()) ==
                  ipow(3, s->degree_sum(mask)),
              "restricted count != 3^{f(t)} for " + s->to_string());
    for (int k = 0; k < 300; ++k) {
      auto x = sampler.vector(s, Role::XPoint);
      for (std::uint32_t mask = 0; mask < (1u << s->prime_count()); ++mask) {
        bool parts = true;
        for (int i = 0; i < s->prime_count(); ++i)
          if (mask & (1u << i))
            parts = parts && in_U(restrict_to_prime(x, i, Role::XPoint));
        require(in_U(x, mask) == parts,
                "U(t) differs from per-prime U at " + vec_str(x));
        bool ok_global = true;
        try {
          auto y = section_dagger(x, mask);
          require(y.values() == x.values(),
                  "restricted section changed values at " + vec_str(x));
        } catch (const RegionError&) {
          ok_global = false;
        }
        require(ok_global == parts,
                "restricted section disagrees with per-prime U at " +
                    vec_str(x));
      }
      // per-prime mixture: each prime fully canonical or fully anti-canonical
      std::vector<Rat> vals(s->g());
      for (int i = 0; i < s->prime_count(); ++i) {
        bool anti = sampler.rng()() & 1;
        for (int j = 0; j < s->degree(i); ++j)
          vals[s->index_of(i, j)] =
              anti ? sampler.rational_in(Rat(p, p + 1), Rat(1), true, false)
                   : sampler.rational_in(Rat(0), Rat(p, p + 1), false, true);
      }
      ValuationVector y(s, vals, Role::YPoint);
      for (int i = 0; i < s->prime_count(); ++i)
        require(classify_at_prime(y, i) ==
                    classify_at_prime(restrict_to_prime(y, i, Role::YPoint), 0),
                "classification differs from restriction at " + vec_str(y));
      bool global_ok = true;
      std::vector<Rat> global;
      try {
        global = quotient_valuation(y).values();
      } catch (const RegionError&) {
        global_ok = false;
      }
      bool locals_ok = true;
      std::vector<std::vector<Rat>> local(s->prime_count());
      for (int i = 0; i < s->prime_count(); ++i) {
        try {
          local[i] =
              quotient_valuation(restrict_to_prime(y, i, Role::YPoint))
                  .values();
        } catch (const RegionError&) {
          locals_ok = false;
        }
      }
      require(global_ok == locals_ok,
              "quotient rejection differs from per-prime at " + vec_str(y));
      if (global_ok)
        for (int i = 0; i < s->prime_count(); ++i)
          for (int j = 0; j < s->degree(i); ++j)
            require(global[s->index_of(i, j)] == local[i][j],
                    "quotient differs from per-prime at " + vec_str(y));
    }
  }
  return "4 splittings: counts 3^{f(t)}; classification, section, U(t) and "
         "quotient all restrict per prime";
}

struct Criterion {
  const char* label;
  double cap_seconds;
  std::function<std::string()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"admissible-pair counts", 1.0, check_pair_counts},
      {"cube dictionary", 5.0, check_cube_bijection},
      {"atkin-lehner involution", 5.0, check_w_involution},
      {"section identities", 10.0, check_section_identities},
      {"quotient dynamics", 10.0, check_hecke_dynamics},
      {"too-singular exclusion", 10.0, check_too_singular},
      {"iteration tower", 5.0, check_iteration_tower},
      {"boundary constants", 1.0, check_boundary},
      {"oracle concordance", 60.0, check_oracle},
      {"functoriality", 5.0, check_functoriality},
      {"restricted coherence", 5.0, check_t_restriction},
  };
  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = c.run();
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    if (ok && secs > c.cap_seconds) {
      ok = false;
      detail = "runtime cap exceeded";
    }
    std::printf("[%2zu] %s  %6.2fs (cap %2.0fs)  %s: %s\n", i + 1,
                ok ? "PASS" : "FAIL", secs, c.cap_seconds, c.label,
                detail.c_str());
    if (!ok) ++failures;
  }
  if (failures) std::printf("%d of 11 criteria failed\n", failures);
  return failures ? 1 : 0;
}
