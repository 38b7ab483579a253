#include "hmv/verify.hpp"

#include <algorithm>
#include <sstream>

#include "hmv/cube.hpp"
#include "hmv/dieudonne.hpp"
#include "hmv/errors.hpp"
#include "hmv/functoriality.hpp"
#include "hmv/sampling.hpp"
#include "hmv/strata.hpp"
#include "hmv/valuation.hpp"

namespace hmv {

namespace {

std::uint64_t upow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::string describe(const ValuationVector& nu) {
  std::string out = "(";
  for (int i = 0; i < nu.g(); ++i) {
    if (i) out += ",";
    out += format_rational(nu.at(i));
  }
  return out + ")";
}

class Battery {
 public:
  Battery(std::string suite, std::vector<VerifyItem>& sink)
      : suite_(std::move(suite)), sink_(sink) {}

  // records the first failing witness per check name
  void check(const std::string& name, bool ok, const std::string& witness) {
    for (auto& item : sink_)
      if (item.suite == suite_ && item.check == name) {
        if (item.ok && !ok) {
          item.ok = false;
          item.witness = witness;
        }
        return;
      }
    sink_.push_back({suite_, name, ok, ok ? "" : witness});
  }

 private:
  std::string suite_;
  std::vector<VerifyItem>& sink_;
};

void strata_suite(const VerifyOptions& opts, std::vector<VerifyItem>& sink) {
  Battery b("strata", sink);
  const auto& s = opts.splitting;
  if (s->g() > 12) {
    b.check("count", false, "suite needs g <= 12, got " + s->to_string());
    return;
  }
  auto pairs = enumerate_admissible(s);
  b.check("count", pairs.size() == upow(3, s->g()),
          "got " + std::to_string(pairs.size()) + " pairs for " +
              s->to_string());

  int horizontal = 0;
  for (const auto& pr : pairs) {
    // defining inclusion and the two decompositions
    bool adm = is_admissible(pr.phi, pr.eta);
    EmbSet rI = pr.I.right();
    EmbSet phi_parts = pr.eta.complement().right() | rI;
    bool phi_ok = rI.disjoint_from(pr.eta.complement().right()) &&
                  phi_parts == pr.phi;
    EmbSet eta_parts = pr.phi.complement().left() | pr.I;
    bool eta_ok =
        pr.I.disjoint_from(pr.phi.complement().left()) && eta_parts == pr.eta;
    b.check("decomposition", adm && phi_ok && eta_ok,
            "pair " + pr.phi.to_string() + ", " + pr.eta.to_string());
    int dim = stratum_dim(pr);
    b.check("dimension",
            dim == 2 * s->g() - pr.phi.size() - pr.eta.size() &&
                pr.phi.size() + pr.eta.size() == s->g() + pr.I.size(),
            "pair " + pr.phi.to_string() + ", " + pr.eta.to_string());
    auto w = w_stratum_image(w_stratum_image(pr));
    b.check("w involution", w == pr,
            "pair " + pr.phi.to_string() + ", " + pr.eta.to_string());
    if (is_horizontal(pr)) ++horizontal;
  }
  b.check("horizontal count",
          horizontal == static_cast<int>(upow(2, s->prime_count())),
          "got " + std::to_string(horizontal));

  // closure laws on a slice of the lattice
  size_t step = std::max<size_t>(1, pairs.size() / 64);
  for (size_t i = 0; i < pairs.size(); i += step) {
    const auto& pr = pairs[i];
    auto closure = closure_pairs_at(pr);
    bool sized = closure.size() == upow(3, pr.I.size());
    bool ordered = std::all_of(
        closure.begin(), closure.end(),
        [&](const AdmissiblePair& c) { return pair_geq(pr, c); });
    b.check("closure", sized && ordered,
            "pair " + pr.phi.to_string() + ", " + pr.eta.to_string());
  }

  // restricted count per ideal
  for (std::uint32_t mask = 0; mask < (1u << s->prime_count()); ++mask) {
    auto restricted = enumerate_t_admissible(s, mask);
    b.check("restricted count",
            restricted.size() == upow(3, s->degree_sum(mask)),
            "prime mask " + std::to_string(mask));
  }
}

void cube_suite(const VerifyOptions& opts, std::vector<VerifyItem>& sink) {
  Battery b("cube", sink);
  const auto& s = opts.splitting;
  if (s->g() > 12) {
    b.check("bijection", false, "suite needs g <= 12, got " + s->to_string());
    return;
  }
  auto faces = enumerate_faces(s);
  for (const auto& face : faces) {
    auto pr = face_to_pair(face);
    b.check("bijection", pair_to_face(pr) == face, "face " + face.to_string());
    b.check("dimension", stratum_dim(pr) == s->g() - face.dim(),
            "face " + face.to_string());
    auto comp = face_complement(face);
    b.check("complement is w", face_to_pair(comp) == w_stratum_image(pr),
            "face " + face.to_string());
  }
  // order reversal on a slice of face pairs
  size_t step = std::max<size_t>(1, faces.size() / 48);
  for (size_t i = 0; i < faces.size(); i += step)
    for (size_t j = 0; j < faces.size(); j += step) {
      bool closure = face_in_closure(faces[i], faces[j]);
      bool geq = pair_geq(face_to_pair(faces[j]), face_to_pair(faces[i]));
      b.check("order reversal", closure == geq,
              faces[i].to_string() + " vs " + faces[j].to_string());
    }
}

void dynamics_suite(const VerifyOptions& opts,
                    std::vector<VerifyItem>& sink) {
  Battery b("dynamics", sink);
  const auto& s = opts.splitting;
  long long p = s->p();
  Sampler smp(opts.seed);
  Rat threshold = opts.corrupt_lambda_threshold.value_or(Rat(p));

  // classification probes: random vectors plus constants aimed at the
  // threshold, so a corrupted threshold is caught deterministically
  std::vector<ValuationVector> probes;
  for (int k = 0; k < opts.samples; ++k)
    probes.push_back(smp.vector(s, Role::YPoint));
  auto constant = [&](const Rat& c) {
    std::vector<Rat> v(static_cast<size_t>(s->g()), c);
    probes.emplace_back(s, std::move(v), Role::YPoint);
  };
  constant(Rat(0));
  if (threshold > Rat(0) && threshold < Rat(1 + p))
    constant(threshold / Rat(1 + p));
  if (threshold > Rat(p)) {
    Rat mid = (Rat(p) + std::min(threshold, Rat(p + 1))) / Rat(2);
    constant(mid / Rat(1 + p));
  }
  for (const auto& y : probes) {
    for (int i = 0; i < s->prime_count(); ++i) {
      bool canonical = classify_at_prime(y, i) == PrimeClass::Canonical;
      bool below = true;
      for (int j = 0; j < s->degree(i); ++j)
        below = below && lambda(y, s->index_of(i, j)) < threshold;
      b.check("classification threshold", canonical == below,
              "nu=" + describe(y) + " at prime " + std::to_string(i));
    }
    // involution and reflection-sum identities
    b.check("w involution", w_map(w_map(y)) == y, "nu=" + describe(y));
    bool sums = true;
    for (int i = 0; i < s->g(); ++i)
      sums = sums && y.at(i) + w_map(y).at(i) == Rat(1);
    b.check("w sum", sums, "nu=" + describe(y));
    b.check("w face",
            face_of_vector(s, w_map(y).values()) ==
                face_complement(face_of_vector(s, y.values())),
            "nu=" + describe(y));
  }

  for (int k = 0; k < opts.samples; ++k) {
    auto x = smp.in_U(s);
    b.check("section round trip", pi_exact(section_dagger(x)) == x,
            "nu=" + describe(x));
    auto y = smp.in_V(s);
    b.check("section after projection", section_dagger(pi_exact(y)) == y,
            "nu=" + describe(y));
    // quotient regimes
    auto e = smp.expanding(s);
    auto out = quotient_valuation(section_dagger(e));
    bool law = true;
    for (int i = 0; i < s->g(); ++i)
      law = law && out.at(i) == Rat(p) * e.at(s->sigma(i, -1));
    b.check("expanding law", law, "nu=" + describe(e));
    auto r = smp.reflecting(s);
    auto out2 = quotient_valuation(section_dagger(r));
    law = true;
    for (int i = 0; i < s->g(); ++i)
      law = law && out2.at(i) == Rat(1) - r.at(i);
    b.check("reflecting law", law, "nu=" + describe(r));
    auto m = smp.mixed_regime(s);
    bool threw = false;
    try {
      quotient_valuation(section_dagger(m));
    } catch (const RegionError&) {
      threw = true;
    }
    b.check("mixed regime rejected", threw, "nu=" + describe(m));
    // projection intervals on the too-singular locus undercut the region
    auto ts = smp.too_singular(s);
    auto fib = pi_fiberwise(ts);
    std::vector<Rat> lo;
    for (int i = 0; i < s->g(); ++i) lo.push_back(fib[i].lo);
    b.check("too-singular exclusion",
            !in_U(ValuationVector(s, lo, Role::XPoint)),
            "nu=" + describe(ts));
  }

  // boundary constant
  std::vector<Rat> c(static_cast<size_t>(s->g()), Rat(p, p + 1));
  ValuationVector boundary(s, c, Role::XPoint);
  bool all_p = true;
  for (int i = 0; i < s->g(); ++i)
    all_p = all_p && lambda(boundary, i) == Rat(p);
  b.check("boundary constant", !in_U(boundary) && all_p,
          "c=" + format_rational(Rat(p, p + 1)));

  // short towers
  for (int n = 1; n <= 2; ++n)
    for (int k = 0; k < std::max(1, opts.samples / 10); ++k) {
      auto x = smp.tower_base(s, n);
      auto chain = iterate_canonical(x, n);
      bool ok = chain.size() == static_cast<size_t>(n + 1);
      Rat pi_pow(1);
      for (int i = 1; i <= n && ok; ++i) {
        pi_pow *= p;
        for (int j = 0; j < s->g(); ++j)
          ok = ok && chain[i - 1].at(j) == pi_pow * x.at(s->sigma(j, -i));
      }
      b.check("tower expansion", ok, "nu=" + describe(x));
    }
}

void oracle_suite(const VerifyOptions& opts, std::vector<VerifyItem>& sink) {
  Battery b("oracle", sink);
  for (long long p : {2, 3})
    for (auto degrees : std::vector<std::vector<int>>{{1}, {2}, {1, 1}})
      for (int m : {1, 2}) {
        auto s = PrimeSplitting::make(p, degrees);
        std::string tag = s->to_string() + " q=" +
                          std::to_string(upow(p, m));
        for (std::uint64_t tau = 0; tau < (1ull << s->g()); ++tau) {
          DieudonneModel model(s, EmbSet(s, tau), m);
          std::vector<LineTuple> tuples;
          try {
            tuples = enumerate_stable(model, opts.oracle_guard);
          } catch (const GuardExceeded& e) {
            b.check("window", false, tag + ": " + e.what());
            continue;
          }
          for (const auto& H : tuples) {
            bool ok = true;
            std::string witness;
            try {
              auto pr = invariants_of(model, H);
              EmbSet meet = pr.phi & pr.eta;
              EmbSet sym = (pr.phi | pr.eta) - meet;
              ok = meet.subset_of(model.tau()) &&
                   model.tau().disjoint_from(sym);
              witness = tag + " pair " + pr.phi.to_string() + ", " +
                        pr.eta.to_string();
            } catch (const std::exception& e) {
              ok = false;
              witness = tag + ": " + e.what();
            }
            b.check("window", ok, witness);
          }
        }
        // superspecial law
        DieudonneModel ss(s, EmbSet::full(s), m);
        auto census = spaced_census(ss, opts.oracle_guard);
        for (const auto& [bits, count] : census) {
          EmbSet S(s, bits);
          b.check("spaced law",
                  is_spaced(s, S) &&
                      count == static_cast<long long>(
                                   upow(ss.q(), S.size())),
                  tag + " S=" + S.to_string());
        }
        // free choice on the extreme types of every pair
        for (const auto& pr : enumerate_admissible(s)) {
          EmbSet meet = pr.phi & pr.eta;
          EmbSet wmax = ((pr.phi | pr.eta) - meet).complement();
          for (EmbSet tau : {meet, wmax}) {
            DieudonneModel model(s, tau, m);
            int free = s->g() - (pr.phi | pr.eta).size();
            std::vector<uint32_t> choice(static_cast<size_t>(free), 0);
            while (true) {
              b.check("free choice",
                      is_stable(model, prescribed_tuple(model, pr, choice)),
                      tag + " pair " + pr.phi.to_string() + ", " +
                          pr.eta.to_string());
              int k = free - 1;
              while (k >= 0 && choice[k] == model.q()) choice[k--] = 0;
              if (k < 0) break;
              ++choice[k];
            }
          }
        }
      }

  // product law over a split-shape example
  for (long long p : {2, 3}) {
    auto joint = PrimeSplitting::make(p, {2, 1});
    auto left = PrimeSplitting::make(p, {2});
    auto right = PrimeSplitting::make(p, {1});
    for (std::uint64_t tau = 0; tau < 8; ++tau) {
      auto cj = fibre_census(DieudonneModel(joint, EmbSet(joint, tau), 1),
                             opts.oracle_guard);
      auto cl = fibre_census(DieudonneModel(left, EmbSet(left, tau & 3), 1),
                             opts.oracle_guard);
      auto cr = fibre_census(
          DieudonneModel(right, EmbSet(right, (tau >> 2) & 1), 1),
          opts.oracle_guard);
      std::map<std::pair<std::uint64_t, std::uint64_t>, long long> prod;
      for (const auto& [kl, vl] : cl)
        for (const auto& [kr, vr] : cr)
          prod[{kl.first | (kr.first << 2), kl.second | (kr.second << 2)}] =
              vl * vr;
      b.check("product law", cj == prod,
              "p=" + std::to_string(p) + " tau bits " + std::to_string(tau));
    }
  }
}

void funct_suite(const VerifyOptions& opts, std::vector<VerifyItem>& sink) {
  Battery b("funct", sink);
  static const std::vector<std::string> exts = {
      "p=2;f=1->p=2;f=2",
      "p=3;f=1->p=3;f=1,1",
      "p=2;f=1->p=2;f=3",
      "p=2;f=2->p=2;f=2,2:cover=0,0",
      "p=3;f=2,1->p=3;f=2,2,1:cover=0,0,1",
      "p=2;f=1,1->p=2;f=2,3:cover=0,1",
  };
  Sampler smp(opts.seed + 1);
  for (const auto& text : exts) {
    auto e = ExtensionMap::parse(text);
    for (int k = 0; k < std::max(1, opts.samples / 5); ++k) {
      auto nu = smp.vector(e.source(), Role::XPoint);
      b.check("region preimage", in_U(nu) == in_U(delta(e, nu)),
              text + " nu=" + describe(nu));
      auto y = nu.with_role(Role::YPoint);
      b.check("w commutes", delta(e, w_map(y)) == w_map(delta(e, y)),
              text + " nu=" + describe(nu));
    }
  }
  auto s = opts.splitting;
  for (int k = 0; k < std::max(1, opts.samples / 5); ++k) {
    auto v = smp.vector(s, Role::YPoint);
    b.check("galois group law",
            galois_act(2, galois_act(1, v)) == galois_act(3, v) &&
                galois_act(-1, galois_act(1, v)) == v,
            "nu=" + describe(v));
    auto x = v.with_role(Role::XPoint);
    b.check("galois preserves regions", in_U(x) == in_U(galois_act(1, x)),
            "nu=" + describe(v));
    b.check("galois commutes with w",
            galois_act(1, w_map(v)) == w_map(galois_act(1, v)),
            "nu=" + describe(v));
  }
}

}  // namespace

bool VerifyReport::all_ok() const {
  return std::all_of(items.begin(), items.end(),
                     [](const VerifyItem& i) { return i.ok; });
}

std::vector<std::string> verify_suite_names() {
  return {"strata", "cube", "dynamics", "oracle", "funct"};
}

VerifyReport run_verify(const VerifyOptions& opts_in,
                        const std::string& suite) {
  VerifyOptions opts = opts_in;
  if (!opts.splitting) opts.splitting = PrimeSplitting::make(2, {2});
  if (opts.samples < 1) opts.samples = 1;
  VerifyReport report;
  auto want = [&](const std::string& name) {
    return suite.empty() || suite == "all" || suite == name;
  };
  bool any = false;
  if (want("strata")) strata_suite(opts, report.items), any = true;
  if (want("cube")) cube_suite(opts, report.items), any = true;
  if (want("dynamics")) dynamics_suite(opts, report.items), any = true;
  if (want("oracle")) oracle_suite(opts, report.items), any = true;
  if (want("funct")) funct_suite(opts, report.items), any = true;
  if (!any) throw std::invalid_argument("unknown suite: " + suite);
  return report;
}

}  // namespace hmv
