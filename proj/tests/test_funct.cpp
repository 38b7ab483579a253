#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hmv/errors.hpp"
#include "hmv/functoriality.hpp"
#include "hmv/sampling.hpp"

using namespace hmv;

namespace {

const std::vector<std::string> kExtensions = {
    "p=3;f=1->p=3;f=2",
    "p=3;f=1->p=3;f=1,1",
    "p=2;f=1->p=2;f=3",
    "p=2;f=2->p=2;f=2,2:cover=0,0",
    "p=5;f=2,1->p=5;f=2,2,1:cover=0,0,1",
    "p=2;f=1,1->p=2;f=2,3:cover=0,1",
};

ValuationVector vec(const SplittingPtr& s, std::vector<Rat> v,
                    Role r = Role::YPoint) {
  return {s, std::move(v), r};
}

}  // namespace

TEST_CASE("extension construction") {
  auto ext = ExtensionMap::parse("p=3;f=1->p=3;f=2");
  CHECK(ext.source()->g() == 1);
  CHECK(ext.target()->g() == 2);
  CHECK(ext.cover() == std::vector<int>{0});
  CHECK(ext.covers_all_sources());
  CHECK(ext.to_string() == "p=3;f=1->p=3;f=2:cover=0");
  CHECK(ExtensionMap::parse(ext.to_string()).to_string() == ext.to_string());

  // divisibility, prime, cover shape and parse failures
  CHECK_THROWS_AS(ExtensionMap::parse("p=2;f=2->p=2;f=3"),
                  std::invalid_argument);
  CHECK_THROWS_AS(ExtensionMap::parse("p=2;f=1->p=3;f=1"),
                  std::invalid_argument);
  CHECK_THROWS_AS(ExtensionMap::parse("p=2;f=1,1->p=2;f=2,2"),
                  std::invalid_argument);  // cover required
  CHECK_THROWS_AS(ExtensionMap::parse("p=2;f=1->p=2;f=1:cover=1"),
                  std::invalid_argument);  // cover index out of range
  CHECK_THROWS_AS(ExtensionMap::parse("p=2;f=1->p=2;f=1,1:cover=0"),
                  std::invalid_argument);  // cover size mismatch
  CHECK_THROWS_AS(ExtensionMap::parse("p=2;f=1=>p=2;f=1"),
                  std::invalid_argument);
  CHECK_THROWS_AS(ExtensionMap::parse("p=2;f=1->p=2;f=1:cover=x"),
                  std::invalid_argument);

  // orphan source primes are allowed but flagged
  auto orphan = ExtensionMap::parse("p=2;f=1,1->p=2;f=2:cover=0");
  CHECK_FALSE(orphan.covers_all_sources());
}

TEST_CASE("restriction commutes with the shifts") {
  for (const auto& text : kExtensions) {
    auto ext = ExtensionMap::parse(text);
    auto src = ext.source();
    auto dst = ext.target();
    for (int b = 0; b < dst->g(); ++b) {
      CHECK(ext.restrict_index(dst->sigma(b)) ==
            src->sigma(ext.restrict_index(b)));
      CHECK(ext.restrict_index(dst->sigma(b, -1)) ==
            src->sigma(ext.restrict_index(b), -1));
    }
    // induce commutes with shift on every subset of the source
    for (uint64_t bits = 0; bits < (1ull << src->g()); ++bits) {
      EmbSet S(src, bits);
      CHECK(induce_set(ext, S.shift(1)) == induce_set(ext, S).shift(1));
      CHECK(induce_set(ext, S.shift(-1)) == induce_set(ext, S).shift(-1));
      CHECK(induce_set(ext, S.complement()) ==
            induce_set(ext, S).complement());
    }
  }
}

TEST_CASE("induced sets and pairs") {
  auto ext = ExtensionMap::parse("p=3;f=1->p=3;f=2");
  CHECK(induce_set(ext, EmbSet::empty(ext.source())).empty_set());
  CHECK(induce_set(ext, EmbSet::full(ext.source())) ==
        EmbSet::full(ext.target()));

  for (const auto& text : kExtensions) {
    auto e = ExtensionMap::parse(text);
    for (const auto& pr : enumerate_admissible(e.source())) {
      auto lifted = induce_pair(e, pr);  // ctor revalidates admissibility
      CHECK(lifted.phi == induce_set(e, pr.phi));
      CHECK(lifted.eta == induce_set(e, pr.eta));
      CHECK(lifted.I == induce_set(e, pr.I));
    }
  }
}

TEST_CASE("coordinate pullback") {
  auto ext = ExtensionMap::parse("p=3;f=1->p=3;f=2");
  auto z = delta(ext, vec(ext.source(), {Rat(0)}));
  CHECK(z.at(0) == Rat(0));
  CHECK(z.at(1) == Rat(0));
  auto a = delta(ext, vec(ext.source(), {Rat(2, 5)}));
  CHECK(a.at(0) == Rat(2, 5));
  CHECK(a.at(1) == Rat(2, 5));
  CHECK(a.role() == Role::YPoint);

  // frozen region check: 2/5 < p/(p+1) = 3/4 on both sides
  auto x = vec(ext.source(), {Rat(2, 5)}, Role::XPoint);
  CHECK(in_U(x));
  CHECK(in_U(delta(ext, x)));

  Sampler smp(23);
  for (const auto& text : kExtensions) {
    auto e = ExtensionMap::parse(text);
    for (int k = 0; k < 300; ++k) {
      auto nu = smp.vector(e.source(), Role::XPoint);
      auto up = delta(e, nu);
      // region preimage identity
      CHECK(in_U(nu) == in_U(up));
      // w commutation
      auto y = nu.with_role(Role::YPoint);
      CHECK(delta(e, w_map(y)) == w_map(delta(e, y)));
      // face commutation via induced pairs
      auto fa = face_of_vector(e.source(), nu.values());
      auto fb = face_of_vector(e.target(), up.values());
      CHECK(face_to_pair(fb) == induce_pair(e, face_to_pair(fa)));
      // classification transfers prime by prime
      for (int j = 0; j < e.target()->prime_count(); ++j) {
        int i = e.cover()[j];
        CHECK(classify_at_prime(up.with_role(Role::YPoint), j) ==
              classify_at_prime(y, i));
      }
    }
    // section commutes with the pullback on canonical-region samples
    for (int k = 0; k < 100; ++k) {
      auto nu = smp.in_U(e.source());
      CHECK(delta(e, section_dagger(nu)) == section_dagger(delta(e, nu)));
    }
  }
}

TEST_CASE("galois action") {
  auto s = PrimeSplitting::make(2, {2});
  EmbSet S(s, 0b01);
  CHECK(galois_act(0, S) == S);
  CHECK(galois_act(1, S) == EmbSet(s, 0b10));

  auto nu = vec(s, {Rat(1, 3), Rat(1, 2)});
  CHECK(galois_act(0, nu) == nu);
  auto swapped = galois_act(1, nu);
  CHECK(swapped.at(0) == Rat(1, 2));
  CHECK(swapped.at(1) == Rat(1, 3));
  CHECK(in_U(nu.with_role(Role::XPoint)));
  CHECK(in_U(swapped.with_role(Role::XPoint)));

  Sampler smp(29);
  for (auto degrees : std::vector<std::vector<int>>{{2}, {3}, {2, 1}}) {
    for (long long p : {2, 3}) {
      auto sp = PrimeSplitting::make(p, degrees);
      for (int k = 0; k < 200; ++k) {
        auto v = smp.vector(sp, Role::YPoint);
        // group action, including negative exponents
        CHECK(galois_act(2, galois_act(1, v)) == galois_act(3, v));
        CHECK(galois_act(-1, galois_act(1, v)) == v);
        // commutes with w and the region membership
        CHECK(galois_act(1, w_map(v)) == w_map(galois_act(1, v)));
        auto x = v.with_role(Role::XPoint);
        CHECK(in_U(x) == in_U(galois_act(1, x)));
        // commutes with the face and pair constructors
        auto f = face_of_vector(sp, v.values());
        CHECK(galois_act(1, f) ==
              face_of_vector(sp, galois_act(1, v).values()));
        CHECK(galois_act(1, face_to_pair(f)) ==
              face_to_pair(galois_act(1, f)));
      }
      // commutes with the exact projection where it is defined
      for (int k = 0; k < 100; ++k) {
        auto y = smp.in_V(sp);
        CHECK(galois_act(1, pi_exact(y)) == pi_exact(galois_act(1, y)));
      }
      // sets: action law and admissibility preservation
      for (uint64_t bits = 0; bits < (1ull << sp->g()); ++bits) {
        EmbSet S2(sp, bits);
        CHECK(galois_act(1, galois_act(-1, S2)) == S2);
      }
      for (const auto& pr : enumerate_admissible(sp)) {
        auto moved = galois_act(1, pr);  // ctor revalidates
        CHECK(stratum_dim(moved) == stratum_dim(pr));
        CHECK(galois_act(1, w_stratum_image(pr)) == w_stratum_image(moved));
      }
    }
  }
}

TEST_CASE("boundary constant is invariant and excluded") {
  for (const auto& text : kExtensions) {
    auto e = ExtensionMap::parse(text);
    long long p = e.source()->p();
    std::vector<Rat> c(static_cast<size_t>(e.source()->g()), Rat(p, p + 1));
    auto nu = vec(e.source(), c, Role::XPoint);
    auto up = delta(e, nu);
    for (int b = 0; b < e.target()->g(); ++b)
      CHECK(up.at(b) == Rat(p, p + 1));
    CHECK_FALSE(in_U(nu));
    CHECK_FALSE(in_U(up));
    CHECK_FALSE(in_U(galois_act(1, up)));
  }
}
