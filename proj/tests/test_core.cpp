#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "hmv/rational.hpp"
#include "hmv/splitting.hpp"

using namespace hmv;

TEST_CASE("rational parse and format round-trip") {
  CHECK(parse_rational("3/4") == Rat(3, 4));
  CHECK(parse_rational("2/4") == Rat(1, 2));
  CHECK(parse_rational("7") == Rat(7));
  CHECK(parse_rational("-1/3") == Rat(-1, 3));
  CHECK(format_rational(Rat(1, 2)) == "1/2");
  CHECK(format_rational(Rat(5)) == "5");
  CHECK(format_rational(Rat(2, 4)) == "1/2");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("2000000001/3"), std::invalid_argument);
}

TEST_CASE("splitting construction and parsing") {
  auto s = PrimeSplitting::make(3, {2, 1});
  CHECK(s->p() == 3);
  CHECK(s->g() == 3);
  CHECK(s->prime_count() == 2);
  CHECK(s->degree(0) == 2);
  CHECK(s->offset(1) == 2);
  CHECK(s->to_string() == "p=3;f=2,1");

  auto t = PrimeSplitting::parse("p=3;f=2,1");
  CHECK(*t == *s);
  auto u = PrimeSplitting::parse("p=3:f=2,1");
  CHECK(*u == *s);

  CHECK_THROWS_AS(PrimeSplitting::make(4, {1}), std::invalid_argument);
  CHECK_THROWS_AS(PrimeSplitting::make(3, {}), std::invalid_argument);
  CHECK_THROWS_AS(PrimeSplitting::make(3, {0}), std::invalid_argument);
  CHECK_THROWS_AS(PrimeSplitting::make(2, {65}), std::invalid_argument);
  CHECK_THROWS_AS(PrimeSplitting::parse("p=3"), std::invalid_argument);
  CHECK_THROWS_AS(PrimeSplitting::parse("f=1;p=3"), std::invalid_argument);
}

TEST_CASE("index/address bijection and sigma orbits") {
  auto s = PrimeSplitting::make(2, {3, 2, 1});
  for (int i = 0; i < s->g(); ++i) {
    auto [prime, slot] = s->address(i);
    CHECK(s->index_of(prime, slot) == i);
    // sigma^{f} is the identity on the orbit of i.
    CHECK(s->sigma(i, s->degree(prime)) == i);
    // the orbit of i is exactly its block
    int cur = i;
    int steps = 0;
    do {
      cur = s->sigma(cur);
      ++steps;
      CHECK(s->address(cur).first == prime);
    } while (cur != i);
    CHECK(steps == s->degree(prime));
  }
  CHECK(s->index_of(0, -1) == s->index_of(0, 2));  // slots wrap
  CHECK_THROWS_AS(s->address(6), std::invalid_argument);
  CHECK_THROWS_AS(s->index_of(3, 0), std::invalid_argument);
}

TEST_CASE("shift on subsets") {
  auto s = PrimeSplitting::make(3, {2});
  auto e = EmbSet::empty(s);
  CHECK(e.shift(1) == e);

  auto a = EmbSet::of(s, {{0, 0}});
  CHECK(a.shift(1) == EmbSet::of(s, {{0, 1}}));
  CHECK(a.shift(2) == a);
  CHECK(a.left() == EmbSet::of(s, {{0, 1}}));

  auto full = EmbSet::full(s);
  CHECK(full.shift(-5) == full);

  auto m = PrimeSplitting::make(2, {3, 1});
  auto x = EmbSet::of(m, {{0, 2}, {1, 0}});
  CHECK(x.shift(1) == EmbSet::of(m, {{0, 0}, {1, 0}}));
  CHECK(x.shift(-1) == EmbSet::of(m, {{0, 1}, {1, 0}}));
  // shift is an action: shift(a+b) == shift(a) then shift(b)
  for (long long ka = -3; ka <= 3; ++ka)
    for (long long kb = -3; kb <= 3; ++kb)
      CHECK(x.shift(ka + kb) == x.shift(ka).shift(kb));
}

TEST_CASE("complement and boolean algebra") {
  auto s = PrimeSplitting::make(5, {2, 2});
  for (std::uint64_t bits = 0; bits < 16; ++bits) {
    EmbSet S(s, bits);
    CHECK(S.complement().complement() == S);
    // l commutes with complement: l(S^c) == l(S)^c
    CHECK(S.complement().left() == S.left().complement());
    CHECK(S.complement().right() == S.right().complement());
    CHECK((S | S.complement()) == EmbSet::full(s));
    CHECK((S & S.complement()).empty_set());
    CHECK(S.left().right() == S);
  }
}

TEST_CASE("ideal blocks") {
  auto s = PrimeSplitting::make(2, {2, 1, 3});
  CHECK(ideal_block(s, 0).empty_set());
  CHECK(ideal_block(s, 0b111) == EmbSet::full(s));
  CHECK(ideal_block(s, 0b001) == EmbSet::of(s, {{0, 0}, {0, 1}}));
  CHECK(ideal_block(s, 0b010) == EmbSet::of(s, {{1, 0}}));
  CHECK(ideal_block(s, 0b101).size() == 5);
  CHECK(s->degree_sum(0b101) == 5);
  CHECK(s->degree_sum(0b111) == s->g());
  // blocks are sigma-stable
  for (std::uint32_t m = 0; m < 8; ++m)
    CHECK(ideal_block(s, m).shift(1) == ideal_block(s, m));
  CHECK_THROWS_AS(ideal_block(s, 0b1000), std::invalid_argument);
}

TEST_CASE("mixed splittings are rejected") {
  auto a = PrimeSplitting::make(2, {2});
  auto b = PrimeSplitting::make(3, {2});
  auto c = PrimeSplitting::parse("p=2;f=2");  // equal to a, distinct object
  EmbSet x = EmbSet::full(a), y = EmbSet::full(b), z = EmbSet::full(c);
  CHECK_THROWS_AS((void)(x | y), std::invalid_argument);
  CHECK((x | z) == x);  // structural equality suffices
  CHECK_THROWS_AS(EmbSet(a, 0b100), std::invalid_argument);
}
