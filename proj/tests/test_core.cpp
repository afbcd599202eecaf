#include "subdiag/core.hpp"

#include <random>
#include <string>

#include "doctest.h"

using namespace subdiag;

TEST_SUITE_BEGIN("core");

namespace {
const char* kThueMorse = "0->01;1->10";
const char* kSalemType = "0->010;1->11010";
const char* kFibPair = "0->001;1->10";
const char* kDiscrete = "0->011;1->101";
}  // namespace

TEST_CASE("parse accepts the spec grammar") {
  Substitution tm = Substitution::parse(kThueMorse);
  CHECK(tm.alphabet() == "01");
  CHECK(tm.image('0') == "01");
  CHECK(tm.image('1') == "10");

  Substitution sal = Substitution::parse(kSalemType);
  CHECK(sal.image('0') == "010");
  CHECK(sal.image('1') == "11010");

  Substitution three = Substitution::parse("1->123;2->222;3->333");
  CHECK(three.alphabet() == "123");
  CHECK(three.image('3') == "333");

  CHECK(Substitution::parse(" 0 -> 01 ; 1 -> 10 ") == tm);
  CHECK(Substitution::parse(tm.spec_string()) == tm);
}

TEST_CASE("parse rejects malformed specs") {
  CHECK_THROWS_AS(Substitution::parse("0->0;1->"), ParseError);
  CHECK_THROWS_AS(Substitution::parse("0->01;0->10"), ParseError);
  CHECK_THROWS_AS(Substitution::parse("0->012;1->10"), ParseError);
  CHECK_THROWS_AS(Substitution::parse("0->01"), ParseError);  // 1 undeclared
  CHECK_THROWS_AS(Substitution::parse(""), ParseError);
  CHECK_THROWS_AS(Substitution::parse("01->0;1->1"), ParseError);
  CHECK_THROWS_AS(Substitution::parse("0:01;1:10"), ParseError);
}

TEST_CASE("apply concatenates images") {
  Substitution tm = Substitution::parse(kThueMorse);
  CHECK(apply(tm, "01") == "0110");
  CHECK(apply(tm, "") == "");
  Substitution sal = Substitution::parse(kSalemType);
  CHECK(apply(sal, "0") == "010");
  CHECK_THROWS_AS(apply(tm, "02"), PreconditionError);
}

TEST_CASE("morphism law on random words") {
  Substitution sal = Substitution::parse(kSalemType);
  std::mt19937 rng(7);
  for (int it = 0; it < 50; ++it) {
    std::string v, w;
    for (int i = 0; i < static_cast<int>(rng() % 12); ++i)
      v.push_back(rng() % 2 ? '1' : '0');
    for (int i = 0; i < static_cast<int>(rng() % 12); ++i)
      w.push_back(rng() % 2 ? '1' : '0');
    CHECK(apply(sal, v + w) == apply(sal, v) + apply(sal, w));
  }
}

TEST_CASE("fixed point prefixes") {
  CHECK(fixed_point_prefix(Substitution::parse(kThueMorse), '0', 8) ==
        "01101001");
  CHECK(fixed_point_prefix(Substitution::parse(kSalemType), '0', 8) ==
        "01011010");
  CHECK(fixed_point_prefix(Substitution::parse(kFibPair), '1', 5) == "10001");
  CHECK(fixed_point_prefix(Substitution::parse(kThueMorse), '0', 0) == "");
}

TEST_CASE("fixed point preconditions") {
  // image of seed must start with the seed
  CHECK_THROWS_AS(fixed_point_prefix(Substitution::parse("0->01;1->00"), '1', 4),
                  PreconditionError);
  CHECK(fixed_point_prefix(Substitution::parse(kThueMorse), '1', 4) == "1001");
  // non-growing seed image
  CHECK_THROWS_AS(fixed_point_prefix(Substitution::parse("0->0;1->10"), '0', 4),
                  PreconditionError);
}

TEST_CASE("prefix stability") {
  for (const char* spec : {kThueMorse, kSalemType, kFibPair, kDiscrete}) {
    Substitution s = Substitution::parse(spec);
    std::string p = fixed_point_prefix(s, '0', 200);
    CHECK(apply(s, p).substr(0, 200) == p);
    // a shorter prefix is a prefix of a longer one
    CHECK(fixed_point_prefix(s, '0', 350).substr(0, 200) == p);
  }
}

TEST_CASE("parikh counts") {
  CHECK(parikh("11010", "01") == ParikhVector{2, 3});
  CHECK(parikh("", "01") == ParikhVector{0, 0});
  CHECK(parikh("001", "01") == ParikhVector{2, 1});
  CHECK_THROWS_AS(parikh("012", "01"), PreconditionError);
}

TEST_CASE("mirror and continuity") {
  CHECK(mirror_word("011", "01") == "100");
  CHECK(mirror_word(mirror_word("0110100", "01"), "01") == "0110100");
  CHECK(is_continuous(Substitution::parse(kThueMorse)));
  CHECK_FALSE(is_continuous(Substitution::parse(kDiscrete)));
  CHECK_FALSE(is_continuous(Substitution::parse(kSalemType)));
  CHECK_THROWS_AS(is_continuous(Substitution::parse("1->123;2->222;3->333")),
                  PreconditionError);
}

TEST_CASE("primitivity") {
  CHECK(is_primitive(Substitution::parse(kThueMorse)));
  CHECK_FALSE(is_primitive(Substitution::parse("1->123;2->222;3->333")));
  CHECK(is_primitive(Substitution::parse("0->010;1->10101")));
  CHECK_FALSE(is_primitive(Substitution::parse("0->00;1->11")));
}

TEST_CASE("periodicity detection") {
  auto per = detect_periodicity(Substitution::parse("0->010;1->10101"), '0');
  REQUIRE(per.period.has_value());
  CHECK(*per.period == 2);
  per = detect_periodicity(Substitution::parse("0->010;1->10101"), '1');
  REQUIRE(per.period.has_value());
  CHECK(*per.period == 2);

  CHECK_FALSE(
      detect_periodicity(Substitution::parse(kThueMorse), '0').period);
  CHECK_FALSE(detect_periodicity(Substitution::parse(kSalemType), '0').period);

  per = detect_periodicity(Substitution::parse("0->00;1->11"), '0');
  REQUIRE(per.period.has_value());
  CHECK(*per.period == 1);

  CHECK_FALSE(
      detect_periodicity(Substitution::parse("0->001;1->10101"), '0').period);
}

TEST_CASE("square composes the substitution with itself") {
  Substitution s = Substitution::parse(kFibPair);
  Substitution s2 = square(s);
  CHECK(s2.image('0') == "00100110");
  CHECK(s2.image('1') == "10001");
  CHECK(fixed_point_prefix(s2, '0', 64) == fixed_point_prefix(s, '0', 64));
}

TEST_SUITE_END();
