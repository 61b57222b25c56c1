#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "ct2/word.hpp"

using namespace ct2;

namespace {

const XRelation* find_s(const std::string& id) {
  for (const auto& r : relations_S())
    if (r.id == id) return &r;
  return nullptr;
}

const YRelation* find_r(const std::string& id) {
  for (const auto& r : relations_R())
    if (r.id == id) return &r;
  return nullptr;
}

}  // namespace

TEST_CASE("relation set S expands to 39 relations with unique ids") {
  const auto& rels = relations_S();
  CHECK(rels.size() == 39);
  std::set<std::string> ids;
  for (const auto& r : rels) ids.insert(r.id);
  CHECK(ids.size() == rels.size());
}

TEST_CASE("specific S relations") {
  const XRelation* c6 = find_s("C6[i=0]");
  REQUIRE(c6 != nullptr);
  CHECK(c6->lhs == parse_x("S0 H0 S0 H0 S0 H0"));
  CHECK(c6->rhs == parse_x("W"));

  const XRelation* c14 = find_s("C14[i=1]");
  REQUIRE(c14 != nullptr);
  CHECK(c14->lhs == parse_x("T1 T1"));
  CHECK(c14->rhs == parse_x("S1"));

  // (C1) ranges over the 7 non-scalar generators, (C2) over 9 pairs.
  int c1 = 0, c2 = 0;
  for (const auto& r : relations_S()) {
    if (r.id.starts_with("C1[")) ++c1;
    if (r.id.starts_with("C2[")) ++c2;
  }
  CHECK(c1 == 7);
  CHECK(c2 == 9);
}

TEST_CASE("relation set R expands to exactly 123 relations with unique ids") {
  const auto& rels = relations_R();
  CHECK(rels.size() == 123);
  std::set<std::string> ids;
  for (const auto& r : rels) ids.insert(r.id);
  CHECK(ids.size() == rels.size());
}

TEST_CASE("specific R relations") {
  const YRelation* g1 = find_r("G1[j=2]");
  REQUIRE(g1 != nullptr);
  CHECK(g1->lhs == parse_y("w[2]^8"));
  CHECK(g1->rhs.empty());

  // H[j,k] X[j,k] = w[k]^4 H[j,k] for j=0, k=1.
  const YRelation* g18 = find_r("G18[j=0,k=1]");
  REQUIRE(g18 != nullptr);
  CHECK(g18->lhs == parse_y("H[0,1] X[0,1]"));
  CHECK(g18->rhs == parse_y("w[1]^4 H[0,1]"));
}

TEST_CASE("relation ids are stable across calls") {
  std::vector<std::string> first;
  for (const auto& r : relations_R()) first.push_back(r.id);
  std::vector<std::string> second;
  for (const auto& r : relations_R()) second.push_back(r.id);
  CHECK(first == second);
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_x("S0 H0 ^3"), ParseError);
  try {
    parse_x("S0 H0 ^3");
  } catch (const ParseError& e) {
    CHECK(e.column == 7);
  }
  CHECK_THROWS_AS(parse_x("Q5"), ParseError);
  CHECK_THROWS_AS(parse_x("T0^"), ParseError);
  CHECK_THROWS_AS(parse_x("T0^-1"), ParseError);
  CHECK_THROWS_AS(parse_y("w[7]"), ParseError);
  CHECK_THROWS_AS(parse_y("X[2,1]"), ParseError);
  CHECK_THROWS_AS(parse_y("H[1,1]"), ParseError);
}

TEST_CASE("macro expansion") {
  CHECK(parse_x("Td0") == XWord(7, XGen::T0));
  CHECK(parse_x("Sd1") == XWord(3, XGen::S1));
  CHECK(parse_x("CX01") == parse_x("H1 CZ H1"));
  CHECK(parse_x("NCX10") == parse_x("H0 CZ H0 H0 S0 S0 H0"));
  CHECK(parse_x("CH01") == parse_x("S1 H1 T1 H1 CZ H1 T1^7 H1 S1^3"));
  CHECK(parse_x("NCH01") == parse_x("CH01 H1"));
}

TEST_CASE("parse basics") {
  CHECK(parse_x("eps").empty());
  CHECK(parse_x("W^0").empty());
  CHECK(parse_y("w[1] X[0,2]") ==
        YWord{YGen::omega(1), YGen::x(0, 2)});
}

TEST_CASE("print basics") {
  CHECK(print_word(XWord{}) == "eps");
  CHECK(print_word(XWord(7, XGen::T0)) == "T0^7");
  CHECK(print_word(XWord{XGen::H0, XGen::S1}) == "H0 S1");
  CHECK(print_word(YWord{YGen::omega(3), YGen::omega(3)}) == "w[3]^2");
}

TEST_CASE("parse inverts print on random words") {
  std::mt19937_64 rng(808);
  std::uniform_int_distribution<size_t> dl(0, 200);
  std::uniform_int_distribution<int> dx(0, kNumXGen - 1);
  std::uniform_int_distribution<int> dy(0, kNumYGen - 1);
  for (int iter = 0; iter < 10000; ++iter) {
    XWord w(dl(rng));
    for (auto& g : w) g = static_cast<XGen>(dx(rng));
    CHECK(parse_x(print_word(w)) == w);

    YWord v(dl(rng));
    for (auto& g : v) g = YGen::from_index(dy(rng));
    CHECK(parse_y(print_word(v)) == v);
  }
}

TEST_CASE("relation dump format") {
  const XRelation* c14 = find_s("C14[i=0]");
  REQUIRE(c14 != nullptr);
  CHECK(relation_line(*c14) == "C14[i=0]: T0^2 = S0");
}
