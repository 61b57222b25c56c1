#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ct2/semantics.hpp"

using namespace ct2;

namespace {

XWord random_xword(std::mt19937_64& rng, size_t maxlen) {
  std::uniform_int_distribution<size_t> dl(0, maxlen);
  std::uniform_int_distribution<int> dg(0, kNumXGen - 1);
  XWord w(dl(rng));
  for (auto& g : w) g = static_cast<XGen>(dg(rng));
  return w;
}

}  // namespace

TEST_CASE("interp_x basics") {
  CHECK(interp_x({}) == Mat4::identity());
  CHECK(interp_x(parse_x("S0 H0 S0 H0 S0 H0")) ==
        Mat4::scalar(RingElt::omega()));
  CHECK(interp_x({XGen::T1}) == Mat4::diag(RingElt::one(), RingElt::omega(),
                                           RingElt::one(), RingElt::omega()));
}

TEST_CASE("interp_y basics") {
  CHECK(interp_y(parse_y("w[3]^4")) == interp_x({XGen::CZ}));
  CHECK(interp_y(parse_y("H[0,2] H[0,2]")) == Mat4::identity());
  CHECK(interp_y(parse_y("w[0] w[1] w[2] w[3]")) ==
        Mat4::scalar(RingElt::omega()));
}

TEST_CASE("relation_valid examples") {
  XRelation c4{"C4", parse_x("H0 H0"), {}};
  CHECK(relation_valid(c4, x_interpretation()));

  YRelation g18{"G18", parse_y("H[0,1] X[0,1]"), parse_y("w[1]^4 H[0,1]")};
  CHECK(relation_valid(g18, y_interpretation()));

  XRelation bogus{"bogus", parse_x("H0"), parse_x("S0")};
  CHECK_FALSE(relation_valid(bogus, x_interpretation()));
}

TEST_CASE("soundness gate: every expanded S relation is a matrix identity") {
  for (const auto& rel : relations_S()) {
    INFO(relation_line(rel));
    CHECK(relation_valid(rel, x_interpretation()));
  }
}

TEST_CASE("soundness gate: every expanded R relation is a matrix identity") {
  for (const auto& rel : relations_R()) {
    INFO(relation_line(rel));
    CHECK(relation_valid(rel, y_interpretation()));
  }
}

TEST_CASE("translation table matches the fixed choice") {
  CHECK(translate_f(XGen::W) == parse_y("w[0] w[1] w[2] w[3]"));
  CHECK(translate_f(XGen::H0) == parse_y("H[1,3] H[0,2]"));
  CHECK(translate_f(XGen::H1) == parse_y("H[2,3] H[0,1]"));
  CHECK(translate_f(XGen::S0) == parse_y("w[2]^2 w[3]^2"));
  CHECK(translate_f(XGen::S1) == parse_y("w[1]^2 w[3]^2"));
  CHECK(translate_f(XGen::T0) == parse_y("w[2] w[3]"));
  CHECK(translate_f(XGen::T1) == parse_y("w[1] w[3]"));
  CHECK(translate_f(XGen::CZ) == parse_y("w[3]^4"));
}

TEST_CASE("translation respects the interpretation") {
  for (int i = 0; i < kNumXGen; ++i) {
    XGen x = static_cast<XGen>(i);
    CHECK(interp_y(translate_f(x)) == interp_x({x}));
  }
  // Homomorphism extension on random words.
  std::mt19937_64 rng(606);
  for (int iter = 0; iter < 1000; ++iter) {
    XWord w = random_xword(rng, 40);
    YWord fw;
    for (XGen g : w) {
      const YWord& img = translate_f(g);
      fw.insert(fw.end(), img.begin(), img.end());
    }
    CHECK(interp_y(fw) == interp_x(w));
  }
}

TEST_CASE("coset classification") {
  CHECK(coset_class(Mat4::identity()) == CosetParity::Even);
  CHECK(coset_class(interp_y({YGen::omega(0)})) == CosetParity::Odd);
  CHECK(det4(interp_y({YGen::omega(0)})) == RingElt::omega());

  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 500; ++iter) {
    XWord w = random_xword(rng, 100);
    CHECK(coset_class(interp_x(w)) == CosetParity::Even);
  }
}

TEST_CASE("coset class is multiplicative") {
  std::mt19937_64 rng(22);
  std::uniform_int_distribution<int> dg(0, kNumYGen - 1);
  for (int iter = 0; iter < 300; ++iter) {
    YWord u(iter % 17), v(iter % 13);
    for (auto& g : u) g = YGen::from_index(dg(rng));
    for (auto& g : v) g = YGen::from_index(dg(rng));
    Mat4 a = interp_y(u), b = interp_y(v);
    int pa = coset_class(a) == CosetParity::Odd;
    int pb = coset_class(b) == CosetParity::Odd;
    int pab = coset_class(matmul(a, b)) == CosetParity::Odd;
    CHECK(pab == (pa + pb) % 2);
  }
}

TEST_CASE("coset_class rejects non-unitary input") {
  Mat4 bad = Mat4::identity();
  bad.at(0, 0) = RingElt::from_int(2);
  CHECK_THROWS_AS(coset_class(bad), std::domain_error);
}

TEST_CASE("controlled-T identities") {
  for (int i = 0; i < num_controlled_t_identities(); ++i) {
    INFO(controlled_t_identity_name(i));
    CHECK(controlled_t_identity(i));
  }
  CHECK(verify_controlled_t_identities());
}
