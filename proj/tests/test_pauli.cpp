#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ct2/pauli.hpp"

using namespace ct2;

namespace {

const CliffordTable& table() {
  static const CliffordTable t = CliffordTable::build();
  return t;
}

XWord random_xword(std::mt19937_64& rng, size_t maxlen) {
  std::uniform_int_distribution<size_t> dl(0, maxlen);
  std::uniform_int_distribution<int> dg(0, kNumXGen - 1);
  XWord w(dl(rng));
  for (auto& g : w) g = static_cast<XGen>(dg(rng));
  return w;
}

RotationForm random_form(std::mt19937_64& rng, size_t maxrot) {
  std::uniform_int_distribution<size_t> dl(0, maxrot);
  std::uniform_int_distribution<size_t> dp(0, 29);
  RotationForm f;
  f.rotations.resize(dl(rng));
  for (auto& p : f.rotations) p = Pauli2::signed_nonidentity()[dp(rng)];
  std::uniform_int_distribution<size_t> dc(0, 5);
  XWord tail(dl(rng));
  for (auto& g : tail) g = CliffordTable::generators()[dc(rng)];
  f.tail = *table().lookup(interp_x(tail));
  return f;
}

bool equal_forms(const RotationForm& a, const RotationForm& b) {
  return a.rotations == b.rotations && a.tail == b.tail;
}

}  // namespace

TEST_CASE("rotation matrices") {
  CHECK(rotation_matrix(Pauli2(+1, 3, 0)) == interp_x({XGen::T0}));
  CHECK(rotation_matrix(Pauli2(+1, 0, 3)) == interp_x({XGen::T1}));
  for (const Pauli2& p : Pauli2::signed_nonidentity()) {
    INFO(p.str());
    CHECK(is_unitary(rotation_matrix(p)));
  }
}

TEST_CASE("rotations commute exactly when their Paulis do") {
  for (const Pauli2& p : Pauli2::signed_nonidentity()) {
    for (const Pauli2& q : Pauli2::signed_nonidentity()) {
      Mat4 rp = rotation_matrix(p), rq = rotation_matrix(q);
      bool rots_commute = matmul(rp, rq) == matmul(rq, rp);
      bool paulis_commute =
          matmul(p.matrix(), q.matrix()) == matmul(q.matrix(), p.matrix());
      CHECK(rots_commute == p.commutes_with(q));
      CHECK(paulis_commute == p.commutes_with(q));
    }
  }
}

TEST_CASE("to_rotation_form basics") {
  RotationForm f = to_rotation_form({XGen::T0}, table());
  REQUIRE(f.rotations.size() == 1);
  CHECK(f.rotations[0] == Pauli2(+1, 3, 0));
  CHECK(f.tail.empty());

  RotationForm g = to_rotation_form({XGen::H0}, table());
  CHECK(g.rotations.empty());
  CHECK(interp_x(g.tail) == interp_x({XGen::H0}));

  RotationForm h = to_rotation_form(parse_x("H0 T0 H0"), table());
  REQUIRE(h.rotations.size() == 1);
  CHECK(h.rotations[0] == Pauli2(+1, 1, 0));
  CHECK(eval(h) == interp_x(parse_x("H0 T0 H0")));
}

TEST_CASE("standardize eliminates signs") {
  RotationForm f;
  f.rotations = {Pauli2(-1, 3, 0)};
  RotationForm s = standardize(f, table());
  REQUIRE(s.rotations.size() == 1);
  CHECK(s.rotations[0] == Pauli2(+1, 3, 0));
  // Residue: R_Z^dag R_(-Z) = S^dag w on qubit 0.
  CHECK(interp_x(s.tail) == interp_x(parse_x("S0^3 W")));
  CHECK(eval(s) == eval(f));
}

TEST_CASE("standardize cancels duplicate rotations") {
  RotationForm f;
  f.rotations = {Pauli2(+1, 3, 0), Pauli2(+1, 3, 0)};
  RotationForm s = standardize(f, table());
  CHECK(s.rotations.empty());
  CHECK(interp_x(s.tail) == interp_x({XGen::S0}));
}

TEST_CASE("standardize sorts commuting rotations") {
  RotationForm f;
  // ZI and IZ commute; lexicographically IZ < ZI.
  f.rotations = {Pauli2(+1, 3, 0), Pauli2(+1, 0, 3)};
  RotationForm s = standardize(f, table());
  REQUIRE(s.rotations.size() == 2);
  CHECK(s.rotations[0] == Pauli2(+1, 0, 3));
  CHECK(s.rotations[1] == Pauli2(+1, 3, 0));
  CHECK(eval(s) == eval(f));
}

TEST_CASE("standardize is idempotent and semantics-preserving") {
  std::mt19937_64 rng(321);
  for (int iter = 0; iter < 1000; ++iter) {
    RotationForm f = random_form(rng, 10);
    RotationForm s = standardize(f, table());
    CHECK(eval(s) == eval(f));
    for (const Pauli2& p : s.rotations) CHECK(p.sign > 0);
    CHECK(equal_forms(standardize(s, table()), s));
  }
}

TEST_CASE("pipeline preserves semantics and never raises the T-count") {
  std::mt19937_64 rng(654);
  for (int iter = 0; iter < 300; ++iter) {
    XWord w = random_xword(rng, 60);
    RotationForm f = to_rotation_form(w, table());
    CHECK(eval(f) == interp_x(w));
    CHECK(f.rotations.size() <= t_count(w));
    RotationForm s = standardize(f, table());
    CHECK(s.rotations.size() <= f.rotations.size());
    XWord back = from_rotation_form(s, table());
    CHECK(interp_x(back) == interp_x(w));
  }
}

TEST_CASE("from_rotation_form basics") {
  CHECK(from_rotation_form({{}, {}}, table()).empty());

  RotationForm f;
  f.rotations = {Pauli2(+1, 3, 0)};
  XWord w = from_rotation_form(f, table());
  CHECK(t_count(w) == 1);
  CHECK(interp_x(w) == interp_x({XGen::T0}));

  RotationForm neg;
  neg.rotations = {Pauli2(-1, 3, 0)};
  CHECK_THROWS_AS(from_rotation_form(neg, table()), std::domain_error);
}

TEST_CASE("print_form") {
  RotationForm f;
  f.rotations = {Pauli2(+1, 3, 1), Pauli2(+1, 0, 3)};
  f.tail = {XGen::H0};
  CHECK(print_form(f) == "+ZX +IZ | H0");
  CHECK(print_form({{}, {}}) == "| eps");
}

TEST_CASE("the three non-obvious rotation identities hold") {
  for (int i = 0; i < num_nonobvious_rotation_relations(); ++i) {
    INFO(nonobvious_rotation_relation_name(i));
    CHECK(nonobvious_rotation_relation(i));
  }
  CHECK(verify_nonobvious_rotation_relations());
}
