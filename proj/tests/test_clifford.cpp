#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "ct2/clifford.hpp"

using namespace ct2;

namespace {

const CliffordTable& table() {
  static const CliffordTable t = CliffordTable::build();
  return t;
}

XWord random_clifford_word(std::mt19937_64& rng, size_t maxlen) {
  std::uniform_int_distribution<size_t> dl(0, maxlen);
  std::uniform_int_distribution<size_t> dg(0,
                                           CliffordTable::generators().size() - 1);
  XWord w(dl(rng));
  for (auto& g : w) g = CliffordTable::generators()[dg(rng)];
  return w;
}

Pauli2 random_pauli(std::mt19937_64& rng) {
  std::uniform_int_distribution<size_t> d(0, 29);
  return Pauli2::signed_nonidentity()[d(rng)];
}

}  // namespace

TEST_CASE("group order is 92160") {
  CHECK(table().order() == 92160);
}

TEST_CASE("identity has the empty word") {
  auto w = table().lookup(Mat4::identity());
  REQUIRE(w.has_value());
  CHECK(w->empty());
}

TEST_CASE("membership checks") {
  CHECK(table().lookup(interp_x(parse_x("H0 CZ S1"))).has_value());
  CHECK_FALSE(table().lookup(interp_x({XGen::T0})).has_value());
  CHECK(table().lookup(Mat4::scalar(RingElt::omega())).has_value());
  // diag(i,1,1,1) has det = i, so it lies in CliffordT(2), but it is not a
  // Clifford operator: it conjugates X (x) I outside the Pauli group.
  Mat4 d = Mat4::diag(RingElt::i(), RingElt::one(), RingElt::one(),
                      RingElt::one());
  CHECK_FALSE(table().lookup(d).has_value());
  CHECK_THROWS_AS(conj_pauli(d, Pauli2(+1, 1, 0)), std::domain_error);
  // Diagonal Cliffords do exist with phases on single rows of the S kind:
  CHECK(table().lookup(Mat4::diag(RingElt::one(), RingElt::i(), RingElt::i(),
                                  -RingElt::one()))
            .has_value());  // S0 S1
}

TEST_CASE("every stored word evaluates to its key and the table is closed") {
  const CliffordTable& t = table();
  for (uint32_t i = 0; i < t.order(); ++i) {
    CHECK(interp_x(t.word(i)) == t.matrix(i));
    for (XGen g : CliffordTable::generators())
      CHECK(t.contains(matmul(t.matrix(i), x_interpretation().of(g))));
  }
}

TEST_CASE("stored words are shortest, lexicographically least") {
  // Spot checks: generators map to themselves, and W H0 (not H0 W) is stored
  // for the product since W sorts first.
  CHECK(table().lookup(interp_x({XGen::H0})) == XWord{XGen::H0});
  CHECK(table().lookup(interp_x(parse_x("H0 W"))) == parse_x("W H0"));
}

TEST_CASE("conj_pauli basics") {
  Pauli2 z0(+1, 3, 0), x0(+1, 1, 0);
  CHECK(conj_pauli(XWord{XGen::H0}, z0) == x0);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    Pauli2 p = random_pauli(rng);
    CHECK(conj_pauli(XWord{}, p) == p);
  }
  // CZ X0 CZ = X (x) Z.
  CHECK(conj_pauli(XWord{XGen::CZ}, x0) == Pauli2(+1, 1, 3));
}

TEST_CASE("conj_pauli rejects non-Pauli conjugates") {
  CHECK_THROWS_AS(conj_pauli(interp_x({XGen::T0}), Pauli2(+1, 1, 0)),
                  std::domain_error);
}

TEST_CASE("conj_pauli respects composition") {
  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 200; ++iter) {
    XWord c1 = random_clifford_word(rng, 8);
    XWord c2 = random_clifford_word(rng, 8);
    Pauli2 p = random_pauli(rng);
    XWord c12 = c1;
    c12.insert(c12.end(), c2.begin(), c2.end());
    CHECK(conj_pauli(c12, p) == conj_pauli(c1, conj_pauli(c2, p)));
  }
}

TEST_CASE("transporters") {
  Pauli2 z0(+1, 3, 0), x0(+1, 1, 0);
  CHECK(find_transporter(z0).empty());
  CHECK(find_transporter(x0) == XWord{XGen::H0});
  for (const Pauli2& p : Pauli2::positive_nonidentity()) {
    INFO(p.str());
    CHECK(conj_pauli(find_transporter(p), z0) == p);
  }
  CHECK_THROWS_AS(find_transporter(Pauli2(-1, 3, 0)), std::domain_error);
}

TEST_CASE("cache round-trips bit-exactly") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "ct2-test-cache";
  fs::create_directories(dir);
  fs::path file = dir / "clifford_table.v1.bin";
  table().save(file);

  auto loaded = CliffordTable::load(file, 0.01);
  REQUIRE(loaded.has_value());
  REQUIRE(loaded->order() == table().order());
  for (uint32_t i = 0; i < table().order(); i += 997) {
    CHECK(loaded->matrix(i) == table().matrix(i));
    CHECK(loaded->word(i) == table().word(i));
  }

  SUBCASE("full verification accepts a good file") {
    auto full = CliffordTable::load(file, 1.0);
    CHECK(full.has_value());
  }

  SUBCASE("corruption is detected") {
    auto size = fs::file_size(file);
    std::fstream f(file, std::ios::in | std::ios::out | std::ios::binary);
    f.seekp(static_cast<std::streamoff>(size / 2));
    char byte = 0x5a;
    f.write(&byte, 1);
    f.close();
    auto bad = CliffordTable::load(file, 1.0);
    CHECK_FALSE(bad.has_value());
  }

  fs::remove_all(dir);
}

TEST_CASE("wrong version header is rejected") {
  namespace fs = std::filesystem;
  fs::path file = fs::temp_directory_path() / "ct2-bad-cache.bin";
  std::ofstream(file) << "ct2-clifford-table v0\n";
  CHECK_FALSE(CliffordTable::load(file).has_value());
  fs::remove(file);
}
