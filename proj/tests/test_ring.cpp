#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <random>

#include "ct2/ring.hpp"

using namespace ct2;

namespace {

double dist(std::complex<double> x, std::complex<double> y) {
  return std::abs(x - y);
}

CycloInt random_cyclo(std::mt19937_64& rng, int64_t bound) {
  std::uniform_int_distribution<int64_t> d(-bound, bound);
  return {d(rng), d(rng), d(rng), d(rng)};
}

RingElt random_elt(std::mt19937_64& rng, int64_t bound, int64_t kmax) {
  std::uniform_int_distribution<int64_t> dk(0, kmax);
  return RingElt(random_cyclo(rng, bound), dk(rng));
}

}  // namespace

TEST_CASE("sqrt2 divisibility rule verified over all residue classes mod 2") {
  // The rule (divisible iff a=c and b=d mod 2, quotient (b-d,a+c,b+d,c-a)/2)
  // must agree with the embedding oracle on every residue class before
  // anything else relies on it.
  for (int mask = 0; mask < 16; ++mask) {
    CycloInt n{mask & 1 ? 3 : 2, mask & 2 ? 5 : 4, mask & 4 ? 7 : 6,
               mask & 8 ? 9 : 8};
    bool rule = n.divisible_sqrt2();
    bool expected = ((n.a - n.c) % 2 == 0) && ((n.b - n.d) % 2 == 0);
    CHECK(rule == expected);
    if (rule) {
      CycloInt q = n.quotient_sqrt2();
      // q * sqrt2 must reproduce n exactly and in the embedding.
      CHECK(q.times_sqrt2() == n);
      CHECK(dist(q.embed() * std::sqrt(2.0), n.embed()) < 1e-9);
    } else {
      // No integer quotient exists: the rule's quotient formula would need
      // odd halves. Check against the embedding of the doubled element.
      CHECK((((n.b - n.d) % 2 != 0) || ((n.a + n.c) % 2 != 0) ||
             ((n.b + n.d) % 2 != 0) || ((n.c - n.a) % 2 != 0)));
    }
  }
}

TEST_CASE("add examples") {
  RingElt x = random_elt(*new std::mt19937_64(7), 10, 3);
  CHECK(RingElt::zero() + x == x);

  RingElt half_rt2 = RingElt::inv_sqrt2();
  RingElt sum = half_rt2 + half_rt2;
  // 2/sqrt2 = sqrt2 = w - w^3 with k = 0.
  CHECK(sum == RingElt(CycloInt{0, 1, 0, -1}, 0));

  RingElt w = RingElt::omega();
  RingElt w7 = RingElt::omega_pow(7);
  RingElt s = w + w7;
  CHECK(s == RingElt(CycloInt{0, 1, 0, -1}, 0));
  CHECK(dist(s.embed(), {1.4142135623730951, 0.0}) < 1e-9);
}

TEST_CASE("mul examples") {
  CHECK(RingElt::omega() * RingElt::omega_pow(7) == RingElt::one());

  RingElt r = RingElt::inv_sqrt2() * RingElt::inv_sqrt2();
  CHECK(r.num() == CycloInt{1, 0, 0, 0});
  CHECK(r.k() == 2);

  // (1 + w^2)/sqrt2 = w.
  CHECK(RingElt(CycloInt{1, 0, 1, 0}, 1) == RingElt::omega());
}

TEST_CASE("conj examples") {
  CHECK(RingElt::one().conj() == RingElt::one());
  CHECK(RingElt::omega().conj() * RingElt::omega() == RingElt::one());
  CHECK(RingElt::inv_sqrt2().conj() == RingElt::inv_sqrt2());
}

TEST_CASE("canonicalize examples") {
  CHECK(canonicalize(CycloInt{2, 0, 0, 0}, 2) ==
        RingElt(CycloInt{1, 0, 0, 0}, 0));
  CHECK(canonicalize(CycloInt{1, 0, 1, 0}, 1) == RingElt::omega());
  RingElt irred = canonicalize(CycloInt{1, 0, 0, 0}, 1);
  CHECK(irred.num() == CycloInt{1, 0, 0, 0});
  CHECK(irred.k() == 1);
}

TEST_CASE("float embedding examples") {
  CHECK(dist(RingElt::one().embed(), {1.0, 0.0}) < 1e-12);
  CHECK(dist(RingElt::omega_pow(2).embed(), {0.0, 1.0}) < 1e-12);
  CHECK(dist(RingElt::inv_sqrt2().embed(), {0.70710678118654752, 0.0}) < 1e-12);
}

TEST_CASE("exact arithmetic agrees with the embedding oracle") {
  std::mt19937_64 rng(12345);
  for (int iter = 0; iter < 10000; ++iter) {
    RingElt x = random_elt(rng, 100, 10);
    RingElt y = random_elt(rng, 100, 10);
    CHECK(dist((x + y).embed(), x.embed() + y.embed()) < 1e-9);
    CHECK(dist((x * y).embed(), x.embed() * y.embed()) < 1e-9);
  }
}

TEST_CASE("canonicalization is idempotent and separates values") {
  std::mt19937_64 rng(999);
  for (int iter = 0; iter < 10000; ++iter) {
    RingElt x = random_elt(rng, 100, 10);
    CHECK(canonicalize(x.num(), x.k()) == x);

    RingElt y = random_elt(rng, 100, 10);
    if (!(x == y)) {
      // Distinct canonical forms never embed within 1e-12.
      CHECK(dist(x.embed(), y.embed()) > 1e-12);
    }
  }
}

TEST_CASE("conjugation is an involutive ring homomorphism") {
  std::mt19937_64 rng(31337);
  for (int iter = 0; iter < 2000; ++iter) {
    RingElt x = random_elt(rng, 50, 6);
    RingElt y = random_elt(rng, 50, 6);
    CHECK(x.conj().conj() == x);
    CHECK((x + y).conj() == x.conj() + y.conj());
    CHECK((x * y).conj() == x.conj() * y.conj());
  }
}

TEST_CASE("x * conj(x) is real") {
  std::mt19937_64 rng(4242);
  for (int iter = 0; iter < 2000; ++iter) {
    RingElt x = random_elt(rng, 50, 6);
    RingElt n = x * x.conj();
    // Real elements have c = 0 and the w, w^3 parts cancelling.
    CHECK(n.num().c == 0);
    CHECK(n.num().b == -n.num().d);
    CHECK(std::abs(n.embed().imag()) < 1e-9);
  }
}

TEST_CASE("overflow is detected, not wrapped") {
  RingElt big = RingElt::from_int(int64_t(1) << 62);
  CHECK_THROWS_AS(big * RingElt::from_int(4), std::overflow_error);
  CHECK_THROWS_AS(big + big, std::overflow_error);
}

TEST_CASE("debug printing") {
  CHECK(RingElt::zero().str() == "0");
  CHECK(RingElt::one().str() == "1");
  CHECK(RingElt::omega().str() == "w");
  CHECK(RingElt(CycloInt{1, 2, 0, -1}, 3).str() == "1+2*w-w3 / rt2^3");
}
