#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <filesystem>
#include <random>

#include "ct2/rs.hpp"

using namespace ct2;
using namespace ct2::rs;

namespace {

// Toy instance: A3 = <c> inside S3 = <s, t | s^2, t^2, (st)^6-letters>,
// coset representatives e and s. Exercises the generic engine on a second
// semantic domain (permutations).
Instance toy_instance() {
  Instance inst;
  inst.num_states = 2;
  inst.num_x = 1;
  inst.num_y = 2;
  inst.x_names = {"c"};
  inst.y_names = {"s", "t"};
  inst.f = {{0, 1}};  // f(c) = s t
  inst.h.assign(2, std::vector<std::pair<std::vector<int>, int>>(2));
  inst.h[0][0] = {{}, 1};      // e * s = e * s
  inst.h[0][1] = {{0, 0}, 1};  // e * t = c^2 * s
  inst.h[1][0] = {{}, 0};      // s * s = e
  inst.h[1][1] = {{0}, 0};     // s * t = c * e
  return inst;
}

std::vector<IndexRelation> toy_relations() {
  return {
      {"s2", {0, 0}, {}},
      {"t2", {1, 1}, {}},
      {"ststst", {0, 1, 0, 1, 0, 1}, {}},
  };
}

// Brute-force oracle for the toy: permutation composition over {0,1,2}.
using Perm = std::array<int, 3>;

Perm compose(const Perm& f, const Perm& g) {
  return {f[g[0]], f[g[1]], f[g[2]]};
}

Perm toy_eval_y(const std::vector<int>& yword) {
  const Perm s{1, 0, 2}, t{0, 2, 1}, id{0, 1, 2};
  Perm acc = id;
  for (int y : yword) acc = compose(acc, y == 0 ? s : t);
  return acc;
}

Perm toy_eval_x(const std::vector<int>& xword) {
  const Perm c{1, 2, 0}, id{0, 1, 2};  // c = s . t
  Perm acc = id;
  for (int x : xword) {
    (void)x;
    acc = compose(acc, c);
  }
  return acc;
}

const CliffordTable& table() {
  static const CliffordTable t = CliffordTable::build();
  return t;
}

const CliffordTInstance& concrete() {
  static const CliffordTInstance inst = [] {
    CliffordTInstance::Options opts;
    opts.use_cache = false;
    return CliffordTInstance::derive(table(), opts);
  }();
  return inst;
}

YWord random_yword(std::mt19937_64& rng, size_t maxlen) {
  std::uniform_int_distribution<size_t> dl(0, maxlen);
  std::uniform_int_distribution<int> dg(0, kNumYGen - 1);
  YWord w(dl(rng));
  for (auto& g : w) g = YGen::from_index(dg(rng));
  return w;
}

XWord random_xword(std::mt19937_64& rng, size_t maxlen) {
  std::uniform_int_distribution<size_t> dl(0, maxlen);
  std::uniform_int_distribution<int> dg(0, kNumXGen - 1);
  XWord w(dl(rng));
  for (auto& g : w) g = static_cast<XGen>(dg(rng));
  return w;
}

}  // namespace

TEST_CASE("toy instance: engine basics") {
  Instance inst = toy_instance();
  CHECK(f_star(inst, {}).empty());
  CHECK(f_star(inst, {0, 0}) == std::vector<int>{0, 1, 0, 1});

  ThreadResult r = h_star_star(inst, 0, {});
  CHECK(r.word.empty());
  CHECK(r.state == 0);

  // Condition (a) for c: h**(I, f(c)) = ("c", I).
  ThreadResult a = h_star_star(inst, 0, f_star(inst, {0}));
  CHECK(a.word == std::vector<int>{0});
  CHECK(a.state == 0);
}

TEST_CASE("toy instance: obligations validate against brute force") {
  Instance inst = toy_instance();
  auto obs = generate_obligations(inst, toy_relations());
  CHECK(obs.size() == 1 + 3 * 2);
  for (const auto& ob : obs) {
    CHECK(ob.coset_consistent);
    CHECK(toy_eval_x(ob.lhs) == toy_eval_x(ob.rhs));
  }
  // The t^2 obligation at state 0 is exactly the subgroup relation c^3 = e.
  CHECK(obs[3].id == "t2");
  CHECK(obs[3].lhs == std::vector<int>{0, 0, 0});
  CHECK(obs[3].rhs.empty());
}

TEST_CASE("toy instance: coset inconsistency aborts with the offending id") {
  Instance inst = toy_instance();
  inst.h[1][0] = {{}, 1};  // break: s * s now claims to stay in coset s
  CHECK_THROWS_WITH_AS(generate_obligations(inst, toy_relations()),
                       doctest::Contains("s2"), std::runtime_error);
}

TEST_CASE("concrete: every cell satisfies [[v]][[c']] = [[c]][[y]]") {
  const auto& inst = concrete();
  for (int c = 0; c < 2; ++c) {
    for (int y = 0; y < kNumYGen; ++y) {
      YGen yg = YGen::from_index(y);
      XWord v = inst.cell_word(c, yg);
      int next = inst.cell_next(c, yg);
      Mat4 lhs = matmul(interp_x(v), inst.coset_rep(next));
      Mat4 rhs =
          matmul(inst.coset_rep(c), y_interpretation().of(yg));
      INFO("cell (c" << c << ", " << yg.str() << ")");
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("concrete: successor parity matches determinant parity") {
  const auto& inst = concrete();
  for (int c = 0; c < 2; ++c)
    for (int y = 0; y < kNumYGen; ++y) {
      YGen yg = YGen::from_index(y);
      int py = coset_class(y_interpretation().of(yg)) == CosetParity::Odd;
      CHECK(inst.cell_next(c, yg) == (c + py) % 2);
    }
}

TEST_CASE("concrete: named cells") {
  const auto& inst = concrete();
  // h(c0, w[0]) = (eps, c1): the representative itself.
  CHECK(inst.cell_word(0, YGen::omega(0)).empty());
  CHECK(inst.cell_next(0, YGen::omega(0)) == 1);
  // h(c1, w[0]) lands back in the even coset with value diag(i,1,1,1).
  XWord v = inst.cell_word(1, YGen::omega(0));
  CHECK(inst.cell_next(1, YGen::omega(0)) == 0);
  CHECK(interp_x(v) == Mat4::diag(RingElt::i(), RingElt::one(),
                                  RingElt::one(), RingElt::one()));
}

TEST_CASE("concrete: f_star and threading") {
  const auto& inst = concrete();
  CHECK(inst.f_star_word({}).empty());
  CHECK(inst.f_star_word({XGen::T0}) == parse_y("w[2] w[3]"));
  CHECK(inst.f_star_word(parse_x("H0 T0")) ==
        parse_y("H[1,3] H[0,2] w[2] w[3]"));

  auto [v, state] = inst.h_thread(0, inst.f_star_word({XGen::T0}));
  CHECK(state == 0);
  CHECK(interp_x(v) == interp_x({XGen::T0}));

  auto [v1, s1] = inst.h_thread(0, {YGen::omega(0)});
  CHECK(s1 == 1);
  CHECK(v1.empty());
}

TEST_CASE("concrete: threading is a state homomorphism on random splits") {
  const auto& inst = concrete();
  std::mt19937_64 rng(2718);
  for (int iter = 0; iter < 200; ++iter) {
    YWord w = random_yword(rng, 24);
    std::uniform_int_distribution<size_t> ds(0, w.size());
    size_t cut = ds(rng);
    YWord u(w.begin(), w.begin() + cut), v(w.begin() + cut, w.end());
    auto [wu, su] = inst.h_thread(0, u);
    auto [wv, sv] = inst.h_thread(su, v);
    auto [whole, sw] = inst.h_thread(0, w);
    CHECK(sw == sv);
    CHECK(whole == concat(concat(wu, XWord{}), wv));
  }
}

TEST_CASE("concrete: g translates special words, rejects odd ones") {
  const auto& inst = concrete();
  CHECK(inst.g_translate({}).empty());
  std::mt19937_64 rng(161803);
  for (int iter = 0; iter < 100; ++iter) {
    XWord w = random_xword(rng, 12);
    XWord g = inst.g_translate(inst.f_star_word(w));
    CHECK(interp_x(g) == interp_x(w));
  }
  try {
    inst.g_translate({YGen::omega(0)});
    CHECK(false);
  } catch (const CliffordTInstance::NotSpecial& e) {
    CHECK(e.terminal_state == 1);
  }
}

TEST_CASE("concrete: 254 obligations, all valid and coset-consistent") {
  const auto& inst = concrete();
  auto obs = inst.obligations();
  CHECK(obs.size() == 254);
  int cond_a = 0;
  for (const auto& ob : obs) {
    INFO(CliffordTInstance::obligation_line(ob));
    CHECK(ob.coset_consistent);
    CHECK(CliffordTInstance::obligation_valid(ob));
    if (ob.kind == ObligationKind::CondA) ++cond_a;
  }
  CHECK(cond_a == 8);
}

TEST_CASE("concrete: condition (a) for CZ") {
  const auto& inst = concrete();
  auto [v, state] = inst.h_thread(0, parse_y("w[3]^4"));
  CHECK(state == 0);
  CHECK(interp_x(v) == interp_x({XGen::CZ}));
}

TEST_CASE("concrete: cache round-trip reproduces the table bit-for-bit") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "ct2-rs-cache-test";
  fs::remove_all(dir);

  CliffordTInstance::Options opts;
  opts.use_cache = true;
  opts.cache_dir = dir;
  CliffordTInstance first = CliffordTInstance::derive(table(), opts);
  CHECK(fs::exists(dir / "coset_table.v1.txt"));
  CliffordTInstance second = CliffordTInstance::derive(table(), opts);
  for (int c = 0; c < 2; ++c)
    for (int y = 0; y < kNumYGen; ++y) {
      YGen yg = YGen::from_index(y);
      CHECK(first.cell_word(c, yg) == second.cell_word(c, yg));
      CHECK(first.cell_word(c, yg) == concrete().cell_word(c, yg));
      CHECK(first.cell_next(c, yg) == second.cell_next(c, yg));
    }
  fs::remove_all(dir);
}

TEST_CASE("concrete: cap exhaustion is a hard failure naming the cell") {
  CliffordTInstance::Options opts;
  opts.use_cache = false;
  opts.search_cap = 4;
  CHECK_THROWS_WITH_AS(CliffordTInstance::derive(table(), opts),
                       doctest::Contains("w[1]"), std::runtime_error);
}
