#include <chrono>
#include <cstdio>
#include "ct2/prover.hpp"

using namespace ct2;
using Clock = std::chrono::steady_clock;

const char* st(ProveStatus s) {
  switch (s) {
    case ProveStatus::Proved: return "PROVED";
    case ProveStatus::NotEqual: return "NOT-EQUAL";
    default: return "EXHAUSTED";
  }
}

int main() {
  CliffordTable table = CliffordTable::build();
  ProveBudget b;
  b.max_kb_rules = 60000;
  Prover p(b, &table);

  auto go = [&](const char* name, const XWord& l, const XWord& r) {
    auto t0 = Clock::now();
    try {
      auto res = p.prove(l, r);
      long ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now()-t0).count();
      printf("%-24s %s (%ld ms, rules %zu)", name, st(res.status), ms, p.num_rules());
      if (res.derivation) {
        auto cr = check(*res.derivation);
        printf(" steps %zu lemmas %zu check %s", res.derivation->steps.size(),
               res.derivation->lemmas.size(), cr.ok ? "ok" : cr.error.c_str());
      }
      printf("\n");
    } catch (const std::exception& e) {
      printf("%-24s THROW: %s\n", name, e.what());
    }
    fflush(stdout);
  };

  go("ud-C16", parse_x("T1 CZ"), parse_x("CZ T1"));
  // R_X0 commutation with R_Z1: H0 T0 H0 and T1 commute.
  go("rx0-rz1-comm", parse_x("H0 T0 H0 T1"), parse_x("T1 H0 T0 H0"));
  // R_ZZ via CX10 conjugation equals CX01 conjugation of T1.
  go("rzz-two-frames", parse_x("H0 CZ H0 T0 H0 CZ H0"), parse_x("H1 CZ H1 T1 H1 CZ H1"));
  // T0 S0 T0 S0 = S0 S0 T0 T0 (diagonals commute).
  go("diag-shuffle", parse_x("T0 S0 T0 S0"), parse_x("S0 S0 T0 T0"));
  // swap-conjugated T: SWAP T0 SWAP = T1 with SWAP as 3 CX's.
  go("swap-T", parse_x("CX01 CX10 CX01 T0 CX01 CX10 CX01"), parse_x("T1"));
  return 0;
}
