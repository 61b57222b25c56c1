#pragma once

#include <optional>

#include "ct2/cert.hpp"
#include "ct2/rs.hpp"

namespace ct2 {

struct ProveBudget {
  // Completion limits: derived-rule count, maximum big-side length of kept
  // rules, maximum length of rule sides considered for overlap pairing.
  int max_kb_rules = 4000;
  int max_rule_len = 20;
  int max_pair_len = 14;
  // Closing search limits.
  long max_search_nodes = 200000;
  int max_search_depth = 30;
  // Restrict the axiom set; empty means all of S. Used to derive axioms
  // from specific others (e.g. C8 from C14 and C16).
  std::vector<std::string> allowed_axioms;
};

enum class ProveStatus { Proved, NotEqual, Exhausted };

struct ProveResult {
  ProveStatus status = ProveStatus::Exhausted;
  std::optional<Derivation> derivation;  // present iff Proved
};

/// Equational prover over the Clifford+T axioms. Rewrite rules are
/// shortlex-oriented; completion derives new rules from critical pairs and
/// records a replayable proof for each, so every emitted certificate
/// bottoms out in axiom applications. Completion state and memoized lemmas
/// persist across goals; returned derivations are self-contained.
///
/// With a Clifford table the prover gains two tactics: a total
/// staircase decision procedure for Clifford-only goals (per-element
/// canonical forms over the group, discrepancies resolved by search and
/// retained as rules), and a syllable tactic that rewrites words into
/// Pauli-rotation syllables C T0 C^-1 and standardizes them, mirroring the
/// rotation-form pipeline with every move certified.
class Prover {
 public:
  explicit Prover(ProveBudget budget = {},
                  const CliffordTable* table = nullptr);
  ~Prover();
  Prover(Prover&&) noexcept;
  Prover& operator=(Prover&&) noexcept;

  /// Semantic mismatch returns NotEqual (checked exactly, first). A Proved
  /// result always passes check(); budget exhaustion returns Exhausted,
  /// never a wrong certificate.
  ProveResult prove(const XWord& lhs, const XWord& rhs);

  /// Runs completion until the rule cap or a drained pair queue, without a
  /// goal. Useful before batch proving.
  void saturate();

  /// Processes at most n completion items; returns false when the pair
  /// agenda is drained or the rule cap is reached.
  bool saturate_steps(int n);

  size_t num_rules() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

struct BenchmarkResult {
  std::string name;
  ProveStatus status = ProveStatus::Exhausted;
  size_t step_count = 0;  // main derivation steps (lemmas not counted)
  size_t lemma_count = 0;
  long millis = 0;
  bool check_passed = false;
  std::string certificate;  // serialized derivation when proved
};

/// The curated benchmark list: condition-(a) obligations, Clifford-only
/// condition-(b) obligations, C8 from C14+C16, the upside-down C16, and the
/// finite generator orders. Failures are reported, not thrown.
std::vector<BenchmarkResult> prove_benchmarks(const rs::CliffordTInstance& inst,
                                              const CliffordTable& table,
                                              const ProveBudget& budget = {});

}  // namespace ct2
