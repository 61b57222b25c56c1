#pragma once

#include <iosfwd>

#include "ct2/word.hpp"

namespace ct2 {

enum class StepDir { L2R, R2L };

/// One congruence-closure move: replace an occurrence of the cited side of
/// an axiom or lemma, at a fixed position, by the other side.
struct Step {
  std::string rule_id;
  StepDir dir = StepDir::L2R;
  size_t pos = 0;

  friend bool operator==(const Step&, const Step&) = default;
};

/// Auxiliary relation with its own replayable proof. Lemmas may cite axioms
/// and previously defined lemmas only.
struct Lemma {
  std::string name;
  XWord start, end;
  std::vector<Step> steps;

  friend bool operator==(const Lemma&, const Lemma&) = default;
};

/// An equational proof certificate: replaying the steps from start must
/// yield end, with every cited lemma proved before first use.
struct Derivation {
  XWord start, end;
  std::vector<Lemma> lemmas;
  std::vector<Step> steps;

  friend bool operator==(const Derivation&, const Derivation&) = default;
};

struct CheckResult {
  bool ok = false;
  std::string error;
  // Index of the first failing step inside the failing proof; equal to the
  // step count when the replay finished on the wrong word.
  long failing_step = -1;
  std::string failing_lemma;  // empty when the main proof failed

  explicit operator bool() const { return ok; }
};

/// Pure syntactic replay against the literal relation set; consults no
/// matrices and no tables.
CheckResult check(const Derivation& d);

/// Line-oriented certificate format:
///   start: <word>
///   end: <word>
///   lemma <name> {
///   start: <word>
///   end: <word>
///   <rule-id> <L2R|R2L> @<pos>
///   }
///   <rule-id> <L2R|R2L> @<pos>
std::string serialize(const Derivation& d);
Derivation parse_derivation(const std::string& text);
Derivation read_derivation(std::istream& is);

}  // namespace ct2
