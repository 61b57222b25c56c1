#pragma once

#include <filesystem>

#include "ct2/clifford.hpp"
#include "ct2/search.hpp"

namespace ct2::rs {

/// Generic Reidemeister-Schreier data for monoids, over index alphabets:
/// X-generators and Y-generators are 0-based indices, words are index
/// sequences, and state 0 is the distinguished state I.
struct Instance {
  int num_states = 0;
  int num_x = 0;
  int num_y = 0;
  std::vector<std::string> x_names;
  std::vector<std::string> y_names;
  std::vector<std::vector<int>> f;  // f[x] = y-word
  // h[state][y] = (x-word, successor state); total on states x Y.
  std::vector<std::vector<std::pair<std::vector<int>, int>>> h;
};

/// The unique monoid homomorphism extending f.
std::vector<int> f_star(const Instance& inst, const std::vector<int>& xword);

struct ThreadResult {
  std::vector<int> word;  // concatenated x-word
  int state = 0;
};

/// Left-to-right threading of h with state.
ThreadResult h_star_star(const Instance& inst, int c0,
                         const std::vector<int>& yword);

enum class ObligationKind { CondA, CondB };

struct IndexRelation {
  std::string id;
  std::vector<int> lhs, rhs;
};

/// One proof obligation from the Reidemeister-Schreier theorem: an x-word
/// pair that must be derivable, plus the coset-consistency fact that was
/// checked when it was generated.
struct Obligation {
  ObligationKind kind;
  std::string id;  // generator name for CondA, relation id for CondB
  int coset = 0;   // start state (always 0 for CondA)
  std::vector<int> lhs, rhs;
  bool coset_consistent = false;
};

/// Condition (a) for every x-generator, then condition (b) for every
/// relation at every state. Throws std::runtime_error naming the offending
/// obligation if any coset consistency check fails.
std::vector<Obligation> generate_obligations(
    const Instance& inst, const std::vector<IndexRelation>& relations);

/// The concrete instance: CliffordT(2) inside U_4(R), with coset
/// representatives I and [[w[0]]], the fixed translation f, and h derived
/// cell by cell (Clifford table first, then meet-in-the-middle search).
class CliffordTInstance {
 public:
  struct Options {
    int search_cap = 20;  // combined word-length cap per cell search
    bool use_cache = true;
    std::filesystem::path cache_dir;
  };

  /// Derives (or loads and semantically re-verifies) the coset table.
  /// Throws std::runtime_error naming (c, y) if a cell search exhausts the
  /// cap.
  static CliffordTInstance derive(const CliffordTable& table,
                                  const Options& opts);

  const Instance& engine() const { return inst_; }

  const Mat4& coset_rep(int c) const { return reps_.at(c); }
  XWord cell_word(int c, const YGen& y) const;
  int cell_next(int c, const YGen& y) const;

  YWord f_star_word(const XWord& w) const;
  std::pair<XWord, int> h_thread(int c0, const YWord& w) const;

  /// Translation of special words back into X-words (Thm. 3 proof's g).
  /// Throws NotSpecial when the threading does not return to state I.
  struct NotSpecial : std::runtime_error {
    int terminal_state;
    explicit NotSpecial(int state)
        : std::runtime_error(
              "g_translate: word is not special (terminal state c" +
              std::to_string(state) + ")"),
          terminal_state(state) {}
  };
  XWord g_translate(const YWord& w) const;

  /// All 254 obligations: 8 condition-(a) + 2x123 condition-(b), in stable
  /// order.
  std::vector<Obligation> obligations() const;

  /// "kind id coset: LHS = RHS" lines, one per obligation.
  static std::string obligation_line(const Obligation& ob);

  /// Exact semantic validity of one obligation under the X interpretation.
  static bool obligation_valid(const Obligation& ob);

  static XWord to_xword(const std::vector<int>& ixs);

 private:
  Instance inst_;
  std::vector<Mat4> reps_;
};

}  // namespace ct2::rs
