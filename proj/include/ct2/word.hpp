#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ct2 {

/// Clifford+T generators on two qubits. The ordering is load-bearing: it is
/// the lexicographic tie-break order used by the Clifford table and all
/// word searches.
enum class XGen : uint8_t { W = 0, H0, H1, S0, S1, T0, T1, CZ };

inline constexpr int kNumXGen = 8;

const char* name(XGen g);

/// Generators for U_4(R): omega[j], X[j,k], H[j,k] with j < k over {0..3}.
struct YGen {
  enum class Kind : uint8_t { Omega = 0, X, H };
  Kind kind = Kind::Omega;
  uint8_t j = 0, k = 0;  // k unused for Omega

  static YGen omega(int j);
  static YGen x(int j, int k);
  static YGen h(int j, int k);

  /// Dense index in 0..15: omega[j] -> j, X[j,k] -> 4+pair, H[j,k] -> 10+pair.
  int index() const;
  static YGen from_index(int idx);

  friend bool operator==(const YGen&, const YGen&) = default;
  std::string str() const;
};

inline constexpr int kNumYGen = 16;

template <typename G>
using Word = std::vector<G>;

using XWord = Word<XGen>;
using YWord = Word<YGen>;

template <typename G>
Word<G> concat(const Word<G>& a, const Word<G>& b) {
  Word<G> r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

/// An ordered pair of words with a stable unique id, e.g. "C6[i=0]".
template <typename G>
struct Relation {
  std::string id;
  Word<G> lhs, rhs;
};

using XRelation = Relation<XGen>;
using YRelation = Relation<YGen>;

/// The Clifford+T relation set, fully expanded over all metavariable and
/// index ranges, with every circuit abbreviation reduced to plain generators.
/// 39 relations.
const std::vector<XRelation>& relations_S();

/// The U_4(R) relation set expanded over all admissible index tuples.
/// 123 relations.
const std::vector<YRelation>& relations_R();

/// Named abbreviations accepted by the X parser (dagger gates, both CNOT
/// orientations, negated CNOTs, controlled-H in both orientations).
const XWord& macro_expansion(const std::string& tok);
bool is_macro(const std::string& tok);

struct ParseError : std::runtime_error {
  size_t column;  // 1-based
  ParseError(size_t col, const std::string& msg)
      : std::runtime_error("parse error at column " + std::to_string(col) +
                           ": " + msg),
        column(col) {}
};

/// Whitespace-separated tokens; "eps" is the empty word; any token may carry
/// an exponent suffix "^n" with n >= 0. Throws ParseError.
XWord parse_x(const std::string& text);
YWord parse_y(const std::string& text);

/// Round-trips with the parser; runs of equal generators print as "g^n".
std::string print_word(const XWord& w);
std::string print_word(const YWord& w);

std::string relation_line(const XRelation& r);
std::string relation_line(const YRelation& r);

}  // namespace ct2
