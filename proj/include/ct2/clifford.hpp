#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <unordered_map>
#include <vector>

#include "ct2/semantics.hpp"

namespace ct2 {

/// Signed two-qubit Pauli operator. sign * (p0 (x) p1) with letters
/// 0=I, 1=X, 2=Y, 3=Z; (I,I) is allowed only as a sign carrier.
struct Pauli2 {
  int8_t sign = +1;  // +1 or -1
  uint8_t p0 = 0, p1 = 0;

  Pauli2() = default;
  Pauli2(int sgn, int a, int b)
      : sign(static_cast<int8_t>(sgn)), p0(static_cast<uint8_t>(a)),
        p1(static_cast<uint8_t>(b)) {}

  bool is_identity_letters() const { return p0 == 0 && p1 == 0; }

  Pauli2 negated() const { return {-sign, p0, p1}; }
  Pauli2 positive() const { return {+1, p0, p1}; }

  Mat4 matrix() const;

  /// True iff the underlying Paulis commute (signs are irrelevant).
  bool commutes_with(const Pauli2& o) const;

  /// Order I < X < Y < Z componentwise, qubit 0 first; sign breaks ties
  /// (+ before -).
  friend auto operator<=>(const Pauli2& a, const Pauli2& b) {
    if (auto c = a.p0 <=> b.p0; c != 0) return c;
    if (auto c = a.p1 <=> b.p1; c != 0) return c;
    return b.sign <=> a.sign;
  }
  friend bool operator==(const Pauli2&, const Pauli2&) = default;

  std::string str() const;  // "+ZX", "-IY", ...
  static std::optional<Pauli2> parse(const std::string& tok);

  /// The 15 positive non-identity Paulis in lexicographic order.
  static const std::vector<Pauli2>& positive_nonidentity();
  /// All 30 signed non-identity Paulis.
  static const std::vector<Pauli2>& signed_nonidentity();
};

/// Exhaustive table of the 2-qubit Clifford group built by breadth-first
/// closure from {W, H0, H1, S0, S1, CZ} under right multiplication. Keys are
/// exact matrices; each key holds its shortest word, ties broken
/// lexicographically in generator order.
class CliffordTable {
 public:
  static const std::vector<XGen>& generators();

  static CliffordTable build();

  size_t order() const { return mats_.size(); }

  /// Shortest word for m if m is a Clifford operator, absent otherwise.
  std::optional<XWord> lookup(const Mat4& m) const;
  bool contains(const Mat4& m) const { return index_.count(m) > 0; }

  const Mat4& matrix(uint32_t idx) const { return mats_[idx]; }
  XWord word(uint32_t idx) const;

  /// Cache round-trips bit-exactly. load() returns nullopt when the file is
  /// missing, has a wrong version header, or fails verification.
  /// verify_fraction: fraction of entries re-evaluated on load (1.0 = all).
  void save(const std::filesystem::path& file) const;
  static std::optional<CliffordTable> load(const std::filesystem::path& file,
                                           double verify_fraction = 0.01);

  /// Rebuilds or loads from cache_dir; saves after a fresh build.
  static const CliffordTable& instance(
      const std::filesystem::path& cache_dir, bool use_cache = true,
      bool full_verify = false);

 private:
  std::vector<Mat4> mats_;                       // BFS discovery order
  std::vector<std::pair<uint32_t, int8_t>> parent_;  // (parent idx, gen idx)
  std::unordered_map<Mat4, uint32_t, Mat4Hash> index_;

  void insert(const Mat4& m, uint32_t parent, int8_t gen);
};

/// The signed Pauli Q with [[c]] P [[c]]^%-1 = Q, computed exactly. c must be
/// a word over Clifford generators only; P must not be a signed identity.
Pauli2 conj_pauli(const XWord& c, const Pauli2& p);

/// Conjugation by an explicit Clifford matrix.
Pauli2 conj_pauli(const Mat4& c, const Pauli2& p);

/// First Clifford word in BFS order whose conjugation action sends +Z(x)I to
/// p. p must be one of the 15 positive non-identity Paulis.
const XWord& find_transporter(const Pauli2& p);

}  // namespace ct2
