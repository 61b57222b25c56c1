#pragma once

#include <memory>
#include <optional>

#include "ct2/semantics.hpp"

namespace ct2 {

/// Bidirectional meet-in-the-middle search for X-words evaluating to a given
/// unitary. A forward ball of word images grows from the identity and is
/// shared across queries; each query grows a backward ball from its target.
/// Results are deterministic: shortest first, then lexicographically least
/// in generator order.
class WordSearcher {
 public:
  WordSearcher();
  ~WordSearcher();
  WordSearcher(WordSearcher&&) noexcept;
  WordSearcher& operator=(WordSearcher&&) noexcept;

  /// Shortest word v with [[v]] = target and |v| <= max_total_length, or
  /// nullopt if the cap is exhausted.
  std::optional<XWord> find(const Mat4& target, int max_total_length);

  /// Nodes currently in the shared forward ball (diagnostics).
  size_t forward_nodes() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace ct2
