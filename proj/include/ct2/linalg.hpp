#pragma once

#include <array>
#include <string>

#include "ct2/ring.hpp"

namespace ct2 {

/// Exact 2x2 matrix over R, row-major.
struct Mat2 {
  std::array<RingElt, 4> e;

  static Mat2 identity() {
    Mat2 m;
    m.at(0, 0) = RingElt::one();
    m.at(1, 1) = RingElt::one();
    return m;
  }

  RingElt& at(int r, int c) { return e[r * 2 + c]; }
  const RingElt& at(int r, int c) const { return e[r * 2 + c]; }

  friend bool operator==(const Mat2&, const Mat2&) = default;
};

/// Exact 4x4 matrix over R, row-major. The semantic target of every word.
struct Mat4 {
  std::array<RingElt, 16> e;

  static Mat4 identity() {
    Mat4 m;
    for (int i = 0; i < 4; ++i) m.at(i, i) = RingElt::one();
    return m;
  }

  static Mat4 scalar(const RingElt& s) {
    Mat4 m;
    for (int i = 0; i < 4; ++i) m.at(i, i) = s;
    return m;
  }

  static Mat4 diag(const RingElt& d0, const RingElt& d1, const RingElt& d2,
                   const RingElt& d3) {
    Mat4 m;
    m.at(0, 0) = d0;
    m.at(1, 1) = d1;
    m.at(2, 2) = d2;
    m.at(3, 3) = d3;
    return m;
  }

  RingElt& at(int r, int c) { return e[r * 4 + c]; }
  const RingElt& at(int r, int c) const { return e[r * 4 + c]; }

  friend bool operator==(const Mat4&, const Mat4&) = default;

  uint64_t hash() const {
    uint64_t h = 0x6a09e667f3bcc908ull;
    for (const auto& x : e) h = mix64(h ^ x.hash());
    return h;
  }

  std::string str() const {
    std::string s;
    for (int r = 0; r < 4; ++r) {
      s += "[ ";
      for (int c = 0; c < 4; ++c) {
        s += at(r, c).str();
        if (c < 3) s += ", ";
      }
      s += " ]\n";
    }
    return s;
  }
};

struct Mat4Hash {
  size_t operator()(const Mat4& m) const { return m.hash(); }
};

Mat4 matmul(const Mat4& a, const Mat4& b);
Mat4 adjoint(const Mat4& a);

/// Kronecker product; row/column index = 2 * (qubit-0 basis) + (qubit-1 basis),
/// so the left factor acts on the top wire (qubit 0).
Mat4 tensor(const Mat2& a, const Mat2& b);

/// Exact determinant by Laplace expansion along the first two rows. Uses
/// 512-bit intermediates: numerators of long products overflow 64 bits even
/// when the final determinant is tiny.
RingElt det4(const Mat4& a);

/// True iff adjoint(a) * a = I exactly.
bool is_unitary(const Mat4& a);

}  // namespace ct2
