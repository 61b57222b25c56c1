#include "ct2/linalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace ct2 {

Mat4 matmul(const Mat4& a, const Mat4& b) {
  Mat4 r;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      RingElt acc = a.at(i, 0) * b.at(0, j);
      acc = acc + a.at(i, 1) * b.at(1, j);
      acc = acc + a.at(i, 2) * b.at(2, j);
      acc = acc + a.at(i, 3) * b.at(3, j);
      r.at(i, j) = acc;
    }
  }
  return r;
}

Mat4 adjoint(const Mat4& a) {
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r.at(i, j) = a.at(j, i).conj();
  return r;
}

Mat4 tensor(const Mat2& a, const Mat2& b) {
  Mat4 r;
  for (int ra = 0; ra < 2; ++ra)
    for (int rb = 0; rb < 2; ++rb)
      for (int ca = 0; ca < 2; ++ca)
        for (int cb = 0; cb < 2; ++cb)
          r.at(ra * 2 + rb, ca * 2 + cb) = a.at(ra, ca) * b.at(rb, cb);
  return r;
}

namespace {

using Big = boost::multiprecision::int512_t;

// Z[w] with 512-bit coefficients, for determinant intermediates only.
struct BigCyclo {
  Big a{0}, b{0}, c{0}, d{0};

  bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }

  BigCyclo operator+(const BigCyclo& o) const {
    return {a + o.a, b + o.b, c + o.c, d + o.d};
  }
  BigCyclo operator-(const BigCyclo& o) const {
    return {a - o.a, b - o.b, c - o.c, d - o.d};
  }
  BigCyclo operator*(const BigCyclo& o) const {
    return {a * o.a - b * o.d - c * o.c - d * o.b,
            a * o.b + b * o.a - c * o.d - d * o.c,
            a * o.c + b * o.b + c * o.a - d * o.d,
            a * o.d + b * o.c + c * o.b + d * o.a};
  }

  BigCyclo times_sqrt2() const { return {b - d, a + c, b + d, c - a}; }

  bool divisible_sqrt2() const {
    return ((a ^ c) & 1) == 0 && ((b ^ d) & 1) == 0;
  }
  BigCyclo quotient_sqrt2() const {
    return {(b - d) >> 1, (a + c) >> 1, (b + d) >> 1, (c - a) >> 1};
  }
};

BigCyclo lift_to(const RingElt& x, int64_t common_k) {
  BigCyclo v{x.num().a, x.num().b, x.num().c, x.num().d};
  int64_t steps = common_k - x.k();
  int64_t half = steps / 2;
  if (half > 0) {
    Big f = Big(1) << static_cast<unsigned>(half);
    v = v * BigCyclo{f, 0, 0, 0};
  }
  if (steps & 1) v = v.times_sqrt2();
  return v;
}

int64_t to_i64(const Big& v) {
  if (v > Big(INT64_MAX) || v < Big(INT64_MIN))
    throw std::overflow_error("det4: result exceeds int64 coefficients");
  return static_cast<int64_t>(v);
}

}  // namespace

RingElt det4(const Mat4& a) {
  int64_t common_k = 0;
  for (const auto& x : a.e) common_k = std::max(common_k, x.k());

  BigCyclo m[4][4];
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m[r][c] = lift_to(a.at(r, c), common_k);

  // Laplace along rows {0,1}: pair each 2x2 minor with its complement.
  static const int cols[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  BigCyclo det{};
  for (const auto& cc : cols) {
    int c0 = cc[0], c1 = cc[1];
    int d0 = -1, d1 = -1;
    for (int c = 0; c < 4; ++c)
      if (c != c0 && c != c1) (d0 < 0 ? d0 : d1) = c;
    BigCyclo top = m[0][c0] * m[1][c1] - m[0][c1] * m[1][c0];
    BigCyclo bot = m[2][d0] * m[3][d1] - m[2][d1] * m[3][d0];
    BigCyclo term = top * bot;
    if ((1 + c0 + c1) & 1) {
      det = det - term;
    } else {
      det = det + term;
    }
  }

  int64_t k = 4 * common_k;
  if (det.is_zero()) return RingElt::zero();
  while (k > 0 && det.divisible_sqrt2()) {
    det = det.quotient_sqrt2();
    --k;
  }
  return RingElt(CycloInt{to_i64(det.a), to_i64(det.b), to_i64(det.c),
                          to_i64(det.d)},
                 k);
}

bool is_unitary(const Mat4& a) {
  return matmul(adjoint(a), a) == Mat4::identity();
}

}  // namespace ct2
