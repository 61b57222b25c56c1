#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ct2 {

// All coefficient arithmetic is overflow-checked: words in this toolkit keep
// coefficients small, so a hard failure beats silent wraparound.
inline int64_t checked_add(int64_t x, int64_t y) {
  int64_t r;
  if (__builtin_add_overflow(x, y, &r))
    throw std::overflow_error("ring: int64 overflow in add");
  return r;
}

inline int64_t checked_sub(int64_t x, int64_t y) {
  int64_t r;
  if (__builtin_sub_overflow(x, y, &r))
    throw std::overflow_error("ring: int64 overflow in sub");
  return r;
}

inline int64_t checked_mul(int64_t x, int64_t y) {
  int64_t r;
  if (__builtin_mul_overflow(x, y, &r))
    throw std::overflow_error("ring: int64 overflow in mul");
  return r;
}

inline uint64_t mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Element of Z[w] with w = exp(i*pi/4): a + b*w + c*w^2 + d*w^3, w^4 = -1.
/// Note i = w^2 and sqrt(2) = w - w^3.
struct CycloInt {
  int64_t a = 0, b = 0, c = 0, d = 0;

  constexpr CycloInt() = default;
  constexpr CycloInt(int64_t a_, int64_t b_, int64_t c_, int64_t d_)
      : a(a_), b(b_), c(c_), d(d_) {}

  static constexpr CycloInt zero() { return {0, 0, 0, 0}; }
  static constexpr CycloInt one() { return {1, 0, 0, 0}; }
  static constexpr CycloInt omega() { return {0, 1, 0, 0}; }

  /// w^e for any integer e (reduced mod 8 via w^4 = -1).
  static CycloInt omega_pow(int64_t e) {
    e = ((e % 8) + 8) % 8;
    int64_t sign = e < 4 ? 1 : -1;
    int64_t co[4] = {0, 0, 0, 0};
    co[e % 4] = sign;
    return {co[0], co[1], co[2], co[3]};
  }

  bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }

  friend bool operator==(const CycloInt&, const CycloInt&) = default;

  friend CycloInt operator+(const CycloInt& x, const CycloInt& y) {
    return {checked_add(x.a, y.a), checked_add(x.b, y.b),
            checked_add(x.c, y.c), checked_add(x.d, y.d)};
  }

  friend CycloInt operator-(const CycloInt& x, const CycloInt& y) {
    return {checked_sub(x.a, y.a), checked_sub(x.b, y.b),
            checked_sub(x.c, y.c), checked_sub(x.d, y.d)};
  }

  CycloInt operator-() const { return {-a, -b, -c, -d}; }

  // Polynomial product reduced by w^4 = -1.
  friend CycloInt operator*(const CycloInt& x, const CycloInt& y) {
    auto m = checked_mul;
    auto s = checked_sub;
    auto p = checked_add;
    int64_t ra = s(s(s(m(x.a, y.a), m(x.b, y.d)), m(x.c, y.c)), m(x.d, y.b));
    int64_t rb = s(s(p(m(x.a, y.b), m(x.b, y.a)), m(x.c, y.d)), m(x.d, y.c));
    int64_t rc = s(p(p(m(x.a, y.c), m(x.b, y.b)), m(x.c, y.a)), m(x.d, y.d));
    int64_t rd = p(p(p(m(x.a, y.d), m(x.b, y.c)), m(x.c, y.b)), m(x.d, y.a));
    return {ra, rb, rc, rd};
  }

  /// Complex conjugate: w -> w^7 = -w^3.
  CycloInt conj() const { return {a, -d, -c, -b}; }

  /// Multiplication by sqrt(2) = w - w^3.
  CycloInt times_sqrt2() const {
    return {checked_sub(b, d), checked_add(a, c), checked_add(b, d),
            checked_sub(c, a)};
  }

  /// Divisibility by sqrt(2): holds iff a = c and b = d (mod 2), with quotient
  /// (b-d, a+c, b+d, c-a)/2. Verified by brute force in the test suite.
  bool divisible_sqrt2() const {
    return ((a ^ c) & 1) == 0 && ((b ^ d) & 1) == 0;
  }

  CycloInt quotient_sqrt2() const {
    return {checked_sub(b, d) / 2, checked_add(a, c) / 2,
            checked_add(b, d) / 2, checked_sub(c, a) / 2};
  }

  std::complex<double> embed() const {
    static const double rt = 0.70710678118654752440;  // 1/sqrt(2)
    return {static_cast<double>(a) + (static_cast<double>(b) - d) * rt,
            static_cast<double>(c) + (static_cast<double>(b) + d) * rt};
  }

  uint64_t hash() const {
    uint64_t h = mix64(static_cast<uint64_t>(a));
    h = mix64(h ^ static_cast<uint64_t>(b));
    h = mix64(h ^ static_cast<uint64_t>(c));
    h = mix64(h ^ static_cast<uint64_t>(d));
    return h;
  }
};

/// Element of R = Z[1/sqrt(2), i], kept canonical: num / sqrt(2)^k where
/// k = 0 or num is not divisible by sqrt(2). Equality is componentwise.
class RingElt {
 public:
  RingElt() = default;
  RingElt(CycloInt num, int64_t k) : num_(num), k_(k) { canonicalize(); }

  static RingElt zero() { return RingElt(); }
  static RingElt one() { return RingElt(CycloInt::one(), 0); }
  static RingElt omega() { return RingElt(CycloInt::omega(), 0); }
  static RingElt omega_pow(int64_t e) {
    return RingElt(CycloInt::omega_pow(e), 0);
  }
  static RingElt i() { return RingElt(CycloInt{0, 0, 1, 0}, 0); }
  static RingElt from_int(int64_t n) { return RingElt(CycloInt{n, 0, 0, 0}, 0); }
  static RingElt inv_sqrt2() { return RingElt(CycloInt::one(), 1); }
  static RingElt half() { return RingElt(CycloInt::one(), 2); }

  const CycloInt& num() const { return num_; }
  int64_t k() const { return k_; }

  bool is_zero() const { return num_.is_zero(); }

  friend bool operator==(const RingElt&, const RingElt&) = default;

  friend RingElt operator+(const RingElt& x, const RingElt& y) {
    if (x.k_ == y.k_) return RingElt(x.num_ + y.num_, x.k_);
    if (x.k_ < y.k_) return RingElt(lift(x.num_, y.k_ - x.k_) + y.num_, y.k_);
    return RingElt(x.num_ + lift(y.num_, x.k_ - y.k_), x.k_);
  }

  friend RingElt operator-(const RingElt& x, const RingElt& y) {
    return x + (-y);
  }

  RingElt operator-() const {
    RingElt r;
    r.num_ = -num_;
    r.k_ = k_;
    return r;
  }

  friend RingElt operator*(const RingElt& x, const RingElt& y) {
    return RingElt(x.num_ * y.num_, x.k_ + y.k_);
  }

  RingElt conj() const { return RingElt(num_.conj(), k_); }

  RingElt pow(int64_t e) const {
    if (e < 0) throw std::domain_error("RingElt::pow: negative exponent");
    RingElt acc = one();
    RingElt base = *this;
    while (e > 0) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  /// Floating-point embedding with w = exp(i*pi/4). Test oracle only; exact
  /// code never consults it.
  std::complex<double> embed() const {
    std::complex<double> v = num_.embed();
    double scale = std::pow(2.0, static_cast<double>(k_) / 2.0);
    return v / scale;
  }

  uint64_t hash() const { return mix64(num_.hash() ^ (uint64_t)k_); }

  /// Debug form "a+b*w+c*w2+d*w3 / rt2^k"; not a stability contract.
  std::string str() const {
    if (num_.is_zero()) return "0";
    std::string s;
    auto term = [&s](int64_t v, const char* sym) {
      if (v == 0) return;
      if (!s.empty() && v > 0) s += "+";
      if (v == -1 && *sym) {
        s += "-";
      } else if (v != 1 || !*sym) {
        s += std::to_string(v);
        if (*sym) s += "*";
      }
      s += sym;
    };
    term(num_.a, "");
    term(num_.b, "w");
    term(num_.c, "w2");
    term(num_.d, "w3");
    if (k_ > 0) s += " / rt2^" + std::to_string(k_);
    return s;
  }

 private:
  static CycloInt lift(CycloInt n, int64_t steps) {
    // Multiply by sqrt(2)^steps: powers of 2 first, one sqrt(2) if odd.
    int64_t half_steps = steps / 2;
    if (half_steps > 0) {
      if (half_steps >= 63) throw std::overflow_error("ring: lift too large");
      int64_t f = int64_t(1) << half_steps;
      n = n * CycloInt{f, 0, 0, 0};
    }
    if (steps & 1) n = n.times_sqrt2();
    return n;
  }

  void canonicalize() {
    if (num_.is_zero()) {
      k_ = 0;
      return;
    }
    if (k_ < 0) {
      num_ = lift(num_, -k_);
      k_ = 0;
    }
    while (k_ > 0 && num_.divisible_sqrt2()) {
      num_ = num_.quotient_sqrt2();
      --k_;
    }
  }

  CycloInt num_;
  int64_t k_ = 0;
};

/// canonicalize(num, k) from the build contract; RingElt construction already
/// performs it, this spelling exists for tests and callers holding raw parts.
inline RingElt canonicalize(CycloInt num, int64_t k) { return RingElt(num, k); }

struct RingEltHash {
  size_t operator()(const RingElt& x) const { return x.hash(); }
};

}  // namespace ct2
