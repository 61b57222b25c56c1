#include "ct2/semantics.hpp"

namespace ct2 {

namespace {

RingElt r_one() { return RingElt::one(); }
RingElt r_w() { return RingElt::omega(); }
RingElt r_i() { return RingElt::i(); }
RingElt r_rt() { return RingElt::inv_sqrt2(); }

Mat2 make2(RingElt e00, RingElt e01, RingElt e10, RingElt e11) {
  Mat2 m;
  m.at(0, 0) = e00;
  m.at(0, 1) = e01;
  m.at(1, 0) = e10;
  m.at(1, 1) = e11;
  return m;
}

}  // namespace

const Mat2& mat2_h() {
  static const Mat2 m = make2(r_rt(), r_rt(), r_rt(), -r_rt());
  return m;
}

const Mat2& mat2_s() {
  static const Mat2 m = make2(r_one(), {}, {}, r_i());
  return m;
}

const Mat2& mat2_t() {
  static const Mat2 m = make2(r_one(), {}, {}, r_w());
  return m;
}

const Mat2& mat2_pauli(int p) {
  static const std::array<Mat2, 4> ms = {
      Mat2::identity(),
      make2({}, r_one(), r_one(), {}),
      make2({}, -r_i(), r_i(), {}),
      make2(r_one(), {}, {}, -r_one()),
  };
  return ms[p];
}

const Interpretation<XGen>& x_interpretation() {
  static const Interpretation<XGen> interp = [] {
    Interpretation<XGen> t;
    t.images.resize(kNumXGen);
    const Mat2 id2 = Mat2::identity();
    t.images[static_cast<int>(XGen::W)] = Mat4::scalar(r_w());
    t.images[static_cast<int>(XGen::H0)] = tensor(mat2_h(), id2);
    t.images[static_cast<int>(XGen::H1)] = tensor(id2, mat2_h());
    t.images[static_cast<int>(XGen::S0)] = tensor(mat2_s(), id2);
    t.images[static_cast<int>(XGen::S1)] = tensor(id2, mat2_s());
    t.images[static_cast<int>(XGen::T0)] = tensor(mat2_t(), id2);
    t.images[static_cast<int>(XGen::T1)] = tensor(id2, mat2_t());
    t.images[static_cast<int>(XGen::CZ)] =
        Mat4::diag(r_one(), r_one(), r_one(), -r_one());
    return t;
  }();
  return interp;
}

const Interpretation<YGen>& y_interpretation() {
  static const Interpretation<YGen> interp = [] {
    Interpretation<YGen> t;
    t.images.resize(kNumYGen);
    for (int idx = 0; idx < kNumYGen; ++idx) {
      YGen g = YGen::from_index(idx);
      Mat4 m = Mat4::identity();
      switch (g.kind) {
        case YGen::Kind::Omega:
          m.at(g.j, g.j) = r_w();
          break;
        case YGen::Kind::X:
          m.at(g.j, g.j) = {};
          m.at(g.k, g.k) = {};
          m.at(g.j, g.k) = r_one();
          m.at(g.k, g.j) = r_one();
          break;
        case YGen::Kind::H:
          m.at(g.j, g.j) = r_rt();
          m.at(g.j, g.k) = r_rt();
          m.at(g.k, g.j) = r_rt();
          m.at(g.k, g.k) = -r_rt();
          break;
      }
      t.images[idx] = m;
    }
    return t;
  }();
  return interp;
}

Mat4 interp_x(const XWord& w) { return x_interpretation().eval(w); }
Mat4 interp_y(const YWord& w) { return y_interpretation().eval(w); }

const YWord& translate_f(XGen x) {
  static const std::array<YWord, kNumXGen> table = [] {
    auto om = [](int j) { return YGen::omega(j); };
    auto gh = [](int j, int k) { return YGen::h(j, k); };
    std::array<YWord, kNumXGen> t;
    t[static_cast<int>(XGen::W)] = {om(0), om(1), om(2), om(3)};
    t[static_cast<int>(XGen::H0)] = {gh(1, 3), gh(0, 2)};
    t[static_cast<int>(XGen::H1)] = {gh(2, 3), gh(0, 1)};
    t[static_cast<int>(XGen::S0)] = {om(2), om(2), om(3), om(3)};
    t[static_cast<int>(XGen::S1)] = {om(1), om(1), om(3), om(3)};
    t[static_cast<int>(XGen::T0)] = {om(2), om(3)};
    t[static_cast<int>(XGen::T1)] = {om(1), om(3)};
    t[static_cast<int>(XGen::CZ)] = {om(3), om(3), om(3), om(3)};
    return t;
  }();
  return table[static_cast<int>(x)];
}

CosetParity coset_class(const Mat4& m) {
  RingElt d = det4(m);
  for (int e = 0; e < 8; ++e) {
    if (d == RingElt::omega_pow(e))
      return (e % 2 == 0) ? CosetParity::Even : CosetParity::Odd;
  }
  throw std::domain_error(
      "coset_class: determinant is not a power of omega (input not a "
      "unitary word image): det = " +
      d.str());
}

namespace {

// Controlled/negated-controlled T as matrices; not Clifford+T members, they
// exist only for these checks.
Mat4 ct01() { return Mat4::diag(r_one(), r_one(), r_one(), r_w()); }
Mat4 nct01() { return Mat4::diag(r_one(), r_w(), r_one(), r_one()); }
Mat4 ct10() { return Mat4::diag(r_one(), r_one(), r_one(), r_w()); }
Mat4 nct10() { return Mat4::diag(r_one(), r_one(), r_w(), r_one()); }

Mat4 eval(const char* text) { return interp_x(parse_x(text)); }

Mat4 chain(std::initializer_list<Mat4> ms) {
  Mat4 r = Mat4::identity();
  for (const Mat4& m : ms) r = matmul(r, m);
  return r;
}

struct CtIdent {
  std::string label;
  bool (*check)();
};

const std::array<CtIdent, 8> kCtIdents = {{
    {"CT01 = CT10", [] { return ct01() == ct10(); }},
    {"NCT01 CT01 = T1",
     [] { return chain({nct01(), ct01()}) == eval("T1"); }},
    {"T0 NCT01 = T1 NCT10",
     [] {
       return chain({eval("T0"), nct01()}) == chain({eval("T1"), nct10()});
     }},
    {"NCH01 T1 CH01 = CT01 H1 NCT01",
     [] {
       return chain({eval("NCH01"), eval("T1"), eval("CH01")}) ==
              chain({ct01(), eval("H1"), nct01()});
     }},
    {"CT10 = CT01", [] { return ct10() == ct01(); }},
    {"NCT10 CT10 = T0",
     [] { return chain({nct10(), ct10()}) == eval("T0"); }},
    {"T1 NCT10 = T0 NCT01",
     [] {
       return chain({eval("T1"), nct10()}) == chain({eval("T0"), nct01()});
     }},
    {"NCH10 T0 CH10 = CT10 H0 NCT10",
     [] {
       return chain({eval("NCH10"), eval("T0"), eval("CH10")}) ==
              chain({ct10(), eval("H0"), nct10()});
     }},
}};

}  // namespace

int num_controlled_t_identities() { return static_cast<int>(kCtIdents.size()); }

bool controlled_t_identity(int item) { return kCtIdents.at(item).check(); }

std::string controlled_t_identity_name(int item) {
  return kCtIdents.at(item).label;
}

bool verify_controlled_t_identities() {
  for (int i = 0; i < num_controlled_t_identities(); ++i)
    if (!controlled_t_identity(i)) return false;
  return true;
}

}  // namespace ct2
