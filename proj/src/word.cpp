#include "ct2/word.hpp"

#include <array>
#include <cctype>
#include <map>

namespace ct2 {

const char* name(XGen g) {
  static const char* names[kNumXGen] = {"W",  "H0", "H1", "S0",
                                        "S1", "T0", "T1", "CZ"};
  return names[static_cast<int>(g)];
}

namespace {

// Pair index over 0<=j<k<=3 in order (0,1),(0,2),(0,3),(1,2),(1,3),(2,3).
int pair_index(int j, int k) {
  static const int tbl[4][4] = {{-1, 0, 1, 2}, {-1, -1, 3, 4},
                                {-1, -1, -1, 5}, {-1, -1, -1, -1}};
  return tbl[j][k];
}

const std::array<std::pair<int, int>, 6> kPairs = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

}  // namespace

YGen YGen::omega(int j) {
  if (j < 0 || j > 3) throw std::domain_error("YGen: index out of range");
  YGen g;
  g.kind = Kind::Omega;
  g.j = static_cast<uint8_t>(j);
  return g;
}

YGen YGen::x(int j, int k) {
  if (j < 0 || k > 3 || j >= k) throw std::domain_error("YGen: need 0<=j<k<=3");
  YGen g;
  g.kind = Kind::X;
  g.j = static_cast<uint8_t>(j);
  g.k = static_cast<uint8_t>(k);
  return g;
}

YGen YGen::h(int j, int k) {
  if (j < 0 || k > 3 || j >= k) throw std::domain_error("YGen: need 0<=j<k<=3");
  YGen g;
  g.kind = Kind::H;
  g.j = static_cast<uint8_t>(j);
  g.k = static_cast<uint8_t>(k);
  return g;
}

int YGen::index() const {
  switch (kind) {
    case Kind::Omega:
      return j;
    case Kind::X:
      return 4 + pair_index(j, k);
    default:
      return 10 + pair_index(j, k);
  }
}

YGen YGen::from_index(int idx) {
  if (idx < 0 || idx >= kNumYGen)
    throw std::domain_error("YGen::from_index: out of range");
  if (idx < 4) return omega(idx);
  if (idx < 10) return x(kPairs[idx - 4].first, kPairs[idx - 4].second);
  return h(kPairs[idx - 10].first, kPairs[idx - 10].second);
}

std::string YGen::str() const {
  switch (kind) {
    case Kind::Omega:
      return "w[" + std::to_string(j) + "]";
    case Kind::X:
      return "X[" + std::to_string(j) + "," + std::to_string(k) + "]";
    default:
      return "H[" + std::to_string(j) + "," + std::to_string(k) + "]";
  }
}

namespace {

XWord reps(XGen g, int n) { return XWord(static_cast<size_t>(n), g); }

XWord operator+(XWord a, const XWord& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

XWord operator+(XWord a, XGen g) {
  a.push_back(g);
  return a;
}

const std::map<std::string, XWord>& macro_table() {
  using enum XGen;
  static const std::map<std::string, XWord> tbl = [] {
    std::map<std::string, XWord> m;
    m["Td0"] = reps(T0, 7);
    m["Td1"] = reps(T1, 7);
    m["Sd0"] = reps(S0, 3);
    m["Sd1"] = reps(S1, 3);
    // CNOT with control on qubit 0 / qubit 1; H's sandwich the target wire.
    m["CX01"] = XWord{H1, CZ, H1};
    m["CX10"] = XWord{H0, CZ, H0};
    // Negated control: CNOT followed by X = HSSH on the target.
    m["NCX01"] = m["CX01"] + XWord{H1, S1, S1, H1};
    m["NCX10"] = m["CX10"] + XWord{H0, S0, S0, H0};
    // Controlled-H: S H T on the target, CNOT, then T^dag H S^dag.
    m["CH01"] = XWord{S1, H1, T1} + m["CX01"] + reps(T1, 7) + H1 + reps(S1, 3);
    m["CH10"] = XWord{S0, H0, T0} + m["CX10"] + reps(T0, 7) + H0 + reps(S0, 3);
    m["NCH01"] = m["CH01"] + H1;
    m["NCH10"] = m["CH10"] + H0;
    return m;
  }();
  return tbl;
}

XWord macro(const std::string& tok) { return macro_table().at(tok); }

}  // namespace

bool is_macro(const std::string& tok) { return macro_table().count(tok) > 0; }

const XWord& macro_expansion(const std::string& tok) {
  return macro_table().at(tok);
}

const std::vector<XRelation>& relations_S() {
  using enum XGen;
  static const std::vector<XRelation> rels = [] {
    std::vector<XRelation> rs;
    auto add = [&rs](std::string id, XWord lhs, XWord rhs) {
      rs.push_back({std::move(id), std::move(lhs), std::move(rhs)});
    };

    // (C1) the scalar commutes with every other generator.
    for (XGen a : {H0, H1, S0, S1, T0, T1, CZ})
      add(std::string("C1[") + name(a) + "]", XWord{W, a}, XWord{a, W});

    // (C2) gates on disjoint qubits commute.
    for (XGen a : {H0, S0, T0})
      for (XGen b : {H1, S1, T1})
        add(std::string("C2[") + name(a) + "," + name(b) + "]", XWord{a, b},
            XWord{b, a});

    // (C3)-(C7) orders of the Clifford generators.
    add("C3", reps(W, 8), {});
    for (int i = 0; i < 2; ++i) {
      XGen h = i ? H1 : H0, s = i ? S1 : S0;
      std::string ix = "[i=" + std::to_string(i) + "]";
      add("C4" + ix, XWord{h, h}, {});
      add("C5" + ix, reps(s, 4), {});
      add("C6" + ix, XWord{s, h, s, h, s, h}, XWord{W});
    }
    add("C7", XWord{CZ, CZ}, {});

    // (C8)-(C13) remaining Clifford relations, in diagram order.
    add("C8", XWord{S0, CZ}, XWord{CZ, S0});
    add("C9", XWord{S1, CZ}, XWord{CZ, S1});
    add("C10", XWord{H0, S0, S0, H0, CZ}, XWord{CZ, H0, S1, S0, S1, S0, H0});
    add("C11", XWord{H1, S1, S1, H1, CZ}, XWord{CZ, S0, H1, S0, S1, S1, H1});
    add("C12", XWord{CZ, H0, CZ},
        XWord{S0, H0, CZ, S0, S1, H0, S0} + reps(W, 7));
    add("C13", XWord{CZ, H1, CZ},
        XWord{S1, H1, CZ, S0, S1, H1, S1} + reps(W, 7));

    // (C14)-(C17) "obvious" T relations.
    for (int i = 0; i < 2; ++i) {
      XGen h = i ? H1 : H0, s = i ? S1 : S0, t = i ? T1 : T0;
      std::string ix = "[i=" + std::to_string(i) + "]";
      add("C14" + ix, XWord{t, t}, XWord{s});
      add("C15" + ix, XWord{t, h, s, s, h, t, h, s, s, h}, XWord{W});
    }
    add("C16", XWord{T0, CZ}, XWord{CZ, T0});
    add("C17", XWord{H1, CZ, H0, H1, CZ, H0, T0},
        XWord{T1, H1, CZ, H0, H1, CZ, H0});

    // (C18)-(C20) the non-obvious T relations, via the abbreviations.
    add("C18",
        macro("CX01") + XWord{T1, H1} + macro("Td1") + macro("NCX01") +
            XWord{T1, H1} + macro("Td1"),
        XWord{T1, H1} + macro("Td1") + macro("NCX01") + XWord{T1, H1} +
            macro("Td1") + macro("CX01"));
    add("C19",
        macro("CX01") + XWord{T1, H1, T1, H1} + macro("Td1") + macro("NCX01") +
            XWord{T1, H1} + macro("Td1") + H1 + macro("Td1"),
        XWord{T1, H1, T1, H1} + macro("Td1") + macro("NCX01") + XWord{T1, H1} +
            macro("Td1") + H1 + macro("Td1") + macro("CX01"));
    add("C20",
        macro("NCH01") + T1 + macro("CH01") + macro("NCH10") + T0 +
            macro("CH10"),
        macro("NCH10") + T0 + macro("CH10") + macro("NCH01") + T1 +
            macro("CH01"));

    return rs;
  }();
  return rels;
}

const std::vector<YRelation>& relations_R() {
  static const std::vector<YRelation> rels = [] {
    std::vector<YRelation> rs;
    auto add = [&rs](std::string id, YWord lhs, YWord rhs) {
      rs.push_back({std::move(id), std::move(lhs), std::move(rhs)});
    };
    auto om = [](int j) { return YGen::omega(j); };
    auto gx = [](int j, int k) { return YGen::x(j, k); };
    auto gh = [](int j, int k) { return YGen::h(j, k); };
    auto pow = [](YGen g, int n) { return YWord(static_cast<size_t>(n), g); };
    auto js = [](std::initializer_list<std::pair<const char*, int>> ix) {
      std::string s = "[";
      bool first = true;
      for (auto [n, v] : ix) {
        if (!first) s += ",";
        first = false;
        s += std::string(n) + "=" + std::to_string(v);
      }
      return s + "]";
    };

    // (G1)-(G3) orders of the generators.
    for (int j = 0; j < 4; ++j) add("G1" + js({{"j", j}}), pow(om(j), 8), {});
    for (auto [j, k] : kPairs)
      add("G2" + js({{"j", j}, {"k", k}}), YWord{gh(j, k), gh(j, k)}, {});
    for (auto [j, k] : kPairs)
      add("G3" + js({{"j", j}, {"k", k}}), YWord{gx(j, k), gx(j, k)}, {});

    // (G4)-(G9) disjoint generators commute.
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        if (j != k)
          add("G4" + js({{"j", j}, {"k", k}}), YWord{om(j), om(k)},
              YWord{om(k), om(j)});
    for (auto [j, k] : kPairs)
      for (int l = 0; l < 4; ++l)
        if (l != j && l != k)
          add("G5" + js({{"j", j}, {"k", k}, {"l", l}}),
              YWord{om(l), gh(j, k)}, YWord{gh(j, k), om(l)});
    for (auto [j, k] : kPairs)
      for (int l = 0; l < 4; ++l)
        if (l != j && l != k)
          add("G6" + js({{"j", j}, {"k", k}, {"l", l}}),
              YWord{om(l), gx(j, k)}, YWord{gx(j, k), om(l)});
    for (auto [j, k] : kPairs)
      for (auto [l, t] : kPairs)
        if (l != j && l != k && t != j && t != k)
          add("G7" + js({{"j", j}, {"k", k}, {"l", l}, {"t", t}}),
              YWord{gh(j, k), gh(l, t)}, YWord{gh(l, t), gh(j, k)});
    for (auto [j, k] : kPairs)
      for (auto [l, t] : kPairs)
        if (l != j && l != k && t != j && t != k)
          add("G8" + js({{"j", j}, {"k", k}, {"l", l}, {"t", t}}),
              YWord{gh(j, k), gx(l, t)}, YWord{gx(l, t), gh(j, k)});
    for (auto [j, k] : kPairs)
      for (auto [l, t] : kPairs)
        if (l != j && l != k && t != j && t != k)
          add("G9" + js({{"j", j}, {"k", k}, {"l", l}, {"t", t}}),
              YWord{gx(j, k), gx(l, t)}, YWord{gx(l, t), gx(j, k)});

    // (G10)-(G15) X permutes indices.
    for (auto [j, k] : kPairs)
      add("G10" + js({{"j", j}, {"k", k}}), YWord{gx(j, k), om(k)},
          YWord{om(j), gx(j, k)});
    for (auto [j, k] : kPairs)
      add("G11" + js({{"j", j}, {"k", k}}), YWord{gx(j, k), om(j)},
          YWord{om(k), gx(j, k)});
    for (int j = 0; j < 4; ++j)
      for (int k = j + 1; k < 4; ++k)
        for (int l = k + 1; l < 4; ++l) {
          add("G12" + js({{"j", j}, {"k", k}, {"l", l}}),
              YWord{gx(j, k), gx(j, l)}, YWord{gx(k, l), gx(j, k)});
          add("G14" + js({{"j", j}, {"k", k}, {"l", l}}),
              YWord{gx(j, k), gh(j, l)}, YWord{gh(k, l), gx(j, k)});
        }
    for (int l = 0; l < 4; ++l)
      for (int j = l + 1; j < 4; ++j)
        for (int k = j + 1; k < 4; ++k) {
          add("G13" + js({{"j", j}, {"k", k}, {"l", l}}),
              YWord{gx(j, k), gx(l, j)}, YWord{gx(l, k), gx(j, k)});
          add("G15" + js({{"j", j}, {"k", k}, {"l", l}}),
              YWord{gx(j, k), gh(l, j)}, YWord{gh(l, k), gx(j, k)});
        }

    // (G16)-(G17) omega[j] omega[k] is diagonal on the pair.
    for (auto [j, k] : kPairs)
      add("G16" + js({{"j", j}, {"k", k}}),
          YWord{om(j), om(k), gx(j, k)}, YWord{gx(j, k), om(j), om(k)});
    for (auto [j, k] : kPairs)
      add("G17" + js({{"j", j}, {"k", k}}),
          YWord{om(j), om(k), gh(j, k)}, YWord{gh(j, k), om(j), om(k)});

    // (G18)-(G20) relations for H.
    for (auto [j, k] : kPairs)
      add("G18" + js({{"j", j}, {"k", k}}), YWord{gh(j, k), gx(j, k)},
          concat(pow(om(k), 4), YWord{gh(j, k)}));
    for (auto [j, k] : kPairs)
      add("G19" + js({{"j", j}, {"k", k}}),
          concat(YWord{gh(j, k)}, concat(pow(om(j), 2), YWord{gh(j, k)})),
          concat(pow(om(j), 6),
                 concat(YWord{gh(j, k)},
                        concat(pow(om(j), 3), pow(om(k), 5)))));
    add("G20[j=0,k=1,l=2,t=3]",
        YWord{gh(0, 1), gh(2, 3), gh(0, 2), gh(1, 3)},
        YWord{gh(0, 2), gh(1, 3), gh(0, 1), gh(2, 3)});

    return rs;
  }();
  return rels;
}

namespace {

struct Token {
  std::string text;
  size_t column;  // 1-based
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> toks;
  size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    toks.push_back({text.substr(start, i - start), start + 1});
  }
  return toks;
}

// Splits a token into base and exponent; "^" with no base is an error.
std::pair<std::string, long> split_exponent(const Token& tok) {
  const std::string& t = tok.text;
  size_t caret = t.find('^');
  if (caret == std::string::npos) return {t, 1};
  if (caret == 0) throw ParseError(tok.column, "dangling exponent '" + t + "'");
  std::string base = t.substr(0, caret);
  std::string exp = t.substr(caret + 1);
  if (exp.empty()) throw ParseError(tok.column, "missing exponent in '" + t + "'");
  for (char c : exp)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError(tok.column, "bad exponent in '" + t + "'");
  return {base, std::stol(exp)};
}

int parse_digit(const Token& tok, char c) {
  if (c < '0' || c > '9')
    throw ParseError(tok.column, "bad index in '" + tok.text + "'");
  int v = c - '0';
  if (v > 3) throw ParseError(tok.column, "index out of range in '" + tok.text + "'");
  return v;
}

}  // namespace

XWord parse_x(const std::string& text) {
  static const std::map<std::string, XGen> plain = {
      {"W", XGen::W},   {"H0", XGen::H0}, {"H1", XGen::H1}, {"S0", XGen::S0},
      {"S1", XGen::S1}, {"T0", XGen::T0}, {"T1", XGen::T1}, {"CZ", XGen::CZ}};
  XWord w;
  for (const Token& tok : tokenize(text)) {
    auto [base, exp] = split_exponent(tok);
    XWord unit;
    if (base == "eps") {
      // empty
    } else if (auto it = plain.find(base); it != plain.end()) {
      unit.push_back(it->second);
    } else if (is_macro(base)) {
      unit = macro_expansion(base);
    } else {
      throw ParseError(tok.column, "unknown token '" + base + "'");
    }
    for (long r = 0; r < exp; ++r) w.insert(w.end(), unit.begin(), unit.end());
  }
  return w;
}

YWord parse_y(const std::string& text) {
  YWord w;
  for (const Token& tok : tokenize(text)) {
    auto [base, exp] = split_exponent(tok);
    YWord unit;
    if (base == "eps") {
      // empty
    } else if (base.size() == 4 && base.compare(0, 2, "w[") == 0 &&
               base.back() == ']') {
      unit.push_back(YGen::omega(parse_digit(tok, base[2])));
    } else if (base.size() == 6 && (base[0] == 'X' || base[0] == 'H') &&
               base[1] == '[' && base[3] == ',' && base[5] == ']') {
      int j = parse_digit(tok, base[2]);
      int k = parse_digit(tok, base[4]);
      if (j >= k)
        throw ParseError(tok.column, "need j<k in '" + base + "'");
      unit.push_back(base[0] == 'X' ? YGen::x(j, k) : YGen::h(j, k));
    } else {
      throw ParseError(tok.column, "unknown token '" + base + "'");
    }
    for (long r = 0; r < exp; ++r) w.insert(w.end(), unit.begin(), unit.end());
  }
  return w;
}

namespace {

template <typename G, typename NameFn>
std::string print_runs(const Word<G>& w, NameFn gen_name) {
  if (w.empty()) return "eps";
  std::string s;
  size_t i = 0;
  while (i < w.size()) {
    size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!s.empty()) s += " ";
    s += gen_name(w[i]);
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

}  // namespace

std::string print_word(const XWord& w) {
  return print_runs(w, [](XGen g) { return std::string(name(g)); });
}

std::string print_word(const YWord& w) {
  return print_runs(w, [](const YGen& g) { return g.str(); });
}

std::string relation_line(const XRelation& r) {
  return r.id + ": " + print_word(r.lhs) + " = " + print_word(r.rhs);
}

std::string relation_line(const YRelation& r) {
  return r.id + ": " + print_word(r.lhs) + " = " + print_word(r.rhs);
}

}  // namespace ct2
