#include "ct2/cert.hpp"

#include <map>
#include <sstream>

namespace ct2 {

namespace {

using RuleTable = std::map<std::string, std::pair<XWord, XWord>>;

const RuleTable& axiom_table() {
  static const RuleTable tbl = [] {
    RuleTable t;
    for (const XRelation& r : relations_S()) t.emplace(r.id, std::make_pair(r.lhs, r.rhs));
    return t;
  }();
  return tbl;
}

// Replays steps in place; returns the index of the first failing step, or
// -1 on success.
long replay(XWord& w, const std::vector<Step>& steps, const RuleTable& rules,
            std::string& error) {
  for (size_t i = 0; i < steps.size(); ++i) {
    const Step& s = steps[i];
    auto it = rules.find(s.rule_id);
    if (it == rules.end()) {
      error = "unknown rule '" + s.rule_id + "'";
      return static_cast<long>(i);
    }
    const XWord& from = s.dir == StepDir::L2R ? it->second.first : it->second.second;
    const XWord& to = s.dir == StepDir::L2R ? it->second.second : it->second.first;
    if (s.pos + from.size() > w.size() ||
        !std::equal(from.begin(), from.end(), w.begin() + s.pos)) {
      error = "rule '" + s.rule_id + "' does not match at position " +
              std::to_string(s.pos);
      return static_cast<long>(i);
    }
    XWord next;
    next.reserve(w.size() - from.size() + to.size());
    next.insert(next.end(), w.begin(), w.begin() + s.pos);
    next.insert(next.end(), to.begin(), to.end());
    next.insert(next.end(), w.begin() + s.pos + from.size(), w.end());
    w = std::move(next);
  }
  return -1;
}

}  // namespace

CheckResult check(const Derivation& d) {
  CheckResult res;
  RuleTable rules = axiom_table();
  for (const Lemma& lem : d.lemmas) {
    if (rules.count(lem.name)) {
      res.error = "duplicate rule name '" + lem.name + "'";
      res.failing_lemma = lem.name;
      res.failing_step = 0;
      return res;
    }
    XWord w = lem.start;
    long bad = replay(w, lem.steps, rules, res.error);
    if (bad >= 0) {
      res.failing_lemma = lem.name;
      res.failing_step = bad;
      return res;
    }
    if (w != lem.end) {
      res.error = "lemma replay ended at '" + print_word(w) + "', expected '" +
                  print_word(lem.end) + "'";
      res.failing_lemma = lem.name;
      res.failing_step = static_cast<long>(lem.steps.size());
      return res;
    }
    rules.emplace(lem.name, std::make_pair(lem.start, lem.end));
  }

  XWord w = d.start;
  long bad = replay(w, d.steps, rules, res.error);
  if (bad >= 0) {
    res.failing_step = bad;
    return res;
  }
  if (w != d.end) {
    res.error = "replay ended at '" + print_word(w) + "', expected '" +
                print_word(d.end) + "'";
    res.failing_step = static_cast<long>(d.steps.size());
    return res;
  }
  res.ok = true;
  return res;
}

namespace {

std::string step_line(const Step& s) {
  return s.rule_id + (s.dir == StepDir::L2R ? " L2R @" : " R2L @") +
         std::to_string(s.pos);
}

struct LineParser {
  std::istringstream in;
  size_t lineno = 0;

  explicit LineParser(const std::string& text) : in(text) {}

  bool next(std::string& line) {
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw std::runtime_error("certificate line " + std::to_string(lineno) +
                             ": " + msg);
  }
};

bool starts_with(const std::string& s, const char* prefix) {
  return s.rfind(prefix, 0) == 0;
}

Step parse_step_line(LineParser& p, const std::string& line) {
  std::istringstream ss(line);
  std::string id, dir, at;
  ss >> id >> dir >> at;
  if (id.empty() || (dir != "L2R" && dir != "R2L") || at.size() < 2 ||
      at[0] != '@')
    p.fail("bad step '" + line + "'");
  Step s;
  s.rule_id = id;
  s.dir = dir == "L2R" ? StepDir::L2R : StepDir::R2L;
  try {
    s.pos = std::stoul(at.substr(1));
  } catch (const std::exception&) {
    p.fail("bad position in '" + line + "'");
  }
  return s;
}

}  // namespace

std::string serialize(const Derivation& d) {
  std::string out;
  out += "start: " + print_word(d.start) + "\n";
  out += "end: " + print_word(d.end) + "\n";
  for (const Lemma& lem : d.lemmas) {
    out += "lemma " + lem.name + " {\n";
    out += "start: " + print_word(lem.start) + "\n";
    out += "end: " + print_word(lem.end) + "\n";
    for (const Step& s : lem.steps) out += step_line(s) + "\n";
    out += "}\n";
  }
  for (const Step& s : d.steps) out += step_line(s) + "\n";
  return out;
}

Derivation parse_derivation(const std::string& text) {
  LineParser p(text);
  Derivation d;
  std::string line;
  if (!p.next(line) || !starts_with(line, "start: "))
    p.fail("expected 'start: <word>'");
  d.start = parse_x(line.substr(7));
  if (!p.next(line) || !starts_with(line, "end: "))
    p.fail("expected 'end: <word>'");
  d.end = parse_x(line.substr(5));

  while (p.next(line)) {
    if (starts_with(line, "lemma ")) {
      size_t brace = line.find('{');
      if (brace == std::string::npos) p.fail("lemma header without '{'");
      Lemma lem;
      lem.name = line.substr(6, brace - 6);
      while (!lem.name.empty() && lem.name.back() == ' ') lem.name.pop_back();
      if (lem.name.empty()) p.fail("lemma without a name");
      if (!p.next(line) || !starts_with(line, "start: "))
        p.fail("lemma: expected 'start: <word>'");
      lem.start = parse_x(line.substr(7));
      if (!p.next(line) || !starts_with(line, "end: "))
        p.fail("lemma: expected 'end: <word>'");
      lem.end = parse_x(line.substr(5));
      bool closed = false;
      while (p.next(line)) {
        if (line == "}") {
          closed = true;
          break;
        }
        lem.steps.push_back(parse_step_line(p, line));
      }
      if (!closed) p.fail("unterminated lemma block");
      d.lemmas.push_back(std::move(lem));
    } else {
      d.steps.push_back(parse_step_line(p, line));
    }
  }
  return d;
}

Derivation read_derivation(std::istream& is) {
  std::ostringstream ss;
  ss << is.rdbuf();
  return parse_derivation(ss.str());
}

}  // namespace ct2
