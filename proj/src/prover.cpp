#include "ct2/prover.hpp"

#include <chrono>
#include <map>
#include <set>
#include <unordered_map>

#include "ct2/pauli.hpp"
#include "ct2/semantics.hpp"

namespace ct2 {

namespace {

bool shortlex_less(const XWord& a, const XWord& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

Step flip(Step s) {
  s.dir = s.dir == StepDir::L2R ? StepDir::R2L : StepDir::L2R;
  return s;
}

std::vector<Step> reversed_steps(const std::vector<Step>& fwd) {
  std::vector<Step> out(fwd.rbegin(), fwd.rend());
  for (Step& s : out) s = flip(s);
  return out;
}

XWord splice(const XWord& w, size_t pos, size_t cut, const XWord& ins) {
  XWord out;
  out.reserve(w.size() - cut + ins.size());
  out.insert(out.end(), w.begin(), w.begin() + pos);
  out.insert(out.end(), ins.begin(), ins.end());
  out.insert(out.end(), w.begin() + pos + cut, w.end());
  return out;
}

XWord operator+(XWord a, const XWord& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

XWord operator+(XWord a, XGen g) {
  a.push_back(g);
  return a;
}

struct XWordHash {
  size_t operator()(const XWord& w) const {
    uint64_t h = 0x51f15eed;
    for (XGen g : w) h = mix64(h * 8 + static_cast<uint64_t>(g));
    return h;
  }
};

// A shortlex-oriented rewrite rule. Axiom-backed rules carry the direction
// that realizes big -> small; derived rules carry a replayable proof of
// big -> small citing axioms and earlier-registered lemmas.
struct Rule {
  std::string id;
  XWord big, small;
  bool is_axiom = false;
  StepDir axiom_dir = StepDir::L2R;
  std::vector<Step> proof;

  Step step_at(size_t pos) const {
    return {id, is_axiom ? axiom_dir : StepDir::L2R, pos};
  }
};

bool clifford_word(const XWord& w) {
  for (XGen g : w)
    if (g == XGen::T0 || g == XGen::T1) return false;
  return true;
}

}  // namespace

struct Prover::Impl {
  ProveBudget budget;
  const CliffordTable* table = nullptr;

  std::vector<Rule> rules;  // archive; proofs may cite retired entries
  std::vector<bool> active;
  size_t axiom_count = 0;
  std::array<std::vector<uint32_t>, kNumXGen> by_first;
  std::vector<std::vector<uint32_t>> rules_by_len;
  std::vector<uint32_t> pairable;  // active rules short enough to pair
  std::set<std::pair<XWord, XWord>> seen_rules;
  std::set<std::pair<size_t, uint32_t>> agenda;  // (big length, rule index)
  int kb_count = 0;

  // Named non-rule lemmas (Clifford joins, crossings, syllable moves).
  std::vector<Lemma> lemmas;
  std::map<std::string, uint32_t> lemma_ix;
  int lemma_count = 0;

  // Element-indexed canonical words for the staircase, lazily filled.
  std::vector<XWord> nfw;
  bool nfw_init = false;

  explicit Impl(ProveBudget b, const CliffordTable* tbl)
      : budget(std::move(b)), table(tbl) {
    for (const XRelation& rel : relations_S()) {
      if (!budget.allowed_axioms.empty()) {
        bool allowed = false;
        for (const std::string& id : budget.allowed_axioms)
          if (id == rel.id) allowed = true;
        if (!allowed) continue;
      }
      Rule r;
      r.id = rel.id;
      r.is_axiom = true;
      if (shortlex_less(rel.rhs, rel.lhs)) {
        r.big = rel.lhs;
        r.small = rel.rhs;
        r.axiom_dir = StepDir::L2R;
      } else {
        r.big = rel.rhs;
        r.small = rel.lhs;
        r.axiom_dir = StepDir::R2L;
      }
      push_rule(std::move(r));
    }
    axiom_count = rules.size();
    if (!budget.allowed_axioms.empty() &&
        axiom_count != budget.allowed_axioms.size())
      throw std::domain_error("prover: unknown axiom id in allowed_axioms");
  }

  // ---- rewriting core ----

  void push_rule(Rule r) {
    if (r.big.empty() || !shortlex_less(r.small, r.big))
      throw std::logic_error("prover: rule is not shortlex-oriented");
    if (!seen_rules.emplace(r.big, r.small).second) return;
    uint32_t idx = static_cast<uint32_t>(rules.size());
    // Interreduction-lite: retire active rules whose big side the new rule
    // rewrites (necessarily at least as long as the new big side).
    for (size_t len = r.big.size(); len < rules_by_len.size(); ++len) {
      for (uint32_t j : rules_by_len[len]) {
        if (!active[j]) continue;
        if (contains(rules[j].big, r.big)) {
          active[j] = false;
          agenda.erase({rules[j].big.size(), j});
        }
      }
    }
    by_first[static_cast<int>(r.big[0])].push_back(idx);
    if (rules_by_len.size() <= r.big.size())
      rules_by_len.resize(r.big.size() + 1);
    rules_by_len[r.big.size()].push_back(idx);
    if (r.big.size() <= static_cast<size_t>(budget.max_pair_len))
      pairable.push_back(idx);
    agenda.insert({r.big.size(), idx});
    rules.push_back(std::move(r));
    active.push_back(true);
  }

  static bool contains(const XWord& hay, const XWord& needle) {
    if (needle.size() > hay.size()) return false;
    for (size_t p = 0; p + needle.size() <= hay.size(); ++p)
      if (std::equal(needle.begin(), needle.end(), hay.begin() + p))
        return true;
    return false;
  }

  // Leftmost position, lowest rule index; strict shortlex descent.
  std::pair<XWord, std::vector<Step>> normalize(XWord w) const {
    std::vector<Step> steps;
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t pos = 0; pos < w.size() && !changed; ++pos) {
        for (uint32_t ri : by_first[static_cast<int>(w[pos])]) {
          if (!active[ri]) continue;
          const Rule& r = rules[ri];
          if (pos + r.big.size() <= w.size() &&
              std::equal(r.big.begin(), r.big.end(), w.begin() + pos)) {
            steps.push_back(r.step_at(pos));
            w = splice(w, pos, r.big.size(), r.small);
            changed = true;
            break;
          }
        }
      }
    }
    return {std::move(w), std::move(steps)};
  }

  // ---- completion ----

  void process_overlap(const XWord& overlap, const Rule& r1, size_t p1,
                       const Rule& r2, size_t p2) {
    XWord u = splice(overlap, p1, r1.big.size(), r1.small);
    XWord v = splice(overlap, p2, r2.big.size(), r2.small);
    auto [unf, usteps] = normalize(u);
    auto [vnf, vsteps] = normalize(v);
    if (unf == vnf) return;

    std::vector<Step> upath, vpath;
    upath.push_back(r1.step_at(p1));
    upath.insert(upath.end(), usteps.begin(), usteps.end());
    vpath.push_back(r2.step_at(p2));
    vpath.insert(vpath.end(), vsteps.begin(), vsteps.end());

    Rule nr;
    if (shortlex_less(unf, vnf)) {
      nr.big = std::move(vnf);
      nr.small = std::move(unf);
      nr.proof = reversed_steps(vpath);
      nr.proof.insert(nr.proof.end(), upath.begin(), upath.end());
    } else {
      nr.big = std::move(unf);
      nr.small = std::move(vnf);
      nr.proof = reversed_steps(upath);
      nr.proof.insert(nr.proof.end(), vpath.begin(), vpath.end());
    }
    if (static_cast<int>(nr.big.size()) > budget.max_rule_len) return;
    if (seen_rules.count({nr.big, nr.small})) return;
    nr.id = "kb" + std::to_string(++kb_count);
    push_rule(std::move(nr));
  }

  void overlaps_between(uint32_t i, uint32_t j) {
    const XWord big1 = rules[i].big;  // copies: rules may reallocate
    const XWord big2 = rules[j].big;
    if (std::max(big1.size(), big2.size()) >
        static_cast<size_t>(budget.max_pair_len))
      return;
    if (big2.size() <= big1.size()) {
      for (size_t p = 0; p + big2.size() <= big1.size(); ++p) {
        if (i == j && p == 0) continue;
        if (std::equal(big2.begin(), big2.end(), big1.begin() + p))
          process_overlap(big1, rules[i], 0, rules[j], p);
      }
    }
    size_t maxk = std::min(big1.size(), big2.size()) - 1;
    for (size_t k = 1; k <= maxk; ++k) {
      if (std::equal(big2.begin(), big2.begin() + k, big1.end() - k)) {
        XWord overlap = big1;
        overlap.insert(overlap.end(), big2.begin() + k, big2.end());
        process_overlap(overlap, rules[i], 0, rules[j], big1.size() - k);
      }
    }
  }

  bool completion_step() {
    if (agenda.empty()) return false;
    if (kb_count >= budget.max_kb_rules) return false;
    uint32_t i = agenda.begin()->second;
    agenda.erase(agenda.begin());
    if (rules[i].big.size() > static_cast<size_t>(budget.max_pair_len))
      return true;
    size_t bound = pairable.size();  // new rules pair when they pop
    for (size_t jj = 0; jj < bound; ++jj) {
      uint32_t j = pairable[jj];
      if (!active[j] || !active[i]) continue;
      if (kb_count >= budget.max_kb_rules) return false;
      overlaps_between(i, j);
      if (j != i) overlaps_between(j, i);
    }
    return true;
  }

  // ---- bounded bidirectional search ----

  std::optional<std::vector<Step>> closing_search(const XWord& a,
                                                  const XWord& b,
                                                  long node_cap,
                                                  size_t slack = 8) {
    if (a == b) return std::vector<Step>{};
    struct Node {
      XWord word;
      uint32_t parent;
      Step step;
      uint8_t side;
      uint16_t depth;
    };
    std::vector<Node> nodes;
    std::unordered_map<XWord, uint32_t, XWordHash> visited;
    size_t len_cap = std::max(a.size(), b.size()) + slack;

    std::vector<uint32_t> expanders;
    for (uint32_t ri = 0; ri < rules.size(); ++ri)
      if (active[ri] && (rules[ri].is_axiom || rules[ri].big.size() <= 8))
        expanders.push_back(ri);

    auto assemble = [&](uint32_t ai, uint32_t bi) {
      std::vector<Step> fwd;
      for (uint32_t n = ai; nodes[n].depth > 0; n = nodes[n].parent)
        fwd.push_back(nodes[n].step);
      std::reverse(fwd.begin(), fwd.end());
      for (uint32_t n = bi; nodes[n].depth > 0; n = nodes[n].parent)
        fwd.push_back(flip(nodes[n].step));
      return fwd;
    };

    auto push = [&](XWord w, uint32_t parent, Step step, uint8_t side,
                    uint16_t depth) -> std::optional<std::vector<Step>> {
      auto it = visited.find(w);
      if (it != visited.end()) {
        uint32_t other = it->second;
        if (nodes[other].side == side) return std::nullopt;
        nodes.push_back({std::move(w), parent, step, side, depth});
        uint32_t self = static_cast<uint32_t>(nodes.size() - 1);
        return side == 0 ? assemble(self, other) : assemble(other, self);
      }
      visited.emplace(w, static_cast<uint32_t>(nodes.size()));
      nodes.push_back({std::move(w), parent, step, side, depth});
      return std::nullopt;
    };

    push(a, 0, Step{}, 0, 0);
    if (auto hit = push(b, 1, Step{}, 1, 0)) return hit;

    size_t frontier_begin = 0;
    for (int depth = 0; depth < budget.max_search_depth; ++depth) {
      size_t frontier_end = nodes.size();
      if (frontier_begin == frontier_end) break;
      for (size_t ni = frontier_begin; ni < frontier_end; ++ni) {
        if (static_cast<long>(nodes.size()) > node_cap) return std::nullopt;
        XWord w = nodes[ni].word;  // copy: nodes may reallocate
        uint8_t side = nodes[ni].side;
        uint16_t nd = static_cast<uint16_t>(nodes[ni].depth + 1);
        for (size_t pos = 0; pos < w.size(); ++pos) {
          for (uint32_t ri : by_first[static_cast<int>(w[pos])]) {
            if (!active[ri]) continue;
            const Rule& r = rules[ri];
            if (pos + r.big.size() <= w.size() &&
                std::equal(r.big.begin(), r.big.end(), w.begin() + pos)) {
              if (auto hit = push(splice(w, pos, r.big.size(), r.small),
                                  static_cast<uint32_t>(ni), r.step_at(pos),
                                  side, nd))
                return hit;
            }
          }
        }
        for (uint32_t ri : expanders) {
          const Rule& r = rules[ri];
          if (w.size() - r.small.size() + r.big.size() > len_cap) continue;
          for (size_t pos = 0; pos + r.small.size() <= w.size(); ++pos) {
            if (std::equal(r.small.begin(), r.small.end(), w.begin() + pos)) {
              if (auto hit = push(splice(w, pos, r.small.size(), r.big),
                                  static_cast<uint32_t>(ni),
                                  flip(r.step_at(pos)), side, nd))
                return hit;
            }
          }
        }
      }
      frontier_begin = frontier_end;
    }
    return std::nullopt;
  }

  // ---- lemma registry ----

  const Lemma& register_lemma(const std::string& name, XWord start, XWord end,
                              std::vector<Step> steps) {
    Lemma lem{name, std::move(start), std::move(end), std::move(steps)};
    if (!replay_ok(lem))
      throw std::logic_error("prover: lemma '" + name + "' fails replay");
    lemma_ix.emplace(name, static_cast<uint32_t>(lemmas.size()));
    lemmas.push_back(std::move(lem));
    return lemmas.back();
  }

  std::string fresh_lemma_name(const char* kind) {
    return std::string(kind) + std::to_string(++lemma_count);
  }

  // Replays a candidate lemma against axioms, kb rules, and earlier lemmas.
  bool replay_ok(const Lemma& lem) const {
    XWord w = lem.start;
    for (const Step& s : lem.steps) {
      const XWord *l = nullptr, *r = nullptr;
      if (auto it = lemma_ix.find(s.rule_id); it != lemma_ix.end()) {
        l = &lemmas[it->second].start;
        r = &lemmas[it->second].end;
      } else {
        for (const Rule& rule : rules) {
          if (rule.id != s.rule_id) continue;
          if (rule.is_axiom) {
            const XRelation* rel = nullptr;
            for (const XRelation& cand : relations_S())
              if (cand.id == rule.id) rel = &cand;
            l = &rel->lhs;
            r = &rel->rhs;
          } else {
            l = &rule.big;
            r = &rule.small;
          }
          break;
        }
      }
      if (!l) return false;
      const XWord& from = s.dir == StepDir::L2R ? *l : *r;
      const XWord& to = s.dir == StepDir::L2R ? *r : *l;
      if (s.pos + from.size() > w.size() ||
          !std::equal(from.begin(), from.end(), w.begin() + s.pos))
        return false;
      w = splice(w, s.pos, from.size(), to);
    }
    return w == lem.end;
  }

  // Closure over cited lemmas and kb rules, in registration order.
  std::vector<Lemma> lemma_closure(const std::vector<Step>& steps) const {
    std::map<std::string, const Rule*> kb_by_id;
    for (const Rule& r : rules)
      if (!r.is_axiom) kb_by_id.emplace(r.id, &r);

    // Global ordering: kb rules and registered lemmas interleave; a single
    // creation counter orders them. kb ids are "kb<N>", lemma ids carry
    // their own counter. Collect first, then sort by a stable key.
    std::map<std::string, Lemma> needed;
    auto scan = [&](const std::vector<Step>& ss, auto&& self) -> void {
      for (const Step& s : ss) {
        if (needed.count(s.rule_id)) continue;
        if (auto it = lemma_ix.find(s.rule_id); it != lemma_ix.end()) {
          needed.emplace(s.rule_id, lemmas[it->second]);
          self(lemmas[it->second].steps, self);
        } else if (auto kt = kb_by_id.find(s.rule_id); kt != kb_by_id.end()) {
          needed.emplace(s.rule_id, Lemma{kt->second->id, kt->second->big,
                                          kt->second->small,
                                          kt->second->proof});
          self(kt->second->proof, self);
        }
      }
    };
    scan(steps, scan);

    // Replay order: kb rules by index, then registered lemmas by index,
    // except that lemma proofs may cite kb rules added later. Emit in
    // dependency order via repeated passes (the DAG is small).
    std::vector<Lemma> out;
    std::set<std::string> emitted;
    bool progress = true;
    while (out.size() < needed.size() && progress) {
      progress = false;
      for (const auto& [id, lem] : needed) {
        if (emitted.count(id)) continue;
        bool ready = true;
        for (const Step& s : lem.steps)
          if (needed.count(s.rule_id) && !emitted.count(s.rule_id))
            ready = false;
        if (ready) {
          out.push_back(lem);
          emitted.insert(id);
          progress = true;
        }
      }
    }
    if (out.size() != needed.size())
      throw std::logic_error("prover: cyclic lemma dependencies");
    return out;
  }

  // ---- Clifford staircase: total equality proofs for Clifford words ----

  // Seed rules: proven conjugation moves of single generators through the
  // CNOT blocks. They give normalization the power that plain completion
  // reaches only slowly, which keeps staircase discrepancies rare and small.
  bool seeded = false;
  void seed_conjugation_rules() {
    if (seeded) return;
    seeded = true;
    const XWord blocks[] = {parse_x("H1 CZ H1"), parse_x("H0 CZ H0"),
                            parse_x("H0 H1 CZ")};
    const XGen gens[] = {XGen::W,  XGen::H0, XGen::H1,
                         XGen::S0, XGen::S1, XGen::CZ};
    for (const XWord& c : blocks) {
      Mat4 cmat = interp_x(c);
      Mat4 cinv = adjoint(cmat);
      for (XGen g : gens) {
        Mat4 conj = matmul(matmul(cmat, x_interpretation().of(g)), cinv);
        auto d = table->lookup(conj);
        if (!d) continue;
        seed_pair(c + g, *d + c);
      }
    }
    // The three-fold CNOT cycle and the swap identities.
    seed_pair(parse_x("H1 CZ H1 H0 CZ H0 H1 CZ H1 H0 CZ H0 H1 CZ H1 H0 CZ H0"),
              {});
    seed_pair(parse_x("H0 CZ H0 H1 CZ H1 H0 CZ H0 H1 CZ H1 H0 CZ H0 H1 CZ H1"),
              {});
  }

  void seed_pair(const XWord& lhs, const XWord& rhs) {
    auto [la, sa] = normalize(lhs);
    auto [lb, sb] = normalize(rhs);
    if (la == lb) return;
    auto middle = closing_search(la, lb, 250000);
    if (!middle) return;  // seeds are opportunistic
    std::vector<Step> proof = sa;
    proof.insert(proof.end(), middle->begin(), middle->end());
    std::vector<Step> back = reversed_steps(sb);
    proof.insert(proof.end(), back.begin(), back.end());
    Rule nr;  // proof rewrites lhs -> rhs; orient shortlex
    nr.big = lhs;
    nr.small = rhs;
    nr.proof = std::move(proof);
    if (!shortlex_less(nr.small, nr.big)) {
      std::swap(nr.big, nr.small);
      nr.proof = reversed_steps(nr.proof);
    }
    if (seen_rules.count({nr.big, nr.small})) return;
    nr.id = "kb" + std::to_string(++kb_count);
    push_rule(std::move(nr));
  }

  mutable std::unordered_map<Mat4, uint32_t, Mat4Hash> local_index;

  uint32_t table_index(const Mat4& m) const {
    if (local_index.empty()) {
      for (uint32_t i = 0; i < table->order(); ++i)
        local_index.emplace(table->matrix(i), i);
    }
    auto it = local_index.find(m);
    if (it == local_index.end())
      throw std::logic_error("staircase: matrix not in Clifford table");
    return it->second;
  }

  void ensure_nfw() {
    if (!nfw_init) {
      nfw.assign(table->order(), XWord{});
      nfw_valid.assign(table->order(), false);
      nfw_valid[0] = true;  // identity -> empty word
      nfw_init = true;
    }
  }
  std::vector<bool> nfw_valid;

  // Makes two equal-element words join under normalization by finding a
  // proof between their normal forms and retaining it as a rule. Escalates
  // search budgets and interleaves completion; rules persist, so the cost
  // amortizes across the session.
  void resolve_join(const XWord& a0, const XWord& b0) {
    auto try_add = [&](const XWord& x, const XWord& y, long cap,
                       size_t slack) {
      if (x == y) return true;
      if (auto mid = closing_search(x, y, cap, slack)) {
        Rule nr;
        nr.big = x;
        nr.small = y;
        nr.proof = *mid;
        if (!shortlex_less(nr.small, nr.big)) {
          std::swap(nr.big, nr.small);
          nr.proof = reversed_steps(nr.proof);
        }
        if (!seen_rules.count({nr.big, nr.small})) {
          nr.id = "kb" + std::to_string(++kb_count);
          push_rule(std::move(nr));
        }
        return true;
      }
      return false;
    };

    static const long caps[] = {20000, 60000, 150000, 400000, 900000, 1600000};
    for (int attempt = 0; attempt < 10; ++attempt) {
      XWord a = normalize(a0).first;
      XWord b = normalize(b0).first;
      if (a == b) return;
      long cap = caps[std::min(attempt, 5)];
      size_t slack = attempt < 2 ? 8 : (attempt < 4 ? 12 : 16);
      if (try_add(a, b, cap, slack)) continue;
      if (table) {
        if (auto z = table->lookup(interp_x(a))) {
          XWord znf = normalize(*z).first;
          bool za = try_add(a, znf, cap, slack);
          bool zb = try_add(znf, b, cap, slack);
          if (za && zb) continue;
        }
      }
      for (int i = 0; i < 2000 * (attempt + 1); ++i)
        if (!completion_step()) break;
    }
    if (normalize(a0).first == normalize(b0).first) return;
    throw std::runtime_error("prover: could not join Clifford forms '" +
                             print_word(a0) + "' and '" + print_word(b0) +
                             "'");
  }

  // Rewrites a Clifford word to the element's canonical form, recording
  // steps. Canonical form: left-to-right normalization through per-element
  // representatives, self-healing as new rules appear.
  std::pair<XWord, std::vector<Step>> staircase(const XWord& w) {
    ensure_nfw();
    seed_conjugation_rules();
    std::vector<Step> steps;
    XWord prefix;  // canonical form of the processed prefix
    Mat4 m = Mat4::identity();
    for (XGen g : w) {
      XWord ext = prefix + g;
      m = matmul(m, x_interpretation().of(g));
      uint32_t mi = table_index(m);
      auto [nf, nsteps] = normalize(ext);
      if (nfw_valid[mi]) {
        XWord want = normalize(nfw[mi]).first;
        if (nf != want) {
          resolve_join(nf, want);
          std::tie(nf, nsteps) = normalize(ext);
          want = normalize(nfw[mi]).first;
          if (nf != want)
            throw std::logic_error("staircase: join failed after resolve");
        }
        nfw[mi] = nf;
      } else {
        nfw[mi] = nf;
        nfw_valid[mi] = true;
      }
      steps.insert(steps.end(), nsteps.begin(), nsteps.end());
      prefix = std::move(nf);
    }
    return {std::move(prefix), std::move(steps)};
  }

  // Total Clifford equality: staircase both sides to the shared canonical
  // form. Caller guarantees semantic equality.
  std::vector<Step> clifford_join(const XWord& u, const XWord& v) {
    auto [nu, su] = staircase(u);
    auto [nv, sv] = staircase(v);
    if (nu != nv) {
      // Late rules can strand the earlier side on a stale form; one retry
      // re-runs both staircases under the enriched rule set.
      std::tie(nu, su) = staircase(u);
      std::tie(nv, sv) = staircase(v);
    }
    if (nu != nv) {
      resolve_join(nu, nv);
      std::tie(nu, su) = staircase(u);
      std::tie(nv, sv) = staircase(v);
    }
    if (nu != nv)
      throw std::logic_error("prover: Clifford join failed for '" +
                             print_word(u) + "' vs '" + print_word(v) + "'");
    std::vector<Step> out = std::move(su);
    std::vector<Step> back = reversed_steps(sv);
    out.insert(out.end(), back.begin(), back.end());
    return out;
  }

  // Memoized named Clifford lemma u ~ v.
  std::map<std::pair<XWord, XWord>, std::string> cl_memo;
  std::string clifford_lemma(const XWord& u, const XWord& v) {
    auto key = std::make_pair(u, v);
    if (auto it = cl_memo.find(key); it != cl_memo.end()) return it->second;
    std::string name = fresh_lemma_name("cl");
    register_lemma(name, u, v, clifford_join(u, v));
    cl_memo.emplace(key, name);
    return name;
  }

  // ---- syllable tactic ----
  //
  // A syllable for the positive Pauli P is the fixed word C_P T0 C_P^-1
  // with C_P the BFS transporter. Words rewrite into syllable sequences
  // followed by a Clifford tail; the moves below are all named lemmas.

  std::unordered_map<Mat4, XWord, Mat4Hash> centw;  // Z0-centralizer words
  bool centw_init = false;

  void ensure_centralizer() {
    if (centw_init) return;
    // The centralizer of Z(x)I in the Clifford group is generated by the
    // five generators that cross T0; verified against the table below.
    const std::vector<XGen> gens = {XGen::W, XGen::S0, XGen::S1, XGen::H1,
                                    XGen::CZ};
    std::vector<Mat4> mats{Mat4::identity()};
    centw.emplace(mats[0], XWord{});
    std::vector<XWord> words{XWord{}};
    for (size_t lo = 0; lo < mats.size(); ++lo) {
      for (XGen g : gens) {
        Mat4 next = matmul(mats[lo], x_interpretation().of(g));
        if (!centw.count(next)) {
          XWord w = words[lo] + g;
          centw.emplace(next, w);
          mats.push_back(next);
          words.push_back(std::move(w));
        }
      }
    }
    if (centw.size() != 3072)
      throw std::logic_error("syllable: unexpected centralizer order");
    centw_init = true;
  }

  XWord centralizer_word(const Mat4& m) {
    ensure_centralizer();
    auto it = centw.find(m);
    if (it == centw.end())
      throw std::logic_error("syllable: matrix is not in the Z0 centralizer");
    return it->second;
  }

  XWord transporter_inv(const Pauli2& p) {
    auto w = table->lookup(adjoint(interp_x(find_transporter(p))));
    if (!w) throw std::logic_error("syllable: transporter inverse missing");
    return *w;
  }

  std::map<int, XWord> syl_memo;
  const XWord& syl_word(const Pauli2& p) {
    int key = p.p0 * 4 + p.p1;
    auto it = syl_memo.find(key);
    if (it != syl_memo.end()) return it->second;
    const XWord& c = find_transporter(p);
    XWord w = c + XGen::T0 + transporter_inv(p);
    return syl_memo.emplace(key, std::move(w)).first->second;
  }

  // Single-letter T0 crossings "g T0 ~ T0 g" as certificate steps. All are
  // axiom applications except S0, which needs a two-step C14 detour.
  std::string xS0T0_name, xS1T1_name, udc16_name, bridge_name, x0T0_name,
      t0ord_name;

  void ensure_letter_lemmas() {
    if (!xS0T0_name.empty()) return;
    xS0T0_name = fresh_lemma_name("xs");
    register_lemma(xS0T0_name, parse_x("S0 T0"), parse_x("T0 S0"),
                   {{"C14[i=0]", StepDir::R2L, 0}, {"C14[i=0]", StepDir::L2R, 1}});
    xS1T1_name = fresh_lemma_name("xs");
    register_lemma(xS1T1_name, parse_x("S1 T1"), parse_x("T1 S1"),
                   {{"C14[i=1]", StepDir::R2L, 0}, {"C14[i=1]", StepDir::L2R, 1}});
  }

  // Step moving T0 left past the single generator at position pos
  // (pattern "g T0" -> "T0 g").
  Step cross_step_t0(XGen g, size_t pos) {
    ensure_letter_lemmas();
    switch (g) {
      case XGen::W:
        return {"C1[T0]", StepDir::L2R, pos};  // W T0 -> T0 W
      case XGen::S0:
        return {xS0T0_name, StepDir::L2R, pos};
      case XGen::S1:
        return {"C2[T0,S1]", StepDir::R2L, pos};
      case XGen::H1:
        return {"C2[T0,H1]", StepDir::R2L, pos};
      case XGen::CZ:
        return {"C16", StepDir::R2L, pos};
      default:
        throw std::logic_error("syllable: generator does not cross T0");
    }
  }

  // Crossing lemma "m T0 ~ T0 m" for a word over the crossing generators.
  std::map<XWord, std::string> crossw_memo;
  std::string cross_word_lemma(const XWord& m) {
    auto it = crossw_memo.find(m);
    if (it != crossw_memo.end()) return it->second;
    std::vector<Step> steps;
    // Cross the last letter first; the T0 walks leftward.
    for (size_t i = m.size(); i-- > 0;) steps.push_back(cross_step_t0(m[i], i));
    std::string name = fresh_lemma_name("xw");
    register_lemma(name, m + XGen::T0, XWord{XGen::T0} + m, std::move(steps));
    crossw_memo.emplace(m, name);
    return name;
  }

  const std::string& t0_order_lemma() {
    if (t0ord_name.empty()) {
      t0ord_name = fresh_lemma_name("ord");
      register_lemma(t0ord_name, parse_x("T0^8"), {},
                     {{"C14[i=0]", StepDir::L2R, 6},
                      {"C14[i=0]", StepDir::L2R, 4},
                      {"C14[i=0]", StepDir::L2R, 2},
                      {"C14[i=0]", StepDir::L2R, 0},
                      {"C5[i=0]", StepDir::L2R, 0}});
    }
    return t0ord_name;
  }

  // x0 T0 ~ T0 S0^3 W x0, with x0 = H0 S0 S0 H0; the monoid form of
  // X T X = T S^dag w, assembled from C15 and the T0 order.
  const std::string& x0T0_lemma() {
    if (!x0T0_name.empty()) return x0T0_name;
    const XWord x0 = parse_x("H0 S0 S0 H0");
    std::vector<Step> steps;
    steps.push_back({t0_order_lemma(), StepDir::R2L, 0});  // insert T0^8
    steps.push_back({clifford_lemma(x0 + x0, {}), StepDir::R2L, 13});
    steps.push_back({"C15[i=0]", StepDir::L2R, 7});
    steps.push_back({"C14[i=0]", StepDir::L2R, 5});
    steps.push_back({"C14[i=0]", StepDir::L2R, 3});
    steps.push_back({"C14[i=0]", StepDir::L2R, 1});
    x0T0_name = fresh_lemma_name("xn");
    register_lemma(x0T0_name, x0 + XGen::T0,
                   parse_x("T0 S0^3 W") + x0, std::move(steps));
    return x0T0_name;
  }

  // Conjugation move: d followed by the syllable of Q rewrites to the
  // syllable of (d Q d^-1) followed by a residual Clifford word. The
  // residual can be pinned to any word equal to [[syl_Q']]^dag [[d]] [[syl_Q]].
  struct ConjResult {
    std::string name;
    Pauli2 q_out;   // positive
    XWord residual;
  };
  std::map<std::tuple<XWord, int, bool, XWord>, ConjResult> conj_memo;

  ConjResult conj_lemma(const XWord& d, const Pauli2& q,
                        std::optional<XWord> pin = std::nullopt) {
    if (d.empty()) throw std::logic_error("conj_lemma: empty conjugator");
    auto key = std::make_tuple(d, q.p0 * 4 + q.p1, pin.has_value(),
                             pin.value_or(XWord{}));
    if (auto it = conj_memo.find(key); it != conj_memo.end())
      return it->second;

    const XWord& sylq = syl_word(q);
    const XWord& cq = find_transporter(q);
    XWord cq_inv = transporter_inv(q);
    Mat4 dmat = interp_x(d);
    Pauli2 q2 = conj_pauli(dmat, q);
    Pauli2 qp = q2.positive();
    bool neg = q2.sign < 0;
    const XWord& cp = find_transporter(qp);
    XWord cp_inv = transporter_inv(qp);
    const XWord x0 = parse_x("H0 S0 S0 H0");

    // Factor d * C_Q ~ C_P [x0] mc with mc in the centralizer.
    Mat4 mmat = matmul(adjoint(interp_x(cp)), matmul(dmat, interp_x(cq)));
    if (neg) mmat = matmul(interp_x(x0), mmat);
    XWord mc = centralizer_word(mmat);

    XWord factored = cp + (neg ? x0 : XWord{}) + mc;
    std::vector<Step> steps;
    steps.push_back({clifford_lemma(d + cq, factored), StepDir::L2R, 0});
    // C_P [x0] mc T0 cq_inv
    size_t at = cp.size() + (neg ? x0.size() : 0);
    if (!mc.empty())
      steps.push_back({cross_word_lemma(mc), StepDir::L2R, at});
    // C_P [x0] T0 mc cq_inv
    if (neg) steps.push_back({x0T0_lemma(), StepDir::L2R, cp.size()});
    // C_P T0 [S0^3 W x0] mc cq_inv
    steps.push_back(
        {clifford_lemma(cp_inv + cp, {}), StepDir::R2L, cp.size() + 1});
    // syl_P followed by the raw residual.
    XWord raw = cp + (neg ? parse_x("S0^3 W") + x0 : XWord{}) + mc + cq_inv;
    XWord residual = pin.value_or(raw);
    if (residual != raw)
      steps.push_back({clifford_lemma(raw, residual), StepDir::L2R,
                       syl_word(qp).size()});

    ConjResult res{fresh_lemma_name("cj"), qp, residual};
    register_lemma(res.name, d + sylq, syl_word(qp) + residual,
                   std::move(steps));
    conj_memo.emplace(key, res);
    return res;
  }

  // T1 ~ syl_IZ via the T-past-swap axiom C17.
  const std::string& bridge_lemma() {
    if (!bridge_name.empty()) return bridge_name;
    const Pauli2 iz(+1, 0, 3);
    const XWord k = parse_x("H1 CZ H0 H1 CZ H0");
    XWord k_inv = *table->lookup(adjoint(interp_x(k)));
    const XWord& ciz = find_transporter(iz);
    XWord ciz_inv = transporter_inv(iz);
    XWord mc = centralizer_word(matmul(adjoint(interp_x(ciz)), interp_x(k)));

    std::vector<Step> steps;
    steps.push_back({clifford_lemma(k + k_inv, {}), StepDir::R2L, 1});
    steps.push_back({"C17", StepDir::R2L, 0});  // T1 K -> K T0
    steps.push_back({clifford_lemma(k, ciz + mc), StepDir::L2R, 0});
    if (!mc.empty())
      steps.push_back({cross_word_lemma(mc), StepDir::L2R, ciz.size()});
    steps.push_back({clifford_lemma(mc + k_inv, ciz_inv), StepDir::L2R,
                     ciz.size() + 1});
    bridge_name = fresh_lemma_name("br");
    register_lemma(bridge_name, {XGen::T1}, syl_word(iz), std::move(steps));
    return bridge_name;
  }

  // T1 CZ ~ CZ T1, the upside-down C16, via the bridge and a conjugation.
  const std::string& udc16_lemma() {
    if (!udc16_name.empty()) return udc16_name;
    const Pauli2 iz(+1, 0, 3);
    std::vector<Step> steps;
    steps.push_back({bridge_lemma(), StepDir::L2R, 0});
    ConjResult cj = conj_lemma({XGen::CZ}, iz, XWord{XGen::CZ});
    if (!(cj.q_out == iz))
      throw std::logic_error("udc16: CZ does not fix IZ");
    steps.push_back({cj.name, StepDir::R2L, 0});
    steps.push_back({bridge_lemma(), StepDir::R2L, 1});
    udc16_name = fresh_lemma_name("ud");
    register_lemma(udc16_name, parse_x("T1 CZ"), parse_x("CZ T1"),
                   std::move(steps));
    return udc16_name;
  }

  // Step moving T1 left past the generator at pos (pattern "g T1" -> "T1 g").
  Step cross_step_t1(XGen g, size_t pos) {
    ensure_letter_lemmas();
    switch (g) {
      case XGen::W:
        return {"C1[T1]", StepDir::L2R, pos};
      case XGen::S1:
        return {xS1T1_name, StepDir::L2R, pos};
      case XGen::S0:
        return {"C2[S0,T1]", StepDir::L2R, pos};
      case XGen::H0:
        return {"C2[H0,T1]", StepDir::L2R, pos};
      case XGen::CZ:
        return {udc16_lemma(), StepDir::R2L, pos};
      default:
        throw std::logic_error("syllable: generator does not cross T1");
    }
  }

  // Base swaps between the diagonal syllables ZI, IZ, ZZ.
  std::map<std::pair<int, int>, std::string> base_memo;
  std::string base_swap(const Pauli2& a, const Pauli2& b) {
    auto key = std::make_pair(a.p0 * 4 + a.p1, b.p0 * 4 + b.p1);
    if (auto it = base_memo.find(key); it != base_memo.end())
      return it->second;
    const Pauli2 zi(+1, 3, 0), iz(+1, 0, 3), zz(+1, 3, 3);
    std::string name;
    if ((a == zi && b == iz) || (a == iz && b == zi)) {
      std::vector<Step> steps;
      steps.push_back({bridge_lemma(), StepDir::R2L, 1});
      steps.push_back({"C2[T0,T1]", StepDir::L2R, 0});
      steps.push_back({bridge_lemma(), StepDir::L2R, 0});
      name = fresh_lemma_name("bs");
      register_lemma(name, XWord{XGen::T0} + syl_word(iz),
                     syl_word(iz) + XGen::T0, std::move(steps));
      base_memo[{zi.p0 * 4 + zi.p1, iz.p0 * 4 + iz.p1}] = name;
      base_memo[{iz.p0 * 4 + iz.p1, zi.p0 * 4 + zi.p1}] = name;
    } else if ((a == zi && b == zz) || (a == zz && b == zi)) {
      const XWord cx01 = parse_x("H1 CZ H1");
      ConjResult cj = conj_lemma(cx01, Pauli2(+1, 0, 3), cx01);
      if (!(cj.q_out == zz)) throw std::logic_error("base swap: bad frame");
      const XWord& sz = syl_word(zz);
      std::vector<Step> steps;
      steps.push_back({clifford_lemma(cx01 + cx01, {}), StepDir::R2L,
                       1 + sz.size()});
      steps.push_back({cj.name, StepDir::R2L, 1});
      steps.push_back({bridge_lemma(), StepDir::R2L, 1 + cx01.size()});
      // T0 H1 CZ H1 T1 H1 CZ H1: walk T0 rightward (flipped crossings).
      steps.push_back(flip(cross_step_t0(XGen::H1, 0)));
      steps.push_back(flip(cross_step_t0(XGen::CZ, 1)));
      steps.push_back(flip(cross_step_t0(XGen::H1, 2)));
      steps.push_back({"C2[T0,T1]", StepDir::L2R, 3});
      steps.push_back(flip(cross_step_t0(XGen::H1, 4)));
      steps.push_back(flip(cross_step_t0(XGen::CZ, 5)));
      steps.push_back(flip(cross_step_t0(XGen::H1, 6)));
      steps.push_back({bridge_lemma(), StepDir::L2R, cx01.size()});
      steps.push_back({cj.name, StepDir::L2R, 0});
      steps.push_back({clifford_lemma(cx01 + cx01, {}), StepDir::L2R,
                       sz.size()});
      name = fresh_lemma_name("bs");
      register_lemma(name, XWord{XGen::T0} + sz, sz + XGen::T0,
                     std::move(steps));
      base_memo[{zi.p0 * 4 + zi.p1, zz.p0 * 4 + zz.p1}] = name;
      base_memo[{zz.p0 * 4 + zz.p1, zi.p0 * 4 + zi.p1}] = name;
    } else if ((a == iz && b == zz) || (a == zz && b == iz)) {
      const XWord cx10 = parse_x("H0 CZ H0");
      ConjResult cj = conj_lemma(cx10, zi, cx10);
      if (!(cj.q_out == zz)) throw std::logic_error("base swap: bad frame");
      const XWord& sz = syl_word(zz);
      const XWord& siz = syl_word(iz);
      std::vector<Step> steps;
      steps.push_back({clifford_lemma(cx10 + cx10, {}), StepDir::R2L,
                       siz.size() + sz.size()});
      steps.push_back({cj.name, StepDir::R2L, siz.size()});
      steps.push_back({bridge_lemma(), StepDir::R2L, 0});
      steps.push_back(flip(cross_step_t1(XGen::H0, 0)));
      steps.push_back(flip(cross_step_t1(XGen::CZ, 1)));
      steps.push_back(flip(cross_step_t1(XGen::H0, 2)));
      steps.push_back({"C2[T0,T1]", StepDir::R2L, 3});
      steps.push_back(flip(cross_step_t1(XGen::H0, 4)));
      steps.push_back(flip(cross_step_t1(XGen::CZ, 5)));
      steps.push_back(flip(cross_step_t1(XGen::H0, 6)));
      steps.push_back({cj.name, StepDir::L2R, 0});
      steps.push_back({clifford_lemma(cx10 + cx10, {}), StepDir::L2R,
                       sz.size()});
      steps.push_back({bridge_lemma(), StepDir::L2R, sz.size()});
      name = fresh_lemma_name("bs");
      register_lemma(name, siz + sz, sz + siz, std::move(steps));
      base_memo[{iz.p0 * 4 + iz.p1, zz.p0 * 4 + zz.p1}] = name;
      base_memo[{zz.p0 * 4 + zz.p1, iz.p0 * 4 + iz.p1}] = name;
    } else {
      throw std::logic_error("base swap: not a diagonal pair");
    }
    return base_memo.at(key);
  }

  // Frame table: for each commuting positive pair (P,Q), the first table
  // element V (BFS order) conjugating some distinct diagonal pair (D1,D2)
  // to (P,Q) with positive signs.
  struct FrameEntry {
    uint32_t v_index;
    Pauli2 d1, d2;
  };
  std::map<std::pair<int, int>, FrameEntry> frame_map;
  bool frame_init = false;

  void ensure_frames() {
    if (frame_init) return;
    const std::array<Pauli2, 3> diag = {Pauli2(+1, 3, 0), Pauli2(+1, 0, 3),
                                        Pauli2(+1, 3, 3)};
    for (uint32_t i = 0; i < table->order() && frame_map.size() < 15 * 14;
         ++i) {
      const Mat4& v = table->matrix(i);
      Pauli2 img[3] = {conj_pauli(v, diag[0]), conj_pauli(v, diag[1]),
                       conj_pauli(v, diag[2])};
      for (int x = 0; x < 3; ++x) {
        if (img[x].sign < 0) continue;
        for (int y = 0; y < 3; ++y) {
          if (x == y || img[y].sign < 0) continue;
          auto key = std::make_pair(img[x].p0 * 4 + img[x].p1,
                                    img[y].p0 * 4 + img[y].p1);
          if (!frame_map.count(key))
            frame_map.emplace(key, FrameEntry{i, diag[x], diag[y]});
        }
      }
    }
    frame_init = true;
  }

  // Swap lemma syl_P syl_Q ~ syl_Q syl_P for commuting positive P != Q.
  std::map<std::pair<int, int>, std::pair<std::string, StepDir>> swap_memo;
  std::pair<std::string, StepDir> swap_lemma(const Pauli2& p,
                                             const Pauli2& q) {
    auto key = std::make_pair(p.p0 * 4 + p.p1, q.p0 * 4 + q.p1);
    if (auto it = swap_memo.find(key); it != swap_memo.end())
      return it->second;

    auto is_diag = [](const Pauli2& x) {
      return x.p1 == 0 ? x.p0 == 3 : (x.p0 == 0 || x.p0 == 3) && x.p1 == 3;
    };
    std::pair<std::string, StepDir> made;
    if (is_diag(p) && is_diag(q)) {
      // Base lemmas are registered for one orientation; detect which.
      std::string name = base_swap(p, q);
      const Lemma& lem = lemmas[lemma_ix.at(name)];
      StepDir dir = (lem.start == syl_word(p) + syl_word(q)) ? StepDir::L2R
                                                             : StepDir::R2L;
      made = {name, dir};
    } else {
      ensure_frames();
      auto fit = frame_map.find(key);
      if (fit == frame_map.end())
        throw std::logic_error("swap: no frame for " + p.str() + " " +
                               q.str());
      const FrameEntry& fe = fit->second;
      XWord v = table->word(fe.v_index);
      if (v.empty()) throw std::logic_error("swap: identity frame");
      XWord v_inv = *table->lookup(adjoint(interp_x(v)));

      ConjResult up_p = conj_lemma(v_inv, p, v_inv);
      ConjResult up_q = conj_lemma(v_inv, q, v_inv);
      if (!(up_p.q_out == fe.d1) || !(up_q.q_out == fe.d2))
        throw std::logic_error("swap: frame mismatch");
      ConjResult down_q = conj_lemma(v, fe.d2, v);
      ConjResult down_p = conj_lemma(v, fe.d1, v);
      if (!(down_q.q_out == q) || !(down_p.q_out == p))
        throw std::logic_error("swap: frame mismatch (down)");

      const XWord& sp = syl_word(p);
      const XWord& sq = syl_word(q);
      const XWord& sd1 = syl_word(fe.d1);
      const XWord& sd2 = syl_word(fe.d2);
      auto [bname, bdir] = [&]() -> std::pair<std::string, StepDir> {
        std::string n = base_swap(fe.d1, fe.d2);
        const Lemma& lem = lemmas[lemma_ix.at(n)];
        return {n, lem.start == sd1 + sd2 ? StepDir::L2R : StepDir::R2L};
      }();

      std::vector<Step> steps;
      steps.push_back({clifford_lemma(v + v_inv, {}), StepDir::R2L, 0});
      steps.push_back({up_p.name, StepDir::L2R, v.size()});
      steps.push_back({up_q.name, StepDir::L2R, v.size() + sd1.size()});
      steps.push_back({bname, bdir, v.size()});
      steps.push_back({down_q.name, StepDir::L2R, 0});
      steps.push_back({down_p.name, StepDir::L2R, sq.size()});
      steps.push_back({clifford_lemma(v + v_inv, {}), StepDir::L2R,
                       sq.size() + sp.size()});
      std::string name = fresh_lemma_name("sw");
      register_lemma(name, sp + sq, sq + sp, std::move(steps));
      made = {name, StepDir::L2R};
    }
    swap_memo.emplace(key, made);
    swap_memo.emplace(std::make_pair(key.second, key.first),
                      std::make_pair(made.first, made.second == StepDir::L2R
                                                     ? StepDir::R2L
                                                     : StepDir::L2R));
    return made;
  }

  // Rewrites a word into positive syllables followed by a Clifford tail,
  // standardized by commuting-swap sorting and duplicate cancellation.
  struct PipeResult {
    std::vector<Pauli2> rotations;
    XWord word;
    std::vector<Step> steps;
    size_t tail_begin = 0;
  };

  PipeResult syllable_pipeline(const XWord& input) {
    PipeResult out;
    XWord& cur = out.word;
    cur = input;
    std::vector<Step>& steps = out.steps;
    std::vector<size_t> spans;  // syllable start offsets
    std::vector<Pauli2> rots;
    size_t region = 0;  // end of the syllable region

    auto apply = [&](const Step& s) {
      const Lemma* lem = nullptr;
      if (auto it = lemma_ix.find(s.rule_id); it != lemma_ix.end())
        lem = &lemmas[it->second];
      XWord from, to;
      if (lem) {
        from = s.dir == StepDir::L2R ? lem->start : lem->end;
        to = s.dir == StepDir::L2R ? lem->end : lem->start;
      } else {
        const XRelation* rel = nullptr;
        for (const XRelation& cand : relations_S())
          if (cand.id == s.rule_id) rel = &cand;
        if (!rel) throw std::logic_error("pipeline: unknown rule " + s.rule_id);
        from = s.dir == StepDir::L2R ? rel->lhs : rel->rhs;
        to = s.dir == StepDir::L2R ? rel->rhs : rel->lhs;
      }
      if (s.pos + from.size() > cur.size() ||
          !std::equal(from.begin(), from.end(), cur.begin() + s.pos))
        throw std::logic_error("pipeline: step mismatch for " + s.rule_id);
      cur = splice(cur, s.pos, from.size(), to);
      steps.push_back(s);
    };

    // Phase 1: left-to-right syllable extraction.
    for (;;) {
      size_t t = region;
      while (t < cur.size() && cur[t] != XGen::T0 && cur[t] != XGen::T1) ++t;
      if (t == cur.size()) break;
      if (cur[t] == XGen::T1) {
        apply({bridge_lemma(), StepDir::L2R, t});
        continue;  // rescan: the bridged syllable exposes an inner T0
      }
      XWord d(cur.begin() + region, cur.begin() + t);
      if (d.empty()) {
        // Bare T0 is the ZI syllable.
        spans.push_back(region);
        rots.push_back(Pauli2(+1, 3, 0));
        region = t + 1;
        continue;
      }
      ConjResult cj = conj_lemma(d, Pauli2(+1, 3, 0));
      apply({cj.name, StepDir::L2R, region});
      spans.push_back(region);
      rots.push_back(cj.q_out);
      region += syl_word(cj.q_out).size();
    }

    // Phase 2: sort by commuting swaps, cancel adjacent duplicates, repeat.
    auto span_start = [&](size_t i) { return spans[i]; };
    auto resync_spans = [&] {
      size_t at = 0;
      spans.clear();
      for (const Pauli2& p : rots) {
        spans.push_back(at);
        at += syl_word(p).size();
      }
      region = at;
    };
    resync_spans();

    for (;;) {
      // Greedy lexicographic selection realized by adjacent swaps.
      for (size_t k = 0; k < rots.size(); ++k) {
        size_t best = k;
        bool any = false;
        for (size_t j = k; j < rots.size(); ++j) {
          bool movable = true;
          for (size_t q = k; q < j && movable; ++q)
            movable = rots[q].commutes_with(rots[j]);
          if (movable && (!any || rots[j] < rots[best])) {
            best = j;
            any = true;
          }
        }
        for (size_t m = best; m > k; --m) {
          auto [name, dir] = swap_lemma(rots[m - 1], rots[m]);
          apply({name, dir, span_start(m - 1)});
          std::swap(rots[m - 1], rots[m]);
          resync_spans();
        }
      }
      // Cancel the first adjacent duplicate pair.
      size_t hit = rots.size();
      for (size_t i = 0; i + 1 < rots.size(); ++i)
        if (rots[i] == rots[i + 1]) {
          hit = i;
          break;
        }
      if (hit == rots.size()) break;

      const Pauli2 p = rots[hit];
      const XWord& cp = find_transporter(p);
      XWord cp_inv = transporter_inv(p);
      size_t base = span_start(hit);
      if (!cp.empty())
        apply({clifford_lemma(cp_inv + cp, {}), StepDir::L2R,
               base + cp.size() + 1});
      apply({"C14[i=0]", StepDir::L2R, base + cp.size()});
      // Residual Clifford block sits where the two syllables were.
      XWord dword(cur.begin() + base,
                  cur.begin() + base + cp.size() + 1 + cp_inv.size());
      rots.erase(rots.begin() + hit, rots.begin() + hit + 2);
      // Shift the residual right across the remaining syllables.
      size_t dpos = base;
      for (size_t j = hit; j < rots.size(); ++j) {
        ConjResult cj = conj_lemma(dword, rots[j]);
        apply({cj.name, StepDir::L2R, dpos});
        rots[j] = cj.q_out;
        dpos += syl_word(cj.q_out).size();
        dword = cj.residual;
      }
      resync_spans();
    }

    out.rotations = rots;
    out.tail_begin = region;
    return out;
  }
};

Prover::Prover(ProveBudget budget, const CliffordTable* table)
    : impl_(std::make_unique<Impl>(std::move(budget), table)) {}
Prover::~Prover() = default;
Prover::Prover(Prover&&) noexcept = default;
Prover& Prover::operator=(Prover&&) noexcept = default;

size_t Prover::num_rules() const { return impl_->rules.size(); }

void Prover::saturate() {
  while (impl_->completion_step()) {
  }
}

bool Prover::saturate_steps(int n) {
  for (int i = 0; i < n; ++i)
    if (!impl_->completion_step()) return false;
  return true;
}

ProveResult Prover::prove(const XWord& lhs, const XWord& rhs) {
  if (interp_x(lhs) != interp_x(rhs)) return {ProveStatus::NotEqual, {}};

  struct Side {
    XWord word;
    std::vector<Step> steps;
  };
  Side a{lhs, {}}, b{rhs, {}};

  auto renorm = [&](Side& s) {
    auto [nf, steps] = impl_->normalize(s.word);
    s.word = std::move(nf);
    s.steps.insert(s.steps.end(), steps.begin(), steps.end());
  };

  auto assemble = [&](std::vector<Step> middle) {
    Derivation d;
    d.start = lhs;
    d.end = rhs;
    d.steps = a.steps;
    d.steps.insert(d.steps.end(), middle.begin(), middle.end());
    std::vector<Step> back = reversed_steps(b.steps);
    d.steps.insert(d.steps.end(), back.begin(), back.end());
    d.lemmas = impl_->lemma_closure(d.steps);
    CheckResult cr = check(d);
    if (!cr.ok)
      throw std::logic_error("prover: assembled derivation failed replay: " +
                             cr.error);
    return ProveResult{ProveStatus::Proved, std::move(d)};
  };

  renorm(a);
  renorm(b);
  if (a.word == b.word) return assemble({});

  if (impl_->table && clifford_word(a.word) && clifford_word(b.word)) {
    return assemble(impl_->clifford_join(a.word, b.word));
  }

  // Syllable tactic: both sides into standardized rotation syllables; if
  // the sequences coincide the Clifford tails must agree too.
  if (impl_->table) {
    auto pa = impl_->syllable_pipeline(a.word);
    auto pb = impl_->syllable_pipeline(b.word);
    if (pa.rotations == pb.rotations) {
      XWord ta(pa.word.begin() + pa.tail_begin, pa.word.end());
      XWord tb(pb.word.begin() + pb.tail_begin, pb.word.end());
      std::vector<Step> middle = std::move(pa.steps);
      for (Step s : impl_->clifford_join(ta, tb)) {
        s.pos += pa.tail_begin;
        middle.push_back(s);
      }
      std::vector<Step> back = reversed_steps(pb.steps);
      middle.insert(middle.end(), back.begin(), back.end());
      return assemble(std::move(middle));
    }
  }

  // Fall back to completion plus bounded bidirectional search.
  for (;;) {
    renorm(a);
    renorm(b);
    if (a.word == b.word) return assemble({});
    bool advanced = false;
    for (int i = 0; i < 200 && impl_->completion_step(); ++i) advanced = true;
    if (!advanced) break;
  }

  if (auto middle =
          impl_->closing_search(a.word, b.word, impl_->budget.max_search_nodes))
    return assemble(std::move(*middle));
  return {ProveStatus::Exhausted, {}};
}

std::vector<BenchmarkResult> prove_benchmarks(const rs::CliffordTInstance& inst,
                                              const CliffordTable& table,
                                              const ProveBudget& budget) {
  using Clock = std::chrono::steady_clock;
  std::vector<BenchmarkResult> out;

  auto run = [&out](const std::string& name, Prover& p, const XWord& lhs,
                    const XWord& rhs) {
    BenchmarkResult b;
    b.name = name;
    auto t0 = Clock::now();
    ProveResult r = p.prove(lhs, rhs);
    b.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                   Clock::now() - t0)
                   .count();
    b.status = r.status;
    if (r.derivation) {
      b.step_count = r.derivation->steps.size();
      b.lemma_count = r.derivation->lemmas.size();
      b.check_passed = static_cast<bool>(check(*r.derivation));
      b.certificate = serialize(*r.derivation);
    }
    out.push_back(std::move(b));
  };

  {
    ProveBudget restricted = budget;
    restricted.allowed_axioms = {"C14[i=0]", "C16"};
    Prover p(restricted);  // axiom-restricted: no table tactics
    run("C8-from-C14-C16", p, parse_x("S0 CZ"), parse_x("CZ S0"));
  }

  Prover p(budget, &table);
  run("upside-down-C16", p, parse_x("T1 CZ"), parse_x("CZ T1"));

  run("order-W^8", p, parse_x("W^8"), {});
  run("order-H0^2", p, parse_x("H0^2"), {});
  run("order-H1^2", p, parse_x("H1^2"), {});
  run("order-S0^4", p, parse_x("S0^4"), {});
  run("order-S1^4", p, parse_x("S1^4"), {});
  run("order-CZ^2", p, parse_x("CZ^2"), {});
  run("order-T0^8", p, parse_x("T0^8"), {});
  run("order-T1^8", p, parse_x("T1^8"), {});

  auto obligations = inst.obligations();
  for (const auto& ob : obligations) {
    if (ob.kind != rs::ObligationKind::CondA) continue;
    run("condA-" + ob.id, p, rs::CliffordTInstance::to_xword(ob.lhs),
        rs::CliffordTInstance::to_xword(ob.rhs));
  }
  auto clifford_only = [](const std::vector<int>& w) {
    for (int g : w)
      if (g == static_cast<int>(XGen::T0) || g == static_cast<int>(XGen::T1))
        return false;
    return true;
  };
  for (const auto& ob : obligations) {
    if (ob.kind != rs::ObligationKind::CondB) continue;
    if (!clifford_only(ob.lhs) || !clifford_only(ob.rhs)) continue;
    run("condB-" + ob.id + "-c" + std::to_string(ob.coset), p,
        rs::CliffordTInstance::to_xword(ob.lhs),
        rs::CliffordTInstance::to_xword(ob.rhs));
  }
  return out;
}

}  // namespace ct2
