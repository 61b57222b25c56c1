#include "ct2/rs.hpp"

#include <fstream>
#include <sstream>

namespace ct2::rs {

std::vector<int> f_star(const Instance& inst, const std::vector<int>& xword) {
  std::vector<int> out;
  for (int x : xword) {
    const auto& img = inst.f.at(x);
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

ThreadResult h_star_star(const Instance& inst, int c0,
                         const std::vector<int>& yword) {
  ThreadResult r;
  r.state = c0;
  for (int y : yword) {
    const auto& [w, next] = inst.h.at(r.state).at(y);
    r.word.insert(r.word.end(), w.begin(), w.end());
    r.state = next;
  }
  return r;
}

std::vector<Obligation> generate_obligations(
    const Instance& inst, const std::vector<IndexRelation>& relations) {
  std::vector<Obligation> obs;
  for (int x = 0; x < inst.num_x; ++x) {
    ThreadResult t = h_star_star(inst, 0, f_star(inst, {x}));
    Obligation ob;
    ob.kind = ObligationKind::CondA;
    ob.id = inst.x_names.at(x);
    ob.coset = 0;
    ob.lhs = std::move(t.word);
    ob.rhs = {x};
    ob.coset_consistent = (t.state == 0);
    if (!ob.coset_consistent)
      throw std::runtime_error("condition (a) coset failure at generator " +
                               ob.id);
    obs.push_back(std::move(ob));
  }
  for (const IndexRelation& rel : relations) {
    for (int c = 0; c < inst.num_states; ++c) {
      ThreadResult tl = h_star_star(inst, c, rel.lhs);
      ThreadResult tr = h_star_star(inst, c, rel.rhs);
      Obligation ob;
      ob.kind = ObligationKind::CondB;
      ob.id = rel.id;
      ob.coset = c;
      ob.lhs = std::move(tl.word);
      ob.rhs = std::move(tr.word);
      ob.coset_consistent = (tl.state == tr.state);
      if (!ob.coset_consistent)
        throw std::runtime_error("condition (b) coset failure at " + rel.id +
                                 " coset c" + std::to_string(c));
      obs.push_back(std::move(ob));
    }
  }
  return obs;
}

namespace {

constexpr char kCosetMagic[] = "ct2-coset-table v1";

std::vector<int> xword_to_ixs(const XWord& w) {
  std::vector<int> v;
  v.reserve(w.size());
  for (XGen g : w) v.push_back(static_cast<int>(g));
  return v;
}

}  // namespace

XWord CliffordTInstance::to_xword(const std::vector<int>& ixs) {
  XWord w;
  w.reserve(ixs.size());
  for (int i : ixs) w.push_back(static_cast<XGen>(i));
  return w;
}

XWord CliffordTInstance::cell_word(int c, const YGen& y) const {
  return to_xword(inst_.h.at(c).at(y.index()).first);
}

int CliffordTInstance::cell_next(int c, const YGen& y) const {
  return inst_.h.at(c).at(y.index()).second;
}

YWord CliffordTInstance::f_star_word(const XWord& w) const {
  YWord out;
  for (XGen x : w) {
    const YWord& img = translate_f(x);
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

std::pair<XWord, int> CliffordTInstance::h_thread(int c0,
                                                  const YWord& w) const {
  std::vector<int> yw;
  yw.reserve(w.size());
  for (const YGen& g : w) yw.push_back(g.index());
  ThreadResult t = h_star_star(inst_, c0, yw);
  return {to_xword(t.word), t.state};
}

XWord CliffordTInstance::g_translate(const YWord& w) const {
  auto [v, state] = h_thread(0, w);
  if (state != 0) throw NotSpecial(state);
  return v;
}

std::vector<Obligation> CliffordTInstance::obligations() const {
  std::vector<IndexRelation> rels;
  for (const YRelation& r : relations_R()) {
    IndexRelation ir;
    ir.id = r.id;
    for (const YGen& g : r.lhs) ir.lhs.push_back(g.index());
    for (const YGen& g : r.rhs) ir.rhs.push_back(g.index());
    rels.push_back(std::move(ir));
  }
  return generate_obligations(inst_, rels);
}

std::string CliffordTInstance::obligation_line(const Obligation& ob) {
  std::string kind = ob.kind == ObligationKind::CondA ? "condA" : "condB";
  return kind + " " + ob.id + " c" + std::to_string(ob.coset) + ": " +
         print_word(to_xword(ob.lhs)) + " = " + print_word(to_xword(ob.rhs));
}

bool CliffordTInstance::obligation_valid(const Obligation& ob) {
  return interp_x(to_xword(ob.lhs)) == interp_x(to_xword(ob.rhs));
}

namespace {

Instance make_engine_skeleton() {
  Instance inst;
  inst.num_states = 2;
  inst.num_x = kNumXGen;
  inst.num_y = kNumYGen;
  for (int x = 0; x < kNumXGen; ++x) {
    inst.x_names.push_back(name(static_cast<XGen>(x)));
    std::vector<int> img;
    for (const YGen& g : translate_f(static_cast<XGen>(x)))
      img.push_back(g.index());
    inst.f.push_back(std::move(img));
  }
  for (int y = 0; y < kNumYGen; ++y)
    inst.y_names.push_back(YGen::from_index(y).str());
  inst.h.assign(2, std::vector<std::pair<std::vector<int>, int>>(kNumYGen));
  return inst;
}

std::vector<Mat4> coset_reps() {
  return {Mat4::identity(), interp_y({YGen::omega(0)})};
}

// Verifies [[v]] [[c']] = [[c]] [[y]] for one cell, exactly.
bool cell_ok(const std::vector<Mat4>& reps, int c, int y, const XWord& v,
             int next) {
  Mat4 lhs = matmul(interp_x(v), reps[next]);
  Mat4 rhs = matmul(reps[c], y_interpretation().of(YGen::from_index(y)));
  return lhs == rhs;
}

std::filesystem::path coset_cache_file(const std::filesystem::path& dir) {
  return dir / "coset_table.v1.txt";
}

bool load_coset_cache(const std::filesystem::path& file, Instance& inst,
                      const std::vector<Mat4>& reps) {
  std::ifstream is(file);
  if (!is) return false;
  std::string line;
  if (!std::getline(is, line) || line != kCosetMagic) return false;
  int cells = 0;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    int c = -1, y = -1, next = -1;
    std::string word_text;
    ss >> c >> y >> next;
    std::getline(ss, word_text);
    if (c < 0 || c > 1 || y < 0 || y >= kNumYGen || next < 0 || next > 1)
      return false;
    XWord v;
    try {
      v = parse_x(word_text);
    } catch (const ParseError&) {
      return false;
    }
    if (!cell_ok(reps, c, y, v, next)) return false;
    inst.h[c][y] = {xword_to_ixs(v), next};
    ++cells;
  }
  return cells == 2 * kNumYGen;
}

void save_coset_cache(const std::filesystem::path& file,
                      const Instance& inst) {
  if (file.has_parent_path())
    std::filesystem::create_directories(file.parent_path());
  std::filesystem::path tmp = file;
  tmp += ".tmp";
  {
    std::ofstream os(tmp);
    os << kCosetMagic << '\n';
    for (int c = 0; c < 2; ++c)
      for (int y = 0; y < kNumYGen; ++y) {
        const auto& [w, next] = inst.h[c][y];
        os << c << ' ' << y << ' ' << next << ' '
           << print_word(CliffordTInstance::to_xword(w)) << '\n';
      }
    if (!os) throw std::runtime_error("coset cache: write failed");
  }
  std::filesystem::rename(tmp, file);
}

}  // namespace

CliffordTInstance CliffordTInstance::derive(const CliffordTable& table,
                                            const Options& opts) {
  CliffordTInstance out;
  out.inst_ = make_engine_skeleton();
  out.reps_ = coset_reps();

  std::filesystem::path cache;
  if (opts.use_cache && !opts.cache_dir.empty()) {
    cache = coset_cache_file(opts.cache_dir);
    if (load_coset_cache(cache, out.inst_, out.reps_)) return out;
  }

  WordSearcher searcher;
  std::vector<std::pair<Mat4, XWord>> found;  // search cache across cells

  for (int c = 0; c < 2; ++c) {
    for (int y = 0; y < kNumYGen; ++y) {
      YGen yg = YGen::from_index(y);
      const Mat4& ym = y_interpretation().of(yg);
      Mat4 cy = matmul(out.reps_[c], ym);
      // Parity of det fixes the successor coset.
      int next = coset_class(cy) == CosetParity::Odd ? 1 : 0;
      Mat4 target = matmul(cy, adjoint(out.reps_[next]));

      std::optional<XWord> v = table.lookup(target);
      if (!v) {
        for (const auto& [m, w] : found)
          if (m == target) v = w;
      }
      if (!v) {
        v = searcher.find(target, opts.search_cap);
        if (v) found.emplace_back(target, *v);
      }
      if (!v)
        throw std::runtime_error(
            "coset table: search exhausted at cap " +
            std::to_string(opts.search_cap) + " for cell (c" +
            std::to_string(c) + ", " + yg.str() + ")");
      if (!cell_ok(out.reps_, c, y, *v, next))
        throw std::logic_error("coset table: cell verification failed");
      out.inst_.h[c][y] = {xword_to_ixs(*v), next};
    }
  }

  if (opts.use_cache && !cache.empty()) {
    try {
      save_coset_cache(cache, out.inst_);
    } catch (const std::exception&) {
      // cache write failure is not fatal
    }
  }
  return out;
}

}  // namespace ct2::rs
