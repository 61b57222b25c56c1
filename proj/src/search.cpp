#include "ct2/search.hpp"

#include <algorithm>
#include <climits>

namespace ct2 {

namespace {

// Ball entries store matrices with one signed byte per coefficient. Entries
// of unitaries at the searched depths stay far below the byte range; the
// packer enforces it.
struct PackedMat {
  std::array<int8_t, 80> v;
};

int8_t pack_i8(int64_t x) {
  if (x < INT8_MIN || x > INT8_MAX)
    throw std::overflow_error("search: packed coefficient out of range");
  return static_cast<int8_t>(x);
}

PackedMat pack(const Mat4& m) {
  PackedMat p;
  size_t o = 0;
  for (const auto& e : m.e) {
    p.v[o++] = pack_i8(e.num().a);
    p.v[o++] = pack_i8(e.num().b);
    p.v[o++] = pack_i8(e.num().c);
    p.v[o++] = pack_i8(e.num().d);
    p.v[o++] = pack_i8(e.k());
  }
  return p;
}

Mat4 unpack(const PackedMat& p) {
  Mat4 m;
  size_t o = 0;
  for (auto& e : m.e) {
    int64_t a = p.v[o], b = p.v[o + 1], c = p.v[o + 2], d = p.v[o + 3],
            k = p.v[o + 4];
    o += 5;
    e = RingElt(CycloInt{a, b, c, d}, k);
  }
  return m;
}

struct Fp {
  uint64_t hi, lo;
};

Fp fingerprint(const Mat4& m) {
  uint64_t h1 = 0x243f6a8885a308d3ull;
  uint64_t h2 = 0x13198a2e03707344ull;
  for (const auto& e : m.e) {
    uint64_t x = e.hash();
    h1 = mix64(h1 ^ x);
    h2 = mix64(h2 + x * 0x9e3779b97f4a7c15ull);
  }
  if ((h1 | h2) == 0) h2 = 1;
  return {h1, h2};
}

// Open-addressing fingerprint -> node index map with linear probing.
class FpMap {
 public:
  explicit FpMap(size_t pow2 = 16) : slots_(size_t(1) << pow2), count_(0) {}

  bool insert(Fp fp, uint32_t idx) {
    if ((count_ + 1) * 10 > slots_.size() * 7) grow();
    size_t mask = slots_.size() - 1;
    size_t pos = fp.lo & mask;
    for (;;) {
      Slot& s = slots_[pos];
      if (s.empty()) {
        s.hi = fp.hi;
        s.lo = fp.lo;
        s.idx = idx;
        ++count_;
        return true;
      }
      if (s.hi == fp.hi && s.lo == fp.lo) return false;
      pos = (pos + 1) & mask;
    }
  }

  std::optional<uint32_t> find(Fp fp) const {
    size_t mask = slots_.size() - 1;
    size_t pos = fp.lo & mask;
    for (;;) {
      const Slot& s = slots_[pos];
      if (s.empty()) return std::nullopt;
      if (s.hi == fp.hi && s.lo == fp.lo) return s.idx;
      pos = (pos + 1) & mask;
    }
  }

 private:
  struct Slot {
    uint64_t hi = 0, lo = 0;
    uint32_t idx = 0;
    bool empty() const { return hi == 0 && lo == 0; }
  };

  void grow() {
    std::vector<Slot> old = std::move(slots_);
    slots_.assign(old.size() * 2, Slot{});
    size_t mask = slots_.size() - 1;
    for (const Slot& s : old) {
      if (s.empty()) continue;
      size_t pos = s.lo & mask;
      while (!slots_[pos].empty()) pos = (pos + 1) & mask;
      slots_[pos] = s;
    }
  }

  std::vector<Slot> slots_;
  size_t count_;
};

// One side of the search: BFS ball with fingerprint dedup. Only the matrices
// of the newest completed level are retained for expansion. Forward balls
// append generators on the right of the word; backward balls record the
// generator prepended on the left of the residual word.
struct Ball {
  FpMap map;
  std::vector<uint32_t> parent;
  std::vector<int8_t> gen;  // -1 at the root
  std::vector<uint8_t> len;
  std::vector<PackedMat> frontier;
  std::vector<uint32_t> frontier_idx;

  explicit Ball(const Mat4& root) : map(14) {
    map.insert(fingerprint(root), 0);
    parent.push_back(0);
    gen.push_back(-1);
    len.push_back(0);
    frontier.push_back(pack(root));
    frontier_idx.push_back(0);
  }

  int depth = 0;
  size_t size() const { return parent.size(); }
};

const std::array<Mat4, kNumXGen>& gen_images() {
  static const std::array<Mat4, kNumXGen> imgs = [] {
    std::array<Mat4, kNumXGen> a;
    for (int g = 0; g < kNumXGen; ++g)
      a[g] = x_interpretation().of(static_cast<XGen>(g));
    return a;
  }();
  return imgs;
}

const std::array<Mat4, kNumXGen>& gen_adjoints() {
  static const std::array<Mat4, kNumXGen> adjs = [] {
    std::array<Mat4, kNumXGen> a;
    for (int g = 0; g < kNumXGen; ++g) a[g] = adjoint(gen_images()[g]);
    return a;
  }();
  return adjs;
}

}  // namespace

struct WordSearcher::Impl {
  Ball fwd{Mat4::identity()};

  // Grows a ball by one level. Discovery order fixes the lexicographic
  // tie-break: forward expands parents-outer/generators-inner (suffix
  // appended), backward generators-outer/parents-inner (prefix prepended).
  template <typename OnNew>
  static void grow(Ball& ball, bool forward, OnNew on_new) {
    std::vector<PackedMat> next;
    std::vector<uint32_t> next_idx;
    uint8_t new_len = static_cast<uint8_t>(ball.depth + 1);
    auto expand = [&](size_t fi, int g) {
      const auto& step = forward ? gen_images()[g] : gen_adjoints()[g];
      Mat4 m = matmul(unpack(ball.frontier[fi]), step);
      Fp fp = fingerprint(m);
      uint32_t idx = static_cast<uint32_t>(ball.size());
      if (ball.map.insert(fp, idx)) {
        ball.parent.push_back(ball.frontier_idx[fi]);
        ball.gen.push_back(static_cast<int8_t>(g));
        ball.len.push_back(new_len);
        next.push_back(pack(m));
        next_idx.push_back(idx);
        on_new(idx, fp);
      }
    };
    if (forward) {
      for (size_t fi = 0; fi < ball.frontier.size(); ++fi)
        for (int g = 0; g < kNumXGen; ++g) expand(fi, g);
    } else {
      for (int g = 0; g < kNumXGen; ++g)
        for (size_t fi = 0; fi < ball.frontier.size(); ++fi) expand(fi, g);
    }
    ball.frontier = std::move(next);
    ball.frontier_idx = std::move(next_idx);
    ++ball.depth;
  }

  static XWord word_of(const Ball& ball, uint32_t idx, bool forward) {
    XWord w;
    while (idx != 0) {
      w.push_back(static_cast<XGen>(ball.gen[idx]));
      idx = ball.parent[idx];
    }
    if (forward) std::reverse(w.begin(), w.end());
    return w;
  }
};

WordSearcher::WordSearcher() : impl_(std::make_unique<Impl>()) {}
WordSearcher::~WordSearcher() = default;
WordSearcher::WordSearcher(WordSearcher&&) noexcept = default;
WordSearcher& WordSearcher::operator=(WordSearcher&&) noexcept = default;

size_t WordSearcher::forward_nodes() const { return impl_->fwd.size(); }

std::optional<XWord> WordSearcher::find(const Mat4& target,
                                        int max_total_length) {
  constexpr int kMaxSideDepth = 12;
  Ball bwd(target);
  Ball& fwd = impl_->fwd;

  struct Cand {
    int total;
    uint32_t fi, bi;
  };
  std::vector<Cand> cands;

  auto probe_new_bwd = [&](uint32_t bi, Fp fp) {
    if (auto fi = fwd.map.find(fp))
      cands.push_back({int(fwd.len[*fi]) + int(bwd.len[bi]), *fi, bi});
  };
  auto probe_new_fwd = [&](uint32_t fi, Fp fp) {
    if (auto bi = bwd.map.find(fp))
      cands.push_back({int(fwd.len[fi]) + int(bwd.len[*bi]), fi, *bi});
  };

  probe_new_bwd(0, fingerprint(target));

  for (int total_len = 0; total_len <= max_total_length; ++total_len) {
    int f_need = std::min((total_len + 1) / 2, kMaxSideDepth);
    int b_need = std::min(total_len / 2, kMaxSideDepth);
    while (fwd.depth < f_need) Impl::grow(fwd, true, probe_new_fwd);
    while (bwd.depth < b_need) Impl::grow(bwd, false, probe_new_bwd);

    int best = INT_MAX;
    for (const Cand& c : cands) best = std::min(best, c.total);
    if (best > total_len) continue;

    // Materialize all candidates at the best total, lexicographic order,
    // and return the first that verifies exactly.
    std::vector<XWord> words;
    for (const Cand& c : cands)
      if (c.total == best) {
        XWord w = Impl::word_of(fwd, c.fi, true);
        XWord tail = Impl::word_of(bwd, c.bi, false);
        w.insert(w.end(), tail.begin(), tail.end());
        words.push_back(std::move(w));
      }
    std::sort(words.begin(), words.end());
    for (const XWord& w : words)
      if (interp_x(w) == target) return w;
    // Fingerprint ghosts only; drop them and continue.
    std::erase_if(cands, [&](const Cand& c) { return c.total == best; });
    --total_len;
  }
  return std::nullopt;
}

}  // namespace ct2
