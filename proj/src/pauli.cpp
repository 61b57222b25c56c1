#include "ct2/pauli.hpp"

#include <algorithm>

namespace ct2 {

Mat4 rotation_matrix(const Pauli2& p) {
  if (p.is_identity_letters())
    throw std::domain_error("rotation_matrix: identity Pauli");
  const RingElt half_plus = RingElt(CycloInt{1, 1, 0, 0}, 2);   // (1+w)/2
  const RingElt half_minus = RingElt(CycloInt{1, -1, 0, 0}, 2); // (1-w)/2
  Mat4 pm = p.matrix();
  Mat4 r;
  for (int i = 0; i < 16; ++i) r.e[i] = half_minus * pm.e[i];
  for (int i = 0; i < 4; ++i) r.at(i, i) = r.at(i, i) + half_plus;
  return r;
}

Mat4 eval(const RotationForm& form) {
  Mat4 m = Mat4::identity();
  for (const Pauli2& p : form.rotations) m = matmul(m, rotation_matrix(p));
  return matmul(m, interp_x(form.tail));
}

size_t t_count(const XWord& w) {
  size_t n = 0;
  for (XGen g : w)
    if (g == XGen::T0 || g == XGen::T1) ++n;
  return n;
}

RotationForm to_rotation_form(const XWord& w, const CliffordTable& table) {
  RotationForm form;
  Mat4 prefix = Mat4::identity();
  for (XGen g : w) {
    if (g == XGen::T0 || g == XGen::T1) {
      Pauli2 z(+1, g == XGen::T0 ? 3 : 0, g == XGen::T0 ? 0 : 3);
      form.rotations.push_back(conj_pauli(prefix, z));
    } else {
      prefix = matmul(prefix, x_interpretation().of(g));
    }
  }
  auto tail = table.lookup(prefix);
  if (!tail)
    throw std::logic_error("to_rotation_form: Clifford prefix not in table");
  form.tail = *tail;
  return form;
}

namespace {

// Lexicographically least sequence reachable by adjacent swaps of commuting
// letters: greedily pick the least letter whose predecessors all commute
// with it (earliest position on ties).
std::vector<Pauli2> lex_least_commuting(std::vector<Pauli2> in) {
  std::vector<Pauli2> out;
  out.reserve(in.size());
  while (!in.empty()) {
    size_t best = in.size();
    for (size_t p = 0; p < in.size(); ++p) {
      bool movable = true;
      for (size_t q = 0; q < p && movable; ++q)
        movable = in[q].commutes_with(in[p]);
      if (movable && (best == in.size() || in[p] < in[best])) best = p;
    }
    out.push_back(in[best]);
    in.erase(in.begin() + static_cast<ptrdiff_t>(best));
  }
  return out;
}

// Folds a Clifford residue arising at position i into the tail: conjugate
// every later rotation and left-multiply the residue onto the tail matrix.
void shift_residue_right(const Mat4& residue, std::vector<Pauli2>& rots,
                         size_t from, Mat4& tail_mat) {
  for (size_t j = from; j < rots.size(); ++j)
    rots[j] = conj_pauli(residue, rots[j]);
  tail_mat = matmul(residue, tail_mat);
}

}  // namespace

RotationForm standardize(const RotationForm& form, const CliffordTable& table) {
  std::vector<Pauli2> rots = form.rotations;
  Mat4 tail_mat = interp_x(form.tail);

  for (;;) {
    // (c) eliminate negative signs, left to right. R_(-P) = R_P D with the
    // Clifford residue D = R_P^dag R_(-P), shifted rightward.
    for (size_t i = 0; i < rots.size(); ++i) {
      if (rots[i].sign < 0) {
        Pauli2 p = rots[i].positive();
        Mat4 residue = matmul(adjoint(rotation_matrix(p)),
                              rotation_matrix(p.negated()));
        rots[i] = p;
        shift_residue_right(residue, rots, i + 1, tail_mat);
      }
    }

    // (a) commuting-swap sort.
    rots = lex_least_commuting(std::move(rots));

    // (b) cancel one adjacent duplicate pair; R_P^2 is Clifford.
    bool cancelled = false;
    for (size_t i = 0; i + 1 < rots.size(); ++i) {
      if (rots[i] == rots[i + 1]) {
        Mat4 sq = rotation_matrix(rots[i]);
        sq = matmul(sq, sq);
        rots.erase(rots.begin() + static_cast<ptrdiff_t>(i),
                   rots.begin() + static_cast<ptrdiff_t>(i) + 2);
        shift_residue_right(sq, rots, i, tail_mat);
        cancelled = true;
        break;
      }
    }
    if (!cancelled) break;
    // Conjugation may reintroduce signs; restart the pipeline. Terminates:
    // every pass through here removed two rotations.
  }

  RotationForm out;
  out.rotations = std::move(rots);
  auto tail = table.lookup(tail_mat);
  if (!tail)
    throw std::logic_error("standardize: residual tail is not Clifford");
  out.tail = *tail;
  return out;
}

XWord from_rotation_form(const RotationForm& form, const CliffordTable& table) {
  XWord w;
  for (const Pauli2& p : form.rotations) {
    if (p.sign < 0)
      throw std::domain_error(
          "from_rotation_form: negative rotation sign (standardize first)");
    const XWord& c = find_transporter(p);
    auto cinv = table.lookup(adjoint(interp_x(c)));
    if (!cinv)
      throw std::logic_error("from_rotation_form: transporter inverse missing");
    w.insert(w.end(), c.begin(), c.end());
    w.push_back(XGen::T0);
    w.insert(w.end(), cinv->begin(), cinv->end());
  }
  w.insert(w.end(), form.tail.begin(), form.tail.end());
  return w;
}

std::string print_form(const RotationForm& form) {
  std::string s;
  for (const Pauli2& p : form.rotations) {
    s += p.str();
    s += " ";
  }
  s += "| " + print_word(form.tail);
  return s;
}

namespace {

struct RotIdent {
  std::string label;
  const char* lhs;
  const char* rhs;
};

// Space-separated positive Pauli letters; first letter acts on qubit 0.
const std::array<RotIdent, 3> kRotIdents = {{
    {"4-rotation", "IX IZ ZZ ZX", "ZX IZ ZZ IX"},
    {"6-rotation", "IX IZ IX ZX ZZ ZX", "ZX IZ IX ZX ZZ IX"},
    {"10-rotation", "XY YZ XZ IX ZI YX ZY ZX XI IZ",
     "YX ZY ZX XI IZ XY YZ XZ IX ZI"},
}};

Mat4 eval_rotations(const std::string& text) {
  Mat4 m = Mat4::identity();
  size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ') {
      ++i;
      continue;
    }
    auto p = Pauli2::parse("+" + text.substr(i, 2));
    if (!p) throw std::logic_error("bad rotation literal");
    m = matmul(m, rotation_matrix(*p));
    i += 2;
  }
  return m;
}

}  // namespace

int num_nonobvious_rotation_relations() {
  return static_cast<int>(kRotIdents.size());
}

bool nonobvious_rotation_relation(int item) {
  const RotIdent& r = kRotIdents.at(item);
  return eval_rotations(r.lhs) == eval_rotations(r.rhs);
}

std::string nonobvious_rotation_relation_name(int item) {
  return kRotIdents.at(item).label;
}

bool verify_nonobvious_rotation_relations() {
  for (int i = 0; i < num_nonobvious_rotation_relations(); ++i)
    if (!nonobvious_rotation_relation(i)) return false;
  return true;
}

}  // namespace ct2
