#pragma once

#include <optional>

#include "ct2/linalg.hpp"
#include "ct2/word.hpp"

namespace ct2 {

/// Generator -> matrix table for one alphabet; every image is unitary over R.
template <typename G>
struct Interpretation {
  std::vector<Mat4> images;  // indexed by generator index

  const Mat4& of(XGen g) const
    requires std::same_as<G, XGen>
  {
    return images[static_cast<int>(g)];
  }
  const Mat4& of(const YGen& g) const
    requires std::same_as<G, YGen>
  {
    return images[g.index()];
  }

  Mat4 eval(const Word<G>& w) const {
    Mat4 m = Mat4::identity();
    for (const G& g : w) m = matmul(m, of(g));
    return m;
  }
};

/// W -> wI, A0 -> A (x) I, A1 -> I (x) A, CZ -> diag(1,1,1,-1).
const Interpretation<XGen>& x_interpretation();

/// One- and two-level matrices: w[j], X[j,k], H[j,k].
const Interpretation<YGen>& y_interpretation();

Mat4 interp_x(const XWord& w);
Mat4 interp_y(const YWord& w);

/// The single-qubit generator matrices (H, S, T) and Pauli matrices.
const Mat2& mat2_h();
const Mat2& mat2_s();
const Mat2& mat2_t();
const Mat2& mat2_pauli(int p);  // 0=I, 1=X, 2=Y, 3=Z

template <typename G>
bool relation_valid(const Relation<G>& rel, const Interpretation<G>& interp) {
  return interp.eval(rel.lhs) == interp.eval(rel.rhs);
}

/// The fixed translation from Clifford+T generators into U_4(R) words.
const YWord& translate_f(XGen x);

enum class CosetParity { Even, Odd };

/// Parity of e where det(m) = w^e; Even iff det is a power of i. Any other
/// determinant value means the input was not a unitary word image.
CosetParity coset_class(const Mat4& m);

/// Exact checks of the controlled-T identities and their upside-down
/// versions, with controlled-T in a test-side extended alphabet.
bool verify_controlled_t_identities();

/// Individual identities, exposed for per-item reporting. Items 0-3 are the
/// four paper identities; items 4-7 their upside-down versions.
int num_controlled_t_identities();
bool controlled_t_identity(int item);
std::string controlled_t_identity_name(int item);

}  // namespace ct2
