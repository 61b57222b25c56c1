#pragma once

#include "ct2/clifford.hpp"

namespace ct2 {

/// A word in Pauli-rotation representation: a sequence of 45-degree Pauli
/// rotations followed by a single Clifford tail word. After standardize()
/// all rotation signs are +, the sequence is the lexicographically least
/// among commuting-swap equivalents, and no cancellable adjacent pair
/// remains. Standardized forms of equal operators need not be unique.
struct RotationForm {
  std::vector<Pauli2> rotations;
  XWord tail;  // Clifford generators only
};

/// R_P = ((1+w)/2) I + ((1-w)/2) P. R_{Z(x)I} is exactly T0.
Mat4 rotation_matrix(const Pauli2& p);

/// Exact product of the rotation matrices followed by the tail image.
Mat4 eval(const RotationForm& form);

/// Number of T generators in a word (T^dag counts as seven T's here, since
/// words are monoid words).
size_t t_count(const XWord& w);

/// Splits w into Clifford segments and T gates; each T on qubit i becomes
/// the rotation conj_pauli(D, Z_i) where D is the Clifford prefix so far.
/// eval(result) equals interp_x(w) exactly.
RotationForm to_rotation_form(const XWord& w, const CliffordTable& table);

/// Sign elimination, commuting-swap sorting to the lexicographic least,
/// and cancellation of adjacent duplicates, repeated to a fixpoint.
/// Clifford residues are folded into the tail through the table.
RotationForm standardize(const RotationForm& form, const CliffordTable& table);

/// Expands each rotation as C T0 C^-1 with C the transporter of its Pauli.
/// Throws std::domain_error if a rotation still carries a negative sign.
XWord from_rotation_form(const RotationForm& form, const CliffordTable& table);

/// "+ZX +IZ | <tail>" round-trippable text form.
std::string print_form(const RotationForm& form);

/// The three rotation identities that generate the non-obvious relations.
int num_nonobvious_rotation_relations();
bool nonobvious_rotation_relation(int item);
std::string nonobvious_rotation_relation_name(int item);
bool verify_nonobvious_rotation_relations();

}  // namespace ct2
