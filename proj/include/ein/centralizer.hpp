#pragma once

#include <utility>

#include "ein/liealg.hpp"

namespace ein {

/// Parameters of the centralizer c(tau^s) in o(p+1,q+1): scalars a,b,c,s,
/// inner-block vectors x,y of length n-2, and M in o(p-1,q-1).  assemble()
/// is the one authoritative index map between parameters and matrices.
struct CTauElement {
  Signature sig;
  Rat a, b, c, s;
  Vec x, y;
  Mat m;
};

/// The slice q = {a = c = 0} of c(tau^s), isomorphic to
/// (R + o(p-1,q-1)) acting on heis(2n-3).
struct QElement {
  Signature sig;
  Rat b;
  Mat m;
  Vec x, y;
  Rat s;
};

/// Inner-block split form Q^{p-1,q-1} on the n-2 middle coordinates.
SplitForm inner_form(const Signature& sig);

/// Basis of o(p-1,q-1) as (n-2) x (n-2) matrices.
std::vector<Mat> inner_o_basis(const Signature& sig);

/// Parameters -> matrix; the result commutes with T exactly (asserted) and
/// membership of M in o(p-1,q-1) is enforced.
AlgElement assemble(const CTauElement& e);

/// Matrix -> parameters; domain_error when the element is not in c(T).
CTauElement disassemble(const AlgElement& x);

AlgElement assemble_q(const QElement& u);

/// domain_error when a or c is nonzero (element outside q).
QElement disassemble_q(const AlgElement& x);

/// Basis of c(T) from the parametrized family, with exact span equality
/// against the kernel-of-ad computation certified internally.
Subalgebra ctau_basis(const Signature& sig);

/// dim c(T) = 4 + 2(n-2) + dim o(p-1,q-1).
int ctau_dim(const Signature& sig);

struct QProjections {
  Rat pi1;
  Mat pi2;
  std::pair<Vec, Vec> pi3;
};

QProjections q_projections(const QElement& u);

/// Bracket computed through assemble/bracket/disassemble, with the three
/// displayed projection laws certified exactly on every call.
QElement q_bracket(const QElement& u1, const QElement& u2);

/// Structure certificate for q = (R + o(p-1,q-1)) acting on heis(2n-3).
struct HeisReport {
  int q_dim = 0;
  int heis_dim = 0;
  bool center_is_s_slot = false;
  bool center_matches_pi_kernel = false;
  bool ideal_closed = false;
  bool derived_is_s_slot = false;
  bool two_step = false;
  bool ok = false;
};

HeisReport heis_structure_report(const Signature& sig);

/// Certifies b = 0 across the centralizer of a maximal-degree subalgebra of
/// q containing the s-slot, plus the three pairwise relations from the
/// proof.  Precondition failures are reported, not thrown.
struct BVanishReport {
  bool precondition_ok = false;
  std::string reason;
  int centralizer_dim = 0;
  bool b_all_zero = false;
  bool relations_ok = false;
  bool ok = false;
};

BVanishReport centralizer_b_vanishing(const Subalgebra& hcheck);

}  // namespace ein
