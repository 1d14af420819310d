#pragma once

#include <vector>

#include "ein/forms.hpp"
#include "ein/rng.hpp"

namespace ein {

/// Element of o(p+1,q+1): an (n+2)x(n+2) rational matrix X with
/// X^t.J + J.X = 0 for the ambient split Gram J.
struct AlgElement {
  Signature sig;
  Mat mat;

  AlgElement(Signature s, Mat m);

  bool is_zero() const { return mat.is_zero(); }
  Vec flat() const { return mat.flatten(); }

  AlgElement operator+(const AlgElement& o) const { return {sig, mat + o.mat}; }
  AlgElement operator-(const AlgElement& o) const { return {sig, mat - o.mat}; }
  AlgElement operator*(const Rat& c) const { return {sig, mat * c}; }
  bool operator==(const AlgElement& o) const { return sig == o.sig && mat == o.mat; }
};

/// Element of O(p+1,q+1): g^t.J.g = J exactly.  Projective identification
/// g ~ -g is applied only when acting on points, never on the matrix carrier.
struct GroupElement {
  Signature sig;
  Mat mat;

  GroupElement(Signature s, Mat m);

  static GroupElement identity(Signature s) {
    return GroupElement(s, Mat::identity(s.ambient_dim()));
  }

  /// Exact inverse J.g^t.J (valid because g preserves J and J^2 = I).
  GroupElement inverse() const;

  GroupElement operator*(const GroupElement& o) const;
  bool operator==(const GroupElement& o) const { return sig == o.sig && mat == o.mat; }
};

/// Components of the grading u^- + r + u^+ adapted to the pair (e_0, e_{n+1}).
struct Grading {
  AlgElement minus;
  AlgElement zero;
  AlgElement plus;
};

/// Finite linearly independent basis of a subspace of o(p+1,q+1).
struct Subalgebra {
  Signature sig;
  std::vector<AlgElement> basis;

  int dim() const { return int(basis.size()); }
  SpanBasis flat_span() const;
  bool contains(const AlgElement& x) const { return flat_span().contains(x.flat()); }
  bool is_bracket_closed() const;
};

/// Reduces an arbitrary spanning list to an independent basis.
Subalgebra subalgebra_from_span(Signature sig, const std::vector<AlgElement>& gens);

/// Smallest bracket-closed subalgebra containing the generators.
Subalgebra bracket_closure(Signature sig, const std::vector<AlgElement>& gens);

// --- structure maps ------------------------------------------------------

Mat ambient_gram(const Signature& sig);

/// Canonical basis of o(p+1,q+1): J(E_i^j - E_j^i) over i < j.
std::vector<AlgElement> o_basis(const Signature& sig);

inline int o_dim(const Signature& sig) {
  const int m = sig.ambient_dim();
  return m * (m - 1) / 2;
}

/// u^-: column-0 block carries v, bottom row carries -(J_{p,q} v)^t.
AlgElement iminus(const Signature& sig, const Vec& v);

/// u^+: top row carries (J_{p,q} v)^t, last column carries -v.  The sign is
/// fixed so that exp(s.iplus(e_1)) acts as
///   [y_0 + s y_n : y_1 - s y_{n+1} : y_2 : ... : y_{n+1}].
AlgElement iplus(const Signature& sig, const Vec& v);

/// Inverse of iminus/iplus; domain_error when the element is not purely in
/// the corresponding block.
Vec inv_iminus(const AlgElement& x);
Vec inv_iplus(const AlgElement& x);

/// Reductive block element diag(a, M, -a) with M in o(p,q).
AlgElement reductive(const Signature& sig, const Rat& a, const Mat& m);

/// Basis element U_i of u^-, 1-based: i runs from 1 to n.
AlgElement u_minus_basis(const Signature& sig, int i);

/// The distinguished null translation T = iplus(e_1).
AlgElement translation_T(const Signature& sig);

// --- operations -----------------------------------------------------------

AlgElement bracket(const AlgElement& x, const AlgElement& y);

Grading grade(const AlgElement& x);

AlgElement adjoint(const GroupElement& g, const AlgElement& x);

/// Exact basis of {X in o : [X, s] = 0 for every generator}.  With no
/// generators this is all of o(p+1,q+1).
Subalgebra centralizer(const Signature& sig, const std::vector<AlgElement>& gens);

/// Stabilizer algebra {X : X.v in R.v} of a null line; for [e_0] this is
/// p = r + u^+.
Subalgebra parabolic(const Signature& sig, const ProjectivePoint& point);

/// dim(amb) - dim(sub); domain_error unless sub is contained in amb.
int codim_in(const Subalgebra& sub, const Subalgebra& amb);

/// Exact intersection of two subspaces of o(p+1,q+1).
Subalgebra intersect(const Subalgebra& a, const Subalgebra& b);

/// Terminating polynomial exponential; domain_error when X^(n+2) != 0.
GroupElement exp_nilpotent(const AlgElement& x);

/// Standard embedding of SL(2) acting on (x_0, x_1) and, with the block
/// forced by form preservation, on (x_n, x_{n+1}); identity in between.
GroupElement sl2_embed(const Signature& sig, const Mat& a);

/// Reductive-block group element diag(lambda, A, 1/lambda) with A in O(p,q).
GroupElement reductive_group(const Signature& sig, const Rat& lambda, const Mat& a);

/// Reflection of the chart space R^{p,q} in a non-null vector (an O(p,q)
/// matrix of size n).
Mat chart_reflection(const Signature& sig, const Vec& c);

/// Random element of O(p,q) as a product of chart reflections.
Mat random_chart_orthogonal(const Signature& sig, Rng& rng);

// --- reflection utilities --------------------------------------------------

/// Reflection in a non-null vector c; lies in O(p+1,q+1).
GroupElement reflection(const Signature& sig, const Vec& c);

/// Isometry sending null vector a exactly to null vector b (one or two
/// reflections, found deterministically).
GroupElement isometry_null_to_null(const Signature& sig, const Vec& a, const Vec& b);

// --- randomized constructions (seeded; exact output) -----------------------

Mat random_sl2(Rng& rng);
AlgElement random_alg_element(const Signature& sig, Rng& rng);
GroupElement random_group_element(const Signature& sig, Rng& rng);

}  // namespace ein
