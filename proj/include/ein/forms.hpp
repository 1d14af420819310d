#pragma once

#include <compare>
#include <string>

#include "ein/linalg.hpp"
#include "ein/matrix.hpp"

namespace ein {

/// Model signature (p,q) of the Einstein universe Ein^{p,q}, p <= q, p+q >= 3.
/// The ambient quadratic space is R^{p+1,q+1} of dimension n+2.
struct Signature {
  int p = 0;
  int q = 0;

  Signature() = default;
  Signature(int p_, int q_) : p(p_), q(q_) {
    check_domain(p >= 0 && q >= 0, "signature entries must be nonnegative");
    check_domain(p <= q, "signature requires p <= q");
    check_domain(p + q >= 3, "signature requires p + q >= 3");
  }

  int n() const { return p + q; }
  int ambient_dim() const { return p + q + 2; }

  auto operator<=>(const Signature&) const = default;

  std::string str() const { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }
};

/// Split quadratic form of type (P,Q) on R^{P+Q}:
///   2(x_0 x_{m-1} + ... + x_{P-1} x_{m-P}) + sum_{i=P}^{Q-1} x_i^2.
/// Instances: the ambient form Q^{p+1,q+1}, the chart form Q^{p,q}, and the
/// inner-block form Q^{p-1,q-1} all use this one convention, so the pairing
/// <e_first, e_last> = 1 holds at every level.
struct SplitForm {
  int P = 0;
  int Q = 0;

  SplitForm(int P_, int Q_) : P(P_), Q(Q_) {
    check_domain(P >= 0 && Q >= 0 && P <= Q, "split form requires 0 <= P <= Q");
  }

  int dim() const { return P + Q; }

  /// Symmetric Gram matrix J with x.J.x = Q(x).
  Mat gram() const;

  /// Q(x), exactly.
  Rat eval(const Vec& x) const;

  /// Polarized form B(x,y) = (Q(x+y)-Q(x)-Q(y))/2 = x.J.y.
  Rat inner(const Vec& x, const Vec& y) const;

  /// True iff x != 0 and Q(x) = 0; the zero vector is rejected.
  bool is_null(const Vec& x) const;
};

inline SplitForm ambient_form(const Signature& s) { return SplitForm(s.p + 1, s.q + 1); }
inline SplitForm chart_form(const Signature& s) { return SplitForm(s.p, s.q); }

enum class Cover { projective, ray };

/// Point of projective space (or of the ray double cover) in homogeneous
/// rational coordinates.  Canonical representative: divide by the signed
/// entry of largest magnitude (lowest index on ties); on the ray cover only
/// the positive scale is quotiented, so divide by its absolute value.
struct ProjectivePoint {
  Vec rep;
  Cover cover = Cover::projective;

  bool operator==(const ProjectivePoint& o) const {
    return cover == o.cover && rep == o.rep;
  }
};

ProjectivePoint projectivize(const Vec& x, Cover cover = Cover::projective);

std::string point_str(const ProjectivePoint& pt);

class Rng;

/// Random nonzero null vector of the given split form: all slots random,
/// then one isotropic pair slot solved for.  Never returns zero.
Vec random_null_vector(const SplitForm& f, Rng& rng);

}  // namespace ein
