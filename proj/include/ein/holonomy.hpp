#pragma once

#include <functional>
#include <optional>

#include "ein/liealg.hpp"

namespace ein {

/// Geodesic of the flat model (X, G, omega_G): the orbit t -> base.e^{tX}.
struct GeodesicSpec {
  GroupElement base;
  AlgElement direction;

  /// Point of the orbit at parameter t (exact for nilpotent directions).
  GroupElement at(const Rat& t) const {
    return base * exp_nilpotent(direction * t);
  }
};

/// Mobius reparametrization c(t) = t / (1 + s t); domain_error at the pole.
Rat mobius_reparam(const Rat& s, const Rat& t);

/// The flow tau^s = exp(sT) as a group element.
GroupElement tau_group(const Signature& sig, const Rat& s);

/// Holonomy matrix h(s,t) = diag(1+st, 1+st, 1, ..., 1, 1/(1+st), 1/(1+st)) + sT.
GroupElement holonomy_matrix(const Signature& sig, const Rat& s, const Rat& t);

/// Exact certificate of tau^s.e^{tU_n} = e^{c(t)U_n}.h(s,t).
bool verify_base_factorization(const Signature& sig, const Rat& s, const Rat& t);

/// Reparametrization record with the closed-form holonomy path
/// path(t) = g.h(s,t).g^{-1}, so that tau^s.e^{tU} = e^{c(t)U}.path(t)
/// for U = (Ad g)(U_n).
struct HolonomyFactorization {
  Signature sig;
  Rat s;
  GroupElement conjugator;
  AlgElement direction;

  std::optional<Rat> pole() const {
    if (s == 0) return std::nullopt;
    return -1 / s;
  }
  Rat reparam(const Rat& t) const { return mobius_reparam(s, t); }
  GroupElement path(const Rat& t) const;

  /// Exact identity check at one parameter value.
  bool verify(const Rat& t) const;
};

/// Factorization along the base geodesic direction U_n (conjugator = e).
HolonomyFactorization base_factorization(const Signature& sig, const Rat& s);

/// Conjugated factorization for g in S; domain_error when g fails to
/// commute with the flow.
HolonomyFactorization conjugated_factorization(const GroupElement& g, const Rat& s);

/// The unipotent reductive-block element with U_1 -> U_1, U_n -> U,
/// V -> V - <V,U>.U_1 on {U_1,U_n}^perp, for null U with <U,U_1> > 0
/// (rescaled so the pairing is 1).  Lies in O(Q^-) and commutes with tau^s.
GroupElement construct_S_element(const AlgElement& u);

/// Matrix of Ad h on g/p in the given frame (n elements transverse to p).
Mat adjoint_on_quotient(const GroupElement& h, const std::vector<AlgElement>& frame);

/// sigma(1) = 0, sigma(i) = 1 for 1 < i < n, sigma(n) = 2.
int framing_sigma(const Signature& sig, int i);

/// (1/(1+st))^{sigma(i)}.
Rat framing_scale(const Signature& sig, int i, const Rat& s, const Rat& t);

/// Piecewise-geodesic curve: contiguous parameter intervals, one constant
/// velocity per segment.
struct CurveSegment {
  AlgElement direction;
  Rat from;
  Rat to;
};

struct PiecewiseCurve {
  Signature sig;
  std::vector<CurveSegment> segments;
};

/// Development endpoint: the ordered product of segment exponentials,
/// starting at the identity.  domain_error on non-contiguous segments or
/// non-nilpotent directions (no exact exponential exists for those).
GroupElement develop(const PiecewiseCurve& curve);

/// Development prefixes after each segment (D(t_1), ..., D(t_k)).
std::vector<GroupElement> develop_prefixes(const PiecewiseCurve& curve);

/// Float-path development for sampled curves: classic fourth-order steps on
/// D' = D.omega(t) with step halving until the endpoint moves by less than
/// rel_tol.
std::vector<std::vector<double>> develop_sampled(
    const Signature& sig, const std::function<std::vector<std::vector<double>>(double)>& omega,
    double t0, double t1, double rel_tol = 1e-10);

/// Certifies e^{tX} = e^{c(t)Y}.g(t) with g(t) in P at every sample;
/// reports the first failing sample otherwise.
struct FactorizationCheck {
  bool ok = true;
  std::optional<Rat> counterexample;
};

FactorizationCheck completeness_factorization_check(
    const AlgElement& x, const AlgElement& y, const std::function<Rat(const Rat&)>& c,
    const std::function<GroupElement(const Rat&)>& g, const std::vector<Rat>& samples);

}  // namespace ein
