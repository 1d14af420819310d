#pragma once

#include "ein/liealg.hpp"

namespace ein {

/// Point of Ein^{p,q} (or its double cover, on the ray cover): a null
/// projective point of R^{p+1,q+1}.
struct EinPoint {
  Signature sig;
  ProjectivePoint point;

  EinPoint(Signature s, ProjectivePoint pt);

  bool operator==(const EinPoint& o) const { return sig == o.sig && point == o.point; }
};

EinPoint ein_point(const Signature& sig, const Vec& rep, Cover cover = Cover::projective);

/// Lightlike geodesic: the projectivization of a totally isotropic 2-plane.
struct NullGeodesic {
  Signature sig;
  Vec a;  // both null, mutually orthogonal, independent
  Vec b;

  NullGeodesic(Signature s, Vec a_, Vec b_);

  /// Affine chart t -> [a + t b]; the chart misses exactly [b].
  EinPoint at(const Rat& t) const;
  EinPoint chart_infinity() const;
  bool contains(const EinPoint& x) const;
};

/// Lightcone C(x) = P(x^perp cap N), tested through the polarized form.
struct LightconeSpec {
  EinPoint vertex;
};

bool lightcone_contains(const LightconeSpec& c, const EinPoint& y);

/// Projective action of O(p+1,q+1); preserves the null cone.
EinPoint act(const GroupElement& g, const EinPoint& x);

/// Inverse stereographic projection from the Minkowski chart:
/// v -> [-Q^{p,q}(v)/2 : v_1 : ... : v_n : 1].
EinPoint stereo_inverse(const Signature& sig, const Vec& v);

/// Chart inverse; domain_error on the boundary lightcone C([e_0]).
Vec stereo_forward(const EinPoint& x);

/// Differential of the chart section at v: an (n+2) x n matrix whose
/// columns are the tangent images; the pullback Gram against the ambient
/// form equals the chart form exactly.
Mat stereo_differential(const Signature& sig, const Vec& v);

/// Boundary point reached by the lightlike line c + t.u as t -> +-infinity:
/// [-<c,u> : u : 0] on C([e_0]) minus the vertex.
EinPoint null_line_boundary(const Signature& sig, const Vec& c, const Vec& u);

/// The flow by the null translation T in display coordinates:
/// [y_0 + s y_n : y_1 - s y_{n+1} : y_2 : ... : y_{n+1}].
EinPoint tau_flow(const Rat& s, const EinPoint& y);

/// Fixed set F of the flow: the null points with y_n = y_{n+1} = 0.
bool in_fixed_set(const EinPoint& y);

/// Attracting endpoint [y_n : -y_{n+1} : 0 : ... : 0] on the singular
/// geodesic Lambda; domain_error for y in F.
EinPoint tau_limit(const EinPoint& y);

/// The unique vertex on Lambda whose lightcone carries y, computed by the
/// orthogonality solve (an independent route that must agree with tau_limit).
EinPoint attractor_vertex(const EinPoint& y);

/// The geodesic through two distinct, orthogonal points of Ein^{p,q}.
NullGeodesic geodesic_through(const EinPoint& x, const EinPoint& y);

/// Float path for the limit, with rejection near the fixed set: inputs with
/// max(|y_n|, |y_{n+1}|) < 1e-9 relative to the sup norm are refused.
std::vector<double> tau_limit_double(const Signature& sig, const std::vector<double>& y);

/// Random null point with max(|y_n|, |y_{n+1}|) >= sup|y| / ratio_bound.
/// Convergence of the flow at time s toward tau_limit is then within
/// roughly 2.ratio_bound/s under max-abs normalization, which makes the
/// pinned float tolerance meaningful; points ever closer to F converge
/// arbitrarily slowly.
EinPoint random_point_off_fixed_set(const Signature& sig, Rng& rng,
                                    long ratio_bound = 20);

}  // namespace ein
