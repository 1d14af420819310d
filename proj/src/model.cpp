#include "ein/model.hpp"

#include <cmath>

namespace ein {

EinPoint::EinPoint(Signature s, ProjectivePoint pt) : sig(s), point(std::move(pt)) {
  check_domain(int(point.rep.size()) == sig.ambient_dim(),
               "ein point: dimension mismatch");
  check_domain(ambient_form(sig).is_null(point.rep), "ein point: representative not null");
}

EinPoint ein_point(const Signature& sig, const Vec& rep, Cover cover) {
  return EinPoint(sig, projectivize(rep, cover));
}

NullGeodesic::NullGeodesic(Signature s, Vec a_, Vec b_)
    : sig(s), a(std::move(a_)), b(std::move(b_)) {
  const SplitForm f = ambient_form(sig);
  check_domain(f.is_null(a) && f.is_null(b), "geodesic plane vectors must be null");
  check_domain(f.inner(a, b) == 0, "geodesic plane must be totally isotropic");
  Mat plane(2, int(a.size()));
  for (size_t j = 0; j < a.size(); ++j) {
    plane(0, int(j)) = a[j];
    plane(1, int(j)) = b[j];
  }
  check_domain(rank(plane) == 2, "geodesic plane vectors must be independent");
}

EinPoint NullGeodesic::at(const Rat& t) const {
  return ein_point(sig, vec_add(a, vec_scale(b, t)));
}

EinPoint NullGeodesic::chart_infinity() const { return ein_point(sig, b); }

bool NullGeodesic::contains(const EinPoint& x) const {
  Mat stack(3, int(a.size()));
  for (size_t j = 0; j < a.size(); ++j) {
    stack(0, int(j)) = a[j];
    stack(1, int(j)) = b[j];
    stack(2, int(j)) = x.point.rep[j];
  }
  return rank(stack) == 2;
}

bool lightcone_contains(const LightconeSpec& c, const EinPoint& y) {
  check_domain(c.vertex.sig == y.sig, "lightcone: signature mismatch");
  return ambient_form(y.sig).inner(c.vertex.point.rep, y.point.rep) == 0;
}

EinPoint act(const GroupElement& g, const EinPoint& x) {
  check_domain(g.sig == x.sig, "act: signature mismatch");
  EinPoint out = ein_point(x.sig, g.mat * x.point.rep, x.point.cover);
  return out;  // EinPoint ctor re-asserts null-cone membership
}

EinPoint stereo_inverse(const Signature& sig, const Vec& v) {
  check_domain(int(v.size()) == sig.n(), "stereo_inverse: chart vector has length n");
  const int m = sig.ambient_dim();
  Vec rep(m);
  rep[0] = -chart_form(sig).eval(v) / 2;
  for (int i = 0; i < sig.n(); ++i) rep[i + 1] = v[i];
  rep[m - 1] = 1;
  return ein_point(sig, rep);
}

Vec stereo_forward(const EinPoint& x) {
  const Signature sig = x.sig;
  const int m = sig.ambient_dim();
  const Rat& last = x.point.rep[m - 1];
  // <x, e_0> = x_{n+1}: vanishing says x lies on the boundary cone C([e_0]).
  check_domain(last != 0, "stereo_forward: point on the boundary lightcone C([e_0])");
  Vec v(sig.n());
  for (int i = 0; i < sig.n(); ++i) v[i] = x.point.rep[i + 1] / last;
  return v;
}

Mat stereo_differential(const Signature& sig, const Vec& v) {
  check_domain(int(v.size()) == sig.n(), "stereo_differential: chart vector has length n");
  const SplitForm f = chart_form(sig);
  const int n = sig.n(), m = sig.ambient_dim();
  Mat d(m, n);
  for (int j = 0; j < n; ++j) {
    // d/dt of the section at v in direction e_j: (-B(v,e_j), e_j, 0).
    d(0, j) = -f.inner(v, basis_vec(n, j));
    d(j + 1, j) = 1;
  }
  return d;
}

EinPoint null_line_boundary(const Signature& sig, const Vec& c, const Vec& u) {
  const SplitForm f = chart_form(sig);
  check_domain(f.is_null(u), "null_line_boundary: direction must be null and nonzero");
  check_domain(int(c.size()) == sig.n(), "null_line_boundary: base point has length n");
  const int m = sig.ambient_dim();
  Vec rep(m);
  rep[0] = -f.inner(c, u);
  for (int i = 0; i < sig.n(); ++i) rep[i + 1] = u[i];
  rep[m - 1] = 0;
  return ein_point(sig, rep);
}

EinPoint tau_flow(const Rat& s, const EinPoint& y) {
  const int m = y.sig.ambient_dim();
  Vec rep = y.point.rep;
  rep[0] += s * rep[m - 2];
  rep[1] -= s * rep[m - 1];
  return ein_point(y.sig, rep, y.point.cover);
}

bool in_fixed_set(const EinPoint& y) {
  const int m = y.sig.ambient_dim();
  return y.point.rep[m - 2] == 0 && y.point.rep[m - 1] == 0;
}

EinPoint tau_limit(const EinPoint& y) {
  check_domain(!in_fixed_set(y), "tau_limit: point is fixed by the flow");
  const int m = y.sig.ambient_dim();
  Vec rep(m, Rat(0));
  rep[0] = y.point.rep[m - 2];
  rep[1] = -y.point.rep[m - 1];
  return ein_point(y.sig, rep, y.point.cover);
}

EinPoint attractor_vertex(const EinPoint& y) {
  check_domain(!in_fixed_set(y), "attractor_vertex: no unique vertex on the fixed set");
  const Signature sig = y.sig;
  const SplitForm f = ambient_form(sig);
  const int m = sig.ambient_dim();
  // vertex = alpha.e_0 + beta.e_1 on Lambda with <y, vertex> = 0
  const Rat c0 = f.inner(y.point.rep, basis_vec(m, 0));
  const Rat c1 = f.inner(y.point.rep, basis_vec(m, 1));
  Vec rep(m, Rat(0));
  rep[0] = c1;
  rep[1] = -c0;
  EinPoint vertex = ein_point(sig, rep, y.point.cover);
  check_internal(lightcone_contains(LightconeSpec{vertex}, y),
                 "attractor vertex must carry the point on its lightcone");
  return vertex;
}

NullGeodesic geodesic_through(const EinPoint& x, const EinPoint& y) {
  check_domain(x.sig == y.sig, "geodesic_through: signature mismatch");
  check_domain(!(x.point == y.point), "geodesic_through: points must be distinct");
  check_domain(ambient_form(x.sig).inner(x.point.rep, y.point.rep) == 0,
               "geodesic_through: points are not joined by a null geodesic");
  return NullGeodesic(x.sig, x.point.rep, y.point.rep);
}

EinPoint random_point_off_fixed_set(const Signature& sig, Rng& rng, long ratio_bound) {
  const SplitForm f = ambient_form(sig);
  const int m = sig.ambient_dim();
  for (;;) {
    Vec v = random_null_vector(f, rng);
    Rat sup(0);
    for (const auto& c : v) {
      Rat a = abs(c);
      if (a > sup) sup = a;
    }
    Rat tail = abs(v[m - 2]);
    Rat tail2 = abs(v[m - 1]);
    if (tail2 > tail) tail = tail2;
    if (tail > 0 && tail * ratio_bound >= sup) return ein_point(sig, v);
  }
}

std::vector<double> tau_limit_double(const Signature& sig, const std::vector<double>& y) {
  const int m = sig.ambient_dim();
  check_domain(int(y.size()) == m, "tau_limit_double: dimension mismatch");
  double sup = 0;
  for (double c : y) sup = std::max(sup, std::fabs(c));
  check_domain(sup > 0, "tau_limit_double: zero vector");
  // The limit direction degenerates exactly on F; refuse nearby input.
  if (std::max(std::fabs(y[m - 2]), std::fabs(y[m - 1])) < 1e-9 * sup)
    throw domain_error("tau_limit_double: point numerically on the fixed set");
  std::vector<double> rep(m, 0.0);
  rep[0] = y[m - 2];
  rep[1] = -y[m - 1];
  double lead = std::max(std::fabs(rep[0]), std::fabs(rep[1]));
  for (auto& c : rep) c /= lead;
  return rep;
}

}  // namespace ein
