#include "ein/holonomy.hpp"

#include <cmath>

namespace ein {

Rat mobius_reparam(const Rat& s, const Rat& t) {
  const Rat denom = 1 + s * t;
  check_domain(denom != 0, "reparametrization pole 1 + st = 0");
  return t / denom;
}

GroupElement tau_group(const Signature& sig, const Rat& s) {
  return exp_nilpotent(translation_T(sig) * s);
}

GroupElement holonomy_matrix(const Signature& sig, const Rat& s, const Rat& t) {
  const Rat st1 = 1 + s * t;
  check_domain(st1 != 0, "holonomy pole 1 + st = 0");
  const int m = sig.ambient_dim();
  Mat h(m, m);
  h(0, 0) = st1;
  h(1, 1) = st1;
  for (int i = 2; i < m - 2; ++i) h(i, i) = 1;
  h(m - 2, m - 2) = 1 / st1;
  h(m - 1, m - 1) = 1 / st1;
  h = h + translation_T(sig).mat * s;
  return GroupElement(sig, h);
}

bool verify_base_factorization(const Signature& sig, const Rat& s, const Rat& t) {
  const AlgElement un = u_minus_basis(sig, sig.n());
  const GroupElement lhs = tau_group(sig, s) * exp_nilpotent(un * t);
  const GroupElement rhs =
      exp_nilpotent(un * mobius_reparam(s, t)) * holonomy_matrix(sig, s, t);
  return lhs == rhs;
}

GroupElement HolonomyFactorization::path(const Rat& t) const {
  return conjugator * holonomy_matrix(sig, s, t) * conjugator.inverse();
}

bool HolonomyFactorization::verify(const Rat& t) const {
  const GroupElement lhs = tau_group(sig, s) * exp_nilpotent(direction * t);
  const GroupElement rhs = exp_nilpotent(direction * reparam(t)) * path(t);
  return lhs == rhs;
}

HolonomyFactorization base_factorization(const Signature& sig, const Rat& s) {
  return HolonomyFactorization{sig, s, GroupElement::identity(sig),
                               u_minus_basis(sig, sig.n())};
}

HolonomyFactorization conjugated_factorization(const GroupElement& g, const Rat& s) {
  const Signature sig = g.sig;
  const GroupElement tau = tau_group(sig, s);
  check_domain(tau * g == g * tau, "conjugator does not commute with the flow");
  return HolonomyFactorization{sig, s, g, adjoint(g, u_minus_basis(sig, sig.n()))};
}

GroupElement construct_S_element(const AlgElement& u) {
  const Signature sig = u.sig;
  const int n = sig.n();
  const SplitForm f = chart_form(sig);

  Vec v = inv_iminus(u);
  check_domain(f.eval(v) == 0, "S element needs a null u^- direction");
  // <U, U_1> under Q^- is the chart pairing against the first basis vector.
  const Rat pairing = f.inner(v, basis_vec(n, 0));
  check_domain(pairing > 0, "S element needs <U, U_1> > 0");
  v = vec_scale(v, 1 / pairing);  // positive rescale to <U, U_1> = 1

  // Columns of the chart map: U_1 -> U_1, U_n -> v, W -> W - <W,v>.U_1.
  Mat a(n, n);
  for (int i = 0; i < n; ++i) a(i, 0) = (i == 0) ? Rat(1) : Rat(0);
  for (int i = 0; i < n; ++i) a(i, n - 1) = v[i];
  for (int j = 1; j < n - 1; ++j) {
    const Vec w = basis_vec(n, j);  // spans {U_1, U_n}^perp with its peers
    const Rat c = f.inner(w, v);
    for (int i = 0; i < n; ++i) a(i, j) = w[i] - ((i == 0) ? c : Rat(0));
  }
  return reductive_group(sig, 1, a);  // membership in O(Q^-) checked here
}

Mat adjoint_on_quotient(const GroupElement& h, const std::vector<AlgElement>& frame) {
  const Signature sig = h.sig;
  const int n = sig.n();
  check_domain(int(frame.size()) == n, "frame must have n elements");

  const Subalgebra p = parabolic(sig, projectivize(basis_vec(sig.ambient_dim(), 0)));
  const int d = o_dim(sig);
  const int mm = sig.ambient_dim() * sig.ambient_dim();

  // Solve Ad h (f_i) = sum_j m_{ji} f_j  (mod p) in one linear system.
  Mat cols(mm, n + p.dim());
  for (int j = 0; j < n; ++j) {
    check_domain(frame[j].sig == sig, "frame signature mismatch");
    const Vec fl = frame[j].flat();
    for (int r = 0; r < mm; ++r) cols(r, j) = fl[r];
  }
  for (int j = 0; j < p.dim(); ++j) {
    const Vec fl = p.basis[j].flat();
    for (int r = 0; r < mm; ++r) cols(r, n + j) = fl[r];
  }
  check_domain(rank(cols) == d, "frame is not transverse to p");

  Mat out(n, n);
  for (int i = 0; i < n; ++i) {
    const auto coords = solve_exact(cols, adjoint(h, frame[i]).flat());
    check_internal(coords.has_value(), "adjoint image escaped o(p+1,q+1)");
    for (int j = 0; j < n; ++j) out(j, i) = (*coords)[j];
  }
  return out;
}

int framing_sigma(const Signature& sig, int i) {
  check_domain(i >= 1 && i <= sig.n(), "framing index out of range");
  if (i == 1) return 0;
  if (i == sig.n()) return 2;
  return 1;
}

Rat framing_scale(const Signature& sig, int i, const Rat& s, const Rat& t) {
  const Rat st1 = 1 + s * t;
  check_domain(st1 != 0, "framing pole 1 + st = 0");
  const int e = framing_sigma(sig, i);
  Rat out(1);
  for (int k = 0; k < e; ++k) out /= st1;
  return out;
}

GroupElement develop(const PiecewiseCurve& curve) {
  return develop_prefixes(curve).back();
}

std::vector<GroupElement> develop_prefixes(const PiecewiseCurve& curve) {
  std::vector<GroupElement> out;
  GroupElement d = GroupElement::identity(curve.sig);
  out.push_back(d);
  const Rat* prev_end = nullptr;
  for (const auto& seg : curve.segments) {
    check_domain(seg.direction.sig == curve.sig, "segment signature mismatch");
    if (prev_end)
      check_domain(*prev_end == seg.from, "non-contiguous segments");
    d = d * exp_nilpotent(seg.direction * (seg.to - seg.from));
    out.push_back(d);
    prev_end = &seg.to;
  }
  return out;
}

std::vector<std::vector<double>> develop_sampled(
    const Signature& sig, const std::function<std::vector<std::vector<double>>(double)>& omega,
    double t0, double t1, double rel_tol) {
  const int m = sig.ambient_dim();
  using DMat = std::vector<std::vector<double>>;

  const auto mul = [m](const DMat& a, const DMat& b) {
    DMat c(m, std::vector<double>(m, 0.0));
    for (int i = 0; i < m; ++i)
      for (int k = 0; k < m; ++k)
        for (int j = 0; j < m; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
  };
  const auto axpy = [m](DMat& y, double a, const DMat& x) {
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) y[i][j] += a * x[i][j];
  };

  const auto integrate = [&](int steps) {
    DMat d(m, std::vector<double>(m, 0.0));
    for (int i = 0; i < m; ++i) d[i][i] = 1.0;
    const double h = (t1 - t0) / steps;
    for (int k = 0; k < steps; ++k) {
      const double t = t0 + k * h;
      // classic RK4 on D' = D.omega(t); the stage products reuse D at step start
      DMat k1 = mul(d, omega(t));
      DMat d2 = d;
      axpy(d2, h / 2, k1);
      DMat k2 = mul(d2, omega(t + h / 2));
      DMat d3 = d;
      axpy(d3, h / 2, k2);
      DMat k3 = mul(d3, omega(t + h / 2));
      DMat d4 = d;
      axpy(d4, h, k3);
      DMat k4 = mul(d4, omega(t + h));
      axpy(d, h / 6, k1);
      axpy(d, h / 3, k2);
      axpy(d, h / 3, k3);
      axpy(d, h / 6, k4);
    }
    return d;
  };

  int steps = 16;
  DMat prev = integrate(steps);
  for (int round = 0; round < 14; ++round) {
    steps *= 2;
    DMat next = integrate(steps);
    double diff = 0, scale = 0;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        diff = std::max(diff, std::fabs(next[i][j] - prev[i][j]));
        scale = std::max(scale, std::fabs(next[i][j]));
      }
    if (diff <= rel_tol * std::max(scale, 1.0)) return next;
    prev = std::move(next);
  }
  return prev;
}

FactorizationCheck completeness_factorization_check(
    const AlgElement& x, const AlgElement& y, const std::function<Rat(const Rat&)>& c,
    const std::function<GroupElement(const Rat&)>& g, const std::vector<Rat>& samples) {
  check_domain(x.sig == y.sig, "signature mismatch");
  check_domain(c(Rat(0)) == 0, "reparametrization must fix 0");
  FactorizationCheck out;
  for (const Rat& t : samples) {
    const GroupElement lhs = exp_nilpotent(x * t);
    const GroupElement gt = g(t);
    const GroupElement rhs = exp_nilpotent(y * c(t)) * gt;
    // membership in P: the first column of g(t) stays on the line R.e_0
    bool in_p = true;
    for (int i = 1; i < x.sig.ambient_dim(); ++i)
      if (gt.mat(i, 0) != 0) in_p = false;
    if (!(lhs == rhs) || !in_p) {
      out.ok = false;
      out.counterexample = t;
      return out;
    }
  }
  return out;
}

}  // namespace ein
