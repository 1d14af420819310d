#include "ein/liealg.hpp"

#include <utility>

namespace ein {

namespace {

bool in_o(const Signature& sig, const Mat& m) {
  if (m.rows() != sig.ambient_dim() || m.cols() != sig.ambient_dim()) return false;
  const Mat j = ambient_gram(sig);
  return (m.transpose() * j + j * m).is_zero();
}

bool in_O(const Signature& sig, const Mat& m) {
  if (m.rows() != sig.ambient_dim() || m.cols() != sig.ambient_dim()) return false;
  const Mat j = ambient_gram(sig);
  return m.transpose() * j * m == j;
}

}  // namespace

AlgElement::AlgElement(Signature s, Mat m) : sig(s), mat(std::move(m)) {
  check_domain(in_o(sig, mat), "matrix is not in o(p+1,q+1)");
}

GroupElement::GroupElement(Signature s, Mat m) : sig(s), mat(std::move(m)) {
  check_domain(in_O(sig, mat), "matrix does not preserve the split form");
}

GroupElement GroupElement::inverse() const {
  const Mat j = ambient_gram(sig);
  return GroupElement(sig, j * mat.transpose() * j);
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
  check_domain(sig == o.sig, "signature mismatch in group product");
  return GroupElement(sig, mat * o.mat);
}

Mat ambient_gram(const Signature& sig) { return ambient_form(sig).gram(); }

SpanBasis Subalgebra::flat_span() const {
  const int m = sig.ambient_dim();
  SpanBasis s(m * m);
  for (const auto& b : basis) s.add(b.flat());
  return s;
}

bool Subalgebra::is_bracket_closed() const {
  SpanBasis s = flat_span();
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j)
      if (!s.contains(bracket(basis[i], basis[j]).flat())) return false;
  return true;
}

Subalgebra subalgebra_from_span(Signature sig, const std::vector<AlgElement>& gens) {
  const int m = sig.ambient_dim();
  SpanBasis s(m * m);
  Subalgebra out{sig, {}};
  for (const auto& g : gens) {
    check_domain(g.sig == sig, "signature mismatch in subalgebra");
    if (s.add(g.flat())) out.basis.push_back(g);
  }
  return out;
}

Subalgebra bracket_closure(Signature sig, const std::vector<AlgElement>& gens) {
  Subalgebra cur = subalgebra_from_span(sig, gens);
  for (;;) {
    SpanBasis s = cur.flat_span();
    std::vector<AlgElement> next = cur.basis;
    bool grew = false;
    for (size_t i = 0; i < cur.basis.size(); ++i)
      for (size_t j = i + 1; j < cur.basis.size(); ++j) {
        AlgElement br = bracket(cur.basis[i], cur.basis[j]);
        if (s.add(br.flat())) {
          next.push_back(br);
          grew = true;
        }
      }
    if (!grew) return cur;
    cur = Subalgebra{sig, std::move(next)};
  }
}

std::vector<AlgElement> o_basis(const Signature& sig) {
  const int m = sig.ambient_dim();
  const Mat j = ambient_gram(sig);
  std::vector<AlgElement> out;
  out.reserve(o_dim(sig));
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      Mat skew(m, m);
      skew(a, b) = 1;
      skew(b, a) = -1;
      out.emplace_back(sig, j * skew);
    }
  return out;
}

AlgElement iminus(const Signature& sig, const Vec& v) {
  check_domain(int(v.size()) == sig.n(), "iminus: vector must lie in R^{p,q}");
  const int n = sig.n();
  const Vec jv = chart_form(sig).gram() * v;
  Mat m(n + 2, n + 2);
  for (int i = 0; i < n; ++i) {
    m(i + 1, 0) = v[i];
    m(n + 1, i + 1) = -jv[i];
  }
  return AlgElement(sig, m);
}

AlgElement iplus(const Signature& sig, const Vec& v) {
  check_domain(int(v.size()) == sig.n(), "iplus: vector must lie in R^{p,q}");
  const int n = sig.n();
  const Vec jv = chart_form(sig).gram() * v;
  Mat m(n + 2, n + 2);
  for (int i = 0; i < n; ++i) {
    m(0, i + 1) = jv[i];
    m(i + 1, n + 1) = -v[i];
  }
  return AlgElement(sig, m);
}

Vec inv_iminus(const AlgElement& x) {
  const int n = x.sig.n();
  Vec v(n);
  for (int i = 0; i < n; ++i) v[i] = x.mat(i + 1, 0);
  check_domain(iminus(x.sig, v) == x, "element is not in u^-");
  return v;
}

Vec inv_iplus(const AlgElement& x) {
  const int n = x.sig.n();
  Vec v(n);
  for (int i = 0; i < n; ++i) v[i] = -x.mat(i + 1, n + 1);
  check_domain(iplus(x.sig, v) == x, "element is not in u^+");
  return v;
}

AlgElement reductive(const Signature& sig, const Rat& a, const Mat& m) {
  const int n = sig.n();
  check_domain(m.rows() == n && m.cols() == n, "reductive: middle block must be n x n");
  Mat out(n + 2, n + 2);
  out(0, 0) = a;
  out(n + 1, n + 1) = -a;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i + 1, j + 1) = m(i, j);
  return AlgElement(sig, out);  // membership check rejects m outside o(p,q)
}

AlgElement u_minus_basis(const Signature& sig, int i) {
  check_domain(i >= 1 && i <= sig.n(), "U_i index out of range");
  return iminus(sig, basis_vec(sig.n(), i - 1));
}

AlgElement translation_T(const Signature& sig) {
  check_domain(sig.p >= 1, "T needs p >= 1");
  return iplus(sig, basis_vec(sig.n(), 0));
}

AlgElement bracket(const AlgElement& x, const AlgElement& y) {
  check_domain(x.sig == y.sig, "signature mismatch in bracket");
  return AlgElement(x.sig, commutator(x.mat, y.mat));
}

Grading grade(const AlgElement& x) {
  const Signature sig = x.sig;
  const int n = sig.n();
  Vec lo(n), hi(n);
  for (int i = 0; i < n; ++i) {
    lo[i] = x.mat(i + 1, 0);
    hi[i] = -x.mat(i + 1, n + 1);
  }
  Mat mid(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mid(i, j) = x.mat(i + 1, j + 1);
  Grading g{iminus(sig, lo), reductive(sig, x.mat(0, 0), mid), iplus(sig, hi)};
  check_internal((g.minus.mat + g.zero.mat + g.plus.mat) == x.mat,
                 "grading does not reconstruct the element");
  return g;
}

AlgElement adjoint(const GroupElement& g, const AlgElement& x) {
  check_domain(g.sig == x.sig, "signature mismatch in adjoint");
  return AlgElement(x.sig, g.mat * x.mat * g.inverse().mat);
}

Subalgebra centralizer(const Signature& sig, const std::vector<AlgElement>& gens) {
  const auto basis = o_basis(sig);
  const int d = int(basis.size());
  const int m = sig.ambient_dim();
  if (gens.empty()) return Subalgebra{sig, basis};

  Mat cons(int(gens.size()) * m * m, d);
  for (size_t gi = 0; gi < gens.size(); ++gi) {
    check_domain(gens[gi].sig == sig, "signature mismatch in centralizer");
    for (int k = 0; k < d; ++k) {
      const Vec br = bracket(basis[k], gens[gi]).flat();
      for (int r = 0; r < m * m; ++r) cons(int(gi) * m * m + r, k) = br[r];
    }
  }
  std::vector<AlgElement> out;
  for (const Vec& c : nullspace(cons)) {
    Mat acc(m, m);
    for (int k = 0; k < d; ++k)
      if (c[k] != 0) acc = acc + basis[k].mat * c[k];
    out.emplace_back(sig, acc);
  }
  return Subalgebra{sig, out};
}

Subalgebra parabolic(const Signature& sig, const ProjectivePoint& point) {
  const int m = sig.ambient_dim();
  check_domain(int(point.rep.size()) == m, "parabolic: point dimension mismatch");
  check_domain(ambient_form(sig).is_null(point.rep), "parabolic: point not null");

  const auto basis = o_basis(sig);
  const int d = int(basis.size());
  const Vec& x = point.rep;

  // X.x proportional to x  <=>  all 2x2 minors of (X.x | x) vanish.
  std::vector<std::pair<int, int>> minors;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) minors.emplace_back(i, j);

  Mat cons(int(minors.size()), d);
  for (int k = 0; k < d; ++k) {
    const Vec bx = basis[k].mat * x;
    for (size_t r = 0; r < minors.size(); ++r) {
      auto [i, j] = minors[r];
      cons(int(r), k) = bx[i] * x[j] - bx[j] * x[i];
    }
  }
  std::vector<AlgElement> out;
  for (const Vec& c : nullspace(cons)) {
    Mat acc(m, m);
    for (int k = 0; k < d; ++k)
      if (c[k] != 0) acc = acc + basis[k].mat * c[k];
    out.emplace_back(sig, acc);
  }
  return Subalgebra{sig, out};
}

int codim_in(const Subalgebra& sub, const Subalgebra& amb) {
  check_domain(sub.sig == amb.sig, "signature mismatch in codim_in");
  SpanBasis big = amb.flat_span();
  for (const auto& b : sub.basis)
    check_domain(big.contains(b.flat()), "codim_in: sub is not contained in amb");
  return big.dim() - sub.flat_span().dim();
}

Subalgebra intersect(const Subalgebra& a, const Subalgebra& b) {
  check_domain(a.sig == b.sig, "signature mismatch in intersect");
  const int mm = a.sig.ambient_dim() * a.sig.ambient_dim();
  if (a.dim() == 0 || b.dim() == 0) return Subalgebra{a.sig, {}};
  // coefficients (u, v) with sum_u a_u = sum_v b_v
  Mat cons(mm, a.dim() + b.dim());
  for (int k = 0; k < a.dim(); ++k) {
    const Vec f = a.basis[k].flat();
    for (int r = 0; r < mm; ++r) cons(r, k) = f[r];
  }
  for (int k = 0; k < b.dim(); ++k) {
    const Vec f = b.basis[k].flat();
    for (int r = 0; r < mm; ++r) cons(r, a.dim() + k) = -f[r];
  }
  std::vector<AlgElement> out;
  for (const Vec& c : nullspace(cons)) {
    Mat acc(a.sig.ambient_dim(), a.sig.ambient_dim());
    for (int k = 0; k < a.dim(); ++k)
      if (c[k] != 0) acc = acc + a.basis[k].mat * c[k];
    if (!acc.is_zero()) out.emplace_back(a.sig, acc);
  }
  return subalgebra_from_span(a.sig, out);
}

GroupElement exp_nilpotent(const AlgElement& x) {
  const int m = x.sig.ambient_dim();
  Mat sum = Mat::identity(m);
  Mat power = x.mat;
  Rat fact(1);
  for (int k = 1; !power.is_zero(); ++k) {
    check_domain(k <= m, "exp_nilpotent: element is not nilpotent");
    fact *= k;
    sum = sum + power * (Rat(1) / fact);
    power = power * x.mat;
  }
  return GroupElement(x.sig, sum);
}

GroupElement sl2_embed(const Signature& sig, const Mat& a) {
  check_domain(a.rows() == 2 && a.cols() == 2, "sl2_embed: need a 2x2 matrix");
  check_domain(a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0) == 1, "sl2_embed: det must be 1");
  const int n = sig.n();
  Mat g = Mat::identity(n + 2);
  g(0, 0) = a(0, 0);
  g(0, 1) = a(0, 1);
  g(1, 0) = a(1, 0);
  g(1, 1) = a(1, 1);
  // Bottom block solved from form preservation; equals A^{-1} exactly when
  // A is a rotation, which is the case the displayed embedding covers.
  g(n, n) = a(0, 0);
  g(n, n + 1) = -a(0, 1);
  g(n + 1, n) = -a(1, 0);
  g(n + 1, n + 1) = a(1, 1);
  return GroupElement(sig, g);
}

GroupElement reductive_group(const Signature& sig, const Rat& lambda, const Mat& a) {
  check_domain(lambda != 0, "reductive_group: zero scale");
  const int n = sig.n();
  check_domain(a.rows() == n && a.cols() == n, "reductive_group: block must be n x n");
  Mat g(n + 2, n + 2);
  g(0, 0) = lambda;
  g(n + 1, n + 1) = Rat(1) / lambda;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i + 1, j + 1) = a(i, j);
  return GroupElement(sig, g);  // validates a in O(p,q)
}

Mat chart_reflection(const Signature& sig, const Vec& c) {
  const SplitForm f = chart_form(sig);
  const Rat qc = f.eval(c);
  check_domain(qc != 0, "chart_reflection: mirror vector must be non-null");
  const int n = sig.n();
  const Vec jc = f.gram() * c;
  Mat r = Mat::identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r(i, j) -= 2 * c[i] * jc[j] / qc;
  return r;
}

Mat random_chart_orthogonal(const Signature& sig, Rng& rng) {
  const SplitForm f = chart_form(sig);
  Mat a = Mat::identity(sig.n());
  const int pieces = int(rng.uniform(1, 3));
  for (int k = 0; k < pieces; ++k) {
    for (;;) {
      Vec c(sig.n());
      for (auto& x : c) x = rng.rational(3, 2);
      if (!vec_is_zero(c) && f.eval(c) != 0) {
        a = a * chart_reflection(sig, c);
        break;
      }
    }
  }
  return a;
}

GroupElement reflection(const Signature& sig, const Vec& c) {
  const SplitForm f = ambient_form(sig);
  const Rat qc = f.eval(c);
  check_domain(qc != 0, "reflection: mirror vector must be non-null");
  const int m = sig.ambient_dim();
  const Vec jc = f.gram() * c;
  Mat r = Mat::identity(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) r(i, j) -= 2 * c[i] * jc[j] / qc;
  return GroupElement(sig, r);
}

GroupElement isometry_null_to_null(const Signature& sig, const Vec& a, const Vec& b) {
  const SplitForm f = ambient_form(sig);
  check_domain(f.is_null(a) && f.is_null(b), "both endpoints must be null");
  if (a == b) return GroupElement::identity(sig);
  if (f.inner(a, b) != 0) {
    return reflection(sig, vec_sub(a, b));  // sends a to b exactly
  }
  // <a,b> = 0: route through an intermediate null vector c with
  // <a,c> != 0 != <c,b>, found deterministically.
  Rng probe(0x5eedbeefULL);
  for (int tries = 0; tries < 1000; ++tries) {
    Vec c = random_null_vector(f, probe);
    if (f.inner(a, c) != 0 && f.inner(c, b) != 0) {
      GroupElement first = reflection(sig, vec_sub(a, c));
      GroupElement second = reflection(sig, vec_sub(c, b));
      return second * first;
    }
  }
  throw internal_error("isometry_null_to_null: no intermediate null vector found");
}

Mat random_sl2(Rng& rng) {
  Mat m = Mat::identity(2);
  // Product of elementary shears; determinant 1 by construction.
  for (int k = 0; k < 3; ++k) {
    Mat s = Mat::identity(2);
    if (k % 2 == 0)
      s(0, 1) = rng.rational(4, 2);
    else
      s(1, 0) = rng.rational(4, 2);
    m = m * s;
  }
  return m;
}

AlgElement random_alg_element(const Signature& sig, Rng& rng) {
  const auto basis = o_basis(sig);
  Mat acc(sig.ambient_dim(), sig.ambient_dim());
  for (const auto& b : basis) {
    Rat c = rat_of(rng.uniform(-3, 3));
    if (c != 0) acc = acc + b.mat * c;
  }
  return AlgElement(sig, acc);
}

GroupElement random_group_element(const Signature& sig, Rng& rng) {
  const SplitForm f = ambient_form(sig);
  GroupElement g = GroupElement::identity(sig);
  const int pieces = int(rng.uniform(2, 4));
  for (int k = 0; k < pieces; ++k) {
    switch (rng.uniform(0, 3)) {
      case 0: {
        // Reflection in a random non-null vector.
        for (;;) {
          Vec c(sig.ambient_dim());
          for (auto& x : c) x = rng.rational(3, 2);
          if (!vec_is_zero(c) && f.eval(c) != 0) {
            g = g * reflection(sig, c);
            break;
          }
        }
        break;
      }
      case 1: {
        Vec v(sig.n());
        for (auto& x : v) x = rng.rational(3, 2);
        g = g * exp_nilpotent(iplus(sig, v));
        break;
      }
      case 2: {
        Vec v(sig.n());
        for (auto& x : v) x = rng.rational(3, 2);
        g = g * exp_nilpotent(iminus(sig, v));
        break;
      }
      default:
        g = g * sl2_embed(sig, random_sl2(rng));
    }
  }
  return g;
}

}  // namespace ein
