#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ein/liealg.hpp"

using namespace ein;

namespace {

const Signature k12(1, 2);

Mat elementary(int dim, int i, int j) {
  Mat m(dim, dim);
  m(i, j) = 1;
  return m;
}

std::vector<Signature> test_sigs() {
  return {Signature(1, 2), Signature(1, 3), Signature(2, 2), Signature(2, 3)};
}

}  // namespace

TEST_CASE("U_i basis matches the displayed matrices at (1,2)") {
  // U_i = E_i^0 - E_{n+1}^{n+1-i} for paired i, E_i^0 - E_{n+1}^i in between.
  CHECK(u_minus_basis(k12, 1).mat == elementary(5, 1, 0) - elementary(5, 4, 3));
  CHECK(u_minus_basis(k12, 2).mat == elementary(5, 2, 0) - elementary(5, 4, 2));
  CHECK(u_minus_basis(k12, 3).mat == elementary(5, 3, 0) - elementary(5, 4, 1));
}

TEST_CASE("T generates the displayed flow") {
  const AlgElement t = translation_T(k12);
  CHECK(t.mat == elementary(5, 0, 3) - elementary(5, 1, 4));
  // tau^s = exp(sT) = I + sT, acting as [y_0 + s y_n : y_1 - s y_{n+1} : ...]
  const Rat s = rat_of(7, 3);
  GroupElement tau = exp_nilpotent(t * s);
  CHECK(tau.mat == Mat::identity(5) + t.mat * s);
}

TEST_CASE("bracket: pinned commutators") {
  const AlgElement t = translation_T(k12);
  const AlgElement u1 = u_minus_basis(k12, 1);
  const AlgElement u3 = u_minus_basis(k12, 3);

  CHECK(bracket(t, u1).is_zero());
  CHECK(bracket(t, t).is_zero());
  // 5x5 commutator oracle, computed by hand: [T, U_n] = E_0^0 + E_1^1 - E_n^n - E_{n+1}^{n+1}
  Mat expected = elementary(5, 0, 0) + elementary(5, 1, 1) - elementary(5, 3, 3) - elementary(5, 4, 4);
  CHECK(bracket(t, u3).mat == expected);
  CHECK_FALSE(bracket(t, u3).is_zero());
}

TEST_CASE("jacobi identity on random triples") {
  for (const auto& sig : test_sigs()) {
    Rng rng(hash_label("jacobi" + sig.str()));
    for (int trial = 0; trial < 25; ++trial) {
      AlgElement x = random_alg_element(sig, rng);
      AlgElement y = random_alg_element(sig, rng);
      AlgElement z = random_alg_element(sig, rng);
      AlgElement acc = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) +
                       bracket(z, bracket(x, y));
      CHECK(acc.is_zero());
    }
  }
}

TEST_CASE("grade: block extraction and reconstruction") {
  const AlgElement t = translation_T(k12);
  const AlgElement u1 = u_minus_basis(k12, 1);

  Grading gt = grade(t);
  CHECK(gt.minus.is_zero());
  CHECK(gt.zero.is_zero());
  CHECK(gt.plus == t);

  Grading gu = grade(u1);
  CHECK(gu.minus == u1);
  CHECK(gu.zero.is_zero());
  CHECK(gu.plus.is_zero());

  Grading gsum = grade(t + u1);
  CHECK(gsum.minus == u1);
  CHECK(gsum.zero.is_zero());
  CHECK(gsum.plus == t);
}

TEST_CASE("grading bracket relations hold exactly") {
  for (const auto& sig : test_sigs()) {
    Rng rng(hash_label("grading" + sig.str()));
    for (int trial = 0; trial < 20; ++trial) {
      Vec v(sig.n()), w(sig.n());
      for (auto& c : v) c = rng.rational();
      for (auto& c : w) c = rng.rational();
      AlgElement up_v = iplus(sig, v), up_w = iplus(sig, w);
      AlgElement dn_v = iminus(sig, v), dn_w = iminus(sig, w);
      CHECK(bracket(up_v, up_w).is_zero());   // u^+ abelian
      CHECK(bracket(dn_v, dn_w).is_zero());   // u^- abelian

      AlgElement r = grade(random_alg_element(sig, rng)).zero;
      CHECK(grade(bracket(r, up_v)).minus.is_zero());
      CHECK(grade(bracket(r, up_v)).zero.is_zero());
      CHECK(grade(bracket(r, dn_v)).plus.is_zero());
      CHECK(grade(bracket(r, dn_v)).zero.is_zero());
    }
  }
}

TEST_CASE("iminus / iplus invert exactly") {
  Rng rng(99);
  for (const auto& sig : test_sigs()) {
    for (int trial = 0; trial < 10; ++trial) {
      Vec v(sig.n());
      for (auto& c : v) c = rng.rational();
      CHECK(inv_iminus(iminus(sig, v)) == v);
      CHECK(inv_iplus(iplus(sig, v)) == v);
    }
    CHECK(iminus(sig, Vec(sig.n(), Rat(0))).is_zero());
  }
  CHECK_THROWS_AS(inv_iplus(u_minus_basis(k12, 1)), domain_error);
}

TEST_CASE("iplus intertwines the reductive adjoint with the conformal action") {
  for (const auto& sig : test_sigs()) {
    Rng rng(hash_label("intertwine" + sig.str()));
    for (int trial = 0; trial < 10; ++trial) {
      Mat a = random_chart_orthogonal(sig, rng);
      Rat lam = rng.rational_nonzero(3, 2);
      GroupElement g = reductive_group(sig, lam, a);
      Vec v(sig.n());
      for (auto& c : v) c = rng.rational();
      // Ad g on u^+ is the conformal matrix lam.A on R^{p,q}.
      CHECK(adjoint(g, iplus(sig, v)) == iplus(sig, vec_scale(a * v, lam)));
    }
  }
}

TEST_CASE("adjoint pinned cases") {
  const AlgElement t = translation_T(k12);
  const AlgElement u1 = u_minus_basis(k12, 1);
  const AlgElement u3 = u_minus_basis(k12, 3);

  GroupElement id = GroupElement::identity(k12);
  CHECK(adjoint(id, u3) == u3);

  // e^{sT} fixes U_1, forced by [T, U_1] = 0.
  GroupElement tau = exp_nilpotent(t * rat_of(5, 2));
  CHECK(adjoint(tau, u1) == u1);

  // quarter-turn g_theta fixes U_n
  Mat rot(2, 2);
  rot(0, 1) = -1;
  rot(1, 0) = 1;
  GroupElement gtheta = sl2_embed(k12, rot);
  CHECK(adjoint(gtheta, u3) == u3);

  Rng rng(3);
  GroupElement g = random_group_element(k12, rng);
  CHECK(adjoint(g, adjoint(g.inverse(), u3)) == u3);
}

TEST_CASE("centralizer of T") {
  for (const auto& sig : {Signature(1, 2), Signature(1, 3), Signature(2, 2)}) {
    const AlgElement t = translation_T(sig);
    Subalgebra c = centralizer(sig, {t});
    const int n = sig.n();
    const int inner = (n - 2) * (n - 3) / 2;  // dim o(p-1,q-1)
    CHECK(c.dim() == 4 + 2 * (n - 2) + inner);
    CHECK(c.contains(t));
    CHECK(c.is_bracket_closed());
  }
  // no constraints: the whole algebra
  CHECK(centralizer(k12, {}).dim() == o_dim(k12));
  CHECK(o_dim(k12) == 10);
}

TEST_CASE("ker(ad T) meets u^- exactly in R.U_1") {
  for (const auto& sig : test_sigs()) {
    const AlgElement t = translation_T(sig);
    const int n = sig.n();
    const int m = sig.ambient_dim();
    Mat cons(m * m, n);
    for (int k = 0; k < n; ++k) {
      Vec br = bracket(t, u_minus_basis(sig, k + 1)).flat();
      for (int r = 0; r < m * m; ++r) cons(r, k) = br[r];
    }
    auto ns = nullspace(cons);
    REQUIRE(ns.size() == 1);
    // the kernel line is the first chart coordinate, i.e. U_1
    CHECK(projectivize(ns[0]).rep == basis_vec(n, 0));
  }
}

TEST_CASE("parabolic subalgebras") {
  for (const auto& sig : test_sigs()) {
    const int m = sig.ambient_dim();
    const int n = sig.n();
    Subalgebra p = parabolic(sig, projectivize(basis_vec(m, 0)));
    CHECK(p.dim() == o_dim(sig) - n);

    // p at [e_0] is exactly r + u^+ (span equality with the graded pieces)
    SpanBasis graded(m * m);
    for (const auto& b : o_basis(sig)) {
      Grading g = grade(b);
      graded.add(g.zero.flat());
      graded.add(g.plus.flat());
    }
    CHECK(graded.equals(p.flat_span()));

    // p^- at [e_{n+1}] is r + u^-
    Subalgebra pm = parabolic(sig, projectivize(basis_vec(m, m - 1)));
    SpanBasis graded_minus(m * m);
    for (const auto& b : o_basis(sig)) {
      Grading g = grade(b);
      graded_minus.add(g.zero.flat());
      graded_minus.add(g.minus.flat());
    }
    CHECK(graded_minus.equals(pm.flat_span()));
  }
  CHECK_THROWS_AS(parabolic(k12, projectivize(basis_vec(5, 2))), domain_error);
}

TEST_CASE("codimension facts") {
  for (const auto& sig : test_sigs()) {
    const AlgElement t = translation_T(sig);
    Subalgebra ct = centralizer(sig, {t});
    Subalgebra p = parabolic(sig, projectivize(basis_vec(sig.ambient_dim(), 0)));

    Subalgebra ct_and_p = intersect(ct, p);
    CHECK(codim_in(ct_and_p, ct) == 1);
    CHECK(codim_in(ct, ct) == 0);

    Subalgebra whole = centralizer(sig, {});
    CHECK(codim_in(p, whole) == sig.n());

    // intersection basis really lies in both
    for (const auto& b : ct_and_p.basis) {
      CHECK(ct.contains(b));
      CHECK(p.contains(b));
    }
  }
}

TEST_CASE("exp_nilpotent") {
  CHECK(exp_nilpotent(translation_T(k12) * Rat(0)) == GroupElement::identity(k12));

  const AlgElement u3 = u_minus_basis(k12, 3);
  const Rat t = rat_of(4, 7);
  CHECK(exp_nilpotent(u3 * t) * exp_nilpotent(u3 * t) == exp_nilpotent(u3 * (2 * t)));

  // non-nilpotent input fails loudly
  const AlgElement sl2ish = bracket(translation_T(k12), u_minus_basis(k12, 3));
  CHECK_THROWS_AS(exp_nilpotent(sl2ish), domain_error);
}

TEST_CASE("sl2_embed") {
  CHECK(sl2_embed(k12, Mat::identity(2)) == GroupElement::identity(k12));

  Mat bad = Mat::identity(2) * rat_of(2);
  CHECK_THROWS_AS(sl2_embed(k12, bad), domain_error);

  for (const auto& sig : test_sigs()) {
    Rng rng(hash_label("sl2" + sig.str()));
    for (int trial = 0; trial < 15; ++trial) {
      Mat a = random_sl2(rng), b = random_sl2(rng);
      CHECK(sl2_embed(sig, a) * sl2_embed(sig, b) == sl2_embed(sig, a * b));
    }
    // image normalizes span{e_0, e_1}: columns 0,1 have support in rows 0,1
    Mat g = sl2_embed(sig, random_sl2(rng)).mat;
    for (int i = 2; i < sig.ambient_dim(); ++i) {
      CHECK(g(i, 0) == 0);
      CHECK(g(i, 1) == 0);
    }
  }
}

TEST_CASE("isometry_null_to_null maps exactly") {
  for (const auto& sig : test_sigs()) {
    const SplitForm f = ambient_form(sig);
    Rng rng(hash_label("refl" + sig.str()));
    for (int trial = 0; trial < 10; ++trial) {
      Vec a = random_null_vector(f, rng);
      Vec b = random_null_vector(f, rng);
      GroupElement g = isometry_null_to_null(sig, a, b);
      CHECK(g.mat * a == b);
    }
    // orthogonal null pair exercises the two-reflection branch
    const int m = sig.ambient_dim();
    Vec e0 = basis_vec(m, 0), e1 = basis_vec(m, 1);
    CHECK(f.inner(e0, e1) == 0);
    GroupElement g = isometry_null_to_null(sig, e0, e1);
    CHECK(g.mat * e0 == e1);
  }
}

TEST_CASE("group elements preserve the form by construction") {
  for (const auto& sig : test_sigs()) {
    Rng rng(hash_label("grp" + sig.str()));
    const Mat j = ambient_gram(sig);
    for (int trial = 0; trial < 10; ++trial) {
      GroupElement g = random_group_element(sig, rng);
      CHECK(g.mat.transpose() * j * g.mat == j);
      CHECK((g * g.inverse()).mat == Mat::identity(sig.ambient_dim()));
    }
  }
}
