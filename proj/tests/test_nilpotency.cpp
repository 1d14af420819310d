#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ein/nilpotency.hpp"

using namespace ein;

namespace {

const Signature k12(1, 2);

Subalgebra uplus_algebra(const Signature& sig) {
  std::vector<AlgElement> gens;
  for (int i = 0; i < sig.n(); ++i) gens.push_back(iplus(sig, basis_vec(sig.n(), i)));
  return subalgebra_from_span(sig, gens);
}

}  // namespace

TEST_CASE("lower central series: abelian u^+ has degree 1") {
  for (const auto& sig : {Signature(1, 2), Signature(2, 3)}) {
    LowerCentralSeries s = lower_central_series(uplus_algebra(sig));
    REQUIRE(s.degree.has_value());
    CHECK(*s.degree == 1);
    CHECK(s.terms.size() == 1);
  }
}

TEST_CASE("lower central series: the parabolic is not nilpotent") {
  Subalgebra p = parabolic(k12, projectivize(basis_vec(5, 0)));
  LowerCentralSeries s = lower_central_series(p);
  CHECK(!s.degree.has_value());
}

TEST_CASE("closure of {T, U_n} is sl(2)-like, hence not nilpotent") {
  // The triple {T, U_n, [T,U_n]} does not close to a Heisenberg algebra:
  // [T,U_n] acts semisimply on the pair, so the series stabilizes.
  Subalgebra h = bracket_closure(k12, {translation_T(k12), u_minus_basis(k12, 3)});
  CHECK(h.dim() == 3);
  LowerCentralSeries s = lower_central_series(h);
  CHECK(!s.degree.has_value());
}

TEST_CASE("a genuine Heisenberg triple has degree 2") {
  // {U_2^- , [T,U_2], U_1}: two-step with center R.U_1.
  const AlgElement t = translation_T(k12);
  const AlgElement u2 = u_minus_basis(k12, 2);
  Subalgebra h = bracket_closure(k12, {u2, bracket(t, u2)});
  CHECK(h.dim() == 3);
  CHECK(nilpotence_degree(h) == 2);
}

TEST_CASE("series dimensions strictly decrease for nilpotent inputs") {
  Rng rng(hash_label("monotone"));
  for (int trial = 0; trial < 25; ++trial) {
    Subalgebra h = random_nilpotent_subalgebra(k12, rng);
    LowerCentralSeries s = lower_central_series(h);
    REQUIRE(s.degree.has_value());
    for (size_t i = 1; i < s.terms.size(); ++i)
      CHECK(s.terms[i].dim() < s.terms[i - 1].dim());
  }
}

TEST_CASE("order_of_nilpotents pinned cases") {
  const AlgElement t = translation_T(k12);
  // matrix power oracle: T^2 = 0 exactly, so the order on R^{p+1,q+1} is 2
  CHECK((t.mat * t.mat).is_zero());
  OrderReport rep = order_of_nilpotents({t.mat}, 5);
  REQUIRE(rep.order.has_value());
  CHECK(*rep.order == 2);

  OrderReport zero = order_of_nilpotents({Mat(5, 5)}, 5);
  REQUIRE(zero.order.has_value());
  CHECK(*zero.order == 1);

  // a non-nilpotent element stabilizes at a nonzero subspace
  const AlgElement z = bracket(t, u_minus_basis(k12, 3));
  OrderReport bad = order_of_nilpotents({z.mat}, 5);
  CHECK(!bad.order.has_value());
}

TEST_CASE("nilpotence degree with ad cross-check") {
  CHECK(nilpotence_degree(uplus_algebra(k12)) == 1);

  Rng rng(hash_label("dvso"));
  for (int trial = 0; trial < 15; ++trial) {
    Subalgebra h = random_nilpotent_subalgebra(k12, rng);
    if (h.dim() == 0) continue;
    CHECK(nilpotence_degree(h, true) >= 1);  // throws internally on mismatch
  }
}

TEST_CASE("is_null_translation") {
  const AlgElement t = translation_T(k12);
  CHECK(is_null_translation(t));

  // U_1 is Ad-conjugate to a T-type element
  CHECK(is_null_translation(u_minus_basis(k12, 1)));

  // spacelike translation: u^+ square formula gives X^2 = -Q(v).E_0^{n+1} != 0
  Vec spacelike = basis_vec(3, 1);  // middle slot, Q = 1
  AlgElement sp = iplus(k12, spacelike);
  Mat sq = sp.mat * sp.mat;
  CHECK(!sq.is_zero());
  CHECK(sq == -(Mat::identity(5) * Rat(0) + [&] {
          Mat e(5, 5);
          e(0, 4) = chart_form(k12).eval(spacelike);
          return e;
        }()));
  CHECK(!is_null_translation(sp));

  CHECK(!is_null_translation(t * Rat(0)));
}

TEST_CASE("null translation witness: conjugation into u^+") {
  for (const auto& sig : {Signature(1, 2), Signature(2, 2)}) {
    Rng rng(hash_label("ntw" + sig.str()));
    const AlgElement t = translation_T(sig);
    for (int trial = 0; trial < 20; ++trial) {
      GroupElement g = random_group_element(sig, rng);
      Rat lam = rng.rational_nonzero(4, 2);
      AlgElement x = adjoint(g, t * lam);
      CHECK(is_null_translation(x));
      NullTranslationWitness w = null_translation_witness(x);
      CHECK(w.ok);
      CHECK(w.uplus_norm == 0);
      CHECK(ambient_form(sig).is_null(w.fixed_line));
    }
    // negative: a non-null translation vector fails via X^2 != 0
    Vec nonnull(sig.n(), Rat(0));
    nonnull[0] = 1;
    nonnull[sig.n() - 1] = 1;  // split pair, Q = 2
    CHECK(chart_form(sig).eval(nonnull) != 0);
    CHECK(!null_translation_witness(iplus(sig, nonnull)).ok);
  }
}

TEST_CASE("verify_degree_bound") {
  // abelian: d = 1 <= 3
  DegreeBoundReport rep = verify_degree_bound(uplus_algebra(k12));
  CHECK(rep.degree_ok);
  CHECK(*rep.degree == 1);
  CHECK(rep.bound == 3);

  for (const auto& sig : {Signature(1, 2), Signature(1, 3), Signature(2, 2)}) {
    Rng rng(hash_label("dbound" + sig.str()));
    for (int trial = 0; trial < 20; ++trial) {
      Subalgebra h = random_nilpotent_subalgebra(sig, rng);
      DegreeBoundReport r = verify_degree_bound(h);
      CHECK(r.degree_ok);
      if (r.top_translations_checked) CHECK(r.top_translations_ok);
    }
  }
}

TEST_CASE("relation containment") {
  // u = u^+: ubar = 0, so u_k = 0 for k >= 1; trivially contained
  ContainmentReport triv = relation_containment(uplus_algebra(k12));
  CHECK(triv.all_hold);
  REQUIRE(triv.degree.has_value());
  CHECK(*triv.degree == 1);

  for (const auto& sig : {Signature(1, 2), Signature(2, 2)}) {
    Rng rng(hash_label("contain" + sig.str()));
    for (int trial = 0; trial < 20; ++trial) {
      Subalgebra u = random_nilpotent_subalgebra(sig, rng, /*conjugate=*/false);
      ContainmentReport r = relation_containment(u);
      CHECK(r.all_hold);
    }
  }

  // conjugated input generally leaves p
  Rng rng(12);
  Subalgebra off = random_nilpotent_subalgebra(k12, rng, true);
  bool in_p = true;
  for (const auto& b : off.basis)
    if (!grade(b).minus.is_zero()) in_p = false;
  if (!in_p) CHECK_THROWS_AS(relation_containment(off), domain_error);
}

TEST_CASE("ad_brackets_property") {
  const AlgElement t = translation_T(k12);
  const AlgElement u2 = u_minus_basis(k12, 2);
  Subalgebra heis = bracket_closure(k12, {u2, bracket(t, u2)});
  std::vector<Mat> mats;
  for (const auto& b : heis.basis) mats.push_back(b.mat);

  std::vector<Vec> module;
  for (int i = 0; i < 5; ++i) module.push_back(basis_vec(5, i));

  CHECK(ad_brackets_property(mats, module, 1));
  CHECK(ad_brackets_property(mats, module, 2));

  Rng rng(hash_label("adbr"));
  for (int trial = 0; trial < 10; ++trial) {
    Subalgebra h = random_nilpotent_subalgebra(k12, rng);
    std::vector<Mat> hm;
    for (const auto& b : h.basis) hm.push_back(b.mat);
    LowerCentralSeries s = lower_central_series(h);
    REQUIRE(s.degree.has_value());
    for (int k = 1; k <= *s.degree; ++k) CHECK(ad_brackets_property(hm, module, k));
  }
}

TEST_CASE("rep_order_bound") {
  // p = 0: a nilpotent subalgebra of co(0,q) is trivial; order 1
  RepOrderReport r0 = rep_order_bound(Signature(0, 3), {});
  CHECK(r0.order == 1);
  CHECK(r0.bound == 1);
  CHECK(r0.ok);

  // single square-zero chart element at (2,2): order 2
  {
    const Signature s22(2, 2);
    Mat y(4, 4);
    y(0, 2) = 1;
    y(1, 3) = -1;
    reductive(s22, 0, y);  // validates membership in o(2,2)
    CHECK((y * y).is_zero());
    RepOrderReport r = rep_order_bound(s22, {y});
    CHECK(r.order == 2);
    CHECK(r.ok);
  }

  // random nilpotent ubar at (1,2): order <= 3
  {
    Rng rng(hash_label("repord"));
    for (int trial = 0; trial < 20; ++trial) {
      Subalgebra u = random_nilpotent_subalgebra(k12, rng, false);
      std::vector<Mat> ubar;
      for (const auto& b : u.basis) {
        Grading g = grade(b);
        Mat conf(3, 3);
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) conf(i, j) = g.zero.mat(i + 1, j + 1);
        for (int i = 0; i < 3; ++i) conf(i, i) += g.zero.mat(0, 0);
        ubar.push_back(conf);
      }
      RepOrderReport r = rep_order_bound(k12, ubar);
      CHECK(r.ok);
    }
  }

  // non-nilpotent input is rejected loudly
  Mat bad = Mat::identity(3);
  CHECK_THROWS_AS(rep_order_bound(k12, {bad}), domain_error);
}

TEST_CASE("witness_search finds degree 2p+1 when q > p") {
  for (const auto& sig : {Signature(1, 2), Signature(1, 3)}) {
    WitnessResult w = witness_search(sig.p, sig.q, 10000);
    REQUIRE(w.found);
    CHECK(w.best_degree == 3);
    CHECK(nilpotence_degree(*w.algebra) == 3);
    // top of the series consists of null translations
    DegreeBoundReport rep = verify_degree_bound(*w.algebra);
    CHECK(rep.degree_ok);
    CHECK(rep.top_translations_checked);
    CHECK(rep.top_translations_ok);
  }
  WitnessResult w23 = witness_search(2, 3, 20000);
  REQUIRE(w23.found);
  CHECK(w23.best_degree == 5);
}

TEST_CASE("witness_search at (2,2) reports the obstruction") {
  WitnessResult w = witness_search(2, 2, 1500);
  CHECK(!w.found);
  CHECK(w.best_degree <= 4);
  CHECK(w.trace.find("constructive path unavailable") != std::string::npos);
}

TEST_CASE("strict upper triangular basis is nilpotent and in o") {
  for (const auto& sig : {Signature(1, 2), Signature(2, 3)}) {
    auto upper = o_strict_upper_basis(sig);
    CHECK(!upper.empty());
    for (const auto& b : upper) {
      for (int i = 0; i < sig.ambient_dim(); ++i)
        for (int j = 0; j <= i; ++j) CHECK(b.mat(i, j) == 0);
    }
  }
}
