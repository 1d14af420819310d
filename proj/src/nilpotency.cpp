#include "ein/nilpotency.hpp"

#include <chrono>

namespace ein {

namespace {

int flat_dim(const std::vector<Mat>& basis) {
  return basis.empty() ? 0 : basis[0].rows() * basis[0].cols();
}

std::vector<Mat> reduce_mats(const std::vector<Mat>& gens) {
  if (gens.empty()) return {};
  SpanBasis s(flat_dim(gens));
  std::vector<Mat> out;
  for (const auto& g : gens)
    if (s.add(g.flatten())) out.push_back(g);
  return out;
}

bool mat_nilpotent(const Mat& m) {
  Mat power = m;
  for (int k = 1; k <= m.rows(); ++k) {
    if (power.is_zero()) return true;
    power = power * m;
  }
  return power.is_zero();
}

}  // namespace

CentralSeries lower_central_series_mats(const std::vector<Mat>& basis) {
  CentralSeries out;
  out.terms.push_back(reduce_mats(basis));
  if (out.terms[0].empty()) {
    out.degree = 0;
    return out;
  }
  for (;;) {
    const auto& h = out.terms[0];
    const auto& prev = out.terms.back();
    std::vector<Mat> next_gens;
    for (const auto& x : h)
      for (const auto& y : prev) next_gens.push_back(commutator(x, y));
    std::vector<Mat> next = reduce_mats(next_gens);
    if (next.empty()) {
      out.degree = int(out.terms.size());
      return out;
    }
    if (next.size() >= prev.size()) return out;  // stabilized nonzero: not nilpotent
    out.terms.push_back(std::move(next));
  }
}

LowerCentralSeries lower_central_series(const Subalgebra& h) {
  check_domain(h.is_bracket_closed(), "lower_central_series: input not bracket-closed");
  std::vector<Mat> mats;
  for (const auto& b : h.basis) mats.push_back(b.mat);
  CentralSeries core = lower_central_series_mats(mats);
  LowerCentralSeries out;
  out.degree = core.degree;
  for (const auto& term : core.terms) {
    std::vector<AlgElement> elems;
    for (const auto& m : term) elems.emplace_back(h.sig, m);
    out.terms.push_back(Subalgebra{h.sig, std::move(elems)});
  }
  return out;
}

OrderReport order_of_nilpotents(const std::vector<Mat>& ops,
                                const std::vector<Vec>& module_basis) {
  OrderReport out;
  check_domain(!module_basis.empty(), "order_of_nilpotents: empty module");
  const int dim = int(module_basis[0].size());
  for (const auto& op : ops)
    check_domain(op.cols() == dim, "order_of_nilpotents: module dimension mismatch");
  out.module_dim = int(span_of(module_basis, dim).dim());

  // An algebra of nilpotents annihilates any module within module_dim
  // products (Engel), so reaching the cap means "not nilpotent".
  std::vector<Vec> current = module_basis;
  for (int k = 1; k <= out.module_dim + 1; ++k) {
    std::vector<Vec> images;
    for (const auto& op : ops)
      for (const auto& w : current) images.push_back(op * w);
    std::vector<Vec> next = span_of(images, dim).rows();
    if (next.empty()) {
      out.order = k;
      out.product_subspaces.push_back({});
      return out;
    }
    out.product_subspaces.push_back(next);
    current = std::move(next);
  }
  return out;  // order unset: not an algebra of nilpotents on this module
}

OrderReport order_of_nilpotents(const std::vector<Mat>& ops, int module_dim) {
  std::vector<Vec> basis;
  for (int i = 0; i < module_dim; ++i) basis.push_back(basis_vec(module_dim, i));
  return order_of_nilpotents(ops, basis);
}

int nilpotence_degree(const Subalgebra& h, bool crosscheck_ad) {
  LowerCentralSeries s = lower_central_series(h);
  check_domain(s.degree.has_value(), "nilpotence_degree: algebra is not nilpotent");
  const int d = *s.degree;

  if (crosscheck_ad && h.dim() > 0) {
    // d(h) = o(ad h): build the adjoint matrices in basis coordinates.
    const int dim = h.dim();
    const int mm = h.sig.ambient_dim() * h.sig.ambient_dim();
    Mat basis_cols(mm, dim);
    for (int j = 0; j < dim; ++j) {
      Vec f = h.basis[j].flat();
      for (int r = 0; r < mm; ++r) basis_cols(r, j) = f[r];
    }
    std::vector<Mat> ad_mats;
    for (int i = 0; i < dim; ++i) {
      Mat ad(dim, dim);
      for (int j = 0; j < dim; ++j) {
        auto coords = solve_exact(basis_cols, bracket(h.basis[i], h.basis[j]).flat());
        check_internal(coords.has_value(), "adjoint image escaped the subalgebra");
        for (int r = 0; r < dim; ++r) ad(r, j) = (*coords)[r];
      }
      ad_mats.push_back(std::move(ad));
    }
    OrderReport rep = order_of_nilpotents(ad_mats, dim);
    check_internal(rep.order.has_value() && *rep.order == d,
                   "degree/ad-order cross-check failed");
  }
  return d;
}

bool is_null_translation(const AlgElement& x) {
  if (x.is_zero()) return false;
  if (!(x.mat * x.mat).is_zero()) return false;
  return rank(x.mat) == 2;
}

NullTranslationWitness null_translation_witness(const AlgElement& x) {
  NullTranslationWitness w;
  if (!is_null_translation(x)) {
    w.reason = "intrinsic test failed (need X != 0, X^2 = 0, rank X = 2)";
    return w;
  }
  const Signature sig = x.sig;
  const int m = sig.ambient_dim();
  const SplitForm f = ambient_form(sig);

  // Any line in the image works as the fixed null line.
  Vec img;
  for (int j = 0; j < m && img.empty(); ++j) {
    Vec col(m);
    for (int i = 0; i < m; ++i) col[i] = x.mat(i, j);
    if (!vec_is_zero(col)) img = col;
  }
  check_internal(!img.empty(), "rank-2 matrix with no nonzero column");
  check_internal(f.is_null(img), "image of a square-zero o-element must be isotropic");
  w.fixed_line = img;

  GroupElement g = isometry_null_to_null(sig, img, basis_vec(m, 0));
  AlgElement moved = adjoint(g, x);
  Grading parts = grade(moved);
  if (!parts.minus.is_zero() || !parts.zero.is_zero()) {
    w.reason = "conjugation did not land in u^+";
    return w;
  }
  w.uplus_vector = inv_iplus(parts.plus);
  w.uplus_norm = chart_form(sig).eval(w.uplus_vector);
  w.ok = (w.uplus_norm == 0);
  if (!w.ok) w.reason = "conjugated u^+ vector is not null";
  return w;
}

DegreeBoundReport verify_degree_bound(const Subalgebra& h) {
  DegreeBoundReport rep;
  rep.bound = 2 * h.sig.p + 1;
  LowerCentralSeries s = lower_central_series(h);
  rep.degree = s.degree;
  if (!s.degree.has_value()) {
    rep.failure = "input algebra is not nilpotent";
    return rep;
  }
  const int d = *s.degree;
  rep.degree_ok = d <= rep.bound;
  if (!rep.degree_ok) {
    rep.failure = "degree exceeds 2p+1";
    return rep;
  }
  if (d >= 2 * h.sig.p && d >= 1) {
    rep.top_translations_checked = true;
    rep.top_translations_ok = true;
    for (const auto& top : s.terms[d - 1].basis) {
      if (!is_null_translation(top)) {
        rep.top_translations_ok = false;
        rep.failure = "element of h_{d-1} fails the null-translation test";
        return rep;
      }
    }
  }
  return rep;
}

ContainmentReport relation_containment(const Subalgebra& u) {
  const Signature sig = u.sig;
  const int n = sig.n();

  for (const auto& b : u.basis)
    check_domain(grade(b).minus.is_zero(), "relation_containment: input not inside p");
  check_domain(u.is_bracket_closed(), "relation_containment: input not bracket-closed");

  // Projection to the conformal block: a.I + M acting on R^{p,q}.
  std::vector<Mat> ubar;
  for (const auto& b : u.basis) {
    Grading g = grade(b);
    Mat conf(n, n);
    const Rat a = g.zero.mat(0, 0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) conf(i, j) = g.zero.mat(i + 1, j + 1);
      conf(i, i) += a;
    }
    ubar.push_back(std::move(conf));
  }

  ContainmentReport rep;
  LowerCentralSeries useries = lower_central_series(u);
  rep.degree = useries.degree;
  CentralSeries bar_series = lower_central_series_mats(ubar);
  OrderReport bar_products = order_of_nilpotents(ubar, n);

  // Clamp into the stored prefixes; a stabilized tail repeats its last term.
  const auto bar_term = [&](int k) -> const std::vector<Mat>* {
    if (bar_series.degree.has_value() && k >= int(bar_series.terms.size())) return nullptr;
    return &bar_series.terms[std::min(k, int(bar_series.terms.size()) - 1)];
  };
  const auto bar_prod = [&](int k) -> const std::vector<Vec>* {
    const auto& ps = bar_products.product_subspaces;
    if (ps.empty()) return nullptr;
    return &ps[std::min(size_t(k - 1), ps.size() - 1)];
  };

  const int mm = sig.ambient_dim() * sig.ambient_dim();
  const int kmax = int(useries.terms.size()) - 1;
  rep.all_hold = true;
  for (int k = 1; k <= kmax; ++k) {
    SpanBasis rhs(mm);
    if (const auto* terms = bar_term(k))
      for (const auto& mmat : *terms) rhs.add(reductive(sig, 0, mmat).flat());
    if (const auto* prods = bar_prod(k))
      for (const auto& v : *prods) rhs.add(iplus(sig, v).flat());
    bool ok = true;
    for (const auto& b : useries.terms[k].basis)
      if (!rhs.contains(b.flat())) ok = false;
    rep.holds.push_back(ok);
    if (!ok) rep.all_hold = false;
  }
  return rep;
}

bool ad_brackets_property(const std::vector<Mat>& l, const std::vector<Vec>& module_basis,
                          int k) {
  check_domain(k >= 1, "ad_brackets_property: k must be >= 1");
  CentralSeries s = lower_central_series_mats(l);
  OrderReport prod = order_of_nilpotents(l, module_basis);
  if (k - 1 >= int(s.terms.size())) return true;  // l_{k-1} = 0
  const int dim = int(module_basis[0].size());

  SpanBasis target(dim);
  if (!prod.product_subspaces.empty()) {
    const size_t idx = std::min(size_t(k - 1), prod.product_subspaces.size() - 1);
    for (const auto& v : prod.product_subspaces[idx]) target.add(v);
  }

  for (const auto& y : s.terms[k - 1])
    for (const auto& v : module_basis)
      if (!target.contains(y * v)) return false;
  return true;
}

RepOrderReport rep_order_bound(const Signature& sig, const std::vector<Mat>& ubar) {
  for (const auto& m : ubar)
    check_domain(mat_nilpotent(m), "rep_order_bound: non-nilpotent element present");
  RepOrderReport rep;
  rep.bound = 2 * sig.p + 1;
  OrderReport ord = order_of_nilpotents(ubar, sig.n());
  check_internal(ord.order.has_value(),
                 "algebra of nilpotent matrices must have finite order");
  rep.order = *ord.order;
  rep.ok = rep.order <= rep.bound;
  return rep;
}

std::vector<AlgElement> o_strict_upper_basis(const Signature& sig) {
  const auto basis = o_basis(sig);
  const int d = int(basis.size());
  const int m = sig.ambient_dim();

  // Constrain every on-or-below-diagonal entry to zero.
  std::vector<std::pair<int, int>> lower;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= i; ++j) lower.emplace_back(i, j);

  Mat cons(int(lower.size()), d);
  for (int k = 0; k < d; ++k)
    for (size_t r = 0; r < lower.size(); ++r)
      cons(int(r), k) = basis[k].mat(lower[r].first, lower[r].second);

  std::vector<AlgElement> out;
  for (const Vec& c : nullspace(cons)) {
    Mat acc(m, m);
    for (int k = 0; k < d; ++k)
      if (c[k] != 0) acc = acc + basis[k].mat * c[k];
    out.emplace_back(sig, acc);
  }
  return out;
}

Subalgebra random_nilpotent_subalgebra(const Signature& sig, Rng& rng, bool conjugate) {
  const auto upper = o_strict_upper_basis(sig);
  const int gens = int(rng.uniform(2, 4));
  std::vector<AlgElement> picks;
  for (int g = 0; g < gens; ++g) {
    Mat acc(sig.ambient_dim(), sig.ambient_dim());
    for (const auto& b : upper) {
      Rat c = rat_of(rng.uniform(-2, 2));
      if (c != 0) acc = acc + b.mat * c;
    }
    if (!acc.is_zero()) picks.emplace_back(sig, acc);
  }
  if (picks.empty()) picks.push_back(upper[0]);
  Subalgebra closed = bracket_closure(sig, picks);
  if (!conjugate) return closed;

  GroupElement g = random_group_element(sig, rng);
  std::vector<AlgElement> moved;
  for (const auto& b : closed.basis) moved.push_back(adjoint(g, b));
  return Subalgebra{sig, std::move(moved)};
}

Mat regular_chain_generator(const Signature& sig) {
  const int p = sig.p, q = sig.q, n = sig.n();
  check_domain(q >= p + 1, "regular chain needs q >= p+1");
  check_domain(p >= 1, "regular chain needs p >= 1");

  // Chart indices of the chain w_1, ..., w_{2p+1} through one definite slot.
  std::vector<int> w(2 * p + 2);  // 1-based
  for (int i = 1; i <= p; ++i) w[i] = i - 1;
  w[p + 1] = p;
  for (int i = p + 2; i <= 2 * p + 1; ++i) w[i] = n - (2 * p + 2 - i);

  Mat y(n, n);
  for (int k = 2; k <= 2 * p + 1; ++k) {
    const Rat c = (k <= p + 1) ? Rat(1) : Rat(-1);
    y(w[k - 1], w[k]) = c;  // Y w_k = c_k w_{k-1}
  }
  return y;
}

WitnessResult witness_search(int p, int q, std::int64_t budget_ms, int max_trials) {
  const auto start = std::chrono::steady_clock::now();
  const Signature sig(p, q);
  WitnessResult res;
  res.target_degree = 2 * p + 1;
  check_domain(p >= 1, "witness_search needs p >= 1");

  if (q >= p + 1) {
    Mat y = regular_chain_generator(sig);
    std::vector<AlgElement> gens;
    gens.push_back(reductive(sig, 0, y));
    for (int i = 0; i < sig.n(); ++i)
      gens.push_back(iplus(sig, basis_vec(sig.n(), i)));
    Subalgebra w = subalgebra_from_span(sig, gens);
    check_internal(w.is_bracket_closed(), "witness candidate must be bracket-closed");
    LowerCentralSeries s = lower_central_series(w);
    if (s.degree.has_value() && *s.degree == res.target_degree) {
      res.found = true;
      res.algebra = w;
      res.best_degree = *s.degree;
      res.trace = "constructive: regular o(p,p+1) chain acting on all translations";
      return res;
    }
    res.trace = "constructive candidate had degree " +
                (s.degree ? std::to_string(*s.degree) : std::string("infinity"));
  } else {
    res.trace =
        "constructive path unavailable at q = p: the chain generator needs a "
        "(p,p+1) block, and the invariant isotropic p-plane N of any nilpotent "
        "projection has N = N^perp, capping the representation order at 2p; ";
  }

  // Randomized fallback, bounded by the budget and the trial cap.
  Rng rng(hash_label("witness" + sig.str()));
  int best = 0;
  int trials = 0;
  for (; trials < max_trials; ++trials) {
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    if (elapsed > budget_ms) break;
    Subalgebra h = random_nilpotent_subalgebra(sig, rng, false);
    LowerCentralSeries s = lower_central_series(h);
    if (!s.degree.has_value()) continue;
    if (*s.degree > best) best = *s.degree;
    if (*s.degree == res.target_degree) {
      res.found = true;
      res.algebra = h;
      res.best_degree = best;
      res.trace += "randomized search found a witness after " +
                   std::to_string(trials + 1) + " trials";
      return res;
    }
  }
  res.best_degree = best;
  res.trace += "randomized search exhausted (" + std::to_string(trials) +
               " trials, best degree " + std::to_string(best) + ")";
  return res;
}

}  // namespace ein
