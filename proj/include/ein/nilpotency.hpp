#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ein/liealg.hpp"

namespace ein {

/// Lower central series of a matrix Lie algebra: terms[0] = h,
/// terms[k] = span [h, terms[k-1]].  degree is the first k with
/// terms[k] = 0, or nullopt when the series stabilizes at a nonzero
/// subspace ("not nilpotent" is a value, not an error).
struct CentralSeries {
  std::vector<std::vector<Mat>> terms;
  std::optional<int> degree;
};

CentralSeries lower_central_series_mats(const std::vector<Mat>& basis);

struct LowerCentralSeries {
  std::vector<Subalgebra> terms;
  std::optional<int> degree;
};

/// domain_error if h is not bracket-closed.
LowerCentralSeries lower_central_series(const Subalgebra& h);

/// Order of nilpotence of an operator algebra on a module: the minimal k
/// such that every k-fold product annihilates the module.
struct OrderReport {
  int module_dim = 0;
  std::optional<int> order;
  std::vector<std::vector<Vec>> product_subspaces;  // l^1(V), l^2(V), ...
};

OrderReport order_of_nilpotents(const std::vector<Mat>& ops,
                                const std::vector<Vec>& module_basis);
OrderReport order_of_nilpotents(const std::vector<Mat>& ops, int module_dim);

/// Degree from the series, cross-checked against o(ad h) when requested.
/// domain_error when h is not nilpotent.
int nilpotence_degree(const Subalgebra& h, bool crosscheck_ad = true);

/// Intrinsic test for membership in the adjoint class of the null
/// translation T: X != 0, X^2 = 0, rank X = 2.
bool is_null_translation(const AlgElement& x);

/// Constructive certificate behind is_null_translation: a rational
/// conjugation moving X into u^+, plus the (null) chart vector it lands on.
struct NullTranslationWitness {
  bool ok = false;
  std::string reason;
  Vec fixed_line;        // null line [w] with X.w = 0, X(w^perp) in R.w
  Vec uplus_vector;      // i^+ preimage after conjugation
  Rat uplus_norm;        // Q^{p,q} of that vector; 0 for a true null translation
};

NullTranslationWitness null_translation_witness(const AlgElement& x);

/// Report for the degree bound d(h) <= 2p+1, with the null-translation
/// check on h_{d-1} whenever d >= 2p.
struct DegreeBoundReport {
  std::optional<int> degree;
  int bound = 0;
  bool degree_ok = false;
  bool top_translations_checked = false;
  bool top_translations_ok = false;
  std::string failure;
};

DegreeBoundReport verify_degree_bound(const Subalgebra& h);

/// Containment u_k inside ubar_k + ubar^k(R^{p,q}) for every k up to the
/// degree, after projecting u <= p to the conformal block.
struct ContainmentReport {
  std::optional<int> degree;
  std::vector<bool> holds;  // index k-1 for u_k
  bool all_hold = false;
};

ContainmentReport relation_containment(const Subalgebra& u);

/// Y(v) in l^k(V) for every Y in l_{k-1} and module basis vector v.
bool ad_brackets_property(const std::vector<Mat>& l, const std::vector<Vec>& module_basis,
                          int k);

/// Order bound o(ubar) <= 2p+1 for an algebra of nilpotents in co(p,q),
/// acting on R^{p,q}.  domain_error when a non-nilpotent matrix is present.
struct RepOrderReport {
  int order = 0;
  int bound = 0;
  bool ok = false;
};

RepOrderReport rep_order_bound(const Signature& sig, const std::vector<Mat>& ubar);

/// Degree-(2p+1) witness construction.  Constructive when q > p (regular
/// nilpotent chain in an o(p,p+1) block acting on the translations);
/// randomized fallback otherwise, bounded by budget_ms and max_trials.
/// When the trial cap binds before the clock, the outcome (including the
/// trace) is deterministic.
struct WitnessResult {
  bool found = false;
  std::optional<Subalgebra> algebra;
  int target_degree = 0;
  int best_degree = 0;
  std::string trace;
};

WitnessResult witness_search(int p, int q, std::int64_t budget_ms = 120000,
                             int max_trials = 2000);

/// Basis of the strictly upper triangular part of o(p+1,q+1): the
/// nilradical of the minimal parabolic in flag-adapted coordinates.
std::vector<AlgElement> o_strict_upper_basis(const Signature& sig);

/// Random bracket-closed algebra of nilpotents, optionally conjugated by a
/// random rational group element.
Subalgebra random_nilpotent_subalgebra(const Signature& sig, Rng& rng,
                                       bool conjugate = true);

/// The single regular-chain generator in o(p,q) used by witness_search:
/// an n x n matrix with one Jordan block of size 2p+1 on a (p,p+1)
/// subspace.  Requires q >= p+1.
Mat regular_chain_generator(const Signature& sig);

}  // namespace ein
