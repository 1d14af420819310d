#pragma once

#include <optional>
#include <vector>

#include "ein/matrix.hpp"

namespace ein {

/// Rank via fraction-free (Bareiss) elimination after clearing denominators.
int rank(const Mat& a);

/// Basis of the right nullspace {x : a·x = 0}.  Fraction-free forward pass,
/// exact rational back-substitution.
std::vector<Vec> nullspace(const Mat& a);

/// One exact solution of a·x = b, or nullopt when inconsistent.
std::optional<Vec> solve_exact(const Mat& a, const Vec& b);

/// Inverse of a square invertible matrix; domain_error if singular.
Mat inverse(const Mat& a);

/// Incrementally maintained reduced row echelon span.  Used by every
/// bracket-closure loop and subspace comparison; all arithmetic exact.
class SpanBasis {
 public:
  SpanBasis() = default;
  explicit SpanBasis(int ambient_dim) : dim_(ambient_dim) {}

  /// Adds v to the span.  Returns true when the dimension grew.
  bool add(const Vec& v);

  /// Residual of v after reduction against the current rows.
  Vec reduce(const Vec& v) const;

  bool contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

  bool contains_all(const std::vector<Vec>& vs) const {
    for (const auto& v : vs)
      if (!contains(v)) return false;
    return true;
  }

  int dim() const { return int(rows_.size()); }
  int ambient_dim() const { return dim_; }
  const std::vector<Vec>& rows() const { return rows_; }

  /// Coordinates of v in the original generators are not tracked; this tests
  /// subspace equality by mutual containment.
  bool equals(const SpanBasis& other) const;

 private:
  int dim_ = 0;
  std::vector<Vec> rows_;     // RREF rows, leading coefficient 1
  std::vector<int> pivots_;   // pivot column of each row, strictly increasing
};

inline SpanBasis span_of(const std::vector<Vec>& vs, int ambient_dim) {
  SpanBasis s(ambient_dim);
  for (const auto& v : vs) s.add(v);
  return s;
}

}  // namespace ein
