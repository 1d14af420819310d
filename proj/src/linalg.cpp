#include "ein/linalg.hpp"

#include <algorithm>

namespace ein {
namespace {

struct Echelon {
  std::vector<std::vector<mpz_class>> rows;  // echelon form, integer entries
  std::vector<int> pivot_cols;               // one per used row
  int cols = 0;
};

// Fraction-free Gaussian elimination (Bareiss).  Rows are first scaled to
// integers by their denominator lcm; the two-term update keeps every
// intermediate entry an exact minor, so the division by the previous pivot
// is exact.
Echelon bareiss(const Mat& a) {
  const int m = a.rows(), n = a.cols();
  Echelon e;
  e.cols = n;
  e.rows.assign(m, std::vector<mpz_class>(n));
  for (int i = 0; i < m; ++i) {
    mpz_class l(1);
    for (int j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den().get_mpz_t());
    for (int j = 0; j < n; ++j) {
      Rat scaled = a(i, j) * Rat(l);
      check_internal(scaled.get_den() == 1, "row scaling failed to clear denominators");
      e.rows[i][j] = scaled.get_num();
    }
  }

  mpz_class prev(1);
  int r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    int piv = -1;
    for (int i = r; i < m; ++i)
      if (e.rows[i][c] != 0) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(e.rows[r], e.rows[piv]);
    for (int i = r + 1; i < m; ++i) {
      for (int j = c + 1; j < n; ++j) {
        mpz_class num = e.rows[r][c] * e.rows[i][j] - e.rows[i][c] * e.rows[r][j];
        mpz_class q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
        check_internal(rem == 0, "non-exact division in fraction-free elimination");
        e.rows[i][j] = q;
      }
      e.rows[i][c] = 0;
    }
    prev = e.rows[r][c];
    e.pivot_cols.push_back(c);
    ++r;
  }
  e.rows.resize(r);
  return e;
}

}  // namespace

int rank(const Mat& a) { return int(bareiss(a).pivot_cols.size()); }

std::vector<Vec> nullspace(const Mat& a) {
  Echelon e = bareiss(a);
  const int n = a.cols();
  const int r = int(e.pivot_cols.size());

  std::vector<bool> is_pivot(n, false);
  for (int c : e.pivot_cols) is_pivot[c] = true;

  std::vector<Vec> basis;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec x(n, Rat(0));
    x[f] = 1;
    // Back-substitute pivot variables from the bottom row up.
    for (int i = r - 1; i >= 0; --i) {
      const int pc = e.pivot_cols[i];
      Rat acc(0);
      for (int j = pc + 1; j < n; ++j)
        if (x[j] != 0 && e.rows[i][j] != 0) acc += Rat(e.rows[i][j]) * x[j];
      x[pc] = -acc / Rat(e.rows[i][pc]);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<Vec> solve_exact(const Mat& a, const Vec& b) {
  check_domain(int(b.size()) == a.rows(), "solve_exact: rhs length mismatch");
  const int m = a.rows(), n = a.cols();
  Mat aug(m, n + 1);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  Echelon e = bareiss(aug);
  // Inconsistent system iff the augmented column picked up a pivot.
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == n) return std::nullopt;

  const int r = int(e.pivot_cols.size());
  Vec x(n, Rat(0));
  for (int i = r - 1; i >= 0; --i) {
    const int pc = e.pivot_cols[i];
    Rat acc = Rat(e.rows[i][n]);
    for (int j = pc + 1; j < n; ++j)
      if (x[j] != 0 && e.rows[i][j] != 0) acc -= Rat(e.rows[i][j]) * x[j];
    x[pc] = acc / Rat(e.rows[i][pc]);
  }
  return x;
}

Mat inverse(const Mat& a) {
  check_domain(a.rows() == a.cols(), "inverse of non-square matrix");
  const int n = a.rows();
  Mat inv(n, n);
  for (int col = 0; col < n; ++col) {
    auto x = solve_exact(a, basis_vec(n, col));
    check_domain(x.has_value(), "inverse of singular matrix");
    for (int i = 0; i < n; ++i) inv(i, col) = (*x)[i];
  }
  return inv;
}

bool SpanBasis::add(const Vec& v) {
  check_internal(int(v.size()) == dim_, "span add: ambient dimension mismatch");
  Vec w = reduce(v);
  int lead = -1;
  for (int i = 0; i < dim_; ++i)
    if (w[i] != 0) { lead = i; break; }
  if (lead < 0) return false;

  w = vec_scale(w, Rat(1) / w[lead]);
  // Back-reduce existing rows so the representation stays fully reduced.
  for (auto& row : rows_)
    if (row[lead] != 0) row = vec_sub(row, vec_scale(w, row[lead]));

  auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), lead);
  const size_t idx = size_t(pos - pivots_.begin());
  pivots_.insert(pos, lead);
  rows_.insert(rows_.begin() + idx, std::move(w));
  return true;
}

Vec SpanBasis::reduce(const Vec& v) const {
  check_internal(int(v.size()) == dim_, "span reduce: ambient dimension mismatch");
  Vec w = v;
  for (size_t k = 0; k < rows_.size(); ++k) {
    const Rat& c = w[pivots_[k]];
    if (c != 0) w = vec_sub(w, vec_scale(rows_[k], c));
  }
  return w;
}

bool SpanBasis::equals(const SpanBasis& other) const {
  if (dim() != other.dim()) return false;
  for (const auto& r : rows_)
    if (!other.contains(r)) return false;
  return true;
}

}  // namespace ein
