#pragma once

#include <initializer_list>
#include <vector>

#include "ein/errors.hpp"
#include "ein/rational.hpp"

namespace ein {

using Vec = std::vector<Rat>;

/// Dense rational matrix with value semantics.
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const Rat& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (x != 0) return false;
    return true;
  }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Mat operator+(const Mat& o) const {
    check_internal(rows_ == o.rows_ && cols_ == o.cols_, "matrix shape mismatch in +");
    Mat r = *this;
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] += o.a_[k];
    return r;
  }

  Mat operator-(const Mat& o) const {
    check_internal(rows_ == o.rows_ && cols_ == o.cols_, "matrix shape mismatch in -");
    Mat r = *this;
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] -= o.a_[k];
    return r;
  }

  Mat operator-() const {
    Mat r = *this;
    for (auto& x : r.a_) x = -x;
    return r;
  }

  Mat operator*(const Mat& o) const {
    check_internal(cols_ == o.rows_, "matrix shape mismatch in *");
    Mat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const Rat& aik = (*this)(i, k);
        if (aik == 0) continue;
        for (int j = 0; j < o.cols_; ++j) {
          if (o(k, j) == 0) continue;
          r(i, j) += aik * o(k, j);
        }
      }
    return r;
  }

  Mat operator*(const Rat& c) const {
    Mat r = *this;
    for (auto& x : r.a_) x *= c;
    return r;
  }

  Vec operator*(const Vec& v) const {
    check_internal(cols_ == int(v.size()), "matrix/vector shape mismatch");
    Vec r(rows_, Rat(0));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if ((*this)(i, j) != 0 && v[j] != 0) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  /// Row-major flattening; the coordinate vector used by all span machinery.
  Vec flatten() const { return a_.empty() ? Vec{} : Vec(a_.begin(), a_.end()); }

  static Mat unflatten(const Vec& v, int rows, int cols) {
    check_internal(int(v.size()) == rows * cols, "unflatten size mismatch");
    Mat m(rows, cols);
    m.a_.assign(v.begin(), v.end());
    return m;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

inline Mat operator*(const Rat& c, const Mat& m) { return m * c; }

inline Mat commutator(const Mat& x, const Mat& y) { return x * y - y * x; }

inline bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

inline Vec vec_scale(const Vec& v, const Rat& c) {
  Vec r = v;
  for (auto& x : r) x *= c;
  return r;
}

inline Vec vec_add(const Vec& a, const Vec& b) {
  check_internal(a.size() == b.size(), "vector size mismatch");
  Vec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
  check_internal(a.size() == b.size(), "vector size mismatch");
  Vec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

inline Vec basis_vec(int dim, int slot) {
  Vec v(dim, Rat(0));
  v[slot] = 1;
  return v;
}

}  // namespace ein
