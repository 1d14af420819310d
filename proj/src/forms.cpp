#include "ein/forms.hpp"

#include "ein/rng.hpp"

namespace ein {

Mat SplitForm::gram() const {
  const int m = dim();
  Mat j(m, m);
  for (int i = 0; i < P; ++i) {
    j(i, m - 1 - i) = 1;
    j(m - 1 - i, i) = 1;
  }
  for (int i = P; i < Q; ++i) j(i, i) = 1;
  return j;
}

Rat SplitForm::eval(const Vec& x) const {
  check_domain(int(x.size()) == dim(), "eval_form: dimension mismatch");
  const int m = dim();
  Rat acc(0);
  for (int i = 0; i < P; ++i) acc += 2 * x[i] * x[m - 1 - i];
  for (int i = P; i < Q; ++i) acc += x[i] * x[i];
  return acc;
}

Rat SplitForm::inner(const Vec& x, const Vec& y) const {
  check_domain(int(x.size()) == dim() && int(y.size()) == dim(),
               "inner: dimension mismatch");
  const int m = dim();
  Rat acc(0);
  for (int i = 0; i < P; ++i) acc += x[i] * y[m - 1 - i] + x[m - 1 - i] * y[i];
  for (int i = P; i < Q; ++i) acc += x[i] * y[i];
  return acc;
}

bool SplitForm::is_null(const Vec& x) const {
  check_domain(!vec_is_zero(x), "is_null: the null cone excludes the origin");
  return eval(x) == 0;
}

ProjectivePoint projectivize(const Vec& x, Cover cover) {
  check_domain(!vec_is_zero(x), "projectivize: zero vector");
  int lead = 0;
  for (size_t i = 1; i < x.size(); ++i)
    if (abs(x[i]) > abs(x[lead])) lead = int(i);
  Rat scale = x[lead];
  if (cover == Cover::ray) scale = abs(scale);
  return ProjectivePoint{vec_scale(x, Rat(1) / scale), cover};
}

std::string point_str(const ProjectivePoint& pt) {
  std::string s = "[";
  for (size_t i = 0; i < pt.rep.size(); ++i) {
    if (i) s += ":";
    s += pt.rep[i].get_str();
  }
  return s + "]";
}

Vec random_null_vector(const SplitForm& f, Rng& rng) {
  check_domain(f.P >= 1, "random null vector needs an isotropic pair");
  const int m = f.dim();
  for (;;) {
    Vec x(m);
    for (int i = 0; i < m; ++i) x[i] = rng.rational(6, 3);
    // Solve the first pair slot: Q = 2 x_0 x_{m-1} + rest.
    if (x[m - 1] == 0) x[m - 1] = 1;
    x[0] = 0;
    Rat rest = f.eval(x);
    x[0] = -rest / (2 * x[m - 1]);
    if (!vec_is_zero(x)) return x;
  }
}

}  // namespace ein
