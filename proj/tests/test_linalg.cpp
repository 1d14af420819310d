#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ein/linalg.hpp"
#include "ein/rng.hpp"

using namespace ein;

namespace {

Mat mat_of(int rows, int cols, std::initializer_list<long> vals) {
  Mat m(rows, cols);
  auto it = vals.begin();
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = rat_of(*it++);
  return m;
}

}  // namespace

TEST_CASE("rank of simple matrices") {
  CHECK(rank(Mat::identity(4)) == 4);
  CHECK(rank(Mat(3, 5)) == 0);
  CHECK(rank(mat_of(2, 2, {1, 2, 2, 4})) == 1);
  CHECK(rank(mat_of(3, 3, {1, 2, 3, 4, 5, 6, 7, 8, 9})) == 2);
}

TEST_CASE("nullspace vectors satisfy a.x = 0 exactly") {
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const int m = int(rng.uniform(2, 6)), n = int(rng.uniform(2, 6));
    Mat a(m, n);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = rng.rational(5, 3);
    auto ns = nullspace(a);
    CHECK(int(ns.size()) == n - rank(a));
    for (const auto& x : ns) {
      CHECK(!vec_is_zero(x));
      CHECK(vec_is_zero(a * x));
    }
  }
}

TEST_CASE("solve_exact finds solutions and detects inconsistency") {
  Mat a = mat_of(2, 2, {1, 1, 1, -1});
  auto x = solve_exact(a, {rat_of(3), rat_of(1)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == 2);
  CHECK((*x)[1] == 1);

  Mat sing = mat_of(2, 2, {1, 2, 2, 4});
  CHECK(!solve_exact(sing, {rat_of(1), rat_of(0)}).has_value());
  CHECK(solve_exact(sing, {rat_of(1), rat_of(2)}).has_value());
}

TEST_CASE("inverse is exact") {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    Mat a(4, 4);
    do {
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) a(i, j) = rng.rational(4, 2);
    } while (rank(a) < 4);
    CHECK(a * inverse(a) == Mat::identity(4));
  }
}

TEST_CASE("span basis: dimension, membership, equality") {
  SpanBasis s(3);
  CHECK(s.add({rat_of(1), rat_of(2), rat_of(3)}));
  CHECK(!s.add({rat_of(2), rat_of(4), rat_of(6)}));
  CHECK(s.add({rat_of(0), rat_of(1), rat_of(1)}));
  CHECK(s.dim() == 2);
  CHECK(s.contains({rat_of(1), rat_of(3), rat_of(4)}));
  CHECK(!s.contains({rat_of(0), rat_of(0), rat_of(1)}));

  SpanBasis t(3);
  t.add({rat_of(1), rat_of(3), rat_of(4)});
  t.add({rat_of(1), rat_of(1), rat_of(2)});
  CHECK(s.equals(t));
}

TEST_CASE("fraction-free path agrees with span dimension on random input") {
  Rng rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const int m = int(rng.uniform(1, 5)), n = int(rng.uniform(1, 7));
    Mat a(m, n);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = rng.rational(6, 4);
    SpanBasis s(n);
    for (int i = 0; i < m; ++i) {
      Vec row(n);
      for (int j = 0; j < n; ++j) row[j] = a(i, j);
      s.add(row);
    }
    CHECK(s.dim() == rank(a));
  }
}
