#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zz/linalg.hpp"
#include "zz/rational.hpp"

#include <random>

using namespace zz;

namespace {
Mat random_mat(std::mt19937& rng, int r, int c, int lowrank = 0) {
  std::uniform_int_distribution<int> coef(-5, 5);
  if (lowrank > 0) {
    Mat a(r, lowrank), b(lowrank, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < lowrank; ++j) a.at(i, j) = coef(rng);
    for (int i = 0; i < lowrank; ++i)
      for (int j = 0; j < c; ++j) b.at(i, j) = coef(rng);
    return a * b;
  }
  Mat m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = rat(coef(rng), 1 + (i + j) % 3);
  return m;
}
} // namespace

TEST_CASE("serial and parallel rref agree exactly") {
  std::mt19937 rng(5);
  for (int it = 0; it < 25; ++it) {
    Mat m = random_mat(rng, 8 + it % 5, 6 + it % 7, it % 3 == 0 ? 3 : 0);
    Rref a = rref_serial(m), b = rref_parallel(m);
    CHECK(a.rank == b.rank);
    CHECK(a.pivots == b.pivots);
    CHECK(a.r == b.r);
  }
}

TEST_CASE("nullspace and solve") {
  std::mt19937 rng(9);
  for (int it = 0; it < 25; ++it) {
    Mat m = random_mat(rng, 7, 9, 4);
    Mat ns = nullspace(m);
    CHECK(ns.cols() == 9 - rank(m));
    CHECK((m * ns).is_zero());

    Mat x = random_mat(rng, 9, 2);
    Mat b = m * x;
    auto sol = solve(m, b);
    REQUIRE(sol.has_value());
    CHECK(m * *sol == b);
  }
}

TEST_CASE("inverse and det") {
  std::mt19937 rng(13);
  for (int it = 0; it < 15; ++it) {
    Mat m = random_mat(rng, 6, 6);
    Rat d = det(m);
    auto inv = inverse(m);
    if (d == 0) {
      CHECK(!inv.has_value());
    } else {
      REQUIRE(inv.has_value());
      CHECK((m * *inv).is_identity());
    }
  }
  CHECK(det(Mat::identity(4)) == 1);
}

TEST_CASE("solve detects inconsistency") {
  Mat a(2, 1);
  a.at(0, 0) = 1;
  a.at(1, 0) = 1;
  Mat b(2, 1);
  b.at(0, 0) = 1;
  b.at(1, 0) = 2;
  CHECK(!solve(a, b).has_value());
}

TEST_CASE("quotient split") {
  std::mt19937 rng(21);
  for (int it = 0; it < 20; ++it) {
    int amb = 6;
    Mat span = random_mat(rng, amb, 4, 2);
    SpanSplit sp = quotient_split(span, amb);
    CHECK(sp.qdim() == amb - rank(span));
    CHECK((sp.proj * span).is_zero());
    CHECK((sp.proj * sp.section).is_identity());
  }
}

TEST_CASE("sparse echelon matches dense rank") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> coef(-3, 3), pos(0, 19);
  for (int it = 0; it < 20; ++it) {
    Mat dense(30, 20);
    SparseEchelon ech;
    for (int r = 0; r < 30; ++r) {
      SparseEchelon::Row row;
      std::map<int, Rat> entries;
      for (int k = 0; k < 3; ++k) {
        int c = pos(rng);
        entries[c] += coef(rng);
      }
      for (auto& [c, v] : entries)
        if (v != 0) {
          row.emplace_back(c, v);
          dense.at(r, c) = v;
        }
      ech.insert(row);
    }
    CHECK(ech.rank() == rank(dense.transpose()));
  }
}

TEST_CASE("membership query") {
  SparseEchelon ech;
  ech.insert({{0, Rat(1)}, {2, Rat(1)}});
  ech.insert({{1, Rat(1)}});
  CHECK(ech.contains({{0, Rat(2)}, {1, Rat(3)}, {2, Rat(2)}}));
  CHECK(!ech.contains({{0, Rat(1)}}));
}
