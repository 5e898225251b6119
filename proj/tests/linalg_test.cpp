#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lrc/linalg.hpp"
#include "test_support.hpp"

using namespace lrc;

namespace {

Matrix from_rows(const Field& f, const std::vector<std::vector<std::uint32_t>>& rows) {
  Matrix m(f, rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = rows[r][c];
  return m;
}

}  // namespace

TEST_CASE("rank and rref") {
  auto f13 = Field::make_prime(13);
  Matrix m = from_rows(*f13, {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}});
  CHECK(rank(m) == 2);
  Matrix id = from_rows(*f13, {{1, 0}, {0, 1}});
  CHECK(rank(id) == 2);
}

TEST_CASE("solve_left finds x with x*M = b") {
  auto f13 = Field::make_prime(13);
  const Field& f = *f13;
  Matrix m = from_rows(f, {{1, 2, 3}, {0, 1, 4}});
  std::vector<std::uint32_t> x = {3, 5};
  std::vector<std::uint32_t> b(3, 0);
  for (std::size_t c = 0; c < 3; ++c)
    for (std::size_t r = 0; r < 2; ++r) b[c] = f.add_v(b[c], f.mul_v(x[r], m.at(r, c)));
  auto sol = solve_left(m, b);
  REQUIRE(sol.has_value());
  CHECK(*sol == x);
  // inconsistent target
  auto none = solve_left(from_rows(f, {{1, 1, 0}}), {0, 1, 0});
  CHECK_FALSE(none.has_value());
}

TEST_CASE("left nullspace annihilates the matrix") {
  testsup::Rng rng(3);
  auto f13 = Field::make_prime(13);
  const Field& f = *f13;
  for (int trial = 0; trial < 30; ++trial) {
    Matrix m(f, 4, 6);
    for (auto& v : m.data) v = static_cast<std::uint32_t>(rng.below(13));
    Matrix ns = left_nullspace(m);
    CHECK(ns.rows + rank(m) == m.rows);
    for (std::size_t r = 0; r < ns.rows; ++r)
      for (std::size_t c = 0; c < m.cols; ++c) {
        std::uint32_t acc = 0;
        for (std::size_t j = 0; j < m.rows; ++j)
          acc = f.add_v(acc, f.mul_v(ns.at(r, j), m.at(j, c)));
        CHECK(acc == 0);
      }
  }
}

TEST_CASE("row space intersection (Zassenhaus)") {
  auto f13 = Field::make_prime(13);
  const Field& f = *f13;
  // span{e0, e1} cap span{e1, e2} = span{e1}
  Matrix a = from_rows(f, {{1, 0, 0}, {0, 1, 0}});
  Matrix b = from_rows(f, {{0, 1, 0}, {0, 0, 1}});
  Matrix inter = intersect_row_spaces(a, b);
  REQUIRE(inter.rows == 1);
  CHECK(inter.at(0, 0) == 0);
  CHECK(inter.at(0, 1) != 0);
  CHECK(inter.at(0, 2) == 0);

  // membership property on random spaces: every intersection row lies in
  // both row spaces
  testsup::Rng rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix x(f, 3, 6), y(f, 3, 6);
    for (auto& v : x.data) v = static_cast<std::uint32_t>(rng.below(13));
    for (auto& v : y.data) v = static_cast<std::uint32_t>(rng.below(13));
    Matrix inter2 = intersect_row_spaces(x, y);
    for (std::size_t r = 0; r < inter2.rows; ++r) {
      std::vector<std::uint32_t> row(inter2.cols);
      for (std::size_t c = 0; c < inter2.cols; ++c) row[c] = inter2.at(r, c);
      CHECK(solve_left(x, row).has_value());
      CHECK(solve_left(y, row).has_value());
    }
    // dimension formula: dim(X) + dim(Y) = dim(X cap Y) + dim(X + Y)
    Matrix sum(f, 6, 6);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 6; ++c) {
        sum.at(r, c) = x.at(r, c);
        sum.at(r + 3, c) = y.at(r, c);
      }
    CHECK(rank(x) + rank(y) == inter2.rows + rank(sum));
  }
}

TEST_CASE("distinct degree basis is canonical") {
  auto f13 = Field::make_prime(13);
  const Field& f = *f13;
  // two spanning sets of the same space in different order give the same
  // basis
  std::vector<Polynomial> set1 = {Polynomial::from_values(f, {1, 1}),
                                  Polynomial::from_values(f, {2, 1, 5}),
                                  Polynomial::from_values(f, {0, 3, 5})};
  std::vector<Polynomial> set2 = {set1[2].scaled(f.element(7)), set1[0],
                                  set1[1] + set1[0].scaled(f.element(4))};
  auto b1 = distinct_degree_basis(poly_rows(f, set1, 4));
  auto b2 = distinct_degree_basis(poly_rows(f, set2, 4));
  REQUIRE(b1.size() == b2.size());
  for (std::size_t i = 0; i < b1.size(); ++i) CHECK(b1[i] == b2[i]);
  // degrees strictly increase and tops are monic
  for (std::size_t i = 0; i + 1 < b1.size(); ++i) CHECK(*b1[i].degree() < *b1[i + 1].degree());
  for (const auto& p : b1) CHECK(p.leading().is_one());
}
