#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lrc/field.hpp"
#include "lrc/polynomial.hpp"

namespace lrc {

// Dense row-major matrix of canonical field values. Desk-scale Gaussian
// elimination; nothing clever.
struct Matrix {
  const Field* field = nullptr;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint32_t> data;

  Matrix() = default;
  Matrix(const Field& f, std::size_t r, std::size_t c)
      : field(&f), rows(r), cols(c), data(r * c, 0) {}

  std::uint32_t& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  std::uint32_t at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

// In-place reduced row echelon form (pivots left to right); returns rank.
std::size_t rref(Matrix& m);

std::size_t rank(Matrix m);

// Basis of { x : x * m = 0 } (row vectors times matrix), one row per basis
// vector.
Matrix left_nullspace(const Matrix& m);

// Solves x * m = b for a single row vector b; nullopt when inconsistent.
// When the solution space has positive dimension an arbitrary solution is
// returned.
std::optional<std::vector<std::uint32_t>> solve_left(const Matrix& m,
                                                     const std::vector<std::uint32_t>& b);

// Rows spanning the intersection of the two row spaces (Zassenhaus).
Matrix intersect_row_spaces(const Matrix& a, const Matrix& b);

// --- polynomial-space helpers -------------------------------------------

// Rows are coefficient vectors (column j = coefficient of x^j, width n).
Matrix poly_rows(const Field& f, const std::vector<Polynomial>& polys, std::size_t width);

// Canonical basis of the row space with pairwise-distinct top degrees:
// every row monic in its highest coefficient, fully reduced against the
// other pivots, sorted by degree ascending. Unique per row space.
std::vector<Polynomial> distinct_degree_basis(const Matrix& m);

}  // namespace lrc
