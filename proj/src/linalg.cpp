#include "lrc/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace lrc {

std::size_t rref(Matrix& m) {
  const Field& f = *m.field;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols && pivot_row < m.rows; ++col) {
    std::size_t sel = pivot_row;
    while (sel < m.rows && m.at(sel, col) == 0) ++sel;
    if (sel == m.rows) continue;
    for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(sel, c), m.at(pivot_row, c));
    std::uint32_t inv = f.inv_v(m.at(pivot_row, col));
    for (std::size_t c = col; c < m.cols; ++c) m.at(pivot_row, c) = f.mul_v(m.at(pivot_row, c), inv);
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == pivot_row) continue;
      std::uint32_t factor = m.at(r, col);
      if (factor == 0) continue;
      for (std::size_t c = col; c < m.cols; ++c)
        m.at(r, c) = f.sub_v(m.at(r, c), f.mul_v(factor, m.at(pivot_row, c)));
    }
    ++pivot_row;
  }
  return pivot_row;
}

std::size_t rank(Matrix m) { return rref(m); }

Matrix left_nullspace(const Matrix& m) {
  const Field& f = *m.field;
  // Work on the transpose: right nullspace of m^T.
  Matrix t(f, m.cols, m.rows);
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t c = 0; c < m.cols; ++c) t.at(c, r) = m.at(r, c);
  Matrix work = t;
  std::size_t rk = rref(work);
  // identify pivot columns of work (columns index original rows of m)
  std::vector<std::optional<std::size_t>> pivot_of_col(work.cols);
  for (std::size_t r = 0; r < rk; ++r)
    for (std::size_t c = 0; c < work.cols; ++c)
      if (work.at(r, c) != 0) {
        pivot_of_col[c] = r;
        break;
      }
  std::vector<std::size_t> free_cols;
  for (std::size_t col = 0; col < work.cols; ++col)
    if (!pivot_of_col[col].has_value()) free_cols.push_back(col);
  Matrix basis(f, free_cols.size(), m.rows);
  for (std::size_t i = 0; i < free_cols.size(); ++i) {
    std::size_t fc = free_cols[i];
    basis.at(i, fc) = 1;
    for (std::size_t col = 0; col < work.cols; ++col) {
      if (auto pr = pivot_of_col[col]) basis.at(i, col) = f.neg_v(work.at(*pr, fc));
    }
  }
  return basis;
}

std::optional<std::vector<std::uint32_t>> solve_left(const Matrix& m,
                                                     const std::vector<std::uint32_t>& b) {
  if (b.size() != m.cols) throw std::invalid_argument("solve_left: size mismatch");
  const Field& f = *m.field;
  // Augmented system on the transpose: m^T x^T = b^T.
  Matrix aug(f, m.cols, m.rows + 1);
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t c = 0; c < m.cols; ++c) aug.at(c, r) = m.at(r, c);
  for (std::size_t c = 0; c < m.cols; ++c) aug.at(c, m.rows) = b[c];
  rref(aug);
  std::vector<std::uint32_t> x(m.rows, 0);
  for (std::size_t r = 0; r < aug.rows; ++r) {
    std::size_t lead = aug.cols;
    for (std::size_t c = 0; c < aug.cols; ++c)
      if (aug.at(r, c) != 0) {
        lead = c;
        break;
      }
    if (lead == aug.cols) continue;          // zero row
    if (lead == m.rows) return std::nullopt; // 0 = nonzero: inconsistent
    x[lead] = aug.at(r, m.rows);
  }
  return x;
}

Matrix intersect_row_spaces(const Matrix& a, const Matrix& b) {
  if (a.cols != b.cols) throw std::invalid_argument("intersect: width mismatch");
  const Field& f = *a.field;
  // Zassenhaus: echelonize [A | A; B | 0]; rows with zero left block carry
  // the intersection in their right block.
  Matrix big(f, a.rows + b.rows, 2 * a.cols);
  for (std::size_t r = 0; r < a.rows; ++r)
    for (std::size_t c = 0; c < a.cols; ++c) {
      big.at(r, c) = a.at(r, c);
      big.at(r, a.cols + c) = a.at(r, c);
    }
  for (std::size_t r = 0; r < b.rows; ++r)
    for (std::size_t c = 0; c < b.cols; ++c) big.at(a.rows + r, c) = b.at(r, c);
  rref(big);
  std::vector<std::vector<std::uint32_t>> rows;
  for (std::size_t r = 0; r < big.rows; ++r) {
    bool left_zero = true, right_zero = true;
    for (std::size_t c = 0; c < a.cols; ++c) {
      if (big.at(r, c) != 0) left_zero = false;
      if (big.at(r, a.cols + c) != 0) right_zero = false;
    }
    if (left_zero && !right_zero) {
      std::vector<std::uint32_t> row(a.cols);
      for (std::size_t c = 0; c < a.cols; ++c) row[c] = big.at(r, a.cols + c);
      rows.push_back(std::move(row));
    }
  }
  Matrix out(f, rows.size(), a.cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < a.cols; ++c) out.at(r, c) = rows[r][c];
  return out;
}

Matrix poly_rows(const Field& f, const std::vector<Polynomial>& polys, std::size_t width) {
  Matrix m(f, polys.size(), width);
  for (std::size_t r = 0; r < polys.size(); ++r) {
    auto deg = polys[r].degree();
    if (deg.has_value() && *deg >= width) throw std::invalid_argument("polynomial wider than matrix");
    for (std::size_t c = 0; c < polys[r].coeffs().size(); ++c)
      m.at(r, c) = polys[r].coeffs()[c].value();
  }
  return m;
}

std::vector<Polynomial> distinct_degree_basis(const Matrix& m) {
  const Field& f = *m.field;
  // Same elimination with columns visited high degree first, which makes
  // each pivot the row's top coefficient.
  Matrix work = m;
  std::size_t pivot_row = 0;
  for (std::size_t col_i = work.cols; col_i-- > 0 && pivot_row < work.rows;) {
    std::size_t sel = pivot_row;
    while (sel < work.rows && work.at(sel, col_i) == 0) ++sel;
    if (sel == work.rows) continue;
    for (std::size_t c = 0; c < work.cols; ++c) std::swap(work.at(sel, c), work.at(pivot_row, c));
    std::uint32_t inv = f.inv_v(work.at(pivot_row, col_i));
    for (std::size_t c = 0; c < work.cols; ++c)
      work.at(pivot_row, c) = f.mul_v(work.at(pivot_row, c), inv);
    for (std::size_t r = 0; r < work.rows; ++r) {
      if (r == pivot_row) continue;
      std::uint32_t factor = work.at(r, col_i);
      if (factor == 0) continue;
      for (std::size_t c = 0; c < work.cols; ++c)
        work.at(r, c) = f.sub_v(work.at(r, c), f.mul_v(factor, work.at(pivot_row, c)));
    }
    ++pivot_row;
  }
  std::vector<Polynomial> out;
  for (std::size_t r = 0; r < pivot_row; ++r) {
    std::vector<FieldElement> coeffs;
    coeffs.reserve(work.cols);
    for (std::size_t c = 0; c < work.cols; ++c) coeffs.push_back(f.element(work.at(r, c)));
    out.emplace_back(&f, std::move(coeffs));
  }
  std::sort(out.begin(), out.end(), [](const Polynomial& a, const Polynomial& b) {
    return a.coeffs().size() < b.coeffs().size();
  });
  return out;
}

}  // namespace lrc
