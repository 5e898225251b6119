#include "lrc/multiset.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace lrc {

namespace {

// rows spanning the direct sum of algebra multiples x^i * F_P[x], i < r
Matrix encoding_space_rows(const Field& field, const Partition& partition, std::size_t r,
                           std::size_t width) {
  std::vector<Polynomial> alg = algebra_basis(field, partition);
  std::vector<Polynomial> rows;
  for (std::size_t i = 0; i < r; ++i)
    for (const auto& b : alg) rows.push_back(b.shifted(i));
  return poly_rows(field, rows, width);
}

std::size_t uniform_block_size(const Partition& p) {
  std::size_t size = p.blocks.at(0).size();
  for (const auto& b : p.blocks)
    if (b.size() != size) throw std::invalid_argument("partition blocks must have equal size");
  return size;
}

}  // namespace

std::vector<Polynomial> intersect_spaces(const Field& field, const Partition& p1,
                                         const Partition& p2, std::size_t m) {
  p1.validate();
  p2.validate();
  std::size_t n = p1.size();
  if (p2.size() != n) throw std::invalid_argument("partitions must share their support");
  std::size_t r = uniform_block_size(p1) - 1;
  std::size_t s = uniform_block_size(p2) - 1;
  std::size_t width = n + std::max(r, s);
  Matrix a = encoding_space_rows(field, p1, r, width);
  Matrix b = encoding_space_rows(field, p2, s, width);
  Matrix inter = intersect_row_spaces(a, b);
  std::vector<Polynomial> basis = distinct_degree_basis(inter);
  std::vector<Polynomial> out;
  for (auto& p : basis) {
    auto d = p.degree();
    if (!d.has_value() || *d < m) out.push_back(std::move(p));
  }
  return out;
}

Lrc2Code build_multi(const std::shared_ptr<const Field>& field, std::vector<Partition> partitions,
                     std::size_t k) {
  const Field& f = *field;
  if (partitions.size() < 2) throw std::invalid_argument("need at least two partitions");
  for (auto& p : partitions) p.validate();
  std::size_t n = partitions[0].size();
  for (std::size_t i = 0; i < partitions.size(); ++i)
    for (std::size_t j = i + 1; j < partitions.size(); ++j)
      if (!are_orthogonal(partitions[i], partitions[j]))
        throw std::invalid_argument("partitions are not pairwise orthogonal");

  // intersect all encoding spaces, echelonize, and read V_m off the
  // distinct degrees: dim V_m = k exactly when m passes the k-th smallest
  std::size_t max_r = 0;
  for (const auto& p : partitions) max_r = std::max(max_r, uniform_block_size(p) - 1);
  std::size_t width = n + max_r;
  Matrix inter = encoding_space_rows(f, partitions[0], uniform_block_size(partitions[0]) - 1, width);
  for (std::size_t i = 1; i < partitions.size(); ++i) {
    Matrix next = encoding_space_rows(f, partitions[i], uniform_block_size(partitions[i]) - 1, width);
    inter = intersect_row_spaces(inter, next);
  }
  std::vector<Polynomial> full = distinct_degree_basis(inter);
  if (full.size() < k)
    throw std::invalid_argument("intersection space has dimension " + std::to_string(full.size()) +
                                " < k");
  std::size_t m = *full[k - 1].degree() + 1;

  Lrc2Code code;
  code.field = field;
  code.n = n;
  code.k = k;
  for (const auto& p : partitions) code.localities.push_back(uniform_block_size(p) - 1);
  code.partitions = std::move(partitions);
  code.m = m;
  code.basis.assign(full.begin(), full.begin() + k);
  std::int64_t degree_bound = static_cast<std::int64_t>(n) - static_cast<std::int64_t>(m) + 1;
  std::int64_t sets_bound = smallest_m_for_t(static_cast<std::int64_t>(code.partitions.size()));
  code.designed_distance = static_cast<std::size_t>(std::max(degree_bound, sets_bound));
  code.r1 = code.localities[0];
  code.r2 = code.localities[1];

  // positions: first partition's blocks concatenated
  for (const auto& block : code.partitions[0].blocks)
    for (auto loc : block) code.points.push_back(loc);
  code.block_of_position.assign(code.partitions.size(), {});
  code.block_positions.assign(code.partitions.size(), {});
  for (std::size_t which = 0; which < code.partitions.size(); ++which) {
    const Partition& part = code.partitions[which];
    code.block_positions[which].assign(part.blocks.size(), {});
    code.block_of_position[which].assign(n, 0);
    for (std::size_t t = 0; t < code.points.size(); ++t) {
      auto blk = part.block_of(code.points[t]);
      if (!blk.has_value()) throw std::invalid_argument("partitions must share their support");
      code.block_of_position[which][t] = *blk;
      code.block_positions[which][*blk].push_back(t);
    }
  }
  code.basis_evals = Matrix(f, k, n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t t = 0; t < n; ++t)
      code.basis_evals.at(i, t) = code.basis[i].evaluate(code.points[t]).value();
  return code;
}

Lrc2Code build_lrc2(const std::shared_ptr<const Field>& field, Partition p1, Partition p2,
                    std::size_t k) {
  std::vector<Partition> parts;
  parts.push_back(std::move(p1));
  parts.push_back(std::move(p2));
  return build_multi(field, std::move(parts), k);
}

Codeword encode2(const Lrc2Code& code, const Message& a) {
  const Field& f = *code.field;
  if (a.size() != code.k) throw std::invalid_argument("message length must be k");
  Codeword out;
  out.reserve(code.n);
  for (std::size_t t = 0; t < code.n; ++t) {
    std::uint32_t acc = 0;
    for (std::size_t i = 0; i < code.k; ++i)
      acc = f.add_v(acc, f.mul_v(a[i].value(), code.basis_evals.at(i, t)));
    out.push_back(f.element(acc));
  }
  return out;
}

Polynomial encoding_polynomial2(const Lrc2Code& code, const Message& a) {
  if (a.size() != code.k) throw std::invalid_argument("message length must be k");
  Polynomial f_a(code.field.get());
  for (std::size_t i = 0; i < code.k; ++i) f_a = f_a + code.basis[i].scaled(a[i]);
  return f_a;
}

RepairResult repair2_detail(const Lrc2Code& code, const PartialCodeword& symbols,
                            std::size_t position, std::size_t which) {
  const Field& f = *code.field;
  if (which >= code.partitions.size())
    throw std::invalid_argument("partition selector out of range");
  if (position >= code.n) throw std::invalid_argument("position out of range");
  if (symbols.size() != code.n) throw std::invalid_argument("codeword length must be n");
  std::size_t locality = code.localities[which];
  std::size_t block = code.block_of_position[which][position];
  std::vector<std::pair<FieldElement, FieldElement>> survivors;
  for (std::size_t t : code.block_positions[which][block]) {
    if (t == position || !symbols[t].has_value()) continue;
    survivors.emplace_back(code.points[t], *symbols[t]);
    if (survivors.size() == locality) break;
  }
  if (survivors.size() < locality)
    throw decode_failure("block " + std::to_string(block) + " of partition " +
                         std::to_string(which + 1) + " has too few survivors");
  Polynomial delta = interpolate(f, survivors);
  FieldElement value = delta.evaluate(code.points[position]);
  return {std::move(delta), value};
}

FieldElement repair2(const Lrc2Code& code, const PartialCodeword& symbols, std::size_t position,
                     std::size_t which) {
  return repair2_detail(code, symbols, position, which).value;
}

std::vector<std::size_t> recovering_set2(const Lrc2Code& code, std::size_t position,
                                         std::size_t which) {
  if (which >= code.partitions.size())
    throw std::invalid_argument("partition selector out of range");
  if (position >= code.n) throw std::invalid_argument("position out of range");
  std::vector<std::size_t> out;
  std::size_t block = code.block_of_position[which][position];
  for (std::size_t t : code.block_positions[which][block])
    if (t != position) out.push_back(t);
  return out;
}

Matrix generator_matrix(const Lrc2Code& code) { return code.basis_evals; }

Rational vm_dim_lower_bound(std::size_t m, std::size_t r) {
  if (r < 2) throw std::invalid_argument("bound needs r >= 2");
  return Rational(static_cast<std::int64_t>(m) * (static_cast<std::int64_t>(r) - 1),
                  static_cast<std::int64_t>(r) + 1);
}

std::int64_t lrc2_distance_lower_bound(std::int64_t n, std::int64_t k, std::int64_t r) {
  if (r < 2) throw std::invalid_argument("bound needs r >= 2");
  std::int64_t ceil_term = (2 * k + r - 2) / (r - 1);
  return n - k - ceil_term + 1;
}

ProductCode product_build(LrcCode c1, LrcCode c2) {
  if (!c1.field->same_field(*c2.field))
    throw std::invalid_argument("component codes must share their field");
  ProductCode code;
  code.field = c1.field;
  code.n = c1.params.n * c2.params.n;
  code.k = c1.params.k * c2.params.k;
  code.c1 = std::move(c1);
  code.c2 = std::move(c2);
  return code;
}

Codeword product_encode(const ProductCode& code, const Message& a) {
  const Field& f = *code.field;
  if (a.size() != code.k) throw std::invalid_argument("message length must be k1*k2");
  std::size_t k1 = code.c1.params.k, k2 = code.c2.params.k;
  std::size_t n1 = code.c1.params.n, n2 = code.c2.params.n;
  // two-stage tensor evaluation: rows first, then columns
  Matrix mid(f, k1, n2);
  for (std::size_t u = 0; u < k1; ++u)
    for (std::size_t t2 = 0; t2 < n2; ++t2) {
      std::uint32_t acc = 0;
      for (std::size_t v = 0; v < k2; ++v)
        acc = f.add_v(acc, f.mul_v(a[u * k2 + v].value(), code.c2.basis_evals.at(v, t2)));
      mid.at(u, t2) = acc;
    }
  Codeword out;
  out.reserve(code.n);
  for (std::size_t t1 = 0; t1 < n1; ++t1)
    for (std::size_t t2 = 0; t2 < n2; ++t2) {
      std::uint32_t acc = 0;
      for (std::size_t u = 0; u < k1; ++u)
        acc = f.add_v(acc, f.mul_v(code.c1.basis_evals.at(u, t1), mid.at(u, t2)));
      out.push_back(f.element(acc));
    }
  return out;
}

FieldElement product_repair(const ProductCode& code, const PartialCodeword& symbols,
                            std::size_t position, std::size_t axis) {
  if (axis > 1) throw std::invalid_argument("axis must be 0 or 1");
  if (symbols.size() != code.n) throw std::invalid_argument("codeword length must be n1*n2");
  std::size_t n2 = code.c2.params.n;
  std::size_t row = position / n2, col = position % n2;
  const LrcCode& comp = axis == 0 ? code.c1 : code.c2;
  std::size_t moving = axis == 0 ? row : col;
  // the fiber along the axis is a codeword of the component code
  PartialCodeword fiber(comp.params.n);
  for (std::size_t t = 0; t < comp.params.n; ++t) {
    std::size_t grid = axis == 0 ? t * n2 + col : row * n2 + t;
    fiber[t] = symbols[grid];
  }
  return repair(comp, fiber, moving);
}

std::vector<std::size_t> product_recovering_set(const ProductCode& code, std::size_t position,
                                                std::size_t axis) {
  if (axis > 1) throw std::invalid_argument("axis must be 0 or 1");
  std::size_t n2 = code.c2.params.n;
  std::size_t row = position / n2, col = position % n2;
  const LrcCode& comp = axis == 0 ? code.c1 : code.c2;
  std::size_t moving = axis == 0 ? row : col;
  std::vector<std::size_t> out;
  for (std::size_t t : recovering_set(comp, moving))
    out.push_back(axis == 0 ? t * n2 + col : row * n2 + t);
  return out;
}

Matrix generator_matrix(const ProductCode& code) {
  const Field& f = *code.field;
  std::size_t k1 = code.c1.params.k, k2 = code.c2.params.k;
  std::size_t n1 = code.c1.params.n, n2 = code.c2.params.n;
  Matrix gen(f, k1 * k2, n1 * n2);
  for (std::size_t u = 0; u < k1; ++u)
    for (std::size_t v = 0; v < k2; ++v)
      for (std::size_t t1 = 0; t1 < n1; ++t1)
        for (std::size_t t2 = 0; t2 < n2; ++t2)
          gen.at(u * k2 + v, t1 * n2 + t2) =
              f.mul_v(code.c1.basis_evals.at(u, t1), code.c2.basis_evals.at(v, t2));
  return gen;
}

}  // namespace lrc
