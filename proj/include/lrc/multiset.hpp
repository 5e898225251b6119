#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "lrc/bounds.hpp"
#include "lrc/lrc_code.hpp"

namespace lrc {

// LRC code in which every symbol has t disjoint recovering sets, one per
// partition in a pairwise-orthogonal family. The codeword position order
// is the first partition's blocks concatenated. Shipped instances use
// t = 2; the model carries any t.
struct Lrc2Code {
  std::shared_ptr<const Field> field;
  std::size_t n = 0, k = 0;
  std::vector<Partition> partitions;
  std::vector<std::size_t> localities;  // block size - 1 per partition
  std::size_t m = 0;                    // degree cap: dim V_m = k
  std::vector<Polynomial> basis;        // distinct-degree echelon basis of V_m
  std::size_t designed_distance = 0;    // max(n - m + 1, orthogonal-sets bound)

  std::vector<FieldElement> points;
  // per partition: block index of each position, positions of each block
  std::vector<std::vector<std::size_t>> block_of_position;
  std::vector<std::vector<std::vector<std::size_t>>> block_positions;
  Matrix basis_evals;

  std::size_t r1 = 0, r2 = 0;  // conveniences for the two-set case
};

// Basis of V_m = F^r_P1[x] cap F^s_P2[x] cap (deg < m), canonical
// distinct-degree echelon form, degrees ascending. r and s are implied by
// the block sizes.
std::vector<Polynomial> intersect_spaces(const Field& field, const Partition& p1,
                                         const Partition& p2, std::size_t m);

// Smallest m with dim V_m = k over any number of pairwise-orthogonal
// partitions sharing their support.
Lrc2Code build_multi(const std::shared_ptr<const Field>& field, std::vector<Partition> partitions,
                     std::size_t k);
// the two-partition form every shipped example uses
Lrc2Code build_lrc2(const std::shared_ptr<const Field>& field, Partition p1, Partition p2,
                    std::size_t k);

Codeword encode2(const Lrc2Code& code, const Message& a);
Polynomial encoding_polynomial2(const Lrc2Code& code, const Message& a);

// Repairs via the selected partition; interpolation degree is that
// partition's locality.
RepairResult repair2_detail(const Lrc2Code& code, const PartialCodeword& symbols,
                            std::size_t position, std::size_t which);
FieldElement repair2(const Lrc2Code& code, const PartialCodeword& symbols, std::size_t position,
                     std::size_t which);

std::vector<std::size_t> recovering_set2(const Lrc2Code& code, std::size_t position,
                                         std::size_t which);

Matrix generator_matrix(const Lrc2Code& code);

// dim V_m >= m(r-1)/(r+1) for orthogonal (r+1)-uniform partitions with
// degree-(r+1) constant-on-blocks polynomials; exact rational.
Rational vm_dim_lower_bound(std::size_t m, std::size_t r);

// companion distance bound d >= n - k - ceil(2k/(r-1)) + 1
std::int64_t lrc2_distance_lower_bound(std::int64_t n, std::int64_t k, std::int64_t r);

// --- product codes --------------------------------------------------------

// Tensor product of two component codes: position grid A1 x A2 linearized
// row-major, message matrix k1 x k2 linearized row-major, and encoding
// polynomial f(x, y) = sum a_uv b1_u(x) b2_v(y). Each symbol has one
// recovering set per axis.
struct ProductCode {
  std::shared_ptr<const Field> field;
  LrcCode c1, c2;
  std::size_t n = 0, k = 0;
};

ProductCode product_build(LrcCode c1, LrcCode c2);
Codeword product_encode(const ProductCode& code, const Message& a);
// Repairs grid position (row-major index) along axis 0 (vary x, fixed y)
// or axis 1.
FieldElement product_repair(const ProductCode& code, const PartialCodeword& symbols,
                            std::size_t position, std::size_t axis);
std::vector<std::size_t> product_recovering_set(const ProductCode& code, std::size_t position,
                                                std::size_t axis);
Matrix generator_matrix(const ProductCode& code);

}  // namespace lrc
