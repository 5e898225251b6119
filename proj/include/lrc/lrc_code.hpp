#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "lrc/errors.hpp"
#include "lrc/field.hpp"
#include "lrc/good_polynomial.hpp"
#include "lrc/linalg.hpp"
#include "lrc/polynomial.hpp"

namespace lrc {

using Message = std::vector<FieldElement>;
using Codeword = std::vector<FieldElement>;
// nullopt marks an erased symbol
using PartialCodeword = std::vector<std::optional<FieldElement>>;

struct LrcParams {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t r = 0;
};

// Systematic encoder data: message symbol a_{i,j} lands verbatim at the
// j-th info point of block i.
struct SystematicEncoder {
  std::vector<std::vector<FieldElement>> info_points;     // B_i, one list per used block
  std::vector<std::vector<std::size_t>> info_positions;   // same, as codeword positions
  std::vector<Polynomial> fbar;                           // block selectors from powers of g
  std::vector<std::vector<Polynomial>> phi;               // degree < r point selectors per block
};

// An (n, k, r) locally recoverable code realized as evaluations of
// polynomials from span(basis) at the points of the partition, blocks
// concatenated in partition order. Immutable after construction; encode
// and repair are pure.
struct LrcCode {
  std::shared_ptr<const Field> field;
  LrcParams params;
  Partition partition;
  std::optional<Polynomial> g;       // present for power-of-g constructions
  std::vector<Polynomial> basis;     // one polynomial per message coordinate
  std::size_t designed_distance = 0;
  std::optional<SystematicEncoder> systematic;

  // derived, fixed at build time
  std::vector<FieldElement> points;          // flattened evaluation set
  std::vector<std::size_t> block_of_position;
  std::vector<std::vector<std::size_t>> block_positions;
  Matrix basis_evals;                        // k x n, row m = basis[m] on points

  std::size_t position_of(FieldElement location) const;
};

// Construction of optimal (n, k, r) codes from a good polynomial of degree
// r+1: basis g^j x^i over the flat index layout that skips residue r
// mod r+1, which also handles r not dividing k.
LrcCode build(const std::shared_ptr<const Field>& field, const GoodPolynomial& good, std::size_t k);

// Plain Reed-Solomon fallback for r = k: one block, monomial basis.
LrcCode reed_solomon(const std::shared_ptr<const Field>& field,
                     const std::vector<FieldElement>& points, std::size_t k);

// Generalized construction from an explicit encoding basis: every basis
// polynomial must decompose as sum f_i(x) x^i with each f_i constant on
// the blocks, and the basis must be linearly independent. Designed
// distance is n - max degree.
LrcCode build_from_mapping(const std::shared_ptr<const Field>& field, Partition partition,
                           std::size_t r, std::vector<Polynomial> basis);

Codeword encode(const LrcCode& code, const Message& a);
// The encoding polynomial f_a itself (tests assert its degree bound).
Polynomial encoding_polynomial(const LrcCode& code, const Message& a);

struct RepairResult {
  Polynomial delta;      // the decoding polynomial for the block
  FieldElement value;    // delta at the erased location
};

// Interpolates the decoding polynomial of degree < r through the first r
// surviving symbols of the erased position's block. Throws decode_failure
// when fewer than r survive.
RepairResult repair_detail(const LrcCode& code, const PartialCodeword& symbols, std::size_t position);
FieldElement repair(const LrcCode& code, const PartialCodeword& symbols, std::size_t position);

// The r positions whose symbols repair `position`: the first r others in
// its block.
std::vector<std::size_t> recovering_set(const LrcCode& code, std::size_t position);

// Membership test for the direct sum of algebra multiples: on success,
// components[i] is the f_i in f = sum_i f_i(x) x^i with every f_i constant
// on the partition blocks.
struct AlgebraDecomposition {
  bool ok = false;
  std::vector<Polynomial> components;
};
AlgebraDecomposition algebra_membership(const Polynomial& f, const Partition& partition,
                                        std::size_t r);

// Basis f_i with f_i = 1 on block i and 0 on the others (degree < |A|).
std::vector<Polynomial> lagrange_block_basis(const Field& field, const Partition& partition);

// Canonical distinct-degree basis of the algebra of polynomials constant
// on the blocks.
std::vector<Polynomial> algebra_basis(const Field& field, const Partition& partition);

// Attaches the optimal systematic encoder (power-of-g block selectors, so
// the degree cap and hence the distance are unchanged). Requires r | k and
// one r-subset of each of the first k/r blocks.
void systematic_build(LrcCode& code, const std::vector<std::vector<FieldElement>>& info_points);
Codeword encode_systematic(const LrcCode& code, const Message& a);

// k x n matrix of basis evaluations; rank k for every valid code.
Matrix generator_matrix(const LrcCode& code);

}  // namespace lrc
