#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "lrc/lrc_code.hpp"

namespace lrc {

// Code of length n with n mod (r+1) = s in 2..r: m-1 full blocks of size
// r+1 plus one short block of size s, kept last. Symbols in full blocks
// have locality r; symbols in the short block have locality s-1, because
// the encoding polynomial restricted to it has degree <= s-2.
struct ArbitraryLengthCode {
  std::shared_ptr<const Field> field;
  LrcParams params;           // n, k, r
  std::size_t s = 0;
  Partition partition;        // short block last
  Polynomial g;               // vanishes on the short block
  Polynomial h_short;         // annihilator of the short block
  std::vector<Polynomial> basis;
  std::size_t designed_distance = 0;

  std::vector<FieldElement> points;
  std::vector<std::size_t> block_of_position;
  std::vector<std::vector<std::size_t>> block_positions;
  Matrix basis_evals;

  ArbitraryLengthCode() : g(nullptr), h_short(nullptr) {}
};

// Power-of-g construction: the good polynomial must be constant on every
// block including the short one; it is shifted by its short-block value so
// it vanishes there. Needs r | k+1.
ArbitraryLengthCode build_arbitrary_linear(const std::shared_ptr<const Field>& field,
                                           const GoodPolynomial& good, std::size_t k);

// General form: one injective linear map per coefficient slot, given by
// its image basis inside the block-constant algebra. The map for slot s-1
// must land in the subspace vanishing on the short block.
ArbitraryLengthCode build_arbitrary_general(const std::shared_ptr<const Field>& field,
                                            Partition partition,
                                            const std::vector<std::vector<Polynomial>>& mappings);

Codeword encode_arbitrary(const ArbitraryLengthCode& code, const Message& a);
Polynomial encoding_polynomial_arbitrary(const ArbitraryLengthCode& code, const Message& a);
RepairResult repair_arbitrary_detail(const ArbitraryLengthCode& code, const PartialCodeword& symbols,
                                     std::size_t position);
FieldElement repair_arbitrary(const ArbitraryLengthCode& code, const PartialCodeword& symbols,
                              std::size_t position);
// r others in a full block, the s-1 others in the short block
std::vector<std::size_t> recovering_set_arbitrary(const ArbitraryLengthCode& code,
                                                  std::size_t position);
// per-position locality for reports
std::vector<std::size_t> localities_arbitrary(const ArbitraryLengthCode& code);
Matrix generator_matrix(const ArbitraryLengthCode& code);

// --- redundant-residue (CRT) codes ----------------------------------------

struct CrtBlock {
  std::vector<FieldElement> points;  // A_i
  std::size_t k_i = 0;
  Polynomial modulus;                // annihilator of A_i

  CrtBlock() : modulus(nullptr) {}
};

// Encoding polynomial is the CRT solution of f = M_i mod G_i; restricted
// to block i the codeword is the evaluation of M_i, an (n_i, k_i) MDS
// code, so any n_i - k_i erasures inside a block are repairable.
struct CrtCode {
  std::shared_ptr<const Field> field;
  std::size_t n = 0, k = 0;
  std::vector<CrtBlock> blocks;
  std::size_t designed_distance = 0;  // min over blocks of n_i - k_i + 1

  std::vector<FieldElement> points;
  std::vector<std::size_t> block_of_position;
  std::vector<std::vector<std::size_t>> block_positions;
};

// Message splitting: M_1 takes the first k_1 coefficients, then M_2, ...;
// when k < sum k_i the tail coefficients are zero.
CrtCode crt_build(const std::shared_ptr<const Field>& field,
                  const std::vector<std::pair<std::vector<FieldElement>, std::size_t>>& blocks,
                  std::size_t k);

Codeword crt_encode(const CrtCode& code, const Message& a);
Polynomial encoding_polynomial_crt(const CrtCode& code, const Message& a);
// the residue polynomials M_i of a message (tests check f(alpha) = M_i(alpha))
std::vector<Polynomial> crt_residues(const CrtCode& code, const Message& a);
// Interpolates M_i from any k_i surviving symbols of block i and returns
// the full block contents.
std::vector<FieldElement> crt_local_decode(const CrtCode& code, std::size_t block_index,
                                           const PartialCodeword& symbols);
Matrix generator_matrix(const CrtCode& code);

// --- (r + rho - 1, r) local MDS codes --------------------------------------

// Every block is an (r+rho-1, r) MDS code: a lost symbol is repairable
// from any r of the r+rho-2 surviving block symbols.
struct LocalMdsCode {
  std::shared_ptr<const Field> field;
  LrcParams params;  // n, k, r
  std::size_t rho = 0;
  Partition partition;
  Polynomial g;
  std::vector<Polynomial> basis;
  std::size_t designed_distance = 0;

  std::vector<FieldElement> points;
  std::vector<std::size_t> block_of_position;
  std::vector<std::vector<std::size_t>> block_positions;
  Matrix basis_evals;

  LocalMdsCode() : g(nullptr) {}
};

// good must have degree r+rho-1 and uniform blocks of that size; needs
// r | k and rho >= 2.
LocalMdsCode local_mds_build(const std::shared_ptr<const Field>& field, const GoodPolynomial& good,
                             std::size_t k, std::size_t r);

Codeword encode_local_mds(const LocalMdsCode& code, const Message& a);
Polynomial encoding_polynomial_local_mds(const LocalMdsCode& code, const Message& a);
RepairResult repair_local_mds_detail(const LocalMdsCode& code, const PartialCodeword& symbols,
                                     std::size_t position);
FieldElement repair_local_mds(const LocalMdsCode& code, const PartialCodeword& symbols,
                              std::size_t position);
// repair through an explicit choice of r surviving positions in the block
FieldElement repair_local_mds_via(const LocalMdsCode& code, const PartialCodeword& symbols,
                                  std::size_t position, const std::vector<std::size_t>& via);
Matrix generator_matrix(const LocalMdsCode& code);

}  // namespace lrc
