#pragma once

#include <cstdint>
#include <optional>
#include <tuple>
#include <vector>

#include "lrc/bigint.hpp"
#include "lrc/field.hpp"
#include "lrc/polynomial.hpp"

namespace lrc {

// An evaluation set split into pairwise-disjoint recovery blocks. Block
// order and in-block element order are part of the value: codeword
// positions are defined by them.
struct Partition {
  std::vector<std::vector<FieldElement>> blocks;

  std::vector<FieldElement> support() const;
  std::size_t size() const;  // number of points
  // index of the block containing a, or nullopt
  std::optional<std::size_t> block_of(FieldElement a) const;
  void validate() const;  // throws unless blocks are disjoint and nonempty
};

// Witness that g is constant on every block: the per-block values, or the
// first (block, alpha, beta) pair where it is not.
struct GoodnessReport {
  bool ok = false;
  std::vector<FieldElement> block_values;
  std::optional<std::tuple<std::size_t, FieldElement, FieldElement>> violation;
};

// A polynomial together with a partition it is constant on. The keystone
// of every construction here.
struct GoodPolynomial {
  Polynomial g;
  Partition partition;
  std::vector<FieldElement> block_values;

  std::size_t block_size() const { return partition.blocks.empty() ? 0 : partition.blocks[0].size(); }
};

GoodnessReport verify_good(const Polynomial& g, const Partition& partition);

// g(x) = x^|H| on the first num_blocks cosets of H = <generator>. Coset
// representatives are chosen as the smallest canonical integer not yet
// covered, ascending; elements follow generation order rep * generator^j.
GoodPolynomial from_multiplicative_subgroup(const std::shared_ptr<const Field>& field,
                                            FieldElement generator, std::size_t num_blocks);

// g = annihilator of the additive span H of the generators; partition is
// the first num_blocks cosets of H (same smallest-representative rule,
// elements ascending by canonical integer).
GoodPolynomial from_additive_subgroup(const std::shared_ptr<const Field>& field,
                                      const std::vector<FieldElement>& generators,
                                      std::size_t num_blocks);

// Combined additive/multiplicative construction over F_{p^s}: H is the
// F_{p^l}-span of subspace_basis, the alphas are the m-th roots of unity,
// and g(x) = prod_{i,h} (x + h + alpha_i). The whole field is partitioned
// by the value of g: (p^s - |H|)/(m|H|) blocks of size m|H| plus one block
// of size |H|.
GoodPolynomial from_combined(const std::shared_ptr<const Field>& field, std::uint32_t subfield_degree,
                             const std::vector<FieldElement>& subspace_basis, std::uint32_t m);

// ceil(C(q, r+1) / q^r): how many disjoint blocks of size r+1 some good
// polynomial of degree r+1 is guaranteed to be constant on.
BigUint existence_count(std::uint64_t q, std::uint32_t r);
// C(q, r+1) / q^r as a double, for report rendering.
double existence_ratio(std::uint64_t q, std::uint32_t r);

// Randomized search over the classes "monic, degree block_size, split with
// distinct roots, modulo an additive constant". Each sample picks a random
// root set, normalizes the class representative to constant term zero and
// collects all full level sets of the representative over the field. First
// sample whose class holds >= min_blocks disjoint root sets wins.
std::optional<GoodPolynomial> search_good_polynomial(const std::shared_ptr<const Field>& field,
                                                     std::size_t block_size, std::size_t min_blocks,
                                                     std::uint64_t budget = 1000000,
                                                     std::uint64_t seed = 1);

// Every pair of blocks meets in at most one point. Supports must coincide
// as sets.
bool are_orthogonal(const Partition& a, const Partition& b);

// For subgroups of the cyclic group of order q-1: cosets give orthogonal
// partitions iff gcd of the orders is 1. Orders must divide q-1.
bool subgroups_yield_orthogonal(std::uint64_t order_a, std::uint64_t order_b, std::uint64_t group_order);

}  // namespace lrc
