#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lrc/good_polynomial.hpp"
#include "test_support.hpp"

using namespace lrc;

namespace {

std::vector<std::vector<std::uint32_t>> block_values_of(const Partition& p) {
  std::vector<std::vector<std::uint32_t>> out;
  for (const auto& b : p.blocks) {
    std::vector<std::uint32_t> vals;
    for (auto e : b) vals.push_back(e.value());
    out.push_back(vals);
  }
  return out;
}

}  // namespace

TEST_CASE("multiplicative cosets of <3> in F13 reproduce the worked partition") {
  auto f13 = Field::make_prime(13);
  GoodPolynomial good = from_multiplicative_subgroup(f13, f13->element(3), 3);
  CHECK(good.g == Polynomial::monomial(f13->one(), 3));
  CHECK(block_values_of(good.partition) ==
        std::vector<std::vector<std::uint32_t>>{{1, 3, 9}, {2, 6, 5}, {4, 12, 10}});
  // values of x^3 on the coset representatives
  std::vector<std::uint32_t> vals;
  for (auto v : good.block_values) vals.push_back(v.value());
  CHECK(vals == std::vector<std::uint32_t>{1, 8, 12});
}

TEST_CASE("multiplicative cosets of <5> in F13") {
  auto f13 = Field::make_prime(13);
  GoodPolynomial good = from_multiplicative_subgroup(f13, f13->element(5), 3);
  CHECK(good.g == Polynomial::monomial(f13->one(), 4));
  CHECK(block_values_of(good.partition) ==
        std::vector<std::vector<std::uint32_t>>{{1, 5, 12, 8}, {2, 10, 11, 3}, {4, 7, 9, 6}});
  std::vector<std::uint32_t> vals;
  for (auto v : good.block_values) vals.push_back(v.value());
  CHECK(vals == std::vector<std::uint32_t>{1, 3, 9});  // 1^4, 2^4, 4^4 mod 13
  // too many cosets: 4 * 4 > 12
  CHECK_THROWS_AS((void)from_multiplicative_subgroup(f13, f13->element(5), 4),
                  std::invalid_argument);
}

TEST_CASE("additive subgroup of GF(16): worked annihilator and cosets") {
  auto f16 = Field::make_extension(2, 4);
  GoodPolynomial good = from_additive_subgroup(f16, {f16->element(1), f16->element(2)}, 3);
  // x^4 + (a^2+a+1) x^2 + (a^2+a) x
  CHECK(good.g == Polynomial::from_values(*f16, {0, 6, 7, 0, 1}));
  CHECK(good.partition.size() == 12);
  CHECK(block_values_of(good.partition) ==
        std::vector<std::vector<std::uint32_t>>{{0, 1, 2, 3}, {4, 5, 6, 7}, {8, 9, 10, 11}});
  // constant on each coset, exhaustively over the whole field (4 cosets)
  GoodPolynomial all = from_additive_subgroup(f16, {f16->element(1), f16->element(2)}, 4);
  GoodnessReport rep = verify_good(all.g, all.partition);
  CHECK(rep.ok);
  // dependent generators rejected
  CHECK_THROWS_AS((void)from_additive_subgroup(f16, {f16->element(1), f16->element(1)}, 2),
                  std::invalid_argument);
}

TEST_CASE("verify_good reports values and violations") {
  auto f13 = Field::make_prime(13);
  const Field& f = *f13;
  Partition part;
  part.blocks = {{f.element(1), f.element(3), f.element(9)},
                 {f.element(2), f.element(6), f.element(5)},
                 {f.element(4), f.element(12), f.element(10)}};
  GoodnessReport rep = verify_good(Polynomial::monomial(f.one(), 3), part);
  REQUIRE(rep.ok);
  std::vector<std::uint32_t> vals;
  for (auto v : rep.block_values) vals.push_back(v.value());
  CHECK(vals == std::vector<std::uint32_t>{1, 8, 12});

  // constants pass on any partition
  GoodnessReport c = verify_good(Polynomial::from_values(f, {7}), part);
  CHECK(c.ok);

  // the identity is injective, so any block of size 2 gives a witness
  Partition pair;
  pair.blocks = {{f.element(1), f.element(2)}};
  GoodnessReport bad = verify_good(Polynomial::monomial(f.one(), 1), pair);
  REQUIRE_FALSE(bad.ok);
  REQUIRE(bad.violation.has_value());
  CHECK(std::get<0>(*bad.violation) == 0);
}

TEST_CASE("combined construction over F49 (p=7, m=2, |H|=7)") {
  auto f49 = Field::make_extension(7, 2);
  GoodPolynomial good = from_combined(f49, 1, {f49->element(1)}, 2);
  CHECK(good.g.degree() == std::optional<std::size_t>(14));
  REQUIRE(good.partition.blocks.size() == 4);
  std::size_t small = 0, large = 0;
  for (const auto& b : good.partition.blocks) {
    if (b.size() == 7) ++small;
    if (b.size() == 14) ++large;
  }
  CHECK(small == 1);
  CHECK(large == 3);
  // constancy over all 49 elements: every element appears in some block,
  // and verify_good checks block constancy exhaustively
  CHECK(good.partition.size() == 49);
  CHECK(verify_good(good.g, good.partition).ok);
}

TEST_CASE("combined construction with m=1 degenerates to additive cosets") {
  auto f16 = Field::make_extension(2, 4);
  GoodPolynomial good = from_combined(f16, 1, {f16->element(1)}, 1);
  // H = F_2, partition of all 16 elements into cosets of size |H| = 2
  CHECK(good.partition.size() == 16);
  for (const auto& b : good.partition.blocks) CHECK(b.size() == 2);
  CHECK(verify_good(good.g, good.partition).ok);
}

TEST_CASE("existence counting") {
  CHECK(existence_count(1 << 11, 5).to_u64() == 3);
  CHECK(existence_ratio(1 << 11, 5) == doctest::Approx(2.82).epsilon(0.01));
  CHECK(existence_count(13, 2).to_u64() == 2);  // ceil(286/169)
  CHECK(existence_count(6, 5).to_u64() == 1);   // q = r+1
}

TEST_CASE("good polynomial search") {
  auto f13 = Field::make_prime(13);
  SUBCASE("block size q finds the field annihilator class") {
    auto found = search_good_polynomial(f13, 13, 1, 10, 1);
    REQUIRE(found.has_value());
    CHECK(found->partition.blocks.size() == 1);
    CHECK(found->partition.blocks[0].size() == 13);
  }
  SUBCASE("finds a class with 3 disjoint root sets of size 3 over F13") {
    auto found = search_good_polynomial(f13, 3, 3, 1000, 7);
    REQUIRE(found.has_value());
    CHECK(found->partition.blocks.size() >= 3);
    CHECK(verify_good(found->g, found->partition).ok);
    // exhaustive-search oracle: x^3 is such a polynomial, so the class
    // family is nonempty and the searched class must match its shape
    for (const auto& b : found->partition.blocks) CHECK(b.size() == 3);
  }
  SUBCASE("unresolved case r=5 over GF(2^11)") {
    auto f2048 = Field::make_extension(2, 11);
    auto found = search_good_polynomial(f2048, 6, 3, 200, 1);
    REQUIRE(found.has_value());
    CHECK(found->g.degree() == std::optional<std::size_t>(6));
    CHECK(found->partition.blocks.size() >= 3);
    CHECK(verify_good(found->g, found->partition).ok);
  }
  SUBCASE("budget exhaustion returns not-found") {
    auto none = search_good_polynomial(f13, 3, 3, 0, 1);
    CHECK_FALSE(none.has_value());
  }
  SUBCASE("a degree-2 class covers all of F13 minus the pairing fixed point") {
    // x^2 + a1 x pairs x with -a1 - x: six full level sets
    auto found = search_good_polynomial(f13, 2, 6, 100, 3);
    REQUIRE(found.has_value());
    CHECK(found->partition.blocks.size() == 6);
  }
}

TEST_CASE("orthogonality of partitions") {
  auto f13 = Field::make_prime(13);
  GoodPolynomial g5 = from_multiplicative_subgroup(f13, f13->element(5), 3);
  GoodPolynomial g3 = from_multiplicative_subgroup(f13, f13->element(3), 4);
  CHECK(are_orthogonal(g5.partition, g3.partition));
  CHECK_FALSE(are_orthogonal(g5.partition, g5.partition));

  // singleton blocks are orthogonal to anything on the same support
  Partition singles;
  for (std::uint64_t v = 1; v < 13; ++v) singles.blocks.push_back({f13->element(v)});
  CHECK(are_orthogonal(singles, g3.partition));

  // support mismatch is an error
  Partition small;
  small.blocks = {{f13->element(1)}};
  CHECK_THROWS_AS((void)are_orthogonal(small, g3.partition), std::invalid_argument);
}

TEST_CASE("subgroup orders predict orthogonality, exhaustively for q <= 64") {
  CHECK(subgroups_yield_orthogonal(4, 3, 12));
  CHECK_FALSE(subgroups_yield_orthogonal(4, 4, 12));
  CHECK(subgroups_yield_orthogonal(3, 7, 63));
  CHECK_THROWS_AS((void)subgroups_yield_orthogonal(5, 3, 12), std::invalid_argument);

  // agreement with the partition-level test over all subgroup pairs of
  // cyclic groups F_q^*, exhaustively for q up to 64
  for (std::uint32_t q : {13, 16, 25, 64}) {
    auto field = q == 13 ? Field::make_prime(13)
                         : (q == 16 ? Field::make_extension(2, 4)
                                    : (q == 25 ? Field::make_extension(5, 2)
                                               : Field::make_extension(2, 6)));
    const Field& f = *field;
    std::uint64_t group = q - 1;
    for (std::uint64_t h = 2; h < group; ++h) {
      if (group % h != 0) continue;
      for (std::uint64_t g = 2; g < group; ++g) {
        if (group % g != 0) continue;
        // find generators of order h and g
        FieldElement gen_h = f.one(), gen_g = f.one();
        for (std::uint64_t v = 1; v < q; ++v) {
          if (f.multiplicative_order(f.element(v)) == h) {
            gen_h = f.element(v);
            break;
          }
        }
        for (std::uint64_t v = 1; v < q; ++v) {
          if (f.multiplicative_order(f.element(v)) == g) {
            gen_g = f.element(v);
            break;
          }
        }
        GoodPolynomial ph = from_multiplicative_subgroup(field, gen_h, group / h);
        GoodPolynomial pg = from_multiplicative_subgroup(field, gen_g, group / g);
        CHECK(are_orthogonal(ph.partition, pg.partition) ==
              subgroups_yield_orthogonal(h, g, group));
      }
    }
  }
}

TEST_CASE("every constructed good polynomial passes verify_good on its support") {
  auto f13 = Field::make_prime(13);
  auto f16 = Field::make_extension(2, 4);
  auto f49 = Field::make_extension(7, 2);
  std::vector<GoodPolynomial> all;
  all.push_back(from_multiplicative_subgroup(f13, f13->element(3), 4));
  all.push_back(from_multiplicative_subgroup(f13, f13->element(5), 3));
  all.push_back(from_additive_subgroup(f16, {f16->element(1), f16->element(2)}, 4));
  all.push_back(from_combined(f49, 1, {f49->element(1)}, 2));
  for (const auto& good : all) {
    GoodnessReport rep = verify_good(good.g, good.partition);
    CHECK(rep.ok);
    REQUIRE(rep.block_values.size() == good.block_values.size());
    for (std::size_t i = 0; i < rep.block_values.size(); ++i)
      CHECK(rep.block_values[i] == good.block_values[i]);
  }
}

TEST_CASE("multiplicative block values are |H|-th powers of representatives, distinct") {
  auto f13 = Field::make_prime(13);
  GoodPolynomial good = from_multiplicative_subgroup(f13, f13->element(5), 3);
  for (std::size_t i = 0; i < good.partition.blocks.size(); ++i) {
    FieldElement rep = good.partition.blocks[i][0];
    CHECK(f13->pow(rep, 4) == good.block_values[i]);
    for (std::size_t j = i + 1; j < good.block_values.size(); ++j)
      CHECK(good.block_values[i] != good.block_values[j]);
  }
}
