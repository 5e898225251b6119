#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lrc/lrc_code.hpp"
#include "test_support.hpp"

using namespace lrc;

namespace {

std::shared_ptr<const Field> f13() { return Field::make_prime(13); }

LrcCode example_942(const std::shared_ptr<const Field>& f) {
  return build(f, from_multiplicative_subgroup(f, f->element(3), 3), 4);
}

Message msg(const Field& f, std::initializer_list<std::uint64_t> vals) {
  Message out;
  for (auto v : vals) out.push_back(f.element(v));
  return out;
}

std::vector<std::uint32_t> values(const Codeword& cw) {
  std::vector<std::uint32_t> out;
  for (auto s : cw) out.push_back(s.value());
  return out;
}

PartialCodeword with_erasures(const Codeword& cw, std::initializer_list<std::size_t> erased) {
  PartialCodeword out(cw.begin(), cw.end());
  for (auto e : erased) out[e] = std::nullopt;
  return out;
}

}  // namespace

TEST_CASE("the (9,4,2) code over F13: basis, encoding, worked codeword") {
  auto f = f13();
  LrcCode code = example_942(f);
  CHECK(code.params.n == 9);
  CHECK(code.params.r == 2);
  CHECK(code.designed_distance == 5);
  REQUIRE(code.basis.size() == 4);
  CHECK(code.basis[0] == Polynomial::from_values(*f, {1}));
  CHECK(code.basis[1] == Polynomial::monomial(f->one(), 1));
  CHECK(code.basis[2] == Polynomial::monomial(f->one(), 3));
  CHECK(code.basis[3] == Polynomial::monomial(f->one(), 4));

  Codeword cw = encode(code, msg(*f, {1, 1, 1, 1}));
  CHECK(values(cw) == std::vector<std::uint32_t>{4, 8, 7, 1, 11, 2, 0, 0, 0});

  Codeword zero = encode(code, msg(*f, {0, 0, 0, 0}));
  for (auto s : zero) CHECK(s.is_zero());
}

TEST_CASE("r = k reduces to Reed-Solomon with a Vandermonde generator") {
  auto f = f13();
  std::vector<FieldElement> pts;
  for (std::uint64_t v = 0; v < 9; ++v) pts.push_back(f->element(v));
  LrcCode rs = reed_solomon(f, pts, 4);
  CHECK(rs.params.r == 4);
  CHECK(rs.designed_distance == 6);  // n - k + 1
  for (std::size_t i = 0; i < 4; ++i)
    CHECK(rs.basis[i] == Polynomial::monomial(f->one(), i));
  Matrix gen = generator_matrix(rs);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t t = 0; t < 9; ++t)
      CHECK(gen.at(i, t) == f->pow_v(static_cast<std::uint32_t>(t), i));
}

TEST_CASE("r does not divide k: degree caps follow the per-slot layout") {
  auto f = f13();
  // k = 5, r = 3: block size 4, use the generator-5 cosets
  LrcCode code = build(f, from_multiplicative_subgroup(f, f->element(5), 3), 5);
  CHECK(code.params.k == 5);
  // slots i < k mod r = 2 carry floor(k/r)+1 = 2 powers of g; others 1
  std::vector<std::size_t> degrees;
  for (const auto& b : code.basis) degrees.push_back(*b.degree());
  CHECK(degrees == std::vector<std::size_t>{0, 1, 2, 4, 5});  // max = k + ceil(k/r) - 2 = 5
  testsup::Rng rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    Message a;
    for (int i = 0; i < 5; ++i) a.push_back(testsup::random_element(rng, *f));
    Polynomial f_a = encoding_polynomial(code, a);
    auto d = f_a.degree();
    if (d.has_value()) CHECK(*d <= 5);
  }
}

TEST_CASE("worked repair: delta = 2x + 2 and value 4") {
  auto f = f13();
  LrcCode code = example_942(f);
  Codeword cw = encode(code, msg(*f, {1, 1, 1, 1}));
  RepairResult res = repair_detail(code, with_erasures(cw, {0}), 0);
  CHECK(res.delta == Polynomial::from_values(*f, {2, 2}));
  CHECK(res.value.value() == 4);

  // the zero codeword repairs to zero everywhere
  Codeword zero = encode(code, msg(*f, {0, 0, 0, 0}));
  for (std::size_t t = 0; t < 9; ++t)
    CHECK(repair(code, with_erasures(zero, {t}), t).is_zero());
}

TEST_CASE("repair round-trips every single erasure for random messages") {
  testsup::Rng rng(5);
  auto f = f13();
  auto f16 = Field::make_extension(2, 4);
  std::vector<LrcCode> codes;
  codes.push_back(example_942(f));
  codes.push_back(build(f, from_multiplicative_subgroup(f, f->element(5), 3), 6));
  codes.push_back(build(f16, from_additive_subgroup(f16, {f16->element(1), f16->element(2)}, 3), 6));
  for (const auto& code : codes) {
    for (int trial = 0; trial < 40; ++trial) {
      Message a;
      for (std::size_t i = 0; i < code.params.k; ++i)
        a.push_back(testsup::random_element(rng, *code.field));
      Codeword cw = encode(code, a);
      for (std::size_t t = 0; t < code.params.n; ++t)
        CHECK(repair(code, with_erasures(cw, {t}), t) == cw[t]);
    }
  }
}

TEST_CASE("the decoding polynomial is shared by every erasure in a block") {
  testsup::Rng rng(8);
  auto f = f13();
  LrcCode code = example_942(f);
  for (int trial = 0; trial < 30; ++trial) {
    Message a;
    for (int i = 0; i < 4; ++i) a.push_back(testsup::random_element(rng, *f));
    Codeword cw = encode(code, a);
    for (std::size_t block = 0; block < 3; ++block) {
      std::size_t p0 = code.block_positions[block][0];
      std::size_t p1 = code.block_positions[block][1];
      RepairResult r0 = repair_detail(code, with_erasures(cw, {p0}), p0);
      RepairResult r1 = repair_detail(code, with_erasures(cw, {p1}), p1);
      CHECK(r0.delta == r1.delta);
    }
  }
}

TEST_CASE("repair needs all r other symbols of the block") {
  auto f = f13();
  LrcCode code = example_942(f);
  Codeword cw = encode(code, msg(*f, {1, 2, 3, 4}));
  // erase two symbols of the same block {1, 3, 9} -> positions 0, 1
  CHECK_THROWS_AS((void)repair(code, with_erasures(cw, {0, 1}), 0), decode_failure);
  // erasing a symbol of another block does not hurt
  CHECK(repair(code, with_erasures(cw, {0, 3}), 0) == cw[0]);
}

TEST_CASE("recovering sets") {
  auto f = f13();
  LrcCode code = example_942(f);
  // position of location 1 is repaired from the locations 3 and 9
  CHECK(recovering_set(code, 0) == std::vector<std::size_t>{1, 2});
  for (std::size_t t = 0; t < code.params.n; ++t) {
    auto set = recovering_set(code, t);
    CHECK(set.size() == code.params.r);
    for (auto u : set) CHECK(code.block_of_position[u] == code.block_of_position[t]);
  }
}

TEST_CASE("example (12,6,3): coefficient polynomials via the algebra decomposition") {
  auto f = f13();
  LrcCode code = build(f, from_multiplicative_subgroup(f, f->element(5), 3), 6);
  std::vector<std::size_t> degrees;
  for (const auto& b : code.basis) degrees.push_back(*b.degree());
  CHECK(degrees == std::vector<std::size_t>{0, 1, 2, 4, 5, 6});

  testsup::Rng rng(13);
  Message a;
  for (int i = 0; i < 6; ++i) a.push_back(testsup::random_element(rng, *f));
  Polynomial f_a = encoding_polynomial(code, a);
  AlgebraDecomposition dec = algebra_membership(f_a, code.partition, 3);
  REQUIRE(dec.ok);
  // f_0 = a_0 + a_3 x^4, f_1 = a_1 + a_4 x^4, f_2 = a_2 + a_5 x^4
  for (std::size_t i = 0; i < 3; ++i) {
    Polynomial expect = Polynomial::constant(a[i]) + Polynomial::monomial(a[i + 3], 4);
    CHECK(dec.components[i] == expect);
  }
}

TEST_CASE("algebra basis and membership") {
  auto f = f13();
  GoodPolynomial g5 = from_multiplicative_subgroup(f, f->element(5), 3);
  // F_A[x] for the generator-5 cosets is spanned by 1, x^4, x^8
  std::vector<Polynomial> basis = algebra_basis(*f, g5.partition);
  REQUIRE(basis.size() == 3);
  CHECK(basis[0] == Polynomial::from_values(*f, {1}));
  CHECK(basis[1] == Polynomial::monomial(f->one(), 4));
  CHECK(basis[2] == Polynomial::monomial(f->one(), 8));

  GoodPolynomial g3 = from_multiplicative_subgroup(f, f->element(3), 3);
  // constants always belong
  AlgebraDecomposition c = algebra_membership(Polynomial::from_values(*f, {7}), g3.partition, 2);
  CHECK(c.ok);
  // x^2 is not constant on blocks of size 3, so it is rejected for r = 2
  AlgebraDecomposition bad = algebra_membership(Polynomial::monomial(f->one(), 2), g3.partition, 2);
  CHECK_FALSE(bad.ok);
  // decomposition reconstructs the input and lands in the algebra
  testsup::Rng rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    Message a;
    LrcCode code = build(f, g3, 4);
    for (int i = 0; i < 4; ++i) a.push_back(testsup::random_element(rng, *f));
    Polynomial f_a = encoding_polynomial(code, a);
    AlgebraDecomposition dec = algebra_membership(f_a, g3.partition, 2);
    REQUIRE(dec.ok);
    Polynomial rebuilt(f.get());
    for (std::size_t i = 0; i < dec.components.size(); ++i)
      rebuilt = rebuilt + dec.components[i].shifted(i);
    CHECK(rebuilt == f_a);
    for (const auto& comp : dec.components) CHECK(verify_good(comp, g3.partition).ok);
  }
}

TEST_CASE("lagrange block basis: indicator property, exhaustive") {
  auto f = f13();
  GoodPolynomial g3 = from_multiplicative_subgroup(f, f->element(3), 3);
  std::vector<Polynomial> lag = lagrange_block_basis(*f, g3.partition);
  REQUIRE(lag.size() == 3);
  Polynomial sum(f.get());
  for (const auto& p : lag) sum = sum + p;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (auto alpha : g3.partition.blocks[j])
        CHECK(lag[i].evaluate(alpha) == (i == j ? f->one() : f->zero()));
  for (auto alpha : g3.partition.support()) CHECK(sum.evaluate(alpha).is_one());

  // single block: the basis is the constant 1
  Partition single;
  single.blocks = {g3.partition.blocks[0]};
  std::vector<Polynomial> one = lagrange_block_basis(*f, single);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == Polynomial::from_values(*f, {1}));
}

TEST_CASE("build_from_mapping") {
  auto f = f13();
  SUBCASE("the construction-1 basis produces the identical code") {
    LrcCode direct = example_942(f);
    LrcCode mapped = build_from_mapping(f, direct.partition, 2, direct.basis);
    CHECK(mapped.designed_distance == direct.designed_distance);
    CHECK(mapped.params.k == direct.params.k);
    testsup::Rng rng(31);
    for (int trial = 0; trial < 20; ++trial) {
      Message a;
      for (int i = 0; i < 4; ++i) a.push_back(testsup::random_element(rng, *f));
      CHECK(values(encode(mapped, a)) == values(encode(direct, a)));
    }
  }
  SUBCASE("the (12,4) two-locality polynomial space over the size-3 partition") {
    GoodPolynomial g3 = from_multiplicative_subgroup(f, f->element(3), 4);
    std::vector<Polynomial> basis = {
        Polynomial::from_values(*f, {1}), Polynomial::monomial(f->one(), 1),
        Polynomial::monomial(f->one(), 4), Polynomial::monomial(f->one(), 6)};
    LrcCode code = build_from_mapping(f, g3.partition, 2, basis);
    CHECK(code.params.n == 12);
    CHECK(code.params.k == 4);
    CHECK(code.designed_distance == 6);  // n - max deg
  }
  SUBCASE("a basis polynomial outside the space is rejected") {
    GoodPolynomial g3 = from_multiplicative_subgroup(f, f->element(3), 4);
    std::vector<Polynomial> basis = {Polynomial::from_values(*f, {1}),
                                     Polynomial::monomial(f->one(), 2)};
    CHECK_THROWS_AS((void)build_from_mapping(f, g3.partition, 2, basis), std::invalid_argument);
  }
  SUBCASE("dependent bases are rejected") {
    GoodPolynomial g3 = from_multiplicative_subgroup(f, f->element(3), 4);
    std::vector<Polynomial> basis = {Polynomial::from_values(*f, {1}),
                                     Polynomial::from_values(*f, {2})};
    CHECK_THROWS_AS((void)build_from_mapping(f, g3.partition, 2, basis), std::invalid_argument);
  }
}

TEST_CASE("generator matrix has rank k on all shipped codes") {
  auto f = f13();
  auto f16 = Field::make_extension(2, 4);
  std::vector<LrcCode> codes;
  codes.push_back(example_942(f));
  codes.push_back(build(f, from_multiplicative_subgroup(f, f->element(5), 3), 6));
  codes.push_back(build(f16, from_additive_subgroup(f16, {f16->element(1), f16->element(2)}, 3), 6));
  codes.push_back(build(f, from_multiplicative_subgroup(f, f->element(5), 3), 5));
  for (const auto& code : codes) CHECK(rank(generator_matrix(code)) == code.params.k);
}

TEST_CASE("systematic encoding") {
  auto f = f13();
  LrcCode code = example_942(f);
  // B_1 = {1, 3} in block {1,3,9}; B_2 = {2, 6} in block {2,6,5}
  systematic_build(code, {{f->element(1), f->element(3)}, {f->element(2), f->element(6)}});
  REQUIRE(code.systematic.has_value());
  testsup::Rng rng(55);
  for (int trial = 0; trial < 200; ++trial) {
    Message a;
    for (int i = 0; i < 4; ++i) a.push_back(testsup::random_element(rng, *f));
    Codeword cw = encode_systematic(code, a);
    // a_{i,j} lands verbatim at the j-th info position of block i
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        CHECK(cw[code.systematic->info_positions[i][j]] == a[i * 2 + j]);
    // still a codeword of the same space: every repair round-trips
    for (std::size_t t = 0; t < 9; ++t)
      CHECK(repair(code, with_erasures(cw, {t}), t) == cw[t]);
  }
  Codeword zero = encode_systematic(code, msg(*f, {0, 0, 0, 0}));
  for (auto s : zero) CHECK(s.is_zero());

  // degree cap of the systematic encoder preserves optimality
  for (const auto& fb : code.systematic->fbar) CHECK(*fb.degree() <= 3);

  SUBCASE("bad info sets are rejected") {
    LrcCode fresh = example_942(f);
    CHECK_THROWS_AS(
        systematic_build(fresh, {{f->element(1), f->element(2)}, {f->element(2), f->element(6)}}),
        std::invalid_argument);  // 2 is not in block 0
    CHECK_THROWS_AS(systematic_build(fresh, {{f->element(1)}, {f->element(2)}}),
                    std::invalid_argument);  // wrong size
  }
}

TEST_CASE("parameter validation") {
  auto f = f13();
  GoodPolynomial g3 = from_multiplicative_subgroup(f, f->element(3), 3);
  CHECK_THROWS_AS((void)build(f, g3, 7), std::invalid_argument);   // k > nr/(r+1) = 6
  CHECK_THROWS_AS((void)build(f, g3, 1), std::invalid_argument);   // r > k
  CHECK_THROWS_AS((void)encode(example_942(f), msg(*f, {1, 2})), std::invalid_argument);
  GoodPolynomial bad{Polynomial::monomial(f->one(), 1), g3.partition, {}};
  CHECK_THROWS_AS((void)build(f, bad, 4), std::invalid_argument);  // deg too small / not good
}
