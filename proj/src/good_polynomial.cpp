#include "lrc/good_polynomial.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace lrc {

std::vector<FieldElement> Partition::support() const {
  std::vector<FieldElement> out;
  for (const auto& b : blocks) out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::size_t Partition::size() const {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.size();
  return n;
}

std::optional<std::size_t> Partition::block_of(FieldElement a) const {
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (auto e : blocks[i])
      if (e == a) return i;
  return std::nullopt;
}

void Partition::validate() const {
  std::set<std::uint32_t> seen;
  for (const auto& b : blocks) {
    if (b.empty()) throw std::invalid_argument("partition block is empty");
    for (auto e : b)
      if (!seen.insert(e.value()).second)
        throw std::invalid_argument("partition blocks are not disjoint");
  }
}

GoodnessReport verify_good(const Polynomial& g, const Partition& partition) {
  GoodnessReport report;
  for (std::size_t i = 0; i < partition.blocks.size(); ++i) {
    const auto& block = partition.blocks[i];
    FieldElement value = g.evaluate(block[0]);
    for (std::size_t j = 1; j < block.size(); ++j) {
      if (g.evaluate(block[j]) != value) {
        report.violation = {i, block[0], block[j]};
        return report;
      }
    }
    report.block_values.push_back(value);
  }
  report.ok = true;
  return report;
}

namespace {

GoodPolynomial finish(Polynomial g, Partition partition) {
  partition.validate();
  GoodnessReport rep = verify_good(g, partition);
  if (!rep.ok) throw std::logic_error("constructed polynomial is not constant on its blocks");
  return GoodPolynomial{std::move(g), std::move(partition), std::move(rep.block_values)};
}

}  // namespace

GoodPolynomial from_multiplicative_subgroup(const std::shared_ptr<const Field>& field,
                                            FieldElement generator, std::size_t num_blocks) {
  const Field& f = *field;
  if (generator.is_zero()) throw std::invalid_argument("generator must be nonzero");
  std::uint64_t h = f.multiplicative_order(generator);
  if (num_blocks == 0 || num_blocks * h > f.order() - 1)
    throw std::invalid_argument("too many cosets requested for the subgroup");
  // subgroup elements in generation order 1, gen, gen^2, ...
  std::vector<FieldElement> subgroup;
  FieldElement cur = f.one();
  for (std::uint64_t i = 0; i < h; ++i) {
    subgroup.push_back(cur);
    cur = f.mul(cur, generator);
  }
  std::vector<bool> covered(f.order(), false);
  covered[0] = true;
  Partition partition;
  for (std::size_t b = 0; b < num_blocks; ++b) {
    std::uint32_t rep = 0;
    while (rep < f.order() && covered[rep]) ++rep;
    if (rep == f.order()) throw std::logic_error("ran out of coset representatives");
    std::vector<FieldElement> block;
    for (auto s : subgroup) {
      FieldElement e = f.mul(f.element(rep), s);
      covered[e.value()] = true;
      block.push_back(e);
    }
    partition.blocks.push_back(std::move(block));
  }
  Polynomial g = Polynomial::monomial(f.one(), h);
  return finish(std::move(g), std::move(partition));
}

namespace {

// Additive span of the generators; throws if they are dependent over F_p.
std::vector<FieldElement> additive_span(const Field& f, const std::vector<FieldElement>& generators) {
  std::vector<FieldElement> span = {f.zero()};
  for (auto gen : generators) {
    if (gen.is_zero()) throw std::invalid_argument("additive generators must be nonzero");
    std::vector<FieldElement> next;
    FieldElement mult = f.zero();
    for (std::uint32_t c = 0; c < f.characteristic(); ++c) {
      for (auto s : span) next.push_back(f.add(s, mult));
      mult = f.add(mult, gen);
    }
    std::set<std::uint32_t> uniq;
    for (auto e : next) uniq.insert(e.value());
    if (uniq.size() != next.size())
      throw std::invalid_argument("additive generators are dependent over F_p");
    span = std::move(next);
  }
  std::sort(span.begin(), span.end(),
            [](FieldElement a, FieldElement b) { return a.value() < b.value(); });
  return span;
}

}  // namespace

GoodPolynomial from_additive_subgroup(const std::shared_ptr<const Field>& field,
                                      const std::vector<FieldElement>& generators,
                                      std::size_t num_blocks) {
  const Field& f = *field;
  std::vector<FieldElement> subgroup = additive_span(f, generators);
  std::size_t h = subgroup.size();
  if (num_blocks == 0 || num_blocks * h > f.order())
    throw std::invalid_argument("too many cosets requested for the subgroup");
  std::vector<bool> covered(f.order(), false);
  Partition partition;
  for (std::size_t b = 0; b < num_blocks; ++b) {
    std::uint32_t rep = 0;
    while (rep < f.order() && covered[rep]) ++rep;
    if (rep == f.order()) throw std::logic_error("ran out of coset representatives");
    std::vector<FieldElement> block;
    for (auto s : subgroup) {
      FieldElement e = f.add(f.element(rep), s);
      covered[e.value()] = true;
      block.push_back(e);
    }
    std::sort(block.begin(), block.end(),
              [](FieldElement a, FieldElement b) { return a.value() < b.value(); });
    partition.blocks.push_back(std::move(block));
  }
  Polynomial g = annihilator(f, subgroup);
  return finish(std::move(g), std::move(partition));
}

GoodPolynomial from_combined(const std::shared_ptr<const Field>& field, std::uint32_t subfield_degree,
                             const std::vector<FieldElement>& subspace_basis, std::uint32_t m) {
  const Field& f = *field;
  std::uint32_t s = f.degree();
  std::uint32_t l = subfield_degree;
  if (l == 0 || s % l != 0) throw std::invalid_argument("subfield degree must divide field degree");
  std::uint64_t pl = 1;
  for (std::uint32_t i = 0; i < l; ++i) pl *= f.characteristic();
  if (m == 0 || (m > 1 && pl % m != 1)) throw std::invalid_argument("p^l mod m must equal 1");

  // the subfield F_{p^l} = fixed points of x -> x^(p^l)
  std::vector<FieldElement> subfield;
  for (auto e : f.enumerate_elements())
    if (f.pow(e, pl) == e) subfield.push_back(e);
  if (subfield.size() != pl) throw std::logic_error("subfield enumeration failed");

  // H = F_{p^l}-span of the basis; a span is closed under subfield
  // multiplication, which is exactly what the constancy argument needs.
  std::vector<FieldElement> span = {f.zero()};
  for (auto b : subspace_basis) {
    if (b.is_zero()) throw std::invalid_argument("subspace basis elements must be nonzero");
    std::vector<FieldElement> next;
    for (auto c : subfield)
      for (auto v : span) next.push_back(f.add(v, f.mul(c, b)));
    std::set<std::uint32_t> uniq;
    for (auto e : next) uniq.insert(e.value());
    if (uniq.size() != next.size())
      throw std::invalid_argument("subspace basis is dependent over the subfield");
    span = std::move(next);
  }
  std::size_t hsize = span.size();

  // m-th roots of unity
  std::vector<FieldElement> roots;
  for (auto e : f.enumerate_elements())
    if (!e.is_zero() && f.pow(e, m).is_one()) roots.push_back(e);
  if (roots.size() != m) throw std::logic_error("wrong number of m-th roots of unity");

  Polynomial g = Polynomial::constant(f.one());
  for (auto alpha : roots)
    for (auto h : span) g = g * Polynomial(&f, {f.add(h, alpha), f.one()});

  // bucket the whole field by the value of g, then order blocks by their
  // smallest member
  std::map<std::uint32_t, std::vector<FieldElement>> buckets;
  for (auto e : f.enumerate_elements()) buckets[g.evaluate(e).value()].push_back(e);
  std::vector<std::vector<FieldElement>> blocks;
  for (auto& [value, members] : buckets) {
    std::sort(members.begin(), members.end(),
              [](FieldElement a, FieldElement b) { return a.value() < b.value(); });
    blocks.push_back(members);
  }
  std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) {
    return a[0].value() < b[0].value();
  });
  // sanity: sizes follow the |H| / m|H| case split
  std::size_t small_blocks = 0;
  for (const auto& b : blocks) {
    if (b.size() == hsize)
      ++small_blocks;
    else if (b.size() != static_cast<std::size_t>(m) * hsize)
      throw std::logic_error("combined construction produced an unexpected block size");
  }
  if (m > 1 && small_blocks != 1)
    throw std::logic_error("combined construction should yield exactly one short block");
  Partition partition;
  partition.blocks = std::move(blocks);
  return finish(std::move(g), std::move(partition));
}

BigUint existence_count(std::uint64_t q, std::uint32_t r) {
  if (static_cast<std::uint64_t>(r) + 1 > q) throw std::invalid_argument("need r+1 <= q");
  BigUint c = BigUint::binomial(q, r + 1);
  // ceil(C / q^r) by r exact-or-not divisions by q
  bool any_remainder = false;
  for (std::uint32_t i = 0; i < r; ++i)
    if (c.divmod_small(static_cast<std::uint32_t>(q)) != 0) any_remainder = true;
  if (any_remainder) c.add_small(1);
  return c;
}

double existence_ratio(std::uint64_t q, std::uint32_t r) {
  BigUint c = BigUint::binomial(q, r + 1);
  double num = c.to_double();
  double den = 1.0;
  for (std::uint32_t i = 0; i < r; ++i) den *= static_cast<double>(q);
  return num / den;
}

namespace {

// Deterministic 64-bit generator (splitmix64) so searches reproduce across
// platforms and standard libraries.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return next() % n; }
};

}  // namespace

std::optional<GoodPolynomial> search_good_polynomial(const std::shared_ptr<const Field>& field,
                                                     std::size_t block_size, std::size_t min_blocks,
                                                     std::uint64_t budget, std::uint64_t seed) {
  const Field& f = *field;
  if (block_size < 1 || block_size > f.order()) throw std::invalid_argument("bad block size");
  if (min_blocks * block_size > f.order()) throw std::invalid_argument("min_blocks too large");
  SplitMix64 rng(seed);
  std::vector<FieldElement> all = f.enumerate_elements();
  for (std::uint64_t attempt = 0; attempt < budget; ++attempt) {
    // sample a root set of size block_size (partial Fisher-Yates)
    std::vector<std::uint32_t> pool(f.order());
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<FieldElement> roots;
    for (std::size_t i = 0; i < block_size; ++i) {
      std::size_t j = i + static_cast<std::size_t>(rng.below(pool.size() - i));
      std::swap(pool[i], pool[j]);
      roots.push_back(f.element(pool[i]));
    }
    // class representative: same non-constant coefficients, constant term 0
    Polynomial sample = annihilator(f, roots);
    std::vector<FieldElement> coeffs = sample.coeffs();
    coeffs[0] = f.zero();
    Polynomial rep(&f, std::move(coeffs));
    // all full level sets of the representative = all members of its class
    // that split into distinct roots
    std::map<std::uint32_t, std::vector<FieldElement>> levels;
    for (auto e : all) levels[rep.evaluate(e).value()].push_back(e);
    std::vector<std::vector<FieldElement>> full;
    for (auto& [value, members] : levels)
      if (members.size() == block_size) full.push_back(members);
    if (full.size() >= min_blocks) {
      std::sort(full.begin(), full.end(), [](const auto& a, const auto& b) {
        return a[0].value() < b[0].value();
      });
      Partition partition;
      partition.blocks = std::move(full);
      return finish(std::move(rep), std::move(partition));
    }
  }
  return std::nullopt;
}

bool are_orthogonal(const Partition& a, const Partition& b) {
  std::set<std::uint32_t> sa, sb;
  for (const auto& blk : a.blocks)
    for (auto e : blk) sa.insert(e.value());
  for (const auto& blk : b.blocks)
    for (auto e : blk) sb.insert(e.value());
  if (sa != sb) throw std::invalid_argument("partitions have different supports");
  for (const auto& x : a.blocks)
    for (const auto& y : b.blocks) {
      std::size_t common = 0;
      for (auto e : x)
        for (auto e2 : y)
          if (e == e2) ++common;
      if (common > 1) return false;
    }
  return true;
}

bool subgroups_yield_orthogonal(std::uint64_t order_a, std::uint64_t order_b,
                                std::uint64_t group_order) {
  if (order_a == 0 || order_b == 0 || group_order % order_a != 0 || group_order % order_b != 0)
    throw std::invalid_argument("subgroup orders must divide the group order");
  return std::gcd(order_a, order_b) == 1;
}

}  // namespace lrc
