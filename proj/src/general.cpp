#include "lrc/general.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace lrc {

namespace {

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

template <typename CodeT>
void finalize_layout(CodeT& code, std::size_t n) {
  const Field& f = *code.field;
  code.points.clear();
  code.block_of_position.clear();
  code.block_positions.assign(code.partition.blocks.size(), {});
  for (std::size_t b = 0; b < code.partition.blocks.size(); ++b)
    for (auto loc : code.partition.blocks[b]) {
      code.block_positions[b].push_back(code.points.size());
      code.block_of_position.push_back(b);
      code.points.push_back(loc);
    }
  if (code.points.size() != n) throw std::logic_error("layout size mismatch");
  code.basis_evals = Matrix(f, code.basis.size(), n);
  for (std::size_t m = 0; m < code.basis.size(); ++m)
    for (std::size_t t = 0; t < n; ++t)
      code.basis_evals.at(m, t) = code.basis[m].evaluate(code.points[t]).value();
}

template <typename CodeT>
Codeword encode_by_evals(const CodeT& code, const Message& a, std::size_t n, std::size_t k) {
  const Field& f = *code.field;
  if (a.size() != k) throw std::invalid_argument("message length must be k");
  Codeword out;
  out.reserve(n);
  for (std::size_t t = 0; t < n; ++t) {
    std::uint32_t acc = 0;
    for (std::size_t m = 0; m < k; ++m)
      acc = f.add_v(acc, f.mul_v(a[m].value(), code.basis_evals.at(m, t)));
    out.push_back(f.element(acc));
  }
  return out;
}

template <typename CodeT>
Polynomial poly_by_basis(const CodeT& code, const Message& a, std::size_t k) {
  if (a.size() != k) throw std::invalid_argument("message length must be k");
  Polynomial f_a(code.field.get());
  for (std::size_t m = 0; m < k; ++m) f_a = f_a + code.basis[m].scaled(a[m]);
  return f_a;
}

// interpolate through the first `need` survivors of the block
template <typename CodeT>
RepairResult block_repair(const CodeT& code, const PartialCodeword& symbols, std::size_t position,
                          std::size_t need, std::size_t n) {
  const Field& f = *code.field;
  if (position >= n) throw std::invalid_argument("position out of range");
  if (symbols.size() != n) throw std::invalid_argument("codeword length must be n");
  std::size_t block = code.block_of_position[position];
  std::vector<std::pair<FieldElement, FieldElement>> survivors;
  for (std::size_t t : code.block_positions[block]) {
    if (t == position || !symbols[t].has_value()) continue;
    survivors.emplace_back(code.points[t], *symbols[t]);
    if (survivors.size() == need) break;
  }
  if (survivors.size() < need)
    throw decode_failure("block " + std::to_string(block) + " has fewer than " +
                         std::to_string(need) + " surviving symbols");
  Polynomial delta = interpolate(f, survivors);
  return {delta, delta.evaluate(code.points[position])};
}

void validate_arbitrary_partition(const Partition& partition, std::size_t r, std::size_t& s_out) {
  partition.validate();
  if (partition.blocks.size() < 2)
    throw std::invalid_argument("need at least one full block and the short block");
  std::size_t s = partition.blocks.back().size();
  for (std::size_t b = 0; b + 1 < partition.blocks.size(); ++b)
    if (partition.blocks[b].size() != r + 1)
      throw std::invalid_argument("all blocks except the last must have size r+1");
  if (s < 2 || s >= r + 1)
    throw std::invalid_argument("short block size must be in 2..r (use the main construction "
                                "when r+1 divides n)");
  s_out = s;
}

}  // namespace

ArbitraryLengthCode build_arbitrary_linear(const std::shared_ptr<const Field>& field,
                                           const GoodPolynomial& good, std::size_t k) {
  const Field& f = *field;
  auto dg = good.g.degree();
  if (!dg.has_value() || *dg < 2) throw std::invalid_argument("good polynomial must have degree >= 2");
  std::size_t r = *dg - 1;
  std::size_t s = 0;
  validate_arbitrary_partition(good.partition, r, s);
  std::size_t n = good.partition.size();
  if (n % (r + 1) != s) throw std::logic_error("inconsistent short block size");
  if (k < 1 || (k + 1) % r != 0)
    throw std::invalid_argument("this construction needs r | k+1");
  GoodnessReport rep = verify_good(good.g, good.partition);
  if (!rep.ok) throw std::invalid_argument("polynomial is not constant on its partition");

  // shift so g vanishes on the short block
  Polynomial g = good.g - Polynomial::constant(rep.block_values.back());
  std::vector<FieldElement> shifted_values;
  for (auto v : rep.block_values) shifted_values.push_back(f.sub(v, rep.block_values.back()));
  for (std::size_t i = 0; i < shifted_values.size(); ++i)
    for (std::size_t j = i + 1; j < shifted_values.size(); ++j)
      if (shifted_values[i] == shifted_values[j])
        throw std::invalid_argument("block values of g must be pairwise distinct");

  Polynomial h_short = annihilator(f, good.partition.blocks.back());

  ArbitraryLengthCode code;
  code.field = field;
  code.params = {n, k, r};
  code.s = s;
  code.partition = good.partition;
  code.g = g;
  code.h_short = h_short;
  std::size_t J = (k + 1) / r;  // coefficients per slot (slot s-1 gets J-1)
  std::vector<Polynomial> gpow = {Polynomial::constant(f.one())};
  for (std::size_t j = 1; j < J; ++j) gpow.push_back(gpow.back() * g);
  for (std::size_t i = 0; i < r; ++i) {
    std::size_t j0 = (i == s - 1) ? 1 : 0;
    for (std::size_t j = j0; j < J; ++j) {
      Polynomial base = i < s ? gpow[j].shifted(i) : (gpow[j] * h_short).shifted(i - s);
      code.basis.push_back(std::move(base));
    }
  }
  if (code.basis.size() != k) throw std::logic_error("basis enumeration did not yield k polynomials");
  std::size_t cap = k + ceil_div(k, r) - 1;
  for (const auto& b : code.basis)
    if (b.degree().value_or(0) > cap) throw std::logic_error("basis degree exceeds the cap");
  code.designed_distance = n - cap;
  finalize_layout(code, n);
  return code;
}

ArbitraryLengthCode build_arbitrary_general(const std::shared_ptr<const Field>& field,
                                            Partition partition,
                                            const std::vector<std::vector<Polynomial>>& mappings) {
  const Field& f = *field;
  std::size_t r = mappings.size();
  if (r < 1) throw std::invalid_argument("need one mapping per coefficient slot");
  std::size_t s = 0;
  validate_arbitrary_partition(partition, r, s);
  std::size_t n = partition.size();
  Polynomial h_short = annihilator(f, partition.blocks.back());
  const auto& short_block = partition.blocks.back();

  std::size_t k = 0;
  std::vector<Polynomial> basis;
  for (std::size_t i = 0; i < r; ++i) {
    for (const auto& fi : mappings[i]) {
      // each image polynomial must be constant on all blocks
      GoodnessReport rep = verify_good(fi, partition);
      if (!rep.ok)
        throw std::invalid_argument("mapping image is not constant on the blocks: " + fi.to_string());
      if (i == s - 1) {
        for (auto alpha : short_block)
          if (!fi.evaluate(alpha).is_zero())
            throw std::invalid_argument("mapping for slot s-1 must vanish on the short block");
      }
      basis.push_back(i < s ? fi.shifted(i) : (fi * h_short).shifted(i - s));
      ++k;
    }
  }
  if (k == 0) throw std::invalid_argument("mappings carry no message coordinates");
  std::size_t max_deg = 0;
  for (const auto& b : basis) max_deg = std::max(max_deg, b.degree().value_or(0));
  if (max_deg >= n) throw std::invalid_argument("encoding degree reaches the code length");
  if (rank(poly_rows(f, basis, max_deg + 1)) != k)
    throw std::invalid_argument("combined mapping is not injective");

  ArbitraryLengthCode code;
  code.field = field;
  code.params = {n, k, r};
  code.s = s;
  code.partition = std::move(partition);
  code.g = Polynomial(&f);  // no single generator in the general form
  code.h_short = h_short;
  code.basis = std::move(basis);
  code.designed_distance = n - max_deg;
  finalize_layout(code, n);
  return code;
}

Codeword encode_arbitrary(const ArbitraryLengthCode& code, const Message& a) {
  return encode_by_evals(code, a, code.params.n, code.params.k);
}

Polynomial encoding_polynomial_arbitrary(const ArbitraryLengthCode& code, const Message& a) {
  return poly_by_basis(code, a, code.params.k);
}

RepairResult repair_arbitrary_detail(const ArbitraryLengthCode& code, const PartialCodeword& symbols,
                                     std::size_t position) {
  std::size_t block = position < code.params.n ? code.block_of_position[position] : 0;
  bool short_block = position < code.params.n && block + 1 == code.partition.blocks.size();
  std::size_t need = short_block ? code.s - 1 : code.params.r;
  return block_repair(code, symbols, position, need, code.params.n);
}

FieldElement repair_arbitrary(const ArbitraryLengthCode& code, const PartialCodeword& symbols,
                              std::size_t position) {
  return repair_arbitrary_detail(code, symbols, position).value;
}

std::vector<std::size_t> recovering_set_arbitrary(const ArbitraryLengthCode& code,
                                                  std::size_t position) {
  if (position >= code.params.n) throw std::invalid_argument("position out of range");
  std::size_t block = code.block_of_position[position];
  bool short_block = block + 1 == code.partition.blocks.size();
  std::size_t need = short_block ? code.s - 1 : code.params.r;
  std::vector<std::size_t> out;
  for (std::size_t t : code.block_positions[block]) {
    if (t == position) continue;
    out.push_back(t);
    if (out.size() == need) break;
  }
  return out;
}

std::vector<std::size_t> localities_arbitrary(const ArbitraryLengthCode& code) {
  std::vector<std::size_t> out;
  for (std::size_t t = 0; t < code.params.n; ++t) {
    bool short_block = code.block_of_position[t] + 1 == code.partition.blocks.size();
    out.push_back(short_block ? code.s - 1 : code.params.r);
  }
  return out;
}

Matrix generator_matrix(const ArbitraryLengthCode& code) { return code.basis_evals; }

CrtCode crt_build(const std::shared_ptr<const Field>& field,
                  const std::vector<std::pair<std::vector<FieldElement>, std::size_t>>& blocks,
                  std::size_t k) {
  const Field& f = *field;
  if (blocks.empty()) throw std::invalid_argument("need at least one block");
  CrtCode code;
  code.field = field;
  code.k = k;
  std::set<std::uint32_t> seen;
  std::size_t total_k = 0;
  std::size_t min_block_distance = ~std::size_t{0};
  for (const auto& [points, k_i] : blocks) {
    if (points.empty() || k_i < 1 || k_i > points.size())
      throw std::invalid_argument("each block needs 1 <= k_i <= n_i");
    for (auto a : points)
      if (!seen.insert(a.value()).second)
        throw std::invalid_argument("block point sets must be disjoint");
    CrtBlock blk;
    blk.points = points;
    blk.k_i = k_i;
    blk.modulus = annihilator(f, points);
    code.blocks.push_back(std::move(blk));
    total_k += k_i;
    min_block_distance = std::min(min_block_distance, points.size() - k_i + 1);
  }
  code.n = seen.size();
  if (code.n > f.order()) throw std::invalid_argument("code length exceeds field order");
  if (k < 1 || k > total_k) throw std::invalid_argument("need 1 <= k <= sum of k_i");
  code.designed_distance = min_block_distance;
  for (std::size_t b = 0; b < code.blocks.size(); ++b) {
    code.block_positions.push_back({});
    for (auto loc : code.blocks[b].points) {
      code.block_positions.back().push_back(code.points.size());
      code.block_of_position.push_back(b);
      code.points.push_back(loc);
    }
  }
  return code;
}

std::vector<Polynomial> crt_residues(const CrtCode& code, const Message& a) {
  const Field& f = *code.field;
  if (a.size() != code.k) throw std::invalid_argument("message length must be k");
  std::vector<Polynomial> out;
  std::size_t next = 0;
  for (const auto& blk : code.blocks) {
    std::vector<FieldElement> coeffs;
    for (std::size_t j = 0; j < blk.k_i; ++j)
      coeffs.push_back(next < code.k ? a[next++] : f.zero());
    out.emplace_back(&f, std::move(coeffs));
  }
  return out;
}

Polynomial encoding_polynomial_crt(const CrtCode& code, const Message& a) {
  std::vector<Polynomial> residues = crt_residues(code, a);
  std::vector<Polynomial> moduli;
  for (const auto& blk : code.blocks) moduli.push_back(blk.modulus);
  Polynomial f_a = crt_combine(residues, moduli);
  auto d = f_a.degree();
  if (d.has_value() && *d >= code.n) throw std::logic_error("crt polynomial degree out of range");
  return f_a;
}

Codeword crt_encode(const CrtCode& code, const Message& a) {
  // evaluates the combined CRT polynomial; tests check its block
  // restrictions against the residues M_i directly
  Polynomial f_a = encoding_polynomial_crt(code, a);
  Codeword out;
  out.reserve(code.n);
  for (auto pt : code.points) out.push_back(f_a.evaluate(pt));
  return out;
}

std::vector<FieldElement> crt_local_decode(const CrtCode& code, std::size_t block_index,
                                           const PartialCodeword& symbols) {
  const Field& f = *code.field;
  if (block_index >= code.blocks.size()) throw std::invalid_argument("block index out of range");
  if (symbols.size() != code.n) throw std::invalid_argument("codeword length must be n");
  const CrtBlock& blk = code.blocks[block_index];
  std::vector<std::pair<FieldElement, FieldElement>> survivors;
  for (std::size_t t : code.block_positions[block_index]) {
    if (!symbols[t].has_value()) continue;
    survivors.emplace_back(code.points[t], *symbols[t]);
    if (survivors.size() == blk.k_i) break;
  }
  if (survivors.size() < blk.k_i)
    throw decode_failure("block " + std::to_string(block_index) + " has fewer than k_i survivors");
  Polynomial mi = interpolate(f, survivors);
  std::vector<FieldElement> out;
  for (auto pt : blk.points) out.push_back(mi.evaluate(pt));
  return out;
}

Matrix generator_matrix(const CrtCode& code) {
  const Field& f = *code.field;
  Matrix gen(f, code.k, code.n);
  for (std::size_t m = 0; m < code.k; ++m) {
    Message unit(code.k, f.zero());
    unit[m] = f.one();
    Codeword row = crt_encode(code, unit);
    for (std::size_t t = 0; t < code.n; ++t) gen.at(m, t) = row[t].value();
  }
  return gen;
}

LocalMdsCode local_mds_build(const std::shared_ptr<const Field>& field, const GoodPolynomial& good,
                             std::size_t k, std::size_t r) {
  const Field& f = *field;
  good.partition.validate();
  auto dg = good.g.degree();
  if (!dg.has_value() || *dg < 2) throw std::invalid_argument("good polynomial must have degree >= 2");
  std::size_t block_size = *dg;  // r + rho - 1
  if (r < 1 || block_size < r + 1)
    throw std::invalid_argument("block size must be at least r+1 (rho >= 2)");
  std::size_t rho = block_size - r + 1;
  for (const auto& b : good.partition.blocks)
    if (b.size() != block_size)
      throw std::invalid_argument("every block must have size deg(g) = r+rho-1");
  std::size_t n = good.partition.size();
  if (k < 1 || k % r != 0) throw std::invalid_argument("this construction needs r | k");
  if (k / r > good.partition.blocks.size())
    throw std::invalid_argument("k/r exceeds the number of blocks");
  GoodnessReport rep = verify_good(good.g, good.partition);
  if (!rep.ok) throw std::invalid_argument("polynomial is not constant on its partition");
  for (std::size_t i = 0; i < rep.block_values.size(); ++i)
    for (std::size_t j = i + 1; j < rep.block_values.size(); ++j)
      if (rep.block_values[i] == rep.block_values[j])
        throw std::invalid_argument("block values of g must be pairwise distinct");

  LocalMdsCode code;
  code.field = field;
  code.params = {n, k, r};
  code.rho = rho;
  code.partition = good.partition;
  code.g = good.g;
  std::size_t top = k - 1 + (k / r - 1) * (rho - 1);
  Polynomial gp = Polynomial::constant(f.one());
  std::size_t gp_power = 0;
  for (std::size_t i = 0; i <= top; ++i) {
    if (i % block_size >= r) continue;
    std::size_t j = i / block_size;
    while (gp_power < j) {
      gp = gp * good.g;
      ++gp_power;
    }
    code.basis.push_back(gp.shifted(i % block_size));
  }
  if (code.basis.size() != k) throw std::logic_error("basis enumeration did not yield k polynomials");
  code.designed_distance = n - k + 1 - (k / r - 1) * (rho - 1);
  finalize_layout(code, n);
  return code;
}

Codeword encode_local_mds(const LocalMdsCode& code, const Message& a) {
  return encode_by_evals(code, a, code.params.n, code.params.k);
}

Polynomial encoding_polynomial_local_mds(const LocalMdsCode& code, const Message& a) {
  return poly_by_basis(code, a, code.params.k);
}

RepairResult repair_local_mds_detail(const LocalMdsCode& code, const PartialCodeword& symbols,
                                     std::size_t position) {
  return block_repair(code, symbols, position, code.params.r, code.params.n);
}

FieldElement repair_local_mds(const LocalMdsCode& code, const PartialCodeword& symbols,
                              std::size_t position) {
  return repair_local_mds_detail(code, symbols, position).value;
}

FieldElement repair_local_mds_via(const LocalMdsCode& code, const PartialCodeword& symbols,
                                  std::size_t position, const std::vector<std::size_t>& via) {
  const Field& f = *code.field;
  if (position >= code.params.n) throw std::invalid_argument("position out of range");
  if (via.size() != code.params.r) throw std::invalid_argument("need exactly r helper positions");
  std::size_t block = code.block_of_position[position];
  std::vector<std::pair<FieldElement, FieldElement>> survivors;
  for (std::size_t t : via) {
    if (t >= code.params.n || t == position || code.block_of_position[t] != block)
      throw std::invalid_argument("helper positions must lie in the erased symbol's block");
    if (!symbols[t].has_value()) throw decode_failure("helper position is erased");
    survivors.emplace_back(code.points[t], *symbols[t]);
  }
  Polynomial delta = interpolate(f, survivors);
  return delta.evaluate(code.points[position]);
}

Matrix generator_matrix(const LocalMdsCode& code) { return code.basis_evals; }

}  // namespace lrc
