#include "lrc/code_spec_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "lrc/bounds.hpp"

namespace lrc {

namespace {

using nlohmann::json;

json poly_to_json(const Polynomial& p) {
  json out = json::array();
  for (auto c : p.coeffs()) out.push_back(c.value());
  return out;
}

Polynomial poly_from_json(const json& j, const Field& f) {
  std::vector<std::uint64_t> vals;
  for (const auto& v : j) vals.push_back(v.get<std::uint64_t>());
  return Polynomial::from_values(f, vals);
}

json points_to_json(const std::vector<FieldElement>& pts) {
  json out = json::array();
  for (auto p : pts) out.push_back(p.value());
  return out;
}

std::vector<FieldElement> points_from_json(const json& j, const Field& f) {
  std::vector<FieldElement> out;
  for (const auto& v : j) out.push_back(f.element(v.get<std::uint64_t>()));
  return out;
}

json partition_to_json(const Partition& p) {
  json out = json::array();
  for (const auto& b : p.blocks) out.push_back(points_to_json(b));
  return out;
}

Partition partition_from_json(const json& j, const Field& f) {
  Partition p;
  for (const auto& b : j) p.blocks.push_back(points_from_json(b, f));
  p.validate();
  return p;
}

json basis_to_json(const std::vector<Polynomial>& basis) {
  json out = json::array();
  for (const auto& p : basis) out.push_back(poly_to_json(p));
  return out;
}

std::vector<Polynomial> basis_from_json(const json& j, const Field& f) {
  std::vector<Polynomial> out;
  for (const auto& p : j) out.push_back(poly_from_json(p, f));
  return out;
}

void check_position_locations(const json& j, const std::vector<FieldElement>& points) {
  if (!j.is_array() || j.size() != points.size())
    throw std::invalid_argument("position_locations does not match the partition layout");
  for (std::size_t t = 0; t < points.size(); ++t)
    if (j[t].get<std::uint64_t>() != points[t].value())
      throw std::invalid_argument("position_locations disagrees with the partition order");
}

}  // namespace

json field_to_json(const Field& f) {
  json out;
  out["p"] = f.characteristic();
  out["l"] = f.degree();
  if (f.degree() > 1) out["modulus"] = f.modulus();
  return out;
}

std::shared_ptr<const Field> field_from_json(const json& j) {
  std::uint32_t p = j.at("p").get<std::uint32_t>();
  std::uint32_t l = j.at("l").get<std::uint32_t>();
  if (l == 1) return Field::make_prime(p);
  if (j.contains("modulus"))
    return Field::make_extension(p, l, j.at("modulus").get<std::vector<std::uint32_t>>());
  return Field::make_extension(p, l);
}

const Field& CodeSpec::field() const {
  return *std::visit([](const auto& c) { return c.field.get(); }, code);
}

std::shared_ptr<const Field> CodeSpec::field_ptr() const {
  return std::visit([](const auto& c) { return c.field; }, code);
}

std::size_t CodeSpec::n() const {
  return std::visit(
      [](const auto& c) -> std::size_t {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, Lrc2Code> || std::is_same_v<T, ProductCode> ||
                      std::is_same_v<T, CrtCode>)
          return c.n;
        else
          return c.params.n;
      },
      code);
}

std::size_t CodeSpec::k() const {
  return std::visit(
      [](const auto& c) -> std::size_t {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, Lrc2Code> || std::is_same_v<T, ProductCode> ||
                      std::is_same_v<T, CrtCode>)
          return c.k;
        else
          return c.params.k;
      },
      code);
}

std::string CodeSpec::construction() const {
  struct Visitor {
    std::string operator()(const LrcCode&) const { return "lrc"; }
    std::string operator()(const Lrc2Code&) const { return "lrc2"; }
    std::string operator()(const ProductCode&) const { return "product"; }
    std::string operator()(const ArbitraryLengthCode&) const { return "arbitrary"; }
    std::string operator()(const CrtCode&) const { return "crt"; }
    std::string operator()(const LocalMdsCode&) const { return "local_mds"; }
  };
  return std::visit(Visitor{}, code);
}

std::size_t CodeSpec::designed_distance() const {
  struct Visitor {
    std::size_t operator()(const LrcCode& c) const { return c.designed_distance; }
    std::size_t operator()(const Lrc2Code& c) const { return c.designed_distance; }
    std::size_t operator()(const ProductCode& c) const {
      return c.c1.designed_distance * c.c2.designed_distance;
    }
    std::size_t operator()(const ArbitraryLengthCode& c) const { return c.designed_distance; }
    std::size_t operator()(const CrtCode& c) const { return c.designed_distance; }
    std::size_t operator()(const LocalMdsCode& c) const { return c.designed_distance; }
  };
  return std::visit(Visitor{}, code);
}

Codeword CodeSpec::encode(const Message& a) const {
  struct Visitor {
    const Message& a;
    Codeword operator()(const LrcCode& c) const {
      return c.systematic.has_value() ? encode_systematic(c, a) : lrc::encode(c, a);
    }
    Codeword operator()(const Lrc2Code& c) const { return encode2(c, a); }
    Codeword operator()(const ProductCode& c) const { return product_encode(c, a); }
    Codeword operator()(const ArbitraryLengthCode& c) const { return encode_arbitrary(c, a); }
    Codeword operator()(const CrtCode& c) const { return crt_encode(c, a); }
    Codeword operator()(const LocalMdsCode& c) const { return encode_local_mds(c, a); }
  };
  return std::visit(Visitor{a}, code);
}

FieldElement CodeSpec::repair(const PartialCodeword& symbols, std::size_t position,
                              std::size_t via) const {
  struct Visitor {
    const PartialCodeword& symbols;
    std::size_t position;
    std::size_t via;
    FieldElement operator()(const LrcCode& c) const { return lrc::repair(c, symbols, position); }
    FieldElement operator()(const Lrc2Code& c) const { return repair2(c, symbols, position, via); }
    FieldElement operator()(const ProductCode& c) const {
      return product_repair(c, symbols, position, via);
    }
    FieldElement operator()(const ArbitraryLengthCode& c) const {
      return repair_arbitrary(c, symbols, position);
    }
    FieldElement operator()(const CrtCode& c) const {
      std::size_t block = c.block_of_position.at(position);
      return crt_local_decode(c, block, symbols)
          .at(position - c.block_positions[block].front());
    }
    FieldElement operator()(const LocalMdsCode& c) const {
      return repair_local_mds(c, symbols, position);
    }
  };
  return std::visit(Visitor{symbols, position, via}, code);
}

Matrix CodeSpec::generator() const {
  // systematic specs encode through the systematic map, so the generator
  // consumed by decode/verify must be that map's matrix
  if (const LrcCode* lrc = std::get_if<LrcCode>(&code); lrc && lrc->systematic.has_value()) {
    const Field& f = *lrc->field;
    Matrix gen(f, lrc->params.k, lrc->params.n);
    for (std::size_t m = 0; m < lrc->params.k; ++m) {
      Message unit(lrc->params.k, f.zero());
      unit[m] = f.one();
      Codeword row = encode_systematic(*lrc, unit);
      for (std::size_t t = 0; t < lrc->params.n; ++t) gen.at(m, t) = row[t].value();
    }
    return gen;
  }
  return std::visit([](const auto& c) { return generator_matrix(c); }, code);
}

std::vector<std::vector<std::size_t>> CodeSpec::recovering_sets() const {
  std::vector<std::vector<std::size_t>> out;
  struct Visitor {
    std::vector<std::vector<std::size_t>>& out;
    void operator()(const LrcCode& c) const {
      for (std::size_t t = 0; t < c.params.n; ++t) out.push_back(recovering_set(c, t));
    }
    void operator()(const Lrc2Code& c) const {
      for (std::size_t t = 0; t < c.n; ++t) out.push_back(recovering_set2(c, t, 0));
    }
    void operator()(const ProductCode& c) const {
      for (std::size_t t = 0; t < c.n; ++t) out.push_back(product_recovering_set(c, t, 0));
    }
    void operator()(const ArbitraryLengthCode& c) const {
      for (std::size_t t = 0; t < c.params.n; ++t) out.push_back(recovering_set_arbitrary(c, t));
    }
    void operator()(const CrtCode& c) const {
      // any k_i other symbols of the block: take the first k_i in block order
      for (std::size_t t = 0; t < c.n; ++t) {
        std::size_t b = c.block_of_position[t];
        std::vector<std::size_t> set;
        for (std::size_t u : c.block_positions[b]) {
          if (u == t) continue;
          set.push_back(u);
          if (set.size() == c.blocks[b].k_i) break;
        }
        out.push_back(std::move(set));
      }
    }
    void operator()(const LocalMdsCode& c) const {
      for (std::size_t t = 0; t < c.params.n; ++t) {
        std::size_t b = c.block_of_position[t];
        std::vector<std::size_t> set;
        for (std::size_t u : c.block_positions[b]) {
          if (u == t) continue;
          set.push_back(u);
          if (set.size() == c.params.r) break;
        }
        out.push_back(std::move(set));
      }
    }
  };
  std::visit(Visitor{out}, code);
  return out;
}

std::vector<std::size_t> CodeSpec::localities() const {
  std::vector<std::size_t> out;
  for (const auto& s : recovering_sets()) out.push_back(s.size());
  return out;
}

namespace {

json lrc_to_json(const LrcCode& c) {
  json out;
  out["version"] = 1;
  out["construction"] = "lrc";
  out["field"] = field_to_json(*c.field);
  out["params"] = {{"n", c.params.n}, {"k", c.params.k}, {"r", c.params.r}};
  out["partition"] = partition_to_json(c.partition);
  out["g"] = c.g.has_value() ? poly_to_json(*c.g) : json(nullptr);
  out["basis"] = basis_to_json(c.basis);
  out["position_locations"] = points_to_json(c.points);
  if (c.systematic.has_value()) {
    json info = json::array();
    for (const auto& b : c.systematic->info_points) info.push_back(points_to_json(b));
    out["systematic"] = {{"info_points", info}};
  }
  return out;
}

LrcCode lrc_from_json(const json& j) {
  auto field = field_from_json(j.at("field"));
  Partition partition = partition_from_json(j.at("partition"), *field);
  std::size_t k = j.at("params").at("k").get<std::size_t>();
  std::size_t r = j.at("params").at("r").get<std::size_t>();
  std::size_t n = j.at("params").at("n").get<std::size_t>();
  std::vector<Polynomial> basis = basis_from_json(j.at("basis"), *field);
  if (basis.size() != k) throw std::invalid_argument("basis size disagrees with k");
  LrcCode code;
  if (r == k && partition.blocks.size() == 1) {
    code = reed_solomon(field, partition.blocks[0], k);
    // a stored non-monomial basis must go through the general builder
    bool monomials = true;
    for (std::size_t i = 0; i < k; ++i)
      if (!(basis[i].degree() == std::optional<std::size_t>(i) && basis[i].leading().is_one() &&
            basis[i] == Polynomial::monomial(field->one(), i)))
        monomials = false;
    if (!monomials) code = build_from_mapping(field, partition, r, basis);
  } else {
    code = build_from_mapping(field, std::move(partition), r, std::move(basis));
  }
  if (code.params.n != n) throw std::invalid_argument("params.n disagrees with the partition");
  check_position_locations(j.at("position_locations"), code.points);
  if (!j.at("g").is_null()) {
    Polynomial g = poly_from_json(j.at("g"), *field);
    GoodnessReport rep = verify_good(g, code.partition);
    if (!rep.ok) throw std::invalid_argument("stored g is not constant on the partition");
    code.g = std::move(g);
    // restore the tighter designed distance of the power-of-g construction
    code.designed_distance = bounds::singleton_like(static_cast<std::int64_t>(code.params.n),
                                                    static_cast<std::int64_t>(code.params.k),
                                                    static_cast<std::int64_t>(code.params.r));
  }
  if (j.contains("systematic")) {
    std::vector<std::vector<FieldElement>> info;
    for (const auto& b : j.at("systematic").at("info_points"))
      info.push_back(points_from_json(b, *field));
    systematic_build(code, info);
  }
  return code;
}

json lrc2_to_json(const Lrc2Code& c) {
  if (c.partitions.size() != 2)
    throw std::invalid_argument("spec format v1 serializes exactly two partitions");
  json out;
  out["version"] = 1;
  out["construction"] = "lrc2";
  out["field"] = field_to_json(*c.field);
  out["params"] = {{"n", c.n}, {"k", c.k}, {"r", c.r1}, {"s", c.r2}};
  out["partitions"] = {partition_to_json(c.partitions[0]), partition_to_json(c.partitions[1])};
  out["m"] = c.m;
  out["basis"] = basis_to_json(c.basis);
  out["position_locations"] = points_to_json(c.points);
  return out;
}

Lrc2Code lrc2_from_json(const json& j) {
  auto field = field_from_json(j.at("field"));
  Partition p1 = partition_from_json(j.at("partitions").at(0), *field);
  Partition p2 = partition_from_json(j.at("partitions").at(1), *field);
  std::size_t k = j.at("params").at("k").get<std::size_t>();
  Lrc2Code code = build_lrc2(field, std::move(p1), std::move(p2), k);
  if (code.m != j.at("m").get<std::size_t>())
    throw std::invalid_argument("stored m disagrees with the rebuilt code");
  std::vector<Polynomial> basis = basis_from_json(j.at("basis"), *field);
  if (basis.size() != code.basis.size())
    throw std::invalid_argument("stored basis disagrees with the rebuilt code");
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!(basis[i] == code.basis[i]))
      throw std::invalid_argument("stored basis disagrees with the rebuilt code");
  check_position_locations(j.at("position_locations"), code.points);
  return code;
}

json arbitrary_to_json(const ArbitraryLengthCode& c) {
  json out;
  out["version"] = 1;
  out["construction"] = "arbitrary";
  out["field"] = field_to_json(*c.field);
  out["params"] = {{"n", c.params.n}, {"k", c.params.k}, {"r", c.params.r}, {"s", c.s}};
  out["partition"] = partition_to_json(c.partition);
  out["g"] = c.g.is_zero() ? json(nullptr) : poly_to_json(c.g);
  out["basis"] = basis_to_json(c.basis);
  out["position_locations"] = points_to_json(c.points);
  return out;
}

ArbitraryLengthCode arbitrary_from_json(const json& j) {
  auto field = field_from_json(j.at("field"));
  const Field& f = *field;
  Partition partition = partition_from_json(j.at("partition"), f);
  std::size_t k = j.at("params").at("k").get<std::size_t>();
  std::size_t r = j.at("params").at("r").get<std::size_t>();
  if (!j.at("g").is_null()) {
    Polynomial g = poly_from_json(j.at("g"), f);
    GoodnessReport rep = verify_good(g, partition);
    if (!rep.ok) throw std::invalid_argument("stored g is not constant on the partition");
    GoodPolynomial good{std::move(g), std::move(partition), std::move(rep.block_values)};
    ArbitraryLengthCode code = build_arbitrary_linear(field, good, k);
    if (code.params.r != r) throw std::invalid_argument("params.r disagrees with deg(g)");
    std::vector<Polynomial> basis = basis_from_json(j.at("basis"), f);
    if (basis.size() != code.basis.size())
      throw std::invalid_argument("stored basis disagrees with the rebuilt code");
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (!(basis[i] == code.basis[i]))
        throw std::invalid_argument("stored basis disagrees with the rebuilt code");
    check_position_locations(j.at("position_locations"), code.points);
    return code;
  }
  // general form: reconstruct the mappings from the stored basis by
  // stripping x^i (and the short-block annihilator for the high slots)
  std::vector<Polynomial> basis = basis_from_json(j.at("basis"), f);
  std::size_t s = j.at("params").at("s").get<std::size_t>();
  Polynomial h_short = annihilator(f, partition.blocks.back());
  std::vector<std::vector<Polynomial>> mappings(r);
  for (const auto& b : basis) {
    bool assigned = false;
    for (std::size_t i = 0; i < r && !assigned; ++i) {
      Polynomial shell = i < s ? Polynomial::monomial(f.one(), i)
                               : h_short.shifted(i - s);
      auto [quot, rem] = divmod(b, shell);
      if (!rem.is_zero()) continue;
      GoodnessReport rep = verify_good(quot, partition);
      if (!rep.ok) continue;
      if (i == s - 1) {
        bool vanishes = true;
        for (auto alpha : partition.blocks.back())
          if (!quot.evaluate(alpha).is_zero()) vanishes = false;
        if (!vanishes) continue;
      }
      mappings[i].push_back(quot);
      assigned = true;
    }
    if (!assigned)
      throw std::invalid_argument("stored basis polynomial does not fit the construction");
  }
  ArbitraryLengthCode code = build_arbitrary_general(field, std::move(partition), mappings);
  check_position_locations(j.at("position_locations"), code.points);
  return code;
}

json crt_to_json(const CrtCode& c) {
  json out;
  out["version"] = 1;
  out["construction"] = "crt";
  out["field"] = field_to_json(*c.field);
  out["params"] = {{"n", c.n}, {"k", c.k}};
  json blocks = json::array();
  for (const auto& b : c.blocks)
    blocks.push_back({{"points", points_to_json(b.points)}, {"k", b.k_i}});
  out["blocks"] = blocks;
  out["position_locations"] = points_to_json(c.points);
  return out;
}

CrtCode crt_from_json(const json& j) {
  auto field = field_from_json(j.at("field"));
  std::vector<std::pair<std::vector<FieldElement>, std::size_t>> blocks;
  for (const auto& b : j.at("blocks"))
    blocks.emplace_back(points_from_json(b.at("points"), *field), b.at("k").get<std::size_t>());
  CrtCode code = crt_build(field, blocks, j.at("params").at("k").get<std::size_t>());
  if (code.n != j.at("params").at("n").get<std::size_t>())
    throw std::invalid_argument("params.n disagrees with the blocks");
  check_position_locations(j.at("position_locations"), code.points);
  return code;
}

json local_mds_to_json(const LocalMdsCode& c) {
  json out;
  out["version"] = 1;
  out["construction"] = "local_mds";
  out["field"] = field_to_json(*c.field);
  out["params"] = {{"n", c.params.n}, {"k", c.params.k}, {"r", c.params.r}, {"rho", c.rho}};
  out["partition"] = partition_to_json(c.partition);
  out["g"] = poly_to_json(c.g);
  out["basis"] = basis_to_json(c.basis);
  out["position_locations"] = points_to_json(c.points);
  return out;
}

LocalMdsCode local_mds_from_json(const json& j) {
  auto field = field_from_json(j.at("field"));
  Partition partition = partition_from_json(j.at("partition"), *field);
  Polynomial g = poly_from_json(j.at("g"), *field);
  GoodnessReport rep = verify_good(g, partition);
  if (!rep.ok) throw std::invalid_argument("stored g is not constant on the partition");
  GoodPolynomial good{std::move(g), std::move(partition), std::move(rep.block_values)};
  LocalMdsCode code = local_mds_build(field, good, j.at("params").at("k").get<std::size_t>(),
                                      j.at("params").at("r").get<std::size_t>());
  if (code.rho != j.at("params").at("rho").get<std::size_t>())
    throw std::invalid_argument("params.rho disagrees with deg(g)");
  std::vector<Polynomial> basis = basis_from_json(j.at("basis"), *field);
  if (basis.size() != code.basis.size())
    throw std::invalid_argument("stored basis disagrees with the rebuilt code");
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!(basis[i] == code.basis[i]))
      throw std::invalid_argument("stored basis disagrees with the rebuilt code");
  check_position_locations(j.at("position_locations"), code.points);
  return code;
}

}  // namespace

json code_to_json(const CodeSpec& spec) {
  struct Visitor {
    json operator()(const LrcCode& c) const { return lrc_to_json(c); }
    json operator()(const Lrc2Code& c) const { return lrc2_to_json(c); }
    json operator()(const ProductCode& c) const {
      json out;
      out["version"] = 1;
      out["construction"] = "product";
      out["field"] = field_to_json(*c.field);
      out["params"] = {{"n", c.n}, {"k", c.k}};
      out["product"] = {{"c1", lrc_to_json(c.c1)}, {"c2", lrc_to_json(c.c2)}};
      return out;
    }
    json operator()(const ArbitraryLengthCode& c) const { return arbitrary_to_json(c); }
    json operator()(const CrtCode& c) const { return crt_to_json(c); }
    json operator()(const LocalMdsCode& c) const { return local_mds_to_json(c); }
  };
  return std::visit(Visitor{}, spec.code);
}

CodeSpec code_from_json(const json& j) {
  if (!j.contains("version") || j.at("version").get<int>() != 1)
    throw std::invalid_argument("unsupported code spec version");
  std::string construction = j.value("construction", "lrc");
  if (construction == "lrc") return CodeSpec{lrc_from_json(j)};
  if (construction == "lrc2") return CodeSpec{lrc2_from_json(j)};
  if (construction == "product") {
    LrcCode c1 = lrc_from_json(j.at("product").at("c1"));
    LrcCode c2 = lrc_from_json(j.at("product").at("c2"));
    ProductCode prod = product_build(std::move(c1), std::move(c2));
    if (prod.n != j.at("params").at("n").get<std::size_t>() ||
        prod.k != j.at("params").at("k").get<std::size_t>())
      throw std::invalid_argument("product params disagree with the components");
    return CodeSpec{std::move(prod)};
  }
  if (construction == "arbitrary") return CodeSpec{arbitrary_from_json(j)};
  if (construction == "crt") return CodeSpec{crt_from_json(j)};
  if (construction == "local_mds") return CodeSpec{local_mds_from_json(j)};
  throw std::invalid_argument("unknown construction: " + construction);
}

std::string dump_spec(const CodeSpec& spec) { return code_to_json(spec).dump(2) + "\n"; }

CodeSpec parse_spec(const std::string& text) { return code_from_json(json::parse(text)); }

CodeSpec load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open spec file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_spec(buf.str());
}

Message parse_message(std::istream& in, const Field& f, std::size_t k) {
  Message out;
  std::string token;
  while (out.size() < k && in >> token) out.push_back(f.element(std::stoull(token)));
  if (out.size() != k)
    throw std::invalid_argument("message file must hold exactly k = " + std::to_string(k) +
                                " symbols");
  std::string extra;
  if (in >> extra) throw std::invalid_argument("message file has trailing symbols");
  return out;
}

PartialCodeword parse_partial_codeword(std::istream& in, const Field& f, std::size_t n) {
  PartialCodeword out;
  std::string token;
  while (out.size() < n && in >> token) {
    if (token == "?")
      out.push_back(std::nullopt);
    else
      out.push_back(f.element(std::stoull(token)));
  }
  if (out.size() != n)
    throw std::invalid_argument("codeword file must hold exactly n = " + std::to_string(n) +
                                " symbols");
  std::string extra;
  if (in >> extra) throw std::invalid_argument("codeword file has trailing symbols");
  return out;
}

void write_codeword(std::ostream& out, const CodeSpec& spec, const Codeword& cw) {
  if (const ProductCode* prod = std::get_if<ProductCode>(&spec.code)) {
    std::size_t n2 = prod->c2.params.n;
    for (std::size_t i = 0; i < cw.size(); ++i) {
      out << cw[i].value();
      out << ((i % n2 == n2 - 1) ? '\n' : ' ');
    }
    return;
  }
  for (auto s : cw) out << s.value() << '\n';
}

void write_message(std::ostream& out, const Message& a) {
  for (std::size_t i = 0; i < a.size(); ++i) out << a[i].value() << (i + 1 < a.size() ? ' ' : '\n');
}

}  // namespace lrc
