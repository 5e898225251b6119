// lrc: generate, encode, repair, decode and verify locally recoverable
// codes built by polynomial evaluation.
//
// Exit codes: 0 success, 2 parameter or validation error, 3 decode/repair
// failure (not enough survivors or undecodable pattern).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lrc/bounds.hpp"
#include "lrc/code_spec_io.hpp"
#include "lrc/oracle.hpp"

using nlohmann::json;
using namespace lrc;

namespace {

constexpr std::uint64_t kSearchBudget = 1000000;

std::uint64_t default_cap() {
  if (const char* env = std::getenv("LRC_EXHAUSTIVE_CAP")) return std::stoull(env);
  return oracle::kDefaultMessageCap;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot write to " + out_path);
  out << text;
}

std::shared_ptr<const Field> field_for_order(std::uint64_t q) {
  for (std::uint32_t p = 2; p <= q; ++p) {
    if (!is_prime(p)) continue;
    std::uint64_t power = p;
    std::uint32_t l = 1;
    while (power < q) {
      power *= p;
      ++l;
    }
    if (power == q) return l == 1 ? Field::make_prime(p) : Field::make_extension(p, l);
  }
  throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
}

FieldElement smallest_of_order(const Field& f, std::uint64_t order) {
  for (std::uint64_t v = 1; v < f.order(); ++v)
    if (f.multiplicative_order(f.element(v)) == order) return f.element(v);
  throw std::invalid_argument("the field has no element of multiplicative order " +
                              std::to_string(order));
}

// Deterministic good polynomial with num_blocks blocks of size block_size:
// multiplicative cosets first, then additive cosets, then the combined
// construction, then the randomized class search.
GoodPolynomial deterministic_good(const std::shared_ptr<const Field>& field,
                                  std::size_t block_size, std::size_t num_blocks,
                                  std::uint64_t seed) {
  const Field& f = *field;
  std::uint64_t q = f.order();
  if (block_size >= 2 && (q - 1) % block_size == 0 && num_blocks * block_size <= q - 1)
    return from_multiplicative_subgroup(field, smallest_of_order(f, block_size), num_blocks);
  // additive: block_size = p^t
  std::uint64_t bs = block_size;
  std::uint32_t t = 0;
  while (bs % f.characteristic() == 0) {
    bs /= f.characteristic();
    ++t;
  }
  if (bs == 1 && t >= 1 && t <= f.degree() && num_blocks * block_size <= q) {
    std::vector<FieldElement> gens;
    std::uint64_t power = 1;
    for (std::uint32_t i = 0; i < t; ++i) {
      gens.push_back(f.element(power));
      power *= f.characteristic();
    }
    return from_additive_subgroup(field, gens, num_blocks);
  }
  // combined: block_size = m * p^t with m > 1 coprime to p
  if (bs > 1 && t >= 1) {
    std::uint32_t m = static_cast<std::uint32_t>(bs);
    std::uint32_t l0 = 1;
    std::uint64_t pl = f.characteristic();
    while (l0 <= f.degree() && pl % m != 1) {
      ++l0;
      pl *= f.characteristic();
    }
    if (l0 <= f.degree() && f.degree() % l0 == 0 && t % l0 == 0) {
      // F_{p^l0}-subspace of dimension t / l0, basis chosen greedily by
      // canonical order
      std::vector<FieldElement> basis;
      std::vector<FieldElement> subfield;
      std::uint64_t pl0 = 1;
      for (std::uint32_t i = 0; i < l0; ++i) pl0 *= f.characteristic();
      for (auto e : f.enumerate_elements())
        if (f.pow(e, pl0) == e) subfield.push_back(e);
      std::vector<bool> in_span(q, false);
      in_span[0] = true;
      for (std::uint64_t v = 1; v < q && basis.size() < t / l0; ++v) {
        if (in_span[v]) continue;
        basis.push_back(f.element(v));
        std::vector<std::uint32_t> members;
        for (std::uint64_t w = 0; w < q; ++w)
          if (in_span[w]) members.push_back(static_cast<std::uint32_t>(w));
        for (auto c : subfield)
          for (auto w : members)
            in_span[f.add_v(f.mul_v(c.value(), static_cast<std::uint32_t>(v)), w)] = true;
      }
      GoodPolynomial all = from_combined(field, l0, basis, m);
      Partition chosen;
      for (const auto& b : all.partition.blocks)
        if (b.size() == block_size && chosen.blocks.size() < num_blocks)
          chosen.blocks.push_back(b);
      if (chosen.blocks.size() == num_blocks) {
        GoodnessReport rep = verify_good(all.g, chosen);
        if (rep.ok) return GoodPolynomial{all.g, chosen, rep.block_values};
      }
    }
  }
  auto found = search_good_polynomial(field, block_size, num_blocks, kSearchBudget, seed);
  if (!found.has_value())
    throw std::invalid_argument("no good polynomial with " + std::to_string(num_blocks) +
                                " blocks of size " + std::to_string(block_size) + " was found");
  Partition chosen;
  for (const auto& b : found->partition.blocks)
    if (chosen.blocks.size() < num_blocks) chosen.blocks.push_back(b);
  GoodnessReport rep = verify_good(found->g, chosen);
  return GoodPolynomial{found->g, chosen, rep.block_values};
}

std::uint64_t pick_order(std::optional<std::uint64_t> q, std::size_t n) {
  if (q.has_value()) return *q;
  for (std::uint64_t cand = std::max<std::uint64_t>(n, 2);; ++cand) {
    try {
      (void)field_for_order(cand);
      return cand;
    } catch (const std::invalid_argument&) {
    }
  }
}

CodeSpec generate(const std::string& construction, std::size_t n, std::size_t k, std::size_t r,
                  std::optional<std::uint64_t> q_opt, std::size_t s, std::size_t rho,
                  const std::string& blocks_arg, bool systematic, std::uint64_t seed) {
  if (construction == "lrc" && r == k) {
    std::uint64_t q = pick_order(q_opt, n);
    auto field = field_for_order(q);
    std::vector<FieldElement> pts;
    for (std::uint64_t v = 0; v < n; ++v) pts.push_back(field->element(v));
    return CodeSpec{reed_solomon(field, pts, k)};
  }
  if (construction == "lrc") {
    std::uint64_t q = pick_order(q_opt, n);
    auto field = field_for_order(q);
    if (n % (r + 1) != 0)
      throw std::invalid_argument("r+1 must divide n (use --construction arbitrary otherwise)");
    LrcCode code = build(field, deterministic_good(field, r + 1, n / (r + 1), seed), k);
    if (systematic) {
      if (r == 0 || k % r != 0) throw std::invalid_argument("--systematic needs r | k");
      std::vector<std::vector<FieldElement>> info;
      for (std::size_t i = 0; i < k / r; ++i)
        info.emplace_back(code.partition.blocks[i].begin(),
                          code.partition.blocks[i].begin() + r);
      systematic_build(code, info);
    }
    return CodeSpec{std::move(code)};
  }
  if (construction == "lrc2") {
    std::uint64_t q = pick_order(q_opt, n + 1);
    auto field = field_for_order(q);
    if (n != q - 1)
      throw std::invalid_argument("two-partition codes are built on the full multiplicative "
                                  "group: n must be q-1");
    if (!subgroups_yield_orthogonal(r + 1, s + 1, q - 1))
      throw std::invalid_argument("subgroup orders r+1 and s+1 must be coprime divisors of q-1");
    GoodPolynomial p1 = from_multiplicative_subgroup(field, smallest_of_order(*field, r + 1),
                                                     (q - 1) / (r + 1));
    GoodPolynomial p2 = from_multiplicative_subgroup(field, smallest_of_order(*field, s + 1),
                                                     (q - 1) / (s + 1));
    return CodeSpec{build_lrc2(field, p1.partition, p2.partition, k)};
  }
  if (construction == "product") {
    std::uint64_t q = pick_order(q_opt, n);
    auto field = field_for_order(q);
    LrcCode comp;
    if (r == k) {
      std::vector<FieldElement> pts;
      for (std::uint64_t v = 0; v < n; ++v) pts.push_back(field->element(v));
      comp = reed_solomon(field, pts, k);
    } else {
      if (n % (r + 1) != 0) throw std::invalid_argument("r+1 must divide the component length n");
      comp = build(field, deterministic_good(field, r + 1, n / (r + 1), seed), k);
    }
    LrcCode comp2 = comp;
    return CodeSpec{product_build(std::move(comp), std::move(comp2))};
  }
  if (construction == "arbitrary") {
    std::uint64_t q = pick_order(q_opt, n);
    auto field = field_for_order(q);
    std::size_t short_size = n % (r + 1);
    if (short_size < 2)
      throw std::invalid_argument("arbitrary-length codes need n mod (r+1) in 2..r");
    std::size_t full_blocks = n / (r + 1);
    GoodPolynomial base = deterministic_good(field, r + 1, full_blocks + 1, seed);
    Partition part;
    for (std::size_t b = 0; b < full_blocks; ++b) part.blocks.push_back(base.partition.blocks[b]);
    part.blocks.emplace_back(base.partition.blocks[full_blocks].begin(),
                             base.partition.blocks[full_blocks].begin() + short_size);
    GoodnessReport rep = verify_good(base.g, part);
    if (!rep.ok) throw std::logic_error("construction lost block constancy");
    return CodeSpec{
        build_arbitrary_linear(field, GoodPolynomial{base.g, part, rep.block_values}, k)};
  }
  if (construction == "crt") {
    if (blocks_arg.empty())
      throw std::invalid_argument("--blocks n1:k1,n2:k2,... is required for crt codes");
    std::vector<std::pair<std::size_t, std::size_t>> sizes;
    std::stringstream ss(blocks_arg);
    std::string item;
    std::size_t total = 0;
    while (std::getline(ss, item, ',')) {
      auto colon = item.find(':');
      if (colon == std::string::npos) throw std::invalid_argument("bad --blocks entry: " + item);
      sizes.emplace_back(std::stoull(item.substr(0, colon)), std::stoull(item.substr(colon + 1)));
      total += sizes.back().first;
    }
    std::uint64_t q = pick_order(q_opt, total);
    auto field = field_for_order(q);
    std::vector<std::pair<std::vector<FieldElement>, std::size_t>> blocks;
    std::uint64_t next = 0;
    for (auto [ni, ki] : sizes) {
      std::vector<FieldElement> pts;
      for (std::size_t i = 0; i < ni; ++i) pts.push_back(field->element(next++));
      blocks.emplace_back(std::move(pts), ki);
    }
    return CodeSpec{crt_build(field, blocks, k)};
  }
  if (construction == "local_mds") {
    if (rho < 2) throw std::invalid_argument("--rho >= 2 is required for local_mds codes");
    std::uint64_t q = pick_order(q_opt, n);
    auto field = field_for_order(q);
    std::size_t block = r + rho - 1;
    if (n % block != 0) throw std::invalid_argument("r+rho-1 must divide n");
    return CodeSpec{
        local_mds_build(field, deterministic_good(field, block, n / block, seed), k, r)};
  }
  throw std::invalid_argument("unknown construction: " + construction);
}

json verify_report(const CodeSpec& spec, std::uint64_t cap, unsigned threads,
                   std::uint64_t samples, std::uint64_t seed) {
  json report;
  report["construction"] = spec.construction();
  report["n"] = spec.n();
  report["k"] = spec.k();
  report["designed_d"] = spec.designed_distance();

  std::int64_t n = static_cast<std::int64_t>(spec.n());
  std::int64_t k = static_cast<std::int64_t>(spec.k());
  struct BoundVisitor {
    std::int64_t n, k;
    std::int64_t operator()(const LrcCode& c) const {
      return bounds::singleton_like(n, k, static_cast<std::int64_t>(c.params.r));
    }
    std::int64_t operator()(const Lrc2Code& c) const {
      return std::min(bounds::singleton_like(n, k, static_cast<std::int64_t>(c.r1)),
                      bounds::singleton_like(n, k, static_cast<std::int64_t>(c.r2)));
    }
    std::int64_t operator()(const ProductCode& c) const {
      return static_cast<std::int64_t>(c.c1.designed_distance * c.c2.designed_distance);
    }
    std::int64_t operator()(const ArbitraryLengthCode& c) const {
      return bounds::singleton_like(n, k, static_cast<std::int64_t>(c.params.r));
    }
    std::int64_t operator()(const CrtCode&) const { return n - k + 1; }
    std::int64_t operator()(const LocalMdsCode& c) const {
      return bounds::kamath_bound(n, k, static_cast<std::int64_t>(c.params.r),
                                  static_cast<std::int64_t>(c.rho));
    }
  };
  std::int64_t bound_d = std::visit(BoundVisitor{n, k}, spec.code);
  report["bound_d"] = bound_d;

  Matrix gen = spec.generator();
  report["rank_k"] = rank(gen) == spec.k();
  bool exhaustive = true;
  try {
    oracle::DistanceResult res = oracle::min_distance_exhaustive(gen, cap, threads);
    report["measured_d"] = res.distance;
    report["optimal"] = static_cast<std::int64_t>(res.distance) == bound_d;
  } catch (const std::invalid_argument&) {
    exhaustive = false;
    oracle::DistanceResult res = oracle::min_distance_sampled(gen, samples, seed);
    report["measured_d"] = nullptr;
    report["sampled_upper_d"] = res.distance;
    report["optimal"] = nullptr;
  }
  report["exhaustive"] = exhaustive;

  report["locality"] = spec.localities();
  auto sets = spec.recovering_sets();
  // multi-set codes certify the second recovering family too
  std::vector<std::vector<std::size_t>> sets_alt;
  if (const Lrc2Code* l2 = std::get_if<Lrc2Code>(&spec.code)) {
    json alt = json::array();
    for (std::size_t t = 0; t < l2->n; ++t) {
      sets_alt.push_back(recovering_set2(*l2, t, 1));
      alt.push_back(sets_alt.back().size());
    }
    report["locality_alt"] = alt;
  } else if (const ProductCode* pc = std::get_if<ProductCode>(&spec.code)) {
    json alt = json::array();
    for (std::size_t t = 0; t < pc->n; ++t) {
      sets_alt.push_back(product_recovering_set(*pc, t, 1));
      alt.push_back(sets_alt.back().size());
    }
    report["locality_alt"] = alt;
  }
  bool locality_ok = true;
  std::uint64_t q = spec.field().order();
  std::uint64_t space = 1;
  bool small = true;
  for (std::size_t i = 0; i < spec.k() && small; ++i) {
    space *= q;
    if (space > cap) small = false;
  }
  if (small) {
    report["locality_method"] = "exhaustive";
    for (const auto& check : oracle::verify_locality(gen, sets, cap))
      locality_ok = locality_ok && check.ok;
    if (!sets_alt.empty())
      for (const auto& check : oracle::verify_locality(gen, sets_alt, cap))
        locality_ok = locality_ok && check.ok;
  } else {
    report["locality_method"] = "sampled";
    auto fail = oracle::locality_roundtrip_sampled(
        gen,
        [&](const std::vector<std::optional<std::uint32_t>>& damaged, std::size_t pos) {
          PartialCodeword pc(spec.n());
          for (std::size_t t = 0; t < damaged.size(); ++t)
            if (damaged[t].has_value()) pc[t] = spec.field().element(*damaged[t]);
          return spec.repair(pc, pos, 0).value();
        },
        samples, seed);
    locality_ok = !fail.has_value();
  }
  report["locality_certified"] = locality_ok;

  if (const CrtCode* crt = std::get_if<CrtCode>(&spec.code)) {
    json mds = json::array();
    for (std::size_t b = 0; b < crt->blocks.size(); ++b)
      mds.push_back(oracle::verify_mds(gen, crt->block_positions[b], crt->blocks[b].k_i).ok);
    report["mds_blocks"] = mds;
  }
  if (const LocalMdsCode* lm = std::get_if<LocalMdsCode>(&spec.code)) {
    json mds = json::array();
    for (std::size_t b = 0; b < lm->block_positions.size(); ++b)
      mds.push_back(oracle::verify_mds(gen, lm->block_positions[b], lm->params.r).ok);
    report["mds_blocks"] = mds;
  }
  return report;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"locally recoverable codes by polynomial evaluation"};
  app.require_subcommand(1);

  auto* gen_cmd = app.add_subcommand("gen", "generate a code spec");
  std::size_t g_n = 0, g_k = 0, g_r = 0, g_s = 0, g_rho = 0;
  std::optional<std::uint64_t> g_q;
  std::string g_construction = "lrc";
  std::string g_blocks;
  std::string g_out;
  bool g_multi = false, g_systematic = false;
  std::uint64_t g_seed = 1;
  gen_cmd->add_option("--n", g_n, "code length");
  gen_cmd->add_option("--k", g_k, "dimension")->required();
  gen_cmd->add_option("--r", g_r, "locality");
  gen_cmd->add_option("--q", g_q, "field order (prime power; default: smallest usable)");
  gen_cmd->add_option("--s", g_s, "second locality for --multi");
  gen_cmd->add_option("--rho", g_rho, "local distance parameter for local_mds");
  gen_cmd->add_option("--construction", g_construction,
                      "lrc | lrc2 | product | arbitrary | crt | local_mds");
  gen_cmd->add_option("--blocks", g_blocks, "crt blocks as n1:k1,n2:k2,...");
  gen_cmd->add_flag("--multi", g_multi, "two recovering sets (same as --construction lrc2)");
  gen_cmd->add_flag("--systematic", g_systematic, "attach the systematic encoder");
  gen_cmd->add_option("--seed", g_seed, "seed for the good-polynomial search fallback");
  gen_cmd->add_option("--out", g_out, "write the spec here instead of stdout");

  auto* enc_cmd = app.add_subcommand("encode", "encode a message file");
  std::string e_spec, e_message, e_out;
  enc_cmd->add_option("--spec", e_spec, "code spec file")->required();
  enc_cmd->add_option("--message", e_message, "message file (k symbols)")->required();
  enc_cmd->add_option("--out", e_out, "write the codeword here instead of stdout");

  auto* rep_cmd = app.add_subcommand("repair", "repair one erased symbol locally");
  std::string r_spec, r_codeword;
  std::size_t r_position = 0;
  std::size_t r_via = 1;
  rep_cmd->add_option("--spec", r_spec)->required();
  rep_cmd->add_option("--codeword", r_codeword, "codeword file with ? marking erasures")
      ->required();
  rep_cmd->add_option("--position", r_position, "erased position to recover")->required();
  rep_cmd->add_option("--via", r_via, "recovering set selector (1 or 2) for multi-set codes");

  auto* dec_cmd = app.add_subcommand("decode", "recover the message from a codeword with erasures");
  std::string d_spec, d_codeword, d_out;
  dec_cmd->add_option("--spec", d_spec)->required();
  dec_cmd->add_option("--codeword", d_codeword)->required();
  dec_cmd->add_option("--out", d_out, "write the message here instead of stdout");

  auto* ver_cmd = app.add_subcommand("verify", "measure distance and certify localities");
  std::string v_spec;
  std::uint64_t v_cap = default_cap();
  unsigned v_threads = 1;
  std::uint64_t v_samples = 1000, v_seed = 1;
  ver_cmd->add_option("--spec", v_spec)->required();
  ver_cmd->add_option("--exhaustive-cap", v_cap, "largest message space enumerated exactly");
  ver_cmd->add_option("--threads", v_threads, "worker threads for the distance scan");
  ver_cmd->add_option("--samples", v_samples, "samples for the non-exhaustive fallbacks");
  ver_cmd->add_option("--seed", v_seed, "seed for the non-exhaustive fallbacks");

  auto* bnd_cmd = app.add_subcommand("bounds", "print the closed-form bound report");
  std::size_t b_n = 0, b_k = 0, b_r = 0;
  std::optional<std::int64_t> b_rho, b_t;
  bnd_cmd->add_option("--n", b_n)->required();
  bnd_cmd->add_option("--k", b_k)->required();
  bnd_cmd->add_option("--r", b_r)->required();
  bnd_cmd->add_option("--rho", b_rho, "include the (r, rho) bound");
  bnd_cmd->add_option("--t", b_t, "include the t-recovering-sets bounds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen_cmd->parsed()) {
      if (g_multi) g_construction = "lrc2";
      CodeSpec spec =
          generate(g_construction, g_n, g_k, g_r, g_q, g_s, g_rho, g_blocks, g_systematic, g_seed);
      emit(dump_spec(spec), g_out);
    } else if (enc_cmd->parsed()) {
      CodeSpec spec = load_spec_file(e_spec);
      std::ifstream in(e_message);
      if (!in) throw std::invalid_argument("cannot open message file: " + e_message);
      Message a = parse_message(in, spec.field(), spec.k());
      std::ostringstream out;
      write_codeword(out, spec, spec.encode(a));
      emit(out.str(), e_out);
    } else if (rep_cmd->parsed()) {
      CodeSpec spec = load_spec_file(r_spec);
      std::ifstream in(r_codeword);
      if (!in) throw std::invalid_argument("cannot open codeword file: " + r_codeword);
      PartialCodeword symbols = parse_partial_codeword(in, spec.field(), spec.n());
      if (r_position >= spec.n()) throw std::invalid_argument("--position out of range");
      if (r_via < 1 || r_via > 2) throw std::invalid_argument("--via must be 1 or 2");
      FieldElement value = spec.repair(symbols, r_position, r_via - 1);
      std::cout << value.value() << "\n";
    } else if (dec_cmd->parsed()) {
      CodeSpec spec = load_spec_file(d_spec);
      std::ifstream in(d_codeword);
      if (!in) throw std::invalid_argument("cannot open codeword file: " + d_codeword);
      PartialCodeword symbols = parse_partial_codeword(in, spec.field(), spec.n());
      std::vector<std::optional<std::uint32_t>> raw;
      for (const auto& s : symbols)
        raw.push_back(s.has_value() ? std::optional<std::uint32_t>(s->value()) : std::nullopt);
      auto decoded = oracle::erasure_decode_global(spec.generator(), raw);
      Message a;
      for (auto v : decoded) a.push_back(spec.field().element(v));
      std::ostringstream out;
      write_message(out, a);
      emit(out.str(), d_out);
    } else if (ver_cmd->parsed()) {
      CodeSpec spec = load_spec_file(v_spec);
      std::cout << verify_report(spec, v_cap, v_threads, v_samples, v_seed).dump(2) << "\n";
    } else if (bnd_cmd->parsed()) {
      bounds::BoundReport rep =
          bounds::make_report(static_cast<std::int64_t>(b_n), static_cast<std::int64_t>(b_k),
                              static_cast<std::int64_t>(b_r), b_rho, b_t);
      json out;
      out["rate_cap"] = rep.rate_cap.to_string();
      out["max_k"] = rep.max_k;
      out["singleton_like_d"] = rep.singleton_like_d;
      if (rep.kamath_d) out["kamath_d"] = *rep.kamath_d;
      if (rep.multi_lower_m) out["multi_lower_m"] = *rep.multi_lower_m;
      if (rep.mr_upper_d) out["mr_upper_d"] = *rep.mr_upper_d;
      if (rep.window) out["nonexistence_window"] = *rep.window;
      std::cout << out.dump(2) << "\n";
    }
  } catch (const decode_failure& e) {
    std::cerr << "decode failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
