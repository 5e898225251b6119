#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include <json.hpp>

#include "lrc/general.hpp"
#include "lrc/multiset.hpp"

namespace lrc {

// A loaded code-spec file: one of the supported constructions, version 1.
// Round-trips losslessly through to_json/from_json.
struct CodeSpec {
  std::variant<LrcCode, Lrc2Code, ProductCode, ArbitraryLengthCode, CrtCode, LocalMdsCode> code;

  const Field& field() const;
  std::shared_ptr<const Field> field_ptr() const;
  std::size_t n() const;
  std::size_t k() const;
  std::string construction() const;
  std::size_t designed_distance() const;

  Codeword encode(const Message& a) const;
  // via: partition (lrc2) or axis (product) selector, 0-based; ignored
  // elsewhere. For CRT codes repair is block interpolation through k_i
  // survivors.
  FieldElement repair(const PartialCodeword& symbols, std::size_t position, std::size_t via) const;
  Matrix generator() const;
  // declared per-position recovering sets (primary partition / axis 0)
  std::vector<std::vector<std::size_t>> recovering_sets() const;
  std::vector<std::size_t> localities() const;
};

nlohmann::json field_to_json(const Field& f);
std::shared_ptr<const Field> field_from_json(const nlohmann::json& j);

nlohmann::json code_to_json(const CodeSpec& spec);
CodeSpec code_from_json(const nlohmann::json& j);

// Serialized with sorted keys and 2-space indent: byte-stable for a given
// spec.
std::string dump_spec(const CodeSpec& spec);
CodeSpec parse_spec(const std::string& text);
CodeSpec load_spec_file(const std::string& path);

// --- text formats -----------------------------------------------------------

// message: whitespace-separated canonical integers
Message parse_message(std::istream& in, const Field& f, std::size_t k);
// codeword: canonical integers with "?" marking erasures, any whitespace
PartialCodeword parse_partial_codeword(std::istream& in, const Field& f, std::size_t n);
// one symbol per line; product codes write a grid of n1 lines x n2 columns
void write_codeword(std::ostream& out, const CodeSpec& spec, const Codeword& cw);
void write_message(std::ostream& out, const Message& a);

}  // namespace lrc
