#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "lrc/errors.hpp"
#include "lrc/field.hpp"
#include "lrc/linalg.hpp"

namespace lrc {
namespace oracle {

inline constexpr std::uint64_t kDefaultMessageCap = 1ull << 25;

// Exhaustive minimum distance of the linear code spanned by the rows of
// `gen`: minimum Hamming weight over all q^k - 1 nonzero messages,
// enumerated in canonical integer order. Codewords are maintained
// incrementally, so the cost per message is O(n). Throws when q^k exceeds
// the cap. Workers split the message range; the reduction is an
// associative min, so the result does not depend on scheduling.
struct DistanceResult {
  std::size_t distance = 0;
  std::uint64_t witness_index = 0;  // message index achieving it
};
DistanceResult min_distance_exhaustive(const Matrix& gen, std::uint64_t cap = kDefaultMessageCap,
                                       unsigned threads = 1);

// Seeded random-message scan; reports an upper bound only.
DistanceResult min_distance_sampled(const Matrix& gen, std::uint64_t samples, std::uint64_t seed);

// Message vector encoded by index idx (digits base q, coordinate 0
// fastest).
std::vector<std::uint32_t> message_from_index(const Matrix& gen, std::uint64_t idx);

// Checks, by exhaustive projection tables over all q^k codewords, that the
// symbol at `position` is a function of the symbols in `recovering_set`:
// no two codewords may agree on the set and differ at the position. On
// failure the two message indices witnessing it are returned.
struct LocalityCheck {
  std::size_t position = 0;
  std::vector<std::size_t> recovering_set;
  bool ok = false;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> witness;
};
std::vector<LocalityCheck> verify_locality(const Matrix& gen,
                                           const std::vector<std::vector<std::size_t>>& sets,
                                           std::uint64_t cap = kDefaultMessageCap);

// Sampled fallback: encode seeded random messages, erase each position,
// run the caller's repair and compare. Returns the first failing
// (position, message) or nullopt if all round-trips match.
using RepairFn = std::function<std::uint32_t(const std::vector<std::optional<std::uint32_t>>&,
                                             std::size_t)>;
std::optional<std::pair<std::size_t, std::vector<std::uint32_t>>> locality_roundtrip_sampled(
    const Matrix& gen, const RepairFn& repair, std::uint64_t samples, std::uint64_t seed);

// The code restricted to `block_positions` is MDS of dimension k_i iff
// every k_i-subset of its columns has rank k_i. Returns the first failing
// column subset as witness.
struct MdsCheck {
  bool ok = false;
  std::size_t dimension = 0;
  std::optional<std::vector<std::size_t>> witness;
};
MdsCheck verify_mds(const Matrix& gen, const std::vector<std::size_t>& block_positions,
                    std::size_t k_i);

// Recovers the unique message whose codeword matches the surviving
// symbols; requires the surviving columns to have rank k. The repaired
// full codeword is solution * gen.
std::vector<std::uint32_t> erasure_decode_global(
    const Matrix& gen, const std::vector<std::optional<std::uint32_t>>& symbols);

// All minimal recovering sets for a position, up to max_size, decided by
// the same exhaustive projection-table test as verify_locality. Small n
// only.
std::vector<std::vector<std::size_t>> search_recovering_sets(const Matrix& gen,
                                                             std::size_t position,
                                                             std::size_t max_size,
                                                             std::uint64_t cap = kDefaultMessageCap);

}  // namespace oracle
}  // namespace lrc
