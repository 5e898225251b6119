#include "lrc/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace lrc {
namespace oracle {

namespace {

std::uint64_t message_count(const Matrix& gen, std::uint64_t cap) {
  std::uint64_t q = gen.field->order();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < gen.rows; ++i) {
    if (total > cap / q + 1) throw std::invalid_argument("message space exceeds the exhaustive cap");
    total *= q;
    if (total > cap) throw std::invalid_argument("message space exceeds the exhaustive cap");
  }
  return total;
}

// Incremental walk over all messages in index order. digits are base q,
// digit 0 fastest; partial[i] holds sum_{j >= i} scaled row j, so
// partial[0] is the current codeword.
class CodewordWalker {
 public:
  CodewordWalker(const Matrix& gen, std::uint64_t start)
      : field_(gen.field), k_(gen.rows), n_(gen.cols), q_(gen.field->order()) {
    scaled_.assign(k_ * q_ * n_, 0);
    for (std::size_t j = 0; j < k_; ++j)
      for (std::uint64_t c = 1; c < q_; ++c)
        for (std::size_t t = 0; t < n_; ++t)
          scaled_[(j * q_ + c) * n_ + t] =
              field_->mul_v(static_cast<std::uint32_t>(c), gen.at(j, t));
    digits_.assign(k_, 0);
    partial_.assign((k_ + 1) * n_, 0);
    std::uint64_t idx = start;
    for (std::size_t j = 0; j < k_; ++j) {
      digits_[j] = static_cast<std::uint32_t>(idx % q_);
      idx /= q_;
    }
    for (std::size_t j = k_; j-- > 0;) recompute(j);
  }

  const std::uint32_t* codeword() const { return partial_.data(); }

  void advance() {
    std::size_t d = 0;
    while (d < k_ && digits_[d] == q_ - 1) {
      digits_[d] = 0;
      ++d;
    }
    if (d == k_) return;  // wrapped; callers bound their loops
    ++digits_[d];
    for (std::size_t j = d + 1; j-- > 0;) recompute(j);
  }

  std::size_t weight() const {
    std::size_t w = 0;
    for (std::size_t t = 0; t < n_; ++t) w += partial_[t] != 0;
    return w;
  }

 private:
  void recompute(std::size_t j) {
    const std::uint32_t* above = partial_.data() + (j + 1) * n_;
    std::uint32_t* here = partial_.data() + j * n_;
    if (digits_[j] == 0) {
      std::copy(above, above + n_, here);
      return;
    }
    const std::uint32_t* row = scaled_.data() + (j * q_ + digits_[j]) * n_;
    for (std::size_t t = 0; t < n_; ++t) here[t] = field_->add_v(above[t], row[t]);
  }

  const Field* field_;
  std::size_t k_, n_;
  std::uint64_t q_;
  std::vector<std::uint32_t> scaled_;
  std::vector<std::uint32_t> digits_;
  std::vector<std::uint32_t> partial_;
};

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  std::size_t k = idx.size();
  std::size_t i = k;
  while (i-- > 0) {
    if (idx[i] < n - (k - i)) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// One projection-table pass: does the symbol set `set` determine the
// symbol at `position` across all codewords? On failure returns the two
// clashing message indices.
std::optional<std::pair<std::uint64_t, std::uint64_t>> determination_witness(
    const Matrix& gen, const std::vector<std::size_t>& set, std::size_t position,
    std::uint64_t cap) {
  std::uint64_t total = message_count(gen, cap);
  std::uint64_t q = gen.field->order();
  std::uint64_t slots = 1;
  for (std::size_t j = 0; j < set.size(); ++j) {
    if (slots > (1ull << 28) / q) throw std::invalid_argument("projection table too large");
    slots *= q;
  }
  constexpr std::uint64_t kEmpty = ~0ull;
  std::vector<std::uint64_t> first_seen(slots, kEmpty);
  std::vector<std::uint32_t> first_value(slots, 0);
  CodewordWalker walker(gen, 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    const std::uint32_t* cw = walker.codeword();
    std::uint64_t key = 0;
    for (std::size_t p : set) key = key * q + cw[p];
    if (first_seen[key] == kEmpty) {
      first_seen[key] = idx;
      first_value[key] = cw[position];
    } else if (first_value[key] != cw[position]) {
      return {{first_seen[key], idx}};
    }
    walker.advance();
  }
  return std::nullopt;
}

}  // namespace

std::vector<std::uint32_t> message_from_index(const Matrix& gen, std::uint64_t idx) {
  std::uint64_t q = gen.field->order();
  std::vector<std::uint32_t> out(gen.rows);
  for (std::size_t j = 0; j < gen.rows; ++j) {
    out[j] = static_cast<std::uint32_t>(idx % q);
    idx /= q;
  }
  return out;
}

DistanceResult min_distance_exhaustive(const Matrix& gen, std::uint64_t cap, unsigned threads) {
  std::uint64_t total = message_count(gen, cap);
  if (threads == 0) threads = 1;
  std::uint64_t span = total - 1;  // nonzero messages
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(span, 1)));
  std::vector<DistanceResult> best(threads, DistanceResult{gen.cols + 1, 0});
  auto worker = [&](unsigned id) {
    std::uint64_t begin = 1 + span * id / threads;
    std::uint64_t end = 1 + span * (id + 1) / threads;
    if (begin >= end) return;
    CodewordWalker walker(gen, begin);
    DistanceResult local{gen.cols + 1, 0};
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      std::size_t w = walker.weight();
      if (w < local.distance) {
        local.distance = w;
        local.witness_index = idx;
      }
      walker.advance();
    }
    best[id] = local;
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& t : pool) t.join();
  }
  DistanceResult result{gen.cols + 1, 0};
  for (const auto& b : best)
    if (b.distance < result.distance ||
        (b.distance == result.distance && b.witness_index < result.witness_index))
      result = b;
  return result;
}

DistanceResult min_distance_sampled(const Matrix& gen, std::uint64_t samples, std::uint64_t seed) {
  const Field& f = *gen.field;
  std::uint64_t q = f.order();
  DistanceResult result{gen.cols + 1, 0};
  std::uint64_t state = seed ? seed : 1;
  auto next = [&state]() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  };
  std::vector<std::uint32_t> message(gen.rows);
  for (std::uint64_t s = 0; s < samples; ++s) {
    bool zero = true;
    for (auto& m : message) {
      m = static_cast<std::uint32_t>(next() % q);
      zero = zero && m == 0;
    }
    if (zero) continue;
    std::size_t w = 0;
    for (std::size_t t = 0; t < gen.cols; ++t) {
      std::uint32_t acc = 0;
      for (std::size_t j = 0; j < gen.rows; ++j)
        acc = f.add_v(acc, f.mul_v(message[j], gen.at(j, t)));
      w += acc != 0;
    }
    if (w < result.distance) result.distance = w;
  }
  return result;
}

std::vector<LocalityCheck> verify_locality(const Matrix& gen,
                                           const std::vector<std::vector<std::size_t>>& sets,
                                           std::uint64_t cap) {
  if (sets.size() != gen.cols)
    throw std::invalid_argument("verify_locality expects one recovering set per position");
  std::vector<LocalityCheck> checks(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    checks[i].position = i;
    checks[i].recovering_set = sets[i];
    checks[i].witness = determination_witness(gen, sets[i], i, cap);
    checks[i].ok = !checks[i].witness.has_value();
  }
  return checks;
}

std::optional<std::pair<std::size_t, std::vector<std::uint32_t>>> locality_roundtrip_sampled(
    const Matrix& gen, const RepairFn& repair, std::uint64_t samples, std::uint64_t seed) {
  const Field& f = *gen.field;
  std::uint64_t q = f.order();
  std::uint64_t state = seed ? seed : 1;
  auto next = [&state]() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  };
  std::vector<std::uint32_t> message(gen.rows);
  for (std::uint64_t s = 0; s < samples; ++s) {
    for (auto& m : message) m = static_cast<std::uint32_t>(next() % q);
    std::vector<std::uint32_t> cw(gen.cols, 0);
    for (std::size_t t = 0; t < gen.cols; ++t)
      for (std::size_t j = 0; j < gen.rows; ++j)
        cw[t] = f.add_v(cw[t], f.mul_v(message[j], gen.at(j, t)));
    for (std::size_t pos = 0; pos < gen.cols; ++pos) {
      std::vector<std::optional<std::uint32_t>> damaged(cw.begin(), cw.end());
      damaged[pos] = std::nullopt;
      if (repair(damaged, pos) != cw[pos]) return {{pos, message}};
    }
  }
  return std::nullopt;
}

MdsCheck verify_mds(const Matrix& gen, const std::vector<std::size_t>& block_positions,
                    std::size_t k_i) {
  MdsCheck check;
  Matrix sub(*gen.field, gen.rows, block_positions.size());
  for (std::size_t r = 0; r < gen.rows; ++r)
    for (std::size_t c = 0; c < block_positions.size(); ++c)
      sub.at(r, c) = gen.at(r, block_positions[c]);
  Matrix echelon = sub;
  std::size_t dim = rref(echelon);
  check.dimension = dim;
  if (dim != k_i || k_i > block_positions.size()) return check;
  std::vector<std::size_t> idx(k_i);
  for (std::size_t i = 0; i < k_i; ++i) idx[i] = i;
  do {
    Matrix cols(*gen.field, dim, k_i);
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < k_i; ++c) cols.at(r, c) = echelon.at(r, idx[c]);
    if (rank(cols) != k_i) {
      std::vector<std::size_t> witness;
      for (auto c : idx) witness.push_back(block_positions[c]);
      check.witness = witness;
      return check;
    }
  } while (next_combination(idx, block_positions.size()));
  check.ok = true;
  return check;
}

std::vector<std::uint32_t> erasure_decode_global(
    const Matrix& gen, const std::vector<std::optional<std::uint32_t>>& symbols) {
  if (symbols.size() != gen.cols) throw std::invalid_argument("codeword length mismatch");
  const Field& f = *gen.field;
  std::vector<std::size_t> alive;
  for (std::size_t t = 0; t < symbols.size(); ++t)
    if (symbols[t].has_value()) alive.push_back(t);
  Matrix sub(f, gen.rows, alive.size());
  std::vector<std::uint32_t> target(alive.size());
  for (std::size_t c = 0; c < alive.size(); ++c) {
    for (std::size_t r = 0; r < gen.rows; ++r) sub.at(r, c) = gen.at(r, alive[c]);
    target[c] = *symbols[alive[c]];
  }
  if (rank(sub) != gen.rows)
    throw decode_failure("surviving positions do not determine the message (rank < k)");
  auto solution = solve_left(sub, target);
  if (!solution.has_value())
    throw decode_failure("surviving symbols are inconsistent with the code");
  return *solution;
}

std::vector<std::vector<std::size_t>> search_recovering_sets(const Matrix& gen,
                                                             std::size_t position,
                                                             std::size_t max_size,
                                                             std::uint64_t cap) {
  if (gen.cols > 16) throw std::invalid_argument("search_recovering_sets is capped at n <= 16");
  if (position >= gen.cols) throw std::invalid_argument("position out of range");
  std::vector<std::vector<std::size_t>> minimal;
  std::vector<std::size_t> others;
  for (std::size_t t = 0; t < gen.cols; ++t)
    if (t != position) others.push_back(t);
  max_size = std::min(max_size, others.size());
  // ascending size, so minimality is a superset filter against accepted
  // sets
  for (std::size_t size = 1; size <= max_size; ++size) {
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    do {
      std::vector<std::size_t> candidate;
      for (auto i : idx) candidate.push_back(others[i]);
      bool superset = false;
      for (const auto& m : minimal)
        if (std::includes(candidate.begin(), candidate.end(), m.begin(), m.end())) {
          superset = true;
          break;
        }
      if (!superset && !determination_witness(gen, candidate, position, cap).has_value())
        minimal.push_back(candidate);
    } while (next_combination(idx, others.size()));
  }
  return minimal;
}

}  // namespace oracle
}  // namespace lrc
