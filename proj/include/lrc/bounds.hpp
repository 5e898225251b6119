#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lrc/rational.hpp"

namespace lrc {
namespace bounds {

// Largest dimension an (n, *, r) LRC code can have: floor(nr/(r+1)).
std::int64_t rate_bound(std::int64_t n, std::int64_t r);

// Singleton-like distance cap d <= n - k - ceil(k/r) + 2.
std::int64_t singleton_like(std::int64_t n, std::int64_t k, std::int64_t r);

// d <= n - k + 1 - (ceil(k/r) - 1)(rho - 1); equals singleton_like at
// rho = 2.
std::int64_t kamath_bound(std::int64_t n, std::int64_t k, std::int64_t r, std::int64_t rho);

// True iff 0 < n - k(r+1)/r < r+1, the window where no code meets
// singleton_like with equality. Requires r | k.
bool nonexistence_window(std::int64_t n, std::int64_t k, std::int64_t r);

// Distance cap for two equal-size recovering sets:
// d <= n - k - floor((k-1)/r) - floor((k-1)/r^2) + 1.
std::int64_t mr_upper(std::int64_t n, std::int64_t k, std::int64_t r);

// Every digraph has an induced DAG on at least n / (1 + avg out-degree)
// vertices; returned exactly as n^2 / (n + sum of out-degrees).
Rational turan_dag_bound(const std::vector<std::int64_t>& out_degrees);

struct BoundReport {
  Rational rate_cap;                       // r/(r+1)
  std::int64_t max_k = 0;                  // floor(nr/(r+1))
  std::int64_t singleton_like_d = 0;
  std::optional<std::int64_t> kamath_d;    // when rho given
  std::optional<std::int64_t> multi_lower_m;  // distance floor from t orthogonal recovering partitions
  std::optional<std::int64_t> mr_upper_d;  // when t = 2
  std::optional<bool> window;              // when r | k
  std::optional<bool> optimal;             // filled by verify against measured d
};

BoundReport make_report(std::int64_t n, std::int64_t k, std::int64_t r,
                        std::optional<std::int64_t> rho, std::optional<std::int64_t> t);

}  // namespace bounds

// Smallest positive m with t*f(m) <= C(m,2), f(m) = m/2 for even m and
// (m+3)/2 for odd m; the distance of a code with t mutually orthogonal
// recovering partitions is at least this m. Lives here so the bound report
// can include it.
std::int64_t smallest_m_for_t(std::int64_t t);

}  // namespace lrc
