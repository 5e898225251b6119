#include "lrc/bounds.hpp"

#include <stdexcept>

namespace lrc {

namespace {
std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }
}  // namespace

namespace bounds {

std::int64_t rate_bound(std::int64_t n, std::int64_t r) {
  if (n < 1 || r < 1) throw std::invalid_argument("need n, r >= 1");
  return n * r / (r + 1);
}

std::int64_t singleton_like(std::int64_t n, std::int64_t k, std::int64_t r) {
  if (!(1 <= r && r <= k && k <= n)) throw std::invalid_argument("need 1 <= r <= k <= n");
  return n - k - ceil_div(k, r) + 2;
}

std::int64_t kamath_bound(std::int64_t n, std::int64_t k, std::int64_t r, std::int64_t rho) {
  if (rho < 2) throw std::invalid_argument("need rho >= 2");
  if (!(1 <= r && r <= k && k <= n)) throw std::invalid_argument("need 1 <= r <= k <= n");
  return n - k + 1 - (ceil_div(k, r) - 1) * (rho - 1);
}

bool nonexistence_window(std::int64_t n, std::int64_t k, std::int64_t r) {
  if (r < 1 || k % r != 0) throw std::invalid_argument("window requires r | k");
  std::int64_t gap = n - k * (r + 1) / r;
  return gap > 0 && gap < r + 1;
}

std::int64_t mr_upper(std::int64_t n, std::int64_t k, std::int64_t r) {
  if (!(1 <= r && k >= 1 && k <= n)) throw std::invalid_argument("need 1 <= k <= n, r >= 1");
  return n - k - (k - 1) / r - (k - 1) / (r * r) + 1;
}

Rational turan_dag_bound(const std::vector<std::int64_t>& out_degrees) {
  if (out_degrees.empty()) throw std::invalid_argument("need at least one vertex");
  std::int64_t n = static_cast<std::int64_t>(out_degrees.size());
  std::int64_t total = 0;
  for (auto d : out_degrees) {
    if (d < 0) throw std::invalid_argument("out-degrees must be nonnegative");
    total += d;
  }
  return Rational(n * n, n + total);
}

BoundReport make_report(std::int64_t n, std::int64_t k, std::int64_t r,
                        std::optional<std::int64_t> rho, std::optional<std::int64_t> t) {
  BoundReport rep;
  rep.rate_cap = Rational(r, r + 1);
  rep.max_k = rate_bound(n, r);
  rep.singleton_like_d = singleton_like(n, k, r);
  if (rho.has_value()) rep.kamath_d = kamath_bound(n, k, r, *rho);
  if (t.has_value()) {
    rep.multi_lower_m = smallest_m_for_t(*t);
    if (*t == 2) rep.mr_upper_d = mr_upper(n, k, r);
  }
  if (k % r == 0) rep.window = nonexistence_window(n, k, r);
  return rep;
}

}  // namespace bounds

std::int64_t smallest_m_for_t(std::int64_t t) {
  if (t < 1) throw std::invalid_argument("need t >= 1");
  for (std::int64_t m = 1;; ++m) {
    std::int64_t f = (m % 2 == 0) ? m / 2 : (m + 3) / 2;
    if (t * f <= m * (m - 1) / 2) return m;
  }
}

}  // namespace lrc
