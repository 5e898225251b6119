#include "lrc/field.hpp"

#include <algorithm>

namespace lrc {

namespace {

std::uint64_t checked_pow_u64(std::uint64_t base, std::uint32_t exp, std::uint64_t limit) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    if (r > limit / base) throw std::invalid_argument("field order overflows the supported range");
    r *= base;
  }
  return r;
}

// Multiplies two polynomials over F_p and reduces modulo a monic modulus.
// Plain schoolbook arithmetic; degrees stay tiny.
std::vector<std::uint32_t> polymod_mul(const std::vector<std::uint32_t>& a,
                                       const std::vector<std::uint32_t>& b,
                                       const std::vector<std::uint32_t>& modulus,
                                       std::uint32_t p) {
  std::vector<std::uint64_t> prod(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] += static_cast<std::uint64_t>(a[i]) * b[j];
  }
  for (auto& c : prod) c %= p;
  std::size_t deg_mod = modulus.size() - 1;
  for (std::size_t i = prod.size(); i-- > deg_mod;) {
    std::uint64_t c = prod[i] % p;
    if (c == 0) continue;
    // subtract c * x^(i-deg_mod) * modulus
    for (std::size_t j = 0; j < modulus.size(); ++j) {
      std::uint64_t sub = (c * modulus[j]) % p;
      std::uint64_t& slot = prod[i - deg_mod + j];
      slot = (slot + p - sub) % p;
    }
  }
  prod.resize(deg_mod);
  return std::vector<std::uint32_t>(prod.begin(), prod.end());
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
  std::size_t deg = poly.size() - 1;
  if (deg == 0) return false;
  if (deg == 1) return true;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::vector<std::uint32_t> divisor(d + 1, 0);
      std::uint64_t t = idx;
      for (std::size_t i = 0; i < d; ++i) {
        divisor[i] = static_cast<std::uint32_t>(t % p);
        t /= p;
      }
      divisor[d] = 1;
      // long-divide poly by divisor, look at the remainder
      std::vector<std::uint32_t> rem(poly);
      while (rem.size() >= divisor.size()) {
        std::uint32_t lead = rem.back();
        if (lead != 0) {
          std::size_t shift = rem.size() - divisor.size();
          for (std::size_t j = 0; j < divisor.size(); ++j) {
            std::uint64_t sub = static_cast<std::uint64_t>(lead) * divisor[j] % p;
            std::uint32_t& slot = rem[shift + j];
            slot = static_cast<std::uint32_t>((slot + p - sub) % p);
          }
        }
        rem.pop_back();
      }
      bool zero = std::all_of(rem.begin(), rem.end(), [](std::uint32_t c) { return c == 0; });
      if (zero) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t l) {
  if (l < 2) throw std::invalid_argument("default_modulus needs degree >= 2");
  std::uint64_t span = checked_pow_u64(p, l, Field::kDefaultEnumerationCap << 4);
  for (std::uint64_t low = 0; low < span; ++low) {
    std::vector<std::uint32_t> cand(l + 1, 0);
    std::uint64_t t = low;
    for (std::uint32_t i = 0; i < l; ++i) {
      cand[i] = static_cast<std::uint32_t>(t % p);
      t /= p;
    }
    cand[l] = 1;
    if (is_irreducible_mod_p(cand, p)) return cand;
  }
  throw std::logic_error("no irreducible polynomial found");  // unreachable
}

Field::Field(std::uint32_t p, std::uint32_t l, std::vector<std::uint32_t> modulus)
    : p_(p), l_(l), modulus_(std::move(modulus)) {
  if (!is_prime(p_)) throw std::invalid_argument("field characteristic must be prime");
  if (l_ < 1 || l_ > 20) throw std::invalid_argument("extension degree must be in 1..20");
  q_ = checked_pow_u64(p_, l_, kDefaultEnumerationCap << 4);
  if (l_ == 1) {
    modulus_.clear();
  } else {
    if (modulus_.size() != l_ + 1) throw std::invalid_argument("modulus must have degree l");
    for (auto& c : modulus_)
      if (c >= p_) throw std::invalid_argument("modulus coefficients must be reduced mod p");
    if (modulus_.back() != 1) throw std::invalid_argument("modulus must be monic");
    if (!is_irreducible_mod_p(modulus_, p_)) throw std::invalid_argument("modulus is reducible");
    // precompute x^(l+i) mod modulus for the multiply fold
    std::vector<std::uint32_t> x(l_, 0);
    std::vector<std::uint32_t> xl(l_, 0);
    for (std::uint32_t i = 0; i < l_; ++i) xl[i] = (p_ - modulus_[i]) % p_;  // x^l = -low part
    reduction_.push_back(xl);
    x.assign(l_, 0);
    x[1] = 1;
    for (std::uint32_t i = 1; i + 1 < l_; ++i)
      reduction_.push_back(polymod_mul(reduction_.back(), x, modulus_, p_));
  }
}

std::shared_ptr<const Field> Field::make_prime(std::uint32_t p) {
  return std::shared_ptr<const Field>(new Field(p, 1, {}));
}

std::shared_ptr<const Field> Field::make_extension(std::uint32_t p, std::uint32_t l) {
  if (l == 1) return make_prime(p);
  return std::shared_ptr<const Field>(new Field(p, l, default_modulus(p, l)));
}

std::shared_ptr<const Field> Field::make_extension(std::uint32_t p, std::uint32_t l,
                                                   std::vector<std::uint32_t> modulus) {
  if (l == 1) return make_prime(p);
  return std::shared_ptr<const Field>(new Field(p, l, std::move(modulus)));
}

bool Field::same_field(const Field& other) const {
  if (this == &other) return true;
  return p_ == other.p_ && l_ == other.l_ && modulus_ == other.modulus_;
}

void Field::check_element(FieldElement a) const {
  if (a.field_ == nullptr) throw std::invalid_argument("uninitialized field element");
  if (a.field_ != this && !same_field(*a.field_)) throw std::invalid_argument("field mismatch");
}

FieldElement Field::element(std::uint64_t canonical) const {
  if (canonical >= q_) throw std::invalid_argument("canonical value out of range");
  return FieldElement(this, static_cast<std::uint32_t>(canonical));
}

FieldElement Field::from_coeffs(const std::vector<std::uint32_t>& coeffs) const {
  if (coeffs.size() > l_) throw std::invalid_argument("too many coordinates");
  std::uint64_t v = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= p_) throw std::invalid_argument("coordinate not reduced mod p");
    v = v * p_ + coeffs[i];
  }
  return FieldElement(this, static_cast<std::uint32_t>(v));
}

std::vector<std::uint32_t> Field::coeffs(FieldElement a) const {
  check_element(a);
  std::vector<std::uint32_t> out(l_);
  std::uint32_t v = a.value_;
  for (std::uint32_t i = 0; i < l_; ++i) {
    out[i] = v % p_;
    v /= p_;
  }
  return out;
}

void Field::unpack(std::uint32_t v, std::uint32_t* digits) const {
  for (std::uint32_t i = 0; i < l_; ++i) {
    digits[i] = v % p_;
    v /= p_;
  }
}

std::uint32_t Field::pack(const std::uint32_t* digits) const {
  std::uint32_t v = 0;
  for (std::uint32_t i = l_; i-- > 0;) v = v * p_ + digits[i];
  return v;
}

std::uint32_t Field::add_v(std::uint32_t a, std::uint32_t b) const {
  if (l_ == 1) {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  if (p_ == 2) return a ^ b;
  std::uint32_t da[20], db[20];
  unpack(a, da);
  unpack(b, db);
  for (std::uint32_t i = 0; i < l_; ++i) {
    da[i] += db[i];
    if (da[i] >= p_) da[i] -= p_;
  }
  return pack(da);
}

std::uint32_t Field::neg_v(std::uint32_t a) const {
  if (l_ == 1) return a == 0 ? 0 : p_ - a;
  if (p_ == 2) return a;
  std::uint32_t da[20];
  unpack(a, da);
  for (std::uint32_t i = 0; i < l_; ++i) da[i] = da[i] == 0 ? 0 : p_ - da[i];
  return pack(da);
}

std::uint32_t Field::sub_v(std::uint32_t a, std::uint32_t b) const { return add_v(a, neg_v(b)); }

std::uint32_t Field::mul_v(std::uint32_t a, std::uint32_t b) const {
  if (l_ == 1) return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  std::uint32_t da[20], db[20];
  unpack(a, da);
  unpack(b, db);
  std::uint64_t prod[39] = {0};
  for (std::uint32_t i = 0; i < l_; ++i) {
    if (da[i] == 0) continue;
    for (std::uint32_t j = 0; j < l_; ++j) prod[i + j] += static_cast<std::uint64_t>(da[i]) * db[j];
  }
  std::uint32_t out[20];
  for (std::uint32_t i = 0; i < l_; ++i) out[i] = static_cast<std::uint32_t>(prod[i] % p_);
  for (std::uint32_t i = 0; i + 1 < l_; ++i) {
    std::uint32_t c = static_cast<std::uint32_t>(prod[l_ + i] % p_);
    if (c == 0) continue;
    const auto& red = reduction_[i];
    for (std::uint32_t j = 0; j < l_; ++j)
      out[j] = static_cast<std::uint32_t>((out[j] + static_cast<std::uint64_t>(c) * red[j]) % p_);
  }
  return pack(out);
}

std::uint32_t Field::pow_v(std::uint32_t a, std::uint64_t e) const {
  // 0^0 = 1 by convention so constant terms evaluate uniformly at x = 0.
  std::uint32_t result = 1;
  std::uint32_t base = a;
  while (e != 0) {
    if (e & 1) result = mul_v(result, base);
    base = mul_v(base, base);
    e >>= 1;
  }
  return result;
}

std::uint32_t Field::inv_v(std::uint32_t a) const {
  if (a == 0) throw std::domain_error("division by zero in field");
  return pow_v(a, q_ - 2);
}

FieldElement Field::add(FieldElement a, FieldElement b) const {
  check_element(a);
  check_element(b);
  return FieldElement(this, add_v(a.value_, b.value_));
}

FieldElement Field::sub(FieldElement a, FieldElement b) const {
  check_element(a);
  check_element(b);
  return FieldElement(this, sub_v(a.value_, b.value_));
}

FieldElement Field::neg(FieldElement a) const {
  check_element(a);
  return FieldElement(this, neg_v(a.value_));
}

FieldElement Field::mul(FieldElement a, FieldElement b) const {
  check_element(a);
  check_element(b);
  return FieldElement(this, mul_v(a.value_, b.value_));
}

FieldElement Field::inv(FieldElement a) const {
  check_element(a);
  return FieldElement(this, inv_v(a.value_));
}

FieldElement Field::pow(FieldElement a, std::uint64_t e) const {
  check_element(a);
  return FieldElement(this, pow_v(a.value_, e));
}

std::uint64_t Field::multiplicative_order(FieldElement a) const {
  check_element(a);
  if (a.is_zero()) throw std::domain_error("multiplicative order of zero");
  std::uint64_t group = q_ - 1;
  // smallest divisor e of q-1 with a^e = 1
  std::vector<std::uint64_t> divisors;
  for (std::uint64_t d = 1; d * d <= group; ++d) {
    if (group % d != 0) continue;
    divisors.push_back(d);
    if (d != group / d) divisors.push_back(group / d);
  }
  std::sort(divisors.begin(), divisors.end());
  for (std::uint64_t d : divisors)
    if (pow_v(a.value_, d) == 1) return d;
  throw std::logic_error("element order not found");  // unreachable: Lagrange
}

std::vector<FieldElement> Field::enumerate_elements(std::uint64_t cap) const {
  if (q_ > cap) throw std::invalid_argument("field order exceeds enumeration cap");
  std::vector<FieldElement> out;
  out.reserve(q_);
  for (std::uint64_t v = 0; v < q_; ++v) out.push_back(FieldElement(this, static_cast<std::uint32_t>(v)));
  return out;
}

std::string Field::describe() const {
  if (l_ == 1) return "F_" + std::to_string(p_);
  return "F_" + std::to_string(p_) + "^" + std::to_string(l_);
}

FieldElement FieldElement::operator+(FieldElement rhs) const { return field_->add(*this, rhs); }
FieldElement FieldElement::operator-(FieldElement rhs) const { return field_->sub(*this, rhs); }
FieldElement FieldElement::operator*(FieldElement rhs) const { return field_->mul(*this, rhs); }
FieldElement FieldElement::operator/(FieldElement rhs) const {
  return field_->mul(*this, field_->inv(rhs));
}
FieldElement FieldElement::operator-() const { return field_->neg(*this); }

}  // namespace lrc
