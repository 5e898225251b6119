#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace lrc {

class Field;

// One element of a finite field, stored as its canonical integer
// sum(coeffs[i] * p^i) over the polynomial-basis coordinates.
// Elements keep a pointer to their field; mixing fields is an error.
class FieldElement {
 public:
  FieldElement() = default;

  std::uint32_t value() const { return value_; }
  const Field& field() const { return *field_; }

  FieldElement operator+(FieldElement rhs) const;
  FieldElement operator-(FieldElement rhs) const;
  FieldElement operator*(FieldElement rhs) const;
  FieldElement operator/(FieldElement rhs) const;
  FieldElement operator-() const;

  bool operator==(FieldElement rhs) const { return value_ == rhs.value_; }
  bool operator!=(FieldElement rhs) const { return value_ != rhs.value_; }
  bool is_zero() const { return value_ == 0; }
  bool is_one() const { return value_ == 1; }

 private:
  friend class Field;
  FieldElement(const Field* f, std::uint32_t v) : field_(f), value_(v) {}

  const Field* field_ = nullptr;
  std::uint32_t value_ = 0;
};

// The field F_{p^l}: p prime, modulus a monic irreducible of degree l over
// F_p (implicit for l = 1). Immutable after construction; all operations are
// pure, so instances can be shared freely across threads.
class Field {
 public:
  static constexpr std::uint64_t kDefaultEnumerationCap = 1u << 20;

  static std::shared_ptr<const Field> make_prime(std::uint32_t p);
  static std::shared_ptr<const Field> make_extension(std::uint32_t p, std::uint32_t l);
  static std::shared_ptr<const Field> make_extension(std::uint32_t p, std::uint32_t l,
                                                     std::vector<std::uint32_t> modulus);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return l_; }
  std::uint64_t order() const { return q_; }
  // Monic modulus, low-to-high coefficients; empty for prime fields.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  FieldElement zero() const { return FieldElement(this, 0); }
  FieldElement one() const { return FieldElement(this, 1); }
  FieldElement element(std::uint64_t canonical) const;
  FieldElement from_coeffs(const std::vector<std::uint32_t>& coeffs) const;
  std::vector<std::uint32_t> coeffs(FieldElement a) const;

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement inv(FieldElement a) const;
  FieldElement pow(FieldElement a, std::uint64_t e) const;
  std::uint64_t multiplicative_order(FieldElement a) const;

  std::vector<FieldElement> enumerate_elements(std::uint64_t cap = kDefaultEnumerationCap) const;

  // Raw-value arithmetic on canonical integers; the hot loops in the
  // brute-force oracle run on these.
  std::uint32_t add_v(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub_v(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg_v(std::uint32_t a) const;
  std::uint32_t mul_v(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv_v(std::uint32_t a) const;
  std::uint32_t pow_v(std::uint32_t a, std::uint64_t e) const;

  bool same_field(const Field& other) const;

  std::string describe() const;

 private:
  Field(std::uint32_t p, std::uint32_t l, std::vector<std::uint32_t> modulus);

  void check_element(FieldElement a) const;
  void unpack(std::uint32_t v, std::uint32_t* digits) const;
  std::uint32_t pack(const std::uint32_t* digits) const;

  std::uint32_t p_;
  std::uint32_t l_;
  std::uint64_t q_;
  std::vector<std::uint32_t> modulus_;
  // reduction_[i] = digits of x^(l+i) mod modulus, i = 0..l-2
  std::vector<std::vector<std::uint32_t>> reduction_;
};

bool is_prime(std::uint64_t n);

// True iff `poly` (low-to-high over F_p, monic) has no monic factor of
// degree 1..deg/2; checked by trial division.
bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::uint32_t p);

// Lexicographically smallest (by canonical integer) monic irreducible of
// degree l over F_p. The built-in source of default moduli.
std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t l);

}  // namespace lrc
