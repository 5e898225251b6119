#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lrc/field.hpp"

namespace lrc {

// Univariate polynomial over a fixed finite field. Coefficients are stored
// low-to-high with no trailing zeros, so the representation is canonical and
// degree queries are O(1). The zero polynomial has an empty coefficient
// vector and no degree (nullopt), never "-1": degree-bound checks must
// handle it explicitly.
class Polynomial {
 public:
  explicit Polynomial(const Field* field) : field_(field) {}
  Polynomial(const Field* field, std::vector<FieldElement> coeffs);

  static Polynomial zero(const Field& f) { return Polynomial(&f); }
  static Polynomial constant(FieldElement c);
  static Polynomial monomial(FieldElement c, std::size_t degree);
  static Polynomial from_values(const Field& f, const std::vector<std::uint64_t>& canonical);

  const Field& field() const { return *field_; }
  const std::vector<FieldElement>& coeffs() const { return coeffs_; }
  std::optional<std::size_t> degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }
  bool is_zero() const { return coeffs_.empty(); }
  FieldElement coeff(std::size_t i) const;
  FieldElement leading() const;

  FieldElement evaluate(FieldElement x) const;

  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial scaled(FieldElement c) const;
  Polynomial shifted(std::size_t k) const;  // multiply by x^k
  Polynomial monic() const;

  bool operator==(const Polynomial& rhs) const;
  bool operator!=(const Polynomial& rhs) const { return !(*this == rhs); }

  // Space-separated canonical integers, low-to-high; "0" for the zero
  // polynomial. The text form used in verify reports.
  std::string to_string() const;

 private:
  void trim();

  const Field* field_;
  std::vector<FieldElement> coeffs_;
};

// f = q*g + r with deg r < deg g. Throws on zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& f, const Polynomial& g);

// Monic gcd; gcd(f, 0) = monic f. Throws when both are zero.
Polynomial poly_gcd(Polynomial f, Polynomial g);

// g, u, v with g = monic gcd(a, b) = u*a + v*b.
struct ExtGcd {
  Polynomial g, u, v;
};
ExtGcd poly_ext_gcd(const Polynomial& a, const Polynomial& b);

// Unique polynomial of degree < #points through all (x, y) pairs, by the
// direct Lagrange formula. Abscissae must be distinct.
Polynomial interpolate(const Field& field,
                       const std::vector<std::pair<FieldElement, FieldElement>>& points);

// Monic product of (x - a) over the set; 1 for the empty set.
Polynomial annihilator(const Field& field, const std::vector<FieldElement>& points);

// Unique f with f = residues[i] mod moduli[i] and deg f < sum deg moduli.
// Moduli must be pairwise coprime and residues degree-reduced.
Polynomial crt_combine(const std::vector<Polynomial>& residues,
                       const std::vector<Polynomial>& moduli);

}  // namespace lrc
