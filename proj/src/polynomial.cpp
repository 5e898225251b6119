#include "lrc/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace lrc {

Polynomial::Polynomial(const Field* field, std::vector<FieldElement> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
  for (auto c : coeffs_)
    if (!field_->same_field(c.field())) throw std::invalid_argument("field mismatch in coefficients");
  trim();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::constant(FieldElement c) {
  Polynomial out(&c.field());
  if (!c.is_zero()) out.coeffs_.push_back(c);
  return out;
}

Polynomial Polynomial::monomial(FieldElement c, std::size_t degree) {
  Polynomial out(&c.field());
  if (!c.is_zero()) {
    out.coeffs_.assign(degree, c.field().zero());
    out.coeffs_.push_back(c);
  }
  return out;
}

Polynomial Polynomial::from_values(const Field& f, const std::vector<std::uint64_t>& canonical) {
  std::vector<FieldElement> coeffs;
  coeffs.reserve(canonical.size());
  for (auto v : canonical) coeffs.push_back(f.element(v));
  return Polynomial(&f, std::move(coeffs));
}

FieldElement Polynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : field_->zero();
}

FieldElement Polynomial::leading() const {
  if (coeffs_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

FieldElement Polynomial::evaluate(FieldElement x) const {
  if (!field_->same_field(x.field())) throw std::invalid_argument("field mismatch in evaluation");
  std::uint32_t acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;)
    acc = field_->add_v(field_->mul_v(acc, x.value()), coeffs_[i].value());
  return field_->element(acc);
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  if (!field_->same_field(*rhs.field_)) throw std::invalid_argument("field mismatch");
  Polynomial out(field_);
  out.coeffs_.resize(std::max(coeffs_.size(), rhs.coeffs_.size()), field_->zero());
  for (std::size_t i = 0; i < out.coeffs_.size(); ++i)
    out.coeffs_[i] = field_->add(coeff(i), rhs.coeff(i));
  out.trim();
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
  if (!field_->same_field(*rhs.field_)) throw std::invalid_argument("field mismatch");
  Polynomial out(field_);
  out.coeffs_.resize(std::max(coeffs_.size(), rhs.coeffs_.size()), field_->zero());
  for (std::size_t i = 0; i < out.coeffs_.size(); ++i)
    out.coeffs_[i] = field_->sub(coeff(i), rhs.coeff(i));
  out.trim();
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  if (!field_->same_field(*rhs.field_)) throw std::invalid_argument("field mismatch");
  if (is_zero() || rhs.is_zero()) return Polynomial(field_);
  Polynomial out(field_);
  out.coeffs_.assign(coeffs_.size() + rhs.coeffs_.size() - 1, field_->zero());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      out.coeffs_[i + j] = field_->add(out.coeffs_[i + j], field_->mul(coeffs_[i], rhs.coeffs_[j]));
  }
  out.trim();
  return out;
}

Polynomial Polynomial::scaled(FieldElement c) const {
  Polynomial out(field_);
  if (c.is_zero()) return out;
  out.coeffs_.reserve(coeffs_.size());
  for (auto e : coeffs_) out.coeffs_.push_back(field_->mul(e, c));
  out.trim();
  return out;
}

Polynomial Polynomial::shifted(std::size_t k) const {
  if (is_zero()) return *this;
  Polynomial out(field_);
  out.coeffs_.assign(k, field_->zero());
  out.coeffs_.insert(out.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return out;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) throw std::domain_error("cannot normalize the zero polynomial");
  return scaled(field_->inv(leading()));
}

bool Polynomial::operator==(const Polynomial& rhs) const {
  if (coeffs_.size() != rhs.coeffs_.size()) return false;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != rhs.coeffs_[i]) return false;
  return true;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(coeffs_[i].value());
  }
  return out;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw std::domain_error("polynomial division by zero");
  const Field& fd = f.field();
  if (!fd.same_field(g.field())) throw std::invalid_argument("field mismatch");
  std::vector<FieldElement> rem(f.coeffs());
  std::size_t dg = *g.degree();
  if (rem.size() < dg + 1) return {Polynomial(&fd), f};
  std::vector<FieldElement> quot(rem.size() - dg, fd.zero());
  FieldElement lead_inv = fd.inv(g.leading());
  for (std::size_t i = rem.size(); i-- > dg;) {
    if (rem[i].is_zero()) continue;
    FieldElement factor = fd.mul(rem[i], lead_inv);
    quot[i - dg] = factor;
    for (std::size_t j = 0; j <= dg; ++j)
      rem[i - dg + j] = fd.sub(rem[i - dg + j], fd.mul(factor, g.coeff(j)));
  }
  return {Polynomial(&fd, std::move(quot)), Polynomial(&fd, std::move(rem))};
}

Polynomial poly_gcd(Polynomial f, Polynomial g) {
  if (f.is_zero() && g.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
  while (!g.is_zero()) {
    Polynomial r = divmod(f, g).second;
    f = g;
    g = r;
  }
  return f.monic();
}

ExtGcd poly_ext_gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
  const Field& fd = a.field();
  Polynomial r0 = a, r1 = b;
  Polynomial s0 = Polynomial::constant(fd.one()), s1 = Polynomial(&fd);
  Polynomial t0 = Polynomial(&fd), t1 = Polynomial::constant(fd.one());
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = r1;
    r1 = r;
    Polynomial s = s0 - q * s1;
    s0 = s1;
    s1 = s;
    Polynomial t = t0 - q * t1;
    t0 = t1;
    t1 = t;
  }
  FieldElement norm = fd.inv(r0.leading());
  return {r0.scaled(norm), s0.scaled(norm), t0.scaled(norm)};
}

Polynomial interpolate(const Field& field,
                       const std::vector<std::pair<FieldElement, FieldElement>>& points) {
  if (points.empty()) throw std::invalid_argument("interpolation needs at least one point");
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i].first == points[j].first)
        throw std::invalid_argument("duplicate abscissa in interpolation");
  Polynomial result(&field);
  for (std::size_t i = 0; i < points.size(); ++i) {
    // y_i * prod_{j != i} (x - x_j) / (x_i - x_j)
    Polynomial basis = Polynomial::constant(field.one());
    FieldElement denom = field.one();
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      basis = basis * Polynomial(&field, {field.neg(points[j].first), field.one()});
      denom = field.mul(denom, field.sub(points[i].first, points[j].first));
    }
    result = result + basis.scaled(field.mul(points[i].second, field.inv(denom)));
  }
  return result;
}

Polynomial annihilator(const Field& field, const std::vector<FieldElement>& points) {
  Polynomial out = Polynomial::constant(field.one());
  for (auto a : points) out = out * Polynomial(&field, {field.neg(a), field.one()});
  return out;
}

Polynomial crt_combine(const std::vector<Polynomial>& residues,
                       const std::vector<Polynomial>& moduli) {
  if (residues.size() != moduli.size() || moduli.empty())
    throw std::invalid_argument("crt_combine needs matching nonempty residue/modulus lists");
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    if (moduli[i].is_zero() || *moduli[i].degree() == 0)
      throw std::invalid_argument("crt modulus must have positive degree");
    auto dr = residues[i].degree();
    if (dr.has_value() && *dr >= *moduli[i].degree())
      throw std::invalid_argument("crt residue degree must be below its modulus degree");
    for (std::size_t j = i + 1; j < moduli.size(); ++j) {
      Polynomial g = poly_gcd(moduli[i], moduli[j]);
      if (g.degree() != std::optional<std::size_t>(0))
        throw std::invalid_argument("crt moduli are not pairwise coprime");
    }
  }
  // Fold pairwise: keep f mod M, then lift by the next modulus.
  Polynomial f = residues[0];
  Polynomial m = moduli[0];
  for (std::size_t i = 1; i < moduli.size(); ++i) {
    // f' = f + m * ((r_i - f) * m^{-1} mod G_i), so f' matches r_i mod G_i
    // and still matches f mod m.
    ExtGcd e = poly_ext_gcd(m, moduli[i]);
    Polynomial diff = divmod(residues[i] - f, moduli[i]).second;
    Polynomial lift = divmod(diff * e.u, moduli[i]).second;
    f = f + m * lift;
    m = m * moduli[i];
  }
  return divmod(f, m).second;
}

}  // namespace lrc
