#pragma once

#include <span>
#include <utility>
#include <vector>

#include "cyclrc/field.hpp"

namespace cyclrc {

/// Dense univariate polynomial; coeffs()[i] is the coefficient of x^i and
/// trailing zeros are always trimmed.
class Poly {
 public:
  explicit Poly(FieldPtr field) : field_(std::move(field)) {}
  Poly(FieldPtr field, std::vector<Elem> coeffs);

  static Poly constant(FieldPtr field, Elem c);
  static Poly monomial(FieldPtr field, std::size_t degree, Elem c = 1);
  /// x^n - 1.
  static Poly x_pow_minus_one(FieldPtr field, std::size_t n);

  const FieldPtr& field() const { return field_; }
  const std::vector<Elem>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Elem coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
  Elem leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b);

 private:
  void normalize();

  FieldPtr field_;
  std::vector<Elem> coeffs_;
};

Poly poly_from_roots(const FieldPtr& field, std::span<const Elem> roots);
Poly poly_from_roots(std::span<const FieldElement> roots);
FieldElement evaluate(const Poly& f, const FieldElement& x);
Elem evaluate(const Poly& f, Elem x);
std::pair<Poly, Poly> poly_divrem(const Poly& f, const Poly& g);
/// Re-expresses a polynomial over an extension as one over its declared base.
Poly project_to_base(const Poly& f);
/// Inverse of project_to_base.
Poly embed_poly(const Poly& f, const FieldPtr& extension);

}  // namespace cyclrc
