#include "cyclrc/poly.hpp"

#include <algorithm>
#include <string>

namespace cyclrc {

namespace {

void require_same(const FieldPtr& a, const FieldPtr& b) {
  if (!same_field(a, b)) throw Error(ErrorCode::MixedContexts, "polynomials over different fields");
}

}  // namespace

Poly::Poly(FieldPtr field, std::vector<Elem> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  normalize();
}

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::constant(FieldPtr field, Elem c) { return Poly(std::move(field), {c}); }

Poly Poly::monomial(FieldPtr field, std::size_t degree, Elem c) {
  std::vector<Elem> v(degree + 1, 0);
  v[degree] = c;
  return Poly(std::move(field), std::move(v));
}

Poly Poly::x_pow_minus_one(FieldPtr field, std::size_t n) {
  std::vector<Elem> v(n + 1, 0);
  v[0] = field->neg(1);
  v[n] = field->add(v[n], 1);
  return Poly(std::move(field), std::move(v));
}

Poly operator+(const Poly& a, const Poly& b) {
  require_same(a.field_, b.field_);
  const auto& f = *a.field_;
  std::vector<Elem> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.add(a.coefficient(i), b.coefficient(i));
  return Poly(a.field_, std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) {
  require_same(a.field_, b.field_);
  const auto& f = *a.field_;
  std::vector<Elem> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.sub(a.coefficient(i), b.coefficient(i));
  return Poly(a.field_, std::move(out));
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same(a.field_, b.field_);
  if (a.is_zero() || b.is_zero()) return Poly(a.field_);
  const auto& f = *a.field_;
  std::vector<Elem> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] = f.add(out[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  return Poly(a.field_, std::move(out));
}

bool operator==(const Poly& a, const Poly& b) {
  return same_field(a.field_, b.field_) && a.coeffs_ == b.coeffs_;
}

Poly poly_from_roots(const FieldPtr& field, std::span<const Elem> roots) {
  const auto& f = *field;
  // Incremental multiplication by (x - root).
  std::vector<Elem> c{1};
  c.reserve(roots.size() + 1);
  for (Elem root : roots) {
    const Elem neg_root = f.neg(root);
    c.push_back(0);
    for (std::size_t i = c.size() - 1; i > 0; --i) c[i] = f.add(c[i - 1], f.mul(c[i], neg_root));
    c[0] = f.mul(c[0], neg_root);
  }
  return Poly(field, std::move(c));
}

Poly poly_from_roots(std::span<const FieldElement> roots) {
  if (roots.empty()) throw Error(ErrorCode::ParamDomain, "empty root list carries no field");
  std::vector<Elem> values;
  values.reserve(roots.size());
  for (const auto& r : roots) {
    if (!same_field(r.field(), roots.front().field())) {
      throw Error(ErrorCode::MixedContexts, "roots belong to different fields");
    }
    values.push_back(r.value());
  }
  return poly_from_roots(roots.front().field(), values);
}

Elem evaluate(const Poly& p, Elem x) {
  const auto& f = *p.field();
  Elem acc = 0;
  for (std::size_t i = p.coeffs().size(); i-- > 0;) acc = f.add(f.mul(acc, x), p.coeffs()[i]);
  return acc;
}

FieldElement evaluate(const Poly& p, const FieldElement& x) {
  require_same(p.field(), x.field());
  return {p.field(), evaluate(p, x.value())};
}

std::pair<Poly, Poly> poly_divrem(const Poly& a, const Poly& b) {
  require_same(a.field(), b.field());
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZeroPoly, "division by the zero polynomial");
  const auto& f = *a.field();
  std::vector<Elem> rem = a.coeffs();
  const std::size_t db = b.coeffs().size() - 1;
  if (rem.size() <= db) return {Poly(a.field()), a};
  std::vector<Elem> quot(rem.size() - db, 0);
  const Elem lead_inv = f.inv(b.leading());
  for (std::size_t i = rem.size(); i-- > db;) {
    const Elem c = f.mul(rem[i], lead_inv);
    quot[i - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) {
      rem[i - db + j] = f.sub(rem[i - db + j], f.mul(c, b.coeffs()[j]));
    }
  }
  rem.resize(db);
  return {Poly(a.field(), std::move(quot)), Poly(a.field(), std::move(rem))};
}

Poly project_to_base(const Poly& p) {
  const auto& f = *p.field();
  if (!f.has_base()) throw Error(ErrorCode::NoDeclaredBase, "polynomial field has no declared base");
  std::vector<Elem> out;
  out.reserve(p.coeffs().size());
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    try {
      out.push_back(f.project(p.coeffs()[i]));
    } catch (const Error&) {
      throw Error(ErrorCode::CoefficientOutsideSubfield,
                  "coefficient of x^" + std::to_string(i) + " is not in the base field");
    }
  }
  return Poly(f.base(), std::move(out));
}

Poly embed_poly(const Poly& p, const FieldPtr& extension) {
  if (extension == p.field()) return p;
  if (!extension->has_base() || !same_field(extension->base(), p.field())) {
    throw Error(ErrorCode::NoDeclaredBase, "target is not an extension of the polynomial's field");
  }
  std::vector<Elem> out;
  out.reserve(p.coeffs().size());
  for (Elem c : p.coeffs()) out.push_back(extension->embed(c));
  return Poly(extension, std::move(out));
}

}  // namespace cyclrc
