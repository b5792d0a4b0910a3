#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "cyclrc/error.hpp"

namespace cyclrc {

/// Elements are stored as the integer whose base-p digits are the
/// polynomial-basis coefficients, coefficient of x^i at digit i.
using Elem = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

inline constexpr std::uint64_t kFieldSizeCap = std::uint64_t{1} << 20;
inline constexpr std::uint64_t kLogTableCap = std::uint64_t{1} << 16;

/// GF(p^m) with a canonical modulus (lexicographically least monic
/// irreducible) and the least primitive element as generator.
///
/// A field may declare a base subfield GF(p^b) with m = b*s; the embedding is
/// fixed by the least root of the base modulus.  Instances are immutable and
/// shared through FieldPtr.
class Field {
  struct Token {};

 public:
  /// Cached: identical (p, m) return the same instance.
  static FieldPtr make(std::uint32_t p, std::uint32_t m);
  /// GF(q^degree) over `base`.  degree == 1 returns `base` itself.
  static FieldPtr extension(const FieldPtr& base, std::uint32_t degree);

  Field(Token, std::uint32_t p, std::uint32_t m, FieldPtr base);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return m_; }
  std::uint32_t size() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  Elem generator() const { return generator_; }

  Elem add(Elem a, Elem b) const {
    if (p_ == 2) return a ^ b;
    if (!add_table_.empty()) return add_table_[std::size_t{a} * q_ + b];
    return add_slow(a, b);
  }
  Elem neg(Elem a) const {
    if (p_ == 2) return a;
    if (!neg_table_.empty()) return neg_table_[a];
    return neg_slow(a);
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    if (!log_.empty()) return exp_[std::size_t{log_[a]} + log_[b]];
    return mul_slow(a, b);
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  /// generator^k.
  Elem exp(std::uint64_t k) const;
  /// Image of an integer under Z -> GF(p).
  Elem from_int(std::int64_t v) const;

  std::vector<std::uint32_t> digits(Elem a) const;
  Elem from_digits(std::span<const std::uint32_t> digits) const;
  std::uint64_t multiplicative_order(Elem a) const;

  const FieldPtr& base() const { return base_; }
  bool has_base() const { return base_ != nullptr; }
  /// [GF(q) : base], 1 when no base is declared.
  std::uint32_t extension_degree() const;
  Elem embed(Elem base_elem) const;
  bool in_base(Elem a) const;
  /// Inverse of embed; throws CoefficientOutsideSubfield.
  Elem project(Elem a) const;

  /// Structural identity (same p, m, modulus and base).
  bool same_as(const Field& other) const;

 private:
  Elem add_slow(Elem a, Elem b) const;
  Elem neg_slow(Elem a) const;
  Elem mul_slow(Elem a, Elem b) const;
  void build_tables();
  void build_embedding();

  std::uint32_t p_;
  std::uint32_t m_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  Elem generator_ = 1;
  std::vector<std::uint32_t> pow_p_;
  std::vector<std::uint16_t> add_table_;
  std::vector<std::uint16_t> neg_table_;
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
  FieldPtr base_;
  std::vector<Elem> embed_;
  std::vector<std::int32_t> project_;
};

inline bool same_field(const FieldPtr& a, const FieldPtr& b) {
  return a == b || (a && b && a->same_as(*b));
}

/// Value type pairing an element with the field it lives in.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Elem value) : field_(std::move(field)), value_(value) {}

  const FieldPtr& field() const { return field_; }
  Elem value() const { return value_; }
  bool is_zero() const { return value_ == 0; }
  std::vector<std::uint32_t> repr() const { return field_->digits(value_); }

  FieldElement pow(std::int64_t e) const;
  FieldElement inverse() const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a);
  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  FieldPtr field_;
  Elem value_;
};

FieldPtr make_field(std::uint32_t p, std::uint32_t m);
/// Decomposes q = p^m; throws NotPrime when q is not a prime power.
FieldPtr field_of_order(std::uint64_t q);
/// Least s >= 1 with n | q^s - 1.
std::uint32_t splitting_order(std::uint64_t q, std::uint64_t n);
FieldElement nth_root_of_unity(const FieldPtr& field, std::uint64_t n);
bool in_base_subfield(const FieldElement& x);
FieldElement embed_base(const FieldElement& x, const FieldPtr& target);
FieldElement project_base(const FieldElement& x);

/// Coordinates of extension elements over the declared base field, relative
/// to the power basis 1, g, ..., g^{s-1} of the extension generator g.
class SubfieldBasis {
 public:
  explicit SubfieldBasis(FieldPtr extension);

  std::uint32_t dimension() const { return s_; }
  /// Base-field coordinates of `a` (length s).
  std::vector<Elem> coordinates(Elem a) const;
  Elem combine(std::span<const Elem> coords) const;

 private:
  FieldPtr ext_;
  std::uint32_t s_;
  std::vector<Elem> basis_;
  std::vector<std::uint32_t> index_;
};

bool is_prime(std::uint64_t v);
std::vector<std::uint64_t> prime_factors(std::uint64_t v);

}  // namespace cyclrc
