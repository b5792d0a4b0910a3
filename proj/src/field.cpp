#include "cyclrc/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <tuple>

namespace cyclrc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::LengthNotDividing: return "LengthNotDividing";
    case ErrorCode::NoDeclaredBase: return "NoDeclaredBase";
    case ErrorCode::MixedContexts: return "MixedContexts";
    case ErrorCode::DivisionByZeroPoly: return "DivisionByZeroPoly";
    case ErrorCode::CoefficientOutsideSubfield: return "CoefficientOutsideSubfield";
    case ErrorCode::NotConjugacyClosed: return "NotConjugacyClosed";
    case ErrorCode::LengthNotCoprime: return "LengthNotCoprime";
    case ErrorCode::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorCode::GroupSizeNotDividing: return "GroupSizeNotDividing";
    case ErrorCode::ParamDomain: return "ParamDomain";
    case ErrorCode::ProgressionOutOfRange: return "ProgressionOutOfRange";
    case ErrorCode::NoMatchingCase: return "NoMatchingCase";
    case ErrorCode::NonexistentMDS: return "NonexistentMDS";
    case ErrorCode::TooManyLocalErasures: return "TooManyLocalErasures";
    case ErrorCode::NotErased: return "NotErased";
    case ErrorCode::TooManyErasures: return "TooManyErasures";
    case ErrorCode::InconsistentWord: return "InconsistentWord";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      while (v % d == 0) v /= d;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

namespace {

// Dense GF(p)[x] helpers used only while searching for the modulus.
using SmallPoly = std::vector<std::uint32_t>;

void trim(SmallPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a % p;
  for (std::uint32_t e = p - 2; e; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<std::uint32_t>(r);
}

SmallPoly poly_mod(SmallPoly a, const SmallPoly& f, std::uint32_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const std::uint32_t lead_inv = inv_mod(f.back(), p);
  while (a.size() > df) {
    const std::uint64_t c = std::uint64_t{a.back()} * lead_inv % p;
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - c * f[i] % p) % p);
    }
    trim(a);
  }
  return a;
}

SmallPoly mul_mod(const SmallPoly& a, const SmallPoly& b, const SmallPoly& f, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  SmallPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = static_cast<std::uint32_t>((out[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  return poly_mod(std::move(out), f, p);
}

// x^(p^e) mod f.
SmallPoly frobenius_power(const SmallPoly& f, std::uint32_t p, std::uint32_t e) {
  SmallPoly x = poly_mod(SmallPoly{0, 1}, f, p);
  for (std::uint32_t i = 0; i < e; ++i) {
    SmallPoly r{1}, base = x;
    for (std::uint32_t k = p; k; k >>= 1) {
      if (k & 1) r = mul_mod(r, base, f, p);
      base = mul_mod(base, base, f, p);
    }
    x = std::move(r);
  }
  return x;
}

SmallPoly poly_gcd(SmallPoly a, SmallPoly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    SmallPoly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Rabin's test.
bool is_irreducible(const SmallPoly& f, std::uint32_t p) {
  const std::uint32_t m = static_cast<std::uint32_t>(f.size() - 1);
  if (m == 1) return true;
  SmallPoly x = poly_mod(SmallPoly{0, 1}, f, p);
  SmallPoly full = frobenius_power(f, p, m);
  if (full != x) return false;
  for (std::uint64_t l : prime_factors(m)) {
    SmallPoly h = frobenius_power(f, p, static_cast<std::uint32_t>(m / l));
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = (h[1] + p - 1) % p;
    trim(h);
    SmallPoly g = poly_gcd(f, h, p);
    if (g.size() != 1) return false;
  }
  return true;
}

SmallPoly canonical_modulus(std::uint32_t p, std::uint32_t m, std::uint32_t q) {
  for (std::uint32_t v = 0; v < q; ++v) {
    SmallPoly f(m + 1, 0);
    std::uint32_t t = v;
    for (std::uint32_t i = 0; i < m; ++i) {
      f[i] = t % p;
      t /= p;
    }
    f[m] = 1;
    if (m > 1 && f[0] == 0) continue;
    if (is_irreducible(f, p)) return f;
  }
  throw Error(ErrorCode::ParamDomain, "no irreducible polynomial found");
}

std::mutex& cache_mutex() {
  static std::mutex mu;
  return mu;
}

}  // namespace

Field::Field(Token, std::uint32_t p, std::uint32_t m, FieldPtr base)
    : p_(p), m_(m), base_(std::move(base)) {
  std::uint64_t q = 1;
  pow_p_.reserve(m);
  for (std::uint32_t i = 0; i < m; ++i) {
    pow_p_.push_back(static_cast<std::uint32_t>(q));
    q *= p;
  }
  q_ = static_cast<std::uint32_t>(q);
  modulus_ = canonical_modulus(p, m, q_);
  build_tables();
  if (base_) build_embedding();
}

FieldPtr Field::make(std::uint32_t p, std::uint32_t m) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (m < 1) throw Error(ErrorCode::ParamDomain, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > kFieldSizeCap) {
      throw Error(ErrorCode::SizeCapExceeded,
                  std::to_string(p) + "^" + std::to_string(m) + " exceeds 2^20");
    }
  }
  std::lock_guard lock(cache_mutex());
  static std::map<std::pair<std::uint32_t, std::uint32_t>, FieldPtr> cache;
  auto& slot = cache[{p, m}];
  if (!slot) slot = std::make_shared<const Field>(Token{}, p, m, nullptr);
  return slot;
}

FieldPtr Field::extension(const FieldPtr& base, std::uint32_t degree) {
  if (!base) throw Error(ErrorCode::NoDeclaredBase, "null base field");
  if (degree < 1) throw Error(ErrorCode::ParamDomain, "extension degree must be >= 1");
  if (degree == 1) return base;
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < degree; ++i) {
    q *= base->size();
    if (q > kFieldSizeCap) {
      throw Error(ErrorCode::SizeCapExceeded,
                  std::to_string(base->size()) + "^" + std::to_string(degree) + " exceeds 2^20");
    }
  }
  std::lock_guard lock(cache_mutex());
  static std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>, FieldPtr> cache;
  auto& slot = cache[{base->characteristic(), base->degree(), degree}];
  if (!slot) {
    slot = std::make_shared<const Field>(Token{}, base->characteristic(), base->degree() * degree,
                                         base);
  }
  return slot;
}

Elem Field::add_slow(Elem a, Elem b) const {
  if (m_ == 1) return (a + b) % p_;
  Elem out = 0;
  for (std::uint32_t i = 0; i < m_; ++i) {
    out += ((a % p_ + b % p_) % p_) * pow_p_[i];
    a /= p_;
    b /= p_;
  }
  return out;
}

Elem Field::neg_slow(Elem a) const {
  if (m_ == 1) return (p_ - a) % p_;
  Elem out = 0;
  for (std::uint32_t i = 0; i < m_; ++i) {
    out += ((p_ - a % p_) % p_) * pow_p_[i];
    a /= p_;
  }
  return out;
}

Elem Field::mul_slow(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  if (m_ == 1) return static_cast<Elem>(std::uint64_t{a} * b % p_);
  SmallPoly da = digits(a), db = digits(b);
  SmallPoly prod = mul_mod(da, db, modulus_, p_);
  prod.resize(m_, 0);
  return from_digits(prod);
}

void Field::build_tables() {
  if (p_ != 2 && q_ <= 1024) {
    add_table_.resize(std::size_t{q_} * q_);
    neg_table_.resize(q_);
    for (Elem a = 0; a < q_; ++a) {
      neg_table_[a] = static_cast<std::uint16_t>(neg_slow(a));
      for (Elem b = 0; b < q_; ++b) {
        add_table_[std::size_t{a} * q_ + b] = static_cast<std::uint16_t>(add_slow(a, b));
      }
    }
  }

  // Least element of full multiplicative order.
  const std::uint64_t order = q_ - 1;
  const auto factors = prime_factors(order);
  auto slow_pow = [this](Elem a, std::uint64_t e) {
    Elem r = 1;
    while (e) {
      if (e & 1) r = mul_slow(r, a);
      a = mul_slow(a, a);
      e >>= 1;
    }
    return r;
  };
  generator_ = 1;
  if (q_ > 2) {
    for (Elem g = 2; g < q_; ++g) {
      bool primitive = true;
      for (std::uint64_t l : factors) {
        if (slow_pow(g, order / l) == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        generator_ = g;
        break;
      }
    }
  }

  if (q_ <= kLogTableCap) {
    exp_.resize(2 * order + 1);
    log_.assign(q_, 0);
    Elem cur = 1;
    for (std::uint64_t i = 0; i < order; ++i) {
      exp_[i] = cur;
      exp_[i + order] = cur;
      log_[cur] = static_cast<std::uint32_t>(i);
      cur = mul_slow(cur, generator_);
    }
    exp_[2 * order] = 1;
  }
}

void Field::build_embedding() {
  const std::uint32_t bm = base_->degree();
  if (m_ % bm != 0) throw Error(ErrorCode::ParamDomain, "base degree does not divide degree");
  const auto& bmod = base_->modulus();
  Elem root = 0;
  bool found = false;
  for (Elem t = 0; t < q_ && !found; ++t) {
    Elem acc = 0;
    for (std::size_t i = bmod.size(); i-- > 0;) acc = add(mul(acc, t), from_int(bmod[i]));
    if (acc == 0) {
      root = t;
      found = true;
    }
  }
  if (!found) throw Error(ErrorCode::ParamDomain, "base modulus has no root in extension");
  const std::uint32_t bq = base_->size();
  embed_.resize(bq);
  project_.assign(q_, -1);
  for (Elem c = 0; c < bq; ++c) {
    const auto d = base_->digits(c);
    Elem acc = 0, power = 1;
    for (std::uint32_t i = 0; i < bm; ++i) {
      acc = add(acc, mul(from_int(d[i]), power));
      power = mul(power, root);
    }
    embed_[c] = acc;
    project_[acc] = static_cast<std::int32_t>(c);
  }
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw Error(ErrorCode::ParamDomain, "inverse of zero");
  if (!log_.empty()) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  return pow(a, q_ - 2);
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  if (!log_.empty()) {
    const std::uint64_t order = q_ - 1;
    return exp_[(std::uint64_t{log_[a]} * (e % order)) % order];
  }
  Elem r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Elem Field::exp(std::uint64_t k) const {
  if (!exp_.empty()) return exp_[k % (q_ - 1)];
  return pow(generator_, k);
}

Elem Field::from_int(std::int64_t v) const {
  const std::int64_t p = p_;
  return static_cast<Elem>(((v % p) + p) % p);
}

std::vector<std::uint32_t> Field::digits(Elem a) const {
  std::vector<std::uint32_t> out(m_);
  for (std::uint32_t i = 0; i < m_; ++i) {
    out[i] = a % p_;
    a /= p_;
  }
  return out;
}

Elem Field::from_digits(std::span<const std::uint32_t> d) const {
  if (d.size() > m_) throw Error(ErrorCode::ParamDomain, "too many digits for field element");
  Elem out = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] >= p_) throw Error(ErrorCode::ParamDomain, "digit out of range");
    out += d[i] * pow_p_[i];
  }
  return out;
}

std::uint64_t Field::multiplicative_order(Elem a) const {
  if (a == 0) throw Error(ErrorCode::ParamDomain, "zero has no multiplicative order");
  std::uint64_t order = q_ - 1;
  for (std::uint64_t l : prime_factors(q_ - 1)) {
    while (order % l == 0 && pow(a, order / l) == 1) order /= l;
  }
  return order;
}

std::uint32_t Field::extension_degree() const { return base_ ? m_ / base_->degree() : 1; }

Elem Field::embed(Elem base_elem) const {
  if (!base_) throw Error(ErrorCode::NoDeclaredBase, "field has no declared base");
  if (base_elem >= embed_.size()) throw Error(ErrorCode::ParamDomain, "element outside base field");
  return embed_[base_elem];
}

bool Field::in_base(Elem a) const {
  if (!base_) throw Error(ErrorCode::NoDeclaredBase, "field has no declared base");
  return pow(a, base_->size()) == a;
}

Elem Field::project(Elem a) const {
  if (!base_) throw Error(ErrorCode::NoDeclaredBase, "field has no declared base");
  const std::int32_t b = project_[a];
  if (b < 0) {
    throw Error(ErrorCode::CoefficientOutsideSubfield,
                "element " + std::to_string(a) + " is not in the base field");
  }
  return static_cast<Elem>(b);
}

bool Field::same_as(const Field& other) const {
  if (this == &other) return true;
  if (p_ != other.p_ || m_ != other.m_ || modulus_ != other.modulus_) return false;
  if (static_cast<bool>(base_) != static_cast<bool>(other.base_)) return false;
  return !base_ || base_->same_as(*other.base_);
}

namespace {

void require_same(const FieldElement& a, const FieldElement& b) {
  if (!same_field(a.field(), b.field())) {
    throw Error(ErrorCode::MixedContexts, "operands belong to different fields");
  }
}

}  // namespace

FieldElement FieldElement::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  return {field_, field_->pow(value_, static_cast<std::uint64_t>(e))};
}

FieldElement FieldElement::inverse() const { return {field_, field_->inv(value_)}; }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return {a.field_, a.field_->add(a.value_, b.value_)};
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return {a.field_, a.field_->sub(a.value_, b.value_)};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return {a.field_, a.field_->mul(a.value_, b.value_)};
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return {a.field_, a.field_->div(a.value_, b.value_)};
}

FieldElement operator-(const FieldElement& a) { return {a.field_, a.field_->neg(a.value_)}; }

bool operator==(const FieldElement& a, const FieldElement& b) {
  return same_field(a.field_, b.field_) && a.value_ == b.value_;
}

FieldPtr make_field(std::uint32_t p, std::uint32_t m) { return Field::make(p, m); }

FieldPtr field_of_order(std::uint64_t q) {
  if (q < 2) throw Error(ErrorCode::NotPrime, "field size must be a prime power >= 2");
  const auto factors = prime_factors(q);
  if (factors.size() != 1) {
    throw Error(ErrorCode::NotPrime, std::to_string(q) + " is not a prime power");
  }
  const std::uint64_t p = factors.front();
  std::uint32_t m = 0;
  for (std::uint64_t t = q; t > 1; t /= p) ++m;
  return Field::make(static_cast<std::uint32_t>(p), m);
}

std::uint32_t splitting_order(std::uint64_t q, std::uint64_t n) {
  if (n == 0 || std::gcd(q, n) != 1) {
    throw Error(ErrorCode::NotCoprime,
                "gcd(" + std::to_string(n) + ", " + std::to_string(q) + ") != 1");
  }
  if (n == 1) return 1;
  std::uint32_t s = 1;
  std::uint64_t cur = q % n;
  while (cur != 1) {
    cur = cur * (q % n) % n;
    ++s;
  }
  return s;
}

FieldElement nth_root_of_unity(const FieldPtr& field, std::uint64_t n) {
  const std::uint64_t order = field->size() - 1;
  if (n == 0 || order % n != 0) {
    throw Error(ErrorCode::LengthNotDividing,
                std::to_string(n) + " does not divide " + std::to_string(order));
  }
  return {field, field->exp(order / n)};
}

bool in_base_subfield(const FieldElement& x) { return x.field()->in_base(x.value()); }

FieldElement embed_base(const FieldElement& x, const FieldPtr& target) {
  if (!target->has_base() || !same_field(target->base(), x.field())) {
    throw Error(ErrorCode::NoDeclaredBase, "target is not an extension of the element's field");
  }
  return {target, target->embed(x.value())};
}

FieldElement project_base(const FieldElement& x) {
  const auto& f = x.field();
  return {f->base(), f->project(x.value())};
}

SubfieldBasis::SubfieldBasis(FieldPtr extension) : ext_(std::move(extension)) {
  if (!ext_->has_base()) throw Error(ErrorCode::NoDeclaredBase, "field has no declared base");
  s_ = ext_->extension_degree();
  for (std::uint32_t i = 0; i < s_; ++i) basis_.push_back(ext_->pow(ext_->generator(), i));
  const std::uint32_t bq = ext_->base()->size();
  index_.assign(ext_->size(), 0);
  std::vector<Elem> coords(s_, 0);
  for (std::uint32_t code = 0; code < ext_->size(); ++code) {
    std::uint32_t t = code;
    for (std::uint32_t i = 0; i < s_; ++i) {
      coords[i] = t % bq;
      t /= bq;
    }
    index_[combine(coords)] = code;
  }
}

std::vector<Elem> SubfieldBasis::coordinates(Elem a) const {
  const std::uint32_t bq = ext_->base()->size();
  std::vector<Elem> out(s_);
  std::uint32_t t = index_[a];
  for (std::uint32_t i = 0; i < s_; ++i) {
    out[i] = t % bq;
    t /= bq;
  }
  return out;
}

Elem SubfieldBasis::combine(std::span<const Elem> coords) const {
  Elem acc = 0;
  for (std::uint32_t i = 0; i < s_; ++i) {
    acc = ext_->add(acc, ext_->mul(ext_->embed(coords[i]), basis_[i]));
  }
  return acc;
}

}  // namespace cyclrc
