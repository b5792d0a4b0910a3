#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "cyclrc/field.hpp"
#include "cyclrc/matrix.hpp"
#include "cyclrc/poly.hpp"

namespace cyclrc {

inline constexpr std::uint64_t kDefaultSearchCap = 10'000'000;

/// Exponents i in [0, n) such that alpha^i is a zero of the generator
/// polynomial.  Negative or oversized inputs are reduced mod n.
class DefiningSet {
 public:
  DefiningSet() = default;
  DefiningSet(int n, std::span<const long long> exponents);
  DefiningSet(int n, std::initializer_list<long long> exponents);

  static DefiningSet empty(int n) { return DefiningSet(n, std::span<const long long>{}); }
  static DefiningSet full(int n);
  /// { start + t*step : t = 0..count-1 } mod n.
  static DefiningSet progression(int n, long long start, long long step, int count);
  /// { i : i == residue (mod modulus) }, modulus | n.
  static DefiningSet residue_class(int n, int modulus, long long residue);

  int length() const { return n_; }
  const std::vector<int>& exponents() const { return exps_; }
  std::size_t size() const { return exps_.size(); }
  bool empty() const { return exps_.empty(); }
  bool contains(long long i) const;

  DefiningSet united(const DefiningSet& other) const;
  DefiningSet intersected(const DefiningSet& other) const;
  DefiningSet minus(const DefiningSet& other) const;
  DefiningSet complement() const;
  /// { -i mod n }.
  DefiningSet negated() const;
  /// { c*i mod n }.
  DefiningSet scaled(long long c) const;

  friend bool operator==(const DefiningSet&, const DefiningSet&) = default;

 private:
  int n_ = 0;
  std::vector<int> exps_;
};

/// Closure under i -> q*i mod n.
DefiningSet conjugacy_closure(const DefiningSet& z, std::uint64_t q);
bool is_conjugacy_closed(const DefiningSet& z, std::uint64_t q);

struct BchRun {
  int bound = 1;
  int step = 0;
  int start = 0;
  int length = 0;
};

/// Longest progression {u, u+b, ...} inside Z over every step b coprime to n.
BchRun bch_best_run(const DefiningSet& z);
int bch_lower_bound(const DefiningSet& z);

/// q-ary cyclic code of length n, gcd(n, q) = 1, given by its complete
/// defining set.  Immutable once built.
class CyclicCode {
 public:
  std::uint32_t q() const { return base_->size(); }
  int length() const { return z_.length(); }
  int dimension() const { return k_; }
  const FieldPtr& base_field() const { return base_; }
  const FieldPtr& splitting_field() const { return ext_; }
  std::uint32_t splitting_degree() const { return s_; }
  FieldElement alpha() const { return {ext_, alpha_}; }
  const DefiningSet& defining_set() const { return z_; }
  const Poly& generator_poly() const { return g_; }
  const Poly& check_poly() const { return h_; }
  const Matrix& generator_matrix() const { return gen_; }
  const Matrix& parity_check_matrix() const { return check_; }

  /// c * H^T.
  std::vector<Elem> syndrome(std::span<const Elem> word) const;
  bool contains(std::span<const Elem> word) const;

 private:
  CyclicCode(FieldPtr base, FieldPtr ext, std::uint32_t s, Elem alpha, DefiningSet z, Poly g,
             Poly h, Matrix gen, Matrix check);
  friend CyclicCode build_cyclic_code(const FieldPtr& base, int n, const DefiningSet& z);

  FieldPtr base_;
  FieldPtr ext_;
  std::uint32_t s_;
  Elem alpha_;
  DefiningSet z_;
  Poly g_;
  Poly h_;
  Matrix gen_;
  Matrix check_;
  int k_;
};

CyclicCode build_cyclic_code(const FieldPtr& base, int n, const DefiningSet& z);
CyclicCode build_cyclic_code(std::uint64_t q, int n, const DefiningSet& z);
CyclicCode dual_code(const CyclicCode& code);

struct ScanOptions {
  std::uint64_t cap = kDefaultSearchCap;
  bool weight_distribution = false;
  unsigned jobs = 1;
};

struct DistanceResult {
  /// length + 1 for the zero code.
  int distance = 0;
  /// Indexed by weight; filled only when requested.
  std::vector<std::uint64_t> weights;
  /// A codeword of minimum weight (empty for the zero code).
  std::vector<Elem> witness;
  std::uint64_t codewords_scanned = 0;
};

/// q^k with saturation at UINT64_MAX.
std::uint64_t search_space(std::uint64_t q, std::uint64_t k);

/// Minimum weight over all nonzero words of the row space of `generator`.
/// Only messages whose leading nonzero symbol is 1 are visited; weights of
/// scalar multiples coincide.
DistanceResult linear_code_min_distance(const Matrix& generator, const ScanOptions& opts = {});
DistanceResult min_distance_exhaustive(const CyclicCode& code, const ScanOptions& opts = {});

/// Streams all q^k codewords in message order (digit 0 least significant),
/// optionally restricted to message indices [begin, end).
class CodewordEnumerator {
 public:
  explicit CodewordEnumerator(const Matrix& generator);
  CodewordEnumerator(const Matrix& generator, std::uint64_t begin, std::uint64_t end);

  std::uint64_t total() const { return total_; }
  std::uint64_t position() const { return next_; }
  bool next(std::vector<Elem>& codeword);

 private:
  const Matrix* gen_;
  std::uint64_t total_;
  std::uint64_t next_;
  std::uint64_t end_;
  std::vector<Elem> message_;
};

}  // namespace cyclrc
