#include "cyclrc/cyclic.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <string>
#include <thread>

namespace cyclrc {

namespace {

int mod_n(long long v, int n) {
  long long r = v % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

void require_same_length(const DefiningSet& a, const DefiningSet& b) {
  if (a.length() != b.length()) throw Error(ErrorCode::ParamDomain, "defining sets of different lengths");
}

}  // namespace

DefiningSet::DefiningSet(int n, std::span<const long long> exponents) : n_(n) {
  if (n < 1) throw Error(ErrorCode::ParamDomain, "length must be positive");
  exps_.reserve(exponents.size());
  for (long long e : exponents) exps_.push_back(mod_n(e, n));
  std::sort(exps_.begin(), exps_.end());
  exps_.erase(std::unique(exps_.begin(), exps_.end()), exps_.end());
}

DefiningSet::DefiningSet(int n, std::initializer_list<long long> exponents)
    : DefiningSet(n, std::span<const long long>(exponents.begin(), exponents.size())) {}

DefiningSet DefiningSet::full(int n) {
  std::vector<long long> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  return DefiningSet(n, all);
}

DefiningSet DefiningSet::progression(int n, long long start, long long step, int count) {
  std::vector<long long> v;
  for (int t = 0; t < count; ++t) v.push_back(start + t * step);
  return DefiningSet(n, v);
}

DefiningSet DefiningSet::residue_class(int n, int modulus, long long residue) {
  if (modulus < 1 || n % modulus != 0) {
    throw Error(ErrorCode::GroupSizeNotDividing, "residue modulus must divide the length");
  }
  std::vector<long long> v;
  const int r = mod_n(residue, modulus);
  for (int i = r; i < n; i += modulus) v.push_back(i);
  return DefiningSet(n, v);
}

bool DefiningSet::contains(long long i) const {
  return std::binary_search(exps_.begin(), exps_.end(), mod_n(i, n_));
}

DefiningSet DefiningSet::united(const DefiningSet& other) const {
  require_same_length(*this, other);
  DefiningSet out;
  out.n_ = n_;
  std::set_union(exps_.begin(), exps_.end(), other.exps_.begin(), other.exps_.end(),
                 std::back_inserter(out.exps_));
  return out;
}

DefiningSet DefiningSet::intersected(const DefiningSet& other) const {
  require_same_length(*this, other);
  DefiningSet out;
  out.n_ = n_;
  std::set_intersection(exps_.begin(), exps_.end(), other.exps_.begin(), other.exps_.end(),
                        std::back_inserter(out.exps_));
  return out;
}

DefiningSet DefiningSet::minus(const DefiningSet& other) const {
  require_same_length(*this, other);
  DefiningSet out;
  out.n_ = n_;
  std::set_difference(exps_.begin(), exps_.end(), other.exps_.begin(), other.exps_.end(),
                      std::back_inserter(out.exps_));
  return out;
}

DefiningSet DefiningSet::complement() const { return full(n_).minus(*this); }

DefiningSet DefiningSet::negated() const { return scaled(-1); }

DefiningSet DefiningSet::scaled(long long c) const {
  std::vector<long long> v;
  v.reserve(exps_.size());
  const long long cm = mod_n(c, n_);
  for (int e : exps_) v.push_back(cm * e);
  return DefiningSet(n_, v);
}

DefiningSet conjugacy_closure(const DefiningSet& z, std::uint64_t q) {
  const int n = z.length();
  const long long qm = static_cast<long long>(q % static_cast<std::uint64_t>(n));
  std::vector<bool> in(static_cast<std::size_t>(n), false);
  std::vector<long long> out;
  for (int e : z.exponents()) {
    long long i = e;
    while (!in[static_cast<std::size_t>(i)]) {
      in[static_cast<std::size_t>(i)] = true;
      out.push_back(i);
      i = (i * qm) % n;
    }
  }
  return DefiningSet(n, out);
}

bool is_conjugacy_closed(const DefiningSet& z, std::uint64_t q) {
  return conjugacy_closure(z, q) == z;
}

BchRun bch_best_run(const DefiningSet& z) {
  const int n = z.length();
  BchRun best;
  if (z.empty()) return best;
  if (static_cast<int>(z.size()) == n) return {n + 1, 1, 0, n};
  std::vector<bool> in(static_cast<std::size_t>(n), false);
  for (int e : z.exponents()) in[static_cast<std::size_t>(e)] = true;
  // Steps b and n-b give mirrored runs, so b <= n/2 suffices.
  for (int b = 1; b <= std::max(1, n / 2); ++b) {
    if (std::gcd(b, n) != 1) continue;
    // Walk the cycle 0, b, 2b, ... starting just after an exponent not in Z
    // so that no run wraps around the starting point.
    int t0 = 0;
    while (in[static_cast<std::size_t>((static_cast<long long>(t0) * b) % n)]) ++t0;
    int run = 0;
    int run_start = 0;
    for (int t = 1; t <= n; ++t) {
      const int u = static_cast<int>((static_cast<long long>(t0 + t) * b) % n);
      if (in[static_cast<std::size_t>(u)]) {
        if (run == 0) run_start = u;
        ++run;
        if (run > best.length) best = {run + 1, b, run_start, run};
      } else {
        run = 0;
      }
    }
  }
  return best;
}

int bch_lower_bound(const DefiningSet& z) { return bch_best_run(z).bound; }

CyclicCode::CyclicCode(FieldPtr base, FieldPtr ext, std::uint32_t s, Elem alpha, DefiningSet z,
                       Poly g, Poly h, Matrix gen, Matrix check)
    : base_(std::move(base)),
      ext_(std::move(ext)),
      s_(s),
      alpha_(alpha),
      z_(std::move(z)),
      g_(std::move(g)),
      h_(std::move(h)),
      gen_(std::move(gen)),
      check_(std::move(check)),
      k_(z_.length() - g_.degree()) {}

std::vector<Elem> CyclicCode::syndrome(std::span<const Elem> word) const {
  if (static_cast<int>(word.size()) != length()) throw Error(ErrorCode::ParamDomain, "word length mismatch");
  std::vector<Elem> s(check_.rows());
  for (std::size_t i = 0; i < check_.rows(); ++i) s[i] = dot(*base_, check_.row(i), word);
  return s;
}

bool CyclicCode::contains(std::span<const Elem> word) const {
  const auto s = syndrome(word);
  return std::all_of(s.begin(), s.end(), [](Elem e) { return e == 0; });
}

CyclicCode build_cyclic_code(const FieldPtr& base, int n, const DefiningSet& z) {
  const std::uint64_t q = base->size();
  if (n < 1) throw Error(ErrorCode::ParamDomain, "length must be positive");
  if (std::gcd(static_cast<std::uint64_t>(n), q) != 1) {
    throw Error(ErrorCode::LengthNotCoprime,
                "gcd(" + std::to_string(n) + ", " + std::to_string(q) + ") != 1");
  }
  if (z.length() != n) throw Error(ErrorCode::ParamDomain, "defining set length differs from n");
  for (int i : z.exponents()) {
    const int j = static_cast<int>((static_cast<std::uint64_t>(i) * q) % static_cast<std::uint64_t>(n));
    if (!z.contains(j)) {
      throw Error(ErrorCode::NotConjugacyClosed,
                  "exponent " + std::to_string(i) + " present but " + std::to_string(j) + " missing");
    }
  }
  const std::uint32_t s = splitting_order(q, static_cast<std::uint64_t>(n));
  const FieldPtr ext = Field::extension(base, s);
  const Elem alpha = nth_root_of_unity(ext, static_cast<std::uint64_t>(n)).value();

  std::vector<Elem> roots;
  roots.reserve(z.size());
  for (int i : z.exponents()) roots.push_back(ext->pow(alpha, static_cast<std::uint64_t>(i)));
  const Poly g_ext = poly_from_roots(ext, roots);
  Poly g = s == 1 ? g_ext : project_to_base(g_ext);

  const auto [h, rem] = poly_divrem(Poly::x_pow_minus_one(base, static_cast<std::size_t>(n)), g);
  if (!rem.is_zero()) throw Error(ErrorCode::ParamDomain, "generator does not divide x^n - 1");
  const int k = n - g.degree();

  Matrix gen(base, static_cast<std::size_t>(k), static_cast<std::size_t>(n));
  for (int i = 0; i < k; ++i) {
    for (int t = 0; t <= g.degree(); ++t) gen.at(i, i + t) = g.coefficient(t);
  }
  // Rows are shifts of the reciprocal of h.
  Matrix check(base, static_cast<std::size_t>(n - k), static_cast<std::size_t>(n));
  for (int i = 0; i < n - k; ++i) {
    for (int u = 0; u <= k; ++u) check.at(i, i + u) = h.coefficient(static_cast<std::size_t>(k - u));
  }
  return CyclicCode(base, ext, s, alpha, z, std::move(g), h, std::move(gen), std::move(check));
}

CyclicCode build_cyclic_code(std::uint64_t q, int n, const DefiningSet& z) {
  return build_cyclic_code(field_of_order(q), n, z);
}

CyclicCode dual_code(const CyclicCode& code) {
  return build_cyclic_code(code.base_field(), code.length(), code.defining_set().complement().negated());
}

std::uint64_t search_space(std::uint64_t q, std::uint64_t k) {
  std::uint64_t total = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() / q) return std::numeric_limits<std::uint64_t>::max();
    total *= q;
  }
  return total;
}

namespace {

struct ScanState {
  int best = std::numeric_limits<int>::max();
  std::vector<Elem> witness;
  std::vector<std::uint64_t> hist;
  std::uint64_t scanned = 0;
};

// One unit of projective work: message digit `lead` is 1, digits above it are
// zero, digit lead-1 is fixed to `second` (when lead >= 1) and all lower
// digits range freely.
struct WorkUnit {
  std::size_t lead;
  Elem second;
};

class ProjectiveScanner {
 public:
  ProjectiveScanner(const Matrix& gen, bool weights) : gen_(gen), f_(*gen.field()), weights_(weights) {
    n_ = gen.cols();
    q_ = f_.size();
    // mult_[i][e*n + t] = e * G[i][t]; neg0_ holds -(e * G[0][t]) so that
    // (partial + e*G0)[t] != 0 becomes partial[t] != neg0_[e*n + t].
    mult_.assign(gen.rows(), std::vector<Elem>(static_cast<std::size_t>(q_) * n_));
    for (std::size_t i = 0; i < gen.rows(); ++i) {
      for (Elem e = 0; e < q_; ++e) {
        for (std::size_t t = 0; t < n_; ++t) mult_[i][e * n_ + t] = f_.mul(e, gen.at(i, t));
      }
    }
    neg0_.resize(mult_[0].size());
    for (std::size_t t = 0; t < neg0_.size(); ++t) neg0_[t] = f_.neg(mult_[0][t]);
  }

  void run(const WorkUnit& unit, ScanState& st) const {
    const std::size_t lead = unit.lead;
    std::vector<Elem> top(gen_.row(lead).begin(), gen_.row(lead).end());
    if (lead == 0) {
      visit_word(top, st);
      return;
    }
    add_level(top, lead - 1, unit.second);
    if (lead == 1) {
      visit_word(top, st);
      return;
    }
    // Free digits 0..free-1; digit 0 is swept innermost, digits 1..free-1
    // form an odometer with partial[i] = top + sum_{l >= i} d_l G_l.
    const std::size_t free = lead - 1;
    std::vector<Elem> digits(free, 0);
    std::vector<std::vector<Elem>> partial(free + 1, top);
    while (true) {
      inner_sweep(partial[1], st);
      std::size_t lvl = 1;
      while (lvl < free && digits[lvl] == q_ - 1) {
        digits[lvl] = 0;
        ++lvl;
      }
      if (lvl >= free) break;
      ++digits[lvl];
      for (std::size_t i = lvl; i >= 1; --i) {
        partial[i] = partial[i + 1];
        add_level(partial[i], i, digits[i]);
      }
    }
  }

 private:
  void add_level(std::vector<Elem>& acc, std::size_t level, Elem e) const {
    if (e == 0) return;
    const Elem* m = &mult_[level][e * n_];
    for (std::size_t t = 0; t < n_; ++t) acc[t] = f_.add(acc[t], m[t]);
  }

  // All q choices of digit 0 on top of `partial`.
  void inner_sweep(const std::vector<Elem>& partial, ScanState& st) const {
    for (Elem e = 0; e < q_; ++e) {
      const Elem* m = &neg0_[e * n_];
      int w = 0;
      if (weights_) {
        for (std::size_t t = 0; t < n_; ++t) w += partial[t] != m[t];
      } else {
        const int limit = st.best;
        for (std::size_t t = 0; t < n_ && w < limit; ++t) w += partial[t] != m[t];
      }
      ++st.scanned;
      if (weights_) st.hist[static_cast<std::size_t>(w)] += 1;
      if (w < st.best) {
        st.best = w;
        st.witness.resize(n_);
        for (std::size_t t = 0; t < n_; ++t) st.witness[t] = f_.sub(partial[t], m[t]);
      }
    }
  }

  void visit_word(const std::vector<Elem>& word, ScanState& st) const {
    int w = 0;
    for (Elem e : word) w += e != 0;
    ++st.scanned;
    if (weights_) st.hist[static_cast<std::size_t>(w)] += 1;
    if (w < st.best) {
      st.best = w;
      st.witness = word;
    }
  }

  const Matrix& gen_;
  const Field& f_;
  bool weights_;
  std::size_t n_ = 0;
  Elem q_ = 0;
  std::vector<std::vector<Elem>> mult_;
  std::vector<Elem> neg0_;
};

}  // namespace

DistanceResult linear_code_min_distance(const Matrix& generator, const ScanOptions& opts) {
  const Matrix g = generator.row_basis();
  const std::size_t n = g.cols();
  const std::size_t k = g.rows();
  const std::uint64_t q = g.field()->size();
  DistanceResult out;
  if (k == 0) {
    out.distance = static_cast<int>(n) + 1;
    if (opts.weight_distribution) {
      out.weights.assign(n + 1, 0);
      out.weights[0] = 1;
    }
    return out;
  }
  const std::uint64_t space = search_space(q, k);
  if (space > opts.cap) {
    throw Error(ErrorCode::SearchSpaceTooLarge,
                std::to_string(q) + "^" + std::to_string(k) + " codewords exceed cap " +
                    std::to_string(opts.cap));
  }

  std::vector<WorkUnit> units;
  units.push_back({0, 0});
  for (std::size_t lead = 1; lead < k; ++lead) {
    for (Elem e = 0; e < q; ++e) units.push_back({lead, e});
  }

  const ProjectiveScanner scanner(g, opts.weight_distribution);
  const unsigned jobs = std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(units.size())));
  std::vector<ScanState> states(jobs);
  for (auto& st : states) {
    if (opts.weight_distribution) st.hist.assign(n + 1, 0);
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&](ScanState& st) {
    for (std::size_t u = next++; u < units.size(); u = next++) scanner.run(units[u], st);
  };
  if (jobs == 1) {
    worker(states[0]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker, std::ref(states[j]));
    for (auto& t : pool) t.join();
  }

  out.distance = std::numeric_limits<int>::max();
  if (opts.weight_distribution) {
    out.weights.assign(n + 1, 0);
    out.weights[0] = 1;
  }
  for (const auto& st : states) {
    out.codewords_scanned += st.scanned;
    if (st.best < out.distance) {
      out.distance = st.best;
      out.witness = st.witness;
    }
    if (opts.weight_distribution) {
      for (std::size_t w = 1; w <= n; ++w) out.weights[w] += st.hist[w] * (q - 1);
    }
  }
  return out;
}

DistanceResult min_distance_exhaustive(const CyclicCode& code, const ScanOptions& opts) {
  return linear_code_min_distance(code.generator_matrix(), opts);
}

CodewordEnumerator::CodewordEnumerator(const Matrix& generator)
    : CodewordEnumerator(generator, 0, std::numeric_limits<std::uint64_t>::max()) {}

CodewordEnumerator::CodewordEnumerator(const Matrix& generator, std::uint64_t begin, std::uint64_t end)
    : gen_(&generator), total_(search_space(generator.field()->size(), generator.rows())) {
  next_ = std::min(begin, total_);
  end_ = std::min(end, total_);
  message_.assign(generator.rows(), 0);
  std::uint64_t idx = next_;
  const std::uint64_t q = generator.field()->size();
  for (auto& d : message_) {
    d = static_cast<Elem>(idx % q);
    idx /= q;
  }
}

bool CodewordEnumerator::next(std::vector<Elem>& codeword) {
  if (next_ >= end_) return false;
  if (gen_->rows() == 0) {
    codeword.assign(gen_->cols(), 0);
  } else {
    codeword = vec_mul(message_, *gen_);
  }
  ++next_;
  const Elem q = gen_->field()->size();
  for (auto& d : message_) {
    if (++d < q) break;
    d = 0;
  }
  return true;
}

}  // namespace cyclrc
