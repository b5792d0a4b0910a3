#include "cyclrc/constructions.hpp"

#include <numeric>
#include <string>

namespace cyclrc {

namespace {

[[noreturn]] void domain(const std::string& what) { throw Error(ErrorCode::ParamDomain, what); }

std::string tuple_str(const LrcParams& p) {
  return "(q=" + std::to_string(p.q) + ", n=" + std::to_string(p.n) + ", k=" + std::to_string(p.k) +
         ", r=" + std::to_string(p.r) + ", delta=" + std::to_string(p.delta) + ")";
}

bool is_prime_power(std::uint64_t q) { return q >= 2 && prime_factors(q).size() == 1; }

int ceil_div(int a, int b) { return (a + b - 1) / b; }

enum class Shape { ZeroCentered, HalfCentered, PairHalf, PairOffset };

std::string_view shape_name(Shape s) {
  switch (s) {
    case Shape::ZeroCentered: return "zero-centered";
    case Shape::HalfCentered: return "half-centered";
    case Shape::PairHalf: return "pair-half";
    case Shape::PairOffset: return "pair-offset";
  }
  return "";
}

std::vector<long long> run_for_shape(Shape shape, int n, int b, int len) {
  std::vector<long long> run;
  switch (shape) {
    case Shape::ZeroCentered:
      run.push_back(0);
      for (int t = 1; t <= (len - 1) / 2; ++t) {
        run.push_back(static_cast<long long>(t) * b);
        run.push_back(-static_cast<long long>(t) * b);
      }
      break;
    case Shape::HalfCentered:
      run.push_back(n / 2);
      for (int t = 1; t <= (len - 1) / 2; ++t) {
        run.push_back(n / 2 + static_cast<long long>(t) * b);
        run.push_back(n / 2 - static_cast<long long>(t) * b);
      }
      break;
    case Shape::PairHalf:
      for (int t = 0; t < len / 2; ++t) {
        const long long e = (n - b) / 2 - static_cast<long long>(t) * b;
        run.push_back(e);
        run.push_back(-e);
      }
      break;
    case Shape::PairOffset:
      for (int t = 0; t < len / 2; ++t) {
        const long long e = b / 2 + static_cast<long long>(t) * b;
        run.push_back(e);
        run.push_back(-e);
      }
      break;
  }
  return run;
}

void finish_plan(RecipePlan& plan, int n, int k) {
  std::vector<long long> cosets;
  for (long long m : plan.offsets) {
    const auto coset = DefiningSet::residue_class(n, plan.rho, m);
    cosets.insert(cosets.end(), coset.exponents().begin(), coset.exponents().end());
  }
  plan.locality_union = DefiningSet(n, cosets);
  plan.run_set = DefiningSet(n, plan.run);
  if (plan.run_set.size() != plan.run.size()) domain("run exponents collide mod n");
  plan.defining_set = plan.locality_union.united(plan.run_set);
  if (static_cast<int>(plan.defining_set.size()) != n - k) {
    domain("defining set has " + std::to_string(plan.defining_set.size()) + " zeros, expected " +
           std::to_string(n - k));
  }
}

RecipePlan plan_mds(const LrcParams& p) {
  const int n = p.n, k = p.k;
  if ((p.q + 1) % static_cast<std::uint64_t>(n) != 0) domain("n must divide q+1");
  if (k <= 1 || k >= n) domain("MDS dimension must satisfy 1 < k < n");
  const bool q_odd = p.q % 2 == 1;
  if (q_odd && n % 2 == 0 && k % 2 == 0) {
    throw Error(ErrorCode::NonexistentMDS,
                "no cyclic MDS code of length " + std::to_string(n) + " and dimension " + std::to_string(k) +
                    " over GF(" + std::to_string(p.q) + ") with this zero structure (n, k even)");
  }
  const bool both = q_odd && n % 2 == 0;
  if (p.alternate && !both) domain("the shifted MDS variant applies only for q odd, n even, k odd");
  RecipePlan plan;
  plan.b = 1;
  plan.mu = 1;
  plan.rho = n;
  const bool centered = k % 2 == 0 || (both && !p.alternate);
  if (centered) {
    const int h = (n - 1 - k) / 2;
    for (int i = -h; i <= h; ++i) plan.run.push_back(i);
    plan.recipe = "mds-centered";
  } else {
    for (int i = (k + 1) / 2; i <= (2 * n - 1 - k) / 2; ++i) plan.run.push_back(i);
    plan.recipe = "mds-shifted";
  }
  finish_plan(plan, n, k);
  return plan;
}

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::QMinus1: return "qminus1";
    case Family::QPlus1RLocal: return "qplus1-rlocal";
    case Family::QPlus1RDelta: return "qplus1-rdelta";
    case Family::MdsQPlus1: return "mds";
  }
  return "";
}

Family parse_family(std::string_view tag) {
  for (Family f : {Family::QMinus1, Family::QPlus1RLocal, Family::QPlus1RDelta, Family::MdsQPlus1}) {
    if (to_string(f) == tag) return f;
  }
  domain("unknown family '" + std::string(tag) + "'");
}

int singleton_bound_r_local(int n, int k, int r) { return n - k - ceil_div(k, r) + 2; }

int singleton_bound_r_delta(int n, int k, int r, int delta) {
  return n - k + 1 - (ceil_div(k, r) - 1) * (delta - 1);
}

RecipePlan plan_construction(const LrcParams& p) {
  if (!is_prime_power(p.q)) throw Error(ErrorCode::NotPrime, std::to_string(p.q) + " is not a prime power");
  if (p.n < 2) domain("n must be at least 2");
  if (p.k < 1 || p.k >= p.n) domain("k must satisfy 1 <= k < n");
  if (std::gcd(static_cast<std::uint64_t>(p.n), p.q) != 1) domain("n must be coprime to q");
  if (p.family == Family::MdsQPlus1) return plan_mds(p);

  const int n = p.n, k = p.k, r = p.r, delta = p.delta;
  if (r < 1) domain("r must be at least 1");
  if (delta < 2) domain("delta must be at least 2");
  const int rho = r + delta - 1;
  if (n % rho != 0) domain("r + delta - 1 = " + std::to_string(rho) + " must divide n = " + std::to_string(n));
  const int nu = n / rho;
  const int mu = ceil_div(k, r);
  if (mu > nu) domain("ceil(k/r) = " + std::to_string(mu) + " exceeds the group count " + std::to_string(nu));
  const int run_len = n - k - (mu - 1) * (delta - 1);

  RecipePlan plan;
  plan.mu = mu;
  plan.rho = rho;

  if (p.family == Family::QMinus1) {
    if ((p.q - 1) % static_cast<std::uint64_t>(n) != 0) domain("n must divide q-1");
    if (p.alternate) domain("no alternate variant for this family");
    const int b = p.b == 0 ? 1 : p.b;
    if (b < 1 || std::gcd(b, n) != 1) domain("step b must be positive and coprime to n");
    plan.b = b;
    if (p.offsets) {
      plan.offsets = *p.offsets;
      if (static_cast<int>(plan.offsets.size()) != delta - 1) domain("expected delta-1 locality offsets");
      for (std::size_t j = 1; j < plan.offsets.size(); ++j) {
        if (plan.offsets[j] - plan.offsets[j - 1] != b) domain("locality offsets must step by b");
      }
    } else {
      for (int j = 0; j < delta - 1; ++j) plan.offsets.push_back(static_cast<long long>(j) * b);
    }
    if (plan.offsets.front() < 0 || plan.offsets.back() > rho - 1) {
      throw Error(ErrorCode::ProgressionOutOfRange,
                  "offsets " + std::to_string(plan.offsets.front()) + ".." + std::to_string(plan.offsets.back()) +
                      " leave [0, " + std::to_string(rho - 1) + "]");
    }
    for (int s = 0; s < run_len; ++s) plan.run.push_back(plan.offsets.front() + static_cast<long long>(s) * b);
    plan.recipe = "qminus1-progression";
    finish_plan(plan, n, k);
    return plan;
  }

  if ((p.q + 1) % static_cast<std::uint64_t>(n) != 0) domain("n must divide q+1");
  if (p.family == Family::QPlus1RLocal && delta != 2) domain("the r-local family requires delta = 2");
  if (p.offsets) domain("explicit offsets are supported only for the q-1 family");
  const bool odd_delta = delta % 2 == 1;
  const int b = p.b == 0 ? (odd_delta ? 2 : 1) : p.b;
  if (b < 1 || std::gcd(b, n) != 1) domain("step b must be positive and coprime to n");
  plan.b = b;
  const bool n_odd = n % 2 == 1;
  const bool mu_even = mu % 2 == 0;
  const auto no_case = [&](const std::string& why) {
    throw Error(ErrorCode::NoMatchingCase, "no recipe for " + tuple_str(p) + ": " + why);
  };

  Shape shape{};
  bool alternate_applies = false;
  if (odd_delta) {
    if (!n_odd) no_case("odd delta needs odd n");
    if (b % 2 != 0) no_case("odd delta needs an even step b");
    for (int t = 0; t <= (delta - 3) / 2; ++t) {
      const long long m = b / 2 + static_cast<long long>(t) * b;
      if (m > rho - 1) {
        throw Error(ErrorCode::ProgressionOutOfRange, "offset " + std::to_string(m) + " exceeds " + std::to_string(rho - 1));
      }
      plan.offsets.push_back(m);
      plan.offsets.push_back(-m);
    }
    shape = mu_even ? Shape::ZeroCentered : Shape::PairOffset;
  } else {
    plan.offsets.push_back(0);
    for (int t = 1; t <= (delta - 2) / 2; ++t) {
      const long long m = static_cast<long long>(t) * b;
      if (m > rho - 1) {
        throw Error(ErrorCode::ProgressionOutOfRange, "offset " + std::to_string(m) + " exceeds " + std::to_string(rho - 1));
      }
      plan.offsets.push_back(m);
      plan.offsets.push_back(-m);
    }
    if (n_odd) {
      if (b % 2 == 1) {
        shape = mu_even ? Shape::PairHalf : Shape::ZeroCentered;
      } else {
        shape = mu_even ? Shape::PairOffset : Shape::ZeroCentered;
      }
    } else if (nu % 2 == 1) {
      shape = mu_even ? Shape::HalfCentered : Shape::ZeroCentered;
    } else {
      if (!mu_even) no_case("n and the group count are even while ceil(k/r) is odd");
      alternate_applies = true;
      shape = p.alternate ? Shape::HalfCentered : Shape::ZeroCentered;
    }
  }
  if (p.alternate && !alternate_applies) domain("the n/2-centered variant does not apply to " + tuple_str(p));

  // The centered shapes hold an odd number of zeros, the paired ones an even
  // number; when r does not divide k this is the admissibility condition.
  const bool need_odd = shape == Shape::ZeroCentered || shape == Shape::HalfCentered;
  if ((run_len % 2 == 1) != need_odd) {
    domain("run length " + std::to_string(run_len) + " has the wrong parity for the " +
           std::string(shape_name(shape)) + " run of " + tuple_str(p));
  }
  plan.run = run_for_shape(shape, n, b, run_len);
  plan.recipe = std::string(p.family == Family::QPlus1RLocal ? "rlocal-" : "rdelta-") + std::string(shape_name(shape));
  finish_plan(plan, n, k);
  return plan;
}

namespace {

LrcCode assemble(const LrcParams& params) {
  RecipePlan plan = plan_construction(params);
  LrcParams p = params;
  if (p.b == 0) p.b = plan.b;
  std::vector<DefiningSet> cosets;
  for (long long m : plan.offsets) cosets.push_back(DefiningSet::residue_class(p.n, plan.rho, m));
  auto code = build_cyclic_code(p.q, p.n, plan.defining_set);
  auto groups = repair_groups(p.n, p.r, p.delta);
  const int target = singleton_bound_r_delta(p.n, p.k, p.r, p.delta);
  return LrcCode{std::move(code), p, std::move(plan), std::move(cosets), std::move(groups), target};
}

void require_family(const LrcParams& p, Family f) {
  if (p.family != f) domain("constructor called with family " + std::string(to_string(p.family)));
}

}  // namespace

LrcCode construct_q_minus_1(const LrcParams& params) {
  require_family(params, Family::QMinus1);
  return assemble(params);
}

LrcCode construct_r_local_q_plus_1(const LrcParams& params) {
  require_family(params, Family::QPlus1RLocal);
  return assemble(params);
}

LrcCode construct_r_delta_q_plus_1(const LrcParams& params) {
  require_family(params, Family::QPlus1RDelta);
  return assemble(params);
}

CyclicCode construct_mds_q_plus_1(std::uint64_t q, int n, int k, bool shifted) {
  return construct_mds_lrc(q, n, k, shifted).code;
}

LrcCode construct_mds_lrc(std::uint64_t q, int n, int k, bool shifted) {
  LrcParams p;
  p.q = q;
  p.n = n;
  p.k = k;
  p.r = k;
  p.delta = n - k + 1;
  p.b = 1;
  p.family = Family::MdsQPlus1;
  p.alternate = shifted;
  return assemble(p);
}

LrcCode construct(const LrcParams& params) {
  if (params.family == Family::MdsQPlus1) return construct_mds_lrc(params.q, params.n, params.k, params.alternate);
  return assemble(params);
}

OptimalityCertificate certify(const LrcCode& lrc, const CertifyOptions& opts) {
  const auto& p = lrc.params;
  const auto& z = lrc.code.defining_set();
  OptimalityCertificate cert;
  cert.dims_ok = static_cast<int>(z.size()) == p.n - p.k && lrc.code.dimension() == p.k;
  cert.bch_bound = bch_lower_bound(z);
  cert.singleton_bound =
      p.delta == 2 ? singleton_bound_r_local(p.n, p.k, p.r) : singleton_bound_r_delta(p.n, p.k, p.r, p.delta);
  cert.d_exact_by_sandwich = cert.bch_bound == cert.singleton_bound;
  LocalityOptions lopts = opts.locality;
  lopts.jobs = std::max(lopts.jobs, opts.jobs);
  cert.locality = verify_r_delta_locality(lrc.code, p.r, p.delta, lopts);
  if (opts.run_exhaustive) {
    cert.d_exhaustive = min_distance_exhaustive(lrc.code, {.cap = opts.cap, .jobs = opts.jobs}).distance;
  }
  cert.verdict = cert.dims_ok && cert.d_exact_by_sandwich && cert.locality.verdict;
  return cert;
}

std::vector<LrcParams> feasible_parameters(std::uint64_t q, int max_n) {
  std::vector<LrcParams> out;
  auto accept = [&](const LrcParams& p) {
    try {
      plan_construction(p);
    } catch (const Error&) {
      return;
    }
    out.push_back(p);
  };
  for (int n = 2; n <= max_n; ++n) {
    const bool minus = (q - 1) % static_cast<std::uint64_t>(n) == 0;
    const bool plus = (q + 1) % static_cast<std::uint64_t>(n) == 0;
    for (Family fam : {Family::QMinus1, Family::QPlus1RLocal, Family::QPlus1RDelta}) {
      if (fam == Family::QMinus1 ? !minus : !plus) continue;
      for (int delta = 2; delta <= n; ++delta) {
        if ((fam == Family::QPlus1RLocal) != (delta == 2) && fam != Family::QMinus1) continue;
        for (int r = 1; r + delta - 1 <= n; ++r) {
          if (n % (r + delta - 1) != 0) continue;
          for (int k = 1; k < n; ++k) {
            for (int b : {1, 2}) {
              for (bool alt : {false, true}) {
                if (alt && fam == Family::QMinus1) continue;
                LrcParams p;
                p.q = q;
                p.n = n;
                p.k = k;
                p.r = r;
                p.delta = delta;
                p.b = b;
                p.family = fam;
                p.alternate = alt;
                accept(p);
              }
            }
          }
        }
      }
    }
    if (plus) {
      for (int k = 2; k < n; ++k) {
        for (bool alt : {false, true}) {
          LrcParams p;
          p.q = q;
          p.n = n;
          p.k = k;
          p.r = k;
          p.delta = n - k + 1;
          p.b = 1;
          p.family = Family::MdsQPlus1;
          p.alternate = alt;
          accept(p);
        }
      }
    }
  }
  return out;
}

}  // namespace cyclrc
