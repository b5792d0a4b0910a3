#include "cyclrc/cli.hpp"

#include <cstdlib>
#include <ostream>
#include <random>
#include <sstream>

#include "cyclrc/parallel.hpp"
#include "cyclrc/repair.hpp"
#include "cyclrc/serialize.hpp"

namespace cyclrc::cli {

namespace {

template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const nlohmann::json::exception& e) {
    err << "error: bad descriptor: " << e.what() << '\n';
    return kParamError;
  }
}

CertifyOptions certify_options(const LrcParams& p, bool exhaustive, std::uint64_t cap, std::uint64_t locality_cap,
                               unsigned jobs) {
  CertifyOptions opts;
  opts.run_exhaustive = exhaustive && cap > 0 && search_space(p.q, static_cast<std::uint64_t>(p.k)) <= cap;
  opts.cap = cap;
  opts.locality.cap = locality_cap;
  opts.jobs = jobs;
  return opts;
}

std::string signed_list(const std::vector<long long>& v, int n) {
  std::vector<long long> e;
  for (long long x : v) e.push_back(x);
  return format_signed(DefiningSet(n, e));
}

std::vector<long long> range(long long lo, long long hi, long long step = 1) {
  std::vector<long long> out;
  for (long long i = lo; i <= hi; i += step) out.push_back(i);
  return out;
}

std::vector<long long> plus_minus(const std::vector<long long>& v, bool with_zero) {
  std::vector<long long> out;
  if (with_zero) out.push_back(0);
  for (long long x : v) {
    out.push_back(x);
    out.push_back(-x);
  }
  return out;
}

std::vector<long long> concat(std::vector<long long> a, const std::vector<long long>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

struct ExampleSpec {
  std::string name;
  LrcParams params;
  /// Expected run D, or the whole defining set for MDS entries.
  std::vector<long long> run;
  std::vector<long long> offsets;
};

std::vector<ExampleSpec> example_specs() {
  using F = Family;
  const LrcParams e12{.q = 64, .n = 65, .k = 12, .r = 2, .delta = 4, .b = 1, .family = F::QPlus1RDelta};
  const LrcParams e14{.q = 64, .n = 65, .k = 14, .r = 2, .delta = 4, .b = 1, .family = F::QPlus1RDelta};
  const LrcParams e16{.q = 64, .n = 65, .k = 16, .r = 2, .delta = 4, .b = 2, .family = F::QPlus1RDelta};
  const LrcParams e18{.q = 64, .n = 65, .k = 18, .r = 2, .delta = 4, .b = 2, .family = F::QPlus1RDelta};
  const LrcParams e49a{.q = 49, .n = 50, .k = 15, .r = 5, .delta = 6, .b = 1, .family = F::QPlus1RDelta};
  const LrcParams e49b{.q = 49, .n = 50, .k = 28, .r = 7, .delta = 4, .b = 1, .family = F::QPlus1RDelta};
  const LrcParams e27{.q = 27, .n = 28, .k = 8, .r = 4, .delta = 4, .b = 1, .family = F::QPlus1RDelta};
  LrcParams e27alt = e27;
  e27alt.alternate = true;
  const LrcParams e21{.q = 64, .n = 65, .k = 21, .r = 3, .delta = 3, .b = 2, .family = F::QPlus1RDelta};
  const LrcParams e24{.q = 64, .n = 65, .k = 24, .r = 3, .delta = 3, .b = 2, .family = F::QPlus1RDelta};
  return {
      {"(64,65,2,4,12)", e12, plus_minus(range(14, 32), false), {0, 1, -1}},
      {"(64,65,2,4,14)", e14, plus_minus(range(1, 16), true), {0, 1, -1}},
      {"(64,65,2,4,16) b=2", e16, plus_minus(range(1, 27, 2), false), {0, 2, -2}},
      {"(64,65,2,4,18) b=2", e18, plus_minus(range(2, 22, 2), true), {0, 2, -2}},
      {"(49,50,5,6,15)", e49a, plus_minus(range(1, 12), true), {0, 1, -1, 2, -2}},
      {"(49,50,7,4,28)", e49b, concat(plus_minus(range(19, 24), false), {25}), {0, 1, -1}},
      {"(27,28,4,4,8) zero-centered", e27, plus_minus(range(1, 8), true), {0, 1, -1}},
      {"(27,28,4,4,8) half-centered", e27alt, concat(plus_minus(range(6, 13), false), {14}), {0, 1, -1}},
      {"(64,65,3,3,21) b=2", e21, plus_minus(range(1, 31, 2), false), {1, -1}},
      {"(64,65,3,3,24) b=2", e24, plus_minus(range(2, 26, 2), true), {1, -1}},
      {"mds (8,9,4)", {.q = 8, .n = 9, .k = 4, .family = F::MdsQPlus1}, range(-2, 2), {}},
      {"mds (8,9,5)", {.q = 8, .n = 9, .k = 5, .family = F::MdsQPlus1}, range(3, 6), {}},
      {"r-local (8,9,2,4)", {.q = 8, .n = 9, .k = 4, .r = 2, .b = 1, .family = F::QPlus1RLocal},
       plus_minus({3, 4}, false), {0}},
      {"r-local (8,9,2,2)", {.q = 8, .n = 9, .k = 2, .r = 2, .b = 1, .family = F::QPlus1RLocal},
       plus_minus(range(1, 3), true), {0}},
      {"q-1 (13,12,2,3,4)", {.q = 13, .n = 12, .k = 4, .r = 2, .delta = 3, .b = 1, .family = F::QMinus1},
       range(0, 5), {0, 1}},
      {"(8,9,1,3,2) b=2", {.q = 8, .n = 9, .k = 2, .r = 1, .delta = 3, .b = 2, .family = F::QPlus1RDelta},
       plus_minus({2, 4}, true), {1, -1}},
  };
}

DefiningSet as_set(int n, const std::vector<long long>& v) { return DefiningSet(n, v); }

}  // namespace

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::SearchSpaceTooLarge:
    case ErrorCode::SizeCapExceeded:
      return kSearchCap;
    default:
      return kParamError;
  }
}

std::uint64_t default_search_cap() {
  if (const char* env = std::getenv("CYCLRC_SEARCH_CAP")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultSearchCap;
}

int cmd_construct(const ConstructArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto lrc = construct(args.params);
    auto opts = certify_options(lrc.params, args.exhaustive, args.cap, args.locality_cap, args.jobs);
    if (args.strict) {
      opts.run_exhaustive = true;
      opts.locality.method = LocalityMethod::Exhaustive;
    }
    const auto cert = certify(lrc, opts);
    if (args.human) {
      out << "recipe: " << lrc.plan.recipe << '\n';
      out << "Z (" << lrc.code.defining_set().size() << "): " << format_signed(lrc.code.defining_set()) << '\n';
      out << "D (" << lrc.plan.run_set.size() << "): " << format_signed(lrc.plan.run_set) << '\n';
      if (!lrc.plan.offsets.empty()) out << "locality cosets mod " << lrc.plan.rho << ": " << signed_list(lrc.plan.offsets, lrc.plan.rho) << '\n';
      out << "k=" << lrc.code.dimension() << " bch=" << cert.bch_bound << " bound=" << cert.singleton_bound
          << " d_exhaustive=" << (cert.d_exhaustive ? std::to_string(*cert.d_exhaustive) : "-")
          << " locality=" << (cert.locality.verdict ? "ok" : "FAIL") << '\n';
      out << (cert.verdict ? "optimal" : "NOT certified") << '\n';
    } else {
      out << lrc_descriptor(lrc, &cert).dump(2) << '\n';
    }
    if (!cert.verdict) {
      err << "certification failed\n";
      return static_cast<int>(kCertFailure);
    }
    return static_cast<int>(kOk);
  });
}

int cmd_certify(const CertifyArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Json d = Json::parse(args.descriptor_json);
    const auto params = params_from_descriptor(d);
    const auto lrc = construct(params);
    const auto stored_z = d.at("defining_set").get<std::vector<int>>();
    if (lrc.code.defining_set().exponents() != stored_z) {
      err << "stored defining set differs from the reconstructed one\n";
      return static_cast<int>(kCertFailure);
    }
    const bool has_stored = d.contains("certificate") && !d["certificate"].is_null();
    // Replay the exhaustive scan exactly when the stored certificate has one.
    bool exhaustive = args.exhaustive;
    if (has_stored) exhaustive = !d["certificate"]["d_exhaustive"].is_null();
    auto opts = certify_options(params, exhaustive, args.cap, args.locality_cap, args.jobs);
    if (has_stored && exhaustive) opts.run_exhaustive = true;
    const auto cert = certify(lrc, opts);
    const Json fresh = to_json(cert);
    out << fresh.dump(2) << '\n';
    if (has_stored && fresh != d["certificate"]) {
      err << "certificate differs from the stored one\n";
      return static_cast<int>(kCertFailure);
    }
    return static_cast<int>(cert.verdict ? kOk : kCertFailure);
  });
}

std::vector<ExampleOutcome> run_examples() {
  std::vector<ExampleOutcome> outcomes;
  for (const auto& ex : example_specs()) {
    ExampleOutcome o;
    o.name = ex.name;
    try {
      const auto& p = ex.params;
      const auto lrc = p.family == Family::MdsQPlus1 ? construct_mds_lrc(p.q, p.n, p.k) : construct(p);
      const auto cert = certify(lrc);
      std::ostringstream detail;
      bool ok = cert.verdict && static_cast<int>(lrc.code.defining_set().size()) == p.n - p.k;
      if (p.family == Family::MdsQPlus1) {
        ok = ok && lrc.code.defining_set() == as_set(p.n, ex.run);
        detail << "Z=" << format_signed(lrc.code.defining_set());
      } else {
        DefiningSet expected = as_set(p.n, ex.run);
        for (long long m : ex.offsets) {
          expected = expected.united(DefiningSet::residue_class(p.n, lrc.plan.rho, static_cast<int>(((m % lrc.plan.rho) + lrc.plan.rho) % lrc.plan.rho)));
        }
        ok = ok && lrc.plan.run_set == as_set(p.n, ex.run) && lrc.code.defining_set() == expected;
        detail << lrc.plan.recipe << " D=" << format_signed(lrc.plan.run_set)
               << " L=" << signed_list(lrc.plan.offsets, lrc.plan.rho);
      }
      detail << " d=" << cert.bch_bound;
      o.pass = ok;
      o.detail = detail.str();
    } catch (const Error& e) {
      o.pass = false;
      o.detail = e.what();
    }
    outcomes.push_back(std::move(o));
  }
  return outcomes;
}

int cmd_examples(std::ostream& out) {
  bool all = true;
  for (const auto& o : run_examples()) {
    out << (o.pass ? "PASS " : "FAIL ") << o.name << "  " << o.detail << '\n';
    all = all && o.pass;
  }
  return all ? kOk : kCertFailure;
}

int cmd_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto tuples = feasible_parameters(args.q, args.max_n);
    std::vector<std::string> rows(tuples.size());
    std::vector<std::string> failures(tuples.size());
    std::vector<int> codes(tuples.size(), kOk);
    parallel_for(tuples.size(), args.jobs, [&](std::size_t i) {
      const auto& p = tuples[i];
      try {
        const auto lrc = construct(p);
        const auto cert = certify(lrc, certify_options(p, true, args.cap, args.locality_cap, 1));
        rows[i] = csv_row(lrc, cert);
        const bool agree = !cert.d_exhaustive || *cert.d_exhaustive == cert.bch_bound;
        if (!cert.verdict || !agree) codes[i] = kCertFailure;
      } catch (const Error& e) {
        failures[i] = e.what();
        codes[i] = exit_code_for(e.code());
      }
    });
    out << csv_header() << '\n';
    int code = kOk;
    for (std::size_t i = 0; i < tuples.size(); ++i) {
      if (!rows[i].empty()) out << rows[i] << '\n';
      if (!failures[i].empty()) err << "n=" << tuples[i].n << " k=" << tuples[i].k << ": " << failures[i] << '\n';
      if (codes[i] != kOk && code == kOk) code = codes[i];
    }
    return code;
  });
}

int cmd_repair_demo(const RepairDemoArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto lrc = construct(args.params);
    const auto& field = *lrc.code.base_field();
    const int n = lrc.params.n, k = lrc.params.k;
    std::vector<Elem> message(static_cast<std::size_t>(k));
    if (args.message) {
      const auto w = parse_word(*args.message, field);
      if (static_cast<int>(w.size()) != k) throw Error(ErrorCode::ParamDomain, "message must have k symbols");
      for (int i = 0; i < k; ++i) {
        if (!w[static_cast<std::size_t>(i)]) throw Error(ErrorCode::ParamDomain, "message cannot contain erasures");
        message[static_cast<std::size_t>(i)] = *w[static_cast<std::size_t>(i)];
      }
    } else {
      std::mt19937_64 rng(args.seed);
      for (auto& m : message) m = static_cast<Elem>(rng() % field.size());
    }
    const auto codeword = encode(lrc.code, message);
    const Word received = with_erasures(to_word(codeword), args.erasures);
    out << "code: q=" << lrc.params.q << " n=" << n << " k=" << k << " r=" << lrc.params.r
        << " delta=" << lrc.params.delta << " " << lrc.plan.recipe << '\n';
    out << "message:  " << format_word(to_word(message)) << '\n';
    out << "codeword: " << format_word(to_word(codeword)) << '\n';
    out << "received: " << format_word(received) << '\n';

    Word repaired = received;
    const LocalRepairer repairer(lrc);
    std::vector<bool> erased(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) erased[static_cast<std::size_t>(i)] = !received[static_cast<std::size_t>(i)];
    std::vector<int> per_group(static_cast<std::size_t>(lrc.groups.num_groups), 0);
    for (int c : erased_positions(received)) ++per_group[static_cast<std::size_t>(lrc.groups.group_of(c))];

    bool need_global = false;
    for (int c : erased_positions(received)) {
      const int g = lrc.groups.group_of(c);
      out << "coord " << c << " group " << g << ": ";
      if (per_group[static_cast<std::size_t>(g)] > lrc.params.delta - 1) {
        out << "local impossible (" << per_group[static_cast<std::size_t>(g)] << " erasures in group)\n";
        need_global = true;
        continue;
      }
      std::vector<int> reads;
      const auto fixed = repairer.repair_group(c, erased, [&](int coord) {
        reads.push_back(coord);
        return received[static_cast<std::size_t>(coord)];
      });
      const Elem v = fixed.at(c);
      repaired[static_cast<std::size_t>(c)] = v;
      out << "local, read";
      for (int rd : reads) out << ' ' << rd;
      out << " -> " << format_word(Word{v}) << (v == codeword[static_cast<std::size_t>(c)] ? " ok" : " WRONG") << '\n';
    }
    int code = kOk;
    if (need_global) {
      try {
        const auto decoded = global_erasure_decode(lrc.code, repaired);
        out << "global decode: " << (decoded == codeword ? "ok" : "WRONG") << '\n';
        repaired = to_word(decoded);
      } catch (const Error& e) {
        out << "global decode: failed (" << e.what() << ")\n";
        code = exit_code_for(e.code());
      }
    }
    out << "repaired: " << format_word(repaired) << '\n';
    out << "cost: " << to_json(repair_cost(lrc, args.erasures)).dump() << '\n';
    if (code == kOk && repaired != to_word(codeword)) code = kCertFailure;
    return code;
  });
}

int cmd_params(std::uint64_t q, int max_n, std::ostream& out) {
  out << "n\tk\tr\tdelta\tb\tfamily\tvariant\trecipe\n";
  for (const auto& p : feasible_parameters(q, max_n)) {
    const auto plan = plan_construction(p);
    out << p.n << '\t' << p.k << '\t' << p.r << '\t' << p.delta << '\t' << plan.b << '\t' << to_string(p.family) << '\t'
        << (p.alternate ? "alternate" : "default") << '\t' << plan.recipe << '\n';
  }
  return kOk;
}

}  // namespace cyclrc::cli
