// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cyclrc/constructions.hpp"
#include "cyclrc/repair.hpp"

using namespace cyclrc;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;
};

std::vector<long long> range(long long lo, long long hi, long long step = 1) {
  std::vector<long long> out;
  for (long long i = lo; i <= hi; i += step) out.push_back(i);
  return out;
}

std::vector<long long> pm(const std::vector<long long>& v, bool zero) {
  std::vector<long long> out;
  if (zero) out.push_back(0);
  for (long long x : v) {
    out.push_back(x);
    out.push_back(-x);
  }
  return out;
}

std::vector<long long> cat(std::vector<long long> a, std::vector<long long> b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

struct WorkedExample {
  LrcParams p;
  std::vector<long long> d;
  std::vector<long long> cosets;
};

// Sets as printed in the worked examples.
std::vector<WorkedExample> worked_examples() {
  const auto rd = Family::QPlus1RDelta;
  LrcParams alt{.q = 27, .n = 28, .k = 8, .r = 4, .delta = 4, .b = 1, .family = rd};
  alt.alternate = true;
  return {
      {{.q = 64, .n = 65, .k = 12, .r = 2, .delta = 4, .b = 1, .family = rd}, pm(range(14, 32), false), {0, 1, -1}},
      {{.q = 64, .n = 65, .k = 14, .r = 2, .delta = 4, .b = 1, .family = rd}, pm(range(1, 16), true), {0, 1, -1}},
      {{.q = 64, .n = 65, .k = 16, .r = 2, .delta = 4, .b = 2, .family = rd}, pm(range(1, 27, 2), false), {0, 2, -2}},
      {{.q = 64, .n = 65, .k = 18, .r = 2, .delta = 4, .b = 2, .family = rd}, pm(range(2, 22, 2), true), {0, 2, -2}},
      {{.q = 49, .n = 50, .k = 15, .r = 5, .delta = 6, .b = 1, .family = rd}, pm(range(1, 12), true),
       {0, 1, -1, 2, -2}},
      {{.q = 49, .n = 50, .k = 28, .r = 7, .delta = 4, .b = 1, .family = rd}, cat(pm(range(19, 24), false), {25}),
       {0, 1, -1}},
      {{.q = 27, .n = 28, .k = 8, .r = 4, .delta = 4, .b = 1, .family = rd}, pm(range(1, 8), true), {0, 1, -1}},
      {alt, cat(pm(range(6, 13), false), {14}), {0, 1, -1}},
      {{.q = 64, .n = 65, .k = 21, .r = 3, .delta = 3, .b = 2, .family = rd}, pm(range(1, 31, 2), false), {1, -1}},
      {{.q = 64, .n = 65, .k = 24, .r = 3, .delta = 3, .b = 2, .family = rd}, pm(range(2, 26, 2), true), {1, -1}},
  };
}

DefiningSet coset(int n, int rho, long long m) {
  return DefiningSet::residue_class(n, rho, static_cast<int>(((m % rho) + rho) % rho));
}

std::string describe(const LrcParams& p) {
  std::ostringstream os;
  os << "(q=" << p.q << " n=" << p.n << " k=" << p.k << " r=" << p.r << " d=" << p.delta << " b=" << p.b << " "
     << to_string(p.family) << (p.alternate ? " alt" : "") << ")";
  return os.str();
}

void fail(Outcome& o, const std::string& why) {
  if (o.pass) o.note = why;
  o.pass = false;
}

const std::vector<std::uint64_t> kSweepFields{4, 5, 7, 8, 9, 11, 13, 16, 27, 49, 64};

std::vector<LrcParams> all_tuples() {
  std::vector<LrcParams> out;
  for (auto q : kSweepFields) {
    for (const auto& p : feasible_parameters(q, 65)) out.push_back(p);
  }
  return out;
}

Outcome criterion1() {
  Outcome o;
  int count = 0;
  for (const auto& ex : worked_examples()) {
    const auto lrc = construct(ex.p);
    const int n = ex.p.n;
    DefiningSet expected(n, ex.d);
    DefiningSet l = DefiningSet::empty(n);
    for (long long m : ex.cosets) l = l.united(coset(n, ex.p.r + ex.p.delta - 1, m));
    if (!(lrc.plan.run_set == expected)) fail(o, describe(ex.p) + " D differs");
    if (!(lrc.code.defining_set() == l.united(expected))) fail(o, describe(ex.p) + " Z differs");
    if (static_cast<int>(lrc.code.defining_set().size()) != n - ex.p.k) fail(o, describe(ex.p) + " |Z| != n-k");
    if (!certify(lrc).verdict) fail(o, describe(ex.p) + " not certified");
    ++count;
  }
  if (o.pass) o.note = std::to_string(count) + " example codes";
  return o;
}

Outcome criterion2(const std::vector<LrcParams>& tuples) {
  Outcome o;
  for (const auto& p : tuples) {
    const auto lrc = construct(p);
    const auto cert = certify(lrc);
    if (cert.bch_bound != cert.singleton_bound) {
      fail(o, describe(p) + " bch " + std::to_string(cert.bch_bound) + " vs bound " + std::to_string(cert.singleton_bound));
    }
    if (!cert.locality.verdict) fail(o, describe(p) + " locality");
    if (!cert.dims_ok) fail(o, describe(p) + " dimension");
  }
  if (o.pass) o.note = std::to_string(tuples.size()) + " tuples over " + std::to_string(kSweepFields.size()) + " fields";
  return o;
}

Outcome criterion3(const std::vector<LrcParams>& tuples) {
  Outcome o;
  int checked = 0;
  for (const auto& p : tuples) {
    if (search_space(p.q, static_cast<std::uint64_t>(p.k)) > 1'000'000) continue;
    const auto lrc = construct(p);
    const int d = min_distance_exhaustive(lrc.code, {.cap = 1'000'000}).distance;
    const int bch = bch_lower_bound(lrc.code.defining_set());
    const int bound = p.delta == 2 ? singleton_bound_r_local(p.n, p.k, p.r) : singleton_bound_r_delta(p.n, p.k, p.r, p.delta);
    if (d != bch || d != bound) fail(o, describe(p) + " exhaustive d=" + std::to_string(d));
    ++checked;
  }
  if (o.pass) o.note = std::to_string(checked) + " tuples with q^k <= 1e6";
  return o;
}

Outcome criterion4(const std::vector<LrcParams>& tuples) {
  Outcome o;
  long exhaustive_groups = 0, other_groups = 0;
  for (const auto& p : tuples) {
    const auto lrc = construct(p);
    const auto cert = verify_r_delta_locality(lrc.code, lrc.params.r, lrc.params.delta, {.cap = 10'000'000});
    for (const auto& g : cert.groups) {
      (g.method == "exhaustive" ? exhaustive_groups : other_groups) += 1;
      if (g.dmin < lrc.params.delta) fail(o, describe(p) + " group distance " + std::to_string(g.dmin));
      if (p.k % lrc.params.r == 0 && (g.dim != lrc.params.r || g.dmin != lrc.params.delta)) {
        fail(o, describe(p) + " local code not [r+delta-1, r, delta]");
      }
    }
  }
  // The largest worked example, every group scanned exhaustively.
  const auto big = construct({.q = 64, .n = 65, .k = 12, .r = 2, .delta = 4, .b = 1, .family = Family::QPlus1RDelta});
  const auto cert = verify_r_delta_locality(big.code, 2, 4, {.method = LocalityMethod::Exhaustive, .cap = 10'000'000});
  if (!cert.verdict || cert.groups.size() != 13) fail(o, "(64,65,2,4,12) exhaustive locality");
  if (o.pass) {
    o.note = std::to_string(exhaustive_groups) + " groups exhaustive, " + std::to_string(other_groups) +
             " beyond 1e7 by sandwich or dual columns";
  }
  return o;
}

Outcome criterion5(const std::vector<LrcParams>& tuples) {
  Outcome o;
  int checked = 0;
  for (const auto& p : tuples) {
    if (p.delta != 2 || p.family == Family::MdsQPlus1) continue;
    if (search_space(p.q, static_cast<std::uint64_t>(p.n - p.k)) > 1'000'000) continue;
    const auto lrc = construct(p);
    const auto& l = lrc.plan.locality_union;
    if (l.minus(l.intersected(lrc.plan.run_set)).size() < 2) continue;
    const int r_star = exact_locality_via_dual(lrc.code, 1'000'000);
    if (r_star != p.r) fail(o, describe(p) + " dual locality " + std::to_string(r_star));
    ++checked;
  }
  if (o.pass) o.note = std::to_string(checked) + " delta=2 tuples";
  return o;
}

Outcome criterion6() {
  Outcome o;
  int scanned = 0, refused = 0;
  for (std::uint64_t q : {4ull, 8ull, 9ull, 11ull, 13ull}) {
    for (int n = 3; n <= static_cast<int>(q) + 1; ++n) {
      if ((q + 1) % static_cast<std::uint64_t>(n) != 0) continue;
      for (int k = 2; k < n; ++k) {
        const bool impossible = q % 2 == 1 && n % 2 == 0 && k % 2 == 0;
        std::ostringstream tag;
        tag << "mds q=" << q << " n=" << n << " k=" << k;
        try {
          const auto code = construct_mds_q_plus_1(q, n, k);
          if (impossible) fail(o, tag.str() + " built in the nonexistence region");
          if (search_space(q, static_cast<std::uint64_t>(k)) <= 1'000'000) {
            const int d = min_distance_exhaustive(code, {.cap = 1'000'000}).distance;
            if (d != n - k + 1) fail(o, tag.str() + " d=" + std::to_string(d));
            ++scanned;
          }
        } catch (const Error& e) {
          if (e.code() != ErrorCode::NonexistentMDS || !impossible) fail(o, tag.str() + " " + e.what());
          ++refused;
        }
      }
    }
  }
  if (o.pass) o.note = std::to_string(scanned) + " scanned, " + std::to_string(refused) + " refused as nonexistent";
  return o;
}

Outcome criterion7() {
  Outcome o;
  const auto lrc = construct({.q = 64, .n = 65, .k = 12, .r = 2, .delta = 4, .b = 1, .family = Family::QPlus1RDelta});
  const LocalRepairer repairer(lrc);
  const Encoder enc(lrc.code);
  std::mt19937_64 rng(2024);
  long repaired = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Elem> msg(12);
    for (auto& m : msg) m = static_cast<Elem>(rng() % 64);
    const auto c = enc.encode(msg);
    for (const auto& group : lrc.groups.groups) {
      for (unsigned mask = 0; mask < 32; ++mask) {
        if (__builtin_popcount(mask) != 3) continue;
        std::vector<bool> erased(65, false);
        int target = -1;
        for (int t = 0; t < 5; ++t) {
          if (mask >> t & 1u) {
            target = group[static_cast<std::size_t>(t)];
            erased[static_cast<std::size_t>(target)] = true;
          }
        }
        bool outside = false;
        const auto fixed = repairer.repair_group(target, erased, [&](int coord) -> std::optional<Elem> {
          if (lrc.groups.group_of(coord) != lrc.groups.group_of(target) || erased[static_cast<std::size_t>(coord)]) {
            outside = true;
            return std::nullopt;
          }
          return c[static_cast<std::size_t>(coord)];
        });
        if (outside) fail(o, "read outside the group or an erased symbol");
        if (fixed.size() != 3) fail(o, "not every erasure repaired");
        for (const auto& [coord, v] : fixed) {
          if (v != c[static_cast<std::size_t>(coord)]) fail(o, "wrong symbol at " + std::to_string(coord));
          ++repaired;
        }
      }
    }
  }
  const auto c = enc.encode(std::vector<Elem>(12, 1));
  const std::vector<int> four{2, 15, 28, 41};
  try {
    local_repair(lrc, with_erasures(to_word(c), four), 2);
    fail(o, "four erasures in a group were repaired locally");
  } catch (const Error& e) {
    if (e.code() != ErrorCode::TooManyLocalErasures) fail(o, e.what());
  }
  if (o.pass) o.note = std::to_string(repaired) + " symbols repaired from in-group reads";
  return o;
}

// Direct set computation, independent of DefiningSet.
bool coset_meets_negation(int n, int m, int l) {
  std::set<int> a, neg;
  for (int i = 0; i < n; ++i) {
    if (i % m == l) {
      a.insert(i);
      neg.insert((n - i) % n);
    }
  }
  for (int x : a) {
    if (neg.count(x)) return true;
  }
  return false;
}

Outcome criterion8() {
  Outcome o;
  int cases = 0;
  for (int n = 2; n <= 100; ++n) {
    for (int r = 2; r + 1 <= n; r += 2) {
      if (n % (r + 1) != 0) continue;
      for (int l = 1; l <= r; ++l) {
        if ((2 * l) % (r + 1) == 0) continue;
        const bool disjoint = !coset_meets_negation(n, r + 1, l);
        if (!disjoint) fail(o, "n=" + std::to_string(n) + " r=" + std::to_string(r) + " l=" + std::to_string(l) + " meets its negation");
        if (shifted_coset_obstruction(n, r, l) != disjoint) fail(o, "library disagrees at n=" + std::to_string(n));
        ++cases;
      }
    }
  }
  int mutated = 0;
  for (const auto& ex : worked_examples()) {
    LrcCode lrc = construct(ex.p);
    const int n = ex.p.n;
    // An element of a locality coset outside the run, dropped with its conjugate.
    int drop = -1;
    for (int e : lrc.plan.locality_union.exponents()) {
      if (e != 0 && !lrc.plan.run_set.contains(e)) {
        drop = e;
        break;
      }
    }
    if (drop < 0) {
      fail(o, describe(ex.p) + " no droppable coset element");
      continue;
    }
    const auto z = lrc.code.defining_set().minus(conjugacy_closure(DefiningSet(n, {drop}), ex.p.q));
    lrc.code = build_cyclic_code(ex.p.q, n, z);
    const auto cert = certify(lrc);
    if (cert.verdict || cert.locality.verdict) fail(o, describe(ex.p) + " mutation still certifies");
    ++mutated;
  }
  if (o.pass) {
    o.note = std::to_string(cases) + " (n,r,l) cases disjoint; " + std::to_string(mutated) + " mutated sets rejected";
  }
  return o;
}

}  // namespace

int main() {
  bool all = true;
  std::vector<LrcParams> tuples;
  auto run = [&](int id, const char* what, double budget_s, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > budget_s) {
      o.pass = false;
      o.note += " (over the " + std::to_string(static_cast<int>(budget_s)) + " s budget)";
    }
    std::printf("%s criterion %d: %s: %s [%.2f s]\n", o.pass ? "PASS" : "FAIL", id, what, o.note.c_str(), secs);
    std::fflush(stdout);
    all = all && o.pass;
  };
  run(1, "worked examples reproduce printed sets", 10, criterion1);
  tuples = all_tuples();
  run(2, "bch equals the Singleton-like bound, locality holds", 120, [&] { return criterion2(tuples); });
  run(3, "exhaustive distance equals the sandwich", 300, [&] { return criterion3(tuples); });
  run(4, "local codes have distance >= delta, MDS when r | k", 120, [&] { return criterion4(tuples); });
  run(5, "dual distance is r+1", 60, [&] { return criterion5(tuples); });
  run(6, "cyclic MDS codes and their nonexistence region", 120, criterion6);
  run(7, "local repair round trip on (64,65,2,4,12)", 60, criterion7);
  run(8, "negative controls", 10, criterion8);
  return all ? 0 : 1;
}
