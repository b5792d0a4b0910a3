#include <doctest.h>

#include <random>

#include "cyclrc/cyclic.hpp"
#include "oracles.hpp"

using namespace cyclrc;

namespace {

DefiningSet random_set(int n, std::mt19937_64& rng) {
  std::vector<long long> v;
  for (int i = 0; i < n; ++i) {
    if (rng() % 3 == 0) v.push_back(i);
  }
  return DefiningSet(n, v);
}

}  // namespace

TEST_CASE("defining set normalization") {
  DefiningSet z(9, {-1, 10, 1, 0, 18});
  CHECK(z.exponents() == std::vector<int>{0, 1, 8});
  CHECK(z.contains(-8));
  CHECK(z.negated().exponents() == std::vector<int>{0, 1, 8});
  CHECK(DefiningSet::residue_class(12, 3, -1).exponents() == std::vector<int>{2, 5, 8, 11});
  CHECK(DefiningSet::progression(9, 7, 2, 3).exponents() == std::vector<int>{0, 2, 7});
  CHECK(z.complement().size() == 6);
}

TEST_CASE("conjugacy closure") {
  CHECK(conjugacy_closure(DefiningSet::empty(9), 8).empty());
  CHECK(conjugacy_closure(DefiningSet(9, {1}), 8).exponents() == std::vector<int>{1, 8});
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    auto z = random_set(12, rng);
    CHECK(conjugacy_closure(z, 13) == z);
  }
  CHECK(conjugacy_closure(DefiningSet(7, {1}), 2).exponents() == std::vector<int>{1, 2, 4});
}

TEST_CASE("closure is idempotent and monotone; for n | q+1 it equals negation symmetry") {
  std::mt19937_64 rng(2);
  for (auto [q, n] : {std::pair{8, 9}, {7, 8}, {27, 28}}) {
    for (int trial = 0; trial < 200; ++trial) {
      auto z = random_set(n, rng);
      auto c = conjugacy_closure(z, q);
      CHECK(conjugacy_closure(c, q) == c);
      CHECK(z.minus(c).empty());
      CHECK((c == z) == (z.negated() == z));
    }
  }
}

TEST_CASE("BCH bound edge cases and brute-force agreement") {
  CHECK(bch_lower_bound(DefiningSet::empty(9)) == 1);
  CHECK(bch_lower_bound(DefiningSet::full(9).minus(DefiningSet(9, {0}))) == 9);
  CHECK(bch_lower_bound(DefiningSet::full(9)) == 10);
  CHECK(bch_lower_bound(DefiningSet(1, {0})) == 2);
  std::mt19937_64 rng(3);
  for (int n : {5, 9, 12, 15, 28, 33, 65}) {
    for (int trial = 0; trial < 40; ++trial) {
      auto z = random_set(n, rng);
      if (trial % 4 == 0) z = z.united(DefiningSet::progression(n, rng() % n, 1 + rng() % (n - 1), n / 2));
      CHECK(bch_lower_bound(z) == oracle::brute_bch(z.exponents(), n));
      auto run = bch_best_run(z);
      if (run.length > 0) {
        CHECK(z.contains(run.start));
        CHECK(z.contains(run.start + static_cast<long long>(run.length - 1) * run.step));
      }
    }
  }
}

TEST_CASE("BCH bound of the 64-ary (2,4) example defining set") {
  std::vector<long long> exps;
  for (int i = 14; i <= 32; ++i) {
    exps.push_back(i);
    exps.push_back(-i);
  }
  for (int i = 0; i < 65; ++i) {
    if (i % 5 == 0 || i % 5 == 1 || i % 5 == 4) exps.push_back(i);
  }
  DefiningSet z(65, exps);
  CHECK(z.size() == 53);
  CHECK(bch_lower_bound(z) == 39);
  auto code = build_cyclic_code(64, 65, z);
  CHECK(code.dimension() == 12);
  CHECK(code.splitting_degree() == 2);
}

TEST_CASE("trivial and zero codes") {
  auto full = build_cyclic_code(8, 9, DefiningSet::empty(9));
  CHECK(full.dimension() == 9);
  CHECK(full.generator_poly() == Poly::constant(full.base_field(), 1));
  CHECK(full.generator_matrix() == Matrix::identity(full.base_field(), 9));
  CHECK(min_distance_exhaustive(full, {.cap = 1u << 30}).distance == 1);

  auto zero = dual_code(full);
  CHECK(zero.dimension() == 0);
  CHECK(zero.defining_set() == DefiningSet::full(9));
  CHECK(zero.generator_poly() == Poly::x_pow_minus_one(zero.base_field(), 9));
  CHECK(min_distance_exhaustive(zero).distance == 10);
  CHECK(dual_code(zero).defining_set().empty());
}

TEST_CASE("build errors") {
  try {
    build_cyclic_code(8, 12, DefiningSet::empty(12));
    FAIL("expected LengthNotCoprime");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LengthNotCoprime);
  }
  try {
    build_cyclic_code(8, 9, DefiningSet(9, {1}));
    FAIL("expected NotConjugacyClosed");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotConjugacyClosed);
    CHECK(std::string(e.what()).find("exponent 1") != std::string::npos);
  }
}

TEST_CASE("q=8, n=9 code with Z = {0,3,4,5,6}") {
  auto code = build_cyclic_code(8, 9, DefiningSet(9, {0, 3, 6, 4, 5}));
  CHECK(code.dimension() == 4);
  CHECK(code.generator_poly().degree() == 5);
  const auto& g = code.generator_matrix();
  const auto& h = code.parity_check_matrix();
  CHECK(g.rank() == 4);
  CHECK(h.rank() == 5);
  CHECK((g * h.transpose()).is_zero());
  auto [quot, rem] = poly_divrem(Poly::x_pow_minus_one(code.base_field(), 9), code.generator_poly());
  CHECK(rem.is_zero());

  const int brute = oracle::brute_min_distance(g);
  auto res = min_distance_exhaustive(code, {.weight_distribution = true});
  CHECK(brute == 5);
  CHECK(res.distance == brute);
  CHECK(code.contains(res.witness));
  int wt = 0;
  for (Elem e : res.witness) wt += e != 0;
  CHECK(wt == 5);
  std::uint64_t total = 0;
  for (auto c : res.weights) total += c;
  CHECK(total == 4096);

  auto dual = dual_code(code);
  CHECK(dual.dimension() == 5);
  CHECK((dual.generator_matrix() * g.transpose()).is_zero());
  CHECK(dual.generator_matrix().row_basis() == h.row_basis());
  CHECK(dual_code(dual).defining_set() == code.defining_set());
  const int d_dual = min_distance_exhaustive(dual).distance;
  CHECK(d_dual == 3);
  CHECK(d_dual == oracle::brute_min_distance(dual.generator_matrix()));
}

TEST_CASE("q=13, n=12 code from a residue class and a run") {
  auto z = DefiningSet::residue_class(12, 3, 0).united(DefiningSet::progression(12, 0, 1, 7));
  auto code = build_cyclic_code(13, 12, z);
  CHECK(code.dimension() == 4);
  CHECK(code.splitting_degree() == 1);
  auto res = min_distance_exhaustive(code);
  CHECK(res.distance == 8);
  CHECK(res.distance == oracle::brute_min_distance(code.generator_matrix()));
}

TEST_CASE("weight distribution matches a brute-force histogram") {
  std::mt19937_64 rng(9);
  for (auto [q, n] : {std::pair{4, 5}, {8, 9}, {5, 6}, {3, 8}, {2, 15}}) {
    for (int trial = 0; trial < 4; ++trial) {
      auto z = conjugacy_closure(random_set(n, rng), q);
      auto code = build_cyclic_code(q, n, z);
      if (search_space(q, code.dimension()) > 200000) continue;
      std::vector<std::uint64_t> hist(n + 1, 0);
      CodewordEnumerator it(code.generator_matrix());
      std::vector<Elem> w;
      while (it.next(w)) {
        int wt = 0;
        for (Elem e : w) wt += e != 0;
        ++hist[wt];
      }
      for (unsigned jobs : {1u, 3u}) {
        auto res = min_distance_exhaustive(code, {.weight_distribution = true, .jobs = jobs});
        CHECK(res.weights == hist);
        CHECK(res.distance == oracle::brute_min_distance(code.generator_matrix()));
      }
    }
  }
}

TEST_CASE("codeword enumeration") {
  auto zero = build_cyclic_code(8, 9, DefiningSet::full(9));
  CodewordEnumerator z(zero.generator_matrix());
  std::vector<Elem> w;
  REQUIRE(z.next(w));
  CHECK(w == std::vector<Elem>(9, 0));
  CHECK_FALSE(z.next(w));

  auto code = build_cyclic_code(8, 9, conjugacy_closure(DefiningSet(9, {0, 1, 2, 3}), 8));
  REQUIRE(code.dimension() == 2);
  CodewordEnumerator all(code.generator_matrix());
  CHECK(all.total() == 64);
  std::vector<std::vector<Elem>> seen;
  while (all.next(w)) {
    CHECK(code.contains(w));
    seen.push_back(w);
  }
  CHECK(seen.size() == 64);
  std::vector<std::vector<Elem>> parts;
  for (std::uint64_t b = 0; b < 64; b += 10) {
    CodewordEnumerator part(code.generator_matrix(), b, b + 10);
    while (part.next(w)) parts.push_back(w);
  }
  CHECK(parts == seen);
}

TEST_CASE("search cap") {
  auto code = build_cyclic_code(64, 65, DefiningSet::empty(65));
  try {
    min_distance_exhaustive(code);
    FAIL("expected SearchSpaceTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SearchSpaceTooLarge);
  }
  CHECK(search_space(64, 65) == std::numeric_limits<std::uint64_t>::max());
}
