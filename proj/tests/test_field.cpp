#include <doctest.h>

#include <random>
#include <set>

#include "cyclrc/field.hpp"
#include "oracles.hpp"

using namespace cyclrc;

TEST_CASE("make_field rejects bad input") {
  CHECK_THROWS_AS(make_field(4, 1), Error);
  CHECK_THROWS_AS(make_field(2, 21), Error);
  try {
    make_field(9, 1);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPrime);
  }
  try {
    make_field(2, 21);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SizeCapExceeded);
  }
  CHECK_THROWS_AS(field_of_order(12), Error);
}

TEST_CASE("prime field GF(2)") {
  auto f = make_field(2, 1);
  CHECK(f->size() == 2);
  CHECK(f->generator() == 1);
}

TEST_CASE("generator orders by repeated multiplication") {
  for (auto [p, m] : {std::pair{2u, 6u}, {7u, 2u}, {2u, 12u}, {3u, 5u}, {13u, 1u}}) {
    auto f = make_field(p, m);
    CHECK(oracle::order_by_powering(*f, f->generator()) == f->size() - 1);
  }
}

TEST_CASE("identical inputs give identical contexts") {
  auto a = make_field(2, 6);
  auto b = make_field(2, 6);
  CHECK(a == b);
  CHECK(a->modulus() == b->modulus());
}

TEST_CASE("canonical modulus is the least monic irreducible") {
  for (auto [p, m] : {std::pair{2u, 2u}, {2u, 3u}, {2u, 4u}, {2u, 6u}, {3u, 2u}, {3u, 3u},
                      {5u, 2u}, {7u, 2u}, {2u, 8u}}) {
    auto f = make_field(p, m);
    const auto& mod = f->modulus();
    REQUIRE(mod.size() == m + 1);
    CHECK(mod.back() == 1);
    CHECK(oracle::is_irreducible_by_trial_division(mod, p));
    CHECK(oracle::least_irreducible(p, m) == mod);
  }
}

TEST_CASE("multiplication agrees with schoolbook reduction") {
  for (auto [p, m] : {std::pair{2u, 4u}, {3u, 3u}, {7u, 2u}, {2u, 8u}, {5u, 3u}}) {
    auto f = make_field(p, m);
    for (Elem a = 0; a < f->size(); ++a) {
      for (Elem b = 0; b < f->size(); ++b) {
        REQUIRE(f->mul(a, b) == oracle::schoolbook_mul(*f, a, b));
        REQUIRE(f->add(a, b) == oracle::digitwise_add(*f, a, b));
      }
    }
  }
}

TEST_CASE("field axioms hold exhaustively for small fields") {
  for (std::uint64_t q : {2, 3, 4, 5, 8, 9, 16, 25, 27, 32, 49, 64, 81, 121, 125, 128}) {
    auto f = field_of_order(q);
    for (Elem a = 0; a < q; ++a) {
      if (a != 0) REQUIRE(f->mul(a, f->inv(a)) == 1);
      REQUIRE(f->add(a, f->neg(a)) == 0);
      for (Elem b = 0; b < q; ++b) {
        REQUIRE(f->mul(a, b) == f->mul(b, a));
        for (Elem c = 0; c < q; ++c) {
          REQUIRE(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
          REQUIRE(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
          REQUIRE(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
        }
      }
    }
  }
}

TEST_CASE("field axioms on larger fields up to 512") {
  for (std::uint64_t q : {243, 256, 343, 512}) {
    auto f = field_of_order(q);
    for (Elem a = 1; a < q; ++a) REQUIRE(f->mul(a, f->inv(a)) == 1);
    for (Elem a = 0; a < q; ++a) {
      for (Elem b = 0; b < q; ++b) {
        for (Elem c = 0; c < q; c += 7) {
          REQUIRE(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
          REQUIRE(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
        }
      }
    }
  }
}

TEST_CASE("generator^k == 1 iff (q-1) | k") {
  for (std::uint64_t q : {4, 7, 8, 9, 16, 27, 64, 125, 512}) {
    auto f = field_of_order(q);
    Elem x = 1;
    for (std::uint64_t k = 0; k <= 2 * (q - 1); ++k) {
      REQUIRE((x == 1) == (k % (q - 1) == 0));
      x = f->mul(x, f->generator());
    }
  }
}

TEST_CASE("splitting_order") {
  CHECK(splitting_order(13, 12) == 1);
  CHECK(splitting_order(64, 65) == 2);
  CHECK(splitting_order(8, 9) == 2);
  CHECK(splitting_order(2, 7) == 3);
  try {
    splitting_order(8, 6);
    FAIL("expected NotCoprime");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotCoprime);
  }
}

TEST_CASE("nth_root_of_unity") {
  auto f13 = make_field(13, 1);
  CHECK(nth_root_of_unity(f13, 1).value() == 1);
  CHECK(nth_root_of_unity(f13, 12).value() == f13->generator());
  CHECK_THROWS_AS(nth_root_of_unity(f13, 5), Error);

  auto ext = Field::extension(make_field(2, 6), 2);
  auto alpha = nth_root_of_unity(ext, 65);
  CHECK(alpha.pow(65) == FieldElement(ext, 1));
  CHECK_FALSE(alpha.pow(13) == FieldElement(ext, 1));
  CHECK_FALSE(alpha.pow(5) == FieldElement(ext, 1));
  CHECK(oracle::order_by_powering(*ext, alpha.value()) == 65);
}

TEST_CASE("subfield membership of GF(q^2) over GF(q)") {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 16, 27, 32, 64}) {
    auto base = field_of_order(q);
    auto ext = Field::extension(base, 2);
    std::size_t fixed = 0;
    for (Elem x = 0; x < ext->size(); ++x) {
      const bool frob = ext->pow(x, q) == x;
      REQUIRE(in_base_subfield(FieldElement(ext, x)) == frob);
      fixed += frob;
    }
    CHECK(fixed == q);
  }
  auto ext = Field::extension(make_field(2, 6), 2);
  auto alpha = nth_root_of_unity(ext, 65);
  CHECK(in_base_subfield(FieldElement(ext, 0)));
  CHECK_FALSE(in_base_subfield(alpha));
  CHECK(in_base_subfield(alpha + alpha.inverse()));
  CHECK_THROWS_AS(in_base_subfield(FieldElement(make_field(2, 6), 3)), Error);
}

TEST_CASE("embedding is a ring homomorphism and round-trips") {
  auto base = make_field(2, 3);
  auto ext = Field::extension(base, 2);
  CHECK(embed_base(FieldElement(base, 0), ext).value() == 0);
  CHECK(embed_base(FieldElement(base, 1), ext).value() == 1);
  for (Elem a = 0; a < 8; ++a) {
    for (Elem b = 0; b < 8; ++b) {
      FieldElement x(base, a), y(base, b);
      CHECK(embed_base(x + y, ext) == embed_base(x, ext) + embed_base(y, ext));
      CHECK(embed_base(x * y, ext) == embed_base(x, ext) * embed_base(y, ext));
    }
    CHECK(project_base(embed_base(FieldElement(base, a), ext)) == FieldElement(base, a));
  }
  CHECK_THROWS_AS(embed_base(FieldElement(base, 1), make_field(2, 6)), Error);
}

TEST_CASE("higher-degree extension embedding") {
  auto base = make_field(3, 1);
  auto ext = Field::extension(base, 3);
  std::size_t fixed = 0;
  for (Elem x = 0; x < ext->size(); ++x) fixed += ext->in_base(x);
  CHECK(fixed == 3);
  auto b4 = make_field(2, 2);
  auto e4 = Field::extension(b4, 3);
  for (Elem a = 0; a < 4; ++a) {
    for (Elem b = 0; b < 4; ++b) {
      CHECK(e4->embed(b4->mul(a, b)) == e4->mul(e4->embed(a), e4->embed(b)));
    }
  }
}

TEST_CASE("mixed contexts are rejected") {
  FieldElement a(make_field(2, 3), 1), b(make_field(2, 4), 1);
  try {
    (void)(a + b);
    FAIL("expected MixedContexts");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MixedContexts);
  }
}

TEST_CASE("subfield basis coordinates round-trip") {
  auto ext = Field::extension(make_field(2, 3), 2);
  SubfieldBasis basis(ext);
  CHECK(basis.dimension() == 2);
  std::set<std::vector<Elem>> seen;
  for (Elem x = 0; x < ext->size(); ++x) {
    auto c = basis.coordinates(x);
    REQUIRE(c.size() == 2);
    CHECK(basis.combine(c) == x);
    seen.insert(c);
  }
  CHECK(seen.size() == ext->size());
}
