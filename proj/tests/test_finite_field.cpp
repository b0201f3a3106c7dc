#include <doctest.h>

#include <map>
#include <utility>

#include "folclass/error.hpp"
#include "folclass/finite_field.hpp"
#include "naive_gf2.hpp"

using namespace folclass;

TEST_SUITE("finite_field") {

TEST_CASE("canonical moduli are the least irreducibles") {
  CHECK(FieldSpec::canonical_modulus(2, 2) == std::vector<unsigned>{1, 1, 1});
  CHECK(FieldSpec::canonical_modulus(2, 3) == std::vector<unsigned>{1, 1, 0, 1});
  CHECK(FieldSpec::canonical_modulus(2, 4) == std::vector<unsigned>{1, 1, 0, 0, 1});
  CHECK(FieldSpec::canonical_modulus(3, 2) == std::vector<unsigned>{1, 0, 1});
  CHECK(FieldSpec::get(2, 3).name() == "GF(8)");
  CHECK(FieldSpec::get(3, 1).name() == "GF(3)");
}

TEST_CASE("fields are interned") {
  CHECK(&FieldSpec::get(2, 2) == &FieldSpec::get(2, 2));
  CHECK(&FieldSpec::with_modulus(2, {1, 1, 0, 1}) == &FieldSpec::get(2, 3));
  const FieldSpec& alt = FieldSpec::with_modulus(2, {1, 0, 1, 1});
  CHECK(&alt != &FieldSpec::get(2, 3));
  CHECK(alt.name() == "GF(8;mod=x3+x2+1)");
  CHECK_FALSE(alt.is_canonical());
}

TEST_CASE("reducible modulus is rejected") {
  CHECK_THROWS_AS(FieldSpec::with_modulus(2, {1, 0, 1}), DomainError);  // (x+1)^2
  CHECK_THROWS_AS(FieldSpec::with_modulus(3, {2, 0, 1}), DomainError);  // x^2-1
  CHECK(FieldSpec::is_irreducible(2, std::vector<unsigned>{1, 1, 1}));
  CHECK_FALSE(FieldSpec::is_irreducible(2, std::vector<unsigned>{0, 1, 1}));
}

TEST_CASE("multiplication agrees with reference arithmetic") {
  for (auto ref : {naive::gf2(), naive::gf4(), naive::gf8(), naive::gf16()}) {
    const FieldSpec& F = FieldSpec::get(2, ref.k);
    for (std::uint32_t x = 0; x < F.order(); ++x)
      for (std::uint32_t y = 0; y < F.order(); ++y) {
        REQUIRE(F.mul(x, y) == ref.mul(x, y));
        REQUIRE(F.add(x, y) == (x ^ y));
      }
  }
}

TEST_CASE("field axioms hold exhaustively") {
  for (auto [p, k] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 2u}, {5u, 1u}, {7u, 1u}}) {
    const FieldSpec& F = FieldSpec::get(p, k);
    const auto els = enumerate_elements(F);
    REQUIRE(els.size() == F.order());
    for (const auto& x : els) {
      CHECK(x + F.zero() == x);
      CHECK(x * F.one() == x);
      CHECK(x + (-x) == F.zero());
      if (!x.is_zero()) CHECK(x * x.inv() == F.one());
      CHECK(x.pow(F.order()) == x);
      CHECK(x.pth_root().frobenius() == x);
      for (const auto& y : els) {
        CHECK(x * y == y * x);
        CHECK(x - y == x + (-y));
        for (const auto& z : els) CHECK(x * (y + z) == x * y + x * z);
      }
    }
  }
}

TEST_CASE("nonzero elements form a cyclic group of order q-1") {
  const FieldSpec& F = FieldSpec::get(2, 4);
  bool found_generator = false;
  for (const auto& x : enumerate_elements(F)) {
    if (x.is_zero()) continue;
    unsigned order = 1;
    for (auto y = x; !y.is_one(); y *= x) ++order;
    CHECK(15 % order == 0);
    found_generator = found_generator || order == 15;
  }
  CHECK(found_generator);
}

TEST_CASE("errors") {
  const FieldSpec& F4 = FieldSpec::get(2, 2);
  const FieldSpec& F8 = FieldSpec::get(2, 3);
  CHECK_THROWS_AS(F4.one() + F8.one(), FieldMismatchError);
  CHECK_THROWS_AS(F4.zero().inv(), DivisionByZeroError);
  CHECK_THROWS_AS(F4.one() / F4.zero(), DivisionByZeroError);
  CHECK_THROWS_AS(FieldSpec::get(4, 1), DomainError);
}

TEST_CASE("element printing") {
  const FieldSpec& F4 = FieldSpec::get(2, 2);
  CHECK(F4.element(0).to_string() == "0");
  CHECK(F4.element(1).to_string() == "1");
  CHECK(F4.element(2).to_string() == "u");
  CHECK(F4.element(3).to_string() == "u+1");
  const FieldSpec& F9 = FieldSpec::get(3, 2);
  CHECK(F9.element(7).to_string() == "2*u+1");
  CHECK(F9.from_integer(-1) == F9.element(2));
}

TEST_CASE("u satisfies its modulus") {
  for (auto [p, k] : {std::pair{2u, 2u}, {2u, 3u}, {2u, 4u}, {3u, 2u}}) {
    const FieldSpec& F = FieldSpec::get(p, k);
    const auto& m = F.modulus();
    FieldElement acc = F.zero();
    for (std::size_t i = 0; i < m.size(); ++i)
      acc += F.from_integer(m[i]) * F.generator().pow(i);
    CHECK(acc.is_zero());
  }
}

TEST_CASE("embeddings are ring homomorphisms") {
  for (auto [k, m] : {std::pair{1u, 2u}, {1u, 3u}, {2u, 4u}, {2u, 6u}, {3u, 6u}}) {
    const FieldSpec& src = FieldSpec::get(2, k);
    const FieldSpec& dst = FieldSpec::get(2, m);
    for (const auto& x : enumerate_elements(src)) {
      CHECK(&embed(x, dst).field() == &dst);
      for (const auto& y : enumerate_elements(src)) {
        CHECK(embed(x * y, dst) == embed(x, dst) * embed(y, dst));
        CHECK(embed(x + y, dst) == embed(x, dst) + embed(y, dst));
      }
    }
    CHECK(embed(src.one(), dst).is_one());
  }
  CHECK_THROWS_AS(embedding_image(FieldSpec::get(2, 2), FieldSpec::get(2, 3)), DomainError);
}

TEST_CASE("subfield degree") {
  const FieldSpec& F2 = FieldSpec::get(2, 1);
  const FieldSpec& F64 = FieldSpec::get(2, 6);
  std::map<unsigned, unsigned> counts;
  for (const auto& x : enumerate_elements(F64)) ++counts[subfield_degree(x, F2, 6)];
  CHECK(counts[1] == 2);
  CHECK(counts[2] == 2);
  CHECK(counts[3] == 6);
  CHECK(counts[6] == 54);
  CHECK(&extension_of(FieldSpec::get(2, 2), 3) == &F64);
}

TEST_CASE("worked examples") {
  const FieldSpec& F4 = FieldSpec::get(2, 2);
  const auto u = F4.generator();
  CHECK(u * (u + F4.one()) == F4.one());
  CHECK(pth_root(u) == u + F4.one());
  CHECK(pth_root(F4.zero()).is_zero());
  CHECK(F4.one().inv().is_one());
  for (const auto& x : enumerate_elements(FieldSpec::get(2, 3))) CHECK((x + x).is_zero());
  const auto els2 = enumerate_elements(FieldSpec::get(2, 1));
  CHECK(els2.size() == 2);
  CHECK(els2[0].is_zero());
  CHECK(els2[1].is_one());
  const FieldSpec& F16 = FieldSpec::get(2, 4);
  const auto img = embedding_image(F4, F16);
  CHECK((img * img + img + F16.one()).is_zero());
}

TEST_CASE("frobenius is additive") {
  for (unsigned k : {1u, 2u, 3u}) {
    const auto els = enumerate_elements(FieldSpec::get(2, k));
    for (const auto& x : els)
      for (const auto& y : els) CHECK((x + y).frobenius() == x.frobenius() + y.frobenius());
  }
}

}
