#include <doctest.h>

#include "folclass/derivation.hpp"
#include "folclass/enumerator.hpp"
#include "folclass/error.hpp"
#include "folclass/parse.hpp"
#include "naive_gf2.hpp"

using namespace folclass;

namespace {

DerivationTriple triple(LieCase c, const FieldSpec& F, const char* a, const char* b, const char* cc) {
  return {c, parse_poly_literal(a, F), parse_poly_literal(b, F), parse_poly_literal(cc, F)};
}

Poly P(const FieldSpec& F, const char* text) { return parse_poly_literal(text, F); }

}  // namespace

TEST_SUITE("derivation") {

TEST_CASE("Lie cases") {
  CHECK(LieCase::I().alpha_sq() == Square::Zero);
  CHECK(LieCase::I().beta_sq() == Square::Zero);
  CHECK(LieCase::II().alpha_sq() == Square::Alpha);
  CHECK(LieCase::II().beta_sq() == Square::Beta);
  CHECK(LieCase::III().alpha_sq() == Square::Alpha);
  CHECK(LieCase::III().beta_sq() == Square::Zero);
  CHECK(LieCase::IV().alpha_sq() == Square::Beta);
  CHECK(LieCase::IV().beta_sq() == Square::Zero);
  CHECK(LieCase::parse("III") == LieCase::III());
  CHECK(LieCase::parse("IV").name() == "IV");
  CHECK_THROWS_AS(LieCase::parse("V"), ParseError);
}

TEST_CASE("construction rules") {
  const FieldSpec& F4 = FieldSpec::get(2, 2);
  CHECK_THROWS_AS(triple(LieCase::I(), F4, "0", "0", "0"), DomainError);
  const FieldSpec& F3 = FieldSpec::get(3, 1);
  CHECK_THROWS_AS(triple(LieCase::I(), F3, "1", "t", "0"), DomainError);
  CHECK_THROWS_AS(DerivationTriple(LieCase::I(), P(F4, "1"), P(FieldSpec::get(2, 3), "t"), P(F4, "0")),
                  FieldMismatchError);
}

TEST_CASE("delta squared examples") {
  const FieldSpec& F4 = FieldSpec::get(2, 2);
  const FieldSpec& F2 = FieldSpec::get(2, 1);
  const auto d = triple(LieCase::II(), F4, "1", "t", "t^2+t");
  const SquaredDerivation expected{P(F4, "1"), P(F4, "t"), P(F4, "t^2+t")};
  CHECK(delta_squared(d) == expected);
  CHECK(oracle_delta_squared(d) == expected);

  const SquaredDerivation zero2{Poly(F2), Poly(F2), Poly(F2)};
  CHECK(delta_squared(triple(LieCase::IV(), F2, "1", "t", "1")) == zero2);
  CHECK(delta_squared(triple(LieCase::I(), F2, "t", "t+1", "0")) == zero2);
  const SquaredDerivation tt{Poly(F2), Poly(F2), P(F2, "t")};
  CHECK(delta_squared(triple(LieCase::I(), F2, "0", "0", "t")) == tt);
  CHECK(oracle_delta_squared(triple(LieCase::I(), F2, "0", "0", "t")) == tt);
}

TEST_CASE("delta squared agrees with the operator-word oracle on all GF(2) triples") {
  const FieldSpec& F2 = FieldSpec::get(2, 1);
  for (auto tag : LieCase::all())
    enumerate_triples(F2, tag, [](const DerivationTriple& d) {
      REQUIRE(delta_squared(d) == oracle_delta_squared(d));
    });
}

TEST_CASE("conditions C1 and C2") {
  const FieldSpec& F2 = FieldSpec::get(2, 1);
  CHECK(satisfies_c1(triple(LieCase::I(), F2, "1", "t", "0")));
  CHECK_FALSE(satisfies_c1(triple(LieCase::I(), F2, "t", "t^2", "t^3")));
  CHECK(satisfies_c1(triple(LieCase::I(), F2, "t", "t+1", "0")));
  CHECK(satisfies_c2(triple(LieCase::II(), F2, "1", "t", "t^2+t")));
  CHECK_FALSE(satisfies_c2(triple(LieCase::II(), F2, "1", "1", "t")));
  CHECK_FALSE(satisfies_c2(triple(LieCase::II(), F2, "0", "1", "t^4")));
}

TEST_CASE("p-closedness and multiplier") {
  const FieldSpec& F4 = FieldSpec::get(2, 2);
  auto r = is_p_closed(triple(LieCase::II(), F4, "1", "t", "t^2+t"));
  CHECK(r.closed);
  REQUIRE(r.multiplier);
  CHECK(*r.multiplier == P(F4, "1"));

  CHECK_FALSE(is_p_closed(triple(LieCase::II(), F4, "1", "t", "0")).closed);

  r = is_p_closed(triple(LieCase::I(), F4, "1", "t", "0"));
  CHECK(r.closed);
  REQUIRE(r.multiplier);
  CHECK(r.multiplier->is_zero());

  // Closed but not primitive: no multiplier is reported.
  r = is_p_closed(triple(LieCase::I(), F4, "t", "t", "0"));
  CHECK(r.closed);
  CHECK_FALSE(r.multiplier);
}

TEST_CASE("multiplier reproduces delta squared for every valid GF(4) triple") {
  const FieldSpec& F4 = FieldSpec::get(2, 2);
  for (auto tag : LieCase::all())
    enumerate_triples(F4, tag, [](const DerivationTriple& d) {
      if (!is_valid_foliation(d)) return;
      const auto r = is_p_closed(d);
      REQUIRE(r.multiplier);
      const auto sq = delta_squared(d);
      CHECK(sq.A == *r.multiplier * d.a());
      CHECK(sq.B == *r.multiplier * d.b());
      CHECK(sq.C == *r.multiplier * d.c());
    });
}

TEST_CASE("validity examples") {
  const FieldSpec& F2 = FieldSpec::get(2, 1);
  CHECK(is_valid_foliation(triple(LieCase::I(), F2, "1", "t", "0")));
  CHECK(is_valid_foliation(triple(LieCase::III(), F2, "t", "1", "t^2")));
  CHECK_FALSE(is_valid_foliation(triple(LieCase::II(), F2, "1", "1", "1")));
  const auto v = violated_conditions(triple(LieCase::II(), F2, "1", "1", "1"));
  // delta^2 = (1, 1, 0) is not proportional to (1, 1, 1) either.
  REQUIRE(v.size() == 2);
  CHECK(v[0].rfind("C2", 0) == 0);
  CHECK(v[1].rfind("C3", 0) == 0);
  const auto w = violated_conditions(triple(LieCase::I(), F2, "t", "t", "t^3"));
  REQUIRE(w.size() >= 1);
  CHECK(w[0].rfind("C1", 0) == 0);
  CHECK(violated_conditions(triple(LieCase::I(), F2, "1", "t", "0")).empty());
}

TEST_CASE("validity agrees with first-principles reference over GF(4)") {
  const FieldSpec& F4 = FieldSpec::get(2, 2);
  const auto ref = naive::gf4();
  for (auto tag : LieCase::all()) {
    const int n = static_cast<int>(tag) + 1;
    std::uint64_t accepted = 0;
    enumerate_triples(F4, tag, [&](const DerivationTriple& d) {
      auto raw = [](const Poly& f) { return naive::P(f.raw_coeffs().begin(), f.raw_coeffs().end()); };
      const bool expected = naive::valid(ref, n, raw(d.a()), raw(d.b()), raw(d.c()));
      REQUIRE(is_valid_foliation(d) == expected);
      accepted += expected;
    });
    CHECK(accepted == 180);
  }
}

TEST_CASE("scaling covariance of delta squared over GF(4)") {
  const FieldSpec& F4 = FieldSpec::get(2, 2);
  for (auto tag : LieCase::all())
    enumerate_triples(F4, tag, [&](const DerivationTriple& d) {
      const auto sq = delta_squared(d);
      for (const auto& l : enumerate_elements(F4)) {
        if (l.is_zero()) continue;
        const auto scaled = scale(l, d);
        const auto l2 = l * l;
        REQUIRE(delta_squared(scaled) == SquaredDerivation{sq.A.scale(l2), sq.B.scale(l2), sq.C.scale(l2)});
        REQUIRE(is_valid_foliation(scaled) == is_valid_foliation(d));
      }
    });
}

TEST_CASE("chart at infinity") {
  const FieldSpec& F2 = FieldSpec::get(2, 1);
  auto v = chart_at_infinity(triple(LieCase::II(), F2, "1", "t", "t^2+t"));
  CHECK(v.a_bar.numerator == P(F2, "t"));  // printed in t, read as s
  CHECK(v.b_bar.numerator == P(F2, "1"));
  CHECK(v.c_bar.numerator == P(F2, "t+t^2"));
  CHECK(v.regular);
  CHECK(v.nonvanishing_at_s0);

  v = chart_at_infinity(triple(LieCase::II(), F2, "1", "1", "t"));
  CHECK(v.regular);
  CHECK_FALSE(v.nonvanishing_at_s0);

  v = chart_at_infinity(triple(LieCase::II(), F2, "0", "0", "t^4"));
  CHECK_FALSE(v.regular);
  CHECK(v.c_bar.pole_order == 1);
}

TEST_CASE("C2 matches chart regularity and nonvanishing over GF(4)") {
  const FieldSpec& F4 = FieldSpec::get(2, 2);
  enumerate_triples(F4, LieCase::I(), [](const DerivationTriple& d) {
    const auto v = chart_at_infinity(d);
    REQUIRE(satisfies_c2(d) == (v.regular && v.nonvanishing_at_s0));
  });
}

TEST_CASE("scale") {
  const FieldSpec& F4 = FieldSpec::get(2, 2);
  const auto d = triple(LieCase::I(), F4, "1", "t", "0");
  CHECK(scale(F4.one(), d) == d);
  CHECK(scale(F4.generator(), d) == triple(LieCase::I(), F4, "u", "u*t", "0"));
  CHECK_THROWS_AS(scale(F4.zero(), d), DomainError);
}

TEST_CASE("printing") {
  const FieldSpec& F4 = FieldSpec::get(2, 2);
  CHECK(triple(LieCase::II(), F4, "1", "t", "t^2+t").to_string() == "(1, t, t^2+t)");
}

}
