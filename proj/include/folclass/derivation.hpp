#pragma once

#include <array>
#include <optional>
#include <vector>
#include <string>
#include <string_view>

#include "folclass/finite_field.hpp"
#include "folclass/polynomial.hpp"

namespace folclass {

/// What alpha^2 or beta^2 equals in a Lie case.
enum class Square { Zero, Alpha, Beta };

/// The four normal forms of a commuting pair (alpha, beta) with alpha^2, beta^2 in their span:
///   I:   alpha^2 = beta^2 = 0
///   II:  alpha^2 = alpha, beta^2 = beta
///   III: alpha^2 = alpha, beta^2 = 0
///   IV:  alpha^2 = beta,  beta^2 = 0
class LieCase {
 public:
  enum class Tag { I, II, III, IV };

  constexpr LieCase(Tag tag) : tag_(tag) {}  // NOLINT: implicit from tag is intended

  static constexpr LieCase I() { return Tag::I; }
  static constexpr LieCase II() { return Tag::II; }
  static constexpr LieCase III() { return Tag::III; }
  static constexpr LieCase IV() { return Tag::IV; }
  static constexpr std::array<Tag, 4> all() { return {Tag::I, Tag::II, Tag::III, Tag::IV}; }

  /// "I", "II", "III", "IV"; throws ParseError otherwise.
  static LieCase parse(std::string_view name);

  constexpr Tag tag() const { return tag_; }
  constexpr Square alpha_sq() const {
    return tag_ == Tag::I ? Square::Zero : tag_ == Tag::IV ? Square::Beta : Square::Alpha;
  }
  constexpr Square beta_sq() const { return tag_ == Tag::II ? Square::Beta : Square::Zero; }

  std::string name() const;

  friend constexpr bool operator==(LieCase, LieCase) = default;

 private:
  Tag tag_;
};

/// delta = a(t) alpha + b(t) beta + c(t) d/dt over a field of characteristic 2.
class DerivationTriple {
 public:
  /// Throws DomainError for characteristic != 2 or a = b = c = 0, FieldMismatchError for mixed
  /// fields.
  DerivationTriple(LieCase lie_case, Poly a, Poly b, Poly c);

  LieCase lie_case() const noexcept { return case_; }
  const Poly& a() const noexcept { return a_; }
  const Poly& b() const noexcept { return b_; }
  const Poly& c() const noexcept { return c_; }
  const FieldSpec& field() const noexcept { return a_.field(); }

  DerivationTriple embed(const FieldSpec& target) const;

  /// "(a, b, c)" in the polynomial literal grammar.
  std::string to_string() const;

  friend bool operator==(const DerivationTriple&, const DerivationTriple&) = default;

 private:
  LieCase case_;
  Poly a_, b_, c_;
};

/// The alpha, beta and d/dt components of delta^2.
struct SquaredDerivation {
  Poly A, B, C;
  friend bool operator==(const SquaredDerivation&, const SquaredDerivation&) = default;
};

/// delta^2 = a^2 alpha^2 + b^2 beta^2 + c a' alpha + c b' beta + c c' d/dt, with the case's
/// alpha^2 and beta^2 substituted.
SquaredDerivation delta_squared(const DerivationTriple& d);

/// Independent route to delta^2: composes delta with itself as a noncommutative operator word
/// and normalizes with the Lie relations. Lives in operator_word.cpp.
SquaredDerivation oracle_delta_squared(const DerivationTriple& d);

bool satisfies_c1(const DerivationTriple& d);
bool satisfies_c2(const DerivationTriple& d);

struct PClosedness {
  bool closed = false;
  /// h with delta^2 = h delta, present when closed and C1 holds.
  std::optional<Poly> multiplier;
};

/// delta^2 proportional to delta over k(t): all 2x2 minors of ((A,B,C),(a,b,c)) vanish.
PClosedness is_p_closed(const DerivationTriple& d);
/// Same test driven by a precomputed delta^2 (lets callers swap in the oracle).
PClosedness is_p_closed(const DerivationTriple& d, const SquaredDerivation& sq);

bool is_valid_foliation(const DerivationTriple& d);
/// Validity with delta^2 from oracle_delta_squared.
bool is_valid_foliation_oracle(const DerivationTriple& d);

/// Conditions that fail, e.g. "C2 (deg c = 4 > 3)"; empty when valid.
std::vector<std::string> violated_conditions(const DerivationTriple& d);

/// A component on the chart at infinity: numerator(s) / s^pole_order.
struct ChartComponent {
  Poly numerator;
  unsigned pole_order = 0;
};

/// delta on V1 = P^1 minus {0}, coordinate s = 1/t, with d/dt = s^2 d/ds and the O(1) twist:
/// s a(1/s), s b(1/s), s^3 c(1/s).
struct ChartView {
  ChartComponent a_bar, b_bar, c_bar;
  bool regular = false;
  bool nonvanishing_at_s0 = false;
};

ChartView chart_at_infinity(const DerivationTriple& d);

/// (lambda a, lambda b, lambda c). Throws DomainError for lambda = 0.
DerivationTriple scale(const FieldElement& lambda, const DerivationTriple& d);

}  // namespace folclass
