#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <string>

#include "folclass/finite_field.hpp"

namespace folclass {

/// Nonnegative dyadic rational numerator / 2^shift, kept reduced (numerator odd or shift 0).
class Dyadic {
 public:
  constexpr Dyadic() = default;
  Dyadic(std::int64_t numerator, unsigned shift);

  std::int64_t numerator() const noexcept { return num_; }
  unsigned shift() const noexcept { return shift_; }
  bool is_zero() const noexcept { return num_ == 0; }

  Dyadic operator+(const Dyadic& other) const;
  Dyadic half() const { return Dyadic(num_, shift_ + 1); }

  /// "1", "3", "1/2", "3/4"
  std::string to_string() const;

  friend bool operator==(const Dyadic&, const Dyadic&) = default;
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

 private:
  std::int64_t num_ = 0;
  unsigned shift_ = 0;
};

/// s^alpha t^beta with dyadic exponents.
struct SymbolicMonomial {
  Dyadic s;
  Dyadic t;
  friend bool operator==(const SymbolicMonomial&, const SymbolicMonomial&) = default;
  friend std::strong_ordering operator<=>(const SymbolicMonomial& a, const SymbolicMonomial& b) {
    if (auto c = a.s <=> b.s; c != 0) return c;
    return a.t <=> b.t;
  }
};

/// Formal GF(2)-linear combination of monomials s^alpha t^beta, alpha and beta dyadic. Models
/// the perfect closure of GF(2)(s, t) with s and t independent non-squares. Closed under
/// addition, multiplication and square roots (which halve every exponent).
class SymbolicCoeff {
 public:
  SymbolicCoeff() = default;

  static SymbolicCoeff zero() { return {}; }
  static SymbolicCoeff one() { return monomial({Dyadic(0, 0), Dyadic(0, 0)}); }
  static SymbolicCoeff s() { return monomial({Dyadic(1, 0), Dyadic(0, 0)}); }
  static SymbolicCoeff t() { return monomial({Dyadic(0, 0), Dyadic(1, 0)}); }
  static SymbolicCoeff monomial(const SymbolicMonomial& m);

  const std::set<SymbolicMonomial>& monomials() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_one() const noexcept;

  SymbolicCoeff operator+(const SymbolicCoeff& other) const;
  SymbolicCoeff operator*(const SymbolicCoeff& other) const;
  SymbolicCoeff sqrt() const;

  /// Substitute concrete values for s and t in a characteristic-2 field. Dyadic exponents are
  /// realized through iterated square roots.
  FieldElement specialize(const FieldElement& s_value, const FieldElement& t_value) const;

  /// "1", "s^(1/2)", "s*t^(3/4)", sums joined with " + ".
  std::string to_string() const;

  friend bool operator==(const SymbolicCoeff&, const SymbolicCoeff&) = default;

 private:
  void toggle(const SymbolicMonomial& m);
  std::set<SymbolicMonomial> terms_;
};

inline SymbolicCoeff one_like(const SymbolicCoeff&) { return SymbolicCoeff::one(); }
/// Only p = 2 is meaningful for the symbolic ring.
SymbolicCoeff coeff_pth_root(const SymbolicCoeff& x, unsigned p);
inline std::string coeff_to_string(const SymbolicCoeff& x) { return x.to_string(); }

}  // namespace folclass
