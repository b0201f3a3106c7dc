#pragma once

#include <boost/container/small_vector.hpp>
#include <climits>
#include <compare>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "folclass/finite_field.hpp"

namespace folclass {

/// Degree of a univariate polynomial. The zero polynomial has degree -infinity, which orders
/// below every integer.
class Degree {
 public:
  constexpr Degree(int d) : d_(d) {}  // NOLINT: implicit from int is intended
  static constexpr Degree neg_inf() { return Degree(kNegInf); }

  constexpr bool is_neg_inf() const { return d_ == kNegInf; }
  /// Integer value; -1 for the zero polynomial when a loop bound is wanted.
  constexpr int value_or_minus_one() const { return is_neg_inf() ? -1 : d_; }
  constexpr int value() const { return d_; }

  friend constexpr auto operator<=>(Degree, Degree) = default;
  friend constexpr bool operator==(Degree, Degree) = default;

  std::string to_string() const { return is_neg_inf() ? "-inf" : std::to_string(d_); }

 private:
  static constexpr int kNegInf = INT_MIN;
  int d_;
};

/// Univariate polynomial over a finite field, immutable value type, canonical (no trailing
/// zero coefficients). Index i of the coefficient list is the coefficient of t^i.
class Poly {
 public:
  using Value = FieldSpec::Value;
  using Storage = boost::container::small_vector<Value, 8>;

  explicit Poly(const FieldSpec& field) : field_(&field) {}
  Poly(const FieldSpec& field, std::initializer_list<Value> coeffs);
  Poly(const FieldSpec& field, Storage coeffs);
  explicit Poly(std::span<const FieldElement> coeffs, const FieldSpec& field);

  static Poly constant(const FieldElement& c);
  /// c * t^n
  static Poly monomial(const FieldElement& c, unsigned n);
  /// The polynomial t - root.
  static Poly linear_factor(const FieldElement& root);

  const FieldSpec& field() const noexcept { return *field_; }
  Degree degree() const noexcept {
    return coeffs_.empty() ? Degree::neg_inf() : Degree(static_cast<int>(coeffs_.size()) - 1);
  }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  std::size_t size() const noexcept { return coeffs_.size(); }

  /// Coefficient of t^i (zero beyond the degree).
  FieldElement coeff(std::size_t i) const;
  Value raw(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
  const Storage& raw_coeffs() const noexcept { return coeffs_; }
  /// Leading coefficient; zero for the zero polynomial.
  FieldElement leading() const;
  FieldElement constant_term() const { return coeff(0); }

  Poly operator+(const Poly& g) const;
  Poly operator-(const Poly& g) const;
  Poly operator*(const Poly& g) const;
  Poly operator-() const;
  Poly scale(const FieldElement& c) const;

  FieldElement eval(const FieldElement& x) const;
  Poly derivative() const;
  Poly monic() const;
  /// f(t + c)
  Poly compose_with_affine(const FieldElement& c) const;
  /// Image under the canonical embedding of coefficients into `target`.
  Poly embed(const FieldSpec& target) const;

  /// Printed in the literal grammar, e.g. "t^2+u*t+1", "(u+1)*t", "0".
  std::string to_string(std::string_view var = "t") const;

  friend bool operator==(const Poly& f, const Poly& g) noexcept {
    return f.field_ == g.field_ && f.coeffs_ == g.coeffs_;
  }

 private:
  void canonicalize() noexcept;
  const FieldSpec* field_;
  Storage coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Poly& f);

inline Poly operator*(const FieldElement& c, const Poly& f) { return f.scale(c); }

/// Euclidean division: f = q*g + r with deg r < deg g. Throws DivisionByZeroError for g = 0.
std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g);

inline Poly formal_derivative(const Poly& f) { return f.derivative(); }

/// Monic gcd; gcd(f, 0) = monic(f). Throws DomainError for gcd(0, 0).
Poly gcd(const Poly& f, const Poly& g);

/// Characteristic 2 only: f is a square iff every odd-exponent coefficient vanishes.
bool is_perfect_square(const Poly& f);

/// Characteristic 2 only: the unique g with g^2 = f. Throws DomainError for non-squares.
Poly poly_sqrt(const Poly& f);

struct ExtensionRoot {
  FieldElement value;     // lives in GF(q^ext_degree)
  unsigned ext_degree;    // least m with the root in GF(q^m)
  unsigned multiplicity;
};

/// All roots of f lying in GF(q^m) for some m dividing lcm(1..max_ext), found by exhaustive
/// evaluation in increasing m. Each root is reported once, in its smallest such field, ordered
/// by (ext_degree, packed value). Throws DomainError for f = 0.
std::vector<ExtensionRoot> roots_in_extension(const Poly& f, unsigned max_ext);

/// lcm(1, ..., n)
unsigned lcm_upto(unsigned n);

}  // namespace folclass
