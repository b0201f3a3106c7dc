#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace folclass {

class FieldElement;

/// A finite field GF(p^k) = GF(p)[u]/(modulus).
///
/// Elements are coefficient vectors in the generator u, packed into an integer as
/// sum c_i p^i. The packed value doubles as the enumeration index, so element order is
/// lexicographic on coefficients (highest power most significant).
///
/// Fields are interned: `get` and `with_modulus` return references that stay valid for the
/// life of the program, and two fields compare equal iff they are the same object.
class FieldSpec {
 public:
  using Value = std::uint32_t;

  /// Field of order p^k with the canonical (lexicographically least) irreducible modulus.
  static const FieldSpec& get(unsigned p, unsigned k);

  /// Field with an explicit modulus, given low-to-high and monic. Throws DomainError if the
  /// modulus is not irreducible over GF(p).
  static const FieldSpec& with_modulus(unsigned p, std::vector<unsigned> modulus);

  /// Least monic irreducible of degree k over GF(p), low-to-high.
  static std::vector<unsigned> canonical_modulus(unsigned p, unsigned k);
  static bool is_irreducible(unsigned p, std::span<const unsigned> poly);

  FieldSpec(const FieldSpec&) = delete;
  FieldSpec& operator=(const FieldSpec&) = delete;

  unsigned characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return k_; }
  Value order() const noexcept { return order_; }
  const std::vector<unsigned>& modulus() const noexcept { return modulus_; }
  bool is_canonical() const noexcept { return canonical_; }

  /// "GF(4)" for canonical moduli, "GF(8;mod=x3+x2+1)" otherwise.
  std::string name() const;

  Value add(Value x, Value y) const noexcept;
  Value neg(Value x) const noexcept;
  Value sub(Value x, Value y) const noexcept { return add(x, neg(y)); }
  Value mul(Value x, Value y) const noexcept;
  Value inv(Value x) const;
  Value pow(Value x, std::uint64_t n) const noexcept;
  /// Scalar multiple by an integer, i.e. n*x with n reduced mod p.
  Value times(Value x, std::uint64_t n) const noexcept;

  std::vector<unsigned> digits(Value x) const;
  Value pack(std::span<const unsigned> coeffs) const;

  FieldElement zero() const;
  FieldElement one() const;
  /// The class of u. Only meaningful when degree() > 1.
  FieldElement generator() const;
  FieldElement element(Value v) const;
  FieldElement from_integer(long long n) const;

 private:
  FieldSpec(unsigned p, std::vector<unsigned> modulus, bool canonical);
  friend struct FieldRegistry;

  Value mul_slow(Value x, Value y) const noexcept;

  unsigned p_;
  unsigned k_;
  Value order_;
  std::vector<unsigned> modulus_;
  bool canonical_;
  Value modulus_bits_ = 0;  // p == 2 only: modulus without its leading bit
  std::vector<std::uint16_t> mul_table_;
  std::vector<Value> inv_table_;
};

class FieldElement {
 public:
  using Value = FieldSpec::Value;

  FieldElement(const FieldSpec& field, Value value);

  const FieldSpec& field() const noexcept { return *field_; }
  Value value() const noexcept { return value_; }
  std::vector<unsigned> coeffs() const { return field_->digits(value_); }

  bool is_zero() const noexcept { return value_ == 0; }
  bool is_one() const noexcept { return value_ == 1; }

  FieldElement operator+(const FieldElement& other) const;
  FieldElement operator-(const FieldElement& other) const;
  FieldElement operator*(const FieldElement& other) const;
  FieldElement operator/(const FieldElement& other) const;
  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& other) { return *this = *this + other; }
  FieldElement& operator-=(const FieldElement& other) { return *this = *this - other; }
  FieldElement& operator*=(const FieldElement& other) { return *this = *this * other; }

  FieldElement inv() const;
  FieldElement pow(std::uint64_t n) const;
  /// x^p.
  FieldElement frobenius() const;
  /// The unique y with y^p = x, computed as x^(p^(k-1)).
  FieldElement pth_root() const;

  /// Polynomial in u, e.g. "u+1", "2*u^2+1", "0".
  std::string to_string() const;

  friend bool operator==(const FieldElement& x, const FieldElement& y) noexcept {
    return x.field_ == y.field_ && x.value_ == y.value_;
  }
  /// Orders by packed value; only meaningful within one field.
  friend std::strong_ordering operator<=>(const FieldElement& x, const FieldElement& y) noexcept {
    return x.value_ <=> y.value_;
  }

 private:
  const FieldSpec* field_;
  Value value_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& x);

/// Throws FieldMismatchError unless both belong to the same field.
void require_same_field(const FieldSpec& f, const FieldSpec& g, const char* what);

inline FieldElement pth_root(const FieldElement& x) { return x.pth_root(); }

/// All p^k elements in packed-value order.
std::vector<FieldElement> enumerate_elements(const FieldSpec& field);

/// Image of the source generator under the canonical embedding source -> target (the least
/// root of the source modulus in target). Throws DomainError when no root exists.
FieldElement embedding_image(const FieldSpec& source, const FieldSpec& target);

/// Ring homomorphism source -> target fixed by `embedding_image`.
FieldElement embed(const FieldElement& x, const FieldSpec& target);

/// GF(q^m) for q = |base|, with canonical modulus over the prime field.
const FieldSpec& extension_of(const FieldSpec& base, unsigned m);

/// Smallest m dividing `within` such that x lies in the subfield of order q^m, where q is the
/// order of `base` and x lives in GF(q^within).
unsigned subfield_degree(const FieldElement& x, const FieldSpec& base, unsigned within);

}  // namespace folclass
