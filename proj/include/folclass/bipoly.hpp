#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>
#include <string>
#include <utility>

#include "folclass/error.hpp"
#include "folclass/finite_field.hpp"

namespace folclass {

// Coefficient-ring hooks used by BiPoly and the Cartier operator. A coefficient type C needs
// operator+, operator*, is_zero(), and overloads of one_like / coeff_pth_root / coeff_to_string.

inline FieldElement one_like(const FieldElement& x) { return x.field().one(); }

/// p-th root of a field coefficient; p must be the field characteristic.
inline FieldElement coeff_pth_root(const FieldElement& x, unsigned p) {
  if (x.field().characteristic() != p)
    throw DomainError("p-th root with p=" + std::to_string(p) + " in " + x.field().name());
  return x.pth_root();
}

inline std::string coeff_to_string(const FieldElement& x) { return x.to_string(); }

/// Sparse polynomial sum c_ij x^i y^j with no zero coefficients stored.
template <class Coeff>
class BiPoly {
 public:
  using Exponent = std::pair<unsigned, unsigned>;
  using Terms = std::map<Exponent, Coeff>;

  BiPoly() = default;

  static BiPoly constant(const Coeff& c) { return monomial(c, 0, 0); }
  static BiPoly monomial(const Coeff& c, unsigned i, unsigned j) {
    BiPoly out;
    out.add_term(c, i, j);
    return out;
  }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  /// Total degree; -1 for the zero polynomial.
  int total_degree() const noexcept {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e.first + e.second));
    return d;
  }

  /// Coefficient of x^0 y^0, or nullptr when it vanishes.
  const Coeff* constant_term() const {
    auto it = terms_.find({0, 0});
    return it == terms_.end() ? nullptr : &it->second;
  }

  void add_term(const Coeff& c, unsigned i, unsigned j) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace({i, j}, c);
    if (inserted) return;
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  BiPoly operator+(const BiPoly& other) const {
    BiPoly out = *this;
    for (const auto& [e, c] : other.terms_) out.add_term(c, e.first, e.second);
    return out;
  }

  BiPoly operator*(const BiPoly& other) const {
    BiPoly out;
    for (const auto& [e1, c1] : terms_)
      for (const auto& [e2, c2] : other.terms_)
        out.add_term(c1 * c2, e1.first + e2.first, e1.second + e2.second);
    return out;
  }

  BiPoly scale(const Coeff& k) const {
    BiPoly out;
    for (const auto& [e, c] : terms_) out.add_term(c * k, e.first, e.second);
    return out;
  }

  /// this^n for n >= 1.
  BiPoly pow(std::uint64_t n) const {
    if (n == 0) throw DomainError("BiPoly::pow with n = 0 needs an explicit unit");
    BiPoly result;
    bool have = false;
    BiPoly base = *this;
    while (n > 0) {
      if (n & 1u) {
        result = have ? result * base : base;
        have = true;
      }
      n >>= 1;
      if (n > 0) base = base * base;
    }
    return result;
  }

  friend bool operator==(const BiPoly& f, const BiPoly& g) { return f.terms_ == g.terms_; }

  /// Terms ordered by total degree, then x before y, joined by " + ", e.g.
  /// "1 + s^(1/2)*x + t^(1/2)*y".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Exponent, const Coeff*>> sorted;
    for (const auto& [e, c] : terms_) sorted.emplace_back(e, &c);
    std::sort(sorted.begin(), sorted.end(), [](const auto& l, const auto& r) {
      const unsigned dl = l.first.first + l.first.second, dr = r.first.first + r.first.second;
      if (dl != dr) return dl < dr;
      return l.first.first > r.first.first;
    });
    std::string out;
    for (const auto& [e, c] : sorted) {
      if (!out.empty()) out += " + ";
      std::string coeff = coeff_to_string(*c);
      std::string mono;
      auto var = [&mono](char v, unsigned n) {
        if (n == 0) return;
        if (!mono.empty()) mono += '*';
        mono += v;
        if (n > 1) mono += "^" + std::to_string(n);
      };
      var('x', e.first);
      var('y', e.second);
      if (mono.empty()) {
        out += coeff;
      } else if (coeff == "1") {
        out += mono;
      } else {
        const bool compound = coeff.find('+') != std::string::npos;
        out += (compound ? "(" + coeff + ")" : coeff) + "*" + mono;
      }
    }
    return out;
  }

 private:
  Terms terms_;
};

}  // namespace folclass
