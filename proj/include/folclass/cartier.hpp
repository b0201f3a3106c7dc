#pragma once

// Iterated Cartier operator on top-forms h dx^dy in two variables, and the trace of a form with
// a simple pole along a fixed plane conic G.

#include <cstdint>
#include <string>

#include "folclass/bipoly.hpp"
#include "folclass/error.hpp"
#include "folclass/symbolic_coeff.hpp"

namespace folclass {

inline std::uint64_t int_pow(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

/// One application of the Cartier operator: keeps monomials x^i y^j with
/// i = j = p-1 (mod p), maps them to c^(1/p) x^((i-p+1)/p) y^((j-p+1)/p), drops the rest.
template <class Coeff>
BiPoly<Coeff> cartier_once(const BiPoly<Coeff>& h, unsigned p) {
  BiPoly<Coeff> out;
  for (const auto& [e, c] : h.terms()) {
    if (e.first % p != p - 1 || e.second % p != p - 1) continue;
    out.add_term(coeff_pth_root(c, p), (e.first + 1) / p - 1, (e.second + 1) / p - 1);
  }
  return out;
}

/// e-fold composition of cartier_once.
template <class Coeff>
BiPoly<Coeff> cartier_iter(const BiPoly<Coeff>& h, unsigned p, unsigned e) {
  if (e == 0) throw DomainError("cartier_iter requires e >= 1");
  BiPoly<Coeff> out = h;
  for (unsigned i = 0; i < e; ++i) out = cartier_once(out, p);
  return out;
}

/// Direct extraction modulo q = p^e: keeps i = j = q-1 (mod q), takes the q-th root of the
/// coefficient and maps exponents to (i-q+1)/q. Equal to cartier_iter; kept as a cross-check.
template <class Coeff>
BiPoly<Coeff> cartier_one_shot(const BiPoly<Coeff>& h, unsigned p, unsigned e) {
  if (e == 0) throw DomainError("cartier_one_shot requires e >= 1");
  const std::uint64_t q = int_pow(p, e);
  BiPoly<Coeff> out;
  for (const auto& [ex, c] : h.terms()) {
    if (ex.first % q != q - 1 || ex.second % q != q - 1) continue;
    Coeff root = c;
    for (unsigned i = 0; i < e; ++i) root = coeff_pth_root(root, p);
    out.add_term(root, static_cast<unsigned>((ex.first + 1) / q - 1),
                 static_cast<unsigned>((ex.second + 1) / q - 1));
  }
  return out;
}

/// Dehomogenized plane conic G(x, y, 1) with invertible constant term.
template <class Coeff>
class Quadric {
 public:
  explicit Quadric(BiPoly<Coeff> g) : g_(std::move(g)) {
    if (g_.constant_term() == nullptr)
      throw DomainError("quadric must have a nonzero constant term G(0,0)");
  }

  /// s x^2 + t y^2 + 1
  static Quadric diagonal(const Coeff& s, const Coeff& t) {
    BiPoly<Coeff> g = BiPoly<Coeff>::monomial(s, 2, 0) + BiPoly<Coeff>::monomial(t, 0, 2) +
                      BiPoly<Coeff>::constant(one_like(s));
    return Quadric(std::move(g));
  }

  const BiPoly<Coeff>& poly() const noexcept { return g_; }

 private:
  BiPoly<Coeff> g_;
};

inline Quadric<SymbolicCoeff> symbolic_quadric() {
  return Quadric<SymbolicCoeff>::diagonal(SymbolicCoeff::s(), SymbolicCoeff::t());
}

/// (numerator / G^pole_power) dx^dy for the session quadric G.
template <class Coeff>
struct TopForm {
  BiPoly<Coeff> numerator;
  unsigned pole_power = 0;

  bool is_zero() const { return numerator.is_zero(); }

  /// "(1 + s^(1/2)*x + t^(1/2)*y)/G dx^dy", "1/G dx^dy", "0".
  std::string to_string() const {
    if (numerator.is_zero()) return "0";
    std::string num = numerator.to_string();
    if (pole_power == 0) return "(" + num + ") dx^dy";
    if (numerator.term_count() > 1 || num.find('+') != std::string::npos) num = "(" + num + ")";
    std::string den = "G";
    if (pole_power > 1) den += "^" + std::to_string(pole_power);
    return num + "/" + den + " dx^dy";
  }
};

/// Trace of the e-th iterated Frobenius applied to (f/G) dx^dy, computed through
/// f/G = G^(q-1) f / G^q as C^e(G^(q-1) f) / G, q = p^e.
template <class Coeff>
TopForm<Coeff> trace_with_pole(const BiPoly<Coeff>& f, const Quadric<Coeff>& quadric, unsigned p,
                               unsigned e) {
  if (e == 0) throw DomainError("trace_with_pole requires e >= 1");
  const std::uint64_t q = int_pow(p, e);
  if (f.is_zero()) return {BiPoly<Coeff>{}, 1};
  const BiPoly<Coeff> lifted = quadric.poly().pow(q - 1) * f;
  return {cartier_iter(lifted, p, e), 1};
}

template <class Coeff>
struct NonvanishingResult {
  unsigned e = 0;
  bool nonzero = false;
  TopForm<Coeff> image;
};

/// Traces x^(q-1) y^(q-1)/G dx^dy and checks the image is nonzero. The image must lie in the
/// span of {1, x, y}/G dx^dy; a numerator of total degree above 1 throws ConsistencyError.
template <class Coeff>
NonvanishingResult<Coeff> verify_nonvanishing(const Quadric<Coeff>& quadric, unsigned p,
                                              unsigned e) {
  if (e == 0) throw DomainError("verify_nonvanishing requires e >= 1");
  const std::uint64_t q = int_pow(p, e);
  const Coeff one = one_like(*quadric.poly().constant_term());
  const auto gamma =
      BiPoly<Coeff>::monomial(one, static_cast<unsigned>(q - 1), static_cast<unsigned>(q - 1));
  NonvanishingResult<Coeff> out{e, false, trace_with_pole(gamma, quadric, p, e)};
  if (out.image.numerator.total_degree() > 1)
    throw ConsistencyError("trace image numerator " + out.image.numerator.to_string() +
                           " has total degree above 1");
  out.nonzero = !out.image.is_zero();
  return out;
}

}  // namespace folclass
