#pragma once

// Independent reference arithmetic for GF(2^k)[t] on plain integers, used to cross-check the
// library. Shares no code with folclass.

#include <cstdint>
#include <vector>

namespace naive {

struct Gf2k {
  unsigned k;
  std::uint32_t modulus;  // full modulus bits, including x^k

  std::uint32_t size() const { return 1u << k; }

  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const {
    std::uint32_t r = 0;
    for (unsigned i = 0; i < k; ++i)
      if (y >> i & 1) r ^= x << i;
    for (int i = 2 * static_cast<int>(k) - 2; i >= static_cast<int>(k); --i)
      if (r >> i & 1) r ^= modulus << (i - k);
    return r;
  }

  std::uint32_t inv(std::uint32_t x) const {
    for (std::uint32_t y = 1; y < size(); ++y)
      if (mul(x, y) == 1) return y;
    return 0;
  }
};

inline Gf2k gf2() { return {1, 0b11}; }
inline Gf2k gf4() { return {2, 0b111}; }      // x^2 + x + 1
inline Gf2k gf8() { return {3, 0b1011}; }     // x^3 + x + 1
inline Gf2k gf16() { return {4, 0b10011}; }   // x^4 + x + 1

using P = std::vector<std::uint32_t>;  // low to high

inline void trim(P& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline P add(P f, const P& g) {
  if (g.size() > f.size()) f.resize(g.size(), 0);
  for (std::size_t i = 0; i < g.size(); ++i) f[i] ^= g[i];
  trim(f);
  return f;
}

inline P mul(const Gf2k& F, const P& f, const P& g) {
  if (f.empty() || g.empty()) return {};
  P r(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) r[i + j] ^= F.mul(f[i], g[j]);
  trim(r);
  return r;
}

inline P deriv(const P& f) {
  P r;
  for (std::size_t i = 1; i < f.size(); ++i) r.push_back(i % 2 ? f[i] : 0);
  trim(r);
  return r;
}

inline int deg(const P& f) { return static_cast<int>(f.size()) - 1; }

inline P mod(const Gf2k& F, P f, const P& g) {
  const std::uint32_t li = F.inv(g.back());
  while (!f.empty() && f.size() >= g.size()) {
    const std::uint32_t c = F.mul(f.back(), li);
    const std::size_t shift = f.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i) f[shift + i] ^= F.mul(c, g[i]);
    trim(f);
  }
  return f;
}

inline P gcd(const Gf2k& F, P f, P g) {
  while (!g.empty()) {
    P r = mod(F, f, g);
    f = std::move(g);
    g = std::move(r);
  }
  return f;
}

// Validity of (a, b, c) in Lie case 1..4 from first principles: squares computed term by term.
inline bool valid(const Gf2k& F, int lie_case, const P& a, const P& b, const P& c) {
  if (a.empty() && b.empty() && c.empty()) return false;
  if (deg(a) > 1 || deg(b) > 1 || deg(c) > 3) return false;
  if (!(deg(a) == 1 || deg(b) == 1 || deg(c) == 3)) return false;
  P g = gcd(F, gcd(F, a, b), c);
  if (g.size() != 1) return false;
  P A = mul(F, c, deriv(a)), B = mul(F, c, deriv(b)), C = mul(F, c, deriv(c));
  const P a2 = mul(F, a, a), b2 = mul(F, b, b);
  switch (lie_case) {
    case 2: A = add(A, a2); B = add(B, b2); break;
    case 3: A = add(A, a2); break;
    case 4: B = add(B, a2); break;
    default: break;
  }
  return mul(F, A, b) == mul(F, B, a) && mul(F, A, c) == mul(F, C, a) && mul(F, B, c) == mul(F, C, b);
}

}  // namespace naive
