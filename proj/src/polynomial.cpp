#include "folclass/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include "folclass/error.hpp"

namespace folclass {

Poly::Poly(const FieldSpec& field, std::initializer_list<Value> coeffs)
    : field_(&field), coeffs_(coeffs.begin(), coeffs.end()) {
  canonicalize();
}

Poly::Poly(const FieldSpec& field, Storage coeffs) : field_(&field), coeffs_(std::move(coeffs)) {
  canonicalize();
}

Poly::Poly(std::span<const FieldElement> coeffs, const FieldSpec& field) : field_(&field) {
  coeffs_.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    require_same_field(field, c.field(), "Poly");
    coeffs_.push_back(c.value());
  }
  canonicalize();
}

void Poly::canonicalize() noexcept {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::constant(const FieldElement& c) { return Poly(c.field(), {c.value()}); }

Poly Poly::monomial(const FieldElement& c, unsigned n) {
  Storage s(n + 1, 0);
  s[n] = c.value();
  return Poly(c.field(), std::move(s));
}

Poly Poly::linear_factor(const FieldElement& root) {
  const FieldSpec& f = root.field();
  return Poly(f, {f.neg(root.value()), 1});
}

FieldElement Poly::coeff(std::size_t i) const { return {*field_, raw(i)}; }

FieldElement Poly::leading() const {
  return {*field_, coeffs_.empty() ? Value{0} : coeffs_.back()};
}

Poly Poly::operator+(const Poly& g) const {
  require_same_field(*field_, *g.field_, "poly add");
  Storage out(std::max(coeffs_.size(), g.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_->add(raw(i), g.raw(i));
  return Poly(*field_, std::move(out));
}

Poly Poly::operator-(const Poly& g) const {
  require_same_field(*field_, *g.field_, "poly sub");
  Storage out(std::max(coeffs_.size(), g.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_->sub(raw(i), g.raw(i));
  return Poly(*field_, std::move(out));
}

Poly Poly::operator-() const {
  Storage out(coeffs_);
  for (auto& c : out) c = field_->neg(c);
  return Poly(*field_, std::move(out));
}

Poly Poly::operator*(const Poly& g) const {
  require_same_field(*field_, *g.field_, "poly mul");
  if (is_zero() || g.is_zero()) return Poly(*field_);
  Storage out(coeffs_.size() + g.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < g.coeffs_.size(); ++j)
      out[i + j] = field_->add(out[i + j], field_->mul(coeffs_[i], g.coeffs_[j]));
  }
  return Poly(*field_, std::move(out));
}

Poly Poly::scale(const FieldElement& c) const {
  require_same_field(*field_, c.field(), "poly scale");
  Storage out(coeffs_);
  for (auto& x : out) x = field_->mul(x, c.value());
  return Poly(*field_, std::move(out));
}

FieldElement Poly::eval(const FieldElement& x) const {
  require_same_field(*field_, x.field(), "poly eval");
  Value acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;)
    acc = field_->add(field_->mul(acc, x.value()), coeffs_[i]);
  return {*field_, acc};
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly(*field_);
  Storage out(coeffs_.size() - 1, 0);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = field_->times(coeffs_[i], i);
  return Poly(*field_, std::move(out));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scale(leading().inv());
}

Poly Poly::compose_with_affine(const FieldElement& c) const {
  require_same_field(*field_, c.field(), "compose_with_affine");
  const Poly shift(*field_, {c.value(), 1});
  Poly acc(*field_);
  for (std::size_t i = coeffs_.size(); i-- > 0;)
    acc = acc * shift + Poly(*field_, {coeffs_[i]});
  return acc;
}

Poly Poly::embed(const FieldSpec& target) const {
  if (&target == field_) return *this;
  Storage out(coeffs_.size(), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    out[i] = folclass::embed(coeff(i), target).value();
  return Poly(target, std::move(out));
}

std::string Poly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i] == 0) continue;
    if (!out.empty()) out += '+';
    const std::string c = coeff(i).to_string();
    if (i == 0) {
      out += c;
      continue;
    }
    if (c != "1") {
      const bool compound = c.find('+') != std::string::npos;
      out += compound ? "(" + c + ")*" : c + "*";
    }
    out += var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& f) { return os << f.to_string(); }

std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g) {
  require_same_field(f.field(), g.field(), "divmod");
  if (g.is_zero()) throw DivisionByZeroError("polynomial division by zero");
  const FieldSpec& F = f.field();
  Poly::Storage rem(f.raw_coeffs());
  const std::size_t gs = g.size();
  if (rem.size() < gs) return {Poly(F), f};
  Poly::Storage quot(rem.size() - gs + 1, 0);
  const auto lead_inv = F.inv(g.raw(gs - 1));
  for (std::size_t i = rem.size(); i-- >= gs;) {
    const auto factor = F.mul(rem[i], lead_inv);
    if (factor == 0) continue;
    const std::size_t shift = i - (gs - 1);
    quot[shift] = factor;
    for (std::size_t j = 0; j < gs; ++j)
      rem[shift + j] = F.sub(rem[shift + j], F.mul(factor, g.raw(j)));
  }
  rem.resize(gs - 1);
  return {Poly(F, std::move(quot)), Poly(F, std::move(rem))};
}

Poly gcd(const Poly& f, const Poly& g) {
  require_same_field(f.field(), g.field(), "gcd");
  if (f.is_zero() && g.is_zero()) throw DomainError("gcd(0, 0) is undefined");
  Poly x = f, y = g;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

namespace {
void require_char2(const Poly& f, const char* what) {
  if (f.field().characteristic() != 2)
    throw DomainError(std::string(what) + " requires characteristic 2, got " + f.field().name());
}
}  // namespace

bool is_perfect_square(const Poly& f) {
  require_char2(f, "is_perfect_square");
  for (std::size_t i = 1; i < f.size(); i += 2)
    if (f.raw(i) != 0) return false;
  return true;
}

Poly poly_sqrt(const Poly& f) {
  if (!is_perfect_square(f))
    throw DomainError("poly_sqrt: " + f.to_string() + " is not a perfect square");
  Poly::Storage out((f.size() + 1) / 2, 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.coeff(2 * i).pth_root().value();
  return Poly(f.field(), std::move(out));
}

unsigned lcm_upto(unsigned n) {
  unsigned l = 1;
  for (unsigned i = 2; i <= n; ++i) l = std::lcm(l, i);
  return l;
}

std::vector<ExtensionRoot> roots_in_extension(const Poly& f, unsigned max_ext) {
  if (f.is_zero()) throw DomainError("roots_in_extension of the zero polynomial");
  if (max_ext == 0) throw DomainError("max_ext must be at least 1");
  std::vector<ExtensionRoot> roots;
  const int deg = f.degree().value();
  if (deg == 0) return roots;
  const unsigned bound = lcm_upto(max_ext);
  int found = 0;
  for (unsigned m = 1; m <= bound && found < deg; ++m) {
    if (bound % m != 0) continue;
    const FieldSpec& E = extension_of(f.field(), m);
    const Poly fe = f.embed(E);
    for (FieldSpec::Value v = 0; v < E.order(); ++v) {
      const FieldElement x(E, v);
      if (!fe.eval(x).is_zero()) continue;
      if (subfield_degree(x, f.field(), m) != m) continue;  // already found in a smaller field
      unsigned mult = 0;
      Poly rest = fe;
      const Poly factor = Poly::linear_factor(x);
      for (;;) {
        auto [q, r] = divmod(rest, factor);
        if (!r.is_zero()) break;
        ++mult;
        rest = std::move(q);
      }
      roots.push_back({x, m, mult});
      found += static_cast<int>(mult);
    }
  }
  return roots;
}

}  // namespace folclass
