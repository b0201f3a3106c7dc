#include "folclass/symbolic_coeff.hpp"

#include "folclass/error.hpp"

namespace folclass {

Dyadic::Dyadic(std::int64_t numerator, unsigned shift) : num_(numerator), shift_(shift) {
  if (num_ < 0) throw DomainError("negative exponent in symbolic coefficient");
  if (num_ == 0) {
    shift_ = 0;
    return;
  }
  while (shift_ > 0 && (num_ & 1) == 0) {
    num_ >>= 1;
    --shift_;
  }
  if (shift_ > 60) throw DomainError("dyadic exponent denominator exceeds 2^60");
}

Dyadic Dyadic::operator+(const Dyadic& other) const {
  const unsigned s = std::max(shift_, other.shift_);
  return Dyadic((num_ << (s - shift_)) + (other.num_ << (s - other.shift_)), s);
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  const unsigned s = std::max(a.shift_, b.shift_);
  return (a.num_ << (s - a.shift_)) <=> (b.num_ << (s - b.shift_));
}

std::string Dyadic::to_string() const {
  if (shift_ == 0) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(std::int64_t{1} << shift_);
}

SymbolicCoeff SymbolicCoeff::monomial(const SymbolicMonomial& m) {
  SymbolicCoeff out;
  out.terms_.insert(m);
  return out;
}

bool SymbolicCoeff::is_one() const noexcept {
  return terms_.size() == 1 && terms_.begin()->s.is_zero() && terms_.begin()->t.is_zero();
}

void SymbolicCoeff::toggle(const SymbolicMonomial& m) {
  auto [it, inserted] = terms_.insert(m);
  if (!inserted) terms_.erase(it);
}

SymbolicCoeff SymbolicCoeff::operator+(const SymbolicCoeff& other) const {
  SymbolicCoeff out = *this;
  for (const auto& m : other.terms_) out.toggle(m);
  return out;
}

SymbolicCoeff SymbolicCoeff::operator*(const SymbolicCoeff& other) const {
  SymbolicCoeff out;
  for (const auto& a : terms_)
    for (const auto& b : other.terms_) out.toggle({a.s + b.s, a.t + b.t});
  return out;
}

SymbolicCoeff SymbolicCoeff::sqrt() const {
  // Frobenius is additive in characteristic 2, so the root of a sum is the sum of roots.
  SymbolicCoeff out;
  for (const auto& m : terms_) out.terms_.insert({m.s.half(), m.t.half()});
  return out;
}

namespace {
FieldElement dyadic_power(const FieldElement& base, const Dyadic& e) {
  FieldElement root = base;
  for (unsigned i = 0; i < e.shift(); ++i) root = root.pth_root();
  return root.pow(static_cast<std::uint64_t>(e.numerator()));
}
}  // namespace

FieldElement SymbolicCoeff::specialize(const FieldElement& s_value,
                                       const FieldElement& t_value) const {
  require_same_field(s_value.field(), t_value.field(), "specialize");
  if (s_value.field().characteristic() != 2)
    throw DomainError("symbolic coefficients specialize only into characteristic 2");
  FieldElement acc = s_value.field().zero();
  for (const auto& m : terms_) acc += dyadic_power(s_value, m.s) * dyadic_power(t_value, m.t);
  return acc;
}

std::string SymbolicCoeff::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& m : terms_) {
    if (!out.empty()) out += " + ";
    std::string mono;
    auto var = [&mono](char v, const Dyadic& e) {
      if (e.is_zero()) return;
      if (!mono.empty()) mono += '*';
      mono += v;
      if (e.shift() > 0)
        mono += "^(" + e.to_string() + ")";
      else if (e.numerator() != 1)
        mono += "^" + e.to_string();
    };
    var('s', m.s);
    var('t', m.t);
    out += mono.empty() ? "1" : mono;
  }
  return out;
}

SymbolicCoeff coeff_pth_root(const SymbolicCoeff& x, unsigned p) {
  if (p != 2) throw DomainError("symbolic coefficients support only p = 2");
  return x.sqrt();
}

}  // namespace folclass
