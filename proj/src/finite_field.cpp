#include "folclass/finite_field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>

#include "folclass/error.hpp"

namespace folclass {

namespace {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

unsigned inv_mod(unsigned x, unsigned p) {
  for (unsigned y = 1; y < p; ++y)
    if ((x * y) % p == 1) return y;
  throw DivisionByZeroError("no inverse mod p");
}

using DigitPoly = std::vector<unsigned>;

void trim(DigitPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo g over GF(p); g nonzero.
DigitPoly digit_mod(DigitPoly f, const DigitPoly& g, unsigned p) {
  trim(f);
  const unsigned lead_inv = inv_mod(g.back(), p);
  while (f.size() >= g.size()) {
    const unsigned factor = (f.back() * lead_inv) % p;
    const std::size_t shift = f.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i)
      f[shift + i] = (f[shift + i] + (p - factor) * g[i]) % p;
    trim(f);
  }
  return f;
}

DigitPoly to_digits(std::uint64_t v, unsigned p, unsigned len) {
  DigitPoly out(len, 0);
  for (unsigned i = 0; i < len; ++i) {
    out[i] = static_cast<unsigned>(v % p);
    v /= p;
  }
  return out;
}

std::uint64_t ipow(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

std::string modulus_literal(const std::vector<unsigned>& m) {
  std::string out;
  for (std::size_t i = m.size(); i-- > 0;) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '+';
    if (m[i] != 1 || i == 0) out += std::to_string(m[i]);
    if (i >= 1) out += 'x';
    if (i >= 2) out += std::to_string(i);
  }
  return out;
}

}  // namespace

struct FieldRegistry {
  std::mutex mutex;
  std::map<std::pair<unsigned, std::vector<unsigned>>, std::unique_ptr<FieldSpec>> fields;
  std::map<std::pair<unsigned, unsigned>, const FieldSpec*> canonical;
  std::map<std::pair<const FieldSpec*, const FieldSpec*>, FieldSpec::Value> embeddings;

  static FieldRegistry& instance() {
    static FieldRegistry registry;
    return registry;
  }

  const FieldSpec& intern(unsigned p, std::vector<unsigned> modulus, bool canonical_flag) {
    auto key = std::make_pair(p, modulus);
    auto it = fields.find(key);
    if (it != fields.end()) return *it->second;
    auto spec = std::unique_ptr<FieldSpec>(new FieldSpec(p, std::move(modulus), canonical_flag));
    const FieldSpec& ref = *spec;
    fields.emplace(std::move(key), std::move(spec));
    return ref;
  }
};

// ---------------------------------------------------------------------------------------------
// FieldSpec

std::vector<unsigned> FieldSpec::canonical_modulus(unsigned p, unsigned k) {
  if (!is_prime(p)) throw DomainError("characteristic " + std::to_string(p) + " is not prime");
  if (k == 0) throw DomainError("extension degree must be at least 1");
  const std::uint64_t count = ipow(p, k);
  for (std::uint64_t low = 0; low < count; ++low) {
    DigitPoly candidate = to_digits(low, p, k);
    candidate.push_back(1);
    if (is_irreducible(p, candidate)) return candidate;
  }
  throw ConsistencyError("no irreducible polynomial found");
}

bool FieldSpec::is_irreducible(unsigned p, std::span<const unsigned> poly) {
  DigitPoly f(poly.begin(), poly.end());
  trim(f);
  if (f.size() < 2) return false;
  const unsigned k = static_cast<unsigned>(f.size() - 1);
  if (k == 1) return true;
  // Trial division by every monic polynomial of degree 1..k/2.
  for (unsigned d = 1; d <= k / 2; ++d) {
    const std::uint64_t count = ipow(p, d);
    for (std::uint64_t low = 0; low < count; ++low) {
      DigitPoly g = to_digits(low, p, d);
      g.push_back(1);
      if (digit_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

const FieldSpec& FieldSpec::get(unsigned p, unsigned k) {
  auto& reg = FieldRegistry::instance();
  {
    std::lock_guard lock(reg.mutex);
    auto it = reg.canonical.find({p, k});
    if (it != reg.canonical.end()) return *it->second;
  }
  auto modulus = canonical_modulus(p, k);
  std::lock_guard lock(reg.mutex);
  const FieldSpec& spec = reg.intern(p, std::move(modulus), true);
  reg.canonical.emplace(std::make_pair(p, k), &spec);
  return spec;
}

const FieldSpec& FieldSpec::with_modulus(unsigned p, std::vector<unsigned> modulus) {
  if (!is_prime(p)) throw DomainError("characteristic " + std::to_string(p) + " is not prime");
  for (auto& c : modulus) c %= p;
  trim(modulus);
  if (modulus.size() < 2) throw DomainError("modulus must have degree at least 1");
  if (modulus.back() != 1) throw DomainError("modulus must be monic");
  if (!is_irreducible(p, modulus))
    throw DomainError("modulus " + modulus_literal(modulus) + " is reducible over GF(" +
                      std::to_string(p) + ")");
  const unsigned k = static_cast<unsigned>(modulus.size() - 1);
  if (modulus == canonical_modulus(p, k)) return get(p, k);
  auto& reg = FieldRegistry::instance();
  std::lock_guard lock(reg.mutex);
  return reg.intern(p, std::move(modulus), false);
}

FieldSpec::FieldSpec(unsigned p, std::vector<unsigned> modulus, bool canonical)
    : p_(p),
      k_(static_cast<unsigned>(modulus.size() - 1)),
      order_(0),
      modulus_(std::move(modulus)),
      canonical_(canonical) {
  const std::uint64_t order = ipow(p_, k_);
  if (order > (std::uint64_t{1} << 31))
    throw DomainError("field order " + std::to_string(order) + " exceeds 2^31");
  order_ = static_cast<Value>(order);
  if (p_ == 2) {
    for (unsigned i = 0; i < k_; ++i)
      if (modulus_[i]) modulus_bits_ |= Value{1} << i;
  }
  if (order_ <= 256) {
    mul_table_.resize(std::size_t{order_} * order_);
    for (Value x = 0; x < order_; ++x)
      for (Value y = 0; y < order_; ++y)
        mul_table_[std::size_t{x} * order_ + y] = static_cast<std::uint16_t>(mul_slow(x, y));
  }
  if (order_ <= 65536) {
    inv_table_.assign(order_, 0);
    for (Value x = 1; x < order_; ++x) inv_table_[x] = pow(x, order_ - 2);
  }
}

std::string FieldSpec::name() const {
  std::string out = "GF(" + std::to_string(order_);
  if (!canonical_) out += ";mod=" + modulus_literal(modulus_);
  return out + ")";
}

FieldSpec::Value FieldSpec::add(Value x, Value y) const noexcept {
  if (p_ == 2) return x ^ y;
  Value out = 0, scale = 1;
  while (x != 0 || y != 0) {
    out += ((x % p_ + y % p_) % p_) * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return out;
}

FieldSpec::Value FieldSpec::neg(Value x) const noexcept {
  if (p_ == 2) return x;
  Value out = 0, scale = 1;
  while (x != 0) {
    out += ((p_ - x % p_) % p_) * scale;
    x /= p_;
    scale *= p_;
  }
  return out;
}

FieldSpec::Value FieldSpec::times(Value x, std::uint64_t n) const noexcept {
  const Value m = static_cast<Value>(n % p_);
  if (m == 0) return 0;
  if (p_ == 2) return x;
  Value out = 0, scale = 1;
  while (x != 0) {
    out += ((x % p_) * m % p_) * scale;
    x /= p_;
    scale *= p_;
  }
  return out;
}

FieldSpec::Value FieldSpec::mul(Value x, Value y) const noexcept {
  if (!mul_table_.empty()) return mul_table_[std::size_t{x} * order_ + y];
  return mul_slow(x, y);
}

FieldSpec::Value FieldSpec::mul_slow(Value x, Value y) const noexcept {
  if (p_ == 2) {
    std::uint64_t prod = 0;
    for (unsigned i = 0; i < k_; ++i)
      if ((y >> i) & 1u) prod ^= std::uint64_t{x} << i;
    const std::uint64_t full = std::uint64_t{modulus_bits_} | (std::uint64_t{1} << k_);
    for (int i = 2 * static_cast<int>(k_) - 2; i >= static_cast<int>(k_); --i)
      if ((prod >> i) & 1u) prod ^= full << (i - k_);
    return static_cast<Value>(prod);
  }
  const auto a = digits(x);
  const auto b = digits(y);
  std::vector<unsigned> prod(2 * k_, 0);
  for (unsigned i = 0; i < k_; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p_;
  }
  // modulus_ is monic: u^k = -(m_0 + ... + m_{k-1} u^{k-1})
  for (std::size_t i = prod.size(); i-- > k_;) {
    const unsigned c = prod[i];
    if (c == 0) continue;
    prod[i] = 0;
    for (unsigned j = 0; j < k_; ++j)
      prod[i - k_ + j] = (prod[i - k_ + j] + (p_ - c) * modulus_[j]) % p_;
  }
  prod.resize(k_);
  return pack(prod);
}

FieldSpec::Value FieldSpec::inv(Value x) const {
  if (x == 0) throw DivisionByZeroError("inverse of zero in " + name());
  if (!inv_table_.empty()) return inv_table_[x];
  return pow(x, order_ - 2);
}

FieldSpec::Value FieldSpec::pow(Value x, std::uint64_t n) const noexcept {
  Value result = 1;
  Value base = x;
  while (n > 0) {
    if (n & 1u) result = mul(result, base);
    base = mul(base, base);
    n >>= 1;
  }
  return result;
}

std::vector<unsigned> FieldSpec::digits(Value x) const {
  std::vector<unsigned> out(k_, 0);
  for (unsigned i = 0; i < k_; ++i) {
    out[i] = x % p_;
    x /= p_;
  }
  return out;
}

FieldSpec::Value FieldSpec::pack(std::span<const unsigned> coeffs) const {
  Value out = 0, scale = 1;
  for (std::size_t i = 0; i < coeffs.size() && i < k_; ++i) {
    out += (coeffs[i] % p_) * scale;
    scale *= p_;
  }
  return out;
}

FieldElement FieldSpec::zero() const { return {*this, 0}; }
FieldElement FieldSpec::one() const { return {*this, 1}; }
FieldElement FieldSpec::generator() const { return {*this, k_ > 1 ? p_ : Value{0}}; }

FieldElement FieldSpec::element(Value v) const {
  if (v >= order_) throw DomainError("element index out of range for " + name());
  return {*this, v};
}

FieldElement FieldSpec::from_integer(long long n) const {
  long long r = n % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return {*this, static_cast<Value>(r)};
}

// ---------------------------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement(const FieldSpec& field, Value value) : field_(&field), value_(value) {}

void require_same_field(const FieldSpec& f, const FieldSpec& g, const char* what) {
  if (&f != &g)
    throw FieldMismatchError(std::string(what) + ": operands in distinct fields " + f.name() +
                             " and " + g.name());
}

FieldElement FieldElement::operator+(const FieldElement& other) const {
  require_same_field(*field_, *other.field_, "add");
  return {*field_, field_->add(value_, other.value_)};
}

FieldElement FieldElement::operator-(const FieldElement& other) const {
  require_same_field(*field_, *other.field_, "sub");
  return {*field_, field_->sub(value_, other.value_)};
}

FieldElement FieldElement::operator*(const FieldElement& other) const {
  require_same_field(*field_, *other.field_, "mul");
  return {*field_, field_->mul(value_, other.value_)};
}

FieldElement FieldElement::operator/(const FieldElement& other) const {
  require_same_field(*field_, *other.field_, "div");
  return {*field_, field_->mul(value_, field_->inv(other.value_))};
}

FieldElement FieldElement::operator-() const { return {*field_, field_->neg(value_)}; }

FieldElement FieldElement::inv() const { return {*field_, field_->inv(value_)}; }

FieldElement FieldElement::pow(std::uint64_t n) const { return {*field_, field_->pow(value_, n)}; }

FieldElement FieldElement::frobenius() const { return pow(field_->characteristic()); }

FieldElement FieldElement::pth_root() const {
  return pow(ipow(field_->characteristic(), field_->degree() - 1));
}

std::string FieldElement::to_string() const {
  const auto c = coeffs();
  std::string out;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(c[i]);
      continue;
    }
    if (c[i] != 1) out += std::to_string(c[i]) + "*";
    out += 'u';
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.to_string(); }

std::vector<FieldElement> enumerate_elements(const FieldSpec& field) {
  std::vector<FieldElement> out;
  out.reserve(field.order());
  for (FieldSpec::Value v = 0; v < field.order(); ++v) out.emplace_back(field, v);
  return out;
}

// ---------------------------------------------------------------------------------------------
// Embeddings

FieldElement embedding_image(const FieldSpec& source, const FieldSpec& target) {
  if (source.characteristic() != target.characteristic())
    throw DomainError("cannot embed " + source.name() + " into " + target.name() +
                      ": characteristics differ");
  auto& reg = FieldRegistry::instance();
  {
    std::lock_guard lock(reg.mutex);
    auto it = reg.embeddings.find({&source, &target});
    if (it != reg.embeddings.end()) return {target, it->second};
  }
  if (target.degree() % source.degree() != 0)
    throw DomainError("cannot embed " + source.name() + " into " + target.name() +
                      ": degree " + std::to_string(target.degree()) + " is not a multiple of " +
                      std::to_string(source.degree()));
  const auto& m = source.modulus();
  std::optional<FieldSpec::Value> root;
  for (FieldSpec::Value v = 0; v < target.order() && !root; ++v) {
    // Horner evaluation of the source modulus at v; its coefficients lie in the prime field.
    FieldSpec::Value acc = 0;
    for (std::size_t i = m.size(); i-- > 0;) acc = target.add(target.mul(acc, v), m[i]);
    if (acc == 0) root = v;
  }
  if (!root)
    throw DomainError("source modulus of " + source.name() + " has no root in " + target.name());
  std::lock_guard lock(reg.mutex);
  reg.embeddings.emplace(std::make_pair(&source, &target), *root);
  return {target, *root};
}

FieldElement embed(const FieldElement& x, const FieldSpec& target) {
  const FieldSpec& source = x.field();
  if (&source == &target) return x;
  const FieldElement g = embedding_image(source, target);
  const auto c = x.coeffs();
  FieldSpec::Value acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) acc = target.add(target.mul(acc, g.value()), c[i]);
  return {target, acc};
}

const FieldSpec& extension_of(const FieldSpec& base, unsigned m) {
  if (m == 0) throw DomainError("extension degree must be at least 1");
  if (m == 1) return base;
  return FieldSpec::get(base.characteristic(), base.degree() * m);
}

unsigned subfield_degree(const FieldElement& x, const FieldSpec& base, unsigned within) {
  const std::uint64_t q = base.order();
  for (unsigned m = 1; m <= within; ++m) {
    if (within % m != 0) continue;
    if (x.pow(ipow(q, m)) == x) return m;
  }
  return within;
}

}  // namespace folclass
