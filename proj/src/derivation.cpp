#include "folclass/derivation.hpp"

#include "folclass/error.hpp"

namespace folclass {

LieCase LieCase::parse(std::string_view name) {
  if (name == "I") return Tag::I;
  if (name == "II") return Tag::II;
  if (name == "III") return Tag::III;
  if (name == "IV") return Tag::IV;
  throw ParseError("unknown Lie case (expected I, II, III or IV)", std::string(name), 0);
}

std::string LieCase::name() const {
  switch (tag_) {
    case Tag::I: return "I";
    case Tag::II: return "II";
    case Tag::III: return "III";
    case Tag::IV: return "IV";
  }
  return "?";
}

DerivationTriple::DerivationTriple(LieCase lie_case, Poly a, Poly b, Poly c)
    : case_(lie_case), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  require_same_field(a_.field(), b_.field(), "DerivationTriple");
  require_same_field(a_.field(), c_.field(), "DerivationTriple");
  if (a_.field().characteristic() != 2)
    throw DomainError("derivation triples require characteristic 2, got " + a_.field().name());
  if (a_.is_zero() && b_.is_zero() && c_.is_zero())
    throw DomainError("derivation triple with a = b = c = 0 generates no foliation");
}

DerivationTriple DerivationTriple::embed(const FieldSpec& target) const {
  return {case_, a_.embed(target), b_.embed(target), c_.embed(target)};
}

std::string DerivationTriple::to_string() const {
  return "(" + a_.to_string() + ", " + b_.to_string() + ", " + c_.to_string() + ")";
}

SquaredDerivation delta_squared(const DerivationTriple& d) {
  const Poly& a = d.a();
  const Poly& b = d.b();
  const Poly& c = d.c();
  const Poly a2 = a * a;
  const Poly b2 = b * b;
  Poly A = c * a.derivative();
  Poly B = c * b.derivative();
  Poly C = c * c.derivative();
  auto route = [&](Square sq, const Poly& coeff) {
    if (sq == Square::Alpha) A = A + coeff;
    if (sq == Square::Beta) B = B + coeff;
  };
  route(d.lie_case().alpha_sq(), a2);
  route(d.lie_case().beta_sq(), b2);
  return {std::move(A), std::move(B), std::move(C)};
}

bool satisfies_c1(const DerivationTriple& d) {
  Poly g(d.field());
  for (const Poly* f : {&d.a(), &d.b(), &d.c()})
    if (!f->is_zero()) g = g.is_zero() ? f->monic() : gcd(g, *f);
  return !g.is_zero() && g.degree() == Degree(0);
}

bool satisfies_c2(const DerivationTriple& d) {
  const Degree da = d.a().degree(), db = d.b().degree(), dc = d.c().degree();
  if (da > 1 || db > 1 || dc > 3) return false;
  return da == 1 || db == 1 || dc == 3;
}

PClosedness is_p_closed(const DerivationTriple& d, const SquaredDerivation& sq) {
  const Poly& a = d.a();
  const Poly& b = d.b();
  const Poly& c = d.c();
  const bool closed = (sq.A * b - sq.B * a).is_zero() && (sq.A * c - sq.C * a).is_zero() &&
                      (sq.B * c - sq.C * b).is_zero();
  PClosedness out{closed, std::nullopt};
  if (!closed || !satisfies_c1(d)) return out;
  // Divide by a component of maximal degree; primitivity makes the quotient a polynomial.
  const Poly* pivot = &a;
  const Poly* image = &sq.A;
  if (b.degree() > pivot->degree()) pivot = &b, image = &sq.B;
  if (c.degree() > pivot->degree()) pivot = &c, image = &sq.C;
  auto [h, r] = divmod(*image, *pivot);
  if (!r.is_zero() || !(h * a == sq.A && h * b == sq.B && h * c == sq.C))
    throw ConsistencyError("delta^2 proportional to primitive delta " + d.to_string() +
                           " but not a polynomial multiple");
  out.multiplier = std::move(h);
  return out;
}

PClosedness is_p_closed(const DerivationTriple& d) { return is_p_closed(d, delta_squared(d)); }

bool is_valid_foliation(const DerivationTriple& d) {
  // Cheapest test first; C1 needs a gcd chain.
  return satisfies_c2(d) && is_p_closed(d).closed && satisfies_c1(d);
}

bool is_valid_foliation_oracle(const DerivationTriple& d) {
  return satisfies_c2(d) && is_p_closed(d, oracle_delta_squared(d)).closed && satisfies_c1(d);
}

std::vector<std::string> violated_conditions(const DerivationTriple& d) {
  std::vector<std::string> out;
  if (!satisfies_c1(d)) {
    Poly g(d.field());
    for (const Poly* f : {&d.a(), &d.b(), &d.c()})
      if (!f->is_zero()) g = g.is_zero() ? f->monic() : gcd(g, *f);
    out.push_back("C1 (gcd(a, b, c) = " + g.to_string() + " is not a unit)");
  }
  if (!satisfies_c2(d)) {
    const Degree da = d.a().degree(), db = d.b().degree(), dc = d.c().degree();
    std::string why;
    if (da > 1) why = "deg a = " + da.to_string() + " > 1";
    else if (db > 1) why = "deg b = " + db.to_string() + " > 1";
    else if (dc > 3) why = "deg c = " + dc.to_string() + " > 3";
    else why = "none of deg a = 1, deg b = 1, deg c = 3 holds";
    out.push_back("C2 (" + why + ")");
  }
  if (!is_p_closed(d).closed) {
    const auto sq = delta_squared(d);
    out.push_back("C3 (delta^2 = (" + sq.A.to_string() + ", " + sq.B.to_string() + ", " +
                  sq.C.to_string() + ") is not proportional to delta)");
  }
  return out;
}

namespace {

// s^n f(1/s) with a pole of order max(0, deg f - n).
ChartComponent invert_chart(const Poly& f, unsigned n) {
  const FieldSpec& F = f.field();
  if (f.is_zero()) return {Poly(F), 0};
  const unsigned deg = static_cast<unsigned>(f.degree().value());
  const unsigned top = std::max(n, deg);
  Poly::Storage out(top + 1, 0);
  for (unsigned i = 0; i <= deg; ++i) out[top - i] = f.raw(i);
  return {Poly(F, std::move(out)), deg > n ? deg - n : 0};
}

}  // namespace

ChartView chart_at_infinity(const DerivationTriple& d) {
  ChartView v{invert_chart(d.a(), 1), invert_chart(d.b(), 1), invert_chart(d.c(), 3), false, false};
  v.regular = v.a_bar.pole_order == 0 && v.b_bar.pole_order == 0 && v.c_bar.pole_order == 0;
  for (const auto* comp : {&v.a_bar, &v.b_bar, &v.c_bar})
    if (!comp->numerator.constant_term().is_zero()) v.nonvanishing_at_s0 = true;
  return v;
}

DerivationTriple scale(const FieldElement& lambda, const DerivationTriple& d) {
  if (lambda.is_zero()) throw DomainError("scale by zero");
  return {d.lie_case(), d.a().scale(lambda), d.b().scale(lambda), d.c().scale(lambda)};
}

}  // namespace folclass
