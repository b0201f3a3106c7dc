#include "folclass/classifier.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "folclass/error.hpp"

namespace folclass {

std::string family_name(FamilyId f) {
  switch (f) {
    case FamilyId::I_a: return "I-a";
    case FamilyId::I_b: return "I-b";
    case FamilyId::II_i: return "II-i";
    case FamilyId::II_ii: return "II-ii";
    case FamilyId::II_iii: return "II-iii";
    case FamilyId::II_iv: return "II-iv";
    case FamilyId::III_i: return "III-i";
    case FamilyId::III_ii: return "III-ii";
    case FamilyId::III_iii: return "III-iii";
    case FamilyId::IV_i: return "IV-i";
    case FamilyId::IV_ii: return "IV-ii";
    case FamilyId::IV_iii: return "IV-iii";
    case FamilyId::IV_iv: return "IV-iv";
  }
  return "?";
}

FamilyId parse_family(std::string_view name) {
  for (FamilyId f : kAllFamilies)
    if (family_name(f) == name) return f;
  throw ParseError("unknown family", std::string(name), 0);
}

LieCase family_case(FamilyId f) {
  switch (f) {
    case FamilyId::I_a:
    case FamilyId::I_b: return LieCase::I();
    case FamilyId::II_i:
    case FamilyId::II_ii:
    case FamilyId::II_iii:
    case FamilyId::II_iv: return LieCase::II();
    case FamilyId::III_i:
    case FamilyId::III_ii:
    case FamilyId::III_iii: return LieCase::III();
    default: return LieCase::IV();
  }
}

std::vector<FamilyId> families_of(LieCase c) {
  std::vector<FamilyId> out;
  for (FamilyId f : kAllFamilies)
    if (family_case(f) == c) out.push_back(f);
  return out;
}

const std::optional<FieldElement>& FamilyParams::get(std::string_view name) const {
  if (name == "t0") return t0;
  if (name == "t1") return t1;
  if (name == "t2") return t2;
  if (name == "s") return s;
  if (name == "s1") return s1;
  if (name == "s2") return s2;
  if (name == "r2") return r2;
  throw DomainError("unknown parameter name " + std::string(name));
}

std::optional<FieldElement>& FamilyParams::get(std::string_view name) {
  return const_cast<std::optional<FieldElement>&>(std::as_const(*this).get(name));
}

std::vector<std::pair<std::string, FieldElement>> FamilyParams::items() const {
  std::vector<std::pair<std::string, FieldElement>> out;
  for (auto name : kNames)
    if (const auto& v = get(name)) out.emplace_back(std::string(name), *v);
  return out;
}

std::vector<std::string_view> required_params(FamilyId f) {
  switch (f) {
    case FamilyId::I_a:
    case FamilyId::I_b: return {"t1", "s"};
    case FamilyId::II_i:
    case FamilyId::II_ii:
    case FamilyId::II_iii: return {"t1", "t2"};
    case FamilyId::II_iv: return {"t0", "t1", "t2"};
    case FamilyId::III_i:
    case FamilyId::III_ii: return {"t1", "s"};
    case FamilyId::III_iii: return {"t1", "t2", "s"};
    case FamilyId::IV_i:
    case FamilyId::IV_ii: return {"t2", "s1"};
    case FamilyId::IV_iii: return {"s1", "s2", "r2"};
    case FamilyId::IV_iv: return {"t1", "t2", "s1", "s2"};
  }
  return {};
}

std::optional<std::string> params_violation(FamilyId f, const FamilyParams& p) {
  for (auto name : required_params(f))
    if (!p.get(name)) return "missing " + std::string(name);
  const FieldSpec& field = p.get(required_params(f).front())->field();
  for (auto name : required_params(f))
    if (&p.get(name)->field() != &field) return "parameters in distinct fields";

  auto nonzero = [&](std::string_view name) -> std::optional<std::string> {
    if (p.get(name)->is_zero()) return std::string(name) + " != 0";
    return std::nullopt;
  };
  auto distinct = [&](std::string_view x, std::string_view y) -> std::optional<std::string> {
    if (*p.get(x) == *p.get(y)) return std::string(x) + " != " + std::string(y);
    return std::nullopt;
  };

  std::vector<std::function<std::optional<std::string>()>> checks;
  switch (f) {
    case FamilyId::I_a:
    case FamilyId::I_b:
    case FamilyId::III_i:
    case FamilyId::III_ii: checks = {[&] { return nonzero("s"); }}; break;
    case FamilyId::II_i:
    case FamilyId::II_ii:
    case FamilyId::II_iii: checks = {[&] { return distinct("t1", "t2"); }}; break;
    case FamilyId::II_iv:
      checks = {[&] { return distinct("t0", "t1"); }, [&] { return distinct("t0", "t2"); },
                [&] { return distinct("t1", "t2"); }};
      break;
    case FamilyId::III_iii:
      checks = {[&] { return distinct("t1", "t2"); }, [&] { return nonzero("s"); }};
      break;
    case FamilyId::IV_i:
    case FamilyId::IV_ii: checks = {[&] { return nonzero("s1"); }}; break;
    case FamilyId::IV_iii:
      checks = {[&] { return nonzero("s1"); }, [&] { return nonzero("s2"); },
                [&] { return nonzero("r2"); }};
      break;
    case FamilyId::IV_iv:
      checks = {[&] { return nonzero("s1"); }, [&] { return nonzero("s2"); },
                [&] { return distinct("t1", "t2"); }};
      break;
  }
  for (const auto& check : checks)
    if (auto v = check()) return v;
  return std::nullopt;
}

DerivationTriple instantiate(FamilyId f, const FamilyParams& params, const FieldSpec& field) {
  if (field.characteristic() != 2)
    throw DomainError("families are defined in characteristic 2, got " + field.name());
  if (auto v = params_violation(f, params))
    throw InvalidParametersError(family_name(f) + ": parameter constraint violated: " + *v);

  auto val = [&](std::string_view name) { return embed(*params.get(name), field); };
  const Poly one = Poly::constant(field.one());
  const Poly t = Poly::monomial(field.one(), 1);
  const Poly zero(field);
  auto lin = [&](std::string_view root) { return Poly::linear_factor(val(root)); };  // t - root
  auto k = [&](const FieldElement& x) { return Poly::constant(x); };
  const LieCase lc = family_case(f);

  switch (f) {
    case FamilyId::I_a: return {lc, one, lin("t1").scale(val("s")), zero};
    case FamilyId::I_b: return {lc, lin("t1").scale(val("s")), one, zero};
    case FamilyId::II_i: {
      const auto d = (val("t1") + val("t2")).inv();
      return {lc, one, lin("t1").scale(d), (lin("t1") * lin("t2")).scale(d)};
    }
    case FamilyId::II_ii: {
      const auto d = (val("t1") + val("t2")).inv();
      return {lc, lin("t2").scale(d), one, (lin("t1") * lin("t2")).scale(d)};
    }
    case FamilyId::II_iii: return {lc, lin("t2"), lin("t1"), lin("t1") * lin("t2")};
    case FamilyId::II_iv:
      return {lc, lin("t2").scale(val("t0") + val("t1")), lin("t1").scale(val("t0") + val("t2")),
              lin("t0") * lin("t1") * lin("t2")};
    case FamilyId::III_i: {
      const Poly a = lin("t1").scale(val("s"));
      return {lc, a, one, a * lin("t1")};
    }
    case FamilyId::III_ii: return {lc, one, lin("t1").scale(val("s").inv()), lin("t1")};
    case FamilyId::III_iii:
      return {lc, lin("t2").scale(val("t1") + val("t2")), lin("t1").scale(val("s").inv()),
              lin("t1") * lin("t2") * lin("t2")};
    case FamilyId::IV_i:
      return {lc, one, t.scale(val("s1").inv()) + k(val("t2")), k(val("s1"))};
    case FamilyId::IV_ii:
      return {lc, t, k(val("s1").inv()) + t.scale(val("t2")), Poly::monomial(val("s1"), 3)};
    case FamilyId::IV_iii: {
      const Poly a = t + k(val("s1") * val("r2"));
      const auto p = val("s1") * val("s2");
      return {lc, a, k(p.inv()), (a * a * a).scale(p)};
    }
    case FamilyId::IV_iv: {
      const Poly a = lin("t1");
      const auto p = val("s1") * val("s2");
      return {lc, a, lin("t2").scale((p * (val("t1") + val("t2"))).inv()), (a * a * a).scale(p)};
    }
  }
  throw ConsistencyError("unhandled family");
}

std::optional<FieldElement> scalar_equivalent(const DerivationTriple& d1, const DerivationTriple& d2) {
  require_same_field(d1.field(), d2.field(), "scalar_equivalent");
  if (d1.lie_case() != d2.lie_case()) return std::nullopt;
  std::optional<FieldElement> lambda;
  for (auto [p1, p2] : {std::pair{&d1.a(), &d2.a()}, {&d1.b(), &d2.b()}, {&d1.c(), &d2.c()}}) {
    if (p1->is_zero()) continue;
    const auto lead = p1->leading();
    const auto other = p2->coeff(static_cast<std::size_t>(p1->degree().value()));
    if (other.is_zero()) return std::nullopt;
    lambda = other / lead;
    break;
  }
  if (!lambda) return std::nullopt;
  if (d1.a().scale(*lambda) == d2.a() && d1.b().scale(*lambda) == d2.b() &&
      d1.c().scale(*lambda) == d2.c())
    return lambda;
  return std::nullopt;
}

namespace {

std::vector<FieldElement> distinct_roots(const Poly& f) {
  std::vector<FieldElement> out;
  if (f.is_constant()) return out;
  const FieldSpec& E = f.field();
  for (FieldSpec::Value v = 0; v < E.order(); ++v) {
    FieldElement x(E, v);
    if (f.eval(x).is_zero()) out.push_back(x);
  }
  return out;
}

std::optional<FieldElement> ratio(const FieldElement& num, const FieldElement& den) {
  if (den.is_zero()) return std::nullopt;
  return num / den;
}

struct Context {
  const Poly& a;
  const Poly& b;
  const Poly& c;
  std::vector<FieldElement> ra, rb, rc;
};

// Parameter assignments worth verifying for a family. Root-type parameters range over roots of
// a, b, c; scale-type parameters follow from coefficient ratios.
std::vector<FamilyParams> candidates(FamilyId f, const Context& x) {
  std::vector<FamilyParams> out;
  const Poly& a = x.a;
  const Poly& b = x.b;
  const Poly& c = x.c;
  const FieldSpec& E = a.field();
  switch (f) {
    case FamilyId::I_a:
      if (a.is_constant() && b.degree() == 1)
        if (auto s = ratio(b.leading(), a.constant_term()))
          for (const auto& r : x.rb) out.push_back({.t1 = r, .s = *s});
      break;
    case FamilyId::I_b:
      if (b.is_constant() && a.degree() == 1)
        if (auto s = ratio(a.leading(), b.constant_term()))
          for (const auto& r : x.ra) out.push_back({.t1 = r, .s = *s});
      break;
    case FamilyId::II_i:
      for (const auto& r1 : x.rb)
        for (const auto& r2 : x.rc) out.push_back({.t1 = r1, .t2 = r2});
      break;
    case FamilyId::II_ii:
      for (const auto& r2 : x.ra)
        for (const auto& r1 : x.rc) out.push_back({.t1 = r1, .t2 = r2});
      break;
    case FamilyId::II_iii:
      for (const auto& r2 : x.ra)
        for (const auto& r1 : x.rb) out.push_back({.t1 = r1, .t2 = r2});
      break;
    case FamilyId::II_iv:
      for (const auto& r2 : x.ra)
        for (const auto& r1 : x.rb)
          for (const auto& r0 : x.rc) out.push_back({.t0 = r0, .t1 = r1, .t2 = r2});
      break;
    case FamilyId::III_i:
      if (b.is_constant())
        if (auto s = ratio(a.leading(), b.constant_term()))
          for (const auto& r : x.ra) out.push_back({.t1 = r, .s = *s});
      break;
    case FamilyId::III_ii:
      if (a.is_constant() && b.degree() == 1)
        if (auto s = ratio(a.constant_term(), b.leading()))
          for (const auto& r : x.rc) out.push_back({.t1 = r, .s = *s});
      break;
    case FamilyId::III_iii:
      if (b.degree() == 1)
        if (auto s = ratio(c.leading(), b.leading()))
          for (const auto& r1 : x.rb)
            for (const auto& r2 : x.ra) out.push_back({.t1 = r1, .t2 = r2, .s = *s});
      break;
    case FamilyId::IV_i:
      if (a.is_constant() && !a.is_zero())
        if (auto s1 = ratio(c.constant_term(), a.constant_term()))
          out.push_back({.t2 = *ratio(b.constant_term(), a.constant_term()), .s1 = *s1});
      break;
    case FamilyId::IV_ii:
      if (a.degree() == 1)
        if (auto s1 = ratio(c.coeff(3), a.leading()))
          out.push_back({.t2 = *ratio(b.coeff(1), a.leading()), .s1 = *s1});
      break;
    case FamilyId::IV_iii:
      // Only s1*r2 and s1*s2 are determined; s1 = 1 is the canonical representative.
      if (a.degree() == 1)
        if (auto s2 = ratio(c.coeff(3), a.leading()))
          for (const auto& r : x.ra) out.push_back({.s1 = E.one(), .s2 = *s2, .r2 = r});
      break;
    case FamilyId::IV_iv:
      if (a.degree() == 1)
        if (auto s2 = ratio(c.coeff(3), a.leading()))
          for (const auto& r1 : x.ra)
            for (const auto& r2 : x.rb)
              out.push_back({.t1 = r1, .t2 = r2, .s1 = E.one(), .s2 = *s2});
      break;
  }
  return out;
}

bool params_less(const FamilyParams& x, const FamilyParams& y) {
  for (auto name : FamilyParams::kNames) {
    const auto& vx = x.get(name);
    const auto& vy = y.get(name);
    if (vx.has_value() != vy.has_value()) return vy.has_value();
    if (vx && vx->value() != vy->value()) return vx->value() < vy->value();
  }
  return false;
}

}  // namespace

std::vector<FamilyMatch> classify(const DerivationTriple& d, unsigned max_ext) {
  if (auto violated = violated_conditions(d); !violated.empty()) {
    std::string msg = "not a foliation: " + d.to_string() + " violates ";
    for (std::size_t i = 0; i < violated.size(); ++i) msg += (i ? ", " : "") + violated[i];
    throw NotAFoliationError(msg);
  }
  // Every parameter is a root of a, b or c or a coefficient ratio, so all of them live in the
  // field generated by the roots.
  unsigned needed = 1;
  for (const Poly* f : {&d.a(), &d.b(), &d.c()})
    if (!f->is_constant())
      for (const auto& r : roots_in_extension(*f, max_ext)) needed = std::lcm(needed, r.ext_degree);

  std::vector<FamilyMatch> matches;
  std::vector<FamilyId> matched_families;
  for (unsigned m = 1; m <= needed; ++m) {
    if (needed % m != 0) continue;
    const FieldSpec& E = extension_of(d.field(), m);
    const DerivationTriple de = d.embed(E);
    Context ctx{de.a(), de.b(), de.c(), distinct_roots(de.a()), distinct_roots(de.b()),
                distinct_roots(de.c())};
    for (FamilyId f : families_of(d.lie_case())) {
      if (std::find(matched_families.begin(), matched_families.end(), f) != matched_families.end())
        continue;
      bool found = false;
      for (auto& params : candidates(f, ctx)) {
        if (params_violation(f, params)) continue;
        const auto lambda = scalar_equivalent(instantiate(f, params, E), de);
        if (!lambda) continue;
        const bool duplicate = std::any_of(matches.begin(), matches.end(), [&](const FamilyMatch& x) {
          return x.family == f && x.params == params;
        });
        if (duplicate) continue;
        matches.push_back({f, std::move(params), *lambda, m});
        found = true;
      }
      if (found) matched_families.push_back(f);
    }
  }
  std::sort(matches.begin(), matches.end(), [](const FamilyMatch& x, const FamilyMatch& y) {
    if (x.family != y.family) return x.family < y.family;
    return params_less(x.params, y.params);
  });
  return matches;
}

bool verify_match(const DerivationTriple& d, const FamilyMatch& m) {
  const FieldSpec& E = m.lambda.field();
  const DerivationTriple inst = instantiate(m.family, m.params, E);
  return scale(m.lambda, inst) == d.embed(E);
}

}  // namespace folclass
