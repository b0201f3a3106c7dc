#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "folclass/derivation.hpp"

namespace folclass {

/// The thirteen families of rank-one p-closed foliations. Family I is split by which of a, b is
/// the constant: I-a has a constant, I-b has b constant.
enum class FamilyId {
  I_a, I_b,
  II_i, II_ii, II_iii, II_iv,
  III_i, III_ii, III_iii,
  IV_i, IV_ii, IV_iii, IV_iv,
};

constexpr std::array<FamilyId, 13> kAllFamilies = {
    FamilyId::I_a,    FamilyId::I_b,   FamilyId::II_i,   FamilyId::II_ii,  FamilyId::II_iii,
    FamilyId::II_iv,  FamilyId::III_i, FamilyId::III_ii, FamilyId::III_iii, FamilyId::IV_i,
    FamilyId::IV_ii,  FamilyId::IV_iii, FamilyId::IV_iv};

/// "I-a", "II-iv", ...
std::string family_name(FamilyId f);
FamilyId parse_family(std::string_view name);
LieCase family_case(FamilyId f);
std::vector<FamilyId> families_of(LieCase c);

/// Named scalar parameters; each family reads the subset listed by `required_params`.
struct FamilyParams {
  std::optional<FieldElement> t0, t1, t2, s, s1, s2, r2;

  /// Parameter slots in canonical order: t0, t1, t2, s, s1, s2, r2.
  static constexpr std::array<std::string_view, 7> kNames = {"t0", "t1", "t2", "s", "s1", "s2", "r2"};

  const std::optional<FieldElement>& get(std::string_view name) const;
  std::optional<FieldElement>& get(std::string_view name);

  /// Present parameters in canonical order.
  std::vector<std::pair<std::string, FieldElement>> items() const;

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

/// Parameter names the family formula consumes.
std::vector<std::string_view> required_params(FamilyId f);

/// Description of the first violated constraint ("t1 != t2", "s1 != 0", "missing t0", ...),
/// or nullopt when the assignment is admissible.
std::optional<std::string> params_violation(FamilyId f, const FamilyParams& params);

/// The family member with the given parameters, over `field` (parameters are embedded into it).
/// Throws InvalidParametersError naming the violated clause, DomainError for characteristic != 2.
///
/// III-iii uses c = (t - t1)(t - t2)^2, the p-closed member consistent with a = (t1+t2)(t-t2)
/// and b = (t - t1)/s.
DerivationTriple instantiate(FamilyId f, const FamilyParams& params, const FieldSpec& field);

struct FamilyMatch {
  FamilyId family;
  FamilyParams params;
  /// The input triple equals lambda * instantiate(family, params) after embedding.
  FieldElement lambda;
  /// Degree m of the field GF(q^m) holding params and lambda.
  unsigned ext = 1;
};

/// The unique nonzero lambda with d2 = lambda * d1, or nullopt. Cases must agree.
std::optional<FieldElement> scalar_equivalent(const DerivationTriple& d1, const DerivationTriple& d2);

/// Every family representation of a valid triple, with parameters in GF(q^m), m | lcm(1..max_ext),
/// each family reported at the smallest such m. Sorted by family, then parameter values.
/// Throws NotAFoliationError when d violates C1, C2 or C3.
std::vector<FamilyMatch> classify(const DerivationTriple& d, unsigned max_ext = 6);

/// Re-instantiates a match and checks it reproduces d exactly.
bool verify_match(const DerivationTriple& d, const FamilyMatch& m);

}  // namespace folclass
