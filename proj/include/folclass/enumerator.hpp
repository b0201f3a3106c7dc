#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "folclass/classifier.hpp"
#include "folclass/derivation.hpp"

namespace folclass {

struct EnumerationOptions {
  /// Worker threads; 0 means one.
  unsigned jobs = 1;
  /// Indices per work block. Results never depend on this or on `jobs`.
  std::uint64_t block_size = 1u << 14;
};

/// Number of triples with deg a, b <= 1 and deg c <= 3 other than (0, 0, 0): q^8 - 1.
std::uint64_t triple_count(const FieldSpec& field);

/// Triple number `index` (1 <= index <= q^8 - 1) in lexicographic order of the coefficient
/// vector (a1, a0, b1, b0, c3, c2, c1, c0), read as base-q digits, most significant first.
/// Index 1 is (0, 0, 1).
DerivationTriple triple_at(const FieldSpec& field, LieCase lie_case, std::uint64_t index);

/// Calls `visit` on every triple in lexicographic order. Throws DomainError for p != 2.
void enumerate_triples(const FieldSpec& field, LieCase lie_case,
                       const std::function<void(const DerivationTriple&)>& visit);

/// A triple is the lex-least member of its scalar class iff its first nonzero coefficient is 1.
bool is_class_representative(const DerivationTriple& d);

struct ValidSet {
  std::uint64_t total_triples = 0;
  std::uint64_t valid_count = 0;
  /// Lex-least representative of each valid scalar class, in lexicographic order.
  std::vector<DerivationTriple> classes;
};

/// Exhaustive validity filter with scalar deduplication.
ValidSet find_valid(const FieldSpec& field, LieCase lie_case, const EnumerationOptions& opts = {});

struct SoundnessFailure {
  FamilyId family;
  FamilyParams params;
  DerivationTriple triple;
  std::vector<std::string> violated;
};

struct FamilySoundness {
  FamilyId family;
  /// Constraint-satisfying assignments instantiated.
  std::uint64_t instances = 0;
  /// Assignments rejected by the parameter constraints before instantiation.
  std::uint64_t rejected = 0;
  std::uint64_t failures = 0;
};

struct SoundnessReport {
  const FieldSpec* field = nullptr;
  LieCase lie_case = LieCase::I();
  std::vector<FamilySoundness> families;
  /// At most `max_examples` per family, in enumeration order.
  std::vector<SoundnessFailure> counterexamples;
  bool passed() const;
};

/// Instantiates every family of the case at every constraint-satisfying assignment of its
/// parameters in `field` and checks validity.
SoundnessReport verify_soundness(const FieldSpec& field, LieCase lie_case, std::size_t max_examples = 16);

struct ClassRecord {
  DerivationTriple triple;
  std::vector<FamilyMatch> matches;
};

struct EnumerationReport {
  const FieldSpec* field = nullptr;
  LieCase lie_case = LieCase::I();
  unsigned max_ext = 6;
  std::uint64_t total_triples = 0;
  std::uint64_t valid_count = 0;
  std::uint64_t scalar_classes = 0;
  std::uint64_t matched = 0;
  /// Classes with c = 0 and with c != 0.
  std::uint64_t classes_c_zero = 0;
  std::uint64_t classes_c_nonzero = 0;
  std::vector<DerivationTriple> unmatched;
  std::vector<std::pair<DerivationTriple, std::vector<FamilyId>>> overlaps;
  /// Least extension degree among a class's matches -> number of classes.
  std::map<unsigned, std::uint64_t> ext_histogram;
  /// Family -> number of classes it matches.
  std::map<FamilyId, std::uint64_t> family_histogram;
  /// Every class with its matches, for detail output.
  std::vector<ClassRecord> classes;
  double runtime_seconds = 0;
};

/// Enumerates, filters, deduplicates and classifies every valid class.
EnumerationReport verify_completeness(const FieldSpec& field, LieCase lie_case, unsigned max_ext = 6,
                                      const EnumerationOptions& opts = {});

/// Worker count from FOLCLASS_JOBS, or `fallback` when unset. Throws ParseError when malformed.
unsigned jobs_from_environment(unsigned fallback = 1);

}  // namespace folclass
