#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "folclass/classifier.hpp"
#include "folclass/enumerator.hpp"

namespace folclass {

/// Insertion-ordered, so serialized output follows construction order exactly.
using Json = nlohmann::ordered_json;

std::string tool_version();

/// Identifies a run; embedded in every output file.
struct RunManifest {
  std::string command;
  std::string field;
  std::vector<std::string> cases;
  std::optional<std::string> family;
  std::optional<unsigned> max_ext;
  std::optional<unsigned> jobs;
  std::vector<std::string> outputs;
  /// Omitted from output when absent (--no-timing).
  std::optional<double> runtime_seconds;

  Json to_json() const;
};

Json element_json(const FieldElement& x);
/// {"case":"II","a":"1","b":"t","c":"t^2+t","field":"GF(4)"}
Json triple_json(const DerivationTriple& d);
/// {"family":"II-i","params":{"t1":"0","t2":"1"},"lambda":"1","ext":1}, plus "field" when the
/// parameters live in a proper extension.
Json match_json(const FamilyMatch& m);
Json completeness_json(const EnumerationReport& r);
Json soundness_json(const SoundnessReport& r);
Json valid_set_json(const FieldSpec& field, LieCase lie_case, const ValidSet& v);

/// Pretty JSON with a trailing newline.
std::string dump(const Json& j);

/// JSON-lines: a manifest record, then one record per line.
std::string json_lines(const RunManifest& manifest, const std::vector<Json>& records);

/// One CSV table: header row then rows, RFC 4180 quoting where needed.
std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows);

/// Writes through a temporary file in the same directory and renames it into place.
/// Throws Error naming the path on failure.
void write_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace folclass
