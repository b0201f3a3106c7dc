#include "folclass/report.hpp"

#include <cerrno>
#include <cstring>
#include <fstream>

#include <unistd.h>

#include "folclass/error.hpp"

#ifndef FOLCLASS_VERSION
#define FOLCLASS_VERSION "0.0.0"
#endif

namespace folclass {

std::string tool_version() { return FOLCLASS_VERSION; }

Json RunManifest::to_json() const {
  Json j;
  j["tool"] = "folclass";
  j["version"] = tool_version();
  j["command"] = command;
  if (!field.empty()) j["field"] = field;
  if (!cases.empty()) j["cases"] = cases;
  if (family) j["family"] = *family;
  if (max_ext) j["max_ext"] = *max_ext;
  if (jobs) j["jobs"] = *jobs;
  if (!outputs.empty()) j["outputs"] = outputs;
  if (runtime_seconds) j["runtime_seconds"] = *runtime_seconds;
  return j;
}

Json element_json(const FieldElement& x) { return x.to_string(); }

Json triple_json(const DerivationTriple& d) {
  Json j;
  j["case"] = d.lie_case().name();
  j["a"] = d.a().to_string();
  j["b"] = d.b().to_string();
  j["c"] = d.c().to_string();
  j["field"] = d.field().name();
  return j;
}

Json match_json(const FamilyMatch& m) {
  Json j;
  j["family"] = family_name(m.family);
  Json params = Json::object();
  for (const auto& [name, value] : m.params.items()) params[name] = element_json(value);
  j["params"] = std::move(params);
  j["lambda"] = element_json(m.lambda);
  j["ext"] = m.ext;
  if (m.ext > 1) j["field"] = m.lambda.field().name();
  return j;
}

Json completeness_json(const EnumerationReport& r) {
  Json j;
  j["field"] = r.field->name();
  j["case"] = r.lie_case.name();
  j["max_ext"] = r.max_ext;
  j["total_triples"] = r.total_triples;
  j["valid_count"] = r.valid_count;
  j["scalar_classes"] = r.scalar_classes;
  j["matched"] = r.matched;
  j["classes_c_zero"] = r.classes_c_zero;
  j["classes_c_nonzero"] = r.classes_c_nonzero;
  j["unmatched_count"] = r.unmatched.size();
  Json unmatched = Json::array();
  for (const auto& d : r.unmatched) unmatched.push_back(triple_json(d));
  j["unmatched"] = std::move(unmatched);
  Json overlaps = Json::array();
  for (const auto& [d, families] : r.overlaps) {
    Json o;
    o["triple"] = triple_json(d);
    Json names = Json::array();
    for (FamilyId f : families) names.push_back(family_name(f));
    o["families"] = std::move(names);
    overlaps.push_back(std::move(o));
  }
  j["overlap_count"] = r.overlaps.size();
  j["overlaps"] = std::move(overlaps);
  Json ext = Json::object();
  for (const auto& [m, n] : r.ext_histogram) ext[std::to_string(m)] = n;
  j["ext_histogram"] = std::move(ext);
  Json fam = Json::object();
  for (const auto& [f, n] : r.family_histogram) fam[family_name(f)] = n;
  j["family_histogram"] = std::move(fam);
  return j;
}

Json soundness_json(const SoundnessReport& r) {
  Json j;
  j["field"] = r.field->name();
  j["case"] = r.lie_case.name();
  j["passed"] = r.passed();
  Json families = Json::array();
  for (const auto& f : r.families) {
    Json x;
    x["family"] = family_name(f.family);
    x["instances"] = f.instances;
    x["rejected"] = f.rejected;
    x["failures"] = f.failures;
    families.push_back(std::move(x));
  }
  j["families"] = std::move(families);
  Json examples = Json::array();
  for (const auto& c : r.counterexamples) {
    Json x;
    x["family"] = family_name(c.family);
    Json params = Json::object();
    for (const auto& [name, value] : c.params.items()) params[name] = element_json(value);
    x["params"] = std::move(params);
    x["triple"] = triple_json(c.triple);
    x["violated"] = c.violated;
    examples.push_back(std::move(x));
  }
  j["counterexamples"] = std::move(examples);
  return j;
}

Json valid_set_json(const FieldSpec& field, LieCase lie_case, const ValidSet& v) {
  Json j;
  j["field"] = field.name();
  j["case"] = lie_case.name();
  j["total_triples"] = v.total_triples;
  j["valid_count"] = v.valid_count;
  j["scalar_classes"] = v.classes.size();
  std::uint64_t c_zero = 0;
  for (const auto& d : v.classes) c_zero += d.c().is_zero();
  j["classes_c_zero"] = c_zero;
  j["classes_c_nonzero"] = v.classes.size() - c_zero;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string json_lines(const RunManifest& manifest, const std::vector<Json>& records) {
  Json head;
  head["kind"] = "manifest";
  head["manifest"] = manifest.to_json();
  std::string out = head.dump() + "\n";
  for (const auto& r : records) out += r.dump() + "\n";
  return out;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += csv_field(cells[i]);
    }
    out += '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
  return out;
}

void write_atomic(const std::filesystem::path& path, std::string_view content) {
  namespace fs = std::filesystem;
  fs::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw Error("cannot open " + tmp.string() + " for writing: " + std::strerror(errno));
    os.write(content.data(), static_cast<std::streamsize>(content.size()));
    os.flush();
    if (!os) {
      std::error_code ignored;
      fs::remove(tmp, ignored);
      throw Error("write failed for " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(tmp, ignored);
    throw Error("cannot rename " + tmp.string() + " to " + path.string() + ": " + ec.message());
  }
}

}  // namespace folclass
