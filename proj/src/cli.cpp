#include "folclass/cli.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "folclass/cartier.hpp"
#include "folclass/classifier.hpp"
#include "folclass/enumerator.hpp"
#include "folclass/error.hpp"
#include "folclass/parse.hpp"
#include "folclass/report.hpp"

namespace folclass {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Common {
  std::string field = "GF(4)";
  std::string cases = "all";
  unsigned max_ext = 6;
  unsigned jobs = 0;
  std::string output;
  std::string detail;
  std::string format = "json";
  bool no_timing = false;
};

void add_output_options(CLI::App* cmd, Common& o, bool with_detail) {
  cmd->add_option("-o,--output", o.output, "Write the summary to this file instead of stdout");
  if (with_detail)
    cmd->add_option("--detail", o.detail, "Also write per-class JSON-lines detail to this file");
  cmd->add_option("--format", o.format, "Summary format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  cmd->add_flag("--no-timing", o.no_timing, "Omit runtime fields (byte-stable output)");
}

std::vector<LieCase> parse_cases(const std::string& text) {
  if (text == "all") return {LieCase::I(), LieCase::II(), LieCase::III(), LieCase::IV()};
  std::vector<LieCase> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    LieCase c = LieCase::parse(item);
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  }
  if (out.empty()) throw ParseError("empty case list", text, 0);
  return out;
}

std::vector<std::string> case_names(const std::vector<LieCase>& cases) {
  std::vector<std::string> out;
  for (LieCase c : cases) out.push_back(c.name());
  return out;
}

unsigned resolve_jobs(unsigned flag) {
  if (flag > 0) return flag;
  return jobs_from_environment(std::max(1u, std::thread::hardware_concurrency()));
}

const FieldSpec& char2_field(const std::string& text) {
  const FieldSpec& f = parse_field_literal(text);
  if (f.characteristic() != 2)
    throw DomainError("derivation triples require characteristic 2, got " + f.name());
  return f;
}

RunManifest make_manifest(const std::string& command, const Common& o) {
  RunManifest m;
  m.command = command;
  if (!o.output.empty()) m.outputs.push_back(o.output);
  if (!o.detail.empty()) m.outputs.push_back(o.detail);
  return m;
}

void emit(const Common& o, std::ostream& out, const std::string& content) {
  if (o.output.empty())
    out << content;
  else
    write_atomic(o.output, content);
}

std::string runtime_cell(const Common& o, double seconds) {
  if (o.no_timing) return "";
  std::ostringstream ss;
  ss << seconds;
  return ss.str();
}

std::string params_cell(const FamilyParams& p) {
  std::string out;
  for (const auto& [name, value] : p.items()) {
    if (!out.empty()) out += ';';
    out += name + "=" + value.to_string();
  }
  return out;
}

int cmd_enumerate(const Common& o, std::ostream& out) {
  const auto start = Clock::now();
  const FieldSpec& field = char2_field(o.field);
  const auto cases = parse_cases(o.cases);
  EnumerationOptions opts;
  opts.jobs = resolve_jobs(o.jobs);

  RunManifest manifest = make_manifest("enumerate", o);
  manifest.field = field.name();
  manifest.cases = case_names(cases);

  Json results = Json::array();
  std::vector<Json> records;
  std::vector<std::vector<std::string>> rows;
  for (LieCase c : cases) {
    const auto case_start = Clock::now();
    ValidSet v = find_valid(field, c, opts);
    Json j = valid_set_json(field, c, v);
    const double dt = seconds_since(case_start);
    if (!o.no_timing) j["runtime_seconds"] = dt;
    if (!o.detail.empty())
      for (const auto& d : v.classes) {
        Json r;
        r["kind"] = "class";
        r["triple"] = triple_json(d);
        records.push_back(std::move(r));
      }
    rows.push_back({tool_version(), field.name(), c.name(), std::to_string(v.total_triples),
                    std::to_string(v.valid_count), std::to_string(v.classes.size()),
                    j["classes_c_zero"].dump(), j["classes_c_nonzero"].dump(), runtime_cell(o, dt)});
    results.push_back(std::move(j));
  }
  if (!o.no_timing) manifest.runtime_seconds = seconds_since(start);

  if (!o.detail.empty()) write_atomic(o.detail, json_lines(manifest, records));
  if (o.format == "csv") {
    emit(o, out,
         csv_table({"tool_version", "field", "case", "total_triples", "valid_count", "scalar_classes",
                    "classes_c_zero", "classes_c_nonzero", "runtime_seconds"},
                   rows));
  } else {
    Json j;
    j["manifest"] = manifest.to_json();
    j["results"] = std::move(results);
    emit(o, out, dump(j));
  }
  return kExitOk;
}

struct ClassifyArgs {
  std::string a = "0", b = "0", c = "0";
  std::string lie_case;
};

int cmd_classify(const Common& o, const ClassifyArgs& args, std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  const FieldSpec& field = char2_field(o.field);
  const LieCase c = LieCase::parse(args.lie_case);
  const DerivationTriple d(c, parse_poly_literal(args.a, field), parse_poly_literal(args.b, field),
                           parse_poly_literal(args.c, field));
  const auto matches = classify(d, o.max_ext);

  RunManifest manifest = make_manifest("classify", o);
  manifest.field = field.name();
  manifest.cases = {c.name()};
  manifest.max_ext = o.max_ext;
  if (!o.no_timing) manifest.runtime_seconds = seconds_since(start);

  if (o.format == "csv") {
    std::vector<std::vector<std::string>> rows;
    for (const auto& m : matches)
      rows.push_back({tool_version(), field.name(), c.name(), d.a().to_string(), d.b().to_string(),
                      d.c().to_string(), family_name(m.family), params_cell(m.params),
                      m.lambda.to_string(), std::to_string(m.ext), runtime_cell(o, seconds_since(start))});
    emit(o, out,
         csv_table({"tool_version", "field", "case", "a", "b", "c", "family", "params", "lambda", "ext",
                    "runtime_seconds"},
                   rows));
  } else {
    Json j;
    j["manifest"] = manifest.to_json();
    j["triple"] = triple_json(d);
    const auto closed = is_p_closed(d);
    if (closed.multiplier) j["multiplier"] = closed.multiplier->to_string();
    Json list = Json::array();
    for (const auto& m : matches) list.push_back(match_json(m));
    j["matches"] = std::move(list);
    emit(o, out, dump(j));
  }
  if (matches.empty()) {
    err << "finding: valid triple " << d.to_string() << " (case " << c.name()
        << ") matches no family with max_ext " << o.max_ext << "\n";
    return kExitFindings;
  }
  return kExitOk;
}

struct FamiliesArgs {
  std::string family;
};

int cmd_verify_families(const Common& o, const FamiliesArgs& args, std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  const FieldSpec& field = char2_field(o.field);
  std::optional<FamilyId> only;
  std::vector<LieCase> cases;
  if (!args.family.empty()) {
    only = parse_family(args.family);
    cases = {family_case(*only)};
  } else {
    cases = parse_cases(o.cases);
  }

  RunManifest manifest = make_manifest("verify-families", o);
  manifest.field = field.name();
  manifest.cases = case_names(cases);
  if (only) manifest.family = family_name(*only);

  bool passed = true;
  Json results = Json::array();
  std::vector<std::vector<std::string>> rows;
  for (LieCase c : cases) {
    const auto case_start = Clock::now();
    SoundnessReport r = verify_soundness(field, c);
    if (only) {
      std::erase_if(r.families, [&](const FamilySoundness& f) { return f.family != *only; });
      std::erase_if(r.counterexamples, [&](const SoundnessFailure& f) { return f.family != *only; });
    }
    passed = passed && r.passed();
    const double dt = seconds_since(case_start);
    for (const auto& f : r.families)
      rows.push_back({tool_version(), field.name(), c.name(), family_name(f.family),
                      std::to_string(f.instances), std::to_string(f.rejected),
                      std::to_string(f.failures), runtime_cell(o, dt)});
    for (const auto& x : r.counterexamples)
      err << "finding: " << family_name(x.family) << " " << params_cell(x.params) << " gives "
          << x.triple.to_string() << " which violates " << x.violated.front() << "\n";
    Json j = soundness_json(r);
    if (!o.no_timing) j["runtime_seconds"] = dt;
    results.push_back(std::move(j));
  }
  if (!o.no_timing) manifest.runtime_seconds = seconds_since(start);

  if (o.format == "csv") {
    emit(o, out,
         csv_table({"tool_version", "field", "case", "family", "instances", "rejected", "failures",
                    "runtime_seconds"},
                   rows));
  } else {
    Json j;
    j["manifest"] = manifest.to_json();
    j["passed"] = passed;
    j["results"] = std::move(results);
    emit(o, out, dump(j));
  }
  return passed ? kExitOk : kExitFindings;
}

int cmd_verify_theorem(const Common& o, std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  const FieldSpec& field = char2_field(o.field);
  const auto cases = parse_cases(o.cases);
  EnumerationOptions opts;
  opts.jobs = resolve_jobs(o.jobs);

  RunManifest manifest = make_manifest("verify-theorem", o);
  manifest.field = field.name();
  manifest.cases = case_names(cases);
  manifest.max_ext = o.max_ext;

  bool passed = true;
  Json results = Json::array();
  std::vector<Json> records;
  std::vector<std::vector<std::string>> rows;
  for (LieCase c : cases) {
    const auto case_start = Clock::now();
    const SoundnessReport sound = verify_soundness(field, c);
    const EnumerationReport complete = verify_completeness(field, c, o.max_ext, opts);
    const double dt = seconds_since(case_start);
    const bool case_passed = sound.passed() && complete.unmatched.empty();
    passed = passed && case_passed;

    for (const auto& d : complete.unmatched)
      err << "unmatched: case " << c.name() << " " << d.to_string() << "\n";
    if (!sound.passed())
      err << "unsound: case " << c.name() << " has " << sound.counterexamples.size()
          << " failing family instances (see report)\n";

    Json j;
    j["case"] = c.name();
    j["passed"] = case_passed;
    j["soundness"] = soundness_json(sound);
    j["completeness"] = completeness_json(complete);
    if (!o.no_timing) j["runtime_seconds"] = dt;
    results.push_back(std::move(j));

    if (!o.detail.empty())
      for (const auto& rec : complete.classes) {
        Json r;
        r["kind"] = "class";
        r["triple"] = triple_json(rec.triple);
        Json list = Json::array();
        for (const auto& m : rec.matches) list.push_back(match_json(m));
        r["matches"] = std::move(list);
        records.push_back(std::move(r));
      }
    rows.push_back({tool_version(), field.name(), c.name(), std::to_string(o.max_ext),
                    std::to_string(complete.total_triples), std::to_string(complete.valid_count),
                    std::to_string(complete.scalar_classes), std::to_string(complete.matched),
                    std::to_string(complete.unmatched.size()), std::to_string(complete.overlaps.size()),
                    sound.passed() ? "true" : "false", runtime_cell(o, dt)});
  }
  if (!o.no_timing) manifest.runtime_seconds = seconds_since(start);

  if (!o.detail.empty()) write_atomic(o.detail, json_lines(manifest, records));
  if (o.format == "csv") {
    emit(o, out,
         csv_table({"tool_version", "field", "case", "max_ext", "total_triples", "valid_count",
                    "scalar_classes", "matched", "unmatched", "overlaps", "sound", "runtime_seconds"},
                   rows));
  } else {
    Json j;
    j["manifest"] = manifest.to_json();
    j["passed"] = passed;
    j["results"] = std::move(results);
    emit(o, out, dump(j));
  }
  return passed ? kExitOk : kExitFindings;
}

struct CartierArgs {
  std::string quadric = "s,t";
  unsigned p = 0;
  std::vector<unsigned> exponents;
};

template <class Coeff>
Json cartier_runs(const Quadric<Coeff>& g, unsigned p, const std::vector<unsigned>& exponents,
                  bool timing, std::vector<std::vector<std::string>>& rows, bool& all_nonzero) {
  Json list = Json::array();
  for (unsigned e : exponents) {
    const auto start = Clock::now();
    const auto r = verify_nonvanishing(g, p, e);
    const double dt = seconds_since(start);
    all_nonzero = all_nonzero && r.nonzero;
    Json j;
    j["e"] = e;
    j["nonzero"] = r.nonzero;
    j["image"] = r.image.to_string();
    j["numerator_degree"] = r.image.numerator.total_degree();
    const auto& num = r.image.numerator;
    const bool inverse_g = num.term_count() == 1 && num.constant_term() != nullptr &&
                           *num.constant_term() == one_like(*num.constant_term());
    j["image_is_inverse_G"] = inverse_g;
    if (p == 2) j["numerator_squared_equals_G"] = num * num == g.poly();
    if (timing) j["runtime_seconds"] = dt;
    rows.push_back({tool_version(), std::to_string(p), g.poly().to_string(), std::to_string(e),
                    r.nonzero ? "true" : "false", r.image.to_string(),
                    timing ? std::to_string(dt) : std::string()});
    list.push_back(std::move(j));
  }
  return list;
}

int cmd_cartier(const Common& o, const CartierArgs& args, std::ostream& out) {
  const auto start = Clock::now();
  RunManifest manifest = make_manifest("cartier", o);

  const std::string& spec = args.quadric;
  const auto at = spec.find('@');
  const std::string coeffs = spec.substr(0, at);
  const auto comma = coeffs.find(',');
  if (comma == std::string::npos)
    throw ParseError("expected two coefficients 's,t' for G = s*x^2 + t*y^2 + 1", spec, coeffs.size());
  const std::string s_text = coeffs.substr(0, comma);
  const std::string t_text = coeffs.substr(comma + 1);

  std::vector<std::vector<std::string>> rows;
  bool all_nonzero = true;
  Json runs;
  unsigned p = args.p;
  Json quadric_json;
  if (at == std::string::npos) {
    if (s_text != "s" || t_text != "t")
      throw ParseError("symbolic quadric coefficients must be 's,t'; use 'a,b@GF(q)' for concrete ones",
                       spec, 0);
    if (p == 0) p = 2;
    if (p != 2) throw DomainError("symbolic quadric coefficients support p = 2 only");
    const auto g = symbolic_quadric();
    manifest.field = "symbolic";
    quadric_json = g.poly().to_string();
    std::vector<unsigned> es = args.exponents.empty() ? std::vector<unsigned>{1, 2, 3, 4} : args.exponents;
    runs = cartier_runs(g, p, es, !o.no_timing, rows, all_nonzero);
  } else {
    const FieldSpec& field = parse_field_literal(spec.substr(at + 1));
    if (p == 0) p = field.characteristic();
    if (p != field.characteristic())
      throw DomainError("--p " + std::to_string(p) + " does not match the characteristic of " + field.name());
    const auto g = Quadric<FieldElement>::diagonal(parse_element_literal(s_text, field),
                                                   parse_element_literal(t_text, field));
    manifest.field = field.name();
    quadric_json = g.poly().to_string();
    std::vector<unsigned> es =
        args.exponents.empty() ? (p == 2 ? std::vector<unsigned>{1, 2, 3, 4} : std::vector<unsigned>{1, 2, 3})
                               : args.exponents;
    runs = cartier_runs(g, p, es, !o.no_timing, rows, all_nonzero);
  }
  if (!o.no_timing) manifest.runtime_seconds = seconds_since(start);

  if (o.format == "csv") {
    emit(o, out, csv_table({"tool_version", "p", "G", "e", "nonzero", "image", "runtime_seconds"}, rows));
  } else {
    Json j;
    j["manifest"] = manifest.to_json();
    j["p"] = p;
    j["G"] = quadric_json;
    j["results"] = std::move(runs);
    emit(o, out, dump(j));
  }
  return all_nonzero ? kExitOk : kExitFindings;
}

struct FieldsArgs {
  std::vector<unsigned> primes{2, 3, 5, 7};
  unsigned max_order = 256;
};

std::string modulus_string(const std::vector<unsigned>& m) {
  std::string out;
  for (std::size_t i = m.size(); i-- > 0;) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (m[i] != 1 || i == 0) out += std::to_string(m[i]);
    if (i > 0) {
      if (m[i] != 1) out += "*";
      out += "x";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

int cmd_fields(const Common& o, const FieldsArgs& args, std::ostream& out) {
  RunManifest manifest = make_manifest("fields", o);
  Json list = Json::array();
  std::vector<std::vector<std::string>> rows;
  for (unsigned p : args.primes) {
    if (FieldSpec::canonical_modulus(p, 1).empty())
      throw DomainError(std::to_string(p) + " is not prime");
    std::uint64_t order = p;
    for (unsigned k = 1; order <= args.max_order; ++k, order *= p) {
      const FieldSpec& f = FieldSpec::get(p, k);
      Json j;
      j["name"] = f.name();
      j["p"] = p;
      j["k"] = k;
      j["order"] = f.order();
      j["modulus"] = modulus_string(f.modulus());
      j["generator"] = k > 1 ? "u" : "";
      list.push_back(std::move(j));
      rows.push_back({f.name(), std::to_string(p), std::to_string(k), std::to_string(f.order()),
                      modulus_string(f.modulus())});
    }
  }
  if (o.format == "csv") {
    emit(o, out, csv_table({"name", "p", "k", "order", "modulus"}, rows));
  } else {
    Json j;
    j["manifest"] = manifest.to_json();
    j["fields"] = std::move(list);
    emit(o, out, dump(j));
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Classify and verify rank-one p-closed foliations given by derivation triples", "folclass"};
  app.set_version_flag("--version", tool_version());
  app.require_subcommand(1);

  Common common;
  ClassifyArgs classify_args;
  FamiliesArgs families_args;
  CartierArgs cartier_args;
  FieldsArgs fields_args;

  auto field_opt = [&](CLI::App* cmd) {
    cmd->add_option("--field", common.field, "Coefficient field, e.g. GF(4) or GF(8;mod=x3+x2+1)")
        ->capture_default_str();
  };
  auto jobs_opt = [&](CLI::App* cmd) {
    cmd->add_option("-j,--jobs", common.jobs, "Worker threads (default: FOLCLASS_JOBS, else all cores)")
        ->check(CLI::PositiveNumber);
  };

  auto* enumerate = app.add_subcommand("enumerate", "List valid scalar classes of triples");
  field_opt(enumerate);
  enumerate->add_option("--case", common.cases, "I, II, III, IV, a comma list, or all")->capture_default_str();
  jobs_opt(enumerate);
  add_output_options(enumerate, common, true);

  auto* classify_cmd = app.add_subcommand("classify", "Classify one triple into families");
  field_opt(classify_cmd);
  classify_cmd->add_option("--case", classify_args.lie_case, "I, II, III or IV")->required();
  classify_cmd->add_option("--a", classify_args.a, "Polynomial a(t)")->capture_default_str();
  classify_cmd->add_option("--b", classify_args.b, "Polynomial b(t)")->capture_default_str();
  classify_cmd->add_option("--c", classify_args.c, "Polynomial c(t)")->capture_default_str();
  classify_cmd->add_option("--max-ext", common.max_ext, "Largest extension degree searched")
      ->check(CLI::Range(1u, 12u))
      ->capture_default_str();
  add_output_options(classify_cmd, common, false);

  auto* families = app.add_subcommand("verify-families", "Check every family instance is a valid foliation");
  field_opt(families);
  families->add_option("--case", common.cases, "I, II, III, IV, a comma list, or all")->capture_default_str();
  families->add_option("--family", families_args.family, "Restrict to one family, e.g. III-iii");
  add_output_options(families, common, false);

  auto* theorem = app.add_subcommand("verify-theorem", "Exhaustive soundness and completeness check");
  field_opt(theorem);
  theorem->add_option("--case", common.cases, "I, II, III, IV, a comma list, or all")->capture_default_str();
  theorem->add_option("--max-ext", common.max_ext, "Largest extension degree searched")
      ->check(CLI::Range(1u, 12u))
      ->capture_default_str();
  jobs_opt(theorem);
  add_output_options(theorem, common, true);

  auto* cartier = app.add_subcommand("cartier", "Trace of x^(q-1) y^(q-1)/G dx^dy under iterated Cartier");
  cartier->add_option("--G", cartier_args.quadric,
                      "Coefficients of G = s*x^2 + t*y^2 + 1: 's,t' (symbolic) or 'u,u+1@GF(4)'")
      ->capture_default_str();
  cartier->add_option("--p", cartier_args.p, "Characteristic (default: from the coefficients)");
  cartier->add_option("--e", cartier_args.exponents, "Frobenius iterates, e.g. 1,2,3")
      ->delimiter(',')
      ->check(CLI::Range(1u, 8u));
  add_output_options(cartier, common, false);

  auto* fields = app.add_subcommand("fields", "List supported fields and their moduli");
  fields->add_option("--p", fields_args.primes, "Characteristics to list")->delimiter(',');
  fields->add_option("--max-order", fields_args.max_order, "Largest field order")
      ->check(CLI::Range(2u, 65536u))
      ->capture_default_str();
  add_output_options(fields, common, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*enumerate) return cmd_enumerate(common, out);
    if (*classify_cmd) return cmd_classify(common, classify_args, out, err);
    if (*families) return cmd_verify_families(common, families_args, out, err);
    if (*theorem) return cmd_verify_theorem(common, out, err);
    if (*cartier) return cmd_cartier(common, cartier_args, out);
    if (*fields) return cmd_fields(common, fields_args, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace folclass
