#include "tstruct/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "tstruct/curve_homology.hpp"
#include "tstruct/enumeration.hpp"
#include "tstruct/error.hpp"
#include "tstruct/io.hpp"

namespace tstruct::cli {

namespace {

using io::json;
namespace fs = std::filesystem;

enum class Format { kRecords, kCsv };

struct Common {
  std::string output;
  std::string format = "records";
  bool verbose = false;
};

class Emitter {
 public:
  Emitter(std::ostream& out, std::ostream& err, const Common& common) : out_(out), err_(err), common_(common) {
    if (!common.output.empty()) {
      file_.open(common.output, std::ios::binary);
      if (!file_) throw ParseError("cannot write " + common.output);
    }
  }

  std::ostream& out() { return common_.output.empty() ? out_ : file_; }
  std::ostream& err() { return err_; }

  void finding(const std::string& kind, const std::string& message, json extra = json::object()) {
    extra["error"] = kind;
    extra["message"] = message;
    err_ << extra.dump() << "\n";
  }
  void info(const json& record) {
    if (common_.verbose) err_ << record.dump() << "\n";
  }

 private:
  std::ostream& out_;
  std::ostream& err_;
  const Common& common_;
  std::ofstream file_;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

Format parse_format(const std::string& s) {
  if (s == "records") return Format::kRecords;
  if (s == "csv") return Format::kCsv;
  throw ParseError("unknown output format '" + s + "' (expected records or csv)");
}

int parse_int(std::string_view s, const std::string& whole) {
  int v = 0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  if (!s.empty() && s.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || first == last) throw ParseError("malformed range '" + whole + "'");
  return v;
}

/// "a..b" is [a, b); "a..=b" is [a, b]. Returned half-open.
Window parse_window(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw ParseError("malformed range '" + text + "' (expected a..b or a..=b)");
  const std::string_view lhs(text.data(), dots);
  std::string_view rhs(text.data() + dots + 2, text.size() - dots - 2);
  const bool inclusive = !rhs.empty() && rhs.front() == '=';
  if (inclusive) rhs.remove_prefix(1);
  Window w{parse_int(lhs, text), parse_int(rhs, text)};
  if (inclusive) ++w.hi;
  if (w.hi < w.lo) throw ParseError("empty range '" + text + "'");
  return w;
}

std::size_t max_points_from_env() {
  if (const char* env = std::getenv(kMaxPointsEnv); env != nullptr && *env != '\0') {
    const std::string s(env);
    const int v = parse_int(s, s);
    if (v < 0) throw ParseError(std::string(kMaxPointsEnv) + " must be nonnegative");
    return static_cast<std::size_t>(v);
  }
  return EnumerationOptions::kDefaultMaxPoints;
}

/// Poset for a filtration/perversity/support document: --poset wins,
/// otherwise a "poset" field holding a path or an inline poset.
PosetRef resolve_poset(const json& doc, const fs::path& doc_path, const std::string& poset_flag) {
  if (!poset_flag.empty()) return io::poset_from_json(io::read_json_file(poset_flag));
  if (doc.is_object() && doc.contains("poset")) {
    const auto& ref = doc["poset"];
    if (ref.is_string()) {
      fs::path p(ref.get<std::string>());
      if (p.is_relative()) p = doc_path.parent_path() / p;
      return io::poset_from_json(io::read_json_file(p));
    }
    return io::poset_from_json(ref);
  }
  throw ParseError(doc_path.string() + ": no poset given (use --poset or a \"poset\" field)");
}

std::string detect_kind(const json& doc) {
  if (!doc.is_object()) throw ParseError("expected a JSON object");
  if (doc.contains("points")) return "poset";
  if (doc.contains("map")) return "morphism";
  if (doc.contains("values")) return "perversity";
  if (doc.contains("entries")) return "support";
  if (doc.contains("lo") || doc.contains("constant")) return "filtration";
  throw ParseError("cannot tell which kind of document this is");
}

json witness_json(const SpectralPoset& poset, const PairWitness& w) {
  return {{"special", poset.id(w.special)}, {"generic", poset.id(w.generic)}};
}

json cousin_json(const SpectralPoset& poset, const CousinResult& r) {
  json j{{"thomason_cousin", r.ok}};
  if (r.witness) {
    j["witness"] = {{"special", poset.id(r.witness->special)},
                    {"generic", poset.id(r.witness->generic)},
                    {"level", r.witness->level}};
  }
  return j;
}

json diagnostic_json(const SpectralPoset& poset, const ThomasonDiagnostic& d) {
  json j{{"thomason", d.ok}};
  if (!d.ok) {
    j["message"] = d.message;
    if (d.index) j["index"] = *d.index;
    if (d.point) j["point"] = poset.id(*d.point);
  }
  return j;
}

// ---------------------------------------------------------------- validate

struct ValidateArgs {
  std::string file;
  std::string poset;
  std::string kind;
};

int cmd_validate(const ValidateArgs& a, Emitter& em) {
  const auto doc = io::read_json_file(a.file);
  const auto kind = a.kind.empty() ? detect_kind(doc) : a.kind;
  json summary{{"kind", kind}, {"file", a.file}};
  bool ok = true;

  if (kind == "poset") {
    const auto p = io::poset_from_json(doc);
    summary["points"] = p->size();
    summary["covers"] = p->covers().size();
    summary["graded"] = p->is_graded();
    summary["components"] = p->connected_components().size();
  } else if (kind == "morphism") {
    const auto f = io::morphism_from_json(doc, fs::path(a.file).parent_path());
    const auto codim = satisfies_codim_inequality(f);
    summary["codim_inequality"] = codim.ok;
    if (codim.witness) summary["witness"] = witness_json(*f.source(), *codim.witness);
  } else if (kind == "perversity") {
    const auto poset = resolve_poset(doc, a.file, a.poset);
    const auto p = io::perversity_from_json(doc, poset);
    const auto mono = is_monotone(p);
    const auto comono = is_comonotone(p);
    summary["monotone"] = mono.ok;
    summary["comonotone"] = comono.ok;
    if (mono.witness) summary["monotone_witness"] = witness_json(*poset, *mono.witness);
    if (comono.witness) summary["comonotone_witness"] = witness_json(*poset, *comono.witness);
  } else if (kind == "support") {
    const auto poset = resolve_poset(doc, a.file, a.poset);
    summary["entries"] = io::support_from_json(doc, poset).entries().size();
  } else if (kind == "filtration") {
    const auto poset = resolve_poset(doc, a.file, a.poset);
    const auto f = io::filtration_from_json(doc, poset);
    const auto diag = validate_thomason(f);
    summary.update(diagnostic_json(*poset, diag));
    if (!diag) {
      em.finding("validation", diag.message, diagnostic_json(*poset, diag));
      ok = false;
    }
  } else {
    throw ParseError("unknown document kind '" + kind + "'");
  }
  em.out() << summary.dump() << "\n";
  return ok ? kSuccess : kValidationFailure;
}

// ----------------------------------------------------------------- convert

struct ConvertArgs {
  std::string to_filtration;
  std::string to_perversity;
  std::string poset;
};

int cmd_convert(const ConvertArgs& a, Emitter& em) {
  if (a.to_filtration.empty() == a.to_perversity.empty()) {
    throw ParseError("convert needs exactly one of --to-filtration and --to-perversity");
  }
  if (!a.to_filtration.empty()) {
    const auto doc = io::read_json_file(a.to_filtration);
    const auto poset = resolve_poset(doc, a.to_filtration, a.poset);
    const auto result = to_filtration(io::perversity_from_json(doc, poset));
    em.out() << io::dump(io::to_json(result.filtration));
    if (!result.status) {
      em.finding("validation", "perversity is not monotone: " + result.status.message,
                 diagnostic_json(*poset, result.status));
      return kValidationFailure;
    }
    return kSuccess;
  }
  const auto doc = io::read_json_file(a.to_perversity);
  const auto poset = resolve_poset(doc, a.to_perversity, a.poset);
  const auto p = from_filtration(io::filtration_from_json(doc, poset));
  em.out() << io::dump(io::to_json(p));
  return kSuccess;
}

// ---------------------------------------------------------------- classify

struct ClassifyArgs {
  std::string file;
  std::string poset;
};

int cmd_classify(const ClassifyArgs& a, Emitter& em) {
  const auto doc = io::read_json_file(a.file);
  const auto poset = resolve_poset(doc, a.file, a.poset);
  const auto f = io::filtration_from_json(doc, poset);
  const auto diag = validate_thomason(f);
  json record = diagnostic_json(*poset, diag);
  if (!diag) {
    em.out() << record.dump() << "\n";
    em.finding("validation", diag.message);
    return kValidationFailure;
  }
  const auto tc = is_thomason_cousin(f);
  record.update(cousin_json(*poset, tc));
  record["cover_cousin"] = is_cousin_via_covers(f);
  record["tensor_t_structure"] = tc.ok;
  em.out() << record.dump() << "\n";
  if (!tc) {
    em.finding("validation", "filtration is not Thomason-Cousin", cousin_json(*poset, tc));
    return kValidationFailure;
  }
  return kSuccess;
}

// --------------------------------------------------------------- enumerate

struct EnumerateArgs {
  std::string poset;
  std::string window;
  std::string range;
  std::string what = "filtrations";
  bool count_only = false;
  unsigned parallelism = 1;
  std::optional<std::size_t> max_points;
};

int cmd_enumerate(const EnumerateArgs& a, const Common& common, Emitter& em) {
  const auto format = parse_format(common.format);
  const auto poset = io::poset_from_json(io::read_json_file(a.poset));
  EnumerationOptions options;
  options.parallelism = std::max(1U, a.parallelism);
  options.max_points = a.max_points ? *a.max_points : max_points_from_env();
  const Enumerator en(poset, options);
  auto& out = em.out();

  auto need_window = [&]() -> Window {
    if (a.window.empty()) throw ParseError("--window is required for '" + a.what + "'");
    return parse_window(a.window);
  };
  auto emit_count = [&](const std::string& what, std::int64_t lo, std::int64_t hi, std::size_t count) {
    if (format == Format::kCsv) {
      out << "what,lo,hi,count\n" << what << "," << lo << "," << hi << "," << count << "\n";
    } else {
      out << count << "\n";
    }
  };

  if (a.what == "filtrations") {
    const auto w = need_window();
    if (a.count_only || format == Format::kCsv) {
      emit_count("tc_filtrations", w.lo, w.hi, en.count_tc_filtrations(w));
      return kSuccess;
    }
    for (const auto& f : en.tc_filtrations(w)) out << io::to_json(f).dump() << "\n";
    return kSuccess;
  }
  if (a.what == "perversities") {
    ValueRange r;
    if (!a.range.empty()) {
      const auto w = parse_window(a.range);
      r = ValueRange{w.lo, w.hi - 1};
      if (r.hi < r.lo) throw ParseError("empty value range '" + a.range + "'");
    } else {
      r = matching_range(need_window());
    }
    const auto ps = en.mc_perversities(r);
    if (a.count_only || format == Format::kCsv) {
      emit_count("mc_perversities", r.lo, r.hi, ps.size());
      return kSuccess;
    }
    for (const auto& p : ps) out << io::to_json(p).dump() << "\n";
    return kSuccess;
  }
  if (a.what == "down-sets") {
    const auto& sets = en.down_sets();
    if (a.count_only || format == Format::kCsv) {
      emit_count("down_sets", 0, static_cast<std::int64_t>(poset->size()), sets.size());
      return kSuccess;
    }
    for (auto s : sets) out << json(poset->ids_of(s)).dump() << "\n";
    return kSuccess;
  }
  if (a.what == "constant") {
    const auto fs = en.constant_tc_filtrations();
    if (a.count_only || format == Format::kCsv) {
      emit_count("constant_tc_filtrations", 0, 0, fs.size());
      return kSuccess;
    }
    for (const auto& f : fs) out << io::to_json(f).dump() << "\n";
    return kSuccess;
  }
  if (a.what == "crosscheck") {
    const auto w = need_window();
    const auto report = crosscheck_counts(poset, w, options);
    if (format == Format::kCsv) {
      out << "window_lo,window_hi,range_lo,range_hi,tc_count,mc_count,bijective\n"
          << w.lo << "," << w.hi << "," << report.range.lo << "," << report.range.hi << "," << report.tc_count << ","
          << report.mc_count << "," << (report.bijective ? "true" : "false") << "\n";
    } else {
      json j{{"window", {w.lo, w.hi}},
             {"range", {report.range.lo, report.range.hi}},
             {"tc_count", report.tc_count},
             {"mc_count", report.mc_count},
             {"bijective", report.bijective}};
      if (report.mismatch) j["mismatch"] = *report.mismatch;
      out << j.dump() << "\n";
    }
    if (!report.ok()) {
      em.finding("validation", report.mismatch.value_or("count mismatch"));
      return kValidationFailure;
    }
    return kSuccess;
  }
  throw ParseError("unknown enumeration target '" + a.what + "'");
}

// ---------------------------------------------------------------- pullback

struct PullbackArgs {
  std::string morphism;
  std::string perversity;
  std::string filtration;
};

int cmd_pullback(const PullbackArgs& a, Emitter& em) {
  if (a.perversity.empty() == a.filtration.empty()) {
    throw ParseError("pullback needs exactly one of --perversity and --filtration");
  }
  const auto f = io::morphism_from_json(io::read_json_file(a.morphism), fs::path(a.morphism).parent_path());
  const auto codim = satisfies_codim_inequality(f);
  json checks{{"codim_inequality", codim.ok}};
  if (codim.witness) checks["codim_witness"] = witness_json(*f.source(), *codim.witness);

  if (!a.perversity.empty()) {
    const auto p = io::perversity_from_json(io::read_json_file(a.perversity), f.target());
    const auto q = pullback_perversity(f, p);
    checks["monotone"] = is_monotone(q).ok;
    checks["comonotone"] = is_comonotone(q).ok;
    em.out() << io::dump(io::to_json(q));
  } else {
    const auto phi = io::filtration_from_json(io::read_json_file(a.filtration), f.target());
    if (auto diag = validate_thomason(phi); !diag) {
      em.finding("validation", "input filtration is not Thomason: " + diag.message);
      return kValidationFailure;
    }
    const auto psi = pullback_filtration(f, phi);
    checks["thomason_cousin"] = is_thomason_cousin(psi).ok;
    em.out() << io::dump(io::to_json(psi));
  }
  em.info(checks);
  return kSuccess;
}

// ------------------------------------------------------------------- curve

struct CurveArgs {
  int genus = 1;
  int rank = 1;
  int degree = 1;
  int line_degree = 0;
  bool nontrivial = false;
  int max_rank = 3;
  int max_degree = 3;
  int max_shift = 1;
  std::string window;
  std::string classes;
  bool tensor = false;
  bool no_bundle_rule = false;
  unsigned parallelism = 1;
};

int cmd_curve_table(const CurveArgs& a, const Common& common, Emitter& em) {
  const auto format = parse_format(common.format);
  const curve::CurveContext ctx(a.genus);
  const auto t = curve::SheafClass::torsion(a.degree);
  const auto w = curve::SheafClass::bundle(a.rank, a.line_degree, a.line_degree == 0 && !a.nontrivial);
  struct Row {
    const char* label;
    const char* hom;
    std::int64_t value;
  };
  const Row rows[] = {
      {"a", "Hom(T,W)", curve::hom_dim_table(ctx, t, w, 0)},
      {"b", "Hom(T,W[1])", curve::hom_dim_table(ctx, t, w, 1)},
      {"c", "Hom(W,W)", curve::hom_dim_table(ctx, w, w, 0)},
      {"d", "Hom(W,W[1])", curve::hom_dim_table(ctx, w, w, 1)},
      {"e", "Hom(W,T)", curve::hom_dim_table(ctx, w, t, 0)},
      {"f", "Hom(W,T[1])", curve::hom_dim_table(ctx, w, t, 1)},
  };
  auto& out = em.out();
  if (format == Format::kCsv) {
    out << "formula,hom,genus,rank,degree,value\n";
    for (const auto& r : rows) {
      out << r.label << "," << csv_field(r.hom) << "," << a.genus << "," << a.rank << "," << a.degree << "," << r.value << "\n";
    }
  } else {
    json j{{"genus", a.genus}, {"T", t.to_string()}, {"W", w.to_string()}};
    for (const auto& r : rows) j["dims"][r.hom] = r.value;
    out << j.dump() << "\n";
  }
  return kSuccess;
}

int cmd_curve_obstructions(const CurveArgs& a, const Common& common, Emitter& em) {
  const auto format = parse_format(common.format);
  if (a.genus < 1) {
    em.finding("validation", "the nonexistence results need genus at least 1", {{"genus", a.genus}});
    return kValidationFailure;
  }
  const auto report = curve::check_nonexistence_obstructions(curve::CurveContext(a.genus),
                                                             {a.max_rank, a.max_degree, a.max_shift});
  auto& out = em.out();
  if (format == Format::kCsv) {
    out << "check,subject,value,expected,passed\n";
    for (const auto& c : report.checks) {
      out << csv_field(c.name) << "," << csv_field(c.subject) << "," << c.value << "," << c.expected << "," << (c.passed ? "true" : "false")
          << "\n";
    }
  } else {
    json checks = json::array();
    for (const auto& c : report.checks) {
      checks.push_back(
          {{"check", c.name}, {"subject", c.subject}, {"value", c.value}, {"expected", c.expected}, {"passed", c.passed}});
    }
    out << json{{"genus", report.genus},
                {"checked", report.checks.size()},
                {"failures", report.failures()},
                {"checks", checks}}
               .dump()
        << "\n";
  }
  if (report.failures() != 0) {
    em.finding("validation", std::to_string(report.failures()) + " obstruction checks failed");
    return kValidationFailure;
  }
  return kSuccess;
}

int cmd_curve_bipartitions(const CurveArgs& a, const Common& common, Emitter& em) {
  const auto format = parse_format(common.format);
  if (a.window.empty() || a.classes.empty()) throw ParseError("bipartitions needs --window and --classes");
  const auto w = parse_window(a.window);
  if (w.length() == 0) throw ParseError("empty shift window '" + a.window + "'");
  const auto classes = io::object_classes_from_json(io::read_json_file(a.classes));
  curve::BipartitionRules rules;
  rules.tensor = a.tensor;
  rules.bundle_at_every_shift = !a.no_bundle_rule;
  rules.parallelism = std::max(1U, a.parallelism);
  const auto found = curve::search_admissible_bipartitions(curve::CurveContext(a.genus), classes, w.lo, w.hi - 1, rules);

  auto& out = em.out();
  if (format == Format::kCsv) {
    out << "bipartition,class,side\n";
    for (std::size_t k = 0; k < found.size(); ++k) {
      for (std::size_t c = 0; c < classes.size(); ++c) {
        const auto side = found[k].sides[c];
        out << k << "," << csv_field(classes[c].to_string()) << ","
            << (side == curve::Side::kX ? "X" : side == curve::Side::kY ? "Y" : "-") << "\n";
      }
    }
  } else {
    json list = json::array();
    for (const auto& b : found) {
      json x = json::array();
      json y = json::array();
      for (std::size_t c = 0; c < classes.size(); ++c) {
        if (b.sides[c] == curve::Side::kX) x.push_back(classes[c].to_string());
        if (b.sides[c] == curve::Side::kY) y.push_back(classes[c].to_string());
      }
      list.push_back({{"X", x}, {"Y", y}});
    }
    out << json{{"count", found.size()}, {"bipartitions", list}}.dump() << "\n";
  }
  return kSuccess;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tensor t-structures on finite spectral posets, and Hom obstructions on curves", "tstruct"};
  app.require_subcommand(1, 1);
  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-o,--output", common.output, "Write results to this file instead of stdout");
    sub->add_option("--format", common.format, "Output format: records or csv")->capture_default_str();
    sub->add_flag("-v,--verbose", common.verbose, "Report extra checks on stderr");
  };

  ValidateArgs validate_args;
  auto* validate = app.add_subcommand("validate", "Validate a poset, filtration, perversity, support or morphism file");
  validate->add_option("file", validate_args.file, "Input file")->required();
  validate->add_option("--poset", validate_args.poset, "Poset file for filtrations, perversities and supports");
  validate->add_option("--kind", validate_args.kind, "Document kind (default: detected)");
  add_common(validate);

  ConvertArgs convert_args;
  auto* convert = app.add_subcommand("convert", "Convert between perversity and filtration files");
  convert->add_option("--to-filtration", convert_args.to_filtration, "Perversity file to convert");
  convert->add_option("--to-perversity", convert_args.to_perversity, "Filtration file to convert");
  convert->add_option("--poset", convert_args.poset, "Poset file");
  add_common(convert);

  ClassifyArgs classify_args;
  auto* classify = app.add_subcommand("classify", "Decide whether a filtration is Thomason-Cousin");
  classify->add_option("file", classify_args.file, "Filtration file")->required();
  classify->add_option("--poset", classify_args.poset, "Poset file");
  add_common(classify);

  EnumerateArgs enum_args;
  std::size_t max_points_flag = 0;
  auto* enumerate = app.add_subcommand("enumerate", "Enumerate down-sets, TC filtrations or perversities");
  enumerate->add_option("poset", enum_args.poset, "Poset file")->required();
  enumerate->add_option("--window", enum_args.window, "Level window a..b (half-open) or a..=b");
  enumerate->add_option("--range", enum_args.range, "Perversity value range a..b (half-open) or a..=b");
  enumerate->add_option("--what", enum_args.what, "filtrations, perversities, down-sets, constant or crosscheck")
      ->capture_default_str();
  enumerate->add_flag("--count-only", enum_args.count_only, "Print only the count");
  enumerate->add_option("-j,--parallelism", enum_args.parallelism, "Worker threads")->check(CLI::PositiveNumber);
  auto* max_points_opt =
      enumerate->add_option("--max-points", max_points_flag, "Override the enumeration size bound");
  add_common(enumerate);

  PullbackArgs pullback_args;
  auto* pullback = app.add_subcommand("pullback", "Pull a perversity or filtration back along a morphism");
  pullback->add_option("--morphism", pullback_args.morphism, "Morphism file")->required();
  pullback->add_option("--perversity", pullback_args.perversity, "Perversity on the target");
  pullback->add_option("--filtration", pullback_args.filtration, "Filtration on the target");
  add_common(pullback);

  CurveArgs curve_args;
  auto* curve_cmd = app.add_subcommand("curve", "Hom dimensions and obstructions on a smooth projective curve");
  curve_cmd->require_subcommand(1, 1);
  auto* table = curve_cmd->add_subcommand("table", "The six Hom dimensions between T and W");
  table->add_option("--genus", curve_args.genus)->required();
  table->add_option("--rank", curve_args.rank)->required();
  table->add_option("--degree", curve_args.degree, "Degree of the torsion sheaf")->required();
  table->add_option("--line-degree", curve_args.line_degree, "Degree of the line bundle L in W = L^r");
  table->add_flag("--nontrivial", curve_args.nontrivial, "Use a nontrivial degree-0 line bundle");
  add_common(table);
  auto* obstructions = curve_cmd->add_subcommand("obstructions", "Grid check of the nonexistence inequalities");
  obstructions->add_option("--genus", curve_args.genus)->required();
  obstructions->add_option("--max-rank", curve_args.max_rank)->capture_default_str();
  obstructions->add_option("--max-degree", curve_args.max_degree)->capture_default_str();
  obstructions->add_option("--max-shift", curve_args.max_shift)->capture_default_str();
  add_common(obstructions);
  auto* bipartitions = curve_cmd->add_subcommand("bipartitions", "Search class bipartitions obeying w1, w2");
  bipartitions->add_option("--genus", curve_args.genus)->capture_default_str();
  bipartitions->add_option("--window", curve_args.window, "Shift window a..b (half-open) or a..=b")->required();
  bipartitions->add_option("--classes", curve_args.classes, "Class list file")->required();
  bipartitions->add_flag("--tensor", curve_args.tensor, "Impose internal-hom closure of X");
  bipartitions->add_flag("--no-bundle-rule", curve_args.no_bundle_rule,
                         "Drop the bundle-at-every-shift condition on X");
  bipartitions->add_option("-j,--parallelism", curve_args.parallelism)->check(CLI::PositiveNumber);
  add_common(bipartitions);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kMalformedInput;
  }
  if (*max_points_opt) enum_args.max_points = max_points_flag;

  try {
    Emitter em(out, err, common);
    if (*validate) return cmd_validate(validate_args, em);
    if (*convert) return cmd_convert(convert_args, em);
    if (*classify) return cmd_classify(classify_args, em);
    if (*enumerate) return cmd_enumerate(enum_args, common, em);
    if (*pullback) return cmd_pullback(pullback_args, em);
    if (*table) return cmd_curve_table(curve_args, common, em);
    if (*obstructions) return cmd_curve_obstructions(curve_args, common, em);
    if (*bipartitions) return cmd_curve_bipartitions(curve_args, common, em);
    return kMalformedInput;
  } catch (const ParseError& e) {
    err << json{{"error", "malformed"}, {"message", e.what()}}.dump() << "\n";
    return kMalformedInput;
  } catch (const LimitError& e) {
    err << json{{"error", "limit"}, {"message", e.what()}}.dump() << "\n";
    return kValidationFailure;
  } catch (const Error& e) {
    err << json{{"error", "validation"}, {"message", e.what()}}.dump() << "\n";
    return kValidationFailure;
  } catch (const std::invalid_argument& e) {
    err << json{{"error", "validation"}, {"message", e.what()}}.dump() << "\n";
    return kValidationFailure;
  }
}

}  // namespace tstruct::cli
