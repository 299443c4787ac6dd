#include "tstruct/io.hpp"

#include <climits>
#include <fstream>
#include <sstream>

#include "tstruct/error.hpp"

namespace tstruct::io {

namespace {

const json& field(const json& doc, const char* key) {
  if (!doc.is_object()) throw ParseError("expected a JSON object");
  auto it = doc.find(key);
  if (it == doc.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

int as_int(const json& v, const char* what) {
  if (!v.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  const auto n = v.get<long long>();
  if (n < INT_MIN || n > INT_MAX) throw ParseError(std::string(what) + " is out of range");
  return static_cast<int>(n);
}

std::string as_string(const json& v, const char* what) {
  if (!v.is_string()) throw ParseError(std::string(what) + " must be a string");
  return v.get<std::string>();
}

std::vector<std::string> id_list(const json& v, const char* what) {
  if (!v.is_array()) throw ParseError(std::string(what) + " must be an array of ids");
  std::vector<std::string> ids;
  for (const auto& e : v) ids.push_back(as_string(e, what));
  return ids;
}

PointSet point_set(const json& v, const SpectralPoset& poset, const char* what) {
  return poset.set_of(id_list(v, what));
}

json ids_json(const SpectralPoset& poset, PointSet s) { return json(poset.ids_of(s)); }

PosetRef poset_ref(const json& doc, const std::filesystem::path& base_dir) {
  if (doc.is_string()) {
    auto path = std::filesystem::path(doc.get<std::string>());
    if (path.is_relative()) path = base_dir / path;
    return poset_from_json(read_json_file(path));
  }
  return poset_from_json(doc);
}

}  // namespace

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

json to_json(const SpectralPoset& poset) {
  json points = json::array();
  for (const auto& p : poset.points()) points.push_back({{"id", p.id}, {"height", p.height}});
  json covers = json::array();
  for (const auto& [from, to] : poset.covers()) covers.push_back({poset.id(from), poset.id(to)});
  return {{"points", points}, {"covers", covers}};
}

PosetRef poset_from_json(const json& doc) {
  std::vector<Point> points;
  const auto& pts = field(doc, "points");
  if (!pts.is_array()) throw ParseError("\"points\" must be an array");
  for (const auto& p : pts) points.push_back({as_string(field(p, "id"), "point id"), as_int(field(p, "height"), "height")});
  std::vector<Cover> covers;
  if (doc.contains("covers")) {
    const auto& cs = doc["covers"];
    if (!cs.is_array()) throw ParseError("\"covers\" must be an array");
    for (const auto& c : cs) {
      if (!c.is_array() || c.size() != 2) throw ParseError("each cover must be a [from, to] pair");
      covers.push_back({as_string(c[0], "cover id"), as_string(c[1], "cover id")});
    }
  }
  return SpectralPoset::create(std::move(points), std::move(covers));
}

json to_json(const Filtration& f) {
  const auto& poset = *f.poset();
  if (f.is_constant_form()) return {{"constant", ids_json(poset, f.low_tail())}};
  json levels = json::array();
  for (auto s : f.levels()) levels.push_back(ids_json(poset, s));
  return {{"lo", f.lo()}, {"hi", f.hi()}, {"low_tail", ids_json(poset, f.low_tail())}, {"levels", levels}};
}

Filtration filtration_from_json(const json& doc, const PosetRef& poset) {
  if (doc.is_object() && doc.contains("constant")) {
    return Filtration::constant(poset, point_set(doc["constant"], *poset, "constant"));
  }
  const int lo = as_int(field(doc, "lo"), "lo");
  const int hi = as_int(field(doc, "hi"), "hi");
  const auto& lv = field(doc, "levels");
  if (!lv.is_array()) throw ParseError("\"levels\" must be an array");
  if (hi < lo || static_cast<std::size_t>(hi - lo) != lv.size()) {
    throw ParseError("\"levels\" must hold hi - lo entries");
  }
  std::vector<PointSet> levels;
  for (const auto& l : lv) levels.push_back(point_set(l, *poset, "level"));
  const auto low_tail = point_set(field(doc, "low_tail"), *poset, "low_tail");
  return Filtration::finite(poset, lo, low_tail, std::move(levels));
}

json to_json(const Perversity& p) {
  json values = json::object();
  const auto& poset = *p.poset();
  for (PointIndex x = 0; x < poset.size(); ++x) values[poset.id(x)] = p(x);
  return {{"values", values}};
}

Perversity perversity_from_json(const json& doc, const PosetRef& poset) {
  const auto& vals = field(doc, "values");
  if (!vals.is_object()) throw ParseError("\"values\" must be an object");
  std::vector<int> values(poset->size(), 0);
  std::vector<bool> seen(poset->size(), false);
  for (const auto& [id, v] : vals.items()) {
    const auto x = poset->index_of(id);
    values[x] = as_int(v, "perversity value");
    seen[x] = true;
  }
  for (PointIndex x = 0; x < poset->size(); ++x) {
    if (!seen[x]) throw ValidationError("perversity has no value at '" + poset->id(x) + "'");
  }
  return Perversity(poset, std::move(values));
}

json to_json(const GradedSupport& s) {
  json entries = json::object();
  for (const auto& [i, set] : s.entries()) entries[std::to_string(i)] = ids_json(*s.poset(), set);
  return {{"entries", entries}};
}

GradedSupport support_from_json(const json& doc, const PosetRef& poset) {
  const auto& es = field(doc, "entries");
  if (!es.is_object()) throw ParseError("\"entries\" must be an object");
  std::map<int, PointSet> entries;
  for (const auto& [key, v] : es.items()) {
    std::size_t used = 0;
    int i = 0;
    try {
      i = std::stoi(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size() || key.empty()) throw ParseError("support index \"" + key + "\" is not an integer");
    entries[i] |= point_set(v, *poset, "support entry");
  }
  return GradedSupport(poset, std::move(entries));
}

PosetMorphism morphism_from_json(const json& doc, const std::filesystem::path& base_dir) {
  auto source = poset_ref(field(doc, "source"), base_dir);
  auto target = poset_ref(field(doc, "target"), base_dir);
  const auto& m = field(doc, "map");
  if (!m.is_object()) throw ParseError("\"map\" must be an object");
  std::map<std::string, std::string> map;
  for (const auto& [from, to] : m.items()) map[from] = as_string(to, "map target");
  return PosetMorphism::create(std::move(source), std::move(target), map);
}

json to_json(const PosetMorphism& f) {
  json map = json::object();
  for (PointIndex a = 0; a < f.map().size(); ++a) map[f.source()->id(a)] = f.target()->id(f(a));
  return {{"source", to_json(*f.source())}, {"target", to_json(*f.target())}, {"map", map}};
}

curve::ObjectClass object_class_from_json(const json& doc) {
  const auto kind = as_string(field(doc, "kind"), "kind");
  const int shift = doc.contains("shift") ? as_int(doc["shift"], "shift") : 0;
  try {
    if (kind == "torsion") {
      return {curve::SheafClass::torsion(as_int(field(doc, "degree"), "degree")), shift};
    }
    if (kind == "bundle") {
      const int rank = doc.contains("rank") ? as_int(doc["rank"], "rank") : 1;
      const int deg = doc.contains("line_degree") ? as_int(doc["line_degree"], "line_degree") : 0;
      bool trivial = deg == 0;
      if (doc.contains("trivial")) {
        if (!doc["trivial"].is_boolean()) throw ParseError("\"trivial\" must be a boolean");
        trivial = doc["trivial"].get<bool>();
      }
      return {curve::SheafClass::bundle(rank, deg, trivial), shift};
    }
  } catch (const std::invalid_argument& e) {
    throw ValidationError(e.what());
  }
  throw ParseError("unknown class kind \"" + kind + "\"");
}

json to_json(const curve::ObjectClass& c) {
  if (c.sheaf.is_torsion()) return {{"kind", "torsion"}, {"degree", c.sheaf.as_torsion().degree}, {"shift", c.shift}};
  const auto& b = c.sheaf.as_bundle();
  return {{"kind", "bundle"},
          {"rank", b.rank},
          {"line_degree", b.line_degree},
          {"trivial", b.trivial_at_zero},
          {"shift", c.shift}};
}

std::vector<curve::ObjectClass> object_classes_from_json(const json& doc) {
  const json& list = doc.is_object() ? field(doc, "classes") : doc;
  if (!list.is_array()) throw ParseError("expected an array of classes");
  std::vector<curve::ObjectClass> out;
  for (const auto& c : list) out.push_back(object_class_from_json(c));
  return out;
}

}  // namespace tstruct::io
