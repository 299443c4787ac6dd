#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "tstruct/curve_homology.hpp"
#include "tstruct/pullback.hpp"

namespace tstruct::io {

using json = nlohmann::json;

/// Reads and parses a JSON document. Throws ParseError.
json read_json_file(const std::filesystem::path& path);

/// Canonical text form: two-space indentation, sorted keys, trailing newline.
std::string dump(const json& doc);

// Shape errors raise ParseError; semantic ones (unknown ids, invariant
// violations) raise ValidationError.

/// {"points": [{"id", "height"}], "covers": [[from, to]]}, ids sorted.
json to_json(const SpectralPoset& poset);
PosetRef poset_from_json(const json& doc);

/// {"lo", "hi", "low_tail": [ids], "levels": [[ids]...]} or {"constant": [ids]}.
json to_json(const Filtration& f);
Filtration filtration_from_json(const json& doc, const PosetRef& poset);

/// {"values": {id: integer}}.
json to_json(const Perversity& p);
Perversity perversity_from_json(const json& doc, const PosetRef& poset);

/// {"entries": {i: [ids]}}.
json to_json(const GradedSupport& s);
GradedSupport support_from_json(const json& doc, const PosetRef& poset);

/// {"source": poset, "target": poset, "map": {source_id: target_id}}. A poset
/// reference is either an inline poset document or a path resolved against
/// `base_dir`.
PosetMorphism morphism_from_json(const json& doc, const std::filesystem::path& base_dir);
json to_json(const PosetMorphism& f);

/// {"kind": "torsion", "degree", "shift"} or
/// {"kind": "bundle", "rank", "line_degree", "trivial", "shift"}.
curve::ObjectClass object_class_from_json(const json& doc);
json to_json(const curve::ObjectClass& c);
/// A bare array of classes or {"classes": [...]}.
std::vector<curve::ObjectClass> object_classes_from_json(const json& doc);

}  // namespace tstruct::io
