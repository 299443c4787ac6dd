#include <doctest.h>

#include "fixtures.hpp"
#include "tstruct/error.hpp"
#include "tstruct/io.hpp"

using namespace tstruct;
using namespace testsupport;
using io::json;

TEST_SUITE("io") {

TEST_CASE("poset documents") {
  CHECK_THROWS_AS(io::poset_from_json(json::parse(R"({"covers": []})")), ParseError);
  CHECK_THROWS_AS(io::poset_from_json(json::parse(R"({"points": [{"id": "a", "height": "0"}]})")), ParseError);
  CHECK_THROWS_AS(io::poset_from_json(json::parse(R"({"points": [{"id": "a", "height": 0}], "covers": [["a"]]})")),
                  ParseError);
  CHECK_THROWS_AS(io::poset_from_json(json::parse(R"({"points": [{"id": "a", "height": 0}], "covers": [["a", "b"]]})")),
                  UnknownPointError);
  const auto p = io::poset_from_json(json::parse(R"({"points": [{"id": "a", "height": 0}]})"));
  CHECK(p->size() == 1);
}

TEST_CASE("filtration documents round-trip") {
  const auto d = dvr();
  for (const auto& f : {Filtration::finite(d, 0, d->all(), {d->all(), ids(d, {"m"})}), Filtration::empty(d),
                        Filtration::constant(d, d->all()), Filtration::finite(d, -3, ids(d, {"m"}), {})}) {
    const auto text = io::dump(io::to_json(f));
    CHECK(io::filtration_from_json(json::parse(text), d) == f);
  }
  CHECK_THROWS_AS(io::filtration_from_json(json::parse(R"({"lo": 0, "hi": 2, "low_tail": [], "levels": [[]]})"), d),
                  ParseError);
  CHECK_THROWS_AS(io::filtration_from_json(json::parse(R"({"lo": 0, "hi": 1, "low_tail": [], "levels": [["q"]]})"), d),
                  UnknownPointError);
}

TEST_CASE("perversity and support documents") {
  const auto d = dvr();
  const auto p = perv(d, {{"η", -1}, {"m", 2}});
  CHECK(io::perversity_from_json(io::to_json(p), d) == p);
  CHECK_THROWS_AS(io::perversity_from_json(json::parse(R"({"values": {"η": 0}})"), d), ValidationError);
  CHECK_THROWS_AS(io::perversity_from_json(json::parse(R"({"values": {"η": 0.5, "m": 1}})"), d), ParseError);
  const GradedSupport s(d, {{-2, ids(d, {"m"})}, {3, d->all()}});
  CHECK(io::support_from_json(io::to_json(s), d) == s);
  CHECK_THROWS_AS(io::support_from_json(json::parse(R"({"entries": {"x": ["m"]}})"), d), ParseError);
  CHECK_THROWS_AS(io::support_from_json(json::parse(R"({"entries": {"0": ["η"]}})"), d), ValidationError);
}

TEST_CASE("morphism documents") {
  const auto doc = json::parse(R"({
    "source": {"points": [{"id": "η", "height": 0}, {"id": "m", "height": 1}], "covers": [["η", "m"]]},
    "target": {"points": [{"id": "pt", "height": 0}]},
    "map": {"η": "pt", "m": "pt"}})");
  const auto f = io::morphism_from_json(doc, ".");
  CHECK(f.source()->size() == 2);
  const auto again = io::morphism_from_json(io::to_json(f), ".");
  CHECK(std::vector<PointIndex>(again.map().begin(), again.map().end()) ==
        std::vector<PointIndex>(f.map().begin(), f.map().end()));
  CHECK_THROWS_AS(io::morphism_from_json(json::parse(R"({"source": "/nonexistent.json", "target": {}, "map": {}})"), "."),
                  ParseError);
}

TEST_CASE("class documents") {
  const auto classes = io::object_classes_from_json(json::parse(R"([
    {"kind": "torsion", "degree": 2, "shift": -1},
    {"kind": "bundle", "rank": 3, "line_degree": 0, "trivial": false},
    {"kind": "bundle"}])"));
  REQUIRE(classes.size() == 3);
  CHECK(classes[0].shift == -1);
  CHECK(classes[0].sheaf == curve::SheafClass::torsion(2));
  CHECK(classes[1].sheaf == curve::SheafClass::bundle(3, 0, false));
  CHECK(classes[2].sheaf == curve::SheafClass::structure_sheaf());
  for (const auto& c : classes) CHECK(io::object_class_from_json(io::to_json(c)) == c);
  CHECK_THROWS_AS(io::object_class_from_json(json::parse(R"({"kind": "torsion", "degree": 0})")), ValidationError);
  CHECK_THROWS_AS(io::object_class_from_json(json::parse(R"({"kind": "vector"})")), ParseError);
}

}  // TEST_SUITE
