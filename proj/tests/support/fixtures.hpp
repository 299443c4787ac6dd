#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "tstruct/filtration.hpp"
#include "tstruct/perversity.hpp"
#include "tstruct/spectral_poset.hpp"

namespace testsupport {

inline tstruct::PosetRef make_poset(std::vector<tstruct::Point> points, std::vector<tstruct::Cover> covers) {
  return tstruct::SpectralPoset::create(std::move(points), std::move(covers));
}

/// η:0 ⋖ m:1.
inline tstruct::PosetRef dvr() { return make_poset({{"η", 0}, {"m", 1}}, {{"η", "m"}}); }

/// ξ:0 ⋖ a:1, ξ:0 ⋖ b:1.
inline tstruct::PosetRef fan() { return make_poset({{"ξ", 0}, {"a", 1}, {"b", 1}}, {{"ξ", "a"}, {"ξ", "b"}}); }

/// ξ:0 ⋖ z:2, a cover jumping two heights.
inline tstruct::PosetRef gap_chain() { return make_poset({{"ξ", 0}, {"z", 2}}, {{"ξ", "z"}}); }

inline tstruct::PosetRef single_point() { return make_poset({{"pt", 0}}, {}); }

/// Two disjoint DVRs η1 ⋖ m1, η2 ⋖ m2.
inline tstruct::PosetRef two_dvrs() {
  return make_poset({{"η1", 0}, {"m1", 1}, {"η2", 0}, {"m2", 1}}, {{"η1", "m1"}, {"η2", "m2"}});
}

inline tstruct::PointSet ids(const tstruct::PosetRef& p, std::initializer_list<const char*> names) {
  std::vector<std::string> v(names.begin(), names.end());
  return p->set_of(v);
}

/// Perversity from (id, value) pairs.
inline tstruct::Perversity perv(const tstruct::PosetRef& p, std::initializer_list<std::pair<const char*, int>> values) {
  std::vector<int> v(p->size(), 0);
  for (auto [id, value] : values) v[p->index_of(id)] = value;
  return tstruct::Perversity(p, std::move(v));
}

}  // namespace testsupport
