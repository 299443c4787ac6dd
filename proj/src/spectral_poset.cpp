#include "tstruct/spectral_poset.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "tstruct/error.hpp"

namespace tstruct {

bool canonical_less(PointSet a, PointSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const auto diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  return (a.bits() & (diff & (~diff + 1))) != 0;
}

namespace {

bool valid_id(const std::string& id) {
  if (id.empty()) return false;
  return std::none_of(id.begin(), id.end(), [](char c) {
    const auto u = static_cast<unsigned char>(c);
    return u <= 0x20 || u == 0x7f;
  });
}

}  // namespace

PosetRef SpectralPoset::create(std::vector<Point> points, std::vector<Cover> covers) {
  if (points.size() > kMaxPoints) {
    throw ValidationError("poset has " + std::to_string(points.size()) + " points; at most " +
                          std::to_string(kMaxPoints) + " are supported");
  }
  std::sort(points.begin(), points.end(), [](const Point& a, const Point& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!valid_id(points[i].id)) throw ValidationError("malformed point id '" + points[i].id + "'");
    if (i > 0 && points[i].id == points[i - 1].id) {
      throw ValidationError("duplicate point id '" + points[i].id + "'");
    }
    if (points[i].height < 0) {
      throw ValidationError("point '" + points[i].id + "' has negative height");
    }
  }

  std::shared_ptr<SpectralPoset> poset(new SpectralPoset());
  poset->points_ = std::move(points);
  const std::size_t n = poset->points_.size();

  std::set<std::pair<PointIndex, PointIndex>> cover_set;
  for (const auto& c : covers) {
    const auto from = poset->find(c.from);
    const auto to = poset->find(c.to);
    if (!from) throw UnknownPointError(c.from, "cover [" + c.from + ", " + c.to + "] names unknown point '" + c.from + "'");
    if (!to) throw UnknownPointError(c.to, "cover [" + c.from + ", " + c.to + "] names unknown point '" + c.to + "'");
    if (*from == *to) throw ValidationError("cover cycle at '" + c.from + "'");
    if (!cover_set.emplace(*from, *to).second) {
      throw ValidationError("duplicate cover [" + c.from + ", " + c.to + "]");
    }
  }
  poset->covers_.assign(cover_set.begin(), cover_set.end());

  std::vector<std::vector<PointIndex>> succ(n);
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& [from, to] : poset->covers_) {
    succ[from].push_back(to);
    ++indegree[to];
  }

  // Kahn's algorithm; anything left over sits on a cycle.
  std::vector<PointIndex> topo;
  topo.reserve(n);
  for (PointIndex i = 0; i < n; ++i) {
    if (indegree[i] == 0) topo.push_back(i);
  }
  for (std::size_t head = 0; head < topo.size(); ++head) {
    for (auto s : succ[topo[head]]) {
      if (--indegree[s] == 0) topo.push_back(s);
    }
  }
  if (topo.size() != n) {
    for (PointIndex i = 0; i < n; ++i) {
      if (indegree[i] != 0) throw ValidationError("cover cycle through '" + poset->id(i) + "'");
    }
  }

  for (const auto& [from, to] : poset->covers_) {
    if (poset->height(to) <= poset->height(from)) {
      throw ValidationError("height does not increase along cover [" + poset->id(from) + ", " +
                            poset->id(to) + "]");
    }
  }

  poset->up_.assign(n, PointSet{});
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    PointSet up = PointSet::single(*it);
    for (auto s : succ[*it]) up |= poset->up_[s];
    poset->up_[*it] = up;
  }
  poset->down_.assign(n, PointSet{});
  for (PointIndex x = 0; x < n; ++x) {
    poset->up_[x].for_each([&](PointIndex y) { poset->down_[y].insert(x); });
  }

  for (const auto& [from, to] : poset->covers_) {
    for (auto mid : succ[from]) {
      if (mid != to && poset->up_[mid].contains(to)) {
        throw ValidationError("cover [" + poset->id(from) + ", " + poset->id(to) +
                              "] is implied by transitivity through '" + poset->id(mid) + "'");
      }
    }
  }

  poset->generic_first_.resize(n);
  std::iota(poset->generic_first_.begin(), poset->generic_first_.end(), PointIndex{0});
  std::stable_sort(poset->generic_first_.begin(), poset->generic_first_.end(),
                   [&](PointIndex a, PointIndex b) { return poset->height(a) < poset->height(b); });
  for (const auto& p : poset->points_) poset->max_height_ = std::max(poset->max_height_, p.height);
  return poset;
}

std::optional<PointIndex> SpectralPoset::find(std::string_view id) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), id,
                             [](const Point& p, std::string_view key) { return p.id < key; });
  if (it == points_.end() || it->id != id) return std::nullopt;
  return static_cast<PointIndex>(it - points_.begin());
}

PointIndex SpectralPoset::index_of(std::string_view id) const {
  if (auto i = find(id)) return *i;
  throw UnknownPointError(std::string(id));
}

PointSet SpectralPoset::set_of(std::span<const std::string> ids) const {
  PointSet s;
  for (const auto& id : ids) s.insert(index_of(id));
  return s;
}

std::vector<std::string> SpectralPoset::ids_of(PointSet s) const {
  check_subset(s);
  std::vector<std::string> out;
  s.for_each([&](PointIndex i) { out.push_back(points_[i].id); });
  return out;
}

void SpectralPoset::check_subset(PointSet s) const {
  if (!s.subset_of(all())) {
    const auto extra = (s - all()).indices().front();
    throw UnknownPointError("#" + std::to_string(extra));
  }
}

bool SpectralPoset::is_specialization(PointIndex x, PointIndex y) const {
  if (x >= size()) throw UnknownPointError("#" + std::to_string(x));
  if (y >= size()) throw UnknownPointError("#" + std::to_string(y));
  return up_[x].contains(y);
}

bool SpectralPoset::is_specialization(std::string_view x, std::string_view y) const {
  return is_specialization(index_of(x), index_of(y));
}

int SpectralPoset::codim(PointIndex y, PointIndex x) const {
  if (!is_specialization(x, y)) {
    throw ValidationError("(" + id(y) + ", " + id(x) + ") is not a specialization pair");
  }
  return height(y) - height(x);
}

int SpectralPoset::codim(std::string_view y, std::string_view x) const {
  return codim(index_of(y), index_of(x));
}

PointSet SpectralPoset::closure(PointSet s) const {
  check_subset(s);
  PointSet out;
  s.for_each([&](PointIndex x) { out |= up_[x]; });
  return out;
}

bool SpectralPoset::is_specialization_closed(PointSet s) const { return closure(s) == s; }

bool SpectralPoset::is_generalization_closed(PointSet s) const {
  check_subset(s);
  bool ok = true;
  s.for_each([&](PointIndex y) { ok = ok && down_[y].subset_of(s); });
  return ok;
}

bool SpectralPoset::is_graded() const {
  return std::all_of(covers_.begin(), covers_.end(),
                     [&](const auto& c) { return height(c.second) == height(c.first) + 1; });
}

std::vector<PointSet> SpectralPoset::connected_components() const {
  std::vector<PointSet> components;
  PointSet seen;
  for (PointIndex start = 0; start < size(); ++start) {
    if (seen.contains(start)) continue;
    PointSet component = PointSet::single(start);
    PointSet frontier = component;
    while (!frontier.empty()) {
      PointSet next;
      frontier.for_each([&](PointIndex x) { next |= up_[x] | down_[x]; });
      frontier = next - component;
      component |= next;
    }
    seen |= component;
    components.push_back(component);
  }
  return components;
}

bool SpectralPoset::operator==(const SpectralPoset& other) const {
  return points_ == other.points_ && covers_ == other.covers_;
}

bool same_poset(const PosetRef& a, const PosetRef& b) {
  if (a == b) return true;
  return a && b && *a == *b;
}

}  // namespace tstruct
