#include "tstruct/filtration.hpp"

#include <algorithm>
#include <utility>

#include "tstruct/error.hpp"

namespace tstruct {

namespace {

void require_subset(const SpectralPoset& poset, PointSet s) {
  if (!s.subset_of(poset.all())) poset.ids_of(s);  // throws UnknownPointError
}

}  // namespace

Filtration::Filtration(PosetRef poset, bool constant, int lo, PointSet low_tail, std::vector<PointSet> levels)
    : poset_(std::move(poset)), constant_(constant), lo_(lo), low_tail_(low_tail), levels_(std::move(levels)) {}

Filtration Filtration::finite(PosetRef poset, int lo, PointSet low_tail, std::vector<PointSet> levels) {
  if (!poset) throw ValidationError("filtration needs a poset");
  require_subset(*poset, low_tail);
  for (auto s : levels) require_subset(*poset, s);

  auto first = levels.begin();
  while (first != levels.end() && *first == low_tail) {
    ++first;
    ++lo;
  }
  levels.erase(levels.begin(), first);
  while (!levels.empty() && levels.back().empty()) levels.pop_back();
  if (levels.empty() && low_tail.empty()) lo = 0;
  return Filtration(std::move(poset), false, lo, low_tail, std::move(levels));
}

Filtration Filtration::constant(PosetRef poset, PointSet value) {
  if (!poset) throw ValidationError("filtration needs a poset");
  require_subset(*poset, value);
  if (value.empty()) return empty(std::move(poset));
  return Filtration(std::move(poset), true, 0, value, {});
}

Filtration Filtration::empty(PosetRef poset) {
  if (!poset) throw ValidationError("filtration needs a poset");
  return Filtration(std::move(poset), false, 0, PointSet{}, {});
}

PointSet Filtration::eval(int i) const {
  if (constant_ || i < lo_) return low_tail_;
  if (i >= hi()) return PointSet{};
  return levels_[static_cast<std::size_t>(i - lo_)];
}

bool Filtration::operator==(const Filtration& other) const {
  return constant_ == other.constant_ && lo_ == other.lo_ && low_tail_ == other.low_tail_ &&
         levels_ == other.levels_ && same_poset(poset_, other.poset_);
}

ThomasonDiagnostic validate_thomason(const Filtration& f) {
  const auto& poset = *f.poset();
  auto check_closed = [&](PointSet s, std::optional<int> index) -> std::optional<ThomasonDiagnostic> {
    std::optional<ThomasonDiagnostic> bad;
    s.for_each([&](PointIndex x) {
      if (bad) return;
      const auto missing = poset.specializations(x) - s;
      if (!missing.empty()) {
        const auto y = missing.indices().front();
        std::string where = index ? "level " + std::to_string(*index) : std::string("low tail");
        bad = ThomasonDiagnostic{false, index, x,
                                 where + " is not specialization-closed: contains '" + poset.id(x) +
                                     "' but not its specialization '" + poset.id(y) + "'"};
      }
    });
    return bad;
  };

  if (auto bad = check_closed(f.low_tail(), std::nullopt)) return *bad;
  PointSet previous = f.low_tail();
  for (int i = f.lo(); i < f.hi(); ++i) {
    const auto level = f.eval(i);
    if (auto bad = check_closed(level, i)) return *bad;
    if (!level.subset_of(previous)) {
      const auto x = (level - previous).indices().front();
      return ThomasonDiagnostic{false, i, x,
                                "not decreasing at level " + std::to_string(i) + ": '" + poset.id(x) +
                                    "' is missing from level " + std::to_string(i - 1)};
    }
    previous = level;
  }
  return ThomasonDiagnostic{true, std::nullopt, std::nullopt, {}};
}

CousinResult is_thomason_cousin(const Filtration& f) {
  const auto& poset = *f.poset();
  // Below lo − max_height both φ(i) and φ(i − δ) equal the low tail, so the
  // condition there repeats the one at lo − 1.
  const int first = f.is_constant_form() ? 0 : f.lo() - std::max(1, poset.max_height());
  const int last = f.is_constant_form() ? 1 : f.hi();
  for (int i = first; i < last; ++i) {
    const auto level = f.eval(i);
    std::optional<CousinWitness> witness;
    level.for_each([&](PointIndex y) {
      if (witness) return;
      poset.generalizations(y).for_each([&](PointIndex x) {
        if (witness || x == y) return;
        if (!f.eval(i - poset.codim(y, x)).contains(x)) witness = CousinWitness{y, x, i};
      });
    });
    if (witness) return CousinResult{false, witness};
  }
  return CousinResult{true, std::nullopt};
}

bool is_cousin_via_covers(const Filtration& f) {
  const auto& poset = *f.poset();
  const int first = f.is_constant_form() ? 0 : f.lo() - 1;
  const int last = f.is_constant_form() ? 1 : f.hi();
  for (int j = first; j < last; ++j) {
    const auto level = f.eval(j);
    const auto below = f.eval(j - 1);
    for (const auto& [p, q] : poset.covers()) {
      if (level.contains(q) && !below.contains(p)) return false;
    }
  }
  return true;
}

GradedSupport::GradedSupport(PosetRef poset, std::map<int, PointSet> entries) : poset_(std::move(poset)) {
  if (!poset_) throw ValidationError("graded support needs a poset");
  for (const auto& [i, s] : entries) {
    if (s.empty()) continue;
    require_subset(*poset_, s);
    if (!poset_->is_specialization_closed(s)) {
      throw ValidationError("support entry " + std::to_string(i) + " is not specialization-closed");
    }
    entries_.emplace(i, s);
  }
}

PointSet GradedSupport::entry(int i) const {
  auto it = entries_.find(i);
  return it == entries_.end() ? PointSet{} : it->second;
}

bool GradedSupport::operator==(const GradedSupport& other) const {
  return entries_ == other.entries_ && same_poset(poset_, other.poset_);
}

Filtration generated_filtration(const PosetRef& poset, std::span<const GradedSupport> supports) {
  std::map<int, PointSet> merged;
  for (const auto& b : supports) {
    if (!same_poset(b.poset(), poset)) throw ValidationError("graded supports live on different posets");
    for (const auto& [i, s] : b.entries()) merged[i] |= s;
  }
  if (merged.empty()) return Filtration::empty(poset);

  const int lo = merged.begin()->first;
  const int hi = merged.rbegin()->first + 1;
  std::vector<PointSet> levels(static_cast<std::size_t>(hi - lo));
  PointSet running;
  for (int n = hi - 1; n >= lo; --n) {
    if (auto it = merged.find(n); it != merged.end()) running |= it->second;
    levels[static_cast<std::size_t>(n - lo)] = poset->closure(running);
  }
  return Filtration::finite(poset, lo, poset->closure(running), std::move(levels));
}

bool lies_in_aisle(const GradedSupport& a, const Filtration& f) {
  if (!same_poset(a.poset(), f.poset())) throw ValidationError("support and filtration live on different posets");
  return std::all_of(a.entries().begin(), a.entries().end(),
                     [&](const auto& e) { return e.second.subset_of(f.eval(e.first)); });
}

Filtration shift(const Filtration& f, int k) {
  if (f.is_constant_form()) return f;
  return Filtration::finite(f.poset(), f.lo() - k, f.low_tail(),
                            std::vector<PointSet>(f.levels().begin(), f.levels().end()));
}

bool is_constant(const Filtration& f) {
  return f.is_constant_form() || (f.levels().empty() && f.low_tail().empty());
}

}  // namespace tstruct
