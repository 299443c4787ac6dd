#include "tstruct/perversity.hpp"

#include <algorithm>
#include <cassert>

#include "tstruct/error.hpp"

namespace tstruct {

Perversity::Perversity(PosetRef poset, std::vector<int> values) : poset_(std::move(poset)), values_(std::move(values)) {
  if (!poset_) throw ValidationError("perversity needs a poset");
  if (values_.size() != poset_->size()) {
    throw ValidationError("perversity has " + std::to_string(values_.size()) + " values for " +
                          std::to_string(poset_->size()) + " points");
  }
}

Perversity Perversity::dimension(PosetRef poset) {
  std::vector<int> v;
  for (const auto& pt : poset->points()) v.push_back(pt.height);
  return Perversity(std::move(poset), std::move(v));
}

Perversity Perversity::constant(PosetRef poset, int c) {
  const auto n = poset->size();
  return Perversity(std::move(poset), std::vector<int>(n, c));
}

int Perversity::min_value() const { return values_.empty() ? 0 : *std::min_element(values_.begin(), values_.end()); }
int Perversity::max_value() const { return values_.empty() ? 0 : *std::max_element(values_.begin(), values_.end()); }

bool Perversity::operator==(const Perversity& other) const {
  return values_ == other.values_ && same_poset(poset_, other.poset_);
}

PairCheck is_monotone(const Perversity& p) {
  const auto& poset = *p.poset();
  for (PointIndex y = 0; y < poset.size(); ++y) {
    for (auto x : poset.generalizations(y).indices()) {
      if (p(y) < p(x)) return PairCheck{false, PairWitness{y, x}};
    }
  }
  return PairCheck{true, std::nullopt};
}

Perversity dual(const Perversity& p) {
  const auto& poset = *p.poset();
  std::vector<int> v(poset.size());
  for (PointIndex x = 0; x < poset.size(); ++x) v[x] = poset.height(x) - p(x);
  return Perversity(p.poset(), std::move(v));
}

namespace {

PairCheck comonotone_by_codim(const Perversity& p) {
  const auto& poset = *p.poset();
  for (PointIndex y = 0; y < poset.size(); ++y) {
    for (auto x : poset.generalizations(y).indices()) {
      if (p(y) - p(x) > poset.codim(y, x)) return PairCheck{false, PairWitness{y, x}};
    }
  }
  return PairCheck{true, std::nullopt};
}

}  // namespace

PairCheck is_comonotone(const Perversity& p) {
  auto result = comonotone_by_codim(p);
#ifndef NDEBUG
  const auto via_dual = is_monotone(dual(p));
  assert(via_dual.ok == result.ok && via_dual.witness == result.witness);
#endif
  return result;
}

PerversityFiltration to_filtration(const Perversity& p) {
  const auto& poset = *p.poset();
  const int lo = p.min_value();
  const int hi = p.max_value() + 1;
  std::vector<PointSet> levels;
  for (int n = lo; n < hi; ++n) {
    PointSet level;
    for (PointIndex x = 0; x < poset.size(); ++x) {
      if (p(x) >= n) level.insert(x);
    }
    levels.push_back(level);
  }
  auto f = Filtration::finite(p.poset(), lo, poset.all(), std::move(levels));
  auto status = validate_thomason(f);
  return PerversityFiltration{std::move(f), std::move(status)};
}

Perversity from_filtration(const Filtration& f) {
  const auto& poset = *f.poset();
  if (f.is_constant_form()) {
    throw ValidationError("constant nonempty filtration is not of finite length: no maximal level");
  }
  if (auto diag = validate_thomason(f); !diag) throw ValidationError("not a Thomason filtration: " + diag.message);
  std::vector<int> values(poset.size());
  for (PointIndex x = 0; x < poset.size(); ++x) {
    if (!f.low_tail().contains(x)) {
      throw ValidationError("filtration is not exhaustive: '" + poset.id(x) + "' lies in no level");
    }
    int top = f.lo() - 1;
    for (int n = f.hi() - 1; n >= f.lo(); --n) {
      if (f.eval(n).contains(x)) {
        top = n;
        break;
      }
    }
    values[x] = top;
  }
  return Perversity(f.poset(), std::move(values));
}

bool lies_in_Up(const GradedSupport& a, const Perversity& p) {
  if (!same_poset(a.poset(), p.poset())) throw ValidationError("support and perversity live on different posets");
  for (const auto& [i, s] : a.entries()) {
    bool ok = true;
    s.for_each([&](PointIndex x) { ok = ok && p(x) >= i; });
    if (!ok) return false;
  }
  return true;
}

bool is_upper_semicontinuous(const Perversity& p) {
  const auto f = to_filtration(p).filtration;
  const auto& poset = *p.poset();
  if (!poset.is_specialization_closed(f.low_tail())) return false;
  return std::all_of(f.levels().begin(), f.levels().end(),
                     [&](PointSet s) { return poset.is_specialization_closed(s); });
}

}  // namespace tstruct
