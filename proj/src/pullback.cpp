#include "tstruct/pullback.hpp"

#include "tstruct/enumeration.hpp"
#include "tstruct/error.hpp"

namespace tstruct {

PosetMorphism::PosetMorphism(PosetRef source, PosetRef target, std::vector<PointIndex> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {}

PosetMorphism PosetMorphism::create(PosetRef source, PosetRef target, std::vector<PointIndex> map) {
  if (!source || !target) throw ValidationError("morphism needs a source and a target poset");
  if (map.size() != source->size()) throw ValidationError("morphism is not total on the source");
  for (auto t : map) {
    if (t >= target->size()) throw UnknownPointError("#" + std::to_string(t));
  }
  // Continuity on covers implies it on the transitive closure.
  for (const auto& [a, b] : source->covers()) {
    if (!target->is_specialization(map[a], map[b])) {
      throw ValidationError("map is not continuous: '" + source->id(b) + "' specializes '" + source->id(a) +
                            "' but '" + target->id(map[b]) + "' does not specialize '" + target->id(map[a]) + "'");
    }
  }
  return PosetMorphism(std::move(source), std::move(target), std::move(map));
}

PosetMorphism PosetMorphism::create(PosetRef source, PosetRef target, const std::map<std::string, std::string>& map) {
  if (!source || !target) throw ValidationError("morphism needs a source and a target poset");
  std::vector<PointIndex> indices(source->size(), 0);
  std::vector<bool> seen(source->size(), false);
  for (const auto& [from, to] : map) {
    const auto a = source->index_of(from);
    indices[a] = target->index_of(to);
    seen[a] = true;
  }
  for (PointIndex a = 0; a < source->size(); ++a) {
    if (!seen[a]) throw ValidationError("morphism does not map source point '" + source->id(a) + "'");
  }
  return create(std::move(source), std::move(target), std::move(indices));
}

PosetMorphism PosetMorphism::identity(PosetRef poset) {
  std::vector<PointIndex> map(poset->size());
  for (PointIndex i = 0; i < map.size(); ++i) map[i] = i;
  return PosetMorphism(poset, poset, std::move(map));
}

PointSet PosetMorphism::preimage(PointSet s) const {
  PointSet out;
  for (PointIndex a = 0; a < map_.size(); ++a) {
    if (s.contains(map_[a])) out.insert(a);
  }
  return out;
}

PosetMorphism compose(const PosetMorphism& g, const PosetMorphism& f) {
  if (!same_poset(f.target(), g.source())) throw ValidationError("morphisms are not composable");
  std::vector<PointIndex> map(f.map().size());
  for (PointIndex a = 0; a < map.size(); ++a) map[a] = g(f(a));
  return PosetMorphism::create(f.source(), g.target(), std::move(map));
}

PairCheck satisfies_codim_inequality(const PosetMorphism& f) {
  const auto& src = *f.source();
  const auto& tgt = *f.target();
  for (PointIndex b = 0; b < src.size(); ++b) {
    for (auto a : src.generalizations(b).indices()) {
      if (src.codim(b, a) < tgt.codim(f(b), f(a))) return PairCheck{false, PairWitness{b, a}};
    }
  }
  return PairCheck{true, std::nullopt};
}

Perversity pullback_perversity(const PosetMorphism& f, const Perversity& p) {
  if (!same_poset(p.poset(), f.target())) throw ValidationError("perversity does not live on the morphism's target");
  std::vector<int> values(f.map().size());
  for (PointIndex a = 0; a < values.size(); ++a) values[a] = p(f(a));
  return Perversity(f.source(), std::move(values));
}

Filtration pullback_filtration(const PosetMorphism& f, const Filtration& phi) {
  if (!same_poset(phi.poset(), f.target())) throw ValidationError("filtration does not live on the morphism's target");
  if (phi.is_constant_form()) return Filtration::constant(f.source(), f.preimage(phi.low_tail()));
  std::vector<PointSet> levels;
  for (auto s : phi.levels()) levels.push_back(f.preimage(s));
  return Filtration::finite(f.source(), phi.lo(), f.preimage(phi.low_tail()), std::move(levels));
}

bool pullback_preserves_comonotone(const PosetMorphism& f, const Perversity& p) {
  return is_comonotone(pullback_perversity(f, p)).ok;
}

std::optional<Perversity> find_comonotone_counterexample(const PosetMorphism& f, int lo, int hi) {
  for (const auto& p : enumerate_mc_perversities(f.target(), ValueRange{lo, hi})) {
    if (!pullback_preserves_comonotone(f, p)) return p;
  }
  return std::nullopt;
}

}  // namespace tstruct
