#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tstruct/perversity.hpp"

namespace tstruct {

/// Continuous (specialization-preserving) map between finite spectral posets.
class PosetMorphism {
 public:
  /// Throws ValidationError when the map is not total, names an unknown
  /// point, or breaks a specialization: a ⊑ b but f(a) ⋢ f(b).
  static PosetMorphism create(PosetRef source, PosetRef target, const std::map<std::string, std::string>& map);
  static PosetMorphism create(PosetRef source, PosetRef target, std::vector<PointIndex> map);
  static PosetMorphism identity(PosetRef poset);

  const PosetRef& source() const { return source_; }
  const PosetRef& target() const { return target_; }
  PointIndex operator()(PointIndex a) const { return map_.at(a); }
  std::span<const PointIndex> map() const { return map_; }

  PointSet preimage(PointSet s) const;

 private:
  PosetMorphism(PosetRef source, PosetRef target, std::vector<PointIndex> map);

  PosetRef source_;
  PosetRef target_;
  std::vector<PointIndex> map_;
};

/// g ∘ f. Throws ValidationError when f's target is not g's source.
PosetMorphism compose(const PosetMorphism& g, const PosetMorphism& f);

/// δ_source(b, a) ≥ δ_target(f(b), f(a)) for every source pair a ⊑ b. The
/// witness is the offending source pair.
PairCheck satisfies_codim_inequality(const PosetMorphism& f);

/// p ∘ f.
Perversity pullback_perversity(const PosetMorphism& f, const Perversity& p);

/// φ'(n) = f⁻¹(φ(n)).
Filtration pullback_filtration(const PosetMorphism& f, const Filtration& phi);

/// Whether p ∘ f is comonotone. Always true when p is monotone comonotone
/// and f satisfies the codimension inequality.
bool pullback_preserves_comonotone(const PosetMorphism& f, const Perversity& p);

/// Searches monotone comonotone perversities on the target with values in
/// [lo, hi] for one whose pullback along f is not comonotone.
std::optional<Perversity> find_comonotone_counterexample(const PosetMorphism& f, int lo, int hi);

}  // namespace tstruct
