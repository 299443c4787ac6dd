#pragma once

#include <optional>
#include <vector>

#include "tstruct/filtration.hpp"

namespace tstruct {

/// Integer-valued function on the points of a poset.
class Perversity {
 public:
  /// `values` is indexed by PointIndex. Throws ValidationError when its
  /// length does not match the poset.
  Perversity(PosetRef poset, std::vector<int> values);

  /// p = height.
  static Perversity dimension(PosetRef poset);
  static Perversity constant(PosetRef poset, int c);

  const PosetRef& poset() const { return poset_; }
  std::span<const int> values() const { return values_; }
  int operator()(PointIndex x) const { return values_.at(x); }
  int min_value() const;
  int max_value() const;

  bool operator==(const Perversity& other) const;

 private:
  PosetRef poset_;
  std::vector<int> values_;
};

/// Specialization pair (special, generic), i.e. generic ⊑ special.
struct PairWitness {
  PointIndex special;
  PointIndex generic;

  bool operator==(const PairWitness&) const = default;
};

struct PairCheck {
  bool ok = true;
  std::optional<PairWitness> witness;

  explicit operator bool() const { return ok; }
};

/// p(y) ≥ p(x) for every specialization pair (y, x).
PairCheck is_monotone(const Perversity& p);

/// x ↦ height(x) − p(x).
Perversity dual(const Perversity& p);

/// dual(p) is monotone; equivalently p(y) − p(x) ≤ δ(y, x) on all pairs.
PairCheck is_comonotone(const Perversity& p);

struct PerversityFiltration {
  Filtration filtration;
  /// Validation status of the levels; fails exactly when p is not monotone.
  ThomasonDiagnostic status;
};

/// φ(n) = {x | p(x) ≥ n}, with φ(n) = X below min p.
PerversityFiltration to_filtration(const Perversity& p);

/// p(x) = max{n | x ∈ φ(n)}. Throws ValidationError when the filtration is
/// not Thomason, is constant and nonempty (no finite maximum), or misses a
/// point entirely.
Perversity from_filtration(const Filtration& f);

/// p(x) ≥ i for every i and every x ∈ A.entry(i).
bool lies_in_Up(const GradedSupport& a, const Perversity& p);

/// Every level {p ≥ n} is closed. On a finite poset closed and
/// specialization-closed coincide, so for monotone p this is always true.
bool is_upper_semicontinuous(const Perversity& p);

}  // namespace tstruct
