#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tstruct/spectral_poset.hpp"

namespace tstruct {

/// A ℤ-indexed decreasing family i ↦ φ(i) of subsets of a poset.
///
/// Finite form: φ(i) = low_tail for i < lo, levels[i − lo] for lo ≤ i < hi,
/// and ∅ for i ≥ hi. The window is canonical: the first level differs from
/// low_tail and the last level is nonempty, so equal families compare equal.
/// The everywhere-∅ family is stored as lo = hi = 0 with an empty tail.
///
/// Constant form: φ(i) = S for every i, S ≠ ∅. This is what the
/// triangulated-subcategory case needs, since the finite form always ends
/// in ∅.
///
/// Construction does not require the Thomason conditions; use
/// validate_thomason for that.
class Filtration {
 public:
  static Filtration finite(PosetRef poset, int lo, PointSet low_tail, std::vector<PointSet> levels);
  static Filtration constant(PosetRef poset, PointSet value);
  static Filtration empty(PosetRef poset);

  const PosetRef& poset() const { return poset_; }
  bool is_constant_form() const { return constant_; }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(levels_.size()); }
  /// Value below the window (the constant value for the constant form).
  PointSet low_tail() const { return low_tail_; }
  std::span<const PointSet> levels() const { return levels_; }

  /// φ(i).
  PointSet eval(int i) const;

  bool operator==(const Filtration& other) const;

 private:
  Filtration(PosetRef poset, bool constant, int lo, PointSet low_tail, std::vector<PointSet> levels);

  PosetRef poset_;
  bool constant_ = false;
  int lo_ = 0;
  PointSet low_tail_;
  std::vector<PointSet> levels_;
};

/// Result of validate_thomason. `index` is the offending level (absent for
/// the low tail), `point` the offending point.
struct ThomasonDiagnostic {
  bool ok = true;
  std::optional<int> index;
  std::optional<PointIndex> point;
  std::string message;

  explicit operator bool() const { return ok; }
};

ThomasonDiagnostic validate_thomason(const Filtration& f);

/// Failure witness of the Thomason-Cousin condition: `special` ∈ φ(level)
/// but `generic` ∉ φ(level − δ(special, generic)).
struct CousinWitness {
  PointIndex special;
  PointIndex generic;
  int level;

  bool operator==(const CousinWitness&) const = default;
};

struct CousinResult {
  bool ok = true;
  std::optional<CousinWitness> witness;

  explicit operator bool() const { return ok; }
};

/// Full condition over every specialization pair (y, x):
/// y ∈ φ(i) ⟹ x ∈ φ(i − δ(y, x)). Expects a Thomason filtration.
CousinResult is_thomason_cousin(const Filtration& f);

/// Weak Cousin condition on cover pairs only: q ∈ φ(j) ⟹ p ∈ φ(j − 1) when
/// q is an immediate specialization of p.
bool is_cousin_via_covers(const Filtration& f);

/// Models i ↦ Supp H^i(A) of a bounded complex: finitely many nonempty,
/// specialization-closed entries.
class GradedSupport {
 public:
  /// Drops empty entries. Throws ValidationError if an entry is not
  /// specialization-closed or leaves the poset.
  GradedSupport(PosetRef poset, std::map<int, PointSet> entries);

  const PosetRef& poset() const { return poset_; }
  const std::map<int, PointSet>& entries() const { return entries_; }
  PointSet entry(int i) const;

  bool operator==(const GradedSupport& other) const;

 private:
  PosetRef poset_;
  std::map<int, PointSet> entries_;
};

/// φ(n) = closure of the union of B.entry(i) over all B and all i ≥ n.
/// Throws ValidationError if a support lives on a different poset.
Filtration generated_filtration(const PosetRef& poset, std::span<const GradedSupport> supports);

/// A.entry(i) ⊆ φ(i) for every i.
bool lies_in_aisle(const GradedSupport& a, const Filtration& f);

/// φ'(i) = φ(i + k).
Filtration shift(const Filtration& f, int k);

/// φ(i) = φ(j) for all i, j.
bool is_constant(const Filtration& f);

}  // namespace tstruct
