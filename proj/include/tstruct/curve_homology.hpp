#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace tstruct::curve {

/// A smooth projective curve, known only through its genus.
class CurveContext {
 public:
  explicit CurveContext(int genus);
  int genus() const { return genus_; }

 private:
  int genus_;
};

/// Torsion sheaf of total degree d. All torsion classes are supported at one
/// fixed closed point x and modeled as k(x)^{⊕d}.
struct Torsion {
  int degree;
  bool operator==(const Torsion&) const = default;
};

/// W = L^{⊕r} for a line bundle L of degree `line_degree`. Line bundles are
/// identified by degree, except in degree 0 where `trivial_at_zero` tells
/// O apart from one fixed nontrivial degree-0 line bundle.
struct HomogBundle {
  int rank;
  int line_degree;
  bool trivial_at_zero;
  bool operator==(const HomogBundle&) const = default;
};

class SheafClass {
 public:
  /// Throws std::invalid_argument unless d ≥ 1.
  static SheafClass torsion(int degree);
  /// Throws std::invalid_argument unless r ≥ 1, and trivial_at_zero is only
  /// set in degree 0.
  static SheafClass bundle(int rank, int line_degree, bool trivial_at_zero = false);
  static SheafClass structure_sheaf() { return bundle(1, 0, true); }
  /// k(x).
  static SheafClass skyscraper() { return torsion(1); }

  bool is_torsion() const { return std::holds_alternative<Torsion>(value_); }
  const Torsion& as_torsion() const { return std::get<Torsion>(value_); }
  const HomogBundle& as_bundle() const { return std::get<HomogBundle>(value_); }

  int rank() const;
  /// Total degree: d for torsion, r · deg L for bundles.
  int degree() const;
  /// Same underlying line bundle, for two bundle classes.
  bool same_line_bundle(const SheafClass& other) const;
  /// Bundle with the dual line bundle.
  SheafClass dual() const;

  std::string to_string() const;
  bool operator==(const SheafClass&) const = default;

 private:
  explicit SheafClass(std::variant<Torsion, HomogBundle> v) : value_(v) {}
  std::variant<Torsion, HomogBundle> value_;
};

struct ObjectClass {
  SheafClass sheaf;
  int shift = 0;

  std::string to_string() const;
  bool operator==(const ObjectClass&) const = default;
};

/// dim_k Hom(E, F[ext_degree]) for ext_degree ∈ {0, 1}.
///
/// Torsion against bundles and a bundle against itself (same line bundle)
/// use the closed forms valid in every genus. Bundles with distinct line
/// bundles need genus 1, where everything reduces to h⁰ of line bundles.
/// Throws OutOfTableError otherwise, std::invalid_argument for other degrees.
std::int64_t hom_dim_table(const CurveContext& ctx, const SheafClass& e, const SheafClass& f, int ext_degree);

/// dim_k Hom(E, F) for shifted classes: Hom(E'[i], F'[j]) = Ext^{j−i}(E', F'),
/// zero outside degrees 0 and 1.
std::int64_t hom_dim(const CurveContext& ctx, const ObjectClass& e, const ObjectClass& f);

/// χ(E, F) = Σ_k (−1)^k dim Hom(E, F[k]). On unshifted sheaves this is
/// dim Hom(E, F) − dim Hom(E, F[1]).
std::int64_t euler_form(const CurveContext& ctx, const ObjectClass& e, const ObjectClass& f);

/// χ(sheaf) = deg + rank · (1 − g).
std::int64_t euler_characteristic(const CurveContext& ctx, const SheafClass& s);

/// χ(W) rk(V) − χ(V) rk(W). Genus 1 only.
std::int64_t euler_rank_formula(const CurveContext& ctx, const SheafClass& v, const SheafClass& w);

/// χ/rk in lowest terms, or infinity for torsion.
struct Slope {
  bool infinite = false;
  std::int64_t numerator = 0;
  std::int64_t denominator = 1;

  bool operator==(const Slope&) const = default;
  std::string to_string() const;
};

/// Genus 1 only.
Slope slope(const CurveContext& ctx, const SheafClass& s);

struct ObstructionGrid {
  int max_rank = 3;
  int max_degree = 3;
  /// Shifts i in [-max_shift, max_shift] checked for shift invariance.
  int max_shift = 1;
};

struct ObstructionCheck {
  std::string name;
  std::string subject;
  std::int64_t value;
  std::int64_t expected;
  bool passed;
};

struct ObstructionReport {
  int genus;
  std::vector<ObstructionCheck> checks;

  std::size_t failures() const;
};

/// Grid evaluation of the Hom-dimension inequalities that rule out
/// nontrivial weight structures and semi-orthogonal decompositions.
/// Throws std::invalid_argument for genus 0.
ObstructionReport check_nonexistence_obstructions(const CurveContext& ctx, const ObstructionGrid& grid);

enum class Side { kNeither, kX, kY };

struct Bipartition {
  std::vector<Side> sides;  // parallel to the class list
  bool operator==(const Bipartition&) const = default;
};

struct BipartitionRules {
  /// A nonzero X holds a bundle at every shift of the window.
  bool bundle_at_every_shift = true;
  /// Internal-hom closure of X: a bundle at shift i in X forces every bundle
  /// class at shift i into X (W ⊗ W^∨ = O^{⊕r²}).
  bool tensor = false;
  unsigned parallelism = 1;
};

/// Assignments of classes to X, Y or neither with X[−1] ⊂ X, Y[1] ⊂ Y
/// inside the window [lo, hi], Hom(X, Y) = 0, and the optional rules above;
/// only assignments with both sides nonempty are returned, in lexicographic
/// order of sides (neither < X < Y). Throws std::invalid_argument for a shift
/// outside the window and OutOfTableError when a Hom is not computable.
std::vector<Bipartition> search_admissible_bipartitions(const CurveContext& ctx, std::span<const ObjectClass> classes,
                                                        int window_lo, int window_hi,
                                                        const BipartitionRules& rules = {});

}  // namespace tstruct::curve
