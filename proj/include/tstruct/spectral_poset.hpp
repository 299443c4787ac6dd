#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tstruct/point_set.hpp"

namespace tstruct {

/// A point of a finite spectral space. `height` plays the role of the local
/// dimension dim O_{x,X}; it is supplied, never derived from chain lengths.
struct Point {
  std::string id;
  int height = 0;

  bool operator==(const Point&) const = default;
};

/// Raw cover pair: `to` is an immediate specialization of `from`.
struct Cover {
  std::string from;
  std::string to;

  bool operator==(const Cover&) const = default;
};

class SpectralPoset;
using PosetRef = std::shared_ptr<const SpectralPoset>;

/// Finite model of the underlying space of a Noetherian scheme.
///
/// Points are stored in lexicographic id order, and that order fixes the
/// meaning of every PointIndex and PointSet handed out by the poset. We write
/// x ⊑ y when y lies in the closure of x (y specializes x). The order
/// relation is materialized on construction; instances are immutable.
class SpectralPoset {
 public:
  static constexpr std::size_t kMaxPoints = PointSet::kCapacity;

  /// Validates and builds a poset. Throws ValidationError on a duplicate id,
  /// a malformed id, a negative height, a dangling cover id, a cover cycle,
  /// a cover along which the height does not strictly increase, or a cover
  /// implied by the others.
  static PosetRef create(std::vector<Point> points, std::vector<Cover> covers);

  std::size_t size() const { return points_.size(); }
  std::span<const Point> points() const { return points_; }
  const Point& point(PointIndex i) const { return points_.at(i); }
  const std::string& id(PointIndex i) const { return points_.at(i).id; }
  int height(PointIndex i) const { return points_.at(i).height; }
  int max_height() const { return max_height_; }

  std::optional<PointIndex> find(std::string_view id) const;
  /// Throws UnknownPointError.
  PointIndex index_of(std::string_view id) const;
  /// Throws UnknownPointError on the first unknown id.
  PointSet set_of(std::span<const std::string> ids) const;
  std::vector<std::string> ids_of(PointSet s) const;

  /// Cover pairs (from, to) in canonical order.
  std::span<const std::pair<PointIndex, PointIndex>> covers() const { return covers_; }

  PointSet all() const { return PointSet::first_n(size()); }
  /// closure{x}: every y with x ⊑ y, including x.
  PointSet specializations(PointIndex x) const { return up_.at(x); }
  /// Every x with x ⊑ y, including y.
  PointSet generalizations(PointIndex y) const { return down_.at(y); }

  /// True iff x ⊑ y.
  bool is_specialization(PointIndex x, PointIndex y) const;
  bool is_specialization(std::string_view x, std::string_view y) const;

  /// δ(y, x) = height(y) − height(x) for a specialization pair (x ⊑ y).
  /// Throws ValidationError if (y, x) is not a specialization pair.
  int codim(PointIndex y, PointIndex x) const;
  int codim(std::string_view y, std::string_view x) const;

  /// Smallest specialization-closed superset. Throws UnknownPointError if
  /// `s` has bits outside the poset.
  PointSet closure(PointSet s) const;
  bool is_specialization_closed(PointSet s) const;
  /// Closed under generalization as well: the dual notion.
  bool is_generalization_closed(PointSet s) const;

  /// Every cover raises the height by exactly one.
  bool is_graded() const;

  /// Components of the undirected comparability graph, ordered by smallest
  /// point index.
  std::vector<PointSet> connected_components() const;

  /// Point indices sorted by (height, index); generalizations come first.
  std::span<const PointIndex> generic_first_order() const { return generic_first_; }

  bool operator==(const SpectralPoset& other) const;

 private:
  SpectralPoset() = default;
  void check_subset(PointSet s) const;

  std::vector<Point> points_;
  std::vector<std::pair<PointIndex, PointIndex>> covers_;
  std::vector<PointSet> up_;
  std::vector<PointSet> down_;
  std::vector<PointIndex> generic_first_;
  int max_height_ = 0;
};

/// Same poset object or structurally equal posets.
bool same_poset(const PosetRef& a, const PosetRef& b);

}  // namespace tstruct
