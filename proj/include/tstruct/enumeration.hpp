#pragma once

#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "tstruct/perversity.hpp"

namespace tstruct {

/// Half-open index window [lo, hi).
struct Window {
  int lo = 0;
  int hi = 0;

  int length() const { return hi - lo; }
  bool operator==(const Window&) const = default;
};

/// Closed value range [lo, hi].
struct ValueRange {
  int lo = 0;
  int hi = 0;

  bool operator==(const ValueRange&) const = default;
};

/// Perversity values matching TC filtrations with levels in `w`:
/// p(x) = max{n | x ∈ φ(n)} ranges over [w.lo − 1, w.hi − 1].
inline ValueRange matching_range(Window w) { return ValueRange{w.lo - 1, w.hi - 1}; }

struct EnumerationOptions {
  static constexpr std::size_t kDefaultMaxPoints = 24;

  std::size_t max_points = kDefaultMaxPoints;
  int max_window = 32;
  unsigned parallelism = 1;
};

/// Exhaustive enumerators over one poset. The down-set table is built on
/// first use and shared read-only by all enumerators and worker threads.
///
/// Output orders are canonical and independent of `parallelism`:
///   - down-sets: by cardinality, then lexicographically by sorted ids;
///   - TC filtrations: level-lexicographic, comparing φ(hi − 1) first, then
///     φ(hi − 2), ..., each level by its rank in the down-set order;
///   - perversities: lexicographically by values in point-id order.
class Enumerator {
 public:
  /// Throws LimitError when the poset exceeds options.max_points.
  explicit Enumerator(PosetRef poset, EnumerationOptions options = {});

  const PosetRef& poset() const { return poset_; }
  const std::vector<PointSet>& down_sets() const;

  /// Thomason-Cousin filtrations with low tail X and levels in `window`.
  std::vector<Filtration> tc_filtrations(Window window) const;
  std::uint64_t count_tc_filtrations(Window window) const;

  /// Monotone comonotone perversities with values in `range`.
  std::vector<Perversity> mc_perversities(ValueRange range) const;

  /// Constant filtrations satisfying the Thomason-Cousin condition.
  std::vector<Filtration> constant_tc_filtrations() const;

 private:
  template <typename Sink>
  void walk_tc(Window window, Sink&& sink_factory) const;
  void check_window(Window window) const;

  PosetRef poset_;
  EnumerationOptions options_;
  mutable std::once_flag table_once_;
  mutable std::vector<PointSet> table_;
};

std::vector<PointSet> enumerate_down_sets(const PosetRef& poset, const EnumerationOptions& options = {});
std::vector<Filtration> enumerate_tc_filtrations(const PosetRef& poset, Window window,
                                                 const EnumerationOptions& options = {});
std::vector<Perversity> enumerate_mc_perversities(const PosetRef& poset, ValueRange range,
                                                  const EnumerationOptions& options = {});
std::vector<Filtration> constant_tc_filtrations(const PosetRef& poset, const EnumerationOptions& options = {});

struct CrosscheckReport {
  Window window;
  ValueRange range;
  std::uint64_t tc_count = 0;
  std::uint64_t mc_count = 0;
  /// to_filtration maps the perversity list bijectively onto the TC list.
  bool bijective = false;
  std::optional<std::string> mismatch;

  bool ok() const { return tc_count == mc_count && bijective; }
};

CrosscheckReport crosscheck_counts(const PosetRef& poset, Window window, const EnumerationOptions& options = {});

}  // namespace tstruct
