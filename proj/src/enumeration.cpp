#include "tstruct/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <map>
#include <stdexcept>
#include <thread>

#include "tstruct/error.hpp"

namespace tstruct {

namespace {

constexpr int kNoNeed = INT_MIN / 2;

/// Depth-first walk over Thomason-Cousin filtrations in a window, choosing
/// levels from the top index downwards. need_[x] is the highest level x is
/// forced into by the Cousin condition from points already placed.
class TcWalker {
 public:
  TcWalker(const SpectralPoset& poset, const std::vector<PointSet>& table, Window window)
      : poset_(poset), table_(table), window_(window), need_(poset.size(), kNoNeed) {}

  template <typename Emit>
  void run_from_top(PointSet top, Emit& emit) {
    chosen_.clear();
    std::fill(need_.begin(), need_.end(), kNoNeed);
    place(PointSet{}, top, window_.hi - 1);
    descend(window_.hi - 2, top, emit);
  }

 private:
  template <typename Emit>
  void descend(int level, PointSet current, Emit& emit) {
    if (level < window_.lo) {
      emit(std::span<const PointSet>(chosen_));
      return;
    }
    PointSet required = current;
    for (PointIndex x = 0; x < need_.size(); ++x) {
      if (need_[x] >= level) required.insert(x);
    }
    const auto saved = need_;
    for (auto candidate : table_) {
      if (!required.subset_of(candidate)) continue;
      place(current, candidate, level);
      descend(level - 1, candidate, emit);
      chosen_.pop_back();
      need_ = saved;
    }
  }

  void place(PointSet current, PointSet chosen, int level) {
    chosen_.push_back(chosen);
    (chosen - current).for_each([&](PointIndex y) {
      poset_.generalizations(y).for_each([&](PointIndex x) {
        if (x != y) need_[x] = std::max(need_[x], level - poset_.codim(y, x));
      });
    });
  }

  const SpectralPoset& poset_;
  const std::vector<PointSet>& table_;
  Window window_;
  std::vector<int> need_;
  std::vector<PointSet> chosen_;  // chosen_[k] = φ(hi − 1 − k)
};

template <typename Task>
void run_tasks(std::size_t count, unsigned parallelism, Task&& task) {
  const auto workers = std::max<std::size_t>(1, std::min<std::size_t>(parallelism, count));
  if (workers == 1) {
    for (std::size_t t = 0; t < count; ++t) task(t);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      try {
        for (auto t = next++; t < count; t = next++) task(t);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

std::vector<PointSet> build_down_sets(const SpectralPoset& poset) {
  // Specializations before generalizations: a point may join only once its
  // whole closure is already in.
  std::vector<PointIndex> order(poset.generic_first_order().rbegin(), poset.generic_first_order().rend());
  std::vector<PointSet> out;
  auto rec = [&](auto&& self, std::size_t k, PointSet acc) -> void {
    if (k == order.size()) {
      out.push_back(acc);
      return;
    }
    const auto x = order[k];
    self(self, k + 1, acc);
    if ((poset.specializations(x) - PointSet::single(x)).subset_of(acc)) {
      self(self, k + 1, acc | PointSet::single(x));
    }
  };
  rec(rec, 0, PointSet{});
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

}  // namespace

Enumerator::Enumerator(PosetRef poset, EnumerationOptions options) : poset_(std::move(poset)), options_(options) {
  if (!poset_) throw ValidationError("enumeration needs a poset");
  if (poset_->size() > options_.max_points) {
    throw LimitError("poset has " + std::to_string(poset_->size()) + " points, above the enumeration bound of " +
                     std::to_string(options_.max_points) + "; raise the bound to override");
  }
}

const std::vector<PointSet>& Enumerator::down_sets() const {
  std::call_once(table_once_, [&] { table_ = build_down_sets(*poset_); });
  return table_;
}

void Enumerator::check_window(Window window) const {
  if (window.lo > window.hi) throw ValidationError("empty window: lo > hi");
  if (window.length() > options_.max_window) {
    throw LimitError("window length " + std::to_string(window.length()) + " exceeds the bound of " +
                     std::to_string(options_.max_window));
  }
}

template <typename SinkFactory>
void Enumerator::walk_tc(Window window, SinkFactory&& sink_for_task) const {
  check_window(window);
  const auto& table = down_sets();
  if (window.length() == 0) {
    auto sink = sink_for_task(std::size_t{0});
    sink(std::span<const PointSet>{});
    return;
  }
  run_tasks(table.size(), options_.parallelism, [&](std::size_t t) {
    TcWalker walker(*poset_, table, window);
    auto sink = sink_for_task(t);
    walker.run_from_top(table[t], sink);
  });
}

std::vector<Filtration> Enumerator::tc_filtrations(Window window) const {
  const auto task_count = std::max<std::size_t>(1, down_sets().size());
  std::vector<std::vector<Filtration>> per_task(task_count);
  walk_tc(window, [&](std::size_t t) {
    return [this, window, &bucket = per_task[t]](std::span<const PointSet> top_down) {
      std::vector<PointSet> levels(top_down.rbegin(), top_down.rend());
      bucket.push_back(Filtration::finite(poset_, window.lo, poset_->all(), std::move(levels)));
    };
  });
  std::vector<Filtration> out;
  for (auto& bucket : per_task) {
    std::move(bucket.begin(), bucket.end(), std::back_inserter(out));
  }
  return out;
}

std::uint64_t Enumerator::count_tc_filtrations(Window window) const {
  const auto task_count = std::max<std::size_t>(1, down_sets().size());
  std::vector<std::uint64_t> per_task(task_count, 0);
  walk_tc(window, [&](std::size_t t) { return [&n = per_task[t]](std::span<const PointSet>) { ++n; }; });
  std::uint64_t total = 0;
  for (auto n : per_task) total += n;
  return total;
}

std::vector<Perversity> Enumerator::mc_perversities(ValueRange range) const {
  if (range.lo > range.hi) throw ValidationError("empty value range: lo > hi");
  if (range.hi - range.lo + 1 > options_.max_window) {
    throw LimitError("value range wider than the bound of " + std::to_string(options_.max_window));
  }
  const auto& poset = *poset_;
  const auto n = poset.size();
  std::vector<std::vector<PointIndex>> lower_covers(n);
  for (const auto& [from, to] : poset.covers()) lower_covers[to].push_back(from);
  const auto order = poset.generic_first_order();

  std::vector<std::vector<int>> found;
  std::vector<int> values(n, 0);
  // Cover constraints 0 ≤ p(y) − p(x) ≤ δ(y, x); lower covers of y always
  // precede y in generic-first order.
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == n) {
      found.push_back(values);
      return;
    }
    const auto y = order[k];
    int lo = range.lo;
    int hi = range.hi;
    for (auto x : lower_covers[y]) {
      lo = std::max(lo, values[x]);
      hi = std::min(hi, values[x] + poset.codim(y, x));
    }
    for (int v = lo; v <= hi; ++v) {
      values[y] = v;
      self(self, k + 1);
    }
  };
  rec(rec, 0);
  std::sort(found.begin(), found.end());

  std::vector<Perversity> out;
  out.reserve(found.size());
  for (auto& v : found) {
    Perversity p(poset_, std::move(v));
    if (!is_monotone(p) || !is_comonotone(p)) {
      throw std::logic_error("cover propagation produced a perversity failing the full pair check");
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<Filtration> Enumerator::constant_tc_filtrations() const {
  std::vector<Filtration> out;
  for (auto s : down_sets()) {
    auto f = Filtration::constant(poset_, s);
    if (is_thomason_cousin(f)) out.push_back(std::move(f));
  }
  return out;
}

std::vector<PointSet> enumerate_down_sets(const PosetRef& poset, const EnumerationOptions& options) {
  return Enumerator(poset, options).down_sets();
}

std::vector<Filtration> enumerate_tc_filtrations(const PosetRef& poset, Window window,
                                                 const EnumerationOptions& options) {
  return Enumerator(poset, options).tc_filtrations(window);
}

std::vector<Perversity> enumerate_mc_perversities(const PosetRef& poset, ValueRange range,
                                                  const EnumerationOptions& options) {
  return Enumerator(poset, options).mc_perversities(range);
}

std::vector<Filtration> constant_tc_filtrations(const PosetRef& poset, const EnumerationOptions& options) {
  return Enumerator(poset, options).constant_tc_filtrations();
}

CrosscheckReport crosscheck_counts(const PosetRef& poset, Window window, const EnumerationOptions& options) {
  Enumerator en(poset, options);
  CrosscheckReport report;
  report.window = window;
  report.range = matching_range(window);
  const auto filtrations = en.tc_filtrations(window);
  const auto perversities = en.mc_perversities(report.range);
  report.tc_count = filtrations.size();
  report.mc_count = perversities.size();

  auto key = [&](const Filtration& f) {
    std::vector<std::uint64_t> k;
    for (int i = window.lo - 1; i <= window.hi; ++i) k.push_back(f.eval(i).bits());
    return k;
  };
  std::map<std::vector<std::uint64_t>, std::size_t> tc_keys;
  for (std::size_t i = 0; i < filtrations.size(); ++i) tc_keys.emplace(key(filtrations[i]), i);

  std::map<std::vector<std::uint64_t>, std::size_t> images;
  for (std::size_t i = 0; i < perversities.size(); ++i) {
    const auto f = to_filtration(perversities[i]).filtration;
    const auto k = key(f);
    if (!tc_keys.contains(k)) {
      report.mismatch = "perversity #" + std::to_string(i) + " maps outside the Thomason-Cousin list";
      return report;
    }
    if (!images.emplace(k, i).second) {
      report.mismatch = "perversities #" + std::to_string(images[k]) + " and #" + std::to_string(i) +
                        " map to the same filtration";
      return report;
    }
  }
  if (images.size() != tc_keys.size()) {
    for (const auto& [k, i] : tc_keys) {
      if (!images.contains(k)) {
        report.mismatch = "filtration #" + std::to_string(i) + " has no perversity preimage";
        break;
      }
    }
    return report;
  }
  report.bijective = true;
  return report;
}

}  // namespace tstruct
