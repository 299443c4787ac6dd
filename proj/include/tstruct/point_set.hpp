#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace tstruct {

using PointIndex = std::size_t;

/// Subset of a poset's points, stored as a bit mask over point indices.
/// Point indices follow the poset's canonical (lexicographic id) order.
class PointSet {
 public:
  static constexpr std::size_t kCapacity = 64;

  constexpr PointSet() = default;
  constexpr explicit PointSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr PointSet single(PointIndex i) { return PointSet{std::uint64_t{1} << i}; }
  static constexpr PointSet first_n(std::size_t n) {
    return PointSet{n >= kCapacity ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(PointIndex i) const { return (bits_ >> i) & 1U; }
  constexpr bool subset_of(PointSet other) const { return (bits_ & ~other.bits_) == 0; }

  constexpr void insert(PointIndex i) { bits_ |= std::uint64_t{1} << i; }
  constexpr void erase(PointIndex i) { bits_ &= ~(std::uint64_t{1} << i); }

  constexpr PointSet operator|(PointSet o) const { return PointSet{bits_ | o.bits_}; }
  constexpr PointSet operator&(PointSet o) const { return PointSet{bits_ & o.bits_}; }
  constexpr PointSet operator-(PointSet o) const { return PointSet{bits_ & ~o.bits_}; }
  constexpr PointSet& operator|=(PointSet o) { bits_ |= o.bits_; return *this; }
  constexpr PointSet& operator&=(PointSet o) { bits_ &= o.bits_; return *this; }

  constexpr bool operator==(const PointSet&) const = default;

  /// Ascending point indices.
  std::vector<PointIndex> indices() const {
    std::vector<PointIndex> out;
    out.reserve(size());
    for (auto b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<PointIndex>(std::countr_zero(b)));
    return out;
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (auto b = bits_; b != 0; b &= b - 1) fn(static_cast<PointIndex>(std::countr_zero(b)));
  }

 private:
  std::uint64_t bits_ = 0;
};

/// Order used for emitted down-set lists: cardinality first, then the sorted
/// index sequences lexicographically.
bool canonical_less(PointSet a, PointSet b);

}  // namespace tstruct
