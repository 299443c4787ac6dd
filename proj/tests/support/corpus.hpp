#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tstruct/spectral_poset.hpp"

namespace testsupport {

/// Raw finite poset: up[i] has bit j set iff i ⊑ j (reflexive, transitive).
/// Kept apart from the library so oracles never share its code paths.
struct Relation {
  std::size_t n = 0;
  std::vector<std::uint64_t> up;

  bool leq(std::size_t i, std::size_t j) const { return (up[i] >> j) & 1U; }
  bool operator==(const Relation&) const = default;
};

/// Calls fn on every naturally labeled poset on n points (i ⊑ j implies
/// i ≤ j). Every isomorphism class shows up at least once.
void for_each_natural_poset(std::size_t n, const std::function<void(const Relation&)>& fn);

/// Like for_each_natural_poset, restricted to labelings sorted by rank
/// (longest chain below) and, within a rank, by the predecessor bit mask.
/// Every isomorphism class still appears, with far fewer repeats.
void for_each_rank_sorted_poset(std::size_t n, const std::function<void(const Relation&)>& fn);

/// Isomorphism-invariant code: the least relation matrix over all
/// relabelings. Practical up to n = 8.
std::uint64_t canonical_code(const Relation& r);

/// One representative per isomorphism class. Practical up to n = 7.
const std::vector<Relation>& unlabeled_posets(std::size_t n);

/// Longest chain below each point; strictly increasing along covers.
std::vector<int> rank_heights(const Relation& r);
/// Heights raising every cover by exactly one with minimum 0 per
/// component, or nothing if the poset is not graded.
std::optional<std::vector<int>> graded_heights(const Relation& r);
/// rank heights scaled by `factor` plus the point index parity, so covers
/// may jump by more than one.
std::vector<int> gapped_heights(const Relation& r, int factor);

std::vector<std::pair<std::size_t, std::size_t>> cover_pairs(const Relation& r);
std::size_t component_count(const Relation& r);

std::string point_id(std::size_t i);
tstruct::PosetRef to_poset(const Relation& r, const std::vector<int>& heights);

/// Random poset: each pair i < j is related with probability `density`
/// before transitive closure.
Relation random_relation(std::size_t n, double density, std::mt19937& rng);

Relation disjoint_union(const Relation& a, const Relation& b);
Relation chain(std::size_t n);
Relation antichain(std::size_t n);

/// Every map between the point sets of `source` and `target` preserving ⊑.
std::vector<std::vector<std::size_t>> continuous_maps(const Relation& source, const Relation& target);

}  // namespace testsupport
