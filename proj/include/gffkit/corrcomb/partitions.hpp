#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace gffkit::corrcomb {

/*
 * Set partition of {1..n}. Each block is strictly increasing and the blocks
 * are ordered by their smallest element, which is exactly the shape produced
 * by restricted-growth-string enumeration.
 */
struct Partition {
  std::vector<std::vector<int>> blocks;

  int order() const {
    int n = 0;
    for (const auto& b : blocks) n += int(b.size());
    return n;
  }
  bool operator==(const Partition& other) const = default;
};

inline constexpr int kDefaultPartitionCap = 12;

// Bell numbers via the Bell-triangle recurrence. Overflow-safe up to n = 25.
std::uint64_t bell_number(int n);
std::vector<std::uint64_t> bell_numbers(int n_max);

/*
 * Visit every partition of {1..n} as a restricted growth string in
 * lexicographic order. The callback receives the block structure; it must not
 * retain the reference past the call. n = 0 visits the single empty partition.
 */
void for_each_partition(int n, const std::function<void(const Partition&)>& visit);

// Materialised enumeration; throws std::length_error (naming the Bell-number
// count) when n exceeds the cap.
std::vector<Partition> enumerate_partitions(int n, int cap = kDefaultPartitionCap);

/*
 * Visit every perfect matching (pair partition) of {1..n}; no-op unless n is
 * even and positive, except n = 0 which visits the empty matching. Pairs are
 * emitted as (lo, hi) with the blocks ordered by their smallest element, and
 * the enumeration order is deterministic: the smallest unmatched index is
 * paired with each larger unmatched index in increasing order.
 */
void for_each_pair_partition(
    int n, const std::function<void(const std::vector<std::pair<int, int>>&)>& visit);

}  // namespace gffkit::corrcomb
