#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "gffkit/corrcomb/partitions.hpp"
#include "gffkit/corrcomb/table.hpp"

namespace gffkit::corrcomb {

/*
 * Moment <-> truncated (cumulant) transform over ordered set partitions.
 *
 * Conventions, fixed once for the whole project:
 *  - an ArgKey lists arguments in display order, key[0] leftmost;
 *  - argument positions are counted 1..n from the right, so position p sits
 *    at array index n - p;
 *  - a block {p_1 < ... < p_m} of positions contributes the truncated value
 *    at the key (x_{p_m}, ..., x_{p_1}), which is precisely the subsequence
 *    of the full key at ascending array indices. The descending-position
 *    ordering matters for non-symmetric tables and is implemented literally.
 */
template <class V>
ArgKey block_subkey(const ArgKey& key, const std::vector<int>& block_positions);

inline ArgKey block_subkey(const ArgKey& key, const std::vector<int>& block_positions) {
  const int n = int(key.size());
  ArgKey sub;
  sub.reserve(block_positions.size());
  for (auto it = block_positions.rbegin(); it != block_positions.rend(); ++it)
    sub.push_back(key.at(size_t(n - *it)));
  return sub;
}

/*
 * Moment value at `key` from a cumulant table: sum over all partitions of the
 * positions, product over blocks of cumulant entries. Missing cumulant
 * entries raise a lookup error. The order-0 moment is 1 (empty partition).
 */
template <class V>
V moments_from_cumulants(const CorrelatorTable<V>& cumulants, const ArgKey& key) {
  const int n = int(key.size());
  if (n == 0) return V{1};
  if (n > cumulants.max_order())
    throw std::out_of_range("moments_from_cumulants: order exceeds table max_order");
  V total{};
  for_each_partition(n, [&](const Partition& p) {
    V prod{1};
    for (const auto& block : p.blocks) {
      prod *= cumulants.at(block_subkey(key, block));
      // note: zero blocks still multiply; exactness over speed here
    }
    total += prod;
  });
  return total;
}

/*
 * Truncated values from a moment table, solving the partition expansion
 * iteratively order by order. Construct once per moment table; results are
 * memoised across calls (the recursion revisits subkeys heavily).
 */
template <class V>
class CumulantSolver {
 public:
  explicit CumulantSolver(const CorrelatorTable<V>& moments) : moments_(moments) {
    ArgKey empty{};
    if (moments.max_order() >= 0) {
      auto w0 = moments.find(empty);
      if (w0.has_value() && !(*w0 == V{1}))
        throw std::invalid_argument("CumulantSolver: moment table must have order-0 value 1");
    }
  }

  const V& truncated(const ArgKey& key) {
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    const int n = int(key.size());
    if (n == 0) throw std::invalid_argument("CumulantSolver: truncated value has no order 0");
    V value = moments_.at(key);
    if (n > 1) {
      // subtract every partition except the single-block one
      V rest{};
      for_each_partition(n, [&](const Partition& p) {
        if (p.blocks.size() == 1) return;
        V prod{1};
        for (const auto& block : p.blocks) prod *= truncated(block_subkey(key, block));
        rest += prod;
      });
      value -= rest;
    }
    auto [ins, _] = memo_.emplace(key, std::move(value));
    return ins->second;
  }

 private:
  const CorrelatorTable<V>& moments_;
  std::map<ArgKey, V> memo_;
};

template <class V>
V cumulants_from_moments(const CorrelatorTable<V>& moments, const ArgKey& key) {
  CumulantSolver<V> solver(moments);
  return solver.truncated(key);
}

// Full-table versions of the transform, dense over the alphabet.
template <class V>
CorrelatorTable<V> moments_table(const CorrelatorTable<V>& cumulants) {
  CorrelatorTable<V> out(cumulants.alphabet_size(), cumulants.max_order());
  out.set({}, V{1});
  for (int n = 1; n <= cumulants.max_order(); ++n) {
    out.for_each_key(n, [&](const ArgKey& key) { out.set(key, moments_from_cumulants(cumulants, key)); });
  }
  return out;
}

template <class V>
CorrelatorTable<V> cumulants_table(const CorrelatorTable<V>& moments) {
  CorrelatorTable<V> out(moments.alphabet_size(), moments.max_order());
  CumulantSolver<V> solver(moments);
  for (int n = 1; n <= moments.max_order(); ++n) {
    out.for_each_key(n, [&](const ArgKey& key) { out.set(key, solver.truncated(key)); });
  }
  return out;
}

}  // namespace gffkit::corrcomb
