#include "gffkit/corrcomb/partitions.hpp"

#include <stdexcept>
#include <string>

namespace gffkit::corrcomb {

std::vector<std::uint64_t> bell_numbers(int n_max) {
  // Bell triangle: row starts with the last entry of the previous row,
  // every other entry adds its left neighbour and the one above it.
  std::vector<std::uint64_t> bell{1};  // B(0)
  std::vector<std::uint64_t> row{1};
  for (int n = 1; n <= n_max; ++n) {
    std::vector<std::uint64_t> next(n + 1);
    next[0] = row.back();
    for (int k = 1; k <= n; ++k) next[k] = next[k - 1] + row[k - 1];
    bell.push_back(next[0]);
    row = std::move(next);
  }
  return bell;
}

std::uint64_t bell_number(int n) {
  if (n < 0) throw std::invalid_argument("bell_number: n must be nonnegative");
  if (n > 25) throw std::overflow_error("bell_number: n > 25 overflows 64 bits");
  return bell_numbers(n)[size_t(n)];
}

void for_each_partition(int n, const std::function<void(const Partition&)>& visit) {
  if (n < 0) throw std::invalid_argument("for_each_partition: n must be nonnegative");
  Partition part;
  if (n == 0) {
    visit(part);
    return;
  }
  // Restricted growth strings a[0..n-1]: a[0] = 0, a[i] <= 1 + max(a[0..i-1]),
  // enumerated in lexicographic order. a[i] = b places index i+1 in block b.
  std::vector<int> rgs(n, 0);
  std::vector<int> prefix_max(n, 0);  // max of a[0..i]
  auto emit = [&] {
    part.blocks.clear();
    part.blocks.resize(size_t(prefix_max[n - 1]) + 1);
    for (int i = 0; i < n; ++i) part.blocks[size_t(rgs[i])].push_back(i + 1);
    visit(part);
  };
  emit();
  while (true) {
    int i = n - 1;
    while (i > 0 && rgs[i] == prefix_max[i - 1] + 1) --i;
    if (i == 0) break;
    ++rgs[i];
    prefix_max[i] = std::max(rgs[i], prefix_max[i - 1]);
    for (int j = i + 1; j < n; ++j) {
      rgs[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
    emit();
  }
}

std::vector<Partition> enumerate_partitions(int n, int cap) {
  if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be nonnegative");
  if (n > cap) {
    throw std::length_error("enumerate_partitions: n = " + std::to_string(n) +
                            " exceeds the cap " + std::to_string(cap) + "; Bell(" +
                            std::to_string(n) + ") = " +
                            (n <= 25 ? std::to_string(bell_number(n)) : std::string("> 2^64")) +
                            " partitions. Raise the cap explicitly to proceed.");
  }
  std::vector<Partition> out;
  if (n <= 25) out.reserve(size_t(bell_number(n)));
  for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
  return out;
}

void for_each_pair_partition(
    int n, const std::function<void(const std::vector<std::pair<int, int>>&)>& visit) {
  if (n < 0) throw std::invalid_argument("for_each_pair_partition: n must be nonnegative");
  std::vector<std::pair<int, int>> pairs;
  if (n == 0) {
    visit(pairs);
    return;
  }
  if (n % 2 != 0) return;
  std::vector<bool> used(size_t(n) + 1, false);
  std::function<void()> rec = [&] {
    int lo = 0;
    for (int i = 1; i <= n; ++i) {
      if (!used[size_t(i)]) {
        lo = i;
        break;
      }
    }
    if (lo == 0) {
      visit(pairs);
      return;
    }
    used[size_t(lo)] = true;
    for (int hi = lo + 1; hi <= n; ++hi) {
      if (used[size_t(hi)]) continue;
      used[size_t(hi)] = true;
      pairs.emplace_back(lo, hi);
      rec();
      pairs.pop_back();
      used[size_t(hi)] = false;
    }
    used[size_t(lo)] = false;
  };
  rec();
}

}  // namespace gffkit::corrcomb
