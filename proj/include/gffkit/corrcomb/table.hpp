#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gffkit::corrcomb {

/*
 * Argument tuple of a smeared correlator, written in display order: key[0] is
 * the leftmost (highest-position) argument, key[n-1] the rightmost. Entries
 * index a declared finite test-function alphabet.
 */
using ArgKey = std::vector<int>;

/*
 * Dense table of smeared n-point (or truncated n-point) values over a finite
 * alphabet, up to a maximum order. Order 0 has the single empty key; for a
 * moment table its value is fixed to 1 (state normalisation).
 */
template <class V>
class CorrelatorTable {
 public:
  CorrelatorTable() = default;
  CorrelatorTable(int alphabet_size, int max_order)
      : alphabet_size_(alphabet_size), max_order_(max_order) {
    if (alphabet_size < 0 || max_order < 0)
      throw std::invalid_argument("CorrelatorTable: negative alphabet size or order");
  }

  int alphabet_size() const { return alphabet_size_; }
  int max_order() const { return max_order_; }

  void set(const ArgKey& key, V value) {
    check_key(key);
    values_[key] = std::move(value);
  }

  const V& at(const ArgKey& key) const {
    auto it = values_.find(key);
    if (it == values_.end())
      throw std::out_of_range("CorrelatorTable: no entry for key " + key_str(key));
    return it->second;
  }

  std::optional<V> find(const ArgKey& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    return it->second;
  }

  // Value with absent entries read as zero (cumulant tables are sparse).
  V at_or_zero(const ArgKey& key) const {
    auto it = values_.find(key);
    return it == values_.end() ? V{} : it->second;
  }

  const std::map<ArgKey, V>& entries() const { return values_; }

  // Optional per-order metadata: whether the order is known symmetric.
  void set_symmetric_flag(int order, bool symmetric) { symmetric_[order] = symmetric; }
  std::optional<bool> symmetric_flag(int order) const {
    auto it = symmetric_.find(order);
    if (it == symmetric_.end()) return std::nullopt;
    return it->second;
  }

  bool operator==(const CorrelatorTable& other) const {
    return alphabet_size_ == other.alphabet_size_ && max_order_ == other.max_order_ &&
           values_ == other.values_;
  }

  // Visit all keys of the given order over the alphabet, lexicographically.
  template <class F>
  void for_each_key(int order, F&& fn) const {
    ArgKey key(size_t(order), 0);
    if (order == 0) {
      fn(key);
      return;
    }
    while (true) {
      fn(key);
      int i = order - 1;
      while (i >= 0 && key[size_t(i)] == alphabet_size_ - 1) --i;
      if (i < 0) break;
      ++key[size_t(i)];
      for (int j = i + 1; j < order; ++j) key[size_t(j)] = 0;
    }
  }

  static std::string key_str(const ArgKey& key) {
    std::string s = "(";
    for (size_t i = 0; i < key.size(); ++i) s += (i ? "," : "") + std::to_string(key[i]);
    return s + ")";
  }

 private:
  void check_key(const ArgKey& key) const {
    if (int(key.size()) > max_order_)
      throw std::out_of_range("CorrelatorTable: key order exceeds max_order");
    for (int id : key) {
      if (id < 0 || id >= alphabet_size_)
        throw std::out_of_range("CorrelatorTable: argument id outside alphabet");
    }
  }

  int alphabet_size_ = 0;
  int max_order_ = 0;
  std::map<ArgKey, V> values_;
  std::map<int, bool> symmetric_;
};

}  // namespace gffkit::corrcomb
