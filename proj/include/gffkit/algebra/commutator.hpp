#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "gffkit/algebra/element.hpp"

namespace gffkit::algebra {

/*
 * Scalar commutator table E(f_i, f_j) over generator ids, antisymmetric by
 * construction: storing (i, j) also fixes (j, i) = -value and E(i, i) = 0.
 * Lookups go by id only; the conjugation flag on a label does not enter
 * (the smeared alphabet is real-valued throughout this project).
 */
template <class C>
class CommutatorTable {
 public:
  CommutatorTable() = default;
  explicit CommutatorTable(int alphabet_size) : alphabet_size_(alphabet_size) {}

  int alphabet_size() const { return alphabet_size_; }

  void set(int i, int j, C value) {
    check_id(i);
    check_id(j);
    if (i == j) {
      if (!RingOps<C>::is_zero(value))
        throw std::invalid_argument("CommutatorTable: E(i,i) must vanish");
      return;
    }
    if (i < j)
      entries_[{i, j}] = std::move(value);
    else
      entries_[{j, i}] = -value;
  }

  C value(int i, int j) const {
    check_id(i);
    check_id(j);
    if (i == j) return C{};
    if (i < j) {
      auto it = entries_.find({i, j});
      return it == entries_.end() ? C{} : it->second;
    }
    auto it = entries_.find({j, i});
    return it == entries_.end() ? C{} : -it->second;
  }

  C value(const Label& a, const Label& b) const { return value(a.id, b.id); }

 private:
  void check_id(int id) const {
    if (id < 0 || id >= alphabet_size_)
      throw std::out_of_range("CommutatorTable: generator id " + std::to_string(id) +
                              " outside declared alphabet of size " +
                              std::to_string(alphabet_size_));
  }

  int alphabet_size_ = 0;
  std::map<std::pair<int, int>, C> entries_;
};

}  // namespace gffkit::algebra
