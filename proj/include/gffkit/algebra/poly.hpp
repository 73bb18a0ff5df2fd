#pragma once

#include <map>
#include <string>

#include "gffkit/algebra/element.hpp"
#include "gffkit/rationals.hpp"

namespace gffkit::algebra {

/*
 * Sparse univariate polynomial over exact complex rationals. The single
 * indeterminate stands for a symbolic commutator value, which is all the
 * identity checks need; it is treated as a formally real symbol, so
 * conjugation acts on the coefficients only.
 */
class SymbolicPoly {
 public:
  SymbolicPoly() = default;
  SymbolicPoly(long c) { set(0, ComplexRational(c)); }
  SymbolicPoly(ComplexRational c) { set(0, std::move(c)); }

  static SymbolicPoly indeterminate() {
    SymbolicPoly p;
    p.set(1, ComplexRational(1));
    return p;
  }
  static SymbolicPoly i() { return SymbolicPoly(ComplexRational::i()); }

  bool is_zero() const { return coeffs_.empty(); }

  void set(int degree, ComplexRational c) {
    if (c.is_zero())
      coeffs_.erase(degree);
    else
      coeffs_[degree] = std::move(c);
  }

  SymbolicPoly conj() const {
    SymbolicPoly out;
    for (const auto& [d, c] : coeffs_) out.set(d, c.conj());
    return out;
  }

  SymbolicPoly operator-() const {
    SymbolicPoly out;
    for (const auto& [d, c] : coeffs_) out.set(d, -c);
    return out;
  }
  SymbolicPoly& operator+=(const SymbolicPoly& o) {
    for (const auto& [d, c] : o.coeffs_) add(d, c);
    return *this;
  }
  friend SymbolicPoly operator+(SymbolicPoly a, const SymbolicPoly& b) { return a += b; }
  friend SymbolicPoly operator-(SymbolicPoly a, const SymbolicPoly& b) { return a += -b; }
  friend SymbolicPoly operator*(const SymbolicPoly& a, const SymbolicPoly& b) {
    SymbolicPoly out;
    for (const auto& [da, ca] : a.coeffs_)
      for (const auto& [db, cb] : b.coeffs_) out.add(da + db, ca * cb);
    return out;
  }
  friend bool operator==(const SymbolicPoly& a, const SymbolicPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  std::string str() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    for (const auto& [d, c] : coeffs_) {
      if (!s.empty()) s += " + ";
      s += "(" + c.str() + ")";
      if (d > 0) s += "*e^" + std::to_string(d);
    }
    return s;
  }

 private:
  void add(int degree, const ComplexRational& c) {
    auto it = coeffs_.find(degree);
    if (it == coeffs_.end()) {
      if (!c.is_zero()) coeffs_[degree] = c;
      return;
    }
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }

  std::map<int, ComplexRational> coeffs_;
};

template <>
struct RingOps<SymbolicPoly> {
  static bool is_zero(const SymbolicPoly& c) { return c.is_zero(); }
  static SymbolicPoly conj(const SymbolicPoly& c) { return c.conj(); }
  static SymbolicPoly one() { return SymbolicPoly(1L); }
  static SymbolicPoly imag_unit() { return SymbolicPoly::i(); }
  static SymbolicPoly from_int(int n) { return SymbolicPoly(long(n)); }
};

}  // namespace gffkit::algebra
