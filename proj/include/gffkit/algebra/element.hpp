#pragma once

#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "gffkit/rationals.hpp"

namespace gffkit::algebra {

/*
 * Generator label: an index into the test-function alphabet plus a flag for
 * the conjugated symbol. Conjugated labels are distinct alphabet entries for
 * ordering purposes; they coincide with the plain ones for a real alphabet.
 */
struct Label {
  int id = 0;
  bool conj = false;

  friend auto operator<=>(const Label&, const Label&) = default;
};

using Word = std::vector<Label>;

inline std::string word_str(const Word& w) {
  if (w.empty()) return "I";
  std::string s;
  for (const auto& l : w) {
    s += "F" + std::to_string(l.id);
    if (l.conj) s += "~";
  }
  return s;
}

// Ring glue: exact zero tests and conjugation for the supported coefficients.
template <class C>
struct RingOps;

template <>
struct RingOps<std::complex<double>> {
  static bool is_zero(const std::complex<double>& c) { return c == std::complex<double>{}; }
  static std::complex<double> conj(const std::complex<double>& c) { return std::conj(c); }
  static std::complex<double> one() { return {1.0, 0.0}; }
  static std::complex<double> imag_unit() { return {0.0, 1.0}; }
  static std::complex<double> from_int(int n) { return {double(n), 0.0}; }
};

template <>
struct RingOps<ComplexRational> {
  static bool is_zero(const ComplexRational& c) { return c.is_zero(); }
  static ComplexRational conj(const ComplexRational& c) { return c.conj(); }
  static ComplexRational one() { return ComplexRational(1); }
  static ComplexRational imag_unit() { return ComplexRational::i(); }
  static ComplexRational from_int(int n) { return ComplexRational(long(n)); }
};

/*
 * Finite linear combination of generator words with coefficients in C.
 * Immutable in spirit: all operations return new elements. Terms with an
 * exactly zero coefficient are never stored; numerical pruning does not
 * belong in the algebra.
 */
template <class C>
class Element {
 public:
  using coeff_type = C;

  Element() = default;

  static Element unit() { return scalar(RingOps<C>::one()); }
  static Element scalar(C c) {
    Element e;
    e.add_term(Word{}, std::move(c));
    return e;
  }
  static Element generator(int id, bool conj = false) {
    Element e;
    e.add_term(Word{Label{id, conj}}, RingOps<C>::one());
    return e;
  }
  static Element monomial(Word w, C c) {
    Element e;
    e.add_term(std::move(w), std::move(c));
    return e;
  }

  const std::map<Word, C>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  void add_term(Word w, C c) {
    if (RingOps<C>::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(std::move(w), c);
    if (!inserted) {
      it->second += c;
      if (RingOps<C>::is_zero(it->second)) terms_.erase(it);
    }
  }

  Element operator+(const Element& o) const {
    Element out = *this;
    for (const auto& [w, c] : o.terms_) out.add_term(w, c);
    return out;
  }
  Element operator-(const Element& o) const {
    Element out = *this;
    for (const auto& [w, c] : o.terms_) out.add_term(w, -c);
    return out;
  }
  Element operator-() const {
    Element out;
    for (const auto& [w, c] : terms_) out.add_term(w, -c);
    return out;
  }
  Element operator*(const Element& o) const {
    Element out;
    for (const auto& [wa, ca] : terms_) {
      for (const auto& [wb, cb] : o.terms_) {
        Word w = wa;
        w.insert(w.end(), wb.begin(), wb.end());
        out.add_term(std::move(w), ca * cb);
      }
    }
    return out;
  }
  Element operator*(const C& c) const {
    Element out;
    for (const auto& [w, coeff] : terms_) out.add_term(w, coeff * c);
    return out;
  }

  // *-operation: reverse each word, conjugate labels and coefficients.
  Element adjoint() const {
    Element out;
    for (const auto& [w, c] : terms_) {
      Word rev(w.rbegin(), w.rend());
      for (auto& l : rev) l.conj = !l.conj;
      out.add_term(std::move(rev), RingOps<C>::conj(c));
    }
    return out;
  }

  Element pow(int n) const {
    if (n < 0) throw std::invalid_argument("Element::pow: negative exponent");
    Element out = unit();
    for (int k = 0; k < n; ++k) out = out * *this;
    return out;
  }

  int max_word_length() const {
    int n = 0;
    for (const auto& [w, _] : terms_) n = std::max(n, int(w.size()));
    return n;
  }

  bool operator==(const Element& o) const { return terms_ == o.terms_; }

 private:
  std::map<Word, C> terms_;
};

template <class C>
Element<C> multiply(const Element<C>& a, const Element<C>& b) {
  return a * b;
}

template <class C>
Element<C> adjoint(const Element<C>& a) {
  return a.adjoint();
}

}  // namespace gffkit::algebra
