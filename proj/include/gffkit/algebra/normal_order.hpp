#pragma once

#include <utility>
#include <vector>

#include "gffkit/algebra/commutator.hpp"
#include "gffkit/algebra/element.hpp"

namespace gffkit::algebra {

/*
 * Canonical form modulo the relation  f (x) h - h (x) f = i E(f,h) I:
 * every word is rewritten into non-decreasing label order by adjacent
 * transpositions, each swap of an out-of-order pair (a, b) with a > b
 * spawning the scalar side term i E(a,b) times the word with the pair
 * removed. The side terms are central, so any swap strategy reaches the
 * same normal form; we fix rightmost-inversion-first for determinism.
 * Terminates: a swap strictly reduces the inversion count at fixed word
 * length and side terms are strictly shorter.
 */
template <class C>
Element<C> canonical_order(const Element<C>& a, const CommutatorTable<C>& table) {
  Element<C> out;
  std::vector<std::pair<Word, C>> work(a.terms().begin(), a.terms().end());
  while (!work.empty()) {
    auto [w, c] = std::move(work.back());
    work.pop_back();
    int p = -1;
    for (int q = int(w.size()) - 2; q >= 0; --q) {
      if (w[size_t(q + 1)] < w[size_t(q)]) {
        p = q;
        break;
      }
    }
    if (p < 0) {
      out.add_term(std::move(w), std::move(c));
      continue;
    }
    C e = table.value(w[size_t(p)], w[size_t(p + 1)]);
    C side = RingOps<C>::imag_unit() * e * c;
    if (!RingOps<C>::is_zero(side)) {
      Word shorter;
      shorter.reserve(w.size() - 2);
      shorter.insert(shorter.end(), w.begin(), w.begin() + p);
      shorter.insert(shorter.end(), w.begin() + p + 2, w.end());
      work.emplace_back(std::move(shorter), std::move(side));
    }
    std::swap(w[size_t(p)], w[size_t(p + 1)]);
    work.emplace_back(std::move(w), std::move(c));
  }
  return out;
}

/*
 * Power identity  Phi(f)^n Phi(h) = Phi(h) Phi(f)^n + n i E(f,h) Phi(f)^(n-1),
 * checked exactly by normal-ordering both sides. Meant to run over a symbolic
 * coefficient ring so the check is an identity in E, not a numerical test.
 */
template <class C>
bool borchers_identity_check(int n, const CommutatorTable<C>& table, int f_id = 1,
                             int h_id = 0) {
  if (n < 1) throw std::invalid_argument("borchers_identity_check: n must be >= 1");
  const auto phi_f = Element<C>::generator(f_id);
  const auto phi_h = Element<C>::generator(h_id);
  const auto lhs = phi_f.pow(n) * phi_h;
  const C coeff = RingOps<C>::from_int(n) * RingOps<C>::imag_unit() *
                  table.value(Label{f_id, false}, Label{h_id, false});
  const auto rhs = phi_h * phi_f.pow(n) + phi_f.pow(n - 1) * coeff;
  return canonical_order(lhs, table) == canonical_order(rhs, table);
}

}  // namespace gffkit::algebra
