#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace gffkit::corrcomb {

/*
 * Adjacent-swap identity of a generalised free field state: writing arguments
 * in display order (x_n, ..., x_1),
 *
 *   lhs = w_n(x_n,...,x_1) - w_n(... x_i, x_{i+1} ...)      (positions i, i+1 swapped)
 *   rhs = (w_2(x_{i+1}, x_i) - w_2(x_i, x_{i+1})) * w_{n-2}(remaining arguments)
 *
 * lhs == rhs for every GFF state and every adjacent pair; the rhs is the
 * 2 * antisymmetric-two-point * (n-2)-point product. Everything is expressed
 * through the state's npoint, so the identity works verbatim for exact
 * synthetic tables and for smeared numeric states.
 */
template <class State, class Arg>
struct SwapDifference {
  decltype(std::declval<State>().npoint(std::declval<std::vector<Arg>>())) lhs, rhs;
};

template <class State, class Arg>
auto swap_difference(const State& state, const std::vector<Arg>& fns, int i)
    -> SwapDifference<State, Arg> {
  const int n = int(fns.size());
  if (n < 2) throw std::invalid_argument("swap_difference: order must be at least 2");
  if (i < 1 || i >= n) throw std::invalid_argument("swap_difference: need 1 <= i < n");
  const size_t hi = size_t(n - i - 1);  // array index of x_{i+1}
  const size_t lo = size_t(n - i);      // array index of x_i

  std::vector<Arg> swapped = fns;
  std::swap(swapped[hi], swapped[lo]);

  std::vector<Arg> rest;
  rest.reserve(size_t(n) - 2);
  for (size_t d = 0; d < fns.size(); ++d)
    if (d != hi && d != lo) rest.push_back(fns[d]);

  auto lhs = state.npoint(fns) - state.npoint(swapped);
  auto comm = state.npoint({fns[hi], fns[lo]}) - state.npoint({fns[lo], fns[hi]});
  auto rhs = comm * state.npoint(rest);
  return {lhs, rhs};
}

struct GffOrderResidual {
  int order = 0;
  double worst_residual = 0.0;   // relative, scaled by max(|lhs|, |rhs|)
  int worst_i = 0;               // adjacent position of the worst case
  std::vector<int> worst_tuple;  // argument ids of the worst case
  double worst_lhs_mag = 0.0;
  double worst_rhs_mag = 0.0;
  std::uint64_t tuples_checked = 0;
};

struct GffCheckReport {
  bool pass = false;
  double tolerance = 0.0;
  int n_max = 0;
  std::vector<GffOrderResidual> per_order;  // orders 3..n_max
};

/*
 * Verdict for "is this state a generalised free field state" over a declared
 * argument set: every adjacent-swap identity for 3 <= n <= n_max must hold
 * within a relative tolerance on the sampled tuples. Tuples are exhaustive
 * when the alphabet is small enough, otherwise drawn deterministically from
 * the seed.
 */
template <class State, class Arg>
GffCheckReport is_generalised_free(const State& state, const std::vector<Arg>& test_fns,
                                   int n_max, double tol, std::uint64_t seed = 1,
                                   std::uint64_t max_tuples_per_case = 128) {
  if (test_fns.empty()) throw std::invalid_argument("is_generalised_free: empty argument set");
  if (n_max < 3) throw std::invalid_argument("is_generalised_free: n_max must be >= 3");
  const std::uint64_t a = test_fns.size();

  GffCheckReport report;
  report.tolerance = tol;
  report.n_max = n_max;
  report.pass = true;

  for (int n = 3; n <= n_max; ++n) {
    GffOrderResidual res;
    res.order = n;

    std::uint64_t total = 1;
    bool exhaustive = true;
    for (int k = 0; k < n; ++k) {
      total *= a;
      if (total > max_tuples_per_case) {
        exhaustive = false;
        break;
      }
    }

    auto check_tuple = [&](const std::vector<int>& ids) {
      std::vector<Arg> fns;
      fns.reserve(ids.size());
      for (int id : ids) fns.push_back(test_fns[size_t(id)]);
      for (int i = 1; i < n; ++i) {
        auto [lhs, rhs] = swap_difference(state, fns, i);
        double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
        double rel = std::abs(lhs - rhs) / scale;
        ++res.tuples_checked;
        if (rel > res.worst_residual) {
          res.worst_residual = rel;
          res.worst_i = i;
          res.worst_tuple = ids;
          res.worst_lhs_mag = std::abs(lhs);
          res.worst_rhs_mag = std::abs(rhs);
        }
      }
    };

    if (exhaustive) {
      std::vector<int> ids(size_t(n), 0);
      while (true) {
        check_tuple(ids);
        int k = n - 1;
        while (k >= 0 && ids[size_t(k)] == int(a) - 1) --k;
        if (k < 0) break;
        ++ids[size_t(k)];
        for (int j = k + 1; j < n; ++j) ids[size_t(j)] = 0;
      }
    } else {
      std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * std::uint64_t(n));
      std::uniform_int_distribution<int> pick(0, int(a) - 1);
      for (std::uint64_t s = 0; s < max_tuples_per_case; ++s) {
        std::vector<int> ids(size_t(n));
        for (auto& id : ids) id = pick(rng);
        check_tuple(ids);
      }
    }

    if (res.worst_residual > tol) report.pass = false;
    report.per_order.push_back(std::move(res));
  }
  return report;
}

}  // namespace gffkit::corrcomb
