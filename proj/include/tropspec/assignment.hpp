#pragma once

#include <limits>
#include <vector>

#include "tropspec/tropical.hpp"

namespace tropspec {

/// Cost arithmetic used by the assignment solver. A specialization needs a
/// totally ordered group with a formal +infinity absorbed by addition;
/// subtraction is only ever applied with a finite right operand.
template <class T>
struct CostTraits;

template <>
struct CostTraits<TropScalar> {
  static TropScalar zero() { return TropScalar::one(); }
  static TropScalar infinity() { return TropScalar::zero(); }
  static bool is_inf(const TropScalar& x) { return x.is_zero(); }
  static TropScalar add(const TropScalar& a, const TropScalar& b) {
    return otimes(a, b);
  }
  static TropScalar subtract(const TropScalar& a, const TropScalar& b) {
    return sub(a, b);
  }
  static bool less(const TropScalar& a, const TropScalar& b) { return a < b; }
};

template <>
struct CostTraits<double> {
  static double zero() { return 0.0; }
  static double infinity() { return std::numeric_limits<double>::infinity(); }
  static bool is_inf(double x) { return x == infinity(); }
  static double add(double a, double b) { return a + b; }
  static double subtract(double a, double b) { return a - b; }
  static bool less(double a, double b) { return a < b; }
};

/// Primary cost with a tie-breaking counter, ordered lexicographically.
struct LexCost {
  TropScalar cost;
  long count = 0;
};

template <>
struct CostTraits<LexCost> {
  static LexCost zero() { return {TropScalar::one(), 0}; }
  static LexCost infinity() { return {TropScalar::zero(), 0}; }
  static bool is_inf(const LexCost& x) { return x.cost.is_zero(); }
  static LexCost add(const LexCost& a, const LexCost& b) {
    if (is_inf(a) || is_inf(b)) return infinity();
    return {otimes(a.cost, b.cost), a.count + b.count};
  }
  static LexCost subtract(const LexCost& a, const LexCost& b) {
    if (is_inf(a)) return infinity();
    return {sub(a.cost, b.cost), a.count - b.count};
  }
  static bool less(const LexCost& a, const LexCost& b) {
    if (is_inf(a)) return false;
    if (is_inf(b)) return true;
    if (a.cost != b.cost) return a.cost < b.cost;
    return a.count < b.count;
  }
};

template <class T>
struct AssignmentResult {
  bool feasible = false;
  T value = CostTraits<T>::zero();
  std::vector<int> row_to_col;  // empty when infeasible
};

/// Minimal-cost perfect assignment on a square cost matrix; infinite entries
/// are forbidden arcs. Shortest augmenting paths with dual potentials.
template <class T>
AssignmentResult<T> solve_assignment(const std::vector<std::vector<T>>& cost) {
  using Tr = CostTraits<T>;
  const int n = static_cast<int>(cost.size());
  AssignmentResult<T> result;
  if (n == 0) {
    result.feasible = true;
    return result;
  }
  for (const auto& row : cost)
    if (static_cast<int>(row.size()) != n)
      throw DimensionError("assignment: cost matrix not square");

  // 1-indexed; p[j] = row matched to column j, column 0 is a sentinel.
  std::vector<T> u(n + 1, Tr::zero()), v(n + 1, Tr::zero());
  std::vector<int> p(n + 1, 0), way(n + 1, 0);

  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<T> minv(n + 1, Tr::infinity());
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      int i0 = p[j0], j1 = -1;
      T delta = Tr::infinity();
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        T cur = Tr::subtract(Tr::subtract(cost[i0 - 1][j - 1], u[i0]), v[j]);
        if (Tr::less(cur, minv[j])) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (Tr::less(minv[j], delta)) {
          delta = minv[j];
          j1 = j;
        }
      }
      if (j1 < 0 || Tr::is_inf(delta)) return result;  // no perfect matching
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] = Tr::add(u[p[j]], delta);
          v[j] = Tr::subtract(v[j], delta);
        } else {
          minv[j] = Tr::subtract(minv[j], delta);
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }

  result.row_to_col.assign(n, -1);
  for (int j = 1; j <= n; ++j)
    if (p[j]) result.row_to_col[p[j] - 1] = j - 1;
  T total = Tr::zero();
  for (int i = 0; i < n; ++i)
    total = Tr::add(total, cost[i][result.row_to_col[i]]);
  result.value = total;
  result.feasible = true;
  return result;
}

}  // namespace tropspec
