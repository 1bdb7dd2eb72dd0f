#include "tropspec/tropical_poly.hpp"

#include <algorithm>

#include "tropspec/assignment.hpp"

namespace tropspec {

TropScalar trop_eval(const TropPoly& p, const TropScalar& y) {
  if (p.coeffs.empty()) return TropScalar::zero();
  if (y.is_zero()) return p.coeffs[0];  // every k >= 1 term is absorbed
  TropScalar best = TropScalar::zero();
  for (int k = 0; k < static_cast<int>(p.coeffs.size()); ++k) {
    if (p.coeffs[k].is_zero()) continue;
    best = oplus(best, TropScalar(p.coeffs[k].value() + Rational(k) * y.value()));
  }
  return best;
}

TropPoly convexify(const TropPoly& p) {
  std::vector<std::pair<int, Rational>> pts;
  for (int k = 0; k < static_cast<int>(p.coeffs.size()); ++k)
    if (p.coeffs[k].is_finite()) pts.emplace_back(k, p.coeffs[k].value());
  TropPoly out;
  out.coeffs.assign(p.coeffs.size(), TropScalar::zero());
  if (pts.empty()) return out;

  // lower hull, monotone chain over exponents
  std::vector<std::pair<int, Rational>> hull;
  for (const auto& pt : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull[hull.size() - 1];
      // keep b only if it lies strictly below chord a->pt
      Rational lhs = (b.second - a.second) * Rational(pt.first - a.first);
      Rational rhs = (pt.second - a.second) * Rational(b.first - a.first);
      if (lhs < rhs) break;
      hull.pop_back();
    }
    hull.push_back(pt);
  }

  std::size_t seg = 0;
  for (int k = pts.front().first; k <= pts.back().first; ++k) {
    while (seg + 1 < hull.size() && hull[seg + 1].first < k) ++seg;
    if (hull[seg].first == k) {
      out.coeffs[k] = TropScalar(hull[seg].second);
    } else {
      const auto& a = hull[seg];
      const auto& b = hull[seg + 1];
      Rational t = Rational(k - a.first) / Rational(b.first - a.first);
      out.coeffs[k] = TropScalar(a.second + t * (b.second - a.second));
    }
  }
  return out;
}

RootSequence trop_roots(const TropPoly& p) {
  const int n = static_cast<int>(p.coeffs.size()) - 1;
  if (n < 1) throw DimensionError("roots need degree >= 1");
  if (p.coeffs[n].is_zero()) throw Error("leading coefficient is the zero");
  TropPoly hull = convexify(p);
  RootSequence roots;
  roots.reserve(n);
  for (int i = 1; i <= n; ++i) {
    const TropScalar& hi = hull.coeffs[n - i + 1];
    const TropScalar& lo = hull.coeffs[n - i];
    roots.push_back(hi.is_zero() ? TropScalar::zero() : sub(lo, hi));
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

TropScalar assignment_value(const TropMatrix& a) {
  std::vector<std::vector<TropScalar>> cost(a.n(),
                                            std::vector<TropScalar>(a.n()));
  for (int i = 0; i < a.n(); ++i)
    for (int j = 0; j < a.n(); ++j) cost[i][j] = a.at(i, j);
  auto r = solve_assignment(cost);
  return r.feasible ? r.value : TropScalar::zero();
}

TropPoly char_poly_brute(const TropMatrix& a, int limit) {
  const int n = a.n();
  if (n > limit)
    throw DimensionError("char_poly_brute limited to n <= " +
                         std::to_string(limit));
  TropPoly p;
  p.coeffs.assign(n + 1, TropScalar::zero());
  p.coeffs[n] = TropScalar::one();
  if (n == 0) return p;

  const unsigned total = 1u << n;
  std::vector<TropScalar> traces(n + 1, TropScalar::zero());
#pragma omp parallel
  {
    std::vector<TropScalar> local(n + 1, TropScalar::zero());
#pragma omp for schedule(dynamic, 64)
    for (int mask = 1; mask < static_cast<int>(total); ++mask) {
      std::vector<int> subset;
      for (int i = 0; i < n; ++i)
        if (mask & (1 << i)) subset.push_back(i);
      TropScalar per = assignment_value(a.submatrix(subset, subset));
      int m = static_cast<int>(subset.size());
      local[m] = oplus(local[m], per);
    }
#pragma omp critical
    for (int m = 1; m <= n; ++m) traces[m] = oplus(traces[m], local[m]);
  }
  for (int m = 1; m <= n; ++m) p.coeffs[n - m] = traces[m];
  return p;
}

namespace {

std::vector<std::vector<TropScalar>> char_matrix(const TropMatrix& a,
                                                 const TropScalar& y) {
  const int n = a.n();
  std::vector<std::vector<TropScalar>> cost(n, std::vector<TropScalar>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      cost[i][j] = (i == j) ? oplus(y, a.at(i, j)) : a.at(i, j);
  return cost;
}

// One-sided slopes of y -> per(yI + A): the number of diagonal positions at
// which an optimal assignment still follows y. Lexicographic assignment,
// minimizing the count for the right slope and maximizing it for the left.
long slope_at(const TropMatrix& a, const Rational& y, bool right) {
  const int n = a.n();
  std::vector<std::vector<LexCost>> cost(n, std::vector<LexCost>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i != j) {
        cost[i][j] = {a.at(i, j), 0};
        continue;
      }
      const TropScalar& d = a.at(i, i);
      bool active = right ? (d.is_zero() || y < d.value())
                          : (d.is_zero() || y <= d.value());
      if (active) {
        cost[i][j] = {TropScalar(y), right ? 1 : -1};
      } else {
        cost[i][j] = {d, 0};
      }
    }
  auto r = solve_assignment(cost);
  if (!r.feasible) throw Error("internal: characteristic matrix infeasible");
  return right ? r.value.count : -r.value.count;
}

struct RootCollector {
  RootSequence roots;
  void emit(const Rational& y, long mult) {
    for (long i = 0; i < mult; ++i) roots.push_back(TropScalar(y));
  }
};

// Tangent-intersection recursion: p has slope s_a just right of y_a and
// slope s_b just left of y_b; all slope drops between them lie inside.
void bisect(const TropMatrix& a, const Rational& ya, const Rational& va,
            long sa, const Rational& yb, const Rational& vb, long sb,
            RootCollector& out) {
  if (sa <= sb) return;
  Rational ystar =
      ((vb - Rational(sb) * yb) - (va - Rational(sa) * ya)) /
      (Rational(sa) - Rational(sb));
  Rational tangent = va + Rational(sa) * (ystar - ya);
  Rational vstar = char_poly_eval(a, TropScalar(ystar)).value();
  if (vstar == tangent) {
    out.emit(ystar, sa - sb);
    return;
  }
  long sl = slope_at(a, ystar, /*right=*/false);
  long sr = slope_at(a, ystar, /*right=*/true);
  if (sl < sr || sl >= sa || sr <= sb)
    throw Error("internal: slope bisection invariant violated");
  bisect(a, ya, va, sa, ystar, vstar, sl, out);
  if (sl > sr) out.emit(ystar, sl - sr);
  bisect(a, ystar, vstar, sr, yb, vb, sb, out);
}

}  // namespace

TropScalar char_poly_eval(const TropMatrix& a, const TropScalar& y) {
  if (y.is_zero()) return assignment_value(a);
  auto r = solve_assignment(char_matrix(a, y));
  if (!r.feasible) throw Error("internal: characteristic matrix infeasible");
  return r.value;
}

RootSequence char_poly_roots(const TropMatrix& a) {
  const int n = a.n();
  if (n == 0) return {};

  Rational mag(1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (a.at(i, j).is_finite()) {
        Rational m = a.at(i, j).value().abs();
        if (mag < m) mag = m;
      }
  Rational bound = Rational(2 * n) * mag + Rational(1);
  Rational ylo = -bound, yhi = bound;

  Rational vlo = char_poly_eval(a, TropScalar(ylo)).value();
  Rational vhi = char_poly_eval(a, TropScalar(yhi)).value();
  long slo = slope_at(a, ylo, /*right=*/true);
  long shi = slope_at(a, yhi, /*right=*/false);
  if (slo != n) throw Error("internal: full slope expected below all entries");

  RootCollector out;
  bisect(a, ylo, vlo, slo, yhi, vhi, shi, out);
  for (long i = 0; i < shi; ++i) out.roots.push_back(TropScalar::zero());

  std::sort(out.roots.begin(), out.roots.end());
  if (static_cast<int>(out.roots.size()) != n)
    throw Error("internal: root count mismatch");
  return out.roots;
}

bool weak_majorization(const RootSequence& u, const RootSequence& v) {
  if (u.size() != v.size()) throw DimensionError("sequences differ in length");
  RootSequence us(u), vs(v);
  std::sort(us.begin(), us.end());
  std::sort(vs.begin(), vs.end());
  TropScalar pu = TropScalar::one(), pv = TropScalar::one();
  for (std::size_t k = 0; k < us.size(); ++k) {
    pu = otimes(pu, us[k]);
    pv = otimes(pv, vs[k]);
    if (pu < pv) return false;  // prefix sum fails to dominate
  }
  return true;
}

}  // namespace tropspec
