#pragma once

#include <optional>
#include <vector>

#include "tropspec/tropical.hpp"

namespace tropspec {

/// Formal min-plus polynomial P = min_k (P_k + k Y), stored as the
/// coefficient vector indexed by exponent.
struct TropPoly {
  std::vector<TropScalar> coeffs;

  TropPoly() = default;
  explicit TropPoly(std::vector<TropScalar> c) : coeffs(std::move(c)) {}

  /// Largest k with a finite coefficient; nullopt for the zero polynomial.
  std::optional<int> degree() const {
    for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k)
      if (coeffs[k].is_finite()) return k;
    return std::nullopt;
  }
  /// Smallest k with a finite coefficient.
  std::optional<int> valuation() const {
    for (int k = 0; k < static_cast<int>(coeffs.size()); ++k)
      if (coeffs[k].is_finite()) return k;
    return std::nullopt;
  }

  friend bool operator==(const TropPoly& a, const TropPoly& b) {
    return a.coeffs == b.coeffs;
  }
};

/// Nondecreasing roots; semiring-zero roots, if any, sort last.
using RootSequence = std::vector<TropScalar>;

/// min_k (P_k + k y).
TropScalar trop_eval(const TropPoly& p, const TropScalar& y);

/// Coefficient-wise lower convex hull; the minimal formal polynomial with
/// the same polynomial function. Idempotent.
TropPoly convexify(const TropPoly& p);

/// Roots with multiplicities, from consecutive differences of the
/// convexified coefficients. Requires a finite leading coefficient.
RootSequence trop_roots(const TropPoly& p);

/// Min-plus permanent: value of an optimal assignment. The semiring zero
/// when no permutation avoids forbidden entries.
TropScalar assignment_value(const TropMatrix& a);

/// Characteristic polynomial by brute-force subset enumeration,
/// P_k = min over (n-k)-subsets J of per(A_JJ). Exponential; guarded by
/// the dimension limit.
TropPoly char_poly_brute(const TropMatrix& a, int limit = 12);

/// Value of the characteristic polynomial function per(y I + A) at y,
/// via one assignment solve on the matrix with diagonal min(y, A_ii).
TropScalar char_poly_eval(const TropMatrix& a, const TropScalar& y);

/// Roots of the characteristic polynomial function, recovered from O(n)
/// assignment solves by slope bisection.
RootSequence char_poly_roots(const TropMatrix& a);

/// u is weakly (super) majorized by v: every prefix sum of sorted u
/// dominates the corresponding prefix sum of sorted v (+inf dominates all).
bool weak_majorization(const RootSequence& u, const RootSequence& v);

}  // namespace tropspec
