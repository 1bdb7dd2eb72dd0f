#pragma once

#include <complex>
#include <vector>

#include "tropspec/complex_linalg.hpp"
#include "tropspec/config.hpp"
#include "tropspec/critical_values.hpp"
#include "tropspec/tropical.hpp"

namespace tropspec {

/// First-order datum f ~ coeff * eps^exponent. An infinite exponent means
/// the function is identically zero near 0; a finite exponent with a zero
/// coefficient means the function is merely o(eps^exponent).
struct FirstOrderCoeff {
  Complex coeff{0.0, 0.0};
  TropScalar exponent = TropScalar::zero();
};

/// Perturbed matrix: entry (i,j) behaves like a_ij * eps^{A_ij}. Entries
/// with infinite exponent are identically zero (their coefficient is
/// normalized to 0); the exponent matrix must be irreducible.
class PerturbedMatrix {
 public:
  PerturbedMatrix(CMatrix coeffs, TropMatrix exponents);

  int n() const { return exponents_.n(); }
  const CMatrix& coeffs() const { return coeffs_; }
  const TropMatrix& exponents() const { return exponents_; }

 private:
  CMatrix coeffs_;
  TropMatrix exponents_;
};

/// One branch y * eps^Y; identically-zero branches carry the infinite
/// exponent and coefficient 0.
struct Branch {
  Complex coeff{0.0, 0.0};
  TropScalar exponent = TropScalar::zero();
};

/// First-order branch asymptotics of a monic polynomial family from the
/// first-order data of its coefficients (lowest degree first, length n+1).
/// Raises DegenerateError when the first-order data cannot determine the
/// branches: a vanishing coefficient at an exposed corner of the exponent
/// polynomial.
std::vector<Branch> newton_puiseux_first_order(
    const std::vector<FirstOrderCoeff>& coeffs);

struct GenericExponents {
  RootSequence roots;  // roots of the min-plus characteristic polynomial
  /// False when some order-ell critical graph lacks a disjoint circuit
  /// cover; the exponent sequence is then only an upper bound in the
  /// weak-majorization order.
  bool cover_conditions_hold = true;
};

GenericExponents generic_exponents(const PerturbedMatrix& p);

struct EigLevel {
  int level = 0;  // 1-based
  TropScalar alpha;
  bool r_invertible = false;
  bool t_invertible = false;
  /// Nonzero eigenvalues of t^ell, sorted by (modulus, phase); each stands
  /// for one eigenvalue equivalent to lambda * eps^alpha.
  std::vector<Complex> equivalents;
  int omega_count = 0;    // eigenvalues of order omega(eps^alpha)
  int small_o_count = 0;  // eigenvalues of order o(eps^alpha)
};

struct EigAsymptotics {
  CriticalDecomposition dec;
  std::vector<EigLevel> levels;
  bool all_levels_resolved = false;

  /// All equivalents across resolved levels, exponent-tagged, ordered by
  /// (exponent, modulus, phase).
  std::vector<Branch> equivalents() const;
};

/// First-order eigenvalue asymptotics via Schur complements of the
/// coefficient matrix restricted to the critical graph. Levels whose pivot
/// block r^ell is singular are flagged, not guessed.
EigAsymptotics eig_asymptotics(const PerturbedMatrix& p,
                               const Config& cfg = Config::defaults());

/// Same pipeline on a caller-chosen graph (the critical graph of the fully
/// normalized matrix, or any saturation graph sharing its strongly
/// connected components).
EigAsymptotics eig_asymptotics_with_graph(const PerturbedMatrix& p,
                                          const Digraph& g,
                                          const Config& cfg = Config::defaults());

struct EigvecAsymptotics {
  /// Solution of (mu E_N - a^Sat) w = 0, scaled so the anchor entry is 1.
  std::vector<Complex> w;
  /// Chosen tropical eigenvector of the level matrix; entry ratios follow
  /// (V_eps)_j / (V_eps)_i ~ (w_j / w_i) eps^{V_j - V_i}.
  TropVector V;
  int anchor = 0;                   // smallest index with w_i != 0
  std::vector<int> zero_positions;  // entries with no ratio information
};

/// Eigenvector asymptotics for a simple nonzero eigenvalue mu of t^ell,
/// using the canonical eigenvector choice: the star column at the critical
/// class whose block polynomial vanishes at mu.
EigvecAsymptotics eigvec_asymptotics(const PerturbedMatrix& p, int ell,
                                     Complex mu,
                                     const Config& cfg = Config::defaults());

/// Block-diagonal nilpotent Jordan structure: m_ell blocks of size q_ell,
/// q strictly decreasing.
struct NilSpec {
  std::vector<int> m;
  std::vector<int> q;

  int size() const;
  void validate() const;
  /// Start offset and size of each Jordan cell, in order.
  std::vector<std::pair<int, int>> cells() const;
};

CMatrix nil_matrix(const NilSpec& spec);
TropMatrix anil_exponents(const NilSpec& spec);
TropVector vnil(const NilSpec& spec);

/// First-order data of Nil + eps*b: exponent 0 with coefficient 1 on the
/// Jordan ones, exponent 1 with coefficient b_ij elsewhere (infinite where
/// b_ij vanishes exactly).
PerturbedMatrix nil_perturbation(const NilSpec& spec, const CMatrix& b);

/// Classical first-order theory for Nil + eps*b: the level-ell group is
/// made of all q_ell-th roots of the eigenvalues of the Schur complement
/// of Phi_{ell-1} in Phi_ell, at exponent 1/q_ell.
EigAsymptotics lidskii(const NilSpec& spec, const CMatrix& b,
                       const Config& cfg = Config::defaults());

/// Phi_ell: rows are the bottom rows, columns the first columns, of the
/// Jordan cells of the first ell block groups.
CMatrix phi_matrix(const NilSpec& spec, const CMatrix& b, int ell);

}  // namespace tropspec
