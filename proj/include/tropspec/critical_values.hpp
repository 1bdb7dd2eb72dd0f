#pragma once

#include <vector>

#include "tropspec/tropical.hpp"
#include "tropspec/tropical_poly.hpp"

namespace tropspec {

/// The full output of the iterated normalized Schur elimination: critical
/// values alpha_1 < ... < alpha_k, the partition into critical classes,
/// the per-level diagonals, normalized matrices, Schur matrices and
/// order-ell critical graphs, and the multiplicity-expanded sequence beta.
/// All node references use the original 0-based labels.
struct CriticalDecomposition {
  int n = 0;
  int k = 0;
  std::vector<TropScalar> alphas;
  std::vector<std::vector<int>> classes;        // C_1..C_k, each sorted
  std::vector<TropVector> diag_exponents;       // D_ell, full length n
  std::vector<TropMatrix> normalized;           // A_hat_ell = D_ell^{-1} A
  std::vector<TropMatrix> schur_matrices;       // A_1..A_k
  std::vector<std::vector<int>> schur_labels;   // labels of A_ell rows/cols
  std::vector<Digraph> crit_graphs;             // G^c_ell
  RootSequence beta;

  /// C^ell = C_1 union ... union C_ell, sorted; ell = 0 gives the empty set.
  std::vector<int> cumulative(int ell) const;
  /// N^ell = complement of C^{ell-1}, sorted.
  std::vector<int> remaining(int ell) const;
};

/// Iterate A_1 = A, alpha_ell = rho_min(A_ell), C_ell = critical nodes,
/// A_{ell+1} = Schur(C_ell, alpha_ell, A_ell) until the classes cover
/// everything. Requires an irreducible matrix.
CriticalDecomposition critical_sequence(const TropMatrix& a);

/// G^c_ell, the critical graph of A_hat_ell; ell is 1-based.
const Digraph& critical_graph_order(const CriticalDecomposition& dec, int ell);

/// Whether a disjoint union of circuits of g covers every node of g;
/// decided by Hopcroft-Karp perfect matching on the bipartite arc graph.
bool disjoint_circuit_cover(const Digraph& g);

struct GammaBetaLevel {
  int level = 0;           // 1-based
  bool covers = false;     // both G^c_{ell-1} and G^c_ell have circuit covers
  bool block_equal = false;  // gamma block equals beta block, prefix included
};

struct GammaBetaReport {
  CriticalDecomposition dec;
  RootSequence gamma;        // roots of the characteristic polynomial
  std::vector<GammaBetaLevel> levels;
  bool gamma_equals_beta = false;
};

/// Per-level comparison of the characteristic-polynomial roots against the
/// critical values; the two per-level criteria are computed independently
/// and their equivalence is asserted.
GammaBetaReport gamma_equals_beta_blocks(const TropMatrix& a);

}  // namespace tropspec
