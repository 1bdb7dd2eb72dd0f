#pragma once

#include <vector>

#include "tropspec/kernels.hpp"
#include "tropspec/tropical.hpp"

namespace tropspec {

/// Graph with an arc (i,j) wherever A_ij is not the semiring zero.
Digraph graph_of(const TropMatrix& a);

/// Strongly connected components, each sorted, ordered by smallest node.
std::vector<std::vector<int>> sccs(const Digraph& g);

/// Components that are reachable from every node and have no leaving arc.
std::vector<std::vector<int>> final_classes(const Digraph& g);

bool is_irreducible(const TropMatrix& a);

/// Minimal circuit mean of an irreducible matrix (Karp's algorithm).
TropScalar min_circuit_mean(const TropMatrix& a);

/// Minimal circuit mean of an arbitrary square matrix: Karp per strongly
/// connected component; the semiring zero when the graph is acyclic.
TropScalar min_circuit_mean_any(const TropMatrix& a);

/// Entry-wise lambda otimes A (adds lambda to every entry).
TropMatrix scalar_otimes(const TropScalar& lambda, const TropMatrix& a);

/// I + A + ... + A^{n-1}. Entries would drop to -inf when a negative
/// circuit exists; that case raises DivergentStarError instead.
TropMatrix kleene_star(const TropMatrix& a);

/// Nodes lying on a circuit of minimal mean.
std::vector<int> critical_nodes(const TropMatrix& a);

/// Union of all circuits attaining the minimal circuit mean, recovered from
/// the strongly connected components of a saturation graph.
Digraph critical_graph(const TropMatrix& a);

/// Strongly connected components of the critical graph, ordered by
/// smallest node.
std::vector<std::vector<int>> critical_classes(const TropMatrix& a);

/// Arc (i,j) wherever the minimum defining (A v)_i is attained at j.
/// Every row of A v must be finite.
Digraph saturation_graph(const TropMatrix& a, const TropVector& v);

/// One generator per critical class: the column of (rho^{-1}A)* at the
/// smallest node of the class. Each returned V satisfies A V = rho V.
std::vector<TropVector> trop_eigenvectors(const TropMatrix& a);

/// Min-plus Schur complement A_NN + A_NC (lambda^{-1}A_CC)* lambda^{-1}A_CN,
/// N = complement of C in ascending order. Requires
/// rho_min(A_CC) >= lambda; an empty C returns A, a full C is an error.
TropMatrix trop_schur(const std::vector<int>& c, const TropScalar& lambda,
                      const TropMatrix& a);

}  // namespace tropspec
