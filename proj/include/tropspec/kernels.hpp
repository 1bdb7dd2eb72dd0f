#pragma once

#include "tropspec/tropical.hpp"

namespace tropspec {

/// Min-plus matrix product, C_ij = min_k (A_ik + B_kj). The unsuffixed
/// entry points run row-parallel with OpenMP once the dimension is large
/// enough to pay off; the _serial variants are the reference used by the
/// kernel tests and the benchmark.
TropMatrix trop_matmul(const TropMatrix& a, const TropMatrix& b);
TropMatrix trop_matmul_serial(const TropMatrix& a, const TropMatrix& b);

TropVector trop_matvec(const TropMatrix& a, const TropVector& v);

/// All-pairs minimal path weight over paths with at least one arc
/// (Floyd-Warshall relaxation). The caller must ensure there is no circuit
/// of negative weight.
TropMatrix trop_plus_closure(const TropMatrix& a);
TropMatrix trop_plus_closure_serial(const TropMatrix& a);

}  // namespace tropspec
