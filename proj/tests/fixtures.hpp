#pragma once

// Worked examples used across the unit tests and the acceptance suite.

#include "tropspec/asymptotics.hpp"
#include "tropspec/tropical.hpp"

namespace fixtures {

using tropspec::CMatrix;
using tropspec::Complex;
using tropspec::NilSpec;
using tropspec::PerturbedMatrix;
using tropspec::Rational;
using tropspec::TropMatrix;
using tropspec::TropScalar;

inline TropScalar fin(std::int64_t num, std::int64_t den = 1) {
  return TropScalar(Rational(num, den));
}
inline TropScalar inf() { return TropScalar::zero(); }

inline TropMatrix from_rows(
    const std::vector<std::vector<TropScalar>>& rows) {
  TropMatrix a(static_cast<int>(rows.size()));
  for (int i = 0; i < a.n(); ++i)
    for (int j = 0; j < a.n(); ++j) a.at(i, j) = rows[i][j];
  return a;
}

// 3x3 cyclic example: minimal circuit mean -1/3, one critical class.
inline TropMatrix ex1_exponents() {
  return from_rows({{fin(1), fin(0), fin(4)},
                    {inf(), fin(1), fin(-2)},
                    {fin(1), fin(2), inf()}});
}

inline CMatrix ex1_coeffs() {
  CMatrix a(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a.at(i, j) = 1.0;
  return a;
}

inline PerturbedMatrix ex1_perturbed() {
  return PerturbedMatrix(ex1_coeffs(), ex1_exponents());
}

// 4x4 example with three critical values 0, 2, 4.
inline TropMatrix ex_critic_exponents() {
  return from_rows({{inf(), fin(0), inf(), inf()},
                    {fin(0), inf(), fin(1), inf()},
                    {fin(1), inf(), inf(), fin(2)},
                    {inf(), inf(), fin(4), fin(5)}});
}

// Coefficients of the sparse 4-node perturbation sharing that exponent
// matrix; zero entries of the exponent pattern stay identically zero.
inline PerturbedMatrix four_node_perturbed(const CMatrix& coeff) {
  CMatrix a(4, 4);
  a.at(0, 1) = coeff.at(0, 1);
  a.at(1, 0) = coeff.at(1, 0);
  a.at(1, 2) = coeff.at(1, 2);
  a.at(2, 0) = coeff.at(2, 0);
  a.at(2, 3) = coeff.at(2, 3);
  a.at(3, 2) = coeff.at(3, 2);
  a.at(3, 3) = coeff.at(3, 3);
  return PerturbedMatrix(a, ex_critic_exponents());
}

// 3x3 example with two critical classes and a canonical eigenvector choice.
inline TropMatrix ex_canonical_exponents() {
  return from_rows({{fin(0), fin(1), fin(3)},
                    {fin(1), fin(2), inf()},
                    {fin(3), inf(), fin(2)}});
}

inline CMatrix ex_canonical_coeffs() {
  CMatrix a(3, 3);
  a.at(0, 0) = 1.0;
  a.at(0, 1) = 1.0;
  a.at(0, 2) = 1.0;
  a.at(1, 0) = -2.0;
  a.at(1, 1) = 1.0;
  a.at(2, 0) = 1.0;
  a.at(2, 2) = 2.0;
  return a;
}

inline PerturbedMatrix ex_canonical_perturbed() {
  return PerturbedMatrix(ex_canonical_coeffs(), ex_canonical_exponents());
}

// Degenerate 5x5 Jordan perturbation: two blocks of sizes 3 and 2, the
// classical pivot entry b_31 forced to zero.
inline NilSpec wilkinson_spec() { return NilSpec{{1, 1}, {3, 2}}; }

// 9x9 structure whose last critical graph has no disjoint circuit cover:
// blocks (3,3,2,1) with b_61 = b_64 = 0.
inline NilSpec nine_spec() { return NilSpec{{2, 1, 1}, {3, 2, 1}}; }

// 7x7 permuted two-group structure; entries are the only nonzero positions.
inline PerturbedMatrix seven_node_perturbed(const CMatrix& b) {
  const int n = 7;
  CMatrix a(n, n);
  TropMatrix expo(n);
  auto put = [&](int i, int j, Complex c, const TropScalar& e) {
    a.at(i, j) = c;
    expo.at(i, j) = e;
  };
  put(0, 1, 1.0, fin(0));
  put(1, 2, b.at(1, 2), fin(1));
  put(2, 0, b.at(2, 0), fin(1));
  put(2, 3, b.at(2, 3), fin(1));
  put(3, 4, 1.0, fin(0));
  put(4, 5, b.at(4, 5), fin(1));
  put(5, 6, b.at(5, 6), fin(1));
  put(6, 0, b.at(6, 0), fin(1));
  put(6, 3, b.at(6, 3), fin(1));
  return PerturbedMatrix(a, expo);
}

}  // namespace fixtures
