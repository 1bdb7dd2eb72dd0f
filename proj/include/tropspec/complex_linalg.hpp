#pragma once

#include <complex>
#include <vector>

#include "tropspec/config.hpp"
#include "tropspec/errors.hpp"

namespace tropspec {

using Complex = std::complex<double>;

/// Dense complex matrix, row-major. Entries must be finite.
class CMatrix {
 public:
  CMatrix() : rows_(0), cols_(0) {}
  CMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Complex(0.0, 0.0)) {
    if (rows < 0 || cols < 0) throw DimensionError("negative dimension");
  }

  static CMatrix identity(int n) {
    CMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Complex& at(int i, int j) { return data_[i * cols_ + j]; }
  const Complex& at(int i, int j) const { return data_[i * cols_ + j]; }

  CMatrix submatrix(const std::vector<int>& rows,
                    const std::vector<int>& cols) const;

  double frobenius_norm() const;

  /// Throws unless every entry is finite.
  void check_finite() const;

  friend bool operator==(const CMatrix& a, const CMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  int rows_, cols_;
  std::vector<Complex> data_;
};

using CVector = std::vector<Complex>;

/// a_NN - a_NC a_CC^{-1} a_CN with N the ascending complement of C.
/// The pivot block is "invertible" when its smallest LU pivot magnitude
/// exceeds pivot_rel_tol times the largest; otherwise SingularBlockError.
CMatrix schur_complement(const std::vector<int>& c, const CMatrix& a,
                         const Config& cfg = Config::defaults());

/// All eigenvalues with multiplicity, sorted by (modulus, phase).
/// Dense complex Schur factorization; dimension capped at 200.
CVector eigenvalues(const CMatrix& m);

/// Unit-norm vector spanning the nullspace of a matrix of numerical rank
/// n-1 (by SVD). RankError when the rank is not n-1.
CVector nullspace_vector(const CMatrix& m, const Config& cfg = Config::defaults());

struct RankError : Error {
  explicit RankError(const std::string& what) : Error(what) {}
};

/// Roots of sum_k coeffs[k] z^k via companion-matrix eigenvalues.
/// The leading coefficient must be nonzero.
CVector poly_roots(const CVector& coeffs);

Complex determinant(const CMatrix& m);

double smallest_singular_value(const CMatrix& m);

CMatrix cmatmul(const CMatrix& a, const CMatrix& b);

/// Deterministic eigenvalue order used throughout: modulus, then phase.
bool eigenvalue_less(const Complex& a, const Complex& b);

}  // namespace tropspec
