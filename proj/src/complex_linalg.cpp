#include "tropspec/complex_linalg.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

namespace tropspec {

namespace {

Eigen::MatrixXcd to_eigen(const CMatrix& m) {
  Eigen::MatrixXcd e(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) e(i, j) = m.at(i, j);
  return e;
}

// In-place LU with partial pivoting. Returns false (instead of finishing)
// when the pivot ratio drops below tol; det sign bookkeeping included.
struct Lu {
  Eigen::MatrixXcd lu;
  std::vector<int> perm;
  int sign = 1;
  double min_pivot = 0.0, max_pivot = 0.0;

  bool factor(const CMatrix& m) {
    const int n = m.rows();
    lu = to_eigen(m);
    perm.resize(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    min_pivot = HUGE_VAL;
    max_pivot = 0.0;
    for (int k = 0; k < n; ++k) {
      int piv = k;
      double best = std::abs(lu(k, k));
      for (int i = k + 1; i < n; ++i) {
        double v = std::abs(lu(i, k));
        if (v > best) {
          best = v;
          piv = i;
        }
      }
      if (piv != k) {
        lu.row(piv).swap(lu.row(k));
        std::swap(perm[piv], perm[k]);
        sign = -sign;
      }
      min_pivot = std::min(min_pivot, best);
      max_pivot = std::max(max_pivot, best);
      if (best == 0.0) return false;
      for (int i = k + 1; i < n; ++i) {
        Complex f = lu(i, k) / lu(k, k);
        lu(i, k) = f;
        for (int j = k + 1; j < n; ++j) lu(i, j) -= f * lu(k, j);
      }
    }
    if (n == 0) min_pivot = max_pivot = 1.0;
    return true;
  }

  bool acceptable(double rel_tol) const {
    return max_pivot > 0.0 && min_pivot > rel_tol * max_pivot;
  }

  // solve L U x = P rhs, column by column
  Eigen::MatrixXcd solve(const Eigen::MatrixXcd& rhs) const {
    const int n = static_cast<int>(perm.size());
    Eigen::MatrixXcd x(n, rhs.cols());
    for (int i = 0; i < n; ++i) x.row(i) = rhs.row(perm[i]);
    for (int c = 0; c < x.cols(); ++c) {
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < i; ++k) x(i, c) -= lu(i, k) * x(k, c);
      for (int i = n - 1; i >= 0; --i) {
        for (int k = i + 1; k < n; ++k) x(i, c) -= lu(i, k) * x(k, c);
        x(i, c) /= lu(i, i);
      }
    }
    return x;
  }

  Complex det() const {
    Complex d(static_cast<double>(sign), 0.0);
    for (int i = 0; i < lu.rows(); ++i) d *= lu(i, i);
    return d;
  }
};

}  // namespace

CMatrix CMatrix::submatrix(const std::vector<int>& rows,
                           const std::vector<int>& cols) const {
  CMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      m.at(static_cast<int>(i), static_cast<int>(j)) = at(rows[i], cols[j]);
  return m;
}

double CMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

void CMatrix::check_finite() const {
  for (const auto& z : data_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw Error("matrix entry is not finite");
}

bool eigenvalue_less(const Complex& a, const Complex& b) {
  double ma = std::abs(a), mb = std::abs(b);
  if (ma != mb) return ma < mb;
  return std::arg(a) < std::arg(b);
}

CMatrix schur_complement(const std::vector<int>& c, const CMatrix& a,
                         const Config& cfg) {
  if (!a.square()) throw DimensionError("Schur complement needs a square matrix");
  a.check_finite();
  const int n = a.rows();
  std::vector<bool> in_c(n, false);
  for (int i : c) {
    if (i < 0 || i >= n) throw DimensionError("Schur index out of range");
    if (in_c[i]) throw DimensionError("Schur index repeated");
    in_c[i] = true;
  }
  if (static_cast<int>(c.size()) == n)
    throw DimensionError("Schur complement of the full index set");
  std::vector<int> cs(c), ns;
  std::sort(cs.begin(), cs.end());
  for (int i = 0; i < n; ++i)
    if (!in_c[i]) ns.push_back(i);
  if (cs.empty()) return a;

  Lu lu;
  if (!lu.factor(a.submatrix(cs, cs)) || !lu.acceptable(cfg.pivot_rel_tol))
    throw SingularBlockError("pivot block is numerically singular");

  Eigen::MatrixXcd a_nc = to_eigen(a.submatrix(ns, cs));
  Eigen::MatrixXcd a_cn = to_eigen(a.submatrix(cs, ns));
  Eigen::MatrixXcd corr = a_nc * lu.solve(a_cn);

  CMatrix out(static_cast<int>(ns.size()), static_cast<int>(ns.size()));
  for (std::size_t i = 0; i < ns.size(); ++i)
    for (std::size_t j = 0; j < ns.size(); ++j)
      out.at(static_cast<int>(i), static_cast<int>(j)) =
          a.at(ns[i], ns[j]) - corr(static_cast<int>(i), static_cast<int>(j));
  return out;
}

CVector eigenvalues(const CMatrix& m) {
  if (!m.square()) throw DimensionError("eigenvalues need a square matrix");
  if (m.rows() > 200) throw DimensionError("eigenvalue backend capped at n=200");
  m.check_finite();
  if (m.rows() == 0) return {};
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(to_eigen(m),
                                                     /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw ConvergenceError("eigenvalue iteration did not converge");
  CVector out(m.rows());
  for (int i = 0; i < m.rows(); ++i) out[i] = solver.eigenvalues()(i);
  std::sort(out.begin(), out.end(), eigenvalue_less);
  return out;
}

CVector nullspace_vector(const CMatrix& m, const Config& cfg) {
  if (!m.square()) throw DimensionError("nullspace_vector needs a square matrix");
  m.check_finite();
  const int n = m.rows();
  if (n == 0) throw DimensionError("empty matrix");
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(m), Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double smax = sv(0);
  double cutoff = cfg.nullspace_tol * smax;
  if (sv(n - 1) > cutoff)
    throw RankError("matrix has full numerical rank");
  if (n >= 2 && sv(n - 2) <= cutoff)
    throw RankError("numerical rank below n-1");
  CVector w(n);
  for (int i = 0; i < n; ++i) w[i] = svd.matrixV()(i, n - 1);
  return w;
}

CVector poly_roots(const CVector& coeffs) {
  int deg = static_cast<int>(coeffs.size()) - 1;
  if (deg < 0 || coeffs[deg] == Complex(0.0, 0.0))
    throw Error("leading coefficient must be nonzero");
  if (deg == 0) return {};
  CMatrix companion(deg, deg);
  for (int i = 1; i < deg; ++i) companion.at(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i)
    companion.at(i, deg - 1) = -coeffs[i] / coeffs[deg];
  return eigenvalues(companion);
}

double smallest_singular_value(const CMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) throw DimensionError("empty matrix");
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(m));
  return svd.singularValues()(svd.singularValues().size() - 1);
}

Complex determinant(const CMatrix& m) {
  if (!m.square()) throw DimensionError("determinant needs a square matrix");
  Lu lu;
  if (!lu.factor(m)) return Complex(0.0, 0.0);
  return lu.det();
}

CMatrix cmatmul(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("cmatmul: dimension mismatch");
  CMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      Complex aik = a.at(i, k);
      if (aik == Complex(0.0, 0.0)) continue;
      for (int j = 0; j < b.cols(); ++j) out.at(i, j) += aik * b.at(k, j);
    }
  return out;
}

}  // namespace tropspec
