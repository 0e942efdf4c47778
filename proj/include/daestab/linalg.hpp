// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <Eigen/SparseLU>

#include "daestab/errors.hpp"

namespace daestab {

using Mat    = Eigen::MatrixXd;
using CMat   = Eigen::MatrixXcd;
using Vec    = Eigen::VectorXd;
using CVec   = Eigen::VectorXcd;
using SpMat  = Eigen::SparseMatrix<double>;
using CSpMat = Eigen::SparseMatrix<std::complex<double>>;
using Cplx   = std::complex<double>;
using Index  = Eigen::Index;

namespace linalg {

namespace detail {
// Extracts the trailing elimination-column index from a factorization error
// message; -1 when none is present.
std::int64_t parse_pivot_column(const std::string& msg) noexcept;
}  // namespace detail

/// Sparse LU of a square matrix: COLAMD column preordering followed by
/// partial-pivoted elimination. Immutable after construction; a single factor
/// serves any number of concurrent solves, including transposed ones.
template <class Scalar>
class SparseLu {
public:
  using SparseType = Eigen::SparseMatrix<Scalar>;
  using DenseType  = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  explicit SparseLu(SparseType A) {
    if (A.rows() != A.cols())
      throw DimensionMismatch("sparse_lu: matrix must be square");
    n_ = A.rows();
    A.makeCompressed();
    lu_.compute(A);
    if (lu_.info() != Eigen::Success) {
      const std::string& why = lu_.lastErrorMessage();
      throw SingularMatrix(detail::parse_pivot_column(why), "sparse_lu: " + why);
    }
  }

  Index order() const { return n_; }
  const std::string& pivoting() const { return pivoting_; }

  /// Solves A x = b for one or more right-hand sides.
  DenseType solve(const DenseType& b) const {
    check_rows(b.rows());
    return lu_.solve(b);
  }

  /// Solves A^T x = b (plain transpose, no conjugation).
  DenseType solve_transpose(const DenseType& b) const {
    check_rows(b.rows());
    return lu_.transpose().solve(b);
  }

private:
  void check_rows(Index rows) const {
    if (rows != n_)
      throw DimensionMismatch("lu_solve: right-hand side has " + std::to_string(rows) +
                              " rows, matrix order is " + std::to_string(n_));
  }

  Eigen::SparseLU<SparseType, Eigen::COLAMDOrdering<int>> lu_;
  Index n_ = 0;
  std::string pivoting_ = "colamd+partial-pivot";
};

/// Orthonormal basis of the column span of `cols`. Columns whose R-diagonal
/// falls below `rank_tol` times the leading one are dropped and counted.
struct OrthBasis {
  Mat Q;
  Index rank = 0;
  Index dropped = 0;
  double rank_tol = 0.0;
};

OrthBasis qr_orth(const Mat& cols);

/// Full generalized eigensystem of the regular pencil (A, E) with invertible E.
/// values sorted ascending by (real, imag); right/left columns follow values.
/// Left vectors satisfy y^H A = lambda y^H E.
struct PencilEig {
  CVec values;
  CMat right;
  CMat left;
};

PencilEig eig_pencil_dense(const Mat& A, const Mat& E);

/// Finite eigenvalues of (A, E) where E may be singular (infinite eigenvalues
/// are filtered on the QZ beta scale). Sorted ascending by (real, imag).
CVec eig_pencil_finite(const Mat& A, const Mat& E);

/// Orthonormal basis of the right deflating subspace of (A, E) associated
/// with the finite eigenvalues in the open left half-plane.
/// Throws ImaginaryAxisEigenvalue when a finite eigenvalue lies within
/// `axis_tol` of the imaginary axis (absolute, on real parts).
struct StableSubspace {
  Mat basis;        // n x dim, orthonormal columns
  Index dim = 0;    // number of selected (stable) eigenvalues
  CVec eigenvalues; // all finite eigenvalues, selected ones first
};

StableSubspace stable_deflating_subspace(const Mat& A, const Mat& E, double axis_tol);

}  // namespace linalg
}  // namespace daestab
