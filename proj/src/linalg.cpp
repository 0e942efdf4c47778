// SPDX-License-Identifier: Apache-2.0
#include "daestab/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <vector>

// Eigen has no generalized eigensolver returning left eigenvectors, and no
// reordered QZ at all, so those two kernels go straight to LAPACK.
extern "C" {
void dggev_(const char* jobvl, const char* jobvr, const int* n, double* a, const int* lda,
            double* b, const int* ldb, double* alphar, double* alphai, double* beta,
            double* vl, const int* ldvl, double* vr, const int* ldvr, double* work,
            const int* lwork, int* info);
void dgges_(const char* jobvsl, const char* jobvsr, const char* sort,
            int (*selctg)(const double*, const double*, const double*), const int* n,
            double* a, const int* lda, double* b, const int* ldb, int* sdim, double* alphar,
            double* alphai, double* beta, double* vsl, const int* ldvsl, double* vsr,
            const int* ldvsr, double* work, const int* lwork, int* bwork, int* info);
void dtgsen_(const int* ijob, const int* wantq, const int* wantz, const int* select,
             const int* n, double* a, const int* lda, double* b, const int* ldb,
             double* alphar, double* alphai, double* beta, double* q, const int* ldq,
             double* z, const int* ldz, int* m, double* pl, double* pr, double* dif,
             double* work, const int* lwork, int* iwork, const int* liwork, int* info);
}

namespace daestab::linalg {

namespace detail {

std::int64_t parse_pivot_column(const std::string& msg) noexcept {
  auto end = msg.find_last_of("0123456789");
  if (end == std::string::npos) return -1;
  auto begin = end;
  while (begin > 0 && std::isdigit(static_cast<unsigned char>(msg[begin - 1]))) --begin;
  try {
    return std::stoll(msg.substr(begin, end - begin + 1));
  } catch (...) {
    return -1;
  }
}

}  // namespace detail

namespace {

constexpr double kRankTol = 1e-12;
// An eigenvalue counts as infinite when its QZ beta is below this fraction of
// the largest beta in the pencil.
constexpr double kFiniteBetaTol = 1e-8;

bool lex_less(const Cplx& a, const Cplx& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

void check_pencil_dims(const Mat& A, const Mat& E, const char* who) {
  if (A.rows() != A.cols() || E.rows() != E.cols() || A.rows() != E.rows())
    throw DimensionMismatch(std::string(who) + ": A and E must be square with equal order");
}

struct QzRaw {
  std::vector<double> alphar, alphai, beta;
};

}  // namespace

OrthBasis qr_orth(const Mat& cols) {
  if (cols.rows() < cols.cols())
    throw DimensionMismatch("qr_orth: need at least as many rows as columns");
  OrthBasis out;
  out.rank_tol = kRankTol;
  if (cols.cols() == 0) {
    out.Q = Mat(cols.rows(), 0);
    return out;
  }
  Eigen::ColPivHouseholderQR<Mat> qr(cols);
  const Mat& qrm = qr.matrixQR();
  const double lead = std::abs(qrm(0, 0));
  Index rank = 0;
  while (rank < cols.cols() && std::abs(qrm(rank, rank)) > kRankTol * lead) ++rank;
  out.Q = qr.householderQ() * Mat::Identity(cols.rows(), rank);
  out.rank = rank;
  out.dropped = cols.cols() - rank;
  return out;
}

PencilEig eig_pencil_dense(const Mat& A, const Mat& E) {
  check_pencil_dims(A, E, "eig_pencil_dense");
  const int n = static_cast<int>(A.rows());
  PencilEig out;
  if (n == 0) return out;

  {
    Eigen::PartialPivLU<Mat> elu(E);
    if (!(elu.rcond() > 1e-14))
      throw SingularPencil("eig_pencil_dense: E is numerically singular");
  }

  Mat a = A, b = E, vl(n, n), vr(n, n);
  QzRaw w{std::vector<double>(n), std::vector<double>(n), std::vector<double>(n)};
  int info = 0, lwork = -1;
  double work_query = 0.0;
  dggev_("V", "V", &n, a.data(), &n, b.data(), &n, w.alphar.data(), w.alphai.data(),
         w.beta.data(), vl.data(), &n, vr.data(), &n, &work_query, &lwork, &info);
  lwork = static_cast<int>(work_query);
  std::vector<double> work(static_cast<size_t>(lwork));
  dggev_("V", "V", &n, a.data(), &n, b.data(), &n, w.alphar.data(), w.alphai.data(),
         w.beta.data(), vl.data(), &n, vr.data(), &n, work.data(), &lwork, &info);
  if (info != 0)
    throw SingularPencil("eig_pencil_dense: dggev failed with info=" + std::to_string(info));

  CVec vals(n);
  CMat right(n, n), left(n, n);
  for (int j = 0; j < n;) {
    if (w.beta[j] == 0.0)
      throw SingularPencil("eig_pencil_dense: infinite eigenvalue met with invertible E");
    if (w.alphai[j] == 0.0) {
      vals(j) = Cplx(w.alphar[j] / w.beta[j], 0.0);
      right.col(j) = vr.col(j).cast<Cplx>();
      left.col(j) = vl.col(j).cast<Cplx>();
      ++j;
    } else {
      const Cplx lam(w.alphar[j] / w.beta[j], w.alphai[j] / w.beta[j]);
      vals(j) = lam;
      vals(j + 1) = std::conj(lam);
      right.col(j) = vr.col(j).cast<Cplx>() + Cplx(0, 1) * vr.col(j + 1).cast<Cplx>();
      right.col(j + 1) = right.col(j).conjugate();
      left.col(j) = vl.col(j).cast<Cplx>() + Cplx(0, 1) * vl.col(j + 1).cast<Cplx>();
      left.col(j + 1) = left.col(j).conjugate();
      j += 2;
    }
  }

  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return lex_less(vals(i), vals(j)); });
  out.values = CVec(n);
  out.right = CMat(n, n);
  out.left = CMat(n, n);
  for (int k = 0; k < n; ++k) {
    out.values(k) = vals(order[k]);
    out.right.col(k) = right.col(order[k]);
    out.left.col(k) = left.col(order[k]);
  }
  return out;
}

CVec eig_pencil_finite(const Mat& A, const Mat& E) {
  check_pencil_dims(A, E, "eig_pencil_finite");
  const int n = static_cast<int>(A.rows());
  if (n == 0) return CVec(0);

  Mat a = A, b = E;
  QzRaw w{std::vector<double>(n), std::vector<double>(n), std::vector<double>(n)};
  int info = 0, lwork = -1;
  double work_query = 0.0, vdummy = 0.0;
  const int one = 1;
  dggev_("N", "N", &n, a.data(), &n, b.data(), &n, w.alphar.data(), w.alphai.data(),
         w.beta.data(), &vdummy, &one, &vdummy, &one, &work_query, &lwork, &info);
  lwork = static_cast<int>(work_query);
  std::vector<double> work(static_cast<size_t>(lwork));
  dggev_("N", "N", &n, a.data(), &n, b.data(), &n, w.alphar.data(), w.alphai.data(),
         w.beta.data(), &vdummy, &one, &vdummy, &one, work.data(), &lwork, &info);
  if (info != 0)
    throw SingularPencil("eig_pencil_finite: dggev failed with info=" + std::to_string(info));

  double beta_max = 0.0;
  for (int j = 0; j < n; ++j) beta_max = std::max(beta_max, std::abs(w.beta[j]));
  if (beta_max == 0.0) throw SingularPencil("eig_pencil_finite: singular pencil");

  std::vector<Cplx> finite;
  finite.reserve(static_cast<size_t>(n));
  for (int j = 0; j < n;) {
    const bool is_finite = std::abs(w.beta[j]) > kFiniteBetaTol * beta_max;
    if (w.alphai[j] == 0.0) {
      if (is_finite) finite.emplace_back(w.alphar[j] / w.beta[j], 0.0);
      ++j;
    } else {
      if (is_finite) {
        const Cplx lam(w.alphar[j] / w.beta[j], w.alphai[j] / w.beta[j]);
        finite.push_back(lam);
        finite.push_back(std::conj(lam));
      }
      j += 2;
    }
  }
  std::sort(finite.begin(), finite.end(), lex_less);
  return Eigen::Map<const CVec>(finite.data(), static_cast<Index>(finite.size()));
}

StableSubspace stable_deflating_subspace(const Mat& A, const Mat& E, double axis_tol) {
  check_pencil_dims(A, E, "stable_deflating_subspace");
  const int n = static_cast<int>(A.rows());
  StableSubspace out;
  if (n == 0) return out;

  Mat s = A, t = E, z(n, n);
  QzRaw w{std::vector<double>(n), std::vector<double>(n), std::vector<double>(n)};
  std::vector<int> bwork(static_cast<size_t>(n));
  int info = 0, sdim = 0, lwork = -1;
  const int one = 1;
  double work_query = 0.0, vsl_dummy = 0.0;
  dgges_("N", "V", "N", nullptr, &n, s.data(), &n, t.data(), &n, &sdim, w.alphar.data(),
         w.alphai.data(), w.beta.data(), &vsl_dummy, &one, z.data(), &n, &work_query, &lwork,
         bwork.data(), &info);
  lwork = static_cast<int>(work_query);
  std::vector<double> work(static_cast<size_t>(lwork));
  dgges_("N", "V", "N", nullptr, &n, s.data(), &n, t.data(), &n, &sdim, w.alphar.data(),
         w.alphai.data(), w.beta.data(), &vsl_dummy, &one, z.data(), &n, work.data(), &lwork,
         bwork.data(), &info);
  if (info != 0)
    throw SingularPencil("stable_deflating_subspace: dgges failed with info=" +
                         std::to_string(info));

  double beta_max = 0.0;
  for (int j = 0; j < n; ++j) beta_max = std::max(beta_max, std::abs(w.beta[j]));
  if (beta_max == 0.0) throw SingularPencil("stable_deflating_subspace: singular pencil");

  std::vector<int> select(static_cast<size_t>(n), 0);
  for (int j = 0; j < n; ++j) {
    if (std::abs(w.beta[j]) <= kFiniteBetaTol * beta_max) continue;  // infinite: skip
    const double re = w.alphar[j] / w.beta[j];
    if (std::abs(re) < axis_tol) {
      const double im = w.alphai[j] / w.beta[j];
      throw ImaginaryAxisEigenvalue(
          Cplx(re, im), "finite eigenvalue within " + std::to_string(axis_tol) +
                            " of the imaginary axis");
    }
    select[static_cast<size_t>(j)] = re < 0.0 ? 1 : 0;
  }

  const int ijob = 0, wantq = 0, wantz = 1;
  int m = 0, liwork = -1;
  double pl = 0.0, pr = 0.0, dif[2] = {0.0, 0.0}, q_dummy = 0.0;
  int iwork_query = 0;
  lwork = -1;
  dtgsen_(&ijob, &wantq, &wantz, select.data(), &n, s.data(), &n, t.data(), &n,
          w.alphar.data(), w.alphai.data(), w.beta.data(), &q_dummy, &one, z.data(), &n, &m,
          &pl, &pr, dif, &work_query, &lwork, &iwork_query, &liwork, &info);
  lwork = static_cast<int>(work_query);
  liwork = iwork_query;
  work.assign(static_cast<size_t>(lwork), 0.0);
  std::vector<int> iwork(static_cast<size_t>(std::max(liwork, 1)));
  dtgsen_(&ijob, &wantq, &wantz, select.data(), &n, s.data(), &n, t.data(), &n,
          w.alphar.data(), w.alphai.data(), w.beta.data(), &q_dummy, &one, z.data(), &n, &m,
          &pl, &pr, dif, work.data(), &lwork, iwork.data(), &liwork, &info);
  if (info != 0)
    throw SingularPencil("stable_deflating_subspace: dtgsen failed with info=" +
                         std::to_string(info));

  out.basis = z.leftCols(m);
  out.dim = m;
  std::vector<Cplx> finite;
  finite.reserve(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    if (std::abs(w.beta[j]) <= kFiniteBetaTol * beta_max) continue;
    finite.emplace_back(w.alphar[j] / w.beta[j], w.alphai[j] / w.beta[j]);
  }
  out.eigenvalues = Eigen::Map<const CVec>(finite.data(), static_cast<Index>(finite.size()));
  return out;
}

}  // namespace daestab::linalg
