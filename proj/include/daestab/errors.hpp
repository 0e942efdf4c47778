// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace daestab {

/// Base class for every failure raised by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
  using Error::Error;
};

/// Missing or malformed model manifest / block file.
class ManifestError : public Error {
public:
  using Error::Error;
};

/// Structural or numerical singularity met during a sparse factorization.
/// `column()` is the 1-based elimination column reported by the factorization
/// (after column preordering), or -1 when unknown.
class SingularMatrix : public Error {
public:
  SingularMatrix(std::int64_t column, const std::string& msg)
      : Error(msg), column_(column) {}
  std::int64_t column() const { return column_; }

private:
  std::int64_t column_;
};

class SingularJ4 : public Error {
public:
  using Error::Error;
};

class SingularE1 : public Error {
public:
  using Error::Error;
};

class SingularPencil : public Error {
public:
  using Error::Error;
};

/// Shifted block system (alpha*E - A_f) is singular at the given shift.
class SingularAtShift : public Error {
public:
  SingularAtShift(std::complex<double> shift, const std::string& msg)
      : Error(msg), shift_(shift) {}
  std::complex<double> shift() const { return shift_; }

private:
  std::complex<double> shift_;
};

class OracleCapExceeded : public Error {
public:
  using Error::Error;
};

class UnsolvableLyapunov : public Error {
public:
  using Error::Error;
};

class NoStabilizingSolution : public Error {
public:
  using Error::Error;
};

class ConvergenceFailure : public Error {
public:
  using Error::Error;
};

/// An unstable mode cannot be moved by feedback; carries the offending eigenvalue.
class Unstabilizable : public Error {
public:
  Unstabilizable(std::complex<double> eigenvalue, const std::string& msg)
      : Error(msg), eigenvalue_(eigenvalue) {}
  std::complex<double> eigenvalue() const { return eigenvalue_; }

private:
  std::complex<double> eigenvalue_;
};

/// Finite eigenvalue within the exclusion band around the imaginary axis.
class ImaginaryAxisEigenvalue : public Error {
public:
  ImaginaryAxisEigenvalue(std::complex<double> eigenvalue, const std::string& msg)
      : Error(msg), eigenvalue_(eigenvalue) {}
  std::complex<double> eigenvalue() const { return eigenvalue_; }

private:
  std::complex<double> eigenvalue_;
};

/// Synthetic generator asked for dimensions it cannot satisfy.
class InfeasibleRequest : public Error {
public:
  using Error::Error;
};

}  // namespace daestab
