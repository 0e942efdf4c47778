// SPDX-License-Identifier: Apache-2.0
#include "daestab/mmio.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace daestab::mmio {

namespace {

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

}  // namespace

SpMat read_sparse(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ManifestError("cannot open matrix file: " + file.string());

  std::string line;
  if (!std::getline(in, line)) throw ManifestError("empty matrix file: " + file.string());
  std::istringstream header(lower(line));
  std::string banner, object, format, field, symmetry;
  header >> banner >> object >> format >> field >> symmetry;
  if (banner != "%%matrixmarket" || object != "matrix" || format != "coordinate" ||
      field != "real" || symmetry != "general")
    throw ManifestError("unsupported Matrix Market header in " + file.string() +
                        " (need: matrix coordinate real general)");

  while (std::getline(in, line)) {
    if (!line.empty() && line[0] != '%') break;
  }
  long rows = 0, cols = 0, nnz = 0;
  {
    std::istringstream sizes(line);
    if (!(sizes >> rows >> cols >> nnz) || rows < 0 || cols < 0 || nnz < 0)
      throw ManifestError("bad size line in " + file.string());
  }

  std::vector<Eigen::Triplet<double>> trips;
  trips.reserve(static_cast<size_t>(nnz));
  for (long k = 0; k < nnz; ++k) {
    long i = 0, j = 0;
    double v = 0.0;
    if (!(in >> i >> j >> v))
      throw ManifestError("truncated entry list in " + file.string());
    if (i < 1 || i > rows || j < 1 || j > cols)
      throw ManifestError("entry out of range in " + file.string());
    trips.emplace_back(static_cast<int>(i - 1), static_cast<int>(j - 1), v);
  }

  SpMat A(rows, cols);
  A.setFromTriplets(trips.begin(), trips.end());
  A.makeCompressed();
  return A;
}

void write_sparse(const std::filesystem::path& file, const SpMat& A) {
  std::ofstream out(file);
  if (!out) throw ManifestError("cannot write matrix file: " + file.string());
  SpMat B = A;
  B.makeCompressed();
  out << "%%MatrixMarket matrix coordinate real general\n";
  out << B.rows() << ' ' << B.cols() << ' ' << B.nonZeros() << '\n';
  char buf[64];
  for (Index j = 0; j < B.outerSize(); ++j) {
    for (SpMat::InnerIterator it(B, j); it; ++it) {
      std::snprintf(buf, sizeof(buf), "%.17g", it.value());
      out << (it.row() + 1) << ' ' << (it.col() + 1) << ' ' << buf << '\n';
    }
  }
  if (!out) throw ManifestError("write failed for " + file.string());
}

}  // namespace daestab::mmio
