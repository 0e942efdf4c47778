// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>

#include "daestab/linalg.hpp"

namespace daestab::mmio {

/// Reads a Matrix Market file (coordinate, real, general, 1-based).
SpMat read_sparse(const std::filesystem::path& file);

/// Writes `A` in coordinate real general format with 1-based indices.
/// Values are printed with 17 significant digits, so a write/read round trip
/// is bit-exact.
void write_sparse(const std::filesystem::path& file, const SpMat& A);

}  // namespace daestab::mmio
