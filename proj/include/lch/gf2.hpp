#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace lch {

/// A sparse F2 vector: the set of nonzero coordinates. Repeated indices
/// cancel in pairs.
using SparseRow = std::vector<std::size_t>;

/// Rank over F2 of the given rows, by Gaussian elimination on packed bit rows.
std::size_t gf2_rank(const std::vector<SparseRow>& rows, std::size_t ncols);

}  // namespace lch
