#pragma once

#include <map>
#include <vector>

#include "lgorb/scalars.hpp"

namespace lgorb {

// Sparse row over a cyclotomic field: column -> nonzero entry.
using SparseRow = std::map<int, CycScalar>;

// Rank by exact Gaussian elimination. Rows are consumed.
std::size_t rank(std::vector<SparseRow> rows);

// Dense convenience wrapper.
std::size_t rank(const std::vector<std::vector<CycScalar>>& rows);

}  // namespace lgorb
