#include "lgorb/linalg.hpp"

#include <algorithm>

namespace lgorb {

std::size_t rank(std::vector<SparseRow> rows) {
  // pivot column -> normalized pivot row (leading entry 1)
  std::map<int, SparseRow> pivots;
  for (auto& row : rows) {
    for (auto it = row.begin(); it != row.end();) {
      if (it->second.is_zero()) it = row.erase(it);
      else ++it;
    }
    while (!row.empty()) {
      auto lead = row.begin();
      auto p = pivots.find(lead->first);
      if (p == pivots.end()) {
        CycScalar inv = lead->second.inverse();
        for (auto& [c, v] : row) v *= inv;
        const int col = lead->first;
        pivots.emplace(col, std::move(row));
        break;
      }
      CycScalar factor = lead->second;
      for (const auto& [c, v] : p->second) {
        auto [slot, fresh] = row.try_emplace(c, -(factor * v));
        if (!fresh) {
          slot->second -= factor * v;
          if (slot->second.is_zero()) row.erase(slot);
        }
      }
    }
  }
  return pivots.size();
}

std::size_t rank(const std::vector<std::vector<CycScalar>>& rows) {
  std::vector<SparseRow> sparse;
  for (const auto& r : rows) {
    SparseRow s;
    for (std::size_t c = 0; c < r.size(); ++c)
      if (!r[c].is_zero()) s.emplace(static_cast<int>(c), r[c]);
    sparse.push_back(std::move(s));
  }
  return rank(std::move(sparse));
}

}  // namespace lgorb
