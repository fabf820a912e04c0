#include "mintri/gf2.hpp"

namespace mintri {

namespace {

// Reduced row echelon form in place; returns the pivot column of each kept row.
std::vector<std::size_t> rref(std::vector<Bits>& rows, std::size_t columns) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < columns && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && !rows[p].test(c)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && rows[i].test(c)) rows[i] ^= rows[r];
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

}  // namespace

std::vector<Bits> nullspace(std::vector<Bits> rows, std::size_t columns) {
  const auto pivots = rref(rows, columns);
  std::vector<bool> is_pivot(columns, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Bits> basis;
  for (std::size_t c = 0; c < columns; ++c) {
    if (is_pivot[c]) continue;
    Bits v(columns);
    v.set(c);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (rows[r].test(c)) v.set(pivots[r]);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(std::vector<Bits> rows) {
  const std::size_t columns = rows.empty() ? 0 : rows.front().size();
  return rref(rows, columns).size();
}

bool column_less(const Bits& a, const Bits& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
    if (a.test(i) != b.test(i)) return b.test(i);
  return a.size() < b.size();
}

}  // namespace mintri
