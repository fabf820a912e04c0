#pragma once

#include <boost/dynamic_bitset.hpp>
#include <vector>

namespace mintri {

using Bits = boost::dynamic_bitset<>;

/// Basis of {x : row.x = 0 for every row}. Elimination pivots on the lowest
/// available column first; each basis vector has exactly one free column set,
/// and the vectors are returned in increasing free-column order.
std::vector<Bits> nullspace(std::vector<Bits> rows, std::size_t columns);

/// Rank of the row space.
std::size_t rank(std::vector<Bits> rows);

/// Lexicographic order with column 0 most significant.
bool column_less(const Bits& a, const Bits& b);

}  // namespace mintri
