#pragma once

#include "slocc/rational.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <vector>

namespace slocc {

// Rank by Bareiss fraction-free elimination. Rows are cleared of denominators first.
std::size_t exact_rank(const std::vector<std::vector<Rational>>& rows);

// Sparse integer row: column -> nonzero value.
using SparseRow = std::map<std::size_t, mpz_class>;

// Rank by fraction-free elimination on sparse integer rows. Each reduced row
// is divided by its content, so entries stay small.
std::size_t sparse_rank(std::vector<SparseRow> rows);

// Basis of {v : M v = 0} in reduced form: one vector per free column, with a
// 1 in that column.
std::vector<std::vector<Rational>> nullspace(const std::vector<std::vector<Rational>>& rows, std::size_t cols);

}  // namespace slocc
