#pragma once

#include <optional>
#include <vector>

#include <gmpxx.h>

namespace schurkit {

using Matrix = std::vector<std::vector<mpq_class>>;

// Some solution of m * x = rhs, or nullopt if the system is inconsistent.
std::optional<std::vector<mpq_class>> solve(Matrix m, std::vector<mpq_class> rhs);

std::size_t rank(Matrix m);

// Rank of an integer matrix by fraction-free elimination.
std::size_t rank_bareiss(std::vector<std::vector<mpz_class>> m);

}  // namespace schurkit
