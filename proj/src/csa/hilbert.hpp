#pragma once

#include <gmpxx.h>

#include <vector>

namespace schurkit::csa {

// Place of Q: a prime, or kInfinity for the real place.
constexpr long kInfinity = 0;

// Local Hilbert symbol (a, b)_v for nonzero rationals.
int hilbert_symbol_q(const mpq_class& a, const mpq_class& b, long place);

// Places where (a, b)_v = -1; kInfinity first if present, then primes ascending.
std::vector<long> ramified_places_q(const mpq_class& a, const mpq_class& b);

// Squarefree integer in the square class of a nonzero rational.
mpz_class square_class(const mpq_class& a);

}  // namespace schurkit::csa
