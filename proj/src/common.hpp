#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace schurkit {

enum class ErrorCode {
  InvalidSpec,
  ParseError,
  PresentationInconsistent,
  OrderOverflow,
  SizeCapExceeded,
  NotNested,
  NotMetabelian,
  CompletenessFailure,
  NotStrongShoda,
  NotSquarefree,
  ReduciblePolynomial,
  Unsupported,
  ZeroElement,
  NotInField,
  NotQuadraticExtension,
  ActionNotOrder2,
  TwistingNotCentral,
  PreconditionViolated,
  Internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Parse errors carry the byte offset into the input string.
class ParseError : public Error {
 public:
  ParseError(std::size_t pos, const std::string& what)
      : Error(ErrorCode::ParseError, what + " at position " + std::to_string(pos)),
        pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

namespace num {

long gcd(long a, long b);
long lcm(long a, long b);
// Non-negative residue of a modulo m (m > 0).
long mod(long a, long m);
long euler_phi(long n);
long pow_mod(long base, long exp, long m);
// Inverse of a modulo m; requires gcd(a, m) == 1.
long inverse_mod(long a, long m);
// Prime factorization by trial division, ascending primes.
std::vector<std::pair<long, int>> factorize(long n);
std::vector<long> prime_divisors(long n);
std::vector<long> divisors(long n);
bool is_squarefree(long n);
// Sign-preserving squarefree part: n = squarefree_part(n) * m^2.
long squarefree_part(long n);
// Squarefree part of a nonzero rational (as an integer).
long squarefree_part(const mpq_class& q);
// Kronecker symbol (a / n) for any integer n.
int kronecker(long a, long n);

}  // namespace num

std::string to_string(const mpq_class& q);

}  // namespace schurkit
