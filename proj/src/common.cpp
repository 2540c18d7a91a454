#include "common.hpp"

#include <cstdlib>

namespace schurkit {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::PresentationInconsistent: return "PresentationInconsistent";
    case ErrorCode::OrderOverflow: return "OrderOverflow";
    case ErrorCode::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorCode::NotNested: return "NotNested";
    case ErrorCode::NotMetabelian: return "NotMetabelian";
    case ErrorCode::CompletenessFailure: return "CompletenessFailure";
    case ErrorCode::NotStrongShoda: return "NotStrongShoda";
    case ErrorCode::NotSquarefree: return "NotSquarefree";
    case ErrorCode::ReduciblePolynomial: return "ReduciblePolynomial";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::NotInField: return "NotInField";
    case ErrorCode::NotQuadraticExtension: return "NotQuadraticExtension";
    case ErrorCode::ActionNotOrder2: return "ActionNotOrder2";
    case ErrorCode::TwistingNotCentral: return "TwistingNotCentral";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

std::string to_string(const mpq_class& q) { return q.get_str(); }

namespace num {

long gcd(long a, long b) {
  a = std::labs(a);
  b = std::labs(b);
  while (b != 0) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long lcm(long a, long b) {
  if (a == 0 || b == 0) return 0;
  return std::labs(a / gcd(a, b) * b);
}

long mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

long euler_phi(long n) {
  long result = n;
  for (auto [p, e] : factorize(n)) result = result / p * (p - 1);
  return result;
}

long pow_mod(long base, long exp, long m) {
  if (m == 1) return 0;
  long result = 1;
  base = mod(base, m);
  while (exp > 0) {
    if (exp & 1) result = static_cast<long>((__int128)result * base % m);
    base = static_cast<long>((__int128)base * base % m);
    exp >>= 1;
  }
  return result;
}

long inverse_mod(long a, long m) {
  long old_r = mod(a, m), r = m;
  long old_s = 1, s = 0;
  while (r != 0) {
    long q = old_r / r;
    long t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw Error(ErrorCode::Internal, "inverse_mod: not invertible");
  return mod(old_s, m);
}

std::vector<std::pair<long, int>> factorize(long n) {
  std::vector<std::pair<long, int>> out;
  n = std::labs(n);
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<long> prime_divisors(long n) {
  std::vector<long> out;
  for (auto [p, e] : factorize(n)) out.push_back(p);
  return out;
}

std::vector<long> divisors(long n) {
  std::vector<long> out;
  n = std::labs(n);
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

bool is_squarefree(long n) {
  if (n == 0) return false;
  for (auto [p, e] : factorize(n))
    if (e > 1) return false;
  return true;
}

long squarefree_part(long n) {
  if (n == 0) throw Error(ErrorCode::ZeroElement, "squarefree part of zero");
  long result = n < 0 ? -1 : 1;
  for (auto [p, e] : factorize(n))
    if (e % 2 == 1) result *= p;
  return result;
}

long squarefree_part(const mpq_class& q) {
  if (q == 0) throw Error(ErrorCode::ZeroElement, "squarefree part of zero");
  // q = a/b ~ a*b modulo squares
  mpz_class prod = q.get_num() * q.get_den();
  if (!prod.fits_slong_p())
    throw Error(ErrorCode::Unsupported, "rational too large for squarefree extraction");
  return squarefree_part(prod.get_si());
}

namespace {

int jacobi(long a, long n) {
  // n odd positive
  a = mod(a, n);
  int result = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      long r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

}  // namespace

int kronecker(long a, long n) {
  if (n == 0) return std::labs(a) == 1 ? 1 : 0;
  int result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) result = -result;
  }
  int v = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++v;
  }
  if (v > 0) {
    if (a % 2 == 0) return 0;
    long r = mod(a, 8);
    if ((v % 2 == 1) && (r == 3 || r == 5)) result = -result;
  }
  if (n == 1) return result;
  return result * jacobi(a, n);
}

}  // namespace num
}  // namespace schurkit
