#include "csa/hilbert.hpp"

#include "common.hpp"

namespace schurkit::csa {

namespace {

// p-adic valuation and unit part of a nonzero integer.
long split_p(mpz_class& x, long p) {
  long v = 0;
  while (mpz_divisible_ui_p(x.get_mpz_t(), static_cast<unsigned long>(p))) {
    x /= p;
    ++v;
  }
  return v;
}

int legendre(const mpz_class& u, long p) {
  return mpz_kronecker_si(u.get_mpz_t(), p);
}

// mod 8 residue of an odd integer
long mod8(const mpz_class& u) { return static_cast<long>(mpz_fdiv_ui(u.get_mpz_t(), 8)); }

}  // namespace

mpz_class square_class(const mpq_class& a) {
  if (a == 0) throw Error(ErrorCode::ZeroElement, "square class of zero");
  // a = n/d has the square class of n*d
  mpz_class x = a.get_num() * a.get_den();
  mpz_class out = x < 0 ? -1 : 1;
  x = abs(x);
  for (unsigned long p = 2; p * p <= x; ++p) {
    int e = 0;
    while (mpz_divisible_ui_p(x.get_mpz_t(), p)) {
      x /= p;
      ++e;
    }
    if (e % 2) out *= p;
  }
  return out * x;
}

int hilbert_symbol_q(const mpq_class& a, const mpq_class& b, long place) {
  if (a == 0 || b == 0) throw Error(ErrorCode::ZeroElement, "Hilbert symbol of zero");
  if (place == kInfinity) return a < 0 && b < 0 ? -1 : 1;
  const long p = place;
  mpz_class u = a.get_num() * a.get_den(), v = b.get_num() * b.get_den();
  const long alpha = split_p(u, p), beta = split_p(v, p);
  if (p == 2) {
    const long ru = mod8(u), rv = mod8(v);
    auto eps = [](long r) { return ((r - 1) / 2) % 2; };
    auto omega = [](long r) { return ((r * r - 1) / 8) % 2; };
    long e = eps(ru) * eps(rv) + alpha * omega(rv) + beta * omega(ru);
    return e % 2 ? -1 : 1;
  }
  int s = (alpha * beta % 2 && (p - 1) / 2 % 2) ? -1 : 1;
  if (beta % 2) s *= legendre(u, p);
  if (alpha % 2) s *= legendre(v, p);
  return s;
}

std::vector<long> ramified_places_q(const mpq_class& a, const mpq_class& b) {
  std::vector<long> out;
  if (hilbert_symbol_q(a, b, kInfinity) < 0) out.push_back(kInfinity);
  mpz_class n = 2 * a.get_num() * a.get_den() * b.get_num() * b.get_den();
  n = abs(n);
  for (long p = 2; mpz_cmp_si(n.get_mpz_t(), 1) > 0; ++p) {
    if (!mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p))) continue;
    while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p))) n /= p;
    if (hilbert_symbol_q(a, b, p) < 0) out.push_back(p);
  }
  return out;
}

}  // namespace schurkit::csa
