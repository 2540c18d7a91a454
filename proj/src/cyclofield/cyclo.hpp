#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "common.hpp"

namespace schurkit::cyclo {

// Element of Q(zeta_k) in the power basis 1, z, ..., z^{phi(k)-1}, reduced
// modulo the k-th cyclotomic polynomial.
class CycloElement {
 public:
  CycloElement() : CycloElement(1) {}
  explicit CycloElement(long k);  // zero
  CycloElement(long k, const mpq_class& r);

  static CycloElement zeta(long k, long power = 1);
  static CycloElement rational(const mpq_class& r) { return CycloElement(1, r); }

  long conductor() const { return k_; }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  bool is_zero() const;
  // Rational value if the element lies in Q.
  bool is_rational() const;
  mpq_class rational_value() const;

  // Same element written at conductor m (k | m).
  CycloElement lift(long m) const;
  // zeta_k -> zeta_k^a, gcd(a, k) = 1.
  CycloElement galois(long a) const;
  CycloElement inverse() const;

  CycloElement operator-() const;
  friend CycloElement operator+(const CycloElement& a, const CycloElement& b);
  friend CycloElement operator-(const CycloElement& a, const CycloElement& b);
  friend CycloElement operator*(const CycloElement& a, const CycloElement& b);
  friend CycloElement operator*(const mpq_class& r, const CycloElement& b);
  friend CycloElement operator/(const CycloElement& a, const CycloElement& b) {
    return a * b.inverse();
  }
  friend bool operator==(const CycloElement& a, const CycloElement& b);
  friend bool operator!=(const CycloElement& a, const CycloElement& b) { return !(a == b); }
  CycloElement pow(long e) const;

  // Human-readable form, e.g. "1 + z12^3" (z12 = zeta_12).
  std::string to_string() const;

 private:
  CycloElement(long k, std::vector<mpq_class> c) : k_(k), c_(std::move(c)) {}
  long k_;
  std::vector<mpq_class> c_;
};

// Integer coefficients of the k-th cyclotomic polynomial, ascending.
const std::vector<long>& cyclotomic_polynomial(long k);

// Inverse of to_string: sums of terms r, r*zk^e, zk^e with r rational.
CycloElement parse_element(const std::string& text);

// Minimal conductor of the element: smallest m with x in Q(zeta_m).
CycloElement reduce_conductor(const CycloElement& x);

// eta_n = z + z^-1 and lambda_n^2 = (z - z^-1)^2 at conductor n.
struct EtaLambda {
  CycloElement eta;
  CycloElement lambda2;
};
EtaLambda eta_lambda(long n);

// Monic minimal polynomial over Q, ascending coefficients.
std::vector<mpq_class> minimal_polynomial(const CycloElement& x);

}  // namespace schurkit::cyclo
