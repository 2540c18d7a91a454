#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cyclofield/cyclo.hpp"

namespace schurkit::cyclo {

struct Signature {
  long r1 = 0;
  long r2 = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

// Fixed field Q(zeta_k)^H, H <= (Z/k)^*. Always stored with minimal
// conductor, so equal fields have equal representations. Q is k = 1, H = {1}.
class AbelianField {
 public:
  AbelianField() : k_(1), h_{1} {}
  // Closes `gens` to a subgroup of (Z/k)^* and reduces the conductor.
  AbelianField(long k, const std::vector<long>& gens);

  static AbelianField rationals() { return AbelianField(); }
  static AbelianField cyclotomic(long n) { return AbelianField(n, {1}); }
  static AbelianField real_cyclotomic(long n) { return AbelianField(n, {1, n - 1}); }
  static AbelianField quadratic(long d);
  // Q(x): the subfield generated by x.
  static AbelianField generated_by(const CycloElement& x);

  long conductor() const { return k_; }
  const std::vector<long>& subgroup() const { return h_; }
  long degree() const { return num::euler_phi(k_) / static_cast<long>(h_.size()); }
  bool totally_real() const;
  Signature signature() const;
  bool is_rational() const { return k_ == 1; }

  // H lifted to conductor m (k | m).
  std::vector<long> subgroup_at(long m) const;
  // Coset representatives of H in (Z/k)^*: one per embedding up to conjugation
  // when totally real, one per embedding otherwise.
  std::vector<long> embedding_representatives() const;

  bool contains(const CycloElement& x) const;
  // Element generating the field over Q.
  CycloElement primitive_element() const;
  // Squarefree d with field = Q(sqrt d); nullopt unless degree 2.
  std::optional<long> quadratic_d() const;

  // DSL form: Q, Q(sqrt,d), Q(zeta,n), Q(eta,n) or fixed(k;h,...).
  std::string spec() const;

  friend bool operator==(const AbelianField& a, const AbelianField& b) {
    return a.k_ == b.k_ && a.h_ == b.h_;
  }
  friend bool operator<(const AbelianField& a, const AbelianField& b) {
    return a.k_ != b.k_ ? a.k_ < b.k_ : a.h_ < b.h_;
  }

 private:
  long k_;
  std::vector<long> h_;  // sorted
};

AbelianField compositum(const AbelianField& a, const AbelianField& b);
AbelianField intersect(const AbelianField& a, const AbelianField& b);
// a contains b
bool contains(const AbelianField& a, const AbelianField& b);

// Number field given by a monic irreducible integer polynomial; only degree
// and signature are available.
class PolyField {
 public:
  explicit PolyField(std::vector<mpz_class> coeffs);  // ascending, monic
  const std::vector<mpz_class>& coeffs() const { return c_; }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  Signature signature() const;
  std::string spec() const;

 private:
  std::vector<mpz_class> c_;
  long real_roots_;
};

using FieldRef = std::variant<AbelianField, PolyField>;

// Parses the field DSL. poly(...) of degree <= 2 yields an AbelianField.
FieldRef parse_field(const std::string& text);
long degree(const FieldRef& f);
Signature signature(const FieldRef& f);
std::string field_spec(const FieldRef& f);
const AbelianField& require_abelian(const FieldRef& f, const char* what);

// Signs (+1 / -1) of x at the real embeddings of f, one per coset
// representative. x must lie in f, f totally real, x nonzero.
std::vector<int> real_embedding_signs(const CycloElement& x, const AbelianField& f);

// Checks a*X^2 + rho*Y^2 = 1 where Q(zeta_k) = f(sqrt rho) and
// rho = (zeta_m - zeta_m^h)^2 for the least m | k with zeta_m outside f.
bool verify_norm_solution(long k, const AbelianField& f, const CycloElement& a,
                          const CycloElement& x, const CycloElement& y);

// Sturm real-root count of a squarefree rational polynomial (ascending).
long count_real_roots(const std::vector<mpq_class>& poly);
// Irreducibility over Q of a monic integer polynomial. Throws Unsupported
// when undecided (degree above 6 with no irreducible reduction mod p).
bool is_irreducible(const std::vector<mpz_class>& poly);

}  // namespace schurkit::cyclo
