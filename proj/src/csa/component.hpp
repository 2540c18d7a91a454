#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyclofield/field.hpp"
#include "grpalg/shoda.hpp"

namespace schurkit::csa {

using cyclo::AbelianField;
using cyclo::CycloElement;
using cyclo::FieldRef;

enum class Division { Division, Split, Undetermined };
const char* division_name(Division d);

// (a, b / F). For polynomial centers a and b are rational.
struct QuaternionSymbol {
  FieldRef center;
  CycloElement a;
  CycloElement b;
  Division division = Division::Undetermined;
};

enum class BodyKind { Field, Quaternion, CrossedHigher };
const char* body_kind_name(BodyKind k);

struct SimpleComponent {
  long matrix_size = 1;
  FieldRef center;
  BodyKind kind = BodyKind::Field;
  std::optional<QuaternionSymbol> symbol;  // quaternion only
  long body_degree = 1;                    // 1, 2 or the crossed-product degree

  long total_degree() const { return matrix_size * body_degree; }
  long dimension_over_q() const;
  bool commutative() const { return total_degree() == 1; }
  Division division() const;
};

struct RamificationProfile {
  std::vector<long> ramified_real_places;  // embedding representatives
  long unramified_infinite = 0;
};

// (zeta_k - zeta_k^h)^2, zeta_k^j over the fixed field of h. Rational
// entries are reduced to squarefree integers.
QuaternionSymbol quaternion_from_cyclic(long k, long h, long j);

SimpleComponent recognize_component(const grpalg::CrossedProductData& d);

// Builders for hand-made components.
SimpleComponent matrix_component(long n, FieldRef center);
SimpleComponent quaternion_component(long n, FieldRef center, CycloElement a, CycloElement b);

Division is_division(const QuaternionSymbol& q);
RamificationProfile ramification_profile(const QuaternionSymbol& q);
// Profile of the whole component (split bodies ramify nowhere).
RamificationProfile ramification_profile(const SimpleComponent& c);

// Local degree of an abelian field at a prime p, or at infinity (kInfinity).
long local_degree(const AbelianField& f, long place);

// Finite primes where the component ramifies, when it is decidable: a
// quaternion with rational a, b over an abelian center. Empty for split bodies.
std::optional<std::vector<long>> finite_ramification(const SimpleComponent& c);

// Catalog-equivalence key: center, matrix size, body kind and degree,
// ramified real places, division flag and, where decidable, finite ramification.
std::string catalog_key(const SimpleComponent& c);
bool catalog_equivalent(const SimpleComponent& a, const SimpleComponent& b);

// Same component with center extended along K (K contains the old center).
SimpleComponent extend_scalars(const SimpleComponent& c, const FieldRef& k);

std::string describe(const SimpleComponent& c);

}  // namespace schurkit::csa
