#pragma once

#include <optional>

#include "csa/component.hpp"

namespace schurkit::csa {

enum class Tri { False, True, Undetermined };
const char* tri_name(Tri t);

// Field, or total degree 2 with at most one unramified infinite place.
// An undetermined division flag is resolved by evaluating both the split and
// the division form.
Tri is_kleinian_csa(const SimpleComponent& c);

// Independent implementation by the explicit list: returns the matching
// letter 'a'..'f', 0 when none matches, or nullopt when the division flag
// leaves it open.
std::optional<char> kleinian_case_letter(const SimpleComponent& c);

struct SchurKleinianCase {
  std::optional<int> value;   // 1..4
  bool undetermined = false;  // division status left the answer open
};

// Which of the four Schur algebras of Kleinian type c is, if any.
SchurKleinianCase classify_schur_kleinian(const SimpleComponent& c);

// Equivalence that treats unknown finite ramification as a wildcard.
bool catalog_matches(const SimpleComponent& a, const SimpleComponent& b);

}  // namespace schurkit::csa
