#pragma once

#include <optional>
#include <string>
#include <vector>

#include "csa/kleinian.hpp"
#include "groups/finite_group.hpp"

namespace schurkit::classify {

using csa::SimpleComponent;
using csa::Tri;

// Ordered from most to least restrictive.
enum class UnitClass { Finite, Abelian, Free, FreeByFree, Conjectural, Beyond };
const char* unit_class_name(UnitClass c);
// Name of the group-level verdict: finite, virtually_abelian, ...
const char* verdict_name(UnitClass c);

struct ClassifyOptions {
  // d < 0 for which SL2(Z[sqrt d]) is known to be virtually free-by-free
  std::vector<long> verified_d{-1, -2, -3, -7, -11};
};

struct ComponentClass {
  UnitClass value = UnitClass::Beyond;
  std::string note;  // set when the division flag left the answer open
};

ComponentClass component_unit_class(const SimpleComponent& c, const ClassifyOptions& opt = {});

struct Witness {
  std::string component;
  std::string reason;
};

struct KleinianResult {
  Tri verdict = Tri::Undetermined;
  std::vector<Witness> witnesses;  // failing or undetermined components
  std::vector<SimpleComponent> components;  // the C-set over the field
};

KleinianResult kg_kleinian(const cyclo::FieldRef& k, const groups::FiniteGroup& g);

struct UnitVerdict {
  UnitClass strongest = UnitClass::Beyond;
  std::vector<std::pair<SimpleComponent, UnitClass>> components;
  std::vector<std::string> notes;
  bool conjecture_dependent = false;
};

UnitVerdict unit_group_structure(const cyclo::FieldRef& k, const groups::FiniteGroup& g,
                                 const ClassifyOptions& opt = {});

// Which circumstance (1-4) makes KG of Kleinian type while the unit group is
// not known to be virtually a product of free-by-free groups.
std::optional<int> exceptional_cases(const cyclo::FieldRef& k, const groups::FiniteGroup& g,
                                     const ClassifyOptions& opt = {});

}  // namespace schurkit::classify
