#pragma once

#include <string>
#include <vector>

#include "groups/finite_group.hpp"

namespace schurkit::groups {

enum class Family { C, D, Q, Dplus, Dminus, W, W1, W2, V, V1, V2, U1, U2, T, T1, T2, T3, S };

const char* family_name(Family f);

// Parameters of a family group. `n` is the bracketed parameter: the order for
// C, D, Q, Dplus and Dminus, the rank for the indexed families and for S.
// For S, `p` is the acting group and `q_gens` generate the index-2 subgroup.
struct GroupSpec {
  Family family = Family::C;
  long n = 0;
  GroupPtr p;
  std::vector<Elem> q_gens;
  std::string q_text;  // canonical text of q_gens, used in the spec string
};

GroupPtr build_group(const GroupSpec& spec);

// Direct product with labels namespaced f1., f2., ...
GroupPtr direct_product(const std::vector<GroupPtr>& factors);

}  // namespace schurkit::groups
