#pragma once

#include <vector>

#include "csa/component.hpp"
#include "grpalg/shoda.hpp"

namespace schurkit::grpalg {

using csa::SimpleComponent;

struct WedderburnTerm {
  StrongShodaPair pair;
  CrossedProductData data;
  SimpleComponent component;
};

// One term per primitive central idempotent, sorted by (total degree,
// dimension, catalog key). Metabelian groups only.
std::vector<WedderburnTerm> wedderburn_terms(const FiniteGroup& g);
std::vector<SimpleComponent> wedderburn(const FiniteGroup& g);

struct VerifyReport {
  bool sum_is_one = false;
  bool orthogonal = false;
  bool central_idempotents = false;
  bool dimensions = false;  // rank of {x e : x in G} equals the component dimension
  bool total_dimension = false;
  bool ok() const {
    return sum_is_one && orthogonal && central_idempotents && dimensions && total_dimension;
  }
};

// Exact checks of a decomposition. Above `size_limit` only the sum and the
// total dimension are checked; the others are reported true.
VerifyReport verify_decomposition(const FiniteGroup& g, const std::vector<WedderburnTerm>& terms,
                                  bool check_rank = true, std::size_t size_limit = 256);

// Quotient by central involutions outside G'G^2, i.e. elementary abelian
// 2-group direct factors removed. The noncommutative components are unchanged.
groups::GroupPtr strip_elementary_2_factors(const groups::GroupPtr& g);

// Noncommutative components up to catalog equivalence, ordered by key.
std::vector<SimpleComponent> c_set(const FiniteGroup& g);
std::vector<SimpleComponent> c_set_over(const cyclo::FieldRef& k, const FiniteGroup& g);
// Extension of a list of components along K.
std::vector<SimpleComponent> extend_components(const cyclo::FieldRef& k,
                                               const std::vector<SimpleComponent>& cs);

}  // namespace schurkit::grpalg
