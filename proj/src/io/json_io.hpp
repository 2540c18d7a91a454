#pragma once

#include "json.hpp"

#include "classify/classify.hpp"
#include "grpalg/wedderburn.hpp"

namespace schurkit::io {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

json field_json(const cyclo::FieldRef& f);
json group_json(const groups::FiniteGroup& g);
json component_json(const csa::SimpleComponent& c);
json components_json(const std::vector<csa::SimpleComponent>& cs);

json decompose_json(const groups::FiniteGroup& g, const std::vector<grpalg::WedderburnTerm>& terms,
                    const grpalg::VerifyReport* report);
json cset_json(const cyclo::FieldRef& k, const groups::FiniteGroup& g,
               const std::vector<csa::SimpleComponent>& cs);
json algebra_json(const csa::SimpleComponent& c, const classify::ClassifyOptions& opt);
json kleinian_json(const cyclo::FieldRef& k, const groups::FiniteGroup& g,
                   const classify::KleinianResult& r);
// The unit verdict together with the Kleinian verdict and the exceptional case.
json unit_structure_json(const cyclo::FieldRef& k, const groups::FiniteGroup& g,
                         const classify::ClassifyOptions& opt);

json error_json(const Error& e);

}  // namespace schurkit::io
