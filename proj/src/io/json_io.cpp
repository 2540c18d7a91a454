#include "io/json_io.hpp"

namespace schurkit::io {

namespace {

const char* verdict_text(csa::Tri t) {
  return t == csa::Tri::True ? "yes" : t == csa::Tri::False ? "no" : "undetermined";
}

}  // namespace

json field_json(const cyclo::FieldRef& f) {
  const auto sig = cyclo::signature(f);
  return {{"spec", cyclo::field_spec(f)}, {"degree", cyclo::degree(f)}, {"r1", sig.r1}, {"r2", sig.r2}};
}

json group_json(const groups::FiniteGroup& g) {
  return {{"spec", g.spec()}, {"order", g.order()}, {"abelian", g.is_abelian()}};
}

json component_json(const csa::SimpleComponent& c) {
  json j{{"description", csa::describe(c)},
         {"matrix_size", c.matrix_size},
         {"center", cyclo::field_spec(c.center)},
         {"center_degree", cyclo::degree(c.center)},
         {"kind", csa::body_kind_name(c.kind)},
         {"body_degree", c.body_degree},
         {"division", csa::division_name(c.division())},
         {"dimension", c.dimension_over_q()},
         {"catalog_key", csa::catalog_key(c)}};
  j["symbol"] = nullptr;
  if (c.symbol) j["symbol"] = {{"a", c.symbol->a.to_string()}, {"b", c.symbol->b.to_string()}};
  if (c.kind == csa::BodyKind::Quaternion) {
    const auto prof = csa::ramification_profile(c);
    j["ramified_real_places"] = prof.ramified_real_places.size();
    j["unramified_infinite_places"] = prof.unramified_infinite;
    if (auto fin = csa::finite_ramification(c))
      j["ramified_primes"] = *fin;
    else
      j["ramified_primes"] = nullptr;
  }
  return j;
}

json components_json(const std::vector<csa::SimpleComponent>& cs) {
  json out = json::array();
  for (const auto& c : cs) out.push_back(component_json(c));
  return out;
}

json decompose_json(const groups::FiniteGroup& g, const std::vector<grpalg::WedderburnTerm>& terms,
                    const grpalg::VerifyReport* report) {
  json comps = json::array();
  long total = 0;
  for (const auto& t : terms) {
    json c = component_json(t.component);
    c["pair"] = {{"M_order", t.pair.m.order()},
                 {"L_order", t.pair.l.order()},
                 {"N_order", t.pair.n.order()},
                 {"k", t.pair.k},
                 {"generator", g.element_name(t.pair.x)}};
    total += t.component.dimension_over_q();
    comps.push_back(std::move(c));
  }
  json j{{"schema", kSchemaVersion}, {"group", group_json(g)}, {"components", comps},
         {"total_dimension", total}};
  if (report)
    j["verify"] = {{"sum_is_one", report->sum_is_one},
                   {"orthogonal", report->orthogonal},
                   {"central_idempotents", report->central_idempotents},
                   {"dimensions", report->dimensions},
                   {"total_dimension", report->total_dimension},
                   {"ok", report->ok()}};
  return j;
}

json cset_json(const cyclo::FieldRef& k, const groups::FiniteGroup& g,
               const std::vector<csa::SimpleComponent>& cs) {
  return {{"schema", kSchemaVersion}, {"group", group_json(g)}, {"field", field_json(k)},
          {"c_set", components_json(cs)}};
}

json algebra_json(const csa::SimpleComponent& c, const classify::ClassifyOptions& opt) {
  json j{{"schema", kSchemaVersion}, {"algebra", component_json(c)}};
  j["kleinian"] = verdict_text(csa::is_kleinian_csa(c));
  const auto sk = csa::classify_schur_kleinian(c);
  j["schur_kleinian_case"] = sk.value ? json(*sk.value) : json(nullptr);
  j["schur_kleinian_undetermined"] = sk.undetermined;
  const auto cls = classify::component_unit_class(c, opt);
  j["unit_class"] = classify::unit_class_name(cls.value);
  if (!cls.note.empty()) j["note"] = cls.note;
  return j;
}

json kleinian_json(const cyclo::FieldRef& k, const groups::FiniteGroup& g,
                   const classify::KleinianResult& r) {
  json w = json::array();
  for (const auto& x : r.witnesses) w.push_back({{"component", x.component}, {"reason", x.reason}});
  return {{"schema", kSchemaVersion}, {"group", group_json(g)}, {"field", field_json(k)},
          {"kleinian", verdict_text(r.verdict)}, {"witnesses", w}, {"c_set", components_json(r.components)}};
}

json unit_structure_json(const cyclo::FieldRef& k, const groups::FiniteGroup& g,
                         const classify::ClassifyOptions& opt) {
  const auto kr = classify::kg_kleinian(k, g);
  const auto v = classify::unit_group_structure(k, g, opt);
  json j = kleinian_json(k, g, kr);
  j.erase("c_set");
  j["unit_class"] = classify::verdict_name(v.strongest);
  json comps = json::array();
  for (const auto& [c, cls] : v.components) {
    json x = component_json(c);
    x["unit_class"] = classify::unit_class_name(cls);
    comps.push_back(std::move(x));
  }
  j["components"] = comps;
  j["notes"] = v.notes;
  j["conjecture_dependent"] = v.conjecture_dependent;
  j["exceptional_case"] = nullptr;
  if (kr.verdict == csa::Tri::True)
    if (auto e = classify::exceptional_cases(k, g, opt)) j["exceptional_case"] = *e;
  return j;
}

json error_json(const Error& e) {
  json j{{"schema", kSchemaVersion}, {"error", error_code_name(e.code())}, {"message", e.what()}};
  if (const auto* p = dynamic_cast<const ParseError*>(&e)) j["position"] = p->position();
  return j;
}

}  // namespace schurkit::io
