#include "classify/classify.hpp"

#include <algorithm>
#include <set>

#include "grpalg/wedderburn.hpp"

namespace schurkit::classify {

namespace {

using csa::BodyKind;
using csa::Division;

bool imaginary_quadratic(const cyclo::FieldRef& f) {
  const auto s = cyclo::signature(f);
  return s.r1 == 0 && s.r2 == 1;
}

std::optional<long> imaginary_d(const cyclo::FieldRef& f) {
  const auto* a = std::get_if<cyclo::AbelianField>(&f);
  if (!a || !imaginary_quadratic(f)) return std::nullopt;
  return a->quadratic_d();
}

bool totally_definite(const SimpleComponent& c) {
  const auto sig = cyclo::signature(c.center);
  return sig.r2 == 0 && sig.r1 >= 1 &&
         static_cast<long>(csa::ramification_profile(c).ramified_real_places.size()) == sig.r1;
}

UnitClass matrix2_class(const cyclo::FieldRef& center, const ClassifyOptions& opt) {
  if (cyclo::degree(center) == 1) return UnitClass::Free;
  if (auto d = imaginary_d(center)) {
    const auto& v = opt.verified_d;
    return std::find(v.begin(), v.end(), *d) != v.end() ? UnitClass::FreeByFree : UnitClass::Conjectural;
  }
  return UnitClass::Beyond;
}

// Class of c when its body is known to be a division algebra or split.
UnitClass class_assuming(const SimpleComponent& c, Division d, const ClassifyOptions& opt) {
  if (c.kind == BodyKind::Field) {
    if (c.matrix_size == 1)
      return cyclo::degree(c.center) == 1 || imaginary_quadratic(c.center) ? UnitClass::Finite
                                                                          : UnitClass::Abelian;
    return c.matrix_size == 2 ? matrix2_class(c.center, opt) : UnitClass::Beyond;
  }
  if (c.kind != BodyKind::Quaternion || c.matrix_size != 1) return UnitClass::Beyond;
  if (d == Division::Split) return matrix2_class(c.center, opt);
  if (totally_definite(c)) return cyclo::degree(c.center) == 1 ? UnitClass::Finite : UnitClass::Abelian;
  return UnitClass::Beyond;
}

bool is_hamiltonian_poly(const cyclo::FieldRef& k, const groups::FiniteGroup& g,
                         std::optional<groups::HamiltonianSplit>& split) {
  if (!std::holds_alternative<cyclo::PolyField>(k)) return false;
  split = groups::hamiltonian_split(g);
  return split.has_value();
}

// Quaternion body of type (f): division, one complex place, every real place ramified.
bool type_f(const SimpleComponent& c) {
  if (c.kind != BodyKind::Quaternion || c.matrix_size != 1 || c.division() != Division::Division)
    return false;
  const auto sig = cyclo::signature(c.center);
  return sig.r2 == 1 &&
         static_cast<long>(csa::ramification_profile(c).ramified_real_places.size()) == sig.r1;
}

}  // namespace

const char* unit_class_name(UnitClass c) {
  switch (c) {
    case UnitClass::Finite: return "finite";
    case UnitClass::Abelian: return "abelian";
    case UnitClass::Free: return "free";
    case UnitClass::FreeByFree: return "free_by_free";
    case UnitClass::Conjectural: return "conjectural";
    default: return "beyond";
  }
}

const char* verdict_name(UnitClass c) {
  switch (c) {
    case UnitClass::Finite: return "finite";
    case UnitClass::Abelian: return "virtually_abelian";
    case UnitClass::Free: return "virtually_product_of_free";
    case UnitClass::FreeByFree: return "virtually_product_of_free_by_free";
    case UnitClass::Conjectural: return "conjectural";
    default: return "beyond";
  }
}

ComponentClass component_unit_class(const SimpleComponent& c, const ClassifyOptions& opt) {
  const Division d = c.division();
  if (d != Division::Undetermined || c.kind != BodyKind::Quaternion) return {class_assuming(c, d, opt), ""};
  const UnitClass s = class_assuming(c, Division::Split, opt);
  const UnitClass v = class_assuming(c, Division::Division, opt);
  if (s == v) return {s, ""};
  return {std::max(s, v), "division status undetermined; weaker class reported"};
}

KleinianResult kg_kleinian(const cyclo::FieldRef& k, const groups::FiniteGroup& g) {
  KleinianResult r;
  if (g.is_abelian()) {
    r.verdict = Tri::True;
    return r;
  }
  std::optional<groups::HamiltonianSplit> split;
  if (is_hamiltonian_poly(k, g, split)) {
    // only H(K(zeta_n)) matters, n the exponent of the odd part; K has degree
    // at least 3 here, so K(zeta_n) with n > 1 is totally complex of degree >= 6
    const auto sig = cyclo::signature(k);
    long n = 1;
    for (groups::Elem x : split->odd_part.elements()) n = num::lcm(n, g.element_order(x));
    if (n > 1) {
      r.verdict = Tri::False;
      r.witnesses.push_back({"H(K(zeta_" + std::to_string(n) + "))",
                             "center has more than one complex place"});
      return r;
    }
    r.components.push_back(csa::quaternion_component(1, k, cyclo::CycloElement::rational(-1),
                                                     cyclo::CycloElement::rational(-1)));
    r.verdict = sig.r2 <= 1 ? Tri::True : Tri::False;
    if (r.verdict == Tri::False)
      r.witnesses.push_back({csa::describe(r.components[0]), "center has more than one complex place"});
    return r;
  }
  r.components = grpalg::c_set_over(k, g);
  bool open = false, fails = false;
  for (const auto& c : r.components) {
    const auto s = csa::classify_schur_kleinian(c);
    if (s.value) continue;
    if (s.undetermined) {
      open = true;
      r.witnesses.push_back({csa::describe(c), "division status undetermined"});
    } else {
      fails = true;
      r.witnesses.push_back({csa::describe(c), "not a Schur algebra of Kleinian type"});
    }
  }
  r.verdict = fails ? Tri::False : open ? Tri::Undetermined : Tri::True;
  return r;
}

UnitVerdict unit_group_structure(const cyclo::FieldRef& k, const groups::FiniteGroup& g,
                                 const ClassifyOptions& opt) {
  UnitVerdict v;
  const bool poly = std::holds_alternative<cyclo::PolyField>(k);
  std::vector<SimpleComponent> over_q = grpalg::wedderburn(g), extendable;
  for (auto& c : over_q) {
    // a field over Q tensored with a field of degree >= 3 stays a field of
    // degree >= 3: units virtually abelian, not finite
    if (poly && c.commutative() && cyclo::degree(c.center) > 1) {
      v.components.emplace_back(c, UnitClass::Abelian);
      v.notes.push_back(csa::describe(c) + " tensored with " + cyclo::field_spec(k) +
                        ": fields of degree >= 3");
    } else {
      extendable.push_back(std::move(c));
    }
  }
  for (auto& c : grpalg::extend_components(k, extendable)) {
    auto cc = component_unit_class(c, opt);
    if (!cc.note.empty()) v.notes.push_back(csa::describe(c) + ": " + cc.note);
    v.components.emplace_back(std::move(c), cc.value);
  }
  v.strongest = UnitClass::Finite;
  for (const auto& [c, cls] : v.components) {
    v.strongest = std::max(v.strongest, cls);
    if (cls == UnitClass::Conjectural) v.conjecture_dependent = true;
  }
  if (v.conjecture_dependent)
    v.notes.push_back("depends on SL2(Z[sqrt d]) being virtually free-by-free for an unverified d");
  return v;
}

std::optional<int> exceptional_cases(const cyclo::FieldRef& k, const groups::FiniteGroup& g,
                                     const ClassifyOptions& opt) {
  const auto kr = kg_kleinian(k, g);
  if (kr.verdict != Tri::True)
    throw Error(ErrorCode::PreconditionViolated, "KG is not known to be of Kleinian type");
  std::set<int> found;
  for (const auto& c : kr.components) {
    if (type_f(c)) {
      if (cyclo::signature(c.center).r1 >= 1) {
        found.insert(1);
      } else {
        const auto s = csa::classify_schur_kleinian(c);
        if (s.value == 2) found.insert(2);
        if (s.value == 3) found.insert(3);
      }
    }
    if (component_unit_class(c, opt).value == UnitClass::Conjectural) found.insert(4);
  }
  if (found.empty()) return std::nullopt;
  return *found.begin();
}

}  // namespace schurkit::classify
