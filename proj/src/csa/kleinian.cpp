#include "csa/kleinian.hpp"

namespace schurkit::csa {

namespace {

bool imaginary_quadratic(const FieldRef& f) {
  const auto s = cyclo::signature(f);
  return s.r1 == 0 && s.r2 == 1;
}

Tri verdict(bool b) { return b ? Tri::True : Tri::False; }

// Catalog key without the finite-ramification part.
std::string coarse_key(const SimpleComponent& c) {
  std::string k = catalog_key(c);
  return k.substr(0, k.rfind("|fin="));
}

}  // namespace

const char* tri_name(Tri t) {
  switch (t) {
    case Tri::True: return "true";
    case Tri::False: return "false";
    default: return "undetermined";
  }
}

Tri is_kleinian_csa(const SimpleComponent& c) {
  if (c.total_degree() == 1) return Tri::True;
  if (c.total_degree() > 2) return Tri::False;
  const auto sig = cyclo::signature(c.center);
  const bool split_form = sig.r1 + sig.r2 <= 1;
  if (c.kind == BodyKind::Field) return verdict(split_form);
  const bool division_form = ramification_profile(c).unramified_infinite <= 1;
  switch (c.division()) {
    case Division::Division: return verdict(division_form);
    case Division::Split: return verdict(split_form);
    default: return split_form == division_form ? verdict(split_form) : Tri::Undetermined;
  }
}

std::optional<char> kleinian_case_letter(const SimpleComponent& c) {
  if (c.total_degree() == 1) return 'a';
  if (c.total_degree() != 2) return 0;
  const auto sig = cyclo::signature(c.center);
  auto split_letter = [&]() -> char {
    if (cyclo::degree(c.center) == 1) return 'c';
    return imaginary_quadratic(c.center) ? 'd' : 0;
  };
  if (c.kind == BodyKind::Field) return split_letter();
  const long ramified = static_cast<long>(ramification_profile(c).ramified_real_places.size());
  auto division_letter = [&]() -> char {
    if (sig.r2 == 0 && ramified == sig.r1) return 'b';
    if (sig.r2 == 0 && ramified == sig.r1 - 1) return 'e';
    if (sig.r2 == 1 && ramified == sig.r1) return 'f';
    return 0;
  };
  switch (c.division()) {
    case Division::Division: return division_letter();
    case Division::Split: return split_letter();
    default: {
      char s = split_letter(), d = division_letter();
      if ((s != 0) == (d != 0)) return s ? s : d;
      return std::nullopt;
    }
  }
}

bool catalog_matches(const SimpleComponent& a, const SimpleComponent& b) {
  if (coarse_key(a) != coarse_key(b)) return false;
  auto fa = finite_ramification(a), fb = finite_ramification(b);
  return !fa || !fb || *fa == *fb;
}

SchurKleinianCase classify_schur_kleinian(const SimpleComponent& c) {
  SchurKleinianCase out;
  if (c.total_degree() != 2) return out;
  const bool rational_or_imag = cyclo::degree(c.center) == 1 || imaginary_quadratic(c.center);
  if (c.kind == BodyKind::Field) {
    if (rational_or_imag) out.value = 1;
    return out;
  }
  if (c.division() == Division::Undetermined) {
    out.undetermined = true;
    return out;
  }
  // a decided quaternion body here is a division algebra
  auto matches = [&](const CycloElement& a, const CycloElement& b) {
    return catalog_matches(c, quaternion_component(1, c.center, a, b));
  };
  const CycloElement m1 = CycloElement::rational(-1), m3 = CycloElement::rational(-3);
  if (imaginary_quadratic(c.center)) {
    const bool h = matches(m1, m1), q3 = matches(m1, m3);
    if (h && q3 && !finite_ramification(c))
      out.undetermined = true;
    else if (h)
      out.value = 2;
    else if (q3)
      out.value = 3;
    return out;
  }
  const auto sig = cyclo::signature(c.center);
  if (sig.r1 < 1 || sig.r2 > 1) return out;
  // eta_n rational for n = 3, 4, 6; other n need Q(eta_n) inside an abelian center
  std::vector<long> ns{3, 4, 6};
  if (const auto* f = std::get_if<AbelianField>(&c.center))
    for (long n = 5; n <= 2 * f->conductor() + 2; ++n)
      if (n != 6 && contains(*f, AbelianField::real_cyclotomic(n))) ns.push_back(n);
  for (long n : ns)
    if (matches(cyclo::eta_lambda(n).lambda2, m1)) {
      out.value = 4;
      return out;
    }
  return out;
}

}  // namespace schurkit::csa
