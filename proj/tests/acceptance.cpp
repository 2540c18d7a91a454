// Exit gate: one line per acceptance criterion, nonzero exit if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "classify/classify.hpp"
#include "csa/hilbert.hpp"
#include "cyclofield/field.hpp"
#include "groups/dsl.hpp"
#include "grpalg/wedderburn.hpp"
#include "verify/suite.hpp"

using namespace schurkit;
using classify::UnitClass;
using csa::SimpleComponent;
using cyclo::AbelianField;
using cyclo::CycloElement;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back(what);
    }
  }
};

CycloElement q(long v) { return CycloElement::rational(v); }
AbelianField quad(long d) { return d == 1 ? AbelianField() : AbelianField::quadratic(d); }
SimpleComponent field_c(long d) { return csa::matrix_component(1, quad(d)); }
SimpleComponent m2(long d) { return csa::matrix_component(2, quad(d)); }
SimpleComponent ham(long d) { return csa::quaternion_component(1, quad(d), q(-1), q(-1)); }
SimpleComponent quat(const cyclo::FieldRef& f, CycloElement a, CycloElement b) {
  return csa::quaternion_component(1, f, std::move(a), std::move(b));
}

std::string described(const std::vector<SimpleComponent>& cs) {
  std::string out;
  for (const auto& c : cs) out += (out.empty() ? "" : ", ") + csa::describe(c);
  return "{" + out + "}";
}

// Multiset equality up to catalog matching.
bool same_multiset(std::vector<SimpleComponent> got, const std::vector<SimpleComponent>& want) {
  if (got.size() != want.size()) return false;
  for (const auto& w : want) {
    auto it = std::find_if(got.begin(), got.end(), [&](const auto& g) { return csa::catalog_matches(g, w); });
    if (it == got.end()) return false;
    got.erase(it);
  }
  return true;
}

bool inside(const std::vector<SimpleComponent>& xs, const std::vector<SimpleComponent>& ys) {
  return std::all_of(xs.begin(), xs.end(), [&](const auto& x) {
    return std::any_of(ys.begin(), ys.end(), [&](const auto& y) { return csa::catalog_matches(x, y); });
  });
}

bool same_set(const std::vector<SimpleComponent>& a, const std::vector<SimpleComponent>& b) {
  return a.size() == b.size() && inside(a, b) && inside(b, a);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

cyclo::FieldRef fld(const char* s) { return cyclo::parse_field(s); }
groups::GroupPtr grp(const std::string& s) { return groups::parse_group(s); }

Outcome wedderburn_fixtures() {
  Outcome o;
  auto check = [&](const char* spec, const std::vector<SimpleComponent>& want) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto got = grpalg::wedderburn(*grp(spec));
    const double s = seconds_since(t0);
    o.expect(same_multiset(got, want), std::string(spec) + ": got " + described(got));
    o.expect(s < 10.0, std::string(spec) + ": took " + std::to_string(s) + " s");
  };
  check("Dminus[16]", {field_c(1), field_c(1), field_c(1), field_c(1), m2(1), m2(-2)});
  check("Dplus[16]", {field_c(1), field_c(1), field_c(1), field_c(1), field_c(-1), field_c(-1), m2(-1)});
  return o;
}

Outcome cset_fixtures() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  auto exact = [&](const std::string& g, const std::vector<SimpleComponent>& want) {
    const auto got = grpalg::c_set(*grp(g));
    o.expect(same_set(got, want), g + ": got " + described(got) + ", reference list " + described(want));
  };
  auto bounded = [&](const std::string& g, const std::vector<SimpleComponent>& bound) {
    const auto got = grpalg::c_set(*grp(g));
    o.expect(inside(got, bound), g + ": got " + described(got) + " outside " + described(bound));
  };
  for (const char* g : {"W1[1]", "W1[2]"}) exact(g, {m2(1)});
  for (const char* g : {"W", "W2[1]", "W2[2]"}) exact(g, {m2(1), ham(1)});
  for (const char* g : {"V", "V1[1]", "V1[2]", "V2[1]", "V2[2]", "U1", "U2", "T1[1]", "T1[2]"})
    bounded(g, {m2(1), ham(1), m2(-1)});
  for (const char* g : {"T", "T2[1]", "T2[2]", "T3[1]", "T3[2]"})
    bounded(g, {m2(1), ham(1), m2(-1), ham(2), m2(-2)});
  const AbelianField Q;
  const auto q13 = quat(Q, q(-1), q(-3));
  exact("S[1,C[2],1]", {m2(1)});
  exact("S[1,C[4],C[2]]", {m2(1), q13});
  exact("S[1,C[8],C[4]]", {m2(1), q13, m2(-1)});
  exact("S[1,W1[1],y1,t1,x^2]", {m2(1), q13, m2(-3)});
  // the reference list verbatim
  exact("S[1,W2[1],y1^2,x]", {m2(1), ham(3), m2(-1), m2(-3)});
  exact("T2[1]", {ham(1), m2(1), m2(-2)});
  const double s = seconds_since(t0);
  o.expect(s < 180.0, "took " + std::to_string(s) + " s");
  return o;
}

Outcome idempotent_suite() {
  Outcome o;
  long n = 0;
  for (const auto& c : verify::run("grpalg", true)) {
    o.expect(c.pass, c.name + ":" + c.detail);
    ++n;
  }
  o.expect(n > 0, "no instances checked");
  return o;
}

Outcome quaternion_grid() {
  Outcome o;
  auto is_div = [](const SimpleComponent& c) {
    return c.kind == csa::BodyKind::Quaternion && c.division() == csa::Division::Division;
  };
  for (long d : {-1L, -2L, -3L, -5L, -6L, -7L, -10L, -11L, -15L, -23L}) {
    const auto f = AbelianField::quadratic(d);
    o.expect(is_div(quat(f, q(-1), q(-1))) == (num::mod(d, 8) == 1), "H(Q(sqrt " + std::to_string(d) + "))");
    o.expect(is_div(quat(f, q(-1), q(-3))) == (num::mod(d, 3) == 1), "(-1,-3 / Q(sqrt " + std::to_string(d) + "))");
  }
  return o;
}

Outcome eta_lambda_suite() {
  Outcome o;
  for (long n = 3; n <= 24; ++n) {
    const auto el = cyclo::eta_lambda(n);
    o.expect(el.eta * el.eta - el.lambda2 == q(4), "eta^2 - lambda^2 at n=" + std::to_string(n));
    const auto signs = cyclo::real_embedding_signs(el.lambda2, AbelianField::real_cyclotomic(n));
    o.expect(std::all_of(signs.begin(), signs.end(), [](int s) { return s == -1; }),
             "lambda^2 sign at n=" + std::to_string(n));
  }
  return o;
}

Outcome kleinian_matrix() {
  Outcome o;
  auto verdict = [](const char* k, const std::string& g) { return classify::kg_kleinian(fld(k), *grp(g)).verdict; };
  const std::pair<const char*, const char*> yes[] = {
      {"Q(sqrt,5)", "Q[8]xC[2]"},         // (2)
      {"poly(-2,0,0,1)", "Q[8]"},         // (2), one complex pair
      {"Q(sqrt,-5)", "W1[1]"},            // (3)
      {"Q(sqrt,-7)", "S[1,C[4],C[2]]"},   // (3)
      {"Q(zeta,3)", "WxC[3]"},            // (4)
      {"Q(zeta,4)", "V1[1]"},             // (5)
      {"Q(sqrt,-2)", "Dminus[16]"},       // (6)
      {"Q(sqrt,-2)", "T2[1]"},            // (6)
  };
  for (const auto& [k, g] : yes) o.expect(verdict(k, g) == csa::Tri::True, std::string(k) + " with " + g + " not yes");
  const std::pair<const char*, const char*> no[] = {
      {"Q(sqrt,2)", "W"}, {"Q(zeta,3)", "U1"}, {"Q(sqrt,-3)", "Dminus[16]"}};
  for (const auto& [k, g] : no) o.expect(verdict(k, g) == csa::Tri::False, std::string(k) + " with " + g + " not no");
  for (const char* g : {"W", "W1[1]", "W1[2]", "W2[1]", "W2[2]", "V", "V1[1]", "V1[2]", "V2[1]", "V2[2]", "U1",
                        "U2", "T", "T1[1]", "T1[2]", "T2[1]", "T2[2]", "T3[1]", "T3[2]", "Dminus[16]",
                        "Dplus[16]", "S[1,C[2],1]", "S[2,C[2],1]", "S[1,C[4],C[2]]", "S[2,C[4],C[2]]",
                        "S[1,C[8],C[4]]", "S[1,W1[1],y1,t1,x^2]", "S[1,W2[1],y1^2,x]"})
    o.expect(verdict("Q", g) == csa::Tri::True, std::string("Q with ") + g + " not yes");
  return o;
}

Outcome unit_matrix() {
  Outcome o;
  auto cls = [](const char* k, const char* g) { return classify::unit_group_structure(fld(k), *grp(g)); };
  auto is = [&](const char* k, const char* g, UnitClass want) {
    const auto v = cls(k, g);
    o.expect(v.strongest == want, std::string(k) + " with " + g + ": " + classify::verdict_name(v.strongest) +
                                      ", expected " + classify::verdict_name(want));
  };
  auto at_most = [&](const char* k, const char* g, UnitClass want) {
    const auto v = cls(k, g);
    o.expect(v.strongest <= want, std::string(k) + " with " + g + ": " + classify::verdict_name(v.strongest) +
                                      ", expected at most " + classify::verdict_name(want));
  };
  // finite, cases (1)-(4)
  is("Q", "Q[8]xC[2]", UnitClass::Finite);
  is("Q", "C[4]xC[4]", UnitClass::Finite);
  is("Q(sqrt,-5)", "C[2]xC[2]", UnitClass::Finite);
  is("Q(zeta,3)", "C[3]xC[6]", UnitClass::Finite);
  is("Q(zeta,4)", "C[4]xC[4]", UnitClass::Finite);
  // virtually abelian
  is("Q(sqrt,5)", "Q[8]xC[2]", UnitClass::Abelian);
  is("Q(sqrt,5)", "C[7]", UnitClass::Abelian);
  o.expect(cls("Q(sqrt,-1)", "Q[8]").strongest > UnitClass::Abelian, "Q(sqrt,-1) with Q[8] reported abelian");
  // virtually a product of free groups
  for (const char* g : {"W", "W1[1]", "W1[1]/x^2", "W2[1]", "W2[1]/x^2", "W2[1]/x^2*t1", "S[1,C[2],1]",
                        "S[1,C[4],C[2]]", "S[1,C[8],C[4]]", "T3[1]"})
    at_most("Q", g, UnitClass::Free);
  is("Q", "T3[1]", UnitClass::Free);
  at_most("Q(sqrt,5)", "Q[8]xC[2]", UnitClass::Free);
  // virtually a product of free-by-free groups
  is("Q(sqrt,-1)", "W1[1]", UnitClass::FreeByFree);
  is("Q(zeta,3)", "WxC[3]", UnitClass::FreeByFree);
  is("Q(zeta,4)", "V", UnitClass::FreeByFree);
  is("Q(sqrt,-2)", "Dminus[16]", UnitClass::FreeByFree);
  o.expect(classify::exceptional_cases(fld("Q(sqrt,-7)"), *grp("Q[8]")) == 2, "Q(sqrt,-7) with Q[8] not case 2");
  const auto v = cls("Q(sqrt,-5)", "W1[1]");
  o.expect(v.conjecture_dependent, "Q(sqrt,-5) with W1[1] not conjecture dependent");
  return o;
}

Outcome ladder_property() {
  Outcome o;
  const std::vector<const char*> fields{"Q", "Q(sqrt,-1)", "Q(sqrt,-2)", "Q(sqrt,-3)", "Q(sqrt,-5)",
                                        "Q(sqrt,-7)", "Q(sqrt,2)", "Q(sqrt,5)", "Q(zeta,5)", "Q(eta,7)"};
  const std::vector<const char*> groups{"Q[8]", "D[8]", "W", "W1[1]", "W2[1]", "V", "T", "T2[1]",
                                        "T3[1]", "Dminus[16]", "Dplus[16]", "S[1,C[4],C[2]]",
                                        "C[4]xC[2]", "C[6]", "Q[8]xC[2]", "Q[8]xC[3]", "D[12]"};
  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    const char* k = fields[rng() % fields.size()];
    const char* g = groups[rng() % groups.size()];
    const std::string tag = std::string(k) + " with " + g;
    const auto v = classify::unit_group_structure(fld(k), *grp(g));
    UnitClass worst = UnitClass::Finite;
    for (const auto& [c, cls] : v.components) worst = std::max(worst, cls);
    o.expect(worst == v.strongest, tag + ": breakdown disagrees with the reported class");
    if (v.strongest <= UnitClass::Abelian)
      for (const auto& [c, cls] : v.components)
        o.expect(cls <= UnitClass::Abelian, tag + ": " + csa::describe(c) + " breaks virtual abelianness");
    if (v.strongest <= UnitClass::FreeByFree)
      o.expect(classify::kg_kleinian(fld(k), *grp(g)).verdict == csa::Tri::True,
               tag + ": free-by-free class without Kleinian type");
  }
  return o;
}

Outcome norm_verification() {
  Outcome o;
  const auto z4 = CycloElement::zeta(4);
  o.expect(z4 * (q(1) + z4) * (q(1) + z4) - q(3) * z4 * z4 == q(1), "identity fails in Q(zeta_4)");
  o.expect(cyclo::verify_norm_solution(12, AbelianField::quadratic(-1), z4, q(1) + z4, z4),
           "verify_norm_solution rejects the solution");
  return o;
}

Outcome hilbert_oracle() {
  Outcome o;
  const long vals[] = {1, -1, 2, -2, 3, -3, 5, -5};
  for (long a : vals)
    for (long b : vals)
      for (long p : {2L, 3L, 5L, csa::kInfinity})
        o.expect(csa::hilbert_symbol_q(a, b, p) == verify::brute_hilbert(a, b, p),
                 "(" + std::to_string(a) + "," + std::to_string(b) + ") at " + (p ? std::to_string(p) : "inf"));
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"Wedderburn fixtures for Dminus[16] and Dplus[16]", wedderburn_fixtures},
      {"C-set fixtures of the basic families", cset_fixtures},
      {"idempotent suite with dimension check, orders up to 256", idempotent_suite},
      {"quaternion division grid over Q(sqrt d)", quaternion_grid},
      {"eta/lambda identity and signs, n = 3..24", eta_lambda_suite},
      {"Kleinian matrix", kleinian_matrix},
      {"unit-structure matrix", unit_matrix},
      {"ladder property on 50 random pairs", ladder_property},
      {"norm solution verification", norm_verification},
      {"Hilbert symbol oracle", hilbert_oracle},
  };
  int failed = 0, index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      o = run();
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    std::printf("criterion %2d  %s  %s (%.1f s)\n", index, o.pass ? "PASS" : "FAIL", name, seconds_since(t0));
    for (const auto& n : o.notes) std::printf("    %s\n", n.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%d of %d criteria pass\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
