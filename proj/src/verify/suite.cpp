#include "verify/suite.hpp"

#include <algorithm>

#include "csa/hilbert.hpp"
#include "csa/kleinian.hpp"
#include "groups/dsl.hpp"
#include "grpalg/wedderburn.hpp"

namespace schurkit::verify {

namespace {

using cyclo::AbelianField;
using cyclo::CycloElement;
using csa::SimpleComponent;

CycloElement q(long v) { return CycloElement::rational(v); }

AbelianField quad(long d) { return d == 1 ? AbelianField() : AbelianField::quadratic(d); }
SimpleComponent m2(long d) { return csa::matrix_component(2, quad(d)); }
SimpleComponent ham(long d) { return csa::quaternion_component(1, quad(d), q(-1), q(-1)); }
SimpleComponent quat(long a, long b) { return csa::quaternion_component(1, AbelianField(), q(a), q(b)); }

bool covered(const std::vector<SimpleComponent>& xs, const std::vector<SimpleComponent>& ys) {
  return std::all_of(xs.begin(), xs.end(), [&](const auto& x) {
    return std::any_of(ys.begin(), ys.end(), [&](const auto& y) { return csa::catalog_matches(x, y); });
  });
}

std::string described(const std::vector<SimpleComponent>& cs) {
  std::string out;
  for (const auto& c : cs) out += (out.empty() ? "" : ", ") + csa::describe(c);
  return "{" + out + "}";
}

void add(std::vector<Check>& out, const char* scope, std::string name, bool pass, std::string detail = {}) {
  out.push_back({scope, std::move(name), pass, pass ? std::string() : std::move(detail)});
}

// Runs f, turning a library error into a failed check.
template <class F>
void guarded(std::vector<Check>& out, const char* scope, const std::string& name, F&& f) {
  try {
    f();
  } catch (const std::exception& e) {
    add(out, scope, name, false, e.what());
  }
}

void groups_suite(std::vector<Check>& out) {
  for (const auto& spec : family_catalog())
    guarded(out, "groups", "spec round trip " + spec, [&] {
      auto g = groups::parse_group(spec);
      auto h = groups::parse_group(g->spec());
      add(out, "groups", "spec round trip " + spec, groups::fingerprint(*g) == groups::fingerprint(*h),
          "re-parsed " + h->spec() + " differs");
    });
}

void cyclofield_suite(std::vector<Check>& out) {
  for (long n = 3; n <= 24; ++n) {
    const std::string name = "eta/lambda n=" + std::to_string(n);
    guarded(out, "cyclofield", name, [&] {
      const auto el = cyclo::eta_lambda(n);
      const bool identity = el.eta * el.eta - el.lambda2 == q(4);
      const auto signs = cyclo::real_embedding_signs(el.lambda2, AbelianField::real_cyclotomic(n));
      const bool negative = std::all_of(signs.begin(), signs.end(), [](int s) { return s == -1; });
      add(out, "cyclofield", name, identity && negative,
          identity ? "lambda^2 = " + el.lambda2.to_string() + " not totally negative"
                   : "eta^2 - lambda^2 != 4 for eta = " + el.eta.to_string());
    });
  }
  guarded(out, "cyclofield", "norm solution over Q(i)", [&] {
    const auto z4 = CycloElement::zeta(4);
    add(out, "cyclofield", "norm solution over Q(i)",
        cyclo::verify_norm_solution(12, AbelianField::quadratic(-1), z4, q(1) + z4, z4),
        "zeta_4 (1+zeta_4)^2 - 3 zeta_4^2 != 1");
  });
}

void grpalg_suite(std::vector<Check>& out, bool dims) {
  for (const auto& spec : family_catalog()) {
    const std::string name = "idempotents " + spec;
    guarded(out, "grpalg", name, [&] {
      auto g = groups::parse_group(spec);
      if (g->order() > 256) return;
      const auto terms = grpalg::wedderburn_terms(*g);
      const auto r = grpalg::verify_decomposition(*g, terms, dims);
      std::string why;
      if (!r.central_idempotents) why += " not central;";
      if (!r.orthogonal) why += " not orthogonal;";
      if (!r.sum_is_one) why += " sum is not 1;";
      if (!r.dimensions) why += " rank mismatch;";
      if (!r.total_dimension) why += " total dimension mismatch;";
      add(out, "grpalg", name, r.ok(), why);
      std::string bad;
      for (const auto& t : terms) {
        const std::string spec = cyclo::field_spec(t.component.center);
        if (cyclo::field_spec(cyclo::parse_field(spec)) != spec) bad += " " + spec;
      }
      add(out, "grpalg", "center spec round trip " + spec, bad.empty(), "changed on re-parse:" + bad);
    });
  }
}

void csa_suite(std::vector<Check>& out) {
  for (long d : {-1L, -2L, -3L, -5L, -6L, -7L, -10L, -11L, -15L, -23L}) {
    const std::string name = "quaternion grid d=" + std::to_string(d);
    guarded(out, "csa", name, [&] {
      const auto f = AbelianField::quadratic(d);
      // a split symbol comes back as M_2 over the center
      const auto is_div = [](const SimpleComponent& c) {
        return c.kind == csa::BodyKind::Quaternion && c.division() == csa::Division::Division;
      };
      const bool h = is_div(csa::quaternion_component(1, f, q(-1), q(-1)));
      const bool t = is_div(csa::quaternion_component(1, f, q(-1), q(-3)));
      const bool hd = num::mod(d, 8) == 1, td = num::mod(d, 3) == 1;
      add(out, "csa", name, h == hd && t == td,
          std::string("H division: ") + (h ? "yes" : "no") + ", (-1,-3) division: " + (t ? "yes" : "no"));
    });
  }
  std::string bad;
  const long vals[] = {1, -1, 2, -2, 3, -3, 5, -5};
  for (long a : vals)
    for (long b : vals)
      for (long p : {2L, 3L, 5L, csa::kInfinity})
        if (csa::hilbert_symbol_q(a, b, p) != brute_hilbert(a, b, p))
          bad += " (" + std::to_string(a) + "," + std::to_string(b) + ")_" +
                 (p ? std::to_string(p) : std::string("inf"));
  add(out, "csa", "Hilbert symbol oracle", bad.empty(), "disagree at" + bad);
}

void classify_suite(std::vector<Check>& out) {
  for (const auto& fx : cset_fixtures()) {
    const std::string name = "C-set " + fx.group;
    guarded(out, "classify", name, [&] {
      const auto got = grpalg::c_set(*groups::parse_group(fx.group));
      const bool ok = covered(got, fx.expected) &&
                      (!fx.exact || (got.size() == fx.expected.size() && covered(fx.expected, got)));
      add(out, "classify", name, ok, "got " + described(got) + ", expected " +
                                         (fx.exact ? "" : "inside ") + described(fx.expected));
    });
  }
}

}  // namespace

const std::vector<std::string>& family_catalog() {
  static const std::vector<std::string> kCatalog{
      "C[6]",   "D[8]",   "Q[8]",   "D[12]",  "Q[12]",  "D[16]",  "Q[16]",  "Dplus[16]",
      "Dminus[16]", "W",  "W1[1]",  "W1[2]",  "W2[1]",  "W2[2]",  "V",      "V1[1]",
      "V1[2]",  "V2[1]",  "V2[2]",  "U1",     "U2",     "T",      "T1[1]",  "T1[2]",
      "T2[1]",  "T2[2]",  "T3[1]",  "T3[2]",  "C[2]xQ[8]",        "Q[8]xC[3]",
      "S[1,C[2],1]",      "S[2,C[2],1]",      "S[1,C[4],C[2]]",   "S[2,C[4],C[2]]",
      "S[1,C[8],C[4]]",   "S[1,W1[1],y1,t1,x^2]",                 "S[1,W2[1],y1^2,x]"};
  return kCatalog;
}

std::vector<CsetFixture> cset_fixtures() {
  const std::vector<SimpleComponent> small{m2(1), ham(1), m2(-1)};
  const std::vector<SimpleComponent> five{m2(1), ham(1), m2(-1), ham(2), m2(-2)};
  std::vector<CsetFixture> out{
      {"W1[1]", {m2(1)}, true},
      {"W1[2]", {m2(1)}, true},
      {"W", {m2(1), ham(1)}, true},
      {"W2[1]", {m2(1), ham(1)}, true},
      {"W2[2]", {m2(1), ham(1)}, true},
  };
  for (const char* g : {"V", "V1[1]", "V1[2]", "V2[1]", "V2[2]", "U1", "U2", "T1[1]"})
    out.push_back({g, small, false});
  for (const char* g : {"T", "T2[2]", "T3[1]", "T3[2]"}) out.push_back({g, five, false});
  out.push_back({"T2[1]", {ham(1), m2(1), m2(-2)}, true});
  out.push_back({"S[1,C[2],1]", {m2(1)}, true});
  out.push_back({"S[1,C[4],C[2]]", {m2(1), quat(-1, -3)}, true});
  out.push_back({"S[1,C[8],C[4]]", {m2(1), quat(-1, -3), m2(-1)}, true});
  out.push_back({"S[1,W1[1],y1,t1,x^2]", {m2(1), quat(-1, -3), m2(-3)}, true});
  out.push_back({"S[1,W2[1],y1^2,x]", {m2(1), ham(1), ham(3), m2(-1), m2(-3)}, true});
  return out;
}

int brute_hilbert(long a, long b, long p) {
  if (p == csa::kInfinity) return a < 0 && b < 0 ? -1 : 1;
  // primitive solutions mod p^e lift by Hensel once valuations are at most 1
  const long e = p == 2 ? 5 : 3;
  long m = 1;
  for (long i = 0; i < e; ++i) m *= p;
  for (long x = 0; x < m; ++x)
    for (long y = 0; y < m; ++y) {
      const long rhs = ((a * x % m * x + b * y % m * y) % m + m) % m;
      for (long z = 0; z < m; ++z) {
        if (x % p == 0 && y % p == 0 && z % p == 0) continue;
        if (z * z % m == rhs) return 1;
      }
    }
  return -1;
}

std::vector<Check> run(const std::string& scope, bool verify_dimensions) {
  static const char* kScopes[] = {"groups", "cyclofield", "grpalg", "csa", "classify"};
  if (scope != "all" && std::find(std::begin(kScopes), std::end(kScopes), scope) == std::end(kScopes))
    throw Error(ErrorCode::InvalidSpec, "unknown verify scope '" + scope + "'");
  const auto want = [&](const char* s) { return scope == "all" || scope == s; };
  std::vector<Check> out;
  if (want("groups")) groups_suite(out);
  if (want("cyclofield")) cyclofield_suite(out);
  if (want("grpalg")) grpalg_suite(out, verify_dimensions);
  if (want("csa")) csa_suite(out);
  if (want("classify")) classify_suite(out);
  return out;
}

}  // namespace schurkit::verify
