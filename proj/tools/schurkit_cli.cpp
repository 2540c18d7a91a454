#include <algorithm>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "schurkit/schurkit.h"

using nlohmann::json;

namespace {

constexpr int kInvalid = 1;
constexpr int kUnsupported = 2;

struct Options {
  std::string verb;
  std::string group;
  std::string field = "Q";
  std::string a, b;
  long matrix_size = 1;
  std::string scope = "all";
  std::vector<long> sl2_verified;
  bool verify_dimensions = false;
  bool pretty = false;
};

void report(const json& err) { std::cerr << err.dump() << "\n"; }

int fail(sk_status s) {
  const std::string text = sk_last_error();
  report(text.empty() ? json{{"schema", 1}, {"error", sk_status_name(s)}, {"message", ""}} : json::parse(text));
  return s == SK_UNSUPPORTED || s == SK_NOT_METABELIAN || s == SK_SIZE_CAP_EXCEEDED ? kUnsupported : kInvalid;
}

int usage(const std::string& message) {
  report({{"schema", 1}, {"error", "InvalidSpec"}, {"message", message}});
  return kInvalid;
}

// Owns a JSON string handed out by the library.
json take(char* s) {
  json j = json::parse(s);
  sk_string_free(s);
  return j;
}

void print_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (width.size() <= i) width.push_back(0);
      width[i] = std::max(width[i], r[i].size());
    }
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      line += r[i];
      if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
    }
    std::cout << line << "\n";
  }
}

std::string text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

void print_components(const json& cs) {
  std::vector<std::vector<std::string>> rows{{"component", "division", "dimension", "class"}};
  for (const auto& c : cs)
    rows.push_back({text(c["description"]), text(c["division"]), text(c["dimension"]),
                    c.contains("unit_class") ? text(c["unit_class"]) : "-"});
  print_table(rows);
}

void print_pretty(const std::string& verb, const json& j) {
  if (j.contains("group")) std::cout << "group  " << text(j["group"]["spec"]) << "  order " << text(j["group"]["order"]) << "\n";
  if (j.contains("field")) std::cout << "field  " << text(j["field"]["spec"]) << "\n";
  for (const char* key : {"kleinian", "unit_class", "exceptional_case", "conjecture_dependent", "total_dimension"})
    if (j.contains(key)) std::cout << key << "  " << text(j[key]) << "\n";
  if (verb == "classify-algebra") {
    print_components(json::array({j["algebra"]}));
    return;
  }
  if (j.contains("components")) print_components(j["components"]);
  if (j.contains("c_set")) print_components(j["c_set"]);
  if (j.contains("witnesses"))
    for (const auto& w : j["witnesses"]) std::cout << "witness  " << text(w["component"]) << ": " << text(w["reason"]) << "\n";
  if (j.contains("notes"))
    for (const auto& n : j["notes"]) std::cout << "note  " << text(n) << "\n";
  if (j.contains("verify")) std::cout << "verify  " << j["verify"].dump() << "\n";
  if (verb == "catalog") {
    std::vector<std::vector<std::string>> rows{{"group", "order"}};
    for (const auto& g : j["groups"]) rows.push_back({text(g["spec"]), text(g["order"])});
    print_table(rows);
  }
}

void emit(const Options& o, const json& j) {
  if (o.pretty)
    print_pretty(o.verb, j);
  else
    std::cout << j.dump() << "\n";
}

// Exit 2 with a machine-readable reason when a verdict is left open.
int undetermined_exit(const std::string& what) {
  report({{"schema", 1}, {"error", "Undetermined"}, {"message", what}});
  return kUnsupported;
}

bool any_undetermined(const json& cs) {
  return std::any_of(cs.begin(), cs.end(), [](const json& c) { return c.value("division", "") == "undetermined"; });
}

int run_verify(const Options& o) {
  char* out = nullptr;
  if (sk_status s = sk_verify(o.scope.c_str(), o.verify_dimensions, &out)) return fail(s);
  const json j = take(out);
  if (o.pretty) {
    std::vector<std::vector<std::string>> rows{{"scope", "check", "result"}};
    for (const auto& c : j["checks"])
      rows.push_back({text(c["scope"]), text(c["name"]),
                      c["pass"].get<bool>() ? "pass" : "FAIL " + text(c["detail"])});
    print_table(rows);
    std::cout << j["passed"] << " passed, " << j["failed"] << " failed\n";
  } else {
    for (const auto& c : j["checks"]) {
      json rec = c;
      rec["schema"] = 1;
      std::cout << rec.dump() << "\n";
    }
    std::cout << json{{"schema", 1}, {"scope", j["scope"]}, {"passed", j["passed"]}, {"failed", j["failed"]}}.dump()
              << "\n";
  }
  return j["failed"].get<long>() == 0 ? 0 : kInvalid;
}

int dispatch(const Options& o) {
  if (o.verb == "verify") return run_verify(o);
  char* out = nullptr;
  if (o.verb == "catalog") {
    if (sk_status s = sk_catalog(&out)) return fail(s);
    emit(o, take(out));
    return 0;
  }

  sk_field* field = nullptr;
  if (sk_status s = sk_field_parse(o.field.c_str(), &field)) return fail(s);
  const long* verified = o.sl2_verified.empty() ? nullptr : o.sl2_verified.data();
  const std::size_t n_verified = o.sl2_verified.size();

  if (o.verb == "classify-algebra") {
    const bool quaternion = !o.a.empty() || !o.b.empty();
    sk_status s = sk_classify_algebra(field, quaternion ? o.a.c_str() : nullptr, quaternion ? o.b.c_str() : nullptr,
                                      o.matrix_size, verified, n_verified, &out);
    sk_field_free(field);
    if (s) return fail(s);
    const json j = take(out);
    emit(o, j);
    return j["algebra"]["division"] == "undetermined" ? undetermined_exit("division status undetermined") : 0;
  }

  if (o.group.empty()) {
    sk_field_free(field);
    return usage("verb '" + o.verb + "' needs --group");
  }
  sk_group* group = nullptr;
  if (sk_status s = sk_group_parse(o.group.c_str(), &group)) {
    sk_field_free(field);
    return fail(s);
  }
  sk_status s = SK_OK;
  if (o.verb == "decompose")
    s = sk_decompose(group, o.verify_dimensions, &out);
  else if (o.verb == "cset")
    s = sk_cset(field, group, &out);
  else if (o.verb == "kleinian")
    s = sk_kleinian(field, group, &out);
  else
    s = sk_unit_structure(field, group, verified, n_verified, &out);
  sk_group_free(group);
  sk_field_free(field);
  if (s) return fail(s);
  const json j = take(out);
  emit(o, j);
  if (o.verb == "decompose" && j.contains("verify") && !j["verify"]["ok"].get<bool>())
    return undetermined_exit("decomposition failed verification");
  if (j.value("kleinian", "") == "undetermined") return undetermined_exit("Kleinian verdict undetermined");
  if (o.verb == "unit-structure" && any_undetermined(j["components"]))
    return undetermined_exit("division status of a component undetermined");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Wedderburn decompositions of rational group algebras and unit group classification", "schurkit"};
  app.require_subcommand(1);
  app.add_flag("--pretty", o.pretty, "aligned table instead of JSON lines");

  auto add_group = [&](CLI::App* sub) { sub->add_option("-g,--group", o.group, "group spec, e.g. Q[8] or D[16]xC[3]"); };
  auto add_field = [&](CLI::App* sub) {
    sub->add_option("-f,--field", o.field, "field spec, e.g. Q(sqrt,-7) or Q(zeta,3)")->capture_default_str();
  };
  auto add_sl2 = [&](CLI::App* sub) {
    sub->add_option("--sl2-verified", o.sl2_verified, "d with SL2(Z[sqrt d]) virtually free-by-free")
        ->delimiter(',')
        ->allow_extra_args(false);
  };

  auto* dec = app.add_subcommand("decompose", "Wedderburn decomposition of QG");
  add_group(dec);
  dec->add_flag("--verify-dimensions", o.verify_dimensions, "check idempotents and component ranks exactly");
  auto* cs = app.add_subcommand("cset", "noncommutative simple components of KG");
  add_group(cs);
  add_field(cs);
  auto* ca = app.add_subcommand("classify-algebra", "classify (a, b / F) or M_n(F)");
  add_field(ca);
  ca->add_option("-a", o.a, "first quaternion entry");
  ca->add_option("-b", o.b, "second quaternion entry");
  ca->add_option("-n,--matrix-size", o.matrix_size, "matrix size")->capture_default_str();
  add_sl2(ca);
  auto* kl = app.add_subcommand("kleinian", "is KG of Kleinian type");
  add_group(kl);
  add_field(kl);
  auto* us = app.add_subcommand("unit-structure", "structure of the unit group of ZG or of an order in KG");
  add_group(us);
  add_field(us);
  add_sl2(us);
  app.add_subcommand("catalog", "family instances used by the checks");
  auto* ve = app.add_subcommand("verify", "run the invariant suites");
  ve->add_option("scope", o.scope, "all, groups, cyclofield, grpalg, csa or classify")->capture_default_str();
  ve->add_flag("--verify-dimensions", o.verify_dimensions, "include the rank check");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return usage(e.what());
  }
  o.verb = app.get_subcommands().front()->get_name();
  return dispatch(o);
}
