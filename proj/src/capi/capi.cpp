#include "schurkit/schurkit.h"

#include <cstdlib>
#include <cstring>
#include <new>

#include "groups/dsl.hpp"
#include "io/json_io.hpp"
#include "verify/suite.hpp"

using namespace schurkit;
using io::json;

struct sk_group {
  groups::GroupPtr g;
};

struct sk_field {
  cyclo::FieldRef f;
};

namespace {

thread_local std::string last_error;

sk_status status_of(ErrorCode c) { return static_cast<sk_status>(static_cast<int>(c) + 1); }

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

// Runs f, converting exceptions into a status and the thread's last error.
template <class F>
sk_status guard(F&& f) {
  try {
    last_error.clear();
    f();
    return SK_OK;
  } catch (const Error& e) {
    last_error = io::error_json(e).dump();
    return status_of(e.code());
  } catch (const std::exception& e) {
    last_error = io::error_json(Error(ErrorCode::Internal, e.what())).dump();
    return SK_INTERNAL;
  }
}

template <class T>
void require(const T* p, const char* what) {
  if (!p) throw Error(ErrorCode::PreconditionViolated, std::string(what) + " is null");
}

classify::ClassifyOptions options(const long* verified_d, size_t n) {
  classify::ClassifyOptions opt;
  if (verified_d) opt.verified_d.assign(verified_d, verified_d + n);
  return opt;
}

}  // namespace

extern "C" {

const char* sk_last_error(void) { return last_error.c_str(); }

const char* sk_status_name(sk_status s) {
  if (s == SK_OK) return "Ok";
  if (s < SK_OK || s > SK_INTERNAL) return "Unknown";
  return error_code_name(static_cast<ErrorCode>(static_cast<int>(s) - 1));
}

sk_status sk_group_parse(const char* spec, sk_group** out) {
  return guard([&] {
    require(spec, "group spec");
    require(out, "output");
    *out = new sk_group{groups::parse_group(spec)};
  });
}

void sk_group_free(sk_group* g) { delete g; }

sk_status sk_field_parse(const char* spec, sk_field** out) {
  return guard([&] {
    require(spec, "field spec");
    require(out, "output");
    *out = new sk_field{cyclo::parse_field(spec)};
  });
}

void sk_field_free(sk_field* f) { delete f; }

sk_status sk_decompose(const sk_group* g, int verify_dimensions, char** out) {
  return guard([&] {
    require(g, "group");
    require(out, "output");
    const auto terms = grpalg::wedderburn_terms(*g->g);
    if (verify_dimensions) {
      const auto r = grpalg::verify_decomposition(*g->g, terms, true, 512);
      *out = dup(io::decompose_json(*g->g, terms, &r).dump());
    } else {
      *out = dup(io::decompose_json(*g->g, terms, nullptr).dump());
    }
  });
}

sk_status sk_cset(const sk_field* k, const sk_group* g, char** out) {
  return guard([&] {
    require(k, "field");
    require(g, "group");
    require(out, "output");
    *out = dup(io::cset_json(k->f, *g->g, grpalg::c_set_over(k->f, *g->g)).dump());
  });
}

sk_status sk_classify_algebra(const sk_field* center, const char* a, const char* b, long matrix_size,
                              const long* verified_d, size_t n_verified, char** out) {
  return guard([&] {
    require(center, "center");
    require(out, "output");
    if (matrix_size < 1) throw Error(ErrorCode::InvalidSpec, "matrix size must be positive");
    if (!a != !b) throw Error(ErrorCode::InvalidSpec, "give both quaternion entries or neither");
    const auto c = a ? csa::quaternion_component(matrix_size, center->f, cyclo::parse_element(a),
                                                 cyclo::parse_element(b))
                     : csa::matrix_component(matrix_size, center->f);
    *out = dup(io::algebra_json(c, options(verified_d, n_verified)).dump());
  });
}

sk_status sk_kleinian(const sk_field* k, const sk_group* g, char** out) {
  return guard([&] {
    require(k, "field");
    require(g, "group");
    require(out, "output");
    *out = dup(io::kleinian_json(k->f, *g->g, classify::kg_kleinian(k->f, *g->g)).dump());
  });
}

sk_status sk_unit_structure(const sk_field* k, const sk_group* g, const long* verified_d, size_t n_verified,
                            char** out) {
  return guard([&] {
    require(k, "field");
    require(g, "group");
    require(out, "output");
    *out = dup(io::unit_structure_json(k->f, *g->g, options(verified_d, n_verified)).dump());
  });
}

sk_status sk_catalog(char** out) {
  return guard([&] {
    require(out, "output");
    json groups = json::array();
    for (const auto& spec : verify::family_catalog()) {
      auto g = groups::parse_group(spec);
      groups.push_back({{"spec", g->spec()}, {"order", g->order()}});
    }
    *out = dup(json{{"schema", io::kSchemaVersion}, {"groups", groups}}.dump());
  });
}

sk_status sk_verify(const char* scope, int verify_dimensions, char** out) {
  return guard([&] {
    require(out, "output");
    const auto checks = verify::run(scope ? scope : "all", verify_dimensions != 0);
    json list = json::array();
    long failed = 0;
    for (const auto& c : checks) {
      json x{{"scope", c.scope}, {"name", c.name}, {"pass", c.pass}};
      if (!c.pass) {
        x["detail"] = c.detail;
        ++failed;
      }
      list.push_back(std::move(x));
    }
    *out = dup(json{{"schema", io::kSchemaVersion},
                    {"scope", scope ? scope : "all"},
                    {"checks", list},
                    {"passed", static_cast<long>(checks.size()) - failed},
                    {"failed", failed}}
                   .dump());
  });
}

void sk_string_free(char* s) { std::free(s); }

}  // extern "C"
