#pragma once

#include <string>
#include <vector>

#include "csa/component.hpp"

namespace schurkit::verify {

// Every family instance with parameter at most 2, plus a few products and
// S groups. Orders run up to 2048.
const std::vector<std::string>& family_catalog();

struct CsetFixture {
  std::string group;
  std::vector<csa::SimpleComponent> expected;
  bool exact;  // otherwise the computed set must lie inside `expected`
};

// Fixtures of the basic families with their C-sets. The S group with P = W21
// includes H(Q): it maps onto W21.
std::vector<CsetFixture> cset_fixtures();

// Brute-force local solvability of z^2 = a x^2 + b y^2; p = 0 is the real place.
int brute_hilbert(long a, long b, long p);

struct Check {
  std::string scope;
  std::string name;
  bool pass = false;
  std::string detail;  // counterexample on failure
};

// Scopes: all, groups, cyclofield, grpalg, csa, classify. Throws
// InvalidInput on an unknown scope.
std::vector<Check> run(const std::string& scope, bool verify_dimensions = false);

}  // namespace schurkit::verify
