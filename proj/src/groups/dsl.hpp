#pragma once

#include <string>

#include "groups/families.hpp"

namespace schurkit::groups {

// Parses a group DSL string, e.g. "W1[2]", "Q[8]xC[2]", "W2[1]/x^2*t1",
// "S[1,W1[1],y1,t1,x^2]". Throws ParseError or InvalidSpec.
GroupPtr parse_group(const std::string& text);

// Parses a word over the labels of g ("x^2*t1", "(y*x)^-1", "1").
Elem parse_word(const FiniteGroup& g, const std::string& text);

}  // namespace schurkit::groups
