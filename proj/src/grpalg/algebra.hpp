#pragma once

#include <utility>
#include <vector>

#include <gmpxx.h>

#include "groups/finite_group.hpp"

namespace schurkit::grpalg {

using groups::Elem;
using groups::FiniteGroup;
using groups::Subgroup;

// Sparse element of QG: sorted (element, coefficient) pairs, no zeros.
class GroupAlgebraElement {
 public:
  explicit GroupAlgebraElement(const FiniteGroup& g) : g_(&g) {}
  static GroupAlgebraElement one(const FiniteGroup& g);
  static GroupAlgebraElement basis(const FiniteGroup& g, Elem e);

  const FiniteGroup& group() const { return *g_; }
  const std::vector<std::pair<Elem, mpq_class>>& terms() const { return terms_; }
  mpq_class coefficient(Elem e) const;
  bool is_zero() const { return terms_.empty(); }

  GroupAlgebraElement operator+(const GroupAlgebraElement& o) const;
  GroupAlgebraElement operator-(const GroupAlgebraElement& o) const;
  GroupAlgebraElement operator*(const GroupAlgebraElement& o) const;
  GroupAlgebraElement scaled(const mpq_class& r) const;
  // x^-1 * this * x for a group element x
  GroupAlgebraElement conjugated(Elem x) const;
  // this * x and x * this for a group element x
  GroupAlgebraElement right_mul(Elem x) const;
  GroupAlgebraElement left_mul(Elem x) const;

  bool commutes_with(Elem x) const { return right_mul(x) == left_mul(x); }
  bool is_central() const;
  bool is_idempotent() const { return *this * *this == *this; }

  friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    return a.terms_ == b.terms_;
  }

  // consumes `dense` (indexed by element)
  static GroupAlgebraElement from_dense(const FiniteGroup& g, std::vector<mpq_class>& dense);

 private:
  const FiniteGroup* g_;
  std::vector<std::pair<Elem, mpq_class>> terms_;
};

// (1/|S|) sum of the elements of S.
GroupAlgebraElement hat(const FiniteGroup& g, const Subgroup& s);

// epsilon(M, L): M-hat if M = L, else the product of (L-hat - S-hat) over the
// minimal subgroups S of M properly containing L. Requires L normal in M.
GroupAlgebraElement epsilon(const FiniteGroup& g, const Subgroup& m, const Subgroup& l);

// Sum of the distinct G-conjugates of epsilon(M, L).
GroupAlgebraElement e_central(const FiniteGroup& g, const Subgroup& m, const Subgroup& l);

}  // namespace schurkit::grpalg
