#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "common.hpp"

namespace schurkit::groups {

using Elem = std::uint32_t;

// Default cap on group orders; overridable through SCHURKIT_SIZE_CAP.
constexpr std::size_t kDefaultSizeCap = 4096;
std::size_t size_cap();

// Fixed-size set of element indices.
class ElemSet {
 public:
  ElemSet() = default;
  explicit ElemSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64) {}

  std::size_t universe() const { return universe_; }
  bool contains(Elem e) const { return (words_[e >> 6] >> (e & 63)) & 1u; }
  void insert(Elem e) { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }
  std::size_t count() const;
  std::vector<Elem> elements() const;
  bool subset_of(const ElemSet& other) const;
  std::size_t hash() const;

  friend bool operator==(const ElemSet&, const ElemSet&) = default;
  friend bool operator<(const ElemSet& a, const ElemSet& b) { return a.words_ < b.words_; }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

// Finite group given by its full multiplication table. The identity is always
// element 0. Immutable after construction.
class FiniteGroup {
 public:
  FiniteGroup(std::size_t order, std::vector<std::uint16_t> table,
              std::vector<std::pair<std::string, Elem>> labels,
              std::vector<std::string> element_names, std::string spec);

  std::size_t order() const { return order_; }
  Elem identity() const { return 0; }
  Elem mul(Elem a, Elem b) const { return table_[std::size_t(a) * order_ + b]; }
  Elem inv(Elem a) const { return inverse_[a]; }
  // b^-1 a b
  Elem conj(Elem a, Elem b) const { return mul(mul(inv(b), a), b); }
  // a b a^-1 b^-1
  Elem comm(Elem a, Elem b) const { return mul(mul(a, b), mul(inv(a), inv(b))); }
  Elem pow(Elem a, long e) const;
  int element_order(Elem a) const { return orders_[a]; }

  // Named elements: presentation generators first, then derived symbols
  // (t, t_i, ...) of the defining presentation.
  const std::vector<std::pair<std::string, Elem>>& labels() const { return labels_; }
  std::optional<Elem> label(const std::string& name) const;
  const std::string& element_name(Elem a) const { return names_[a]; }
  // Canonical DSL string of the group (re-parses to an equal group).
  const std::string& spec() const { return spec_; }

  bool is_abelian() const;
  int exponent() const;
  bool same_table(const FiniteGroup& other) const { return table_ == other.table_; }

  // Exhaustive check of associativity, identity and inverses.
  bool verify_group_axioms() const;

 private:
  std::size_t order_;
  std::vector<std::uint16_t> table_;
  std::vector<Elem> inverse_;
  std::vector<int> orders_;
  std::vector<std::pair<std::string, Elem>> labels_;
  std::vector<std::string> names_;
  std::string spec_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

class Subgroup {
 public:
  Subgroup(const FiniteGroup& g, ElemSet members);

  const ElemSet& set() const { return set_; }
  const std::vector<Elem>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(Elem e) const { return set_.contains(e); }
  bool is_normal() const { return normal_; }
  bool is_cyclic() const { return cyclic_; }
  bool is_abelian() const { return abelian_; }
  bool subgroup_of(const Subgroup& other) const { return set_.subset_of(other.set_); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.set_ == b.set_; }

 private:
  ElemSet set_;
  std::vector<Elem> elements_;
  bool normal_ = false;
  bool cyclic_ = false;
  bool abelian_ = false;
};

// Subgroup generated by `gens`.
Subgroup generate(const FiniteGroup& g, const std::vector<Elem>& gens);
Subgroup normal_closure(const FiniteGroup& g, const std::vector<Elem>& gens);
Subgroup whole(const FiniteGroup& g);
Subgroup trivial(const FiniteGroup& g);
Subgroup conjugate(const FiniteGroup& g, const Subgroup& h, Elem by);
Subgroup normalizer(const FiniteGroup& g, const Subgroup& h);
Subgroup centralizer(const FiniteGroup& g, const Subgroup& h);
Subgroup center(const FiniteGroup& g);
Subgroup derived_subgroup(const FiniteGroup& g);
// Commutator subgroup [H, K] (normal closure not taken).
Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& h, const Subgroup& k);
bool is_metabelian(const FiniteGroup& g);

struct Quotient {
  GroupPtr group;
  std::vector<Elem> projection;  // element of g -> coset index
  Subgroup kernel;
};

// Quotient by the normal closure of `normal_gens`.
// An empty `spec` derives one from the generators of the kernel.
Quotient quotient(const FiniteGroup& g, const std::vector<Elem>& normal_gens,
                  const std::string& spec = {});
Quotient quotient(const FiniteGroup& g, const Subgroup& normal, const std::string& spec = {});

GroupPtr direct_product(const FiniteGroup& g1, const FiniteGroup& g2);

// Complete subgroup list, ordered by (order, element set).
std::vector<Subgroup> subgroups(const FiniteGroup& g, std::size_t cap = 512);
// Normal subgroups only; does not enumerate the full lattice.
std::vector<Subgroup> normal_subgroups(const FiniteGroup& g);

struct HamiltonianSplit {
  Subgroup q8;
  Subgroup elementary2;
  Subgroup odd_part;
  // witness: every element is uniquely q*e*f with q in q8, e in elementary2, f in odd_part
};

struct GroupData {
  Subgroup center;
  Subgroup derived;
  int exponent;
  bool is_abelian;
  bool is_metabelian;
  std::optional<HamiltonianSplit> hamiltonian_split;
};

GroupData group_data(const FiniteGroup& g);
std::optional<HamiltonianSplit> hamiltonian_split(const FiniteGroup& g);

// Coarse isomorphism-invariant fingerprint: order, exponent, center order,
// derived order and element-order spectrum.
struct Fingerprint {
  std::size_t order;
  int exponent;
  std::size_t center_order;
  std::size_t derived_order;
  std::vector<std::size_t> order_spectrum;  // count of elements of each order 1..exponent
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};
Fingerprint fingerprint(const FiniteGroup& g);

}  // namespace schurkit::groups
