#pragma once

#include <vector>

#include "grpalg/algebra.hpp"

namespace schurkit::grpalg {

struct StrongShodaPair {
  Subgroup m;
  Subgroup l;
  Subgroup n;           // normalizer of L
  long k;               // [M:L]
  long index;           // [G:N]
  Elem x;               // generator of M/L
  std::vector<Elem> transversal;  // least element of each coset of M in N
  GroupAlgebraElement e;          // e(G, M, L)
};

// Checks the definition directly, including orthogonality of the distinct
// conjugates of epsilon(M, L). Intended for small groups.
bool is_strong_shoda_pair(const FiniteGroup& g, const Subgroup& m, const Subgroup& l);

// Builds the pair data; throws NotStrongShoda if the definition fails.
StrongShodaPair make_strong_shoda_pair(const FiniteGroup& g, const Subgroup& m, const Subgroup& l);

// One pair per distinct primitive central idempotent. Metabelian groups use
// the maximal-abelian route; other groups fall back to the exhaustive scan.
std::vector<StrongShodaPair> strong_shoda_pairs(const FiniteGroup& g);

// Scan of all nested subgroup pairs; reference oracle for small groups.
std::vector<StrongShodaPair> strong_shoda_pairs_exhaustive(const FiniteGroup& g);

struct CrossedProductData {
  long n = 1;
  long k = 1;
  // acting group A = N/M, element 0 is the identity
  std::size_t order = 1;
  std::vector<std::vector<std::size_t>> mul;
  std::vector<std::pair<std::size_t, long>> generators;  // (element, order)
  std::vector<long> action;                  // a -> i mod k
  std::vector<std::vector<long>> twisting;   // (a, b) -> j mod k
};

CrossedProductData crossed_product_data(const FiniteGroup& g, const StrongShodaPair& p);

// action is an injective homomorphism into units mod k and twisting is a
// 2-cocycle for it.
bool check_crossed_product_data(const CrossedProductData& d);

// Basis of an abelian subgroup: independent elements whose orders multiply to |A|.
std::vector<Elem> abelian_basis(const FiniteGroup& g, const Subgroup& a);

}  // namespace schurkit::grpalg
