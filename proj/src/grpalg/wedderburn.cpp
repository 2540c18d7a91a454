#include "grpalg/wedderburn.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <tuple>

namespace schurkit::grpalg {

namespace {

constexpr std::uint64_t kPrime = 2147483647;  // exceeds every supported group order

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  for (b %= kPrime; e; e >>= 1, b = b * b % kPrime)
    if (e & 1) r = r * b % kPrime;
  return r;
}

// Rank modulo a prime. A lower bound for the rational rank.
std::size_t rank_mod_p(std::vector<std::vector<std::uint64_t>> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    const std::uint64_t inv = pow_mod(m[rank][c], kPrime - 2);
    for (auto& v : m[rank]) v = v * inv % kPrime;
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      const std::uint64_t f = m[r][c];
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j)
        m[r][j] = (m[r][j] + (kPrime - f) * m[rank][j]) % kPrime;
    }
    ++rank;
  }
  return rank;
}

// Rank of {x e : x in G} modulo the prime.
std::size_t translate_rank(const FiniteGroup& g, const GroupAlgebraElement& e) {
  mpz_class den = 1;
  for (const auto& [y, c] : e.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<std::pair<Elem, std::uint64_t>> coeffs;
  for (const auto& [y, c] : e.terms()) {
    mpz_class v = c.get_num() * (den / c.get_den());
    coeffs.emplace_back(y, mpz_fdiv_ui(v.get_mpz_t(), kPrime));
  }
  std::vector<std::vector<std::uint64_t>> m(g.order(), std::vector<std::uint64_t>(g.order(), 0));
  for (Elem x = 0; x < g.order(); ++x)
    for (const auto& [y, v] : coeffs) m[x][g.mul(x, y)] = v;
  return rank_mod_p(std::move(m));
}

std::tuple<long, long, std::string> sort_key(const SimpleComponent& c) {
  return {c.total_degree(), c.dimension_over_q(), csa::catalog_key(c)};
}

std::vector<SimpleComponent> dedupe(std::vector<SimpleComponent> cs) {
  std::map<std::string, SimpleComponent> by_key;
  for (auto& c : cs) by_key.emplace(csa::catalog_key(c), std::move(c));
  std::vector<SimpleComponent> out;
  for (auto& [k, c] : by_key) out.push_back(std::move(c));
  return out;
}

}  // namespace

std::vector<WedderburnTerm> wedderburn_terms(const FiniteGroup& g) {
  if (!groups::is_metabelian(g))
    throw Error(ErrorCode::NotMetabelian, g.spec() + " is not metabelian");
  std::vector<WedderburnTerm> terms;
  for (auto& p : strong_shoda_pairs(g)) {
    auto d = crossed_product_data(g, p);
    auto c = csa::recognize_component(d);
    terms.push_back({std::move(p), std::move(d), std::move(c)});
  }
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    return sort_key(a.component) < sort_key(b.component);
  });
  return terms;
}

std::vector<SimpleComponent> wedderburn(const FiniteGroup& g) {
  std::vector<SimpleComponent> out;
  for (auto& t : wedderburn_terms(g)) out.push_back(std::move(t.component));
  return out;
}

VerifyReport verify_decomposition(const FiniteGroup& g, const std::vector<WedderburnTerm>& terms,
                                  bool check_rank, std::size_t size_limit) {
  VerifyReport r;
  GroupAlgebraElement sum(g);
  long total = 0;
  for (const auto& t : terms) {
    sum = sum + t.pair.e;
    total += t.component.dimension_over_q();
  }
  r.sum_is_one = sum == GroupAlgebraElement::one(g);
  r.total_dimension = total == static_cast<long>(g.order());
  r.central_idempotents = r.orthogonal = r.dimensions = true;
  if (g.order() > size_limit) return r;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& e = terms[i].pair.e;
    r.central_idempotents = r.central_idempotents && e.is_idempotent() && e.is_central();
    for (std::size_t j = i + 1; j < terms.size(); ++j)
      r.orthogonal = r.orthogonal && (e * terms[j].pair.e).is_zero();
    // rank mod p bounds the rational rank from below; with the total
    // dimension equal to |G| and the e orthogonal, equality is forced
    r.dimensions = r.dimensions && (!check_rank ||
                   static_cast<long>(translate_rank(g, e)) == terms[i].component.dimension_over_q());
  }
  return r;
}

groups::GroupPtr strip_elementary_2_factors(const groups::GroupPtr& g) {
  groups::GroupPtr cur = g;
  for (;;) {
    std::vector<Elem> gens = groups::derived_subgroup(*cur).elements();
    for (Elem x = 0; x < cur->order(); ++x) gens.push_back(cur->mul(x, x));
    const Subgroup phi = groups::generate(*cur, gens);
    const Subgroup z = groups::center(*cur);
    auto it = std::find_if(z.elements().begin(), z.elements().end(), [&](Elem y) {
      return cur->element_order(y) == 2 && !phi.contains(y);
    });
    if (it == z.elements().end()) return cur;
    cur = groups::quotient(*cur, std::vector<Elem>{*it}).group;
  }
}

std::vector<SimpleComponent> c_set(const FiniteGroup& g) {
  if (!groups::is_metabelian(g))
    throw Error(ErrorCode::NotMetabelian, g.spec() + " is not metabelian");
  // non-owning handle; the stripped quotients are owned
  groups::GroupPtr self(&g, [](const FiniteGroup*) {});
  auto stripped = strip_elementary_2_factors(self);
  std::vector<SimpleComponent> out;
  for (auto& c : wedderburn(*stripped))
    if (!c.commutative()) out.push_back(std::move(c));
  return dedupe(std::move(out));
}

std::vector<SimpleComponent> extend_components(const cyclo::FieldRef& k,
                                               const std::vector<SimpleComponent>& cs) {
  std::vector<SimpleComponent> out;
  for (const auto& c : cs) {
    const auto& z = cyclo::require_abelian(c.center, "component center");
    if (const auto* ka = std::get_if<cyclo::AbelianField>(&k)) {
      // K (x) Z splits into [K n Z : Q] copies of the compositum
      out.push_back(csa::extend_scalars(c, cyclo::compositum(*ka, z)));
    } else if (z.is_rational()) {
      out.push_back(csa::extend_scalars(c, k));
    } else {
      throw Error(ErrorCode::Unsupported, "extension of " + z.spec() + " by " +
                                              cyclo::field_spec(k) + " is not supported");
    }
  }
  return dedupe(std::move(out));
}

std::vector<SimpleComponent> c_set_over(const cyclo::FieldRef& k, const FiniteGroup& g) {
  return extend_components(k, c_set(g));
}

}  // namespace schurkit::grpalg
