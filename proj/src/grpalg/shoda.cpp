#include "grpalg/shoda.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace schurkit::grpalg {

namespace {

using groups::ElemSet;

// Least o > 0 with y^o in L.
long order_mod(const FiniteGroup& g, Elem y, const Subgroup& l) {
  long o = 1;
  for (Elem p = y; !l.contains(p); p = g.mul(p, y)) ++o;
  return o;
}

// Generator of M/L if the quotient is cyclic.
std::optional<Elem> cyclic_generator(const FiniteGroup& g, const Subgroup& m, const Subgroup& l) {
  const long k = static_cast<long>(m.order() / l.order());
  for (Elem y : m.elements())
    if (order_mod(g, y, l) == k) return y;
  return std::nullopt;
}

// Greedy generating set, at most log2 |H| elements.
std::vector<Elem> small_generating_set(const FiniteGroup& g, const Subgroup& h) {
  std::vector<Elem> gens;
  Subgroup span = groups::trivial(g);
  for (Elem y : h.elements()) {
    if (span.contains(y)) continue;
    gens.push_back(y);
    span = groups::generate(g, gens);
  }
  return gens;
}

bool normal_in(const FiniteGroup& g, const Subgroup& l, const Subgroup& m) {
  for (Elem x : small_generating_set(g, m))
    for (Elem y : l.elements())
      if (!l.contains(g.conj(y, x))) return false;
  return true;
}

// i with y in x^i L, for every y of M; -1 outside M.
std::vector<long> log_table(const FiniteGroup& g, const Subgroup& l, Elem x, long k) {
  std::vector<long> t(g.order(), -1);
  Elem p = g.identity();
  for (long i = 0; i < k; ++i, p = g.mul(p, x))
    for (Elem h : l.elements()) t[g.mul(p, h)] = i;
  return t;
}

// epsilon(M, L) for cyclic M/L = <xL> of order k. In Q[M/L] the product of
// (1 - S_p-hat) over the primes p | k has coefficient
// sum over squarefree d | k of mu(d)/d [k/d divides i] at x^i.
GroupAlgebraElement cyclic_epsilon(const FiniteGroup& g, const Subgroup& l, Elem x, long k) {
  const auto log = log_table(g, l, x, k);
  const auto primes = num::prime_divisors(k);
  std::vector<mpq_class> f(k);
  for (std::size_t mask = 0; mask < (std::size_t{1} << primes.size()); ++mask) {
    long d = 1;
    int sign = 1;
    for (std::size_t b = 0; b < primes.size(); ++b)
      if (mask >> b & 1) {
        d *= primes[b];
        sign = -sign;
      }
    for (long i = 0; i < k; i += k / d) f[i] += mpq_class(sign, d);
  }
  std::vector<mpq_class> dense(g.order());
  const mpq_class inv_l(1, l.order());
  for (Elem y = 0; y < g.order(); ++y)
    if (log[y] >= 0) dense[y] = f[log[y]] * inv_l;
  return GroupAlgebraElement::from_dense(g, dense);
}

// Distinct conjugates of eps; conjugation by elements of `stab` fixes eps.
std::vector<GroupAlgebraElement> conjugates_of(const FiniteGroup& g, const GroupAlgebraElement& eps,
                                               const Subgroup& stab) {
  std::vector<GroupAlgebraElement> out;
  ElemSet covered(g.order());
  for (Elem x = 0; x < g.order(); ++x) {
    if (covered.contains(x)) continue;
    for (Elem s : stab.elements()) covered.insert(g.mul(s, x));
    GroupAlgebraElement c = eps.conjugated(x);
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(std::move(c));
  }
  return out;
}

GroupAlgebraElement sum_of(const FiniteGroup& g, const std::vector<GroupAlgebraElement>& xs) {
  std::vector<mpq_class> dense(g.order());
  for (const auto& x : xs)
    for (const auto& [e, c] : x.terms()) dense[e] += c;
  return GroupAlgebraElement::from_dense(g, dense);
}

std::vector<Elem> least_coset_reps(const FiniteGroup& g, const Subgroup& n, const Subgroup& m) {
  std::vector<Elem> reps;
  ElemSet seen(g.order());
  for (Elem y : n.elements()) {
    if (seen.contains(y)) continue;
    reps.push_back(y);
    for (Elem z : m.elements()) seen.insert(g.mul(y, z));
  }
  return reps;
}

// Pair data without the orthogonality check; nullopt if any other part of
// the definition fails.
std::optional<StrongShodaPair> build_pair(const FiniteGroup& g, const Subgroup& m,
                                          const Subgroup& l) {
  if (!l.subgroup_of(m) || !normal_in(g, l, m)) return std::nullopt;
  auto x = cyclic_generator(g, m, l);
  if (!x) return std::nullopt;
  Subgroup n = groups::normalizer(g, l);
  if (!m.subgroup_of(n) || !normal_in(g, m, n)) return std::nullopt;
  // M/L is maximal abelian in N/L iff nothing outside M centralizes x mod L
  for (Elem y : n.elements())
    if (!m.contains(y) && l.contains(g.comm(y, *x))) return std::nullopt;
  const long k = static_cast<long>(m.order() / l.order());
  GroupAlgebraElement eps = cyclic_epsilon(g, l, *x, k);
  auto conj = conjugates_of(g, eps, n);
  auto reps = least_coset_reps(g, n, m);
  return StrongShodaPair{m, l, n, k, static_cast<long>(g.order() / n.order()), *x,
                         std::move(reps), sum_of(g, conj)};
}

bool conjugates_orthogonal(const FiniteGroup& g, const StrongShodaPair& p) {
  GroupAlgebraElement eps = cyclic_epsilon(g, p.l, p.x, p.k);
  auto conj = conjugates_of(g, eps, p.n);
  for (std::size_t i = 1; i < conj.size(); ++i)
    if (!(eps * conj[i]).is_zero()) return false;
  return true;
}

void check_cap(const FiniteGroup& g) {
  if (g.order() > groups::size_cap())
    throw Error(ErrorCode::SizeCapExceeded,
                "group order " + std::to_string(g.order()) + " exceeds the size cap");
}

// Derived subgroup of the subgroup generated by `gens`, as a normal closure
// of the generator commutators inside it.
Subgroup derived_of(const FiniteGroup& g, const std::vector<Elem>& gens) {
  std::vector<Elem> comms;
  for (Elem a : gens)
    for (Elem b : gens) comms.push_back(g.comm(a, b));
  Subgroup d = groups::generate(g, comms);
  for (;;) {
    std::vector<Elem> extra;
    for (Elem y : d.elements())
      for (Elem b : gens)
        if (!d.contains(g.conj(y, b))) extra.push_back(g.conj(y, b));
    if (extra.empty()) return d;
    extra.insert(extra.end(), d.elements().begin(), d.elements().end());
    d = groups::generate(g, extra);
  }
}

// Kernels of the complex linear characters of the abelian subgroup A: exactly
// the subgroups H with A/H cyclic.
std::vector<Subgroup> cyclic_quotient_kernels(const FiniteGroup& g, const Subgroup& a) {
  const auto basis = abelian_basis(g, a);
  std::vector<long> ord;
  long e = 1;
  for (Elem b : basis) {
    ord.push_back(g.element_order(b));
    e = num::lcm(e, ord.back());
  }
  // exponent vectors of all elements
  std::vector<std::pair<Elem, std::vector<long>>> elems{{g.identity(), {}}};
  for (std::size_t j = 0; j < basis.size(); ++j) {
    std::vector<std::pair<Elem, std::vector<long>>> next;
    for (const auto& [y, v] : elems) {
      Elem p = y;
      for (long t = 0; t < ord[j]; ++t, p = g.mul(p, basis[j])) {
        auto w = v;
        w.push_back(t);
        next.emplace_back(p, std::move(w));
      }
    }
    elems = std::move(next);
  }
  std::vector<Subgroup> out;
  std::set<ElemSet> seen;
  std::vector<long> c(basis.size(), 0);
  for (;;) {
    ElemSet ker(g.order());
    for (const auto& [y, v] : elems) {
      long s = 0;
      for (std::size_t j = 0; j < v.size(); ++j) s += c[j] * v[j] * (e / ord[j]);
      if (s % e == 0) ker.insert(y);
    }
    if (seen.insert(ker).second) out.emplace_back(g, ker);
    std::size_t j = 0;
    while (j < c.size() && ++c[j] == ord[j]) c[j++] = 0;
    if (j == c.size()) break;
  }
  return out;
}

// Maximal abelian subgroup containing the derived subgroup.
Subgroup maximal_abelian_over_derived(const FiniteGroup& g) {
  Subgroup a = groups::derived_subgroup(g);
  for (;;) {
    Subgroup c = groups::centralizer(g, a);
    auto it = std::find_if(c.elements().begin(), c.elements().end(),
                           [&](Elem y) { return !a.contains(y); });
    if (it == c.elements().end()) return a;
    auto gens = abelian_basis(g, a);
    gens.push_back(*it);
    a = groups::generate(g, gens);
  }
}

// Metabelian route: A <= K with K' <= H <= K, K/H cyclic and K maximal among
// the B >= A with B' <= H <= B. Stops once the distinct idempotents sum to 1.
std::vector<StrongShodaPair> metabelian_pairs(const FiniteGroup& g) {
  const Subgroup a = maximal_abelian_over_derived(g);
  const auto a_basis = abelian_basis(g, a);
  auto q = groups::quotient(g, a);
  struct Over {
    Subgroup b;
    Subgroup derived;
  };
  std::vector<Over> overs;
  for (const auto& s : groups::subgroups(*q.group)) {
    ElemSet members(g.order());
    std::vector<Elem> gens = a_basis;
    ElemSet lifted(q.group->order());
    for (Elem y = 0; y < g.order(); ++y) {
      if (!s.contains(q.projection[y])) continue;
      members.insert(y);
      if (!lifted.contains(q.projection[y])) {
        lifted.insert(q.projection[y]);
        gens.push_back(y);
      }
    }
    Subgroup b(g, members);
    overs.push_back({b, derived_of(g, gens)});
  }
  // larger K first: the big components are found early
  std::stable_sort(overs.begin(), overs.end(),
                   [](const Over& x, const Over& y) { return x.b.order() > y.b.order(); });

  std::vector<StrongShodaPair> out;
  GroupAlgebraElement total(g);
  const auto one = GroupAlgebraElement::one(g);
  for (const auto& k : overs) {
    // H ranges over the preimages of the cyclic-quotient kernels of K/K'
    auto kq = groups::quotient(g, k.derived);
    ElemSet image(kq.group->order());
    for (Elem y : k.b.elements()) image.insert(kq.projection[y]);
    for (const auto& hbar : cyclic_quotient_kernels(*kq.group, Subgroup(*kq.group, image))) {
      ElemSet hs(g.order());
      for (Elem y : k.b.elements())
        if (hbar.contains(kq.projection[y])) hs.insert(y);
      Subgroup h(g, hs);
      bool maximal = std::none_of(overs.begin(), overs.end(), [&](const Over& o) {
        return o.b.order() > k.b.order() && k.b.subgroup_of(o.b) && o.derived.subgroup_of(h);
      });
      if (!maximal) continue;
      auto p = build_pair(g, k.b, h);
      if (!p) continue;
      if (std::any_of(out.begin(), out.end(), [&](const auto& o) { return o.e == p->e; }))
        continue;
      total = total + p->e;
      out.push_back(std::move(*p));
      if (total == one) return out;
    }
  }
  throw Error(ErrorCode::CompletenessFailure, "idempotents of " + g.spec() + " do not sum to 1");
}

}  // namespace

std::vector<Elem> abelian_basis(const FiniteGroup& g, const Subgroup& a) {
  std::vector<Elem> basis;
  for (long p : num::prime_divisors(static_cast<long>(a.order()))) {
    std::vector<Elem> ap;
    for (Elem y : a.elements()) {
      long o = g.element_order(y);
      while (o % p == 0) o /= p;
      if (o == 1) ap.push_back(y);
    }
    // exponent vectors over the local basis for the current span
    std::vector<std::vector<long>> vec(g.order());
    ElemSet in(g.order());
    in.insert(g.identity());
    std::vector<Elem> span{g.identity()}, local;
    while (span.size() < ap.size()) {
      Elem best = 0;
      long bo = 0;
      for (Elem y : ap) {
        if (in.contains(y)) continue;
        long o = 1;
        for (Elem q = y; !in.contains(q); q = g.mul(q, y)) ++o;
        if (o > bo) {
          bo = o;
          best = y;
        }
      }
      // lift to an element of order exactly bo
      const auto m = vec[g.pow(best, bo)];
      Elem lift = best;
      for (std::size_t j = 0; j < m.size(); ++j) {
        if (m[j] % bo != 0) throw Error(ErrorCode::Internal, "abelian basis lift failed");
        lift = g.mul(lift, g.pow(local[j], -m[j] / bo));
      }
      std::vector<Elem> next;
      for (Elem s : span) {
        const auto base = vec[s];
        Elem q = s;
        for (long t = 0; t < bo; ++t, q = g.mul(q, lift)) {
          vec[q] = base;
          vec[q].push_back(t);
          in.insert(q);
          next.push_back(q);
        }
      }
      span = std::move(next);
      local.push_back(lift);
    }
    basis.insert(basis.end(), local.begin(), local.end());
  }
  return basis;
}

bool is_strong_shoda_pair(const FiniteGroup& g, const Subgroup& m, const Subgroup& l) {
  auto p = build_pair(g, m, l);
  return p && conjugates_orthogonal(g, *p);
}

StrongShodaPair make_strong_shoda_pair(const FiniteGroup& g, const Subgroup& m, const Subgroup& l) {
  auto p = build_pair(g, m, l);
  if (!p || !conjugates_orthogonal(g, *p))
    throw Error(ErrorCode::NotStrongShoda, "not a strong Shoda pair of " + g.spec());
  return std::move(*p);
}

std::vector<StrongShodaPair> strong_shoda_pairs(const FiniteGroup& g) {
  check_cap(g);
  if (groups::is_metabelian(g)) return metabelian_pairs(g);
  return strong_shoda_pairs_exhaustive(g);
}

std::vector<StrongShodaPair> strong_shoda_pairs_exhaustive(const FiniteGroup& g) {
  check_cap(g);
  const auto subs = groups::subgroups(g);
  std::vector<StrongShodaPair> out;
  for (const auto& m : subs)
    for (const auto& l : subs) {
      if (m.order() % l.order() != 0 || !l.subgroup_of(m)) continue;
      auto p = build_pair(g, m, l);
      if (!p || !conjugates_orthogonal(g, *p)) continue;
      if (std::none_of(out.begin(), out.end(), [&](const auto& o) { return o.e == p->e; }))
        out.push_back(std::move(*p));
    }
  return out;
}

CrossedProductData crossed_product_data(const FiniteGroup& g, const StrongShodaPair& p) {
  if (!build_pair(g, p.m, p.l))
    throw Error(ErrorCode::NotStrongShoda, "not a strong Shoda pair of " + g.spec());
  CrossedProductData d;
  d.n = p.index;
  d.k = p.k;
  const auto& reps = p.transversal;
  d.order = reps.size();
  std::vector<long> coset(g.order(), -1);
  for (std::size_t a = 0; a < reps.size(); ++a)
    for (Elem z : p.m.elements()) coset[g.mul(reps[a], z)] = static_cast<long>(a);
  const auto log = log_table(g, p.l, p.x, p.k);
  d.mul.assign(d.order, std::vector<std::size_t>(d.order));
  d.twisting.assign(d.order, std::vector<long>(d.order));
  d.action.resize(d.order);
  for (std::size_t a = 0; a < d.order; ++a) {
    d.action[a] = log[g.conj(p.x, reps[a])];
    for (std::size_t b = 0; b < d.order; ++b) {
      Elem ab = g.mul(reps[a], reps[b]);
      std::size_t c = static_cast<std::size_t>(coset[ab]);
      d.mul[a][b] = c;
      d.twisting[a][b] = log[g.mul(g.inv(reps[c]), ab)];
    }
  }
  // greedy generating set of A
  std::vector<char> span(d.order, 0);
  span[0] = 1;
  for (std::size_t a = 1; a < d.order; ++a) {
    if (span[a]) continue;
    long o = 1;
    for (std::size_t q = a; q != 0; q = d.mul[q][a]) ++o;
    d.generators.emplace_back(a, o);
    for (bool grew = true; grew;) {
      grew = false;
      for (std::size_t s = 0; s < d.order; ++s)
        if (span[s] && !span[d.mul[s][a]]) span[d.mul[s][a]] = grew = true;
    }
  }
  return d;
}

bool check_crossed_product_data(const CrossedProductData& d) {
  std::set<long> images;
  for (std::size_t a = 0; a < d.order; ++a) {
    if (num::gcd(d.action[a], d.k) != 1 && d.k > 1) return false;
    images.insert(num::mod(d.action[a], d.k));
    for (std::size_t b = 0; b < d.order; ++b) {
      if (num::mod(d.action[d.mul[a][b]] - d.action[a] * d.action[b], d.k) != 0) return false;
      // right action: tau(ab,c) + sigma(c) tau(a,b) = tau(a,bc) + tau(b,c)
      for (std::size_t c = 0; c < d.order; ++c) {
        long lhs = d.twisting[d.mul[a][b]][c] + d.action[c] * d.twisting[a][b];
        long rhs = d.twisting[a][d.mul[b][c]] + d.twisting[b][c];
        if (num::mod(lhs - rhs, d.k) != 0) return false;
      }
    }
  }
  return images.size() == d.order;
}

}  // namespace schurkit::grpalg
