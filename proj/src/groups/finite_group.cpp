#include "groups/finite_group.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <unordered_map>

namespace schurkit::groups {

std::size_t size_cap() {
  if (const char* env = std::getenv("SCHURKIT_SIZE_CAP")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && v > 0) return std::min<unsigned long>(v, 65535);
  }
  return kDefaultSizeCap;
}

// ---------------------------------------------------------------- ElemSet

std::size_t ElemSet::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
  return c;
}

std::vector<Elem> ElemSet::elements() const {
  std::vector<Elem> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w) {
      int b = __builtin_ctzll(w);
      out.push_back(static_cast<Elem>(i * 64 + b));
      w &= w - 1;
    }
  }
  return out;
}

bool ElemSet::subset_of(const ElemSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

std::size_t ElemSet::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto w : words_) h = (h ^ w) * 1099511628211ull;
  return h;
}

// ------------------------------------------------------------ FiniteGroup

FiniteGroup::FiniteGroup(std::size_t order, std::vector<std::uint16_t> table,
                         std::vector<std::pair<std::string, Elem>> labels,
                         std::vector<std::string> element_names, std::string spec)
    : order_(order),
      table_(std::move(table)),
      labels_(std::move(labels)),
      names_(std::move(element_names)),
      spec_(std::move(spec)) {
  if (table_.size() != order_ * order_)
    throw Error(ErrorCode::Internal, "multiplication table has wrong size");
  inverse_.assign(order_, 0);
  for (Elem a = 0; a < order_; ++a) {
    for (Elem b = 0; b < order_; ++b) {
      if (mul(a, b) == 0) {
        inverse_[a] = b;
        break;
      }
    }
  }
  orders_.assign(order_, 1);
  for (Elem a = 0; a < order_; ++a) {
    Elem x = a;
    int k = 1;
    while (x != 0) {
      x = mul(x, a);
      ++k;
      if (k > static_cast<int>(order_) + 1)
        throw Error(ErrorCode::PresentationInconsistent, "element of infinite order in table");
    }
    orders_[a] = k;
  }
  if (names_.size() != order_) {
    names_.resize(order_);
    for (Elem a = 0; a < order_; ++a) names_[a] = "e" + std::to_string(a);
  }
}

Elem FiniteGroup::pow(Elem a, long e) const {
  long n = orders_[a];
  e = num::mod(e, n);
  Elem r = 0;
  for (long i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

std::optional<Elem> FiniteGroup::label(const std::string& name) const {
  for (const auto& [n, e] : labels_)
    if (n == name) return e;
  return std::nullopt;
}

bool FiniteGroup::is_abelian() const {
  for (const auto& [n1, a] : labels_)
    for (const auto& [n2, b] : labels_)
      if (mul(a, b) != mul(b, a)) return false;
  if (labels_.empty()) {
    for (Elem a = 0; a < order_; ++a)
      for (Elem b = 0; b < a; ++b)
        if (mul(a, b) != mul(b, a)) return false;
  }
  return true;
}

int FiniteGroup::exponent() const {
  long e = 1;
  for (int o : orders_) e = num::lcm(e, o);
  return static_cast<int>(e);
}

bool FiniteGroup::verify_group_axioms() const {
  for (Elem a = 0; a < order_; ++a) {
    if (mul(0, a) != a || mul(a, 0) != a) return false;
    if (mul(inv(a), a) != 0 || mul(a, inv(a)) != 0) return false;
  }
  for (Elem a = 0; a < order_; ++a)
    for (Elem b = 0; b < order_; ++b) {
      Elem ab = mul(a, b);
      for (Elem c = 0; c < order_; ++c)
        if (mul(ab, c) != mul(a, mul(b, c))) return false;
    }
  return true;
}

// --------------------------------------------------------------- Subgroup

namespace {

std::vector<Elem> generating_set(const FiniteGroup& g, const std::vector<Elem>& elems) {
  std::vector<Elem> gens;
  ElemSet span(g.order());
  span.insert(0);
  std::vector<Elem> members{0};
  for (Elem e : elems) {
    if (span.contains(e)) continue;
    gens.push_back(e);
    // extend span by closure
    std::deque<Elem> queue(members.begin(), members.end());
    while (!queue.empty()) {
      Elem x = queue.front();
      queue.pop_front();
      for (Elem s : gens) {
        Elem y = g.mul(x, s);
        if (!span.contains(y)) {
          span.insert(y);
          members.push_back(y);
          queue.push_back(y);
        }
      }
    }
  }
  return gens;
}

}  // namespace

Subgroup::Subgroup(const FiniteGroup& g, ElemSet members) : set_(std::move(members)) {
  elements_ = set_.elements();
  std::size_t n = elements_.size();
  cyclic_ = std::any_of(elements_.begin(), elements_.end(),
                        [&](Elem e) { return static_cast<std::size_t>(g.element_order(e)) == n; });
  auto gens = generating_set(g, elements_);
  abelian_ = true;
  for (std::size_t i = 0; i < gens.size() && abelian_; ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (g.mul(gens[i], gens[j]) != g.mul(gens[j], gens[i])) {
        abelian_ = false;
        break;
      }
  normal_ = true;
  std::vector<Elem> ggens;
  for (const auto& [name, e] : g.labels()) ggens.push_back(e);
  if (ggens.empty())
    for (Elem e = 0; e < g.order(); ++e) ggens.push_back(e);
  for (Elem h : gens) {
    for (Elem x : ggens)
      if (!set_.contains(g.conj(h, x))) {
        normal_ = false;
        break;
      }
    if (!normal_) break;
  }
}

Subgroup generate(const FiniteGroup& g, const std::vector<Elem>& gens) {
  ElemSet set(g.order());
  set.insert(0);
  std::deque<Elem> queue{0};
  while (!queue.empty()) {
    Elem x = queue.front();
    queue.pop_front();
    for (Elem s : gens) {
      Elem y = g.mul(x, s);
      if (!set.contains(y)) {
        set.insert(y);
        queue.push_back(y);
      }
    }
  }
  return Subgroup(g, std::move(set));
}

Subgroup normal_closure(const FiniteGroup& g, const std::vector<Elem>& gens) {
  std::vector<Elem> conjugates;
  ElemSet seen(g.order());
  for (Elem s : gens)
    for (Elem x = 0; x < g.order(); ++x) {
      Elem c = g.conj(s, x);
      if (!seen.contains(c)) {
        seen.insert(c);
        conjugates.push_back(c);
      }
    }
  return generate(g, conjugates);
}

Subgroup whole(const FiniteGroup& g) {
  ElemSet s(g.order());
  for (Elem e = 0; e < g.order(); ++e) s.insert(e);
  return Subgroup(g, std::move(s));
}

Subgroup trivial(const FiniteGroup& g) {
  ElemSet s(g.order());
  s.insert(0);
  return Subgroup(g, std::move(s));
}

Subgroup conjugate(const FiniteGroup& g, const Subgroup& h, Elem by) {
  ElemSet s(g.order());
  for (Elem e : h.elements()) s.insert(g.conj(e, by));
  return Subgroup(g, std::move(s));
}

Subgroup normalizer(const FiniteGroup& g, const Subgroup& h) {
  auto gens = generating_set(g, h.elements());
  ElemSet s(g.order());
  for (Elem x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (Elem e : gens)
      if (!h.contains(g.conj(e, x))) {
        ok = false;
        break;
      }
    if (ok) s.insert(x);
  }
  return Subgroup(g, std::move(s));
}

Subgroup centralizer(const FiniteGroup& g, const Subgroup& h) {
  auto gens = generating_set(g, h.elements());
  ElemSet s(g.order());
  for (Elem x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (Elem e : gens)
      if (g.mul(e, x) != g.mul(x, e)) {
        ok = false;
        break;
      }
    if (ok) s.insert(x);
  }
  return Subgroup(g, std::move(s));
}

Subgroup center(const FiniteGroup& g) { return centralizer(g, whole(g)); }

Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& h, const Subgroup& k) {
  auto hg = generating_set(g, h.elements());
  auto kg = generating_set(g, k.elements());
  // [H,K] is normalized by H and K; closing the generator commutators under
  // conjugation by H and K gives the full subgroup.
  std::vector<Elem> comms;
  for (Elem a : h.elements())
    for (Elem b : kg) comms.push_back(g.comm(a, b));
  for (Elem a : hg)
    for (Elem b : k.elements()) comms.push_back(g.comm(a, b));
  Subgroup c = generate(g, comms);
  // close under conjugation by H and K
  while (true) {
    std::vector<Elem> extra;
    for (Elem e : c.elements()) {
      for (Elem a : hg)
        if (!c.contains(g.conj(e, a))) extra.push_back(g.conj(e, a));
      for (Elem b : kg)
        if (!c.contains(g.conj(e, b))) extra.push_back(g.conj(e, b));
    }
    if (extra.empty()) break;
    auto all = c.elements();
    all.insert(all.end(), extra.begin(), extra.end());
    c = generate(g, all);
  }
  return c;
}

Subgroup derived_subgroup(const FiniteGroup& g) {
  std::vector<Elem> gens;
  for (const auto& [n, e] : g.labels()) gens.push_back(e);
  if (gens.empty())
    for (Elem e = 0; e < g.order(); ++e) gens.push_back(e);
  std::vector<Elem> comms;
  for (Elem a : gens)
    for (Elem b : gens) comms.push_back(g.comm(a, b));
  return normal_closure(g, comms);
}

bool is_metabelian(const FiniteGroup& g) { return derived_subgroup(g).is_abelian(); }

// --------------------------------------------------------------- Quotient

namespace {

std::vector<std::pair<std::string, Elem>> map_labels(
    const std::vector<std::pair<std::string, Elem>>& labels, const std::vector<Elem>& proj) {
  std::vector<std::pair<std::string, Elem>> out;
  for (const auto& [n, e] : labels) out.emplace_back(n, proj[e]);
  return out;
}

}  // namespace

Quotient quotient(const FiniteGroup& g, const Subgroup& normal, const std::string& given) {
  if (!normal.is_normal()) throw Error(ErrorCode::Internal, "quotient by a non-normal subgroup");
  const std::size_t n = g.order();
  std::vector<Elem> proj(n, ~Elem{0});
  std::vector<Elem> reps;
  for (Elem a = 0; a < n; ++a) {
    if (proj[a] != ~Elem{0}) continue;
    Elem c = static_cast<Elem>(reps.size());
    reps.push_back(a);
    for (Elem m : normal.elements()) proj[g.mul(a, m)] = c;
  }
  const std::size_t q = reps.size();
  std::vector<std::uint16_t> table(q * q);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j)
      table[i * q + j] = static_cast<std::uint16_t>(proj[g.mul(reps[i], reps[j])]);
  std::vector<std::string> names;
  for (Elem r : reps) names.push_back(g.element_name(r));
  std::string spec = "(" + g.spec() + "/";
  bool first = true;
  auto gens = generating_set(g, normal.elements());
  for (Elem e : gens) {
    spec += (first ? "" : ",") + g.element_name(e);
    first = false;
  }
  if (gens.empty()) spec += "1";
  spec += ")";
  if (!given.empty()) spec = given;
  auto group = std::make_shared<FiniteGroup>(q, std::move(table), map_labels(g.labels(), proj),
                                             std::move(names), spec);
  return Quotient{group, std::move(proj), normal};
}

Quotient quotient(const FiniteGroup& g, const std::vector<Elem>& normal_gens,
                  const std::string& spec) {
  return quotient(g, normal_closure(g, normal_gens), spec);
}

// -------------------------------------------------------------- subgroups

namespace {

struct SubgroupIndex {
  std::unordered_map<std::size_t, std::vector<std::size_t>> buckets;
  std::vector<Subgroup> list;

  bool insert(Subgroup s) {
    auto& bucket = buckets[s.set().hash()];
    for (auto idx : bucket)
      if (list[idx] == s) return false;
    bucket.push_back(list.size());
    list.push_back(std::move(s));
    return true;
  }
};

std::vector<Elem> cyclic_generators(const FiniteGroup& g) {
  // one generator per cyclic subgroup
  std::vector<Elem> gens;
  ElemSet covered(g.order());
  std::vector<Elem> by_order(g.order());
  std::iota(by_order.begin(), by_order.end(), 0);
  std::stable_sort(by_order.begin(), by_order.end(), [&](Elem a, Elem b) {
    return g.element_order(a) > g.element_order(b);
  });
  std::vector<ElemSet> seen;
  std::unordered_map<std::size_t, std::vector<ElemSet>> buckets;
  for (Elem e : by_order) {
    if (e == 0) continue;
    ElemSet s(g.order());
    Elem x = 0;
    do {
      x = g.mul(x, e);
      s.insert(x);
    } while (x != 0);
    auto& b = buckets[s.hash()];
    if (std::find(b.begin(), b.end(), s) != b.end()) continue;
    b.push_back(s);
    gens.push_back(e);
  }
  return gens;
}

Subgroup join(const FiniteGroup& g, const Subgroup& s, Elem extra) {
  ElemSet set = s.set();
  std::vector<Elem> members = s.elements();
  std::vector<Elem> gens = generating_set(g, members);
  gens.push_back(extra);
  std::deque<Elem> queue(members.begin(), members.end());
  while (!queue.empty()) {
    Elem x = queue.front();
    queue.pop_front();
    for (Elem t : gens) {
      Elem y = g.mul(x, t);
      if (!set.contains(y)) {
        set.insert(y);
        queue.push_back(y);
      }
    }
  }
  return Subgroup(g, std::move(set));
}

void sort_subgroups(std::vector<Subgroup>& list) {
  std::sort(list.begin(), list.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
}

}  // namespace

std::vector<Subgroup> subgroups(const FiniteGroup& g, std::size_t cap) {
  if (g.order() > cap)
    throw Error(ErrorCode::SizeCapExceeded, "subgroup enumeration limited to order " +
                                                std::to_string(cap));
  auto cyc = cyclic_generators(g);
  SubgroupIndex index;
  index.insert(trivial(g));
  for (std::size_t i = 0; i < index.list.size(); ++i) {
    for (Elem c : cyc) {
      if (index.list[i].contains(c)) continue;
      index.insert(join(g, index.list[i], c));
    }
  }
  sort_subgroups(index.list);
  return index.list;
}

std::vector<Subgroup> normal_subgroups(const FiniteGroup& g) {
  // conjugacy class representatives
  std::vector<Elem> reps;
  ElemSet seen(g.order());
  for (Elem a = 0; a < g.order(); ++a) {
    if (seen.contains(a)) continue;
    reps.push_back(a);
    for (Elem x = 0; x < g.order(); ++x) seen.insert(g.conj(a, x));
  }
  SubgroupIndex index;
  index.insert(trivial(g));
  for (std::size_t i = 0; i < index.list.size(); ++i) {
    for (Elem c : reps) {
      if (index.list[i].contains(c)) continue;
      auto gens = generating_set(g, index.list[i].elements());
      gens.push_back(c);
      index.insert(normal_closure(g, gens));
    }
  }
  sort_subgroups(index.list);
  return index.list;
}

// ------------------------------------------------------------- group data

std::optional<HamiltonianSplit> hamiltonian_split(const FiniteGroup& g) {
  if (g.is_abelian()) return std::nullopt;
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem x = 0; x < g.order(); ++x) {
      Elem c = g.conj(a, x);
      // c must be a power of a
      bool found = false;
      Elem p = 0;
      do {
        if (p == c) {
          found = true;
          break;
        }
        p = g.mul(p, a);
      } while (p != 0);
      if (!found) return std::nullopt;
    }
  std::vector<Elem> two, odd;
  for (Elem a = 0; a < g.order(); ++a) {
    int o = g.element_order(a);
    if ((o & (o - 1)) == 0) two.push_back(a);
    if (o % 2 == 1) odd.push_back(a);
  }
  std::optional<Subgroup> q8;
  for (Elem a : two) {
    if (g.element_order(a) != 4) continue;
    for (Elem b : two)
      if (g.element_order(b) == 4 && g.mul(a, b) != g.mul(b, a)) {
        q8 = generate(g, {a, b});
        break;
      }
    if (q8) break;
  }
  if (!q8 || q8->order() != 8) throw Error(ErrorCode::Internal, "Hamiltonian group without Q8");
  std::vector<Elem> egens;
  Subgroup e = trivial(g);
  std::size_t two_order = two.size();
  for (Elem a : two) {
    if (q8->order() * e.order() == two_order) break;
    if (g.element_order(a) != 2) continue;
    // a not in Q8*E
    bool inside = false;
    for (Elem q : q8->elements()) {
      if (e.contains(g.mul(g.inv(q), a))) {
        inside = true;
        break;
      }
    }
    if (inside) continue;
    egens.push_back(a);
    e = generate(g, egens);
  }
  return HamiltonianSplit{*q8, e, generate(g, odd)};
}

GroupData group_data(const FiniteGroup& g) {
  Subgroup der = derived_subgroup(g);
  return GroupData{center(g),       der,           g.exponent(), g.is_abelian(),
                   der.is_abelian(), hamiltonian_split(g)};
}

Fingerprint fingerprint(const FiniteGroup& g) {
  Fingerprint f{g.order(), g.exponent(), center(g).order(), derived_subgroup(g).order(), {}};
  f.order_spectrum.assign(static_cast<std::size_t>(f.exponent) + 1, 0);
  for (Elem a = 0; a < g.order(); ++a) f.order_spectrum[g.element_order(a)]++;
  return f;
}

}  // namespace schurkit::groups
