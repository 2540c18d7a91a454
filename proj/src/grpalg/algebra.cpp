#include "grpalg/algebra.hpp"

#include <algorithm>
#include <set>

namespace schurkit::grpalg {

GroupAlgebraElement GroupAlgebraElement::one(const FiniteGroup& g) { return basis(g, g.identity()); }

GroupAlgebraElement GroupAlgebraElement::basis(const FiniteGroup& g, Elem e) {
  GroupAlgebraElement x(g);
  x.terms_.emplace_back(e, 1);
  return x;
}

mpq_class GroupAlgebraElement::coefficient(Elem e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const auto& t, Elem v) { return t.first < v; });
  return it != terms_.end() && it->first == e ? it->second : mpq_class(0);
}

GroupAlgebraElement GroupAlgebraElement::from_dense(const FiniteGroup& g,
                                                    std::vector<mpq_class>& dense) {
  GroupAlgebraElement x(g);
  for (Elem e = 0; e < dense.size(); ++e)
    if (dense[e] != 0) x.terms_.emplace_back(e, std::move(dense[e]));
  return x;
}

GroupAlgebraElement GroupAlgebraElement::operator+(const GroupAlgebraElement& o) const {
  GroupAlgebraElement r(*g_);
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
      r.terms_.push_back(terms_[i++]);
    } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      mpq_class c = terms_[i].second + o.terms_[j].second;
      if (c != 0) r.terms_.emplace_back(terms_[i].first, c);
      ++i;
      ++j;
    }
  }
  return r;
}

GroupAlgebraElement GroupAlgebraElement::operator-(const GroupAlgebraElement& o) const {
  return *this + o.scaled(-1);
}

GroupAlgebraElement GroupAlgebraElement::scaled(const mpq_class& r) const {
  GroupAlgebraElement x(*g_);
  if (r == 0) return x;
  x.terms_ = terms_;
  for (auto& t : x.terms_) t.second *= r;
  return x;
}

GroupAlgebraElement GroupAlgebraElement::operator*(const GroupAlgebraElement& o) const {
  // integer convolution over a common denominator
  mpz_class da = 1, db = 1;
  for (const auto& t : terms_) mpz_lcm(da.get_mpz_t(), da.get_mpz_t(), t.second.get_den_mpz_t());
  for (const auto& t : o.terms_) mpz_lcm(db.get_mpz_t(), db.get_mpz_t(), t.second.get_den_mpz_t());
  std::vector<mpz_class> na, nb;
  for (const auto& t : terms_) na.push_back(t.second.get_num() * (da / t.second.get_den()));
  for (const auto& t : o.terms_) nb.push_back(t.second.get_num() * (db / t.second.get_den()));
  std::vector<mpz_class> acc(g_->order());
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    Elem a = terms_[i].first;
    for (std::size_t j = 0; j < o.terms_.size(); ++j)
      mpz_addmul(acc[g_->mul(a, o.terms_[j].first)].get_mpz_t(), na[i].get_mpz_t(),
                 nb[j].get_mpz_t());
  }
  mpz_class den = da * db;
  GroupAlgebraElement r(*g_);
  for (Elem e = 0; e < acc.size(); ++e) {
    if (acc[e] == 0) continue;
    mpq_class c(acc[e], den);
    c.canonicalize();
    r.terms_.emplace_back(e, std::move(c));
  }
  return r;
}

GroupAlgebraElement GroupAlgebraElement::conjugated(Elem x) const {
  std::vector<mpq_class> dense(g_->order());
  for (const auto& t : terms_) dense[g_->conj(t.first, x)] = t.second;
  return from_dense(*g_, dense);
}

GroupAlgebraElement GroupAlgebraElement::right_mul(Elem x) const {
  std::vector<mpq_class> dense(g_->order());
  for (const auto& t : terms_) dense[g_->mul(t.first, x)] = t.second;
  return from_dense(*g_, dense);
}

GroupAlgebraElement GroupAlgebraElement::left_mul(Elem x) const {
  std::vector<mpq_class> dense(g_->order());
  for (const auto& t : terms_) dense[g_->mul(x, t.first)] = t.second;
  return from_dense(*g_, dense);
}

bool GroupAlgebraElement::is_central() const {
  for (const auto& [name, x] : g_->labels())
    if (!commutes_with(x)) return false;
  if (g_->labels().empty())
    for (Elem x = 0; x < g_->order(); ++x)
      if (!commutes_with(x)) return false;
  return true;
}

GroupAlgebraElement hat(const FiniteGroup& g, const Subgroup& s) {
  std::vector<mpq_class> dense(g.order());
  mpq_class c(1, s.order());
  for (Elem e : s.elements()) dense[e] = c;
  return GroupAlgebraElement::from_dense(g, dense);
}

namespace {

// Minimal subgroups of M properly containing L (L normal in M): <L, y> for
// y of prime order modulo L, deduplicated.
std::vector<Subgroup> minimal_over(const FiniteGroup& g, const Subgroup& m, const Subgroup& l) {
  std::vector<Subgroup> out;
  std::set<groups::ElemSet> seen;
  for (Elem y : m.elements()) {
    if (l.contains(y)) continue;
    // order of y modulo L
    long o = 1;
    Elem p = y;
    while (!l.contains(p)) {
      p = g.mul(p, y);
      ++o;
    }
    if (num::factorize(o).size() != 1 || num::factorize(o)[0].second != 1) continue;
    std::vector<Elem> gens = l.elements();
    gens.push_back(y);
    Subgroup s = groups::generate(g, gens);
    if (seen.insert(s.set()).second) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

GroupAlgebraElement epsilon(const FiniteGroup& g, const Subgroup& m, const Subgroup& l) {
  if (!l.subgroup_of(m)) throw Error(ErrorCode::NotNested, "L is not contained in M");
  for (Elem x : m.elements())
    for (Elem y : l.elements())
      if (!l.contains(g.conj(y, x))) throw Error(ErrorCode::NotNested, "L is not normal in M");
  if (m.order() == l.order()) return hat(g, m);
  GroupAlgebraElement lh = hat(g, l);
  GroupAlgebraElement r = lh;
  for (const auto& s : minimal_over(g, m, l)) r = r * (lh - hat(g, s));
  return r;
}

GroupAlgebraElement e_central(const FiniteGroup& g, const Subgroup& m, const Subgroup& l) {
  GroupAlgebraElement eps = epsilon(g, m, l);
  // conjugation by the stabilizer of (M, L) fixes epsilon
  Subgroup nm = groups::normalizer(g, m), nl = groups::normalizer(g, l);
  groups::ElemSet both(g.order());
  for (Elem e : nm.elements())
    if (nl.contains(e)) both.insert(e);
  Subgroup t(g, both);
  std::vector<GroupAlgebraElement> conjugates;
  groups::ElemSet covered(g.order());
  for (Elem x = 0; x < g.order(); ++x) {
    if (covered.contains(x)) continue;
    for (Elem s : t.elements()) covered.insert(g.mul(s, x));
    GroupAlgebraElement c = eps.conjugated(x);
    if (std::find(conjugates.begin(), conjugates.end(), c) == conjugates.end())
      conjugates.push_back(std::move(c));
  }
  GroupAlgebraElement sum(g);
  for (const auto& c : conjugates) sum = sum + c;
  return sum;
}

}  // namespace schurkit::grpalg
