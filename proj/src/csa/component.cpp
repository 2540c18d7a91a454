#include "csa/component.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "csa/hilbert.hpp"

namespace schurkit::csa {

namespace {

const AbelianField* abelian(const FieldRef& f) { return std::get_if<AbelianField>(&f); }

// Rational entries become squarefree integers; others get minimal conductor.
CycloElement reduce(const CycloElement& x) {
  CycloElement r = cyclo::reduce_conductor(x);
  if (r.is_rational()) return CycloElement::rational(mpq_class(square_class(r.rational_value())));
  return r;
}

bool is_one(const CycloElement& x) { return x.is_rational() && x.rational_value() == 1; }

std::string join(const std::vector<long>& v) {
  std::string s;
  for (long x : v) s += (s.empty() ? "" : ",") + (x == kInfinity ? std::string("inf") : std::to_string(x));
  return s;
}

}  // namespace

const char* division_name(Division d) {
  switch (d) {
    case Division::Division: return "division";
    case Division::Split: return "split";
    default: return "undetermined";
  }
}

const char* body_kind_name(BodyKind k) {
  switch (k) {
    case BodyKind::Field: return "field";
    case BodyKind::Quaternion: return "quaternion";
    default: return "crossed";
  }
}

long SimpleComponent::dimension_over_q() const {
  return matrix_size * matrix_size * body_degree * body_degree * cyclo::degree(center);
}

Division SimpleComponent::division() const {
  switch (kind) {
    case BodyKind::Field: return Division::Division;
    case BodyKind::Quaternion: return symbol->division;
    default: return Division::Undetermined;
  }
}

long local_degree(const AbelianField& f, long place) {
  const long k = f.conductor();
  if (k == 1) return 1;
  if (place == kInfinity) return f.totally_real() ? 1 : 2;
  const long p = place;
  long pe = 1, m = k;
  while (m % p == 0) {
    m /= p;
    pe *= p;
  }
  // decomposition group: inertia (u = 1 mod m) and the Frobenius
  // (u = 1 mod p^e, u = p mod m), together with H
  std::vector<long> gens(f.subgroup().begin(), f.subgroup().end());
  for (long u = 1; u < k; ++u) {
    if (num::gcd(u, k) != 1) continue;
    if (u % m == 1 % m) gens.push_back(u);
    if (u % pe == 1 % pe && u % m == p % m) gens.push_back(u);
  }
  std::set<long> span{1};
  std::vector<long> todo{1};
  while (!todo.empty()) {
    long x = todo.back();
    todo.pop_back();
    for (long gnr : gens) {
      long y = num::mod(x * gnr, k);
      if (span.insert(y).second) todo.push_back(y);
    }
  }
  return static_cast<long>(span.size() / f.subgroup().size());
}

namespace {

struct RootMultiple {
  long d;  // squarefree part of the rational factor
  long m, j;  // times zeta_m^j
};

// x = r zeta_m^j with r rational, if it has that form.
std::optional<RootMultiple> as_root_multiple(const CycloElement& x) {
  const long k = x.conductor();
  if (k > 4096) return std::nullopt;
  const long m = k % 2 == 1 ? 2 * k : k;
  for (long j = 0; j < m; ++j) {
    CycloElement t = x * CycloElement::zeta(m, num::mod(-j, m));
    if (t.is_rational()) return RootMultiple{square_class(t.rational_value()).get_si(), m, j};
  }
  return std::nullopt;
}

// (a, b / F) with a a squarefree integer and b = r zeta_m^j splits iff a is a
// local norm from L = F(sqrt b) everywhere. L is abelian, so the local norm
// test is an Artin symbol: at p the symbol of a on L_w/F_v is that of
// a^[F_v:Q_p] on L_w/Q_p.
Division norm_test(const AbelianField& f, long a, const RootMultiple& b) {
  const AbelianField qd = AbelianField::quadratic(b.d);
  const long n = num::lcm(num::lcm(f.conductor(), 2 * b.m), qd.conductor());
  auto chi = [&](long u) {
    if (qd.is_rational()) return 1;
    return std::binary_search(qd.subgroup().begin(), qd.subgroup().end(), u % qd.conductor()) ? 1
                                                                                                : -1;
  };
  // sigma_u(sqrt b) / sqrt b = chi_d(u) zeta_2m^(j(u-1))
  std::set<long> hl;
  const auto hf = f.subgroup_at(n);
  for (long u : hf) {
    const long e = num::mod(b.j * (u - 1), 2 * b.m);
    if ((e == 0 && chi(u) == 1) || (e == b.m && chi(u) == -1)) hl.insert(u);
  }
  if (hl.size() == hf.size()) return Division::Split;
  // real places: a < 0 is a norm only if complex conjugation fixes sqrt b
  if (f.totally_real() && a < 0 && !hl.count(n - 1)) return Division::Division;
  std::set<long> primes;
  for (long p : num::prime_divisors(n)) primes.insert(p);
  for (long p : num::prime_divisors(std::labs(a))) primes.insert(p);
  for (long p : primes) {
    const long fv = local_degree(f, p);
    long pe = 1, rest = n;
    while (rest % p == 0) {
      rest /= p;
      pe *= p;
    }
    const long v = (a % p == 0 ? 1 : 0) * fv;
    const long unit = a % p == 0 ? a / p : a;
    // symbol class: unit^-fv on the p-part, Frobenius^v on the rest
    const long on_p = num::inverse_mod(num::pow_mod(num::mod(unit, pe), fv, pe), pe);
    const long on_rest = num::pow_mod(p, v, rest);
    long c = 0;
    for (long x = on_rest % rest; x < n; x += rest)
      if (num::mod(x, pe) == num::mod(on_p, pe)) {
        c = x;
        break;
      }
    if (!hl.count(c)) return Division::Division;
  }
  return Division::Split;
}

}  // namespace

Division is_division(const QuaternionSymbol& q) {
  const CycloElement a = reduce(q.a), b = reduce(q.b);
  if (is_one(a) || is_one(b)) return Division::Split;
  const bool rational = a.is_rational() && b.is_rational();
  if (const auto* f = abelian(q.center)) {
    if (f->is_rational()) {
      return ramified_places_q(a.rational_value(), b.rational_value()).empty() ? Division::Split
                                                                               : Division::Division;
    }
    // ramified at a real place (in particular totally definite)
    if (!ramification_profile(q).ramified_real_places.empty()) return Division::Division;
    if (auto d = f->quadratic_d(); d && *d < 0 && rational) {
      std::multiset<mpz_class> ab{square_class(a.rational_value()), square_class(b.rational_value())};
      if (ab == std::multiset<mpz_class>{-1, -1})
        return num::mod(*d, 8) == 1 ? Division::Division : Division::Split;
      if (ab == std::multiset<mpz_class>{-3, -1})
        return num::mod(*d, 3) == 1 ? Division::Division : Division::Split;
    }
    if (rational) {
      // a place of Q stays ramified in F exactly when its local degree is odd
      for (long v : ramified_places_q(a.rational_value(), b.rational_value()))
        if (local_degree(*f, v) % 2 == 1) return Division::Division;
      return Division::Split;
    }
    for (int swap = 0; swap < 2; ++swap) {
      const CycloElement& x = swap ? b : a;
      const CycloElement& y = swap ? a : b;
      if (!x.is_rational()) continue;
      if (auto r = as_root_multiple(y))
        return norm_test(*f, square_class(x.rational_value()).get_si(), *r);
    }
    return Division::Undetermined;
  }
  // polynomial center: a and b are rational
  const mpq_class ra = a.rational_value(), rb = b.rational_value();
  if (ramified_places_q(ra, rb).empty()) return Division::Split;
  if (ra < 0 && rb < 0 && cyclo::signature(q.center).r1 > 0) return Division::Division;
  return Division::Undetermined;
}

RamificationProfile ramification_profile(const QuaternionSymbol& q) {
  RamificationProfile r;
  const auto sig = cyclo::signature(q.center);
  if (const auto* f = abelian(q.center)) {
    if (f->totally_real()) {
      const auto reps = f->embedding_representatives();
      const auto sa = cyclo::real_embedding_signs(q.a, *f), sb = cyclo::real_embedding_signs(q.b, *f);
      for (std::size_t i = 0; i < reps.size(); ++i)
        if (sa[i] < 0 && sb[i] < 0) r.ramified_real_places.push_back(reps[i]);
    }
  } else if (q.a.rational_value() < 0 && q.b.rational_value() < 0) {
    for (long i = 0; i < sig.r1; ++i) r.ramified_real_places.push_back(i);
  }
  r.unramified_infinite = sig.r1 - static_cast<long>(r.ramified_real_places.size()) + sig.r2;
  return r;
}

RamificationProfile ramification_profile(const SimpleComponent& c) {
  if (c.kind == BodyKind::Quaternion) return ramification_profile(*c.symbol);
  const auto sig = cyclo::signature(c.center);
  return {{}, sig.r1 + sig.r2};
}

SimpleComponent matrix_component(long n, FieldRef center) {
  SimpleComponent c;
  c.matrix_size = n;
  c.center = std::move(center);
  return c;
}

SimpleComponent quaternion_component(long n, FieldRef center, CycloElement a, CycloElement b) {
  if (a.is_zero() || b.is_zero()) throw Error(ErrorCode::ZeroElement, "quaternion entry is zero");
  if (const auto* f = abelian(center)) {
    if (!f->contains(a) || !f->contains(b))
      throw Error(ErrorCode::NotInField, "quaternion entries must lie in " + f->spec());
  } else if (!a.is_rational() || !b.is_rational()) {
    throw Error(ErrorCode::Unsupported, "polynomial centers take rational quaternion entries");
  }
  QuaternionSymbol q{center, reduce(a), reduce(b)};
  q.division = is_division(q);
  if (q.division == Division::Split) return matrix_component(2 * n, std::move(center));
  SimpleComponent c;
  c.matrix_size = n;
  c.center = std::move(center);
  c.kind = BodyKind::Quaternion;
  c.symbol = std::move(q);
  c.body_degree = 2;
  return c;
}

QuaternionSymbol quaternion_from_cyclic(long k, long h, long j) {
  h = num::mod(h, k);
  if (k <= 2 || h == 1 || num::mod(h * h, k) != 1)
    throw Error(ErrorCode::ActionNotOrder2, "action " + std::to_string(h) + " mod " +
                                                std::to_string(k) + " does not have order 2");
  if (num::mod(j * h - j, k) != 0)
    throw Error(ErrorCode::TwistingNotCentral, "zeta_" + std::to_string(k) + "^" +
                                                   std::to_string(j) + " is not fixed by the action");
  const CycloElement z = CycloElement::zeta(k);
  const CycloElement s = z - z.galois(h);
  QuaternionSymbol q{AbelianField(k, {h}), reduce(s * s), reduce(CycloElement::zeta(k, j))};
  const auto& f = std::get<AbelianField>(q.center);
  // split certificates: b or -ab is a square in F
  const CycloElement rb = CycloElement::zeta(2 * k, j);
  const CycloElement rab = s.lift(4 * k) * CycloElement::zeta(4 * k, k + 2 * j);
  if (f.contains(rb) || f.contains(rab)) {
    q.division = Division::Split;
  } else {
    q.division = is_division(q);
  }
  return q;
}

SimpleComponent recognize_component(const grpalg::CrossedProductData& d) {
  if (d.order == 1) return matrix_component(d.n, AbelianField::cyclotomic(d.k));
  if (d.order == 2) {
    auto q = quaternion_from_cyclic(d.k, d.action[1], d.twisting[1][1]);
    if (q.division == Division::Split) return matrix_component(2 * d.n, q.center);
    SimpleComponent c;
    c.matrix_size = d.n;
    c.center = q.center;
    c.kind = BodyKind::Quaternion;
    c.symbol = std::move(q);
    c.body_degree = 2;
    return c;
  }
  AbelianField f(d.k, d.action);
  const long m = static_cast<long>(d.order);
  // a trivial cocycle gives End over the fixed field, a matrix algebra
  bool trivial = true;
  for (const auto& row : d.twisting)
    for (long t : row) trivial = trivial && num::mod(t, d.k) == 0;
  if (trivial) return matrix_component(d.n * m, f);
  SimpleComponent c;
  c.matrix_size = d.n;
  c.center = f;
  c.kind = BodyKind::CrossedHigher;
  c.body_degree = m;
  return c;
}

std::optional<std::vector<long>> finite_ramification(const SimpleComponent& c) {
  if (c.kind == BodyKind::Field) return std::vector<long>{};
  if (c.kind == BodyKind::CrossedHigher) return std::nullopt;
  const auto& q = *c.symbol;
  const auto* f = abelian(q.center);
  if (!f || !q.a.is_rational() || !q.b.is_rational()) return std::nullopt;
  std::vector<long> out;
  for (long v : ramified_places_q(q.a.rational_value(), q.b.rational_value()))
    if (v != kInfinity && local_degree(*f, v) % 2 == 1) out.push_back(v);
  return out;
}

std::string catalog_key(const SimpleComponent& c) {
  std::ostringstream s;
  s << cyclo::field_spec(c.center) << "|n=" << c.matrix_size << '|' << body_kind_name(c.kind)
    << "|deg=" << c.body_degree << "|ram=" << join(ramification_profile(c).ramified_real_places)
    << "|div=" << division_name(c.division()) << "|fin=";
  auto fin = finite_ramification(c);
  s << (fin ? join(*fin) : "?");
  return s.str();
}

bool catalog_equivalent(const SimpleComponent& a, const SimpleComponent& b) {
  return catalog_key(a) == catalog_key(b);
}

SimpleComponent extend_scalars(const SimpleComponent& c, const FieldRef& k) {
  switch (c.kind) {
    case BodyKind::Field: return matrix_component(c.matrix_size, k);
    case BodyKind::Quaternion:
      return quaternion_component(c.matrix_size, k, c.symbol->a, c.symbol->b);
    default: {
      SimpleComponent r = c;
      r.center = k;
      return r;
    }
  }
}

std::string describe(const SimpleComponent& c) {
  std::string body;
  const std::string f = cyclo::field_spec(c.center);
  switch (c.kind) {
    case BodyKind::Field: body = f; break;
    case BodyKind::Quaternion: {
      const auto& q = *c.symbol;
      if (q.a == CycloElement::rational(-1) && q.b == CycloElement::rational(-1))
        body = "H(" + f + ")";
      else
        body = "(" + q.a.to_string() + ", " + q.b.to_string() + " / " + f + ")";
      break;
    }
    default: body = "crossed(" + std::to_string(c.body_degree) + ", " + f + ")";
  }
  return c.matrix_size == 1 ? body : "M_" + std::to_string(c.matrix_size) + "(" + body + ")";
}

}  // namespace schurkit::csa
