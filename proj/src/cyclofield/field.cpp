#include "cyclofield/field.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace schurkit::cyclo {

namespace {

long res(long a, long m) { return m == 1 ? 1 : num::mod(a, m); }

std::vector<long> units(long k) {
  if (k == 1) return {1};
  std::vector<long> out;
  for (long a = 1; a < k; ++a)
    if (num::gcd(a, k) == 1) out.push_back(a);
  return out;
}

std::vector<long> close_subgroup(long k, const std::vector<long>& gens) {
  std::set<long> h{res(1, k)};
  std::vector<long> queue{res(1, k)};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (long g : gens) {
      long v = k == 1 ? 1 : num::mod(queue[i] * g, k);
      if (h.insert(v).second) queue.push_back(v);
    }
  return {h.begin(), h.end()};
}

}  // namespace

AbelianField::AbelianField(long k, const std::vector<long>& gens) {
  if (k < 1) throw Error(ErrorCode::InvalidSpec, "field conductor must be positive");
  for (long g : gens)
    if (num::gcd(g, k) != 1)
      throw Error(ErrorCode::InvalidSpec, std::to_string(g) + " is not a unit modulo " +
                                              std::to_string(k));
  std::vector<long> h = close_subgroup(k, gens);
  k_ = k;
  h_ = h;
  for (long m : num::divisors(k)) {
    bool ok = true;
    for (long a : units(k))
      if (res(a, m) == res(1, m) && !std::binary_search(h.begin(), h.end(), a)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    std::set<long> reduced;
    for (long a : h) reduced.insert(res(a, m));
    k_ = m;
    h_.assign(reduced.begin(), reduced.end());
    break;
  }
}

AbelianField AbelianField::quadratic(long d) {
  if (d == 0 || !num::is_squarefree(d))
    throw Error(ErrorCode::NotSquarefree, std::to_string(d) + " is not squarefree");
  if (d == 1) return rationals();
  long disc = num::mod(d, 4) == 1 ? d : 4 * d;
  long k = std::labs(disc);
  std::vector<long> h;
  for (long a : units(k))
    if (num::kronecker(disc, a) == 1) h.push_back(a);
  return AbelianField(k, h);
}

AbelianField AbelianField::generated_by(const CycloElement& x) {
  long k = x.conductor();
  std::vector<long> h;
  for (long a : units(k))
    if (k == 1 || x.galois(a) == x) h.push_back(a);
  return AbelianField(k, h);
}

bool AbelianField::totally_real() const {
  return k_ <= 2 || std::binary_search(h_.begin(), h_.end(), k_ - 1);
}

Signature AbelianField::signature() const {
  return totally_real() ? Signature{degree(), 0} : Signature{0, degree() / 2};
}

std::vector<long> AbelianField::subgroup_at(long m) const {
  if (m % k_ != 0) throw Error(ErrorCode::Internal, "subgroup_at: conductor does not divide");
  std::vector<long> out;
  for (long a : units(m))
    if (std::binary_search(h_.begin(), h_.end(), res(a, k_))) out.push_back(a);
  return out;
}

std::vector<long> AbelianField::embedding_representatives() const {
  std::vector<long> reps;
  std::set<long> covered;
  for (long a : units(k_)) {
    if (covered.count(a)) continue;
    reps.push_back(a);
    for (long h : h_) covered.insert(res(a * h, k_));
  }
  return reps;
}

bool AbelianField::contains(const CycloElement& x) const {
  long m = num::lcm(k_, x.conductor());
  CycloElement y = x.lift(m);
  for (long h : subgroup_at(m))
    if (y.galois(h) != y) return false;
  return true;
}

CycloElement AbelianField::primitive_element() const {
  if (k_ == 1) return CycloElement::rational(1);
  auto orbit_sum = [&](const CycloElement& y) {
    CycloElement s(k_);
    for (long h : h_) s = s + y.galois(h);
    return s;
  };
  for (long j = 1; j < k_; ++j) {
    CycloElement t = orbit_sum(CycloElement::zeta(k_, j));
    if (generated_by(t) == *this) return t;
  }
  for (long i = 1; i < k_; ++i)
    for (long j = i + 1; j < k_; ++j)
      for (long c = 2; c <= 4; ++c) {
        CycloElement t = orbit_sum(CycloElement::zeta(k_, i) + mpq_class(c) * CycloElement::zeta(k_, j));
        if (generated_by(t) == *this) return t;
      }
  throw Error(ErrorCode::Internal, "no primitive element found");
}

std::optional<long> AbelianField::quadratic_d() const {
  if (degree() != 2) return std::nullopt;
  auto poly = minimal_polynomial(primitive_element());
  mpq_class disc = poly[1] * poly[1] - 4 * poly[0];
  return num::squarefree_part(disc);
}

std::string AbelianField::spec() const {
  if (k_ == 1) return "Q";
  if (degree() == 2) return "Q(sqrt," + std::to_string(*quadratic_d()) + ")";
  if (h_.size() == 1) return "Q(zeta," + std::to_string(k_) + ")";
  if (h_.size() == 2 && h_[1] == k_ - 1) return "Q(eta," + std::to_string(k_) + ")";
  std::string s = "fixed(" + std::to_string(k_) + ";";
  for (std::size_t i = 0; i < h_.size(); ++i) s += (i ? "," : "") + std::to_string(h_[i]);
  return s + ")";
}

AbelianField compositum(const AbelianField& a, const AbelianField& b) {
  long m = num::lcm(a.conductor(), b.conductor());
  auto ha = a.subgroup_at(m), hb = b.subgroup_at(m);
  std::vector<long> both;
  std::set_intersection(ha.begin(), ha.end(), hb.begin(), hb.end(), std::back_inserter(both));
  return AbelianField(m, both);
}

AbelianField intersect(const AbelianField& a, const AbelianField& b) {
  long m = num::lcm(a.conductor(), b.conductor());
  auto ha = a.subgroup_at(m), hb = b.subgroup_at(m);
  ha.insert(ha.end(), hb.begin(), hb.end());
  return AbelianField(m, ha);
}

bool contains(const AbelianField& a, const AbelianField& b) {
  long m = num::lcm(a.conductor(), b.conductor());
  auto ha = a.subgroup_at(m), hb = b.subgroup_at(m);
  return std::includes(hb.begin(), hb.end(), ha.begin(), ha.end());
}

// ----------------------------------------------------------- polynomials

namespace {

using QPoly = std::vector<mpq_class>;

void trim(QPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

QPoly rem(QPoly a, const QPoly& b) {
  trim(a);
  while (a.size() >= b.size() && !(a.size() == 1 && a[0] == 0)) {
    if (a.size() == 1) return {mpq_class(0)};
    mpq_class f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

QPoly derivative(const QPoly& p) {
  QPoly d(p.size() > 1 ? p.size() - 1 : 1);
  for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<long>(i);
  return d;
}

bool is_zero_poly(const QPoly& p) { return p.size() == 1 && p[0] == 0; }

int sgn(const mpq_class& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

}  // namespace

long count_real_roots(const std::vector<mpq_class>& poly) {
  QPoly p = poly;
  trim(p);
  if (p.size() <= 1) return 0;
  std::vector<QPoly> seq{p, derivative(p)};
  while (!is_zero_poly(seq.back()) && seq.back().size() > 1) {
    QPoly r = rem(seq[seq.size() - 2], seq.back());
    for (auto& c : r) c = -c;
    seq.push_back(r);
  }
  if (is_zero_poly(seq.back())) seq.pop_back();
  auto changes = [&](bool at_plus) {
    long count = 0;
    int last = 0;
    for (const auto& q : seq) {
      int s = sgn(q.back());
      if (!at_plus && (q.size() - 1) % 2 == 1) s = -s;
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  };
  return changes(false) - changes(true);
}

namespace {

using FpPoly = std::vector<long>;

void trim_fp(FpPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

FpPoly fp_mod(FpPoly a, const FpPoly& b, long p) {
  trim_fp(a);
  long inv = num::inverse_mod(b.back(), p);
  while (a.size() >= b.size() && !(a.size() == 1 && a[0] == 0)) {
    if (a.size() == 1) return {0};
    long f = a.back() * inv % p;
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = num::mod(a[shift + i] - f * b[i], p);
    a.pop_back();
    trim_fp(a);
  }
  return a;
}

FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m, long p) {
  FpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return fp_mod(r, m, p);
}

FpPoly fp_gcd(FpPoly a, FpPoly b, long p) {
  trim_fp(a);
  trim_fp(b);
  while (!(b.size() == 1 && b[0] == 0)) {
    FpPoly r = fp_mod(a, b, p);
    a = b;
    b = r;
  }
  return a;
}

bool irreducible_mod(const std::vector<mpz_class>& f, long p) {
  const std::size_t n = f.size() - 1;
  FpPoly fp(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    mpz_class r = f[i] % p;
    if (r < 0) r += p;
    fp[i] = r.get_si();
  }
  if (fp[n] == 0) return false;
  FpPoly d(n, 0);
  for (std::size_t i = 1; i <= n; ++i) d[i - 1] = fp[i] * static_cast<long>(i) % p;
  trim_fp(d);
  if (d.size() == 1 && d[0] == 0) return false;
  if (fp_gcd(fp, d, p).size() > 1) return false;
  FpPoly h{0, 1};
  h = fp_mod(h, fp, p);
  for (std::size_t i = 1; i <= n / 2; ++i) {
    // h <- h^p mod f
    FpPoly acc{1};
    FpPoly base = h;
    long e = p;
    while (e > 0) {
      if (e & 1) acc = fp_mulmod(acc, base, fp, p);
      base = fp_mulmod(base, base, fp, p);
      e >>= 1;
    }
    h = acc;
    FpPoly diff = h;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = num::mod(diff[1] - 1, p);
    trim_fp(diff);
    if (diff.size() == 1 && diff[0] == 0) return false;
    if (fp_gcd(fp, diff, p).size() > 1) return false;
  }
  return true;
}

mpz_class eval(const std::vector<mpz_class>& f, long x) {
  mpz_class r = 0;
  for (std::size_t i = f.size(); i-- > 0;) r = r * x + f[i];
  return r;
}

std::vector<long> signed_divisors(long v) {
  std::vector<long> out;
  for (long d : num::divisors(std::labs(v))) {
    out.push_back(d);
    out.push_back(-d);
  }
  return out;
}

// Kronecker's method: looks for an integer factor of degree d.
bool has_factor_of_degree(const std::vector<mpz_class>& f, std::size_t d) {
  std::vector<std::pair<long, long>> pts;  // (x, f(x))
  for (long r = 0; r <= 40; ++r)
    for (long x : {r, -r}) {
      if (r == 0 && x == 0 && !pts.empty()) continue;
      mpz_class v = eval(f, x);
      if (v == 0 || !v.fits_slong_p() || std::labs(v.get_si()) > 1000000) continue;
      if (std::any_of(pts.begin(), pts.end(), [&](auto& q) { return q.first == x; })) continue;
      pts.push_back({x, v.get_si()});
    }
  if (pts.size() < d + 1) throw Error(ErrorCode::Unsupported, "Kronecker method: no sample points");
  std::sort(pts.begin(), pts.end(), [](auto& a, auto& b) {
    return num::divisors(std::labs(a.second)).size() < num::divisors(std::labs(b.second)).size();
  });
  pts.resize(d + 1);
  std::vector<std::vector<long>> choices;
  for (std::size_t i = 0; i <= d; ++i) {
    auto divs = signed_divisors(pts[i].second);
    if (i == 0) divs.erase(std::remove_if(divs.begin(), divs.end(), [](long v) { return v < 0; }), divs.end());
    choices.push_back(divs);
  }
  QPoly fq(f.begin(), f.end());
  std::vector<std::size_t> idx(d + 1, 0);
  while (true) {
    // Lagrange interpolation through (x_i, v_i)
    QPoly g(d + 1);
    for (std::size_t i = 0; i <= d; ++i) {
      QPoly basis{1};
      mpq_class denom = 1;
      for (std::size_t j = 0; j <= d; ++j) {
        if (j == i) continue;
        QPoly next(basis.size() + 1);
        for (std::size_t t = 0; t < basis.size(); ++t) {
          next[t + 1] += basis[t];
          next[t] -= basis[t] * pts[j].first;
        }
        basis = next;
        denom *= pts[i].first - pts[j].first;
      }
      mpq_class scale = mpq_class(choices[i][idx[i]]) / denom;
      for (std::size_t t = 0; t < basis.size(); ++t) g[t] += basis[t] * scale;
    }
    bool integral = g.back() != 0;
    for (auto& c : g) {
      c.canonicalize();
      if (c.get_den() != 1) integral = false;
    }
    if (integral && is_zero_poly(rem(fq, g))) return true;
    std::size_t k = 0;
    while (k <= d && ++idx[k] == choices[k].size()) idx[k++] = 0;
    if (k > d) break;
  }
  return false;
}

}  // namespace

bool is_irreducible(const std::vector<mpz_class>& f) {
  const std::size_t n = f.size() - 1;
  if (n == 0) return false;
  if (n == 1) return true;
  if (f[0] == 0) return false;
  if (f[0].fits_slong_p())
    for (long d : signed_divisors(f[0].get_si()))
      if (eval(f, d) == 0) return false;
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L, 41L, 43L, 47L, 53L,
                 59L, 61L, 67L, 71L, 73L, 79L, 83L, 89L, 97L})
    if (irreducible_mod(f, p)) return true;
  if (n <= 3) return true;
  if (n > 6)
    throw Error(ErrorCode::Unsupported, "irreducibility undecided for degree " + std::to_string(n));
  for (std::size_t d = 2; d <= n / 2; ++d)
    if (has_factor_of_degree(f, d)) return false;
  return true;
}

PolyField::PolyField(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) {
  if (c_.size() < 2 || c_.back() != 1)
    throw Error(ErrorCode::InvalidSpec, "poly(...) must be monic of degree >= 1");
  if (!is_irreducible(c_)) throw Error(ErrorCode::ReduciblePolynomial, spec() + " is reducible");
  real_roots_ = count_real_roots(QPoly(c_.begin(), c_.end()));
}

Signature PolyField::signature() const { return {real_roots_, (degree() - real_roots_) / 2}; }

std::string PolyField::spec() const {
  std::string s = "poly(";
  for (std::size_t i = 0; i < c_.size(); ++i) s += (i ? "," : "") + c_[i].get_str();
  return s + ")";
}

long degree(const FieldRef& f) {
  return std::visit([](const auto& x) { return x.degree(); }, f);
}

Signature signature(const FieldRef& f) {
  return std::visit([](const auto& x) { return x.signature(); }, f);
}

std::string field_spec(const FieldRef& f) {
  return std::visit([](const auto& x) { return x.spec(); }, f);
}

const AbelianField& require_abelian(const FieldRef& f, const char* what) {
  if (const auto* a = std::get_if<AbelianField>(&f)) return *a;
  throw Error(ErrorCode::Unsupported, std::string(what) + " is not available for poly(...) fields");
}

// ------------------------------------------------------------ field DSL

namespace {

std::vector<long> parse_ints(const std::string& s, std::size_t offset, char sep) {
  std::vector<long> out;
  std::size_t i = 0;
  while (i <= s.size()) {
    std::size_t j = s.find(sep, i);
    if (j == std::string::npos) j = s.size();
    std::string tok = s.substr(i, j - i);
    if (tok.empty()) throw ParseError(offset + i, "expected an integer");
    std::size_t used = 0;
    long v;
    try {
      v = std::stol(tok, &used);
    } catch (const std::exception&) {
      throw ParseError(offset + i, "expected an integer");
    }
    if (used != tok.size()) throw ParseError(offset + i + used, "expected an integer");
    out.push_back(v);
    i = j + 1;
  }
  return out;
}

}  // namespace

FieldRef parse_field(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s == "Q") return AbelianField();
  auto args = [&](const std::string& head) -> std::optional<std::string> {
    if (s.rfind(head, 0) != 0) return std::nullopt;
    if (s.back() != ')') throw ParseError(s.size(), "expected ')'");
    return s.substr(head.size(), s.size() - head.size() - 1);
  };
  auto single = [&](const std::string& head) -> std::optional<long> {
    auto a = args(head);
    if (!a) return std::nullopt;
    auto v = parse_ints(*a, head.size(), ',');
    if (v.size() != 1) throw ParseError(head.size(), "expected one integer");
    return v[0];
  };
  if (auto d = single("Q(sqrt,")) return AbelianField::quadratic(*d);
  if (auto n = single("Q(zeta,")) {
    if (*n < 1) throw Error(ErrorCode::InvalidSpec, "Q(zeta,n) needs n >= 1");
    return AbelianField::cyclotomic(*n);
  }
  if (auto n = single("Q(eta,")) {
    if (*n < 1) throw Error(ErrorCode::InvalidSpec, "Q(eta,n) needs n >= 1");
    return *n <= 2 ? AbelianField() : AbelianField::real_cyclotomic(*n);
  }
  if (auto a = args("fixed(")) {
    auto semi = a->find(';');
    if (semi == std::string::npos) throw ParseError(6, "expected ';' in fixed(k;h,...)");
    long k = parse_ints(a->substr(0, semi), 6, ',').at(0);
    std::vector<long> h = parse_ints(a->substr(semi + 1), 7 + semi, ',');
    if (k < 1) throw Error(ErrorCode::InvalidSpec, "fixed(k;...) needs k >= 1");
    if (k <= 2) return AbelianField();
    for (auto& x : h) x = num::mod(x, k);
    return AbelianField(k, h);
  }
  if (auto a = args("poly(")) {
    std::vector<mpz_class> c;
    std::size_t i = 0;
    while (i <= a->size()) {
      std::size_t j = a->find(',', i);
      if (j == std::string::npos) j = a->size();
      mpz_class v;
      if (v.set_str(a->substr(i, j - i), 10) != 0) throw ParseError(5 + i, "expected an integer");
      c.push_back(v);
      i = j + 1;
    }
    if (c.size() < 2 || c.back() != 1)
      throw Error(ErrorCode::InvalidSpec, "poly(...) must be monic of degree >= 1");
    if (!is_irreducible(c)) throw Error(ErrorCode::ReduciblePolynomial, s + " is reducible");
    if (c.size() == 2) return AbelianField();
    if (c.size() == 3) {
      mpz_class disc = c[1] * c[1] - 4 * c[0];
      return AbelianField::quadratic(num::squarefree_part(mpq_class(disc)));
    }
    return PolyField(c);
  }
  throw ParseError(0, "unknown field '" + s + "'");
}

// ----------------------------------------------------- norm verification

bool verify_norm_solution(long k, const AbelianField& f, const CycloElement& a,
                          const CycloElement& x, const CycloElement& y) {
  AbelianField big = AbelianField::cyclotomic(k);
  if (!contains(big, f) || big.degree() != 2 * f.degree())
    throw Error(ErrorCode::NotQuadraticExtension,
                "Q(zeta_" + std::to_string(k) + ") is not quadratic over " + f.spec());
  if (!f.contains(a)) throw Error(ErrorCode::NotInField, "a is not in " + f.spec());
  if (!f.contains(x) || !f.contains(y)) return false;
  long h = 1;
  for (long u : f.subgroup_at(k))
    if (u != 1) h = u;
  long m = k;
  for (long d : num::divisors(k))
    if (!f.contains(CycloElement::zeta(d))) {
      m = d;
      break;
    }
  CycloElement diff = CycloElement::zeta(m) - CycloElement::zeta(m, h);
  CycloElement rho = diff * diff;
  return a * x * x + rho * y * y == CycloElement::rational(1);
}

}  // namespace schurkit::cyclo
