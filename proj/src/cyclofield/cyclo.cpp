#include "cyclofield/cyclo.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <mutex>

#include "linalg.hpp"

namespace schurkit::cyclo {

namespace {

struct Context {
  long k;
  long phi;
  std::vector<long> poly;               // Phi_k, ascending, monic
  std::vector<std::vector<long>> reduce;  // zeta^m in the power basis, 0 <= m < k
};

std::vector<long> poly_div_exact(std::vector<long> num, const std::vector<long>& den) {
  // den monic
  const std::size_t dn = den.size() - 1;
  std::vector<long> q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    long c = num[i];
    q[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return q;
}

std::mutex& context_mutex() {
  static std::mutex m;
  return m;
}

std::map<long, std::shared_ptr<const Context>>& contexts() {
  static std::map<long, std::shared_ptr<const Context>> c;
  return c;
}

std::map<long, std::vector<long>>& polys() {
  static std::map<long, std::vector<long>> p;
  return p;
}

// caller holds the mutex
const std::vector<long>& cyclotomic_locked(long k) {
  auto it = polys().find(k);
  if (it != polys().end()) return it->second;
  std::vector<long> p(static_cast<std::size_t>(k) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(k)] = 1;
  for (long d : num::divisors(k))
    if (d < k) p = poly_div_exact(p, cyclotomic_locked(d));
  return polys().emplace(k, std::move(p)).first->second;
}

const Context& context(long k) {
  if (k < 1) throw Error(ErrorCode::Internal, "conductor must be positive");
  std::lock_guard<std::mutex> lock(context_mutex());
  auto it = contexts().find(k);
  if (it != contexts().end()) return *it->second;
  auto ctx = std::make_shared<Context>();
  ctx->k = k;
  ctx->poly = cyclotomic_locked(k);
  ctx->phi = static_cast<long>(ctx->poly.size()) - 1;
  const std::size_t phi = static_cast<std::size_t>(ctx->phi);
  ctx->reduce.assign(static_cast<std::size_t>(k), std::vector<long>(phi, 0));
  for (long m = 0; m < k; ++m) {
    auto& v = ctx->reduce[static_cast<std::size_t>(m)];
    if (static_cast<std::size_t>(m) < phi) {
      v[static_cast<std::size_t>(m)] = 1;
      continue;
    }
    // zeta^m = zeta * zeta^{m-1}
    const auto& prev = ctx->reduce[static_cast<std::size_t>(m - 1)];
    long top = prev[phi - 1];
    for (std::size_t i = phi - 1; i > 0; --i) v[i] = prev[i - 1];
    v[0] = 0;
    for (std::size_t i = 0; i < phi; ++i) v[i] -= top * ctx->poly[i];
  }
  contexts().emplace(k, ctx);
  return *ctx;
}

long phi_of(long k) { return context(k).phi; }

// Accumulates c * zeta^m into acc (length phi).
void add_power(std::vector<mpq_class>& acc, const Context& ctx, long m, const mpq_class& c) {
  const auto& v = ctx.reduce[static_cast<std::size_t>(num::mod(m, ctx.k))];
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i]) acc[i] += c * v[i];
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(long k) { return context(k).poly; }

CycloElement::CycloElement(long k) : k_(k), c_(static_cast<std::size_t>(phi_of(k))) {}

CycloElement::CycloElement(long k, const mpq_class& r) : CycloElement(k) { c_[0] = r; }

CycloElement CycloElement::zeta(long k, long power) {
  CycloElement x(k);
  add_power(x.c_, context(k), power, 1);
  return x;
}

bool CycloElement::is_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

bool CycloElement::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

mpq_class CycloElement::rational_value() const {
  if (!is_rational()) throw Error(ErrorCode::NotInField, "element is not rational");
  return c_[0];
}

CycloElement CycloElement::lift(long m) const {
  if (m == k_) return *this;
  if (m % k_ != 0) throw Error(ErrorCode::Internal, "lift to a non-multiple conductor");
  const Context& ctx = context(m);
  CycloElement x(m);
  long step = m / k_;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) add_power(x.c_, ctx, static_cast<long>(i) * step, c_[i]);
  return x;
}

CycloElement CycloElement::galois(long a) const {
  if (num::gcd(a, k_) != 1) throw Error(ErrorCode::Internal, "Galois exponent not a unit");
  const Context& ctx = context(k_);
  CycloElement x(k_);
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) add_power(x.c_, ctx, static_cast<long>(i) * a, c_[i]);
  return x;
}

CycloElement CycloElement::operator-() const {
  CycloElement x = *this;
  for (auto& c : x.c_) c = -c;
  return x;
}

CycloElement operator+(const CycloElement& a, const CycloElement& b) {
  long m = num::lcm(a.k_, b.k_);
  CycloElement x = a.lift(m);
  CycloElement y = b.lift(m);
  for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
  return x;
}

CycloElement operator-(const CycloElement& a, const CycloElement& b) { return a + (-b); }

CycloElement operator*(const CycloElement& a, const CycloElement& b) {
  long m = num::lcm(a.k_, b.k_);
  CycloElement x = a.lift(m);
  CycloElement y = b.lift(m);
  const Context& ctx = context(m);
  const std::size_t n = x.c_.size();
  std::vector<mpq_class> prod(2 * n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (x.c_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (y.c_[j] != 0) prod[i + j] += x.c_[i] * y.c_[j];
  }
  CycloElement r(m);
  for (std::size_t e = 0; e < prod.size(); ++e)
    if (prod[e] != 0) add_power(r.c_, ctx, static_cast<long>(e), prod[e]);
  return r;
}

CycloElement operator*(const mpq_class& r, const CycloElement& b) {
  CycloElement x = b;
  for (auto& c : x.c_) c *= r;
  return x;
}

bool operator==(const CycloElement& a, const CycloElement& b) {
  long m = num::lcm(a.k_, b.k_);
  return a.lift(m).c_ == b.lift(m).c_;
}

CycloElement CycloElement::inverse() const {
  if (is_zero()) throw Error(ErrorCode::ZeroElement, "inverse of zero");
  const std::size_t n = c_.size();
  // column j = this * zeta^j
  Matrix m(n, std::vector<mpq_class>(n));
  for (std::size_t j = 0; j < n; ++j) {
    CycloElement col = *this * zeta(k_, static_cast<long>(j));
    for (std::size_t i = 0; i < n; ++i) m[i][j] = col.c_[i];
  }
  std::vector<mpq_class> rhs(n);
  rhs[0] = 1;
  auto sol = solve(m, rhs);
  if (!sol) throw Error(ErrorCode::Internal, "multiplication matrix singular");
  return CycloElement(k_, std::move(*sol));
}

CycloElement CycloElement::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycloElement result(k_, mpq_class(1)), base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

std::string CycloElement::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    std::string coef = c_[i].get_str();
    bool neg = coef[0] == '-';
    if (neg) coef = coef.substr(1);
    std::string term;
    if (i == 0) {
      term = coef;
    } else {
      term = coef == "1" ? "" : coef + "*";
      term += "z" + std::to_string(k_) + (i > 1 ? "^" + std::to_string(i) : "");
    }
    if (out.empty())
      out = (neg ? "-" : "") + term;
    else
      out += (neg ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

CycloElement parse_element(const std::string& text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  };
  auto integer = [&]() -> long {
    skip();
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw ParseError(start, "expected an integer in element '" + text + "'");
    return std::stol(text.substr(start, pos - start));
  };
  auto zeta_power = [&]() -> CycloElement {
    ++pos;  // 'z'
    const long k = integer();
    if (k < 1) throw ParseError(pos, "conductor must be positive");
    long e = 1;
    skip();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      e = integer();
    }
    return CycloElement::zeta(k, e);
  };
  auto term = [&]() -> CycloElement {
    skip();
    if (pos < text.size() && text[pos] == 'z') return zeta_power();
    mpq_class r(integer());
    skip();
    if (pos < text.size() && text[pos] == '/') {
      ++pos;
      const long d = integer();
      if (d == 0) throw ParseError(pos, "zero denominator");
      r /= d;
    }
    skip();
    if (pos < text.size() && text[pos] == '*') {
      ++pos;
      skip();
      if (pos >= text.size() || text[pos] != 'z') throw ParseError(pos, "expected z<k> after '*'");
      return r * zeta_power();
    }
    return CycloElement::rational(r);
  };
  skip();
  bool neg = false;
  if (pos < text.size() && text[pos] == '-') {
    neg = true;
    ++pos;
  }
  CycloElement out = term();
  if (neg) out = -out;
  for (skip(); pos < text.size(); skip()) {
    const char op = text[pos];
    if (op != '+' && op != '-') throw ParseError(pos, "unexpected character in element");
    ++pos;
    CycloElement t = term();
    out = op == '+' ? out + t : out - t;
  }
  return out;
}

CycloElement reduce_conductor(const CycloElement& x) {
  const long k = x.conductor();
  for (long m : num::divisors(k)) {
    if (m == k) return x;
    // x must be fixed by every unit a = 1 mod m
    bool fixed = true;
    for (long a = 1 + m; a < k + 1 && fixed; a += m)
      if (num::gcd(a, k) == 1 && x.galois(a) != x) fixed = false;
    if (!fixed) continue;
    const std::size_t rows = x.coeffs().size();
    const std::size_t cols = static_cast<std::size_t>(phi_of(m));
    Matrix mat(rows, std::vector<mpq_class>(cols));
    for (std::size_t j = 0; j < cols; ++j) {
      CycloElement b = CycloElement::zeta(m, static_cast<long>(j)).lift(k);
      for (std::size_t i = 0; i < rows; ++i) mat[i][j] = b.coeffs()[i];
    }
    auto sol = solve(mat, x.coeffs());
    if (!sol) continue;
    CycloElement r(m);
    for (std::size_t j = 0; j < cols; ++j) r = r + (*sol)[j] * CycloElement::zeta(m, static_cast<long>(j));
    return r;
  }
  return x;
}

EtaLambda eta_lambda(long n) {
  if (n < 3) throw Error(ErrorCode::PreconditionViolated, "eta/lambda need n >= 3");
  CycloElement z = CycloElement::zeta(n, 1), zi = CycloElement::zeta(n, -1);
  CycloElement lambda = z - zi;
  return {z + zi, lambda * lambda};
}

std::vector<mpq_class> minimal_polynomial(const CycloElement& x) {
  const std::size_t n = x.coeffs().size();
  std::vector<std::vector<mpq_class>> powers;
  CycloElement p(x.conductor(), mpq_class(1));
  for (std::size_t d = 0; d <= n; ++d) {
    // is p in the span of the previous powers?
    if (!powers.empty()) {
      Matrix mat(n, std::vector<mpq_class>(powers.size()));
      for (std::size_t j = 0; j < powers.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) mat[i][j] = powers[j][i];
      auto sol = solve(mat, p.coeffs());
      if (sol) {
        std::vector<mpq_class> poly(d + 1);
        for (std::size_t j = 0; j < d; ++j) poly[j] = -(*sol)[j];
        poly[d] = 1;
        return poly;
      }
    }
    powers.push_back(p.coeffs());
    p = p * x;
  }
  throw Error(ErrorCode::Internal, "minimal polynomial not found");
}

}  // namespace schurkit::cyclo
