#include <mpfr.h>

#include "cyclofield/field.hpp"

namespace schurkit::cyclo {

namespace {

constexpr mpfr_prec_t kStartPrecision = 64;
constexpr mpfr_prec_t kMaxPrecision = 4096;

// RAII wrapper for a single MPFR value.
class Real {
 public:
  explicit Real(mpfr_prec_t p) { mpfr_init2(v_, p); }
  ~Real() { mpfr_clear(v_); }
  Real(const Real&) = delete;
  Real& operator=(const Real&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

// Sign of sum c_i cos(2 pi a i / k), or 0 if undecided at precision p.
// Every cos and product is within a few ulps; the bound below covers the
// accumulated error with margin.
int sign_at(const CycloElement& x, long a, mpfr_prec_t p) {
  const long k = x.conductor();
  const auto& c = x.coeffs();
  Real sum(p), term(p), angle(p), coef(p), abs_sum(p), bound(p);
  mpfr_set_zero(sum.get(), 1);
  mpfr_set_ui(abs_sum.get(), 1, MPFR_RNDU);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    long e = num::mod(a * static_cast<long>(i), k);
    mpfr_const_pi(angle.get(), MPFR_RNDN);
    mpfr_mul_si(angle.get(), angle.get(), 2 * e, MPFR_RNDN);
    mpfr_div_si(angle.get(), angle.get(), k, MPFR_RNDN);
    mpfr_cos(term.get(), angle.get(), MPFR_RNDN);
    mpfr_set_q(coef.get(), c[i].get_mpq_t(), MPFR_RNDN);
    mpfr_mul(term.get(), term.get(), coef.get(), MPFR_RNDN);
    mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
    mpfr_abs(coef.get(), coef.get(), MPFR_RNDU);
    mpfr_add(abs_sum.get(), abs_sum.get(), coef.get(), MPFR_RNDU);
  }
  // B = 2^{-p+6} (n+1) (sum |c_i| + 1)
  mpfr_mul_ui(bound.get(), abs_sum.get(), static_cast<unsigned long>(c.size() + 1), MPFR_RNDU);
  mpfr_mul_2si(bound.get(), bound.get(), -static_cast<long>(p) + 6, MPFR_RNDU);
  mpfr_abs(term.get(), sum.get(), MPFR_RNDN);
  if (mpfr_cmp(term.get(), bound.get()) <= 0) return 0;
  return mpfr_sgn(sum.get()) > 0 ? 1 : -1;
}

}  // namespace

std::vector<int> real_embedding_signs(const CycloElement& x, const AbelianField& f) {
  if (!f.totally_real())
    throw Error(ErrorCode::PreconditionViolated, f.spec() + " has no real embeddings");
  if (!f.contains(x)) throw Error(ErrorCode::NotInField, x.to_string() + " is not in " + f.spec());
  if (x.is_zero()) throw Error(ErrorCode::ZeroElement, "sign of zero");
  const long m = num::lcm(f.conductor(), x.conductor());
  std::vector<int> signs;
  for (long rep : f.embedding_representatives()) {
    // a unit a mod m with a = rep mod conductor(f)
    long a = rep;
    while (num::gcd(a, m) != 1) a += f.conductor();
    a = num::mod(a, x.conductor() == 1 ? 1 : x.conductor());
    int s = 0;
    for (mpfr_prec_t p = kStartPrecision; p <= kMaxPrecision && s == 0; p *= 2) s = sign_at(x, a, p);
    if (s == 0) throw Error(ErrorCode::Internal, "sign undecided at maximum precision");
    signs.push_back(s);
  }
  return signs;
}

}  // namespace schurkit::cyclo
