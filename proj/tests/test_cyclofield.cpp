#include "doctest.h"

#include <cmath>
#include <complex>

#include "cyclofield/field.hpp"

using namespace schurkit;
using namespace schurkit::cyclo;

namespace {

std::vector<mpq_class> poly(std::initializer_list<long> c) {
  std::vector<mpq_class> out;
  for (long v : c) out.emplace_back(v);
  return out;
}

// Floating value at zeta_k -> exp(2 pi i a / k); oracle for exact arithmetic.
std::complex<double> numeric(const CycloElement& x, long a = 1) {
  std::complex<double> s = 0;
  const long k = x.conductor();
  for (std::size_t i = 0; i < x.coeffs().size(); ++i)
    s += x.coeffs()[i].get_d() * std::polar(1.0, 2 * M_PI * a * static_cast<double>(i) / k);
  return s;
}

// Deterministic pseudo-random element.
CycloElement sample(long k, unsigned seed) {
  CycloElement x(k);
  for (long j = 0; j < k; ++j) {
    seed = seed * 1103515245u + 12345u;
    long c = static_cast<long>((seed >> 16) % 7) - 3;
    if (c) x = x + mpq_class(c) * CycloElement::zeta(k, j);
  }
  return x;
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<long>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<long>{1, 0, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
  CHECK(cyclotomic_polynomial(15).size() == 9);
}

TEST_CASE("ring axioms against floating evaluation") {
  for (long k : {3L, 4L, 5L, 8L, 12L, 15L, 24L}) {
    CAPTURE(k);
    for (unsigned s = 1; s <= 6; ++s) {
      CycloElement x = sample(k, s), y = sample(k, s + 100);
      CHECK(std::abs(numeric(x * y) - numeric(x) * numeric(y)) < 1e-9);
      CHECK(std::abs(numeric(x + y) - numeric(x) - numeric(y)) < 1e-9);
      if (!x.is_zero()) CHECK(x * x.inverse() == CycloElement::rational(1));
      for (long a = 1; a < k; ++a) {
        if (num::gcd(a, k) != 1) continue;
        CHECK((x * y).galois(a) == x.galois(a) * y.galois(a));
        CHECK(std::abs(numeric(x.galois(a)) - numeric(x, a)) < 1e-9);
      }
    }
  }
}

TEST_CASE("lifting and conductor reduction") {
  CycloElement i = CycloElement::zeta(4);
  CHECK(i.lift(12) == CycloElement::zeta(12, 3));
  CHECK(reduce_conductor(CycloElement::zeta(12, 3)).conductor() == 4);
  CHECK(reduce_conductor(CycloElement::zeta(12, 4) + CycloElement::zeta(12, 8)).conductor() == 1);
  CHECK(CycloElement::zeta(6) == -CycloElement::zeta(3, 2));
}

TEST_CASE("eta and lambda") {
  for (long n = 3; n <= 24; ++n) {
    CAPTURE(n);
    auto el = eta_lambda(n);
    CHECK(el.eta * el.eta - el.lambda2 == CycloElement::rational(4));
    auto real = AbelianField::real_cyclotomic(n);
    CHECK(real.contains(el.eta));
    CHECK(real.contains(el.lambda2));
    for (int s : real_embedding_signs(el.lambda2, real)) CHECK(s == -1);
  }
  CHECK(eta_lambda(4).eta.is_zero());
  CHECK(eta_lambda(4).lambda2 == CycloElement::rational(-4));
  CHECK(eta_lambda(3).eta == CycloElement::rational(-1));
  CHECK(eta_lambda(3).lambda2 == CycloElement::rational(-3));
  CHECK(eta_lambda(8).eta * eta_lambda(8).eta == CycloElement::rational(2));
  CHECK(eta_lambda(8).lambda2 == CycloElement::rational(-2));
}

TEST_CASE("minimal polynomials") {
  CHECK(minimal_polynomial(CycloElement::zeta(4)) == poly({1, 0, 1}));
  CHECK(minimal_polynomial(eta_lambda(8).eta) == poly({-2, 0, 1}));
  CycloElement period = CycloElement::zeta(7, 1) + CycloElement::zeta(7, 2) + CycloElement::zeta(7, 4);
  auto p = minimal_polynomial(period);
  REQUIRE(p.size() == 3);
  CHECK(num::squarefree_part(p[1] * p[1] - 4 * p[0]) == -7);
  for (long k : {5L, 9L, 12L}) {
    CycloElement x = sample(k, 7);
    for (long a = 1; a < k; ++a)
      if (num::gcd(a, k) == 1) CHECK(minimal_polynomial(x.galois(a)) == minimal_polynomial(x));
  }
}

TEST_CASE("field DSL and canonical form") {
  auto i = require_abelian(parse_field("Q(sqrt,-1)"), "test");
  CHECK(i.conductor() == 4);
  CHECK(i.subgroup() == std::vector<long>{1});
  auto r2 = require_abelian(parse_field("Q(eta,8)"), "test");
  CHECK(r2.conductor() == 8);
  CHECK(r2.subgroup() == std::vector<long>{1, 7});
  CHECK(r2 == AbelianField::quadratic(2));
  CHECK(require_abelian(parse_field("Q(zeta,3)"), "t").subgroup() == std::vector<long>{1});
  CHECK(require_abelian(parse_field("Q(zeta,6)"), "t") == AbelianField::cyclotomic(3));
  CHECK(require_abelian(parse_field("fixed(8;3)"), "t") == AbelianField::quadratic(-2));
  CHECK(require_abelian(parse_field("poly(1,0,1)"), "t") == AbelianField::quadratic(-1));
  CHECK(parse_field("Q").index() == 0);
  CHECK_THROWS_AS(parse_field("Q(sqrt,8)"), Error);
  CHECK_THROWS_AS(parse_field("Q(root,2)"), ParseError);
  try {
    parse_field("poly(-1,0,0,0,1)");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ReduciblePolynomial);
  }
  for (const char* s : {"Q", "Q(sqrt,-7)", "Q(zeta,8)", "Q(eta,16)", "Q(zeta,15)", "fixed(15;4)"}) {
    CAPTURE(s);
    auto f = parse_field(s);
    CHECK(require_abelian(parse_field(field_spec(f)), "t") == require_abelian(f, "t"));
  }
}

TEST_CASE("quadratic fields round-trip") {
  for (long d = -30; d <= 30; ++d) {
    if (d == 0 || d == 1 || !num::is_squarefree(d)) continue;
    CAPTURE(d);
    auto f = AbelianField::quadratic(d);
    CHECK(f.degree() == 2);
    CHECK(f.signature() == (d > 0 ? Signature{2, 0} : Signature{0, 1}));
    CHECK(f.quadratic_d() == d);
  }
}

TEST_CASE("signatures") {
  CHECK(AbelianField::cyclotomic(4).signature() == Signature{0, 1});
  CHECK(AbelianField::real_cyclotomic(16).signature() == Signature{4, 0});
  CHECK(signature(parse_field("poly(-2,0,0,1)")) == Signature{1, 1});
  CHECK(signature(parse_field("poly(-2,0,0,0,1)")) == Signature{2, 1});
  CHECK(signature(parse_field("poly(1,-3,0,1)")) == Signature{3, 0});
  CHECK(count_real_roots(poly({-1, 0, 1})) == 2);
}

TEST_CASE("irreducibility") {
  auto z = [](std::initializer_list<long> c) {
    std::vector<mpz_class> v;
    for (long x : c) v.emplace_back(x);
    return v;
  };
  CHECK(is_irreducible(z({-2, 0, 0, 1})));
  CHECK(is_irreducible(z({1, 0, 0, 0, 1})));          // Phi_8, reducible mod every p
  CHECK_FALSE(is_irreducible(z({4, 0, 0, 0, 1})));    // (x^2+2x+2)(x^2-2x+2)
  CHECK_FALSE(is_irreducible(z({1, 0, 0, 0, 0, 0, 1}) ));  // x^6+1 = (x^2+1)(...)
  CHECK(is_irreducible(z({1, 1, 1, 1, 1, 1, 1})));     // Phi_7
}

TEST_CASE("compositum, intersection and containment") {
  auto i = AbelianField::quadratic(-1), r2 = AbelianField::quadratic(2);
  CHECK(compositum(i, r2) == AbelianField::cyclotomic(8));
  CHECK(contains(AbelianField::cyclotomic(8), r2));
  CHECK_FALSE(contains(r2, AbelianField::cyclotomic(8)));
  const std::vector<AbelianField> fields{AbelianField(), i, r2, AbelianField::quadratic(-3),
                                         AbelianField::cyclotomic(8), AbelianField::cyclotomic(12),
                                         AbelianField::real_cyclotomic(16)};
  for (const auto& f : fields) {
    CHECK(compositum(f, AbelianField()) == f);
    CHECK(intersect(f, AbelianField()) == AbelianField());
    CHECK(intersect(f, f) == f);
    for (const auto& g : fields) {
      if (contains(f, g)) CHECK(f.degree() % g.degree() == 0);
      CHECK(contains(compositum(f, g), f));
      CHECK(contains(f, intersect(f, g)));
    }
  }
}

TEST_CASE("real embedding signs") {
  auto r5 = AbelianField::real_cyclotomic(5);
  CHECK(real_embedding_signs(eta_lambda(5).lambda2, r5) == std::vector<int>{-1, -1});
  CHECK(real_embedding_signs(CycloElement::rational(1), AbelianField::real_cyclotomic(16)) ==
        std::vector<int>{1, 1, 1, 1});
  auto r2 = AbelianField::quadratic(2);
  CHECK(real_embedding_signs(eta_lambda(8).eta, r2) == std::vector<int>{1, -1});
  CHECK_THROWS_AS(real_embedding_signs(CycloElement(8), r2), Error);
  CHECK_THROWS_AS(real_embedding_signs(CycloElement::zeta(8), r2), Error);
  // tiny but nonzero: forces precision doubling
  CycloElement tiny = eta_lambda(8).eta - CycloElement::rational(mpq_class("665857/470832"));
  CHECK(real_embedding_signs(tiny, r2).size() == 2);
}

TEST_CASE("norm solutions") {
  auto i = AbelianField::quadratic(-1);
  CycloElement z4 = CycloElement::zeta(4);
  CHECK(verify_norm_solution(12, i, z4, CycloElement::rational(1) + z4, z4));
  CHECK_FALSE(verify_norm_solution(12, i, z4, CycloElement::rational(1), z4));
  CHECK(verify_norm_solution(12, i, CycloElement::rational(1), CycloElement::rational(1),
                             CycloElement::rational(0)));
  CHECK_FALSE(verify_norm_solution(4, AbelianField(), CycloElement::rational(-1),
                                   CycloElement::rational(1), CycloElement::rational(1)));
  CHECK_THROWS_AS(verify_norm_solution(8, AbelianField(), CycloElement::rational(1),
                                       CycloElement::rational(1), CycloElement::rational(0)),
                  Error);
}

TEST_CASE("element text round trip") {
  for (long k : {1L, 3L, 4L, 8L, 12L, 15L})
    for (unsigned seed = 1; seed < 20; ++seed) {
      CycloElement x = sample(k, seed);
      CAPTURE(x.to_string());
      CHECK(parse_element(x.to_string()) == x);
    }
  CHECK(parse_element("1/2*z3 - 1/2") == mpq_class(1, 2) * CycloElement::zeta(3) - CycloElement::rational(mpq_class(1, 2)));
  CHECK(parse_element("-z4") == -CycloElement::zeta(4));
  CHECK(parse_element("z4^2") == CycloElement::rational(-1));
  CHECK_THROWS_AS(parse_element("3 +"), ParseError);
  CHECK_THROWS_AS(parse_element("y4"), ParseError);
  CHECK_THROWS_AS(parse_element("1/0"), ParseError);
}
