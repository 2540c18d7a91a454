#include "doctest.h"

#include <algorithm>
#include <chrono>
#include <set>
#include <string>

#include "groups/dsl.hpp"
#include "grpalg/shoda.hpp"

using namespace schurkit;
using namespace schurkit::groups;
using namespace schurkit::grpalg;

namespace {

Subgroup gen(const FiniteGroup& g, std::initializer_list<const char*> words) {
  std::vector<Elem> v;
  for (const char* w : words) v.push_back(parse_word(g, w));
  return generate(g, v);
}

GroupAlgebraElement sum_e(const FiniteGroup& g, const std::vector<StrongShodaPair>& ps) {
  GroupAlgebraElement s(g);
  for (const auto& p : ps) s = s + p.e;
  return s;
}

// dim QGe = |G| e(1), and the crossed product has dimension n^2 phi(k) |N/M|
bool dimension_matches(const FiniteGroup& g, const StrongShodaPair& p) {
  mpq_class lhs = p.e.coefficient(g.identity()) * static_cast<long>(g.order());
  long rhs = p.index * p.index * num::euler_phi(p.k) * static_cast<long>(p.transversal.size());
  return lhs == rhs;
}

}  // namespace

TEST_CASE("hat and epsilon") {
  auto g = parse_group("D[8]");
  const auto one = GroupAlgebraElement::one(*g);
  CHECK(hat(*g, trivial(*g)) == one);
  auto gh = hat(*g, whole(*g));
  for (Elem x = 0; x < g->order(); ++x) CHECK(gh.right_mul(x) == gh);
  auto a2 = gen(*g, {"a^2"});
  CHECK(hat(*g, a2).is_idempotent());
  auto a = gen(*g, {"a"});
  // <a> is normal, so epsilon(<a>, 1) is central; <b> is not
  CHECK(epsilon(*g, a, trivial(*g)).is_central());
  auto b = gen(*g, {"b"});
  auto eps = epsilon(*g, b, trivial(*g));
  CHECK(eps.is_idempotent());
  CHECK_FALSE(eps.is_central());
  for (Elem x : b.elements()) CHECK(eps.commutes_with(x));
  CHECK(epsilon(*g, whole(*g), whole(*g)) == gh);
  CHECK(epsilon(*g, a, a2) == hat(*g, a2) - hat(*g, a));
  CHECK_THROWS_AS(epsilon(*g, a2, a), Error);
  CHECK_THROWS_AS(epsilon(*g, gen(*g, {"b"}), a2), Error);
}

TEST_CASE("central idempotents") {
  auto q8 = parse_group("Q[8]");
  auto a = gen(*q8, {"a"});
  auto e = e_central(*q8, a, trivial(*q8));
  CHECK(e.is_central());
  CHECK(e.is_idempotent());
  CHECK((e * hat(*q8, a)).is_zero());

  auto t = parse_group("T");
  auto m = gen(*t, {"y", "t"}), l = gen(*t, {"t*y^-2"});
  auto et = e_central(*t, m, l);
  auto expect = hat(*t, l) *
                (GroupAlgebraElement::one(*t) - GroupAlgebraElement::basis(*t, parse_word(*t, "y^4")))
                    .scaled(mpq_class(1, 2));
  CHECK(et == expect);
  CHECK(is_strong_shoda_pair(*t, m, l));
  auto p = make_strong_shoda_pair(*t, m, l);
  CHECK(p.k == 8);
  auto d = crossed_product_data(*t, p);
  CHECK(d.n == 1);
  CHECK(d.order == 2);
  CHECK(check_crossed_product_data(d));
}

TEST_CASE("Q8 pairs") {
  auto q8 = parse_group("Q[8]");
  auto ps = strong_shoda_pairs(*q8);
  CHECK(ps.size() == 5);
  CHECK(sum_e(*q8, ps) == GroupAlgebraElement::one(*q8));
  int big = 0;
  for (const auto& p : ps) {
    auto d = crossed_product_data(*q8, p);
    CHECK(check_crossed_product_data(d));
    if (d.k == 4) {
      ++big;
      CHECK(d.n == 1);
      CHECK(d.order == 2);
      CHECK(d.action[1] == 3);
      CHECK(d.twisting[1][1] == 2);
    } else {
      CHECK(d.order == 1);
    }
  }
  CHECK(big == 1);
  CHECK_THROWS_AS(make_strong_shoda_pair(*q8, gen(*q8, {"a"}), gen(*q8, {"a^2"})), Error);
}

TEST_CASE("abelian groups: pairs are (G, L) with G/L cyclic") {
  for (std::string s : {"C[12]", "C[2]xC[4]", "C[3]xC[3]", "C[2]xC[2]xC[2]"}) {
    CAPTURE(s);
    auto g = parse_group(s);
    auto ps = strong_shoda_pairs(*g);
    for (const auto& p : ps) CHECK(p.m.order() == g->order());
    CHECK(sum_e(*g, ps) == GroupAlgebraElement::one(*g));
    CHECK(ps.size() == strong_shoda_pairs_exhaustive(*g).size());
  }
}

TEST_CASE("abelian basis") {
  for (std::string s : {"C[12]", "C[2]xC[4]xC[8]", "C[4]xC[4]xC[3]", "C[1]"}) {
    CAPTURE(s);
    auto g = parse_group(s);
    auto b = abelian_basis(*g, whole(*g));
    std::size_t prod = 1;
    for (Elem x : b) prod *= g->element_order(x);
    CHECK(prod == g->order());
    CHECK(generate(*g, b).order() == g->order());
  }
}

TEST_CASE("metabelian route agrees with the exhaustive oracle") {
  for (std::string s : {"D[8]", "Q[8]", "D[12]", "Q[12]", "Dplus[16]", "Dminus[16]", "D[16]",
                        "Q[16]", "W1[1]", "W2[1]", "S[1,C[4],C[2]]", "C[2]xQ[8]",
                        "S[1,C[8],C[4]]"}) {
    CAPTURE(s);
    auto g = parse_group(s);
    auto fast = strong_shoda_pairs(*g);
    auto slow = strong_shoda_pairs_exhaustive(*g);
    REQUIRE(fast.size() == slow.size());
    for (const auto& p : fast) {
      CHECK(std::any_of(slow.begin(), slow.end(), [&](const auto& q) { return q.e == p.e; }));
      CHECK(p.e.is_idempotent());
      CHECK(p.e.is_central());
      CHECK(dimension_matches(*g, p));
      CHECK(is_strong_shoda_pair(*g, p.m, p.l));
      CHECK(check_crossed_product_data(crossed_product_data(*g, p)));
    }
  }
}

TEST_CASE("T contains the pair from the construction") {
  auto t = parse_group("T");
  auto target = e_central(*t, gen(*t, {"y", "t"}), gen(*t, {"t*y^-2"}));
  auto ps = strong_shoda_pairs(*t);
  CHECK(std::any_of(ps.begin(), ps.end(), [&](const auto& p) { return p.e == target; }));
}

TEST_CASE("pair search scales to the larger families") {
  for (std::string s : {"V", "V1[2]", "V2[2]", "U1", "U2", "T1[2]"}) {
    CAPTURE(s);
    auto g = parse_group(s);
    auto t0 = std::chrono::steady_clock::now();
    auto ps = strong_shoda_pairs(*g);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    MESSAGE(s << ": " << ps.size() << " pairs in " << secs << "s");
    CHECK(sum_e(*g, ps) == GroupAlgebraElement::one(*g));
    for (const auto& p : ps) CHECK(dimension_matches(*g, p));
  }
}
