#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hexpoly/qseries.hpp"
#include "hexpoly/stacks.hpp"

using namespace hexpoly;

namespace {

Series mono(const Int& c, int x, int q, int u, int v, int s, int t, Bounds b) {
  Exponents e;
  e.set(Var::x, x).set(Var::q, q).set(Var::u, u);
  e.set(Var::v, v).set(Var::s, s).set(Var::t, t);
  return Series::term(c, e, b);
}

Series random_series(std::mt19937& rng, Bounds b) {
  std::uniform_int_distribution<int> coef(-4, 4), deg(0, 3), small(0, 2);
  Series f = Series::zero(b);
  for (int i = 0; i < 8; ++i)
    f += mono(coef(rng), small(rng), deg(rng), small(rng), small(rng), 0,
              deg(rng), b);
  return f;
}

}  // namespace

TEST_CASE("addition") {
  Bounds b{6, 6};
  Series one_q = Series::one(b) + Series::term(1, e_q(), b);
  CHECK(same_terms(one_q + Series::term(1, e_q(), b),
                   Series::one(b) + Series::term(2, e_q(), b)));
  CHECK(same_terms(one_q + Series::zero(b), one_q));

  // bound propagation forces truncation: q^3 at window 3 plus 1 at window 2
  Series f = Series::term(1, e_q(3), {3, 3});
  Series g = Series::one({2, 3});
  Series sum = f + g;
  CHECK(sum.bounds().q == 2);
  CHECK(same_terms(sum, Series::one({2, 3})));
}

TEST_CASE("multiplication") {
  Bounds b{6, 6};
  Series one_q = Series::one(b) + Series::term(1, e_q(), b);
  Series sq = one_q * one_q;
  CHECK(sq.coeff(Exponents{}) == 1);
  CHECK(sq.coeff(e_q()) == 2);
  CHECK(sq.coeff(e_q(2)) == 1);
  CHECK(sq.size() == 3);

  // exponent addition across variables
  Series lhs = mono(1, 0, 1, 1, 0, 0, 0, b) * mono(1, 0, 2, 0, 1, 0, 1, b);
  CHECK(lhs.coeff(e_q(3) + e_u() + e_v() + e_t(1)) == 1);
  CHECK(lhs.size() == 1);

  // truncation: (1+q+q^2)(1+q) at window 2 drops q^3
  Series a = Series::one({2, 2}) + Series::term(1, e_q(), {2, 2}) +
             Series::term(1, e_q(2), {2, 2});
  Series prod = a * (Series::one({2, 2}) + Series::term(1, e_q(), {2, 2}));
  CHECK(prod.coeff(e_q(2)) == 2);
  CHECK(prod.coeff(e_q(3)) == 0);
}

TEST_CASE("geometric series") {
  CHECK(geometric(e_q(), {3, 3}).dump() ==
        "1 x^0 q^0 u^0 v^0 s^0 t^0\n"
        "1 x^0 q^1 u^0 v^0 s^0 t^0\n"
        "1 x^0 q^2 u^0 v^0 s^0 t^0\n"
        "1 x^0 q^3 u^0 v^0 s^0 t^0\n");
  Series g = geometric(e_q() + e_v() + e_t(2), {2, 8});
  CHECK(g.size() == 3);  // 1 + qvt^2 + q^2v^2t^4
  CHECK(g.coeff(e_q(2) + e_v(2) + e_t(4)) == 1);
  CHECK_THROWS_AS(geometric(Exponents{}, {3, 3}), series_error);
  CHECK_THROWS_AS(geometric(e_u(), {3, 3}), series_error);

  // 1/(1-m) * (1-m) == 1 for several monomials
  for (const Exponents& m :
       {e_q(), e_q() + e_u() + e_v() + e_t(2), e_t(1), e_q(2) + e_s()}) {
    Bounds w{7, 7};
    Series prod = geometric(m, w) * (Series::one(w) - Series::term(1, m, w));
    CHECK(same_terms(prod, Series::one(w)));
  }
}

TEST_CASE("substitution") {
  SubstRules q2{};
  q2[static_cast<int>(Var::q)] = e_q(2);
  Series f = Series::one({2, 2}) + Series::term(1, e_q(), {2, 2}) +
             Series::term(1, e_q(2), {2, 2});
  Series g = f.substitute(q2);
  CHECK(g.bounds().q == 5);  // window 2 -> 2*2+1
  CHECK(g.coeff(e_q(4)) == 1);
  CHECK(g.coeff(e_q(2)) == 1);
  CHECK(g.size() == 3);

  SubstRules rules{};
  rules[static_cast<int>(Var::v)] = e_v() + e_q();
  rules[static_cast<int>(Var::x)] = e_x() + e_t(2);
  Series h = mono(1, 1, 1, 1, 1, 0, 3, {9, 9}).substitute(rules);
  CHECK(h.coeff(e_x() + e_q(2) + e_u() + e_v() + e_t(5)) == 1);

  CHECK(same_terms(Series::term(1, e_v(), {3, 3}).at_one(Var::v),
                   Series::one({3, 3})));

  // substitute(q->q^2) then extract at q^(2k) equals the original at q^k
  std::mt19937 rng(7);
  for (int rep = 0; rep < 20; ++rep) {
    Series r = random_series(rng, {6, 6});
    Series r2 = r.substitute(q2);
    for (int k = 0; k <= 3; ++k) {
      Series direct = Series::zero(r.bounds());
      for (const auto& [m, c] : r.terms())
        if (m.q() == k) direct.accumulate(c, m.with(Var::q, 0));
      Series via = Series::zero(r2.bounds());
      for (const auto& [m, c] : r2.terms())
        if (m.q() == 2 * k) via.accumulate(c, m.with(Var::q, 0));
      CHECK(same_terms(direct, via));
    }
  }
}

TEST_CASE("coefficient extraction") {
  Bounds b{6, 6};
  Series f = mono(1, 0, 1, 1, 0, 0, 0, b) + mono(1, 0, 3, 2, 0, 0, 0, b);
  CHECK(same_terms(f.extract(Var::u, 2), Series::term(1, e_q(3), b)));

  Series d2 = distinct_partitions(2, Request{6, 6, false});
  Series u1 = d2.extract(Var::u, 1);
  CHECK(u1.coeff(e_q()) == 1);
  CHECK(u1.coeff(e_q(2)) == 1);
  CHECK(u1.size() == 2);

  CHECK(f.extract(Var::u, 9).is_zero());
}

TEST_CASE("monomial shifts and the finalize gate") {
  Bounds b{9, 9};
  Series f = Series::term(1, e_q(3) + e_t(5), b);
  CHECK(same_terms(f.mul_term(1, e_q(-3) + e_t(-5)), Series::one({6, 4})));

  Series g = Series::term(1, e_q(2) + e_t(3), b) +
             Series::term(1, e_q(3) + e_t(5), b);
  Series shifted = g.mul_term(1, e_q(-1));
  CHECK(shifted.coeff(e_q(1) + e_t(3)) == 1);
  CHECK(shifted.coeff(e_q(2) + e_t(5)) == 1);

  Series laurent = Series::term(1, e_q(-1), b);
  CHECK_THROWS_AS(laurent.finalize(), series_error);
  Series negcoef = Series::term(-1, e_q(), b);
  CHECK_THROWS_AS(negcoef.finalize(), series_error);
  CHECK_NOTHROW(negcoef.finalize(false));
}

TEST_CASE("ring laws on the truncated window") {
  std::mt19937 rng(42);
  for (int rep = 0; rep < 25; ++rep) {
    Series a = random_series(rng, {5, 5});
    Series b = random_series(rng, {5, 5});
    Series c = random_series(rng, {5, 5});
    CHECK(agree_within_bounds((a + b) + c, a + (b + c)));
    CHECK(agree_within_bounds(a * b, b * a));
    CHECK(agree_within_bounds(a * (b + c), a * b + a * c));
    CHECK(agree_within_bounds((a * b) * c, a * (b * c)));
  }
}

TEST_CASE("exponent overflow is a hard error") {
  Exponents big = e_q(30000);
  CHECK_THROWS_AS(big + e_q(30000), series_error);
  CHECK_THROWS_AS(e_q(2).times(20000), series_error);
}

TEST_CASE("debug dump is sorted and complete") {
  Bounds b{9, 9};
  Series f = mono(2, 1, 2, 0, 1, 0, 4, b) + mono(-1, 0, 1, 1, 0, 0, 2, b);
  CHECK(f.dump() ==
        "-1 x^0 q^1 u^1 v^0 s^0 t^2\n"
        "2 x^1 q^2 u^0 v^1 s^0 t^4\n");
}
