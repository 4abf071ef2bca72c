#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "hexpoly/qseries.hpp"
#include "hexpoly/stacks.hpp"

using namespace hexpoly;

namespace {

// Independent oracle: coefficients of the Gaussian binomial [n choose k]_q
// by direct enumeration of partitions inside a k x (n-k) box.
std::vector<long long> partitions_in_box(int rows, int cols) {
  std::vector<long long> counts(rows * cols + 1, 0);
  std::vector<int> parts(rows, 0);
  auto rec = [&](auto&& self, int row, int limit, int area) -> void {
    if (row == rows) {
      counts[area] += 1;
      return;
    }
    for (int p = 0; p <= limit; ++p) self(self, row + 1, p, area + p);
  };
  rec(rec, 0, cols, 0);
  return counts;
}

}  // namespace

TEST_CASE("gaussian binomials") {
  Bounds b{30, 30};
  CHECK(q_binomial(2, 1, e_q(), b).dump() ==
        "1 x^0 q^0 u^0 v^0 s^0 t^0\n"
        "1 x^0 q^1 u^0 v^0 s^0 t^0\n");

  // [4 choose 2]_q against the box-partition oracle: 1,1,2,1,1
  Series g42 = q_binomial(4, 2, e_q(), b);
  auto box = partitions_in_box(2, 2);
  for (size_t d = 0; d < box.size(); ++d)
    CHECK(g42.coeff(e_q(static_cast<int>(d))) == box[d]);

  // [3 choose 1]_{q^2}
  Series g31 = q_binomial(3, 1, e_q(2), b);
  CHECK(g31.coeff(Exponents{}) == 1);
  CHECK(g31.coeff(e_q(2)) == 1);
  CHECK(g31.coeff(e_q(4)) == 1);
  CHECK(g31.size() == 3);

  CHECK(q_binomial(5, -1, e_q(), b).is_zero());
  CHECK(q_binomial(5, 7, e_q(), b).is_zero());
  CHECK(same_terms(q_binomial(5, 0, e_q(), b), Series::one(b)));
  CHECK(same_terms(q_binomial(-1, 0, e_q(), b), Series::one(b)));
  CHECK(same_terms(q_binomial(6, 6, e_q(), b), Series::one(b)));
}

TEST_CASE("gaussian binomial symmetry and q=1 specialization") {
  Bounds b{60, 60};
  for (int n = 0; n <= 8; ++n)
    for (int k = 0; k <= n; ++k) {
      Series lhs = q_binomial(n, k, e_q(), b);
      CHECK(same_terms(lhs, q_binomial(n, n - k, e_q(), b)));
      Int at_one = 0;
      for (const auto& [m, c] : lhs.terms()) at_one += c;
      // ordinary binomial coefficient
      Int binom = 1;
      for (int i = 0; i < k; ++i) binom = binom * (n - i) / (i + 1);
      CHECK(at_one == binom);
    }
}

TEST_CASE("pochhammer products") {
  Bounds b{12, 12};
  Series p1 = pochhammer(1, e_q(), e_q(), 1, b);
  CHECK(same_terms(p1, Series::one(b) - Series::term(1, e_q(), b)));

  Series p2 = pochhammer(1, e_q(), e_q(), 2, b);
  CHECK(p2.coeff(Exponents{}) == 1);
  CHECK(p2.coeff(e_q()) == -1);
  CHECK(p2.coeff(e_q(2)) == -1);
  CHECK(p2.coeff(e_q(3)) == 1);
  CHECK(p2.size() == 4);

  CHECK(same_terms(pochhammer(1, e_u() + e_q(), e_q(), 0, b), Series::one(b)));

  // negative prefix: (-qvt; q)_2 = (1+qvt)(1+q^2vt)
  Series neg = pochhammer(-1, e_q() + e_v() + e_t(1), e_q(), 2, b);
  CHECK(neg.coeff(e_q() + e_v() + e_t(1)) == 1);
  CHECK(neg.coeff(e_q(3) + e_v(2) + e_t(2)) == 1);

  // inverse pochhammer times pochhammer is 1
  Series inv = inv_pochhammer(e_q() + e_u(), e_q(), 3, b);
  CHECK(same_terms(inv * pochhammer(1, e_q() + e_u(), e_q(), 3, b),
                   Series::one(b)));
}

TEST_CASE("unit series inversion") {
  Bounds b{8, 8};
  Series f = Series::one(b) - Series::term(1, e_q(), b) +
             Series::term(3, e_q(2) + e_t(1), b);
  Series inv = invert_unit(f);
  CHECK(same_terms(f * inv, Series::one(b)));
  CHECK_THROWS_AS(invert_unit(Series::term(2, Exponents{}, b)), series_error);
}

TEST_CASE("valuation-aware shifted product") {
  // q^3 * q^(-3) recovers reliability that the pessimistic rule would lose
  Bounds b{6, 6};
  Series a = Series::term(1, e_q(3), b);
  Series c = Series::term(1, e_q(3) + e_t(2), b);
  Series r = mul_shifted(a, c, e_q(-3), b);
  CHECK(r.bounds().q == 6);
  CHECK(r.coeff(e_q(3) + e_t(2)) == 1);

  // a window the valuations cannot certify is a hard error
  Series low = Series::one(b);
  CHECK_THROWS_AS(mul_shifted(low, low, e_q(-3), b), series_error);
}
