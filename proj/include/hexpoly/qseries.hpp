#pragma once

// q-series building blocks: geometric inverses, unit-series inversion,
// Gaussian binomials and q-Pochhammer products.

#include <vector>

#include "hexpoly/series.hpp"

namespace hexpoly {

// Uniform entry point for the generating-function family constructors.
struct Request {
  int bq = 0;          // max reliable q-degree
  int bt = 0;          // max reliable t-degree
  bool with_x = true;  // track the column-count variable x

  Bounds bounds() const { return {bq, bt}; }

  // x^k when x is tracked, 1 otherwise.
  Exponents xpow(int k) const {
    return with_x ? Exponents::of(Var::x, k) : Exponents{};
  }
};

// 1/(1 - m) = sum_{k>=0} m^k for a monomial m with nonnegative exponents and
// positive (q,t)-weight; the weight makes the geometric series converge
// (q,t)-adically.
inline Series geometric(const Exponents& m, Bounds b) {
  if (!m.nonnegative())
    throw series_error("geometric: monomial must be nonnegative");
  if (m.q() == 0 && m.t() == 0)
    throw series_error("geometric: divergent, monomial has zero (q,t)-weight");
  Series r = Series::zero(b);
  for (int k = 0;; ++k) {
    Exponents e = m.times(k);
    if (e.q() > b.q || e.t() > b.t) break;
    r += Series::term(1, e, b);
  }
  return r;
}

// Inverse of a series with constant term 1; every other term must have
// positive (q,t)-weight.  1/f = sum_k (1-f)^k, truncated.
inline Series invert_unit(const Series& f) {
  Bounds b = f.bounds();
  if (f.coeff(Exponents{}) != 1)
    throw series_error("invert_unit: constant term must be 1");
  Series delta = Series::one(b) - f;  // positive (q,t)-valuation
  for (const auto& [m, c] : delta.terms())
    if (m.q() == 0 && m.t() == 0)
      throw series_error("invert_unit: nonunit constant part");
  Series result = Series::one(b);
  Series power = delta;
  for (int k = 0; k <= b.q + b.t && !power.is_zero(); ++k) {
    result += power;
    power *= delta;
  }
  return result;
}

// Gaussian binomial [top choose bottom] in the variable step (a pure power of
// q), via the recurrence [n k] = [n-1 k-1] + q^k [n-1 k] on dense coefficient
// arrays, truncated to the window.
inline Series q_binomial(int top, int bottom, const Exponents& step, Bounds b) {
  if (step.q() < 1 || step.t() != 0 || step.x() != 0 || step.u() != 0 ||
      step.v() != 0 || step.s() != 0)
    throw series_error("q_binomial: step must be a pure positive power of q");
  if (bottom == 0) return Series::one(b);  // empty choice, any top
  if (bottom < 0 || bottom > top) return Series::zero(b);
  if (bottom == top) return Series::one(b);
  const size_t cap = static_cast<size_t>(b.q / step.q()) + 1;
  std::vector<std::vector<Int>> cur(bottom + 1), nxt(bottom + 1);
  cur[0] = {1};
  for (int n = 1; n <= top; ++n) {
    nxt[0] = {1};
    for (int k = 1; k <= std::min(n, bottom); ++k) {
      const auto& stay = cur[k];      // q^k * [n-1 choose k]
      const auto& climb = cur[k - 1]; // [n-1 choose k-1]
      size_t len = std::min(cap, std::max(climb.size(),
                                          stay.empty() ? 0 : stay.size() + k));
      std::vector<Int> out(len);
      for (size_t d = 0; d < len; ++d) {
        Int acc = d < climb.size() ? climb[d] : Int(0);
        if (d >= static_cast<size_t>(k) && d - k < stay.size())
          acc += stay[d - k];
        out[d] = std::move(acc);
      }
      nxt[k] = std::move(out);
    }
    std::swap(cur, nxt);
  }
  Series r = Series::zero(b);
  for (size_t d = 0; d < cur[bottom].size(); ++d)
    if (cur[bottom][d] != 0)
      r += Series::term(cur[bottom][d], step.times(static_cast<int>(d)), b);
  return r;
}

// q-Pochhammer product (c*a; step)_n = prod_{i=0}^{n-1} (1 - c * a * step^i).
// (a; q)_0 = 1.
inline Series pochhammer(const Int& c, const Exponents& a,
                         const Exponents& step, int n, Bounds b) {
  if (n < 0) throw series_error("pochhammer: negative length");
  Series r = Series::one(b);
  for (int i = 0; i < n; ++i) {
    Exponents m = a + step.times(i);
    r *= Series::one(b) - Series::term(c, m, b);
  }
  return r;
}

// 1 / (c*a; step)_n as a product of geometric inverses.
inline Series inv_pochhammer(const Exponents& a, const Exponents& step, int n,
                             Bounds b) {
  Series r = Series::one(b);
  for (int i = 0; i < n; ++i) r *= geometric(a + step.times(i), b);
  return r;
}

}  // namespace hexpoly
